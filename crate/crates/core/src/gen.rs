//! Instance generators: abstract hypergraph families and the random
//! hypergraph mixtures the test suites draw from.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// All nonempty intervals [i..=j] of the vertex line 0..n-1.
pub fn interval_hypergraph(n: usize) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            edges.push(VertexSet::from_indices(n, &(i..=j).collect::<Vec<_>>()));
        }
    }
    Hypergraph::new(n, edges)
}

/// A nested chain e_1 < e_2 < ... < e_k of random edges; VC-dimension is
/// exactly 1 as soon as two distinct nonempty levels exist.
pub fn chain_hypergraph(rng: &mut impl Rng, n: usize, levels: usize) -> Result<Hypergraph> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cuts: Vec<usize> = Vec::new();
    let levels = levels.clamp(2, n);
    while cuts.len() < levels {
        let c = rng.gen_range(1..=n);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    let edges: Vec<VertexSet> = cuts
        .into_iter()
        .map(|c| VertexSet::from_indices(n, &order[..c]))
        .collect();
    Hypergraph::new(n, edges)
}

/// n/block pairwise disjoint consecutive blocks as edges.
pub fn disjoint_blocks(n: usize, block: usize) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    let mut i = 0;
    while i + block <= n {
        edges.push(VertexSet::from_indices(
            n,
            &(i..i + block).collect::<Vec<_>>(),
        ));
        i += block;
    }
    Hypergraph::new(n, edges)
}

/// `copies` disjoint translates of the 3-vertex running example
/// (hyperedges {a}, {b,c}, {a,c}, {a,b,c} per copy).
pub fn scaled_three_vertex(copies: usize) -> Result<Hypergraph> {
    let n = 3 * copies;
    let mut edges = Vec::new();
    for c in 0..copies {
        let b = 3 * c;
        edges.push(vec![b]);
        edges.push(vec![b + 1, b + 2]);
        edges.push(vec![b, b + 2]);
        edges.push(vec![b, b + 1, b + 2]);
    }
    Hypergraph::from_index_edges(n, &edges)
}

/// Like `scaled_three_vertex`, but each copy spans 6 vertices with the full
/// edge padded to {a,b,c,p,q,r}; heavy edges then exceed the 2-VC-dimension.
pub fn scaled_three_vertex_padded(copies: usize) -> Result<Hypergraph> {
    let n = 6 * copies;
    let mut edges = Vec::new();
    for c in 0..copies {
        let b = 6 * c;
        edges.push(vec![b]);
        edges.push(vec![b + 1, b + 2]);
        edges.push(vec![b, b + 2]);
        edges.push(vec![b, b + 1, b + 2, b + 3, b + 4, b + 5]);
    }
    Hypergraph::from_index_edges(n, &edges)
}

/// Random hypergraph with deduplicated edges: sizes drawn uniformly, members
/// uniformly without replacement.
pub fn random_hypergraph(
    rng: &mut impl Rng,
    n_range: RangeInclusive<usize>,
    m_range: RangeInclusive<usize>,
) -> Hypergraph {
    let n = rng.gen_range(n_range);
    let m = rng.gen_range(m_range);
    random_hypergraph_exact(rng, n, m)
}

/// Random subfamily of intervals of the vertex line (VC-dimension <= 2).
pub fn random_interval_hypergraph(rng: &mut impl Rng, n: usize, m: usize) -> Hypergraph {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 20 * m + 100 {
        attempts += 1;
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(i..n);
        if seen.insert((i, j)) {
            edges.push(VertexSet::from_indices(n, &(i..=j).collect::<Vec<_>>()));
        }
    }
    Hypergraph::new(n, edges).expect("n within cap")
}

/// Random unions of at most two intervals (VC-dimension stays small).
pub fn random_double_interval_hypergraph(rng: &mut impl Rng, n: usize, m: usize) -> Hypergraph {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut edges = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 20 * m + 100 {
        attempts += 1;
        let mut e = VertexSet::empty(n);
        for _ in 0..rng.gen_range(1..=2) {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(i..n);
            for v in i..=j {
                e.insert(v);
            }
        }
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges).expect("n within cap")
}

/// Random hypergraph with n vertices and up to m distinct edges.
pub fn random_hypergraph_exact(rng: &mut impl Rng, n: usize, m: usize) -> Hypergraph {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut edges = Vec::new();
    let mut attempts = 0usize;
    while edges.len() < m && attempts < 20 * m + 100 {
        attempts += 1;
        let size = rng.gen_range(0..=n);
        let mut pool: Vec<usize> = (0..n).collect();
        pool.shuffle(rng);
        pool.truncate(size);
        let e = VertexSet::from_indices(n, &pool);
        if seen.insert(e.clone()) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, edges).expect("n within cap")
}

/// Random hypergraph biased toward a spread of edge sizes, with a guaranteed
/// heavy edge of size exactly ceil(eps*n) when requested. Used by suites
/// that need heavy edges present at a known minimum size.
pub fn random_hypergraph_with_heavy(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    min_heavy_size: usize,
) -> Hypergraph {
    let base = random_hypergraph_exact(rng, n, m.saturating_sub(1));
    let mut edges: Vec<VertexSet> = base.edges().to_vec();
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(rng);
    pool.truncate(min_heavy_size.min(n));
    let heavy = VertexSet::from_indices(n, &pool);
    if !edges.contains(&heavy) {
        edges.push(heavy);
    }
    Hypergraph::new(n, edges).expect("n within cap")
}
