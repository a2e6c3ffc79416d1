//! Derived hypergraphs on t-subsets: the full tuple hypergraph, spanning
//! cycles with low crossing number via iterative reweighting, and the
//! block tuple hypergraph over a low-crossing cycle.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::util::{binomial, for_each_combination};

/// A hypergraph whose vertices stand for t-subsets of a base hypergraph.
#[derive(Clone, Debug)]
pub struct TupleHypergraph {
    pub base_n: usize,
    pub t: usize,
    pub hyper: Hypergraph,
    /// tuple-vertex index -> the t-subset of the base it stands for
    pub back_map: Vec<VertexSet>,
}

/// A cyclic vertex order together with per-edge crossing counts.
#[derive(Clone, Debug)]
pub struct SpanningCycle {
    pub order: Vec<usize>,
    pub crossings: Vec<usize>,
    pub max_crossing: usize,
}

impl SpanningCycle {
    /// Wraps an explicit cyclic order, computing all crossing counts.
    pub fn from_order(h: &Hypergraph, order: Vec<usize>) -> Result<Self> {
        let n = h.n();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::BadInput(
                "cycle order must be a permutation of 0..n-1".into(),
            ));
        }
        let crossings: Vec<usize> = h
            .edges()
            .iter()
            .map(|e| {
                (0..n)
                    .filter(|&i| e.contains(order[i]) != e.contains(order[(i + 1) % n]))
                    .count()
            })
            .collect();
        let max_crossing = crossings.iter().copied().max().unwrap_or(0);
        Ok(SpanningCycle {
            order,
            crossings,
            max_crossing,
        })
    }
}

/// Builds H^t: one vertex per t-subset of the base (lexicographic order),
/// one edge per base edge collecting the t-subsets it contains, edges
/// deduplicated.
pub fn build_ht(h: &Hypergraph, t: usize) -> Result<TupleHypergraph> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    let n = h.n();
    let count = binomial(n, t);
    if count > 1_000_000 {
        return Err(Error::TooLarge(format!(
            "C({n},{t}) = {count} tuple vertices exceeds the 10^6 guard"
        )));
    }
    let count = count as usize;
    let mut back_map: Vec<VertexSet> = Vec::with_capacity(count);
    let mut index: HashMap<VertexSet, usize> = HashMap::with_capacity(count);
    for_each_combination(n, t, |c| {
        let s = VertexSet::from_indices(n, c);
        index.insert(s.clone(), back_map.len());
        back_map.push(s);
        true
    });
    let mut edges: Vec<VertexSet> = Vec::with_capacity(h.num_edges());
    for e in h.edges() {
        let members = e.indices();
        let mut te = VertexSet::empty(count);
        for_each_combination(members.len(), t, |c| {
            let s = VertexSet::from_indices(n, &c.iter().map(|&i| members[i]).collect::<Vec<_>>());
            te.insert(index[&s]);
            true
        });
        edges.push(te);
    }
    let hyper = Hypergraph::new(count, edges)?.deduped();
    Ok(TupleHypergraph {
        base_n: n,
        t,
        hyper,
        back_map,
    })
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    weight: f64,
    tie: u64,
    u: usize,
    v: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert for a min-heap on
        // (weight, seeded tie hash, lexicographic pair).
        other
            .weight
            .total_cmp(&self.weight)
            .then_with(|| other.tie.cmp(&self.tie))
            .then_with(|| (other.u, other.v).cmp(&(self.u, self.v)))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn pair_tie_hash(seed: u64, u: usize, v: usize) -> u64 {
    // splitmix64 over (seed, u, v)
    let mut x = seed
        .wrapping_mul(0x9E3779B97F4A7C15)
        .wrapping_add((u as u64) << 32 | v as u64);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Builds a spanning cycle by iterative reweighting: hyperedge weights start
/// at 1; the forest repeatedly adds the cross-component vertex pair with the
/// smallest total weight of separating hyperedges, doubling the weight of
/// every hyperedge it crosses; a depth-first walk of the tree then gives the
/// cycle (at most doubling the crossing number). Deterministic given the
/// seed, which keys the tie-break hash.
pub fn build_spanning_cycle(h: &Hypergraph, seed: u64) -> Result<SpanningCycle> {
    let n = h.n();
    if n < 3 {
        return Err(Error::TooSmall(format!(
            "spanning cycle needs n >= 3, got {n}"
        )));
    }
    if !h.is_dedup() {
        return Err(Error::NeedsDedup);
    }
    let m = h.num_edges();

    // per-vertex incidence columns over edges, for fast separator lookup
    let words = m.div_ceil(64);
    let mut cols: Vec<Vec<u64>> = vec![vec![0u64; words]; n];
    for (ei, e) in h.edges().iter().enumerate() {
        for v in e.iter() {
            cols[v][ei / 64] |= 1u64 << (ei % 64);
        }
    }
    let mut weights: Vec<f64> = vec![1.0; m];

    let cross_weight = |cols: &[Vec<u64>], weights: &[f64], u: usize, v: usize| -> f64 {
        let (cu, cv) = (&cols[u], &cols[v]);
        let mut acc = 0.0;
        for w in 0..words {
            let mut x = cu[w] ^ cv[w];
            while x != 0 {
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                acc += weights[w * 64 + b];
            }
        }
        acc
    };

    // Weights only grow, so stale heap keys are lower bounds: lazy deletion
    // re-evaluates a popped pair and re-inserts it unless it still wins.
    let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            heap.push(HeapEntry {
                weight: cross_weight(&cols, &weights, u, v),
                tie: pair_tie_hash(seed, u, v),
                u,
                v,
            });
        }
    }

    let mut dsu = Dsu::new(n);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut joined = 0usize;
    while joined < n - 1 {
        let top = heap.pop().expect("heap cannot empty before the tree is spanning");
        if dsu.find(top.u) == dsu.find(top.v) {
            continue;
        }
        let fresh = cross_weight(&cols, &weights, top.u, top.v);
        if fresh > top.weight {
            let next_best = heap.peek().map(|e| e.weight).unwrap_or(f64::INFINITY);
            if fresh > next_best {
                heap.push(HeapEntry {
                    weight: fresh,
                    ..top
                });
                continue;
            }
            // re-check ordering against the runner-up under the full key
            if let Some(peek) = heap.peek() {
                let cand = HeapEntry {
                    weight: fresh,
                    ..top
                };
                if peek > &cand {
                    heap.push(cand);
                    continue;
                }
            }
        }
        // join
        dsu.union(top.u, top.v);
        adj[top.u].push(top.v);
        adj[top.v].push(top.u);
        joined += 1;
        // double every separating hyperedge
        let (cu, cv) = (&cols[top.u], &cols[top.v]);
        let mut sep = Vec::new();
        for w in 0..words {
            let mut x = cu[w] ^ cv[w];
            while x != 0 {
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                sep.push(w * 64 + b);
            }
        }
        let mut max_w = 0.0f64;
        for ei in sep {
            weights[ei] *= 2.0;
            max_w = max_w.max(weights[ei]);
        }
        if max_w > 1e150 {
            let scale = 1e-150;
            for w in weights.iter_mut() {
                *w *= scale;
            }
            let rescaled: Vec<HeapEntry> = heap
                .drain()
                .map(|e| HeapEntry {
                    weight: e.weight * scale,
                    ..e
                })
                .collect();
            heap.extend(rescaled);
        }
    }

    // first-visit depth-first order, neighbors ascending
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        for &w in adj[v].iter().rev() {
            if !seen[w] {
                stack.push(w);
            }
        }
    }
    SpanningCycle::from_order(h, order)
}

/// The block tuple hypergraph over an explicit cycle: floor(n/t) consecutive
/// disjoint blocks along the order (leftover vertices dropped); per base
/// edge, the blocks fully inside it. Edges deduplicated.
pub fn lc_from_cycle(h: &Hypergraph, cycle: &SpanningCycle, t: usize) -> Result<TupleHypergraph> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    let n = h.n();
    if n < t {
        return Err(Error::TooSmall(format!("n={n} smaller than t={t}")));
    }
    let blocks = n / t;
    let mut back_map = Vec::with_capacity(blocks);
    for k in 0..blocks {
        back_map.push(VertexSet::from_indices(
            n,
            &cycle.order[k * t..(k + 1) * t],
        ));
    }
    let edges: Vec<VertexSet> = h
        .edges()
        .iter()
        .map(|e| {
            let mut te = VertexSet::empty(blocks);
            for (k, b) in back_map.iter().enumerate() {
                if b.is_subset_of(e) {
                    te.insert(k);
                }
            }
            te
        })
        .collect();
    let hyper = Hypergraph::new(blocks, edges)?.deduped();
    Ok(TupleHypergraph {
        base_n: n,
        t,
        hyper,
        back_map,
    })
}

/// Builds H^t_lc over a freshly built low-crossing spanning cycle.
pub fn build_ht_lc(h: &Hypergraph, t: usize, seed: u64) -> Result<(TupleHypergraph, SpanningCycle)> {
    let n = h.n();
    if n < t {
        return Err(Error::TooSmall(format!("n={n} smaller than t={t}")));
    }
    let cycle = build_spanning_cycle(h, seed)?;
    let th = lc_from_cycle(h, &cycle, t)?;
    Ok((th, cycle))
}
