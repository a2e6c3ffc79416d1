use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::util::for_each_combination;

pub const DEFAULT_MAX_VERTICES: usize = 1024;

/// Vertex-count cap for mask widths. Overridable through the
/// `TNET_MAX_VERTICES` environment variable (read once per process).
pub fn max_vertices() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("TNET_MAX_VERTICES")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_MAX_VERTICES)
    })
}

/// A finite hypergraph on vertices `0..n-1`.
///
/// Edges are membership masks; duplicates are permitted on input and the
/// `dedup` flag records whether the stored edges are pairwise distinct.
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    dedup: bool,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > max_vertices() {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the mask-width cap {} (set TNET_MAX_VERTICES to raise)",
                max_vertices()
            )));
        }
        let mut seen: HashSet<&VertexSet> = HashSet::with_capacity(edges.len());
        let mut dedup = true;
        for e in &edges {
            if !seen.insert(e) {
                dedup = false;
            }
        }
        drop(seen);
        Ok(Hypergraph {
            n,
            edges,
            labels: None,
            dedup,
        })
    }

    pub fn from_index_edges(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|e| VertexSet::from_indices(n, e))
            .collect();
        Self::new(n, edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_dedup(&self) -> bool {
        self.dedup
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Copy with duplicate edges removed (first occurrence kept).
    pub fn deduped(&self) -> Hypergraph {
        if self.dedup {
            return self.clone();
        }
        let mut seen = HashSet::new();
        let edges: Vec<VertexSet> = self
            .edges
            .iter()
            .filter(|e| seen.insert((*e).clone()))
            .cloned()
            .collect();
        Hypergraph {
            n: self.n,
            edges,
            labels: self.labels.clone(),
            dedup: true,
        }
    }

    /// Edge indices of cardinality at least `eps * n`.
    pub fn heavy_edges(&self, eps: f64) -> Vec<usize> {
        let threshold = eps * self.n as f64;
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.card() as f64 >= threshold)
            .map(|(i, _)| i)
            .collect()
    }

    /// The trace of the hypergraph on `a`: all distinct intersections of
    /// hyperedges with `a`, in a deterministic order.
    pub fn trace(&self, a: &VertexSet) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self.edges.iter().map(|e| e.intersect(a)).collect();
        set.into_iter().collect()
    }

    /// Whether every subset of `a` is realized as an intersection with some
    /// hyperedge. Guarded at |a| <= 25.
    pub fn is_shattered(&self, a: &VertexSet) -> Result<bool> {
        let k = a.card();
        if k > 25 {
            return Err(Error::TooLarge(format!(
                "shatter check on a {k}-element set exceeds the 25-element guard"
            )));
        }
        if self.edges.is_empty() {
            return Ok(false);
        }
        let need: u64 = 1u64 << k;
        if (self.edges.len() as u64) < need {
            return Ok(false);
        }
        // Compress intersections to bitmasks over a's positions.
        let positions = a.indices();
        let mut seen = vec![false; need as usize];
        let mut count = 0u64;
        for e in &self.edges {
            let mut m: usize = 0;
            for (bit, &v) in positions.iter().enumerate() {
                if e.contains(v) {
                    m |= 1 << bit;
                }
            }
            if !seen[m] {
                seen[m] = true;
                count += 1;
                if count == need {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Dual hypergraph: one vertex per edge of `self`; for each original
    /// vertex `v`, the dual edge `{ i : v in e_i }`, deduplicated.
    pub fn dual(&self) -> Result<Hypergraph> {
        if !self.dedup {
            return Err(Error::NeedsDedup);
        }
        let m = self.edges.len();
        let mut dual_edges: Vec<VertexSet> = Vec::with_capacity(self.n);
        let mut seen = HashSet::new();
        for v in 0..self.n {
            let mut star = VertexSet::empty(m);
            for (i, e) in self.edges.iter().enumerate() {
                if e.contains(v) {
                    star.insert(i);
                }
            }
            if seen.insert(star.clone()) {
                dual_edges.push(star);
            }
        }
        Hypergraph::new(m, dual_edges)
    }

    /// Maximum trace cardinality over subsets of size at most `m`,
    /// by exhaustive enumeration. Guarded: n <= 25 or m <= 3.
    pub fn shatter_function(&self, m: usize) -> Result<usize> {
        if self.n > 25 && m > 3 {
            return Err(Error::TooLarge(format!(
                "shatter function at m={m} on {} vertices exceeds the enumeration guard",
                self.n
            )));
        }
        Ok(self.shatter_function_unguarded(m))
    }

    /// Same as `shatter_function` without the size guard; used where a test
    /// or diagnostic deliberately enumerates a larger (but still tractable)
    /// space.
    pub fn shatter_function_unguarded(&self, m: usize) -> usize {
        if self.edges.is_empty() {
            return 0;
        }
        // |trace(A')| <= |trace(A)| for A' within A, so only maximal sizes matter.
        let k = m.min(self.n);
        let mut best = 0usize;
        for_each_combination(self.n, k, |c| {
            let a = VertexSet::from_indices(self.n, c);
            let t = self.trace(&a).len();
            if t > best {
                best = t;
            }
            true
        });
        best
    }

    /// Subhypergraph induced on `keep`: vertices reindexed to `0..|keep|-1`
    /// preserving order, edges intersected and deduplicated. Also returns
    /// the map from new indices back to the original ones.
    pub fn induced(&self, keep: &VertexSet) -> (Hypergraph, Vec<usize>) {
        let map = keep.indices();
        let n2 = map.len();
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            let mut ne = VertexSet::empty(n2);
            for (new_i, &old_i) in map.iter().enumerate() {
                if e.contains(old_i) {
                    ne.insert(new_i);
                }
            }
            if seen.insert(ne.clone()) {
                edges.push(ne);
            }
        }
        let h = Hypergraph {
            n: n2,
            edges,
            labels: None,
            dedup: true,
        };
        (h, map)
    }
}

/// Parses the line-oriented `.hg` text format. Returns the hypergraph and,
/// when present, a `cycle` line's vertex order.
pub fn parse_hg(text: &str) -> Result<(Hypergraph, Option<Vec<usize>>)> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut cycle: Option<Vec<usize>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        match tag {
            "n" => {
                let v = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: missing count", lineno + 1)))?;
                if n.is_some() {
                    return Err(Error::Parse(format!("line {}: duplicate n line", lineno + 1)));
                }
                n = Some(v.parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex count '{v}'", lineno + 1))
                })?);
            }
            "e" => {
                let nn = n.ok_or_else(|| {
                    Error::Parse(format!("line {}: edge before n line", lineno + 1))
                })?;
                let mut idx = Vec::new();
                for tok in parts {
                    let v: usize = tok.parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad index '{tok}'", lineno + 1))
                    })?;
                    if v >= nn {
                        return Err(Error::Parse(format!(
                            "line {}: index {v} out of range (n={nn})",
                            lineno + 1
                        )));
                    }
                    if let Some(&last) = idx.last() {
                        if v <= last {
                            return Err(Error::Parse(format!(
                                "line {}: indices must be strictly increasing",
                                lineno + 1
                            )));
                        }
                    }
                    idx.push(v);
                }
                edges.push(idx);
            }
            "cycle" => {
                let mut idx = Vec::new();
                for tok in parts {
                    idx.push(tok.parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad index '{tok}'", lineno + 1))
                    })?);
                }
                cycle = Some(idx);
            }
            other => {
                return Err(Error::Parse(format!(
                    "line {}: unknown line tag '{other}'",
                    lineno + 1
                )));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing n line".into()))?;
    let h = Hypergraph::from_index_edges(n, &edges)?;
    Ok((h, cycle))
}

/// Serializes to the `.hg` format; byte-stable round trip for sorted input.
pub fn write_hg(h: &Hypergraph, cycle: Option<&[usize]>) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\n", h.n()));
    for e in h.edges() {
        out.push('e');
        for i in e.iter() {
            out.push_str(&format!(" {i}"));
        }
        out.push('\n');
    }
    if let Some(c) = cycle {
        out.push_str("cycle");
        for i in c {
            out.push_str(&format!(" {i}"));
        }
        out.push('\n');
    }
    out
}

/// The running example: vertices {a,b,c} with hyperedges {a}, {b,c}, {a,c}
/// and {a,b,c}. VC-dimension 1 but 2-VC-dimension 3.
pub fn three_vertex_example() -> Hypergraph {
    Hypergraph::from_index_edges(3, &[vec![0], vec![1, 2], vec![0, 2], vec![0, 1, 2]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, idx: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, idx)
    }

    #[test]
    fn trace_of_running_example() {
        let h = three_vertex_example();
        let tr = h.trace(&vs(3, &[0, 1]));
        let expect: Vec<VertexSet> = vec![vs(3, &[0]), vs(3, &[1]), vs(3, &[0, 1])];
        assert_eq!(tr.len(), 3);
        for e in expect {
            assert!(tr.contains(&e));
        }
    }

    #[test]
    fn trace_of_empty_set() {
        let h = three_vertex_example();
        assert_eq!(h.trace(&vs(3, &[])), vec![vs(3, &[])]);
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert!(empty.trace(&vs(3, &[])).is_empty());
    }

    #[test]
    fn trace_of_complete_hypergraph_is_power_set() {
        let mut edges = Vec::new();
        for m in 0u32..8 {
            let idx: Vec<usize> = (0..3).filter(|&i| (m >> i) & 1 == 1).collect();
            edges.push(idx);
        }
        let h = Hypergraph::from_index_edges(3, &edges).unwrap();
        assert_eq!(h.trace(&vs(3, &[0, 1, 2])).len(), 8);
    }

    #[test]
    fn shattering_examples() {
        let h = three_vertex_example();
        // every edge meets {a,b}, so ∅ is missing from the trace
        assert!(!h.is_shattered(&vs(3, &[0, 1])).unwrap());
        assert!(h.is_shattered(&vs(3, &[])).unwrap());
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert!(!empty.is_shattered(&vs(3, &[])).unwrap());
        let mut edges = Vec::new();
        for m in 0u32..16 {
            let idx: Vec<usize> = (0..4).filter(|&i| (m >> i) & 1 == 1).collect();
            edges.push(idx);
        }
        let complete = Hypergraph::from_index_edges(4, &edges).unwrap();
        assert!(complete.is_shattered(&vs(4, &[0, 1, 2, 3])).unwrap());
    }

    #[test]
    fn shatter_guard() {
        let h = Hypergraph::new(64, vec![VertexSet::full(64)]).unwrap();
        let a = VertexSet::from_indices(64, &(0..26).collect::<Vec<_>>());
        assert!(matches!(h.is_shattered(&a), Err(Error::TooLarge(_))));
    }

    #[test]
    fn dual_examples() {
        // one edge {0,1} on 2 vertices -> dual has 1 vertex, one edge {0}
        let h = Hypergraph::from_index_edges(2, &[vec![0, 1]]).unwrap();
        let d = h.dual().unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.edges(), &[vs(1, &[0])]);

        // edges {0},{1} -> self-dual
        let h = Hypergraph::from_index_edges(2, &[vec![0], vec![1]]).unwrap();
        let d = h.dual().unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.edges().len(), 2);
        assert!(d.edges().contains(&vs(2, &[0])));
        assert!(d.edges().contains(&vs(2, &[1])));

        // running example: a* = {e1,e3,e4}
        let h = three_vertex_example();
        let d = h.dual().unwrap();
        assert_eq!(d.n(), 4);
        assert!(d.edges().contains(&vs(4, &[0, 2, 3])));
        assert!(d.edges().contains(&vs(4, &[1, 3])));
        assert!(d.edges().contains(&vs(4, &[1, 2, 3])));
        assert_eq!(d.num_edges(), 3);
    }

    #[test]
    fn dual_requires_dedup() {
        let h = Hypergraph::from_index_edges(2, &[vec![0], vec![0]]).unwrap();
        assert!(!h.is_dedup());
        assert_eq!(h.dual(), Err(Error::NeedsDedup));
        assert!(h.deduped().dual().is_ok());
    }

    #[test]
    fn shatter_function_examples() {
        let mut edges = Vec::new();
        for m in 0u32..16 {
            let idx: Vec<usize> = (0..4).filter(|&i| (m >> i) & 1 == 1).collect();
            edges.push(idx);
        }
        let complete = Hypergraph::from_index_edges(4, &edges).unwrap();
        assert_eq!(complete.shatter_function(2).unwrap(), 4);
        let h = three_vertex_example();
        assert_eq!(h.shatter_function(1).unwrap(), 2);
        let empty = Hypergraph::new(6, vec![]).unwrap();
        assert_eq!(empty.shatter_function(3).unwrap(), 0);
    }

    #[test]
    fn shatter_function_monotone() {
        let h = three_vertex_example();
        let mut prev = 0;
        for m in 0..=3 {
            let v = h.shatter_function(m).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn induced_examples() {
        let h = three_vertex_example();
        let (full, map) = h.induced(&vs(3, &[0, 1, 2]));
        assert_eq!(full.n(), 3);
        assert_eq!(full.num_edges(), 4);
        assert_eq!(map, vec![0, 1, 2]);

        let (empty, map) = h.induced(&vs(3, &[]));
        assert_eq!(empty.n(), 0);
        assert_eq!(map, Vec::<usize>::new());

        // keep {b,c}: edges {}, {b,c}, {c} after dedup
        let (sub, map) = h.induced(&vs(3, &[1, 2]));
        assert_eq!(map, vec![1, 2]);
        assert_eq!(sub.num_edges(), 3);
        assert!(sub.edges().contains(&vs(2, &[])));
        assert!(sub.edges().contains(&vs(2, &[0, 1])));
        assert!(sub.edges().contains(&vs(2, &[1])));
    }

    #[test]
    fn hg_round_trip() {
        let h = three_vertex_example();
        let text = write_hg(&h, None);
        let (h2, cycle) = parse_hg(&text).unwrap();
        assert_eq!(h, h2);
        assert!(cycle.is_none());
        assert_eq!(write_hg(&h2, None), text);

        let text2 = write_hg(&h, Some(&[2, 0, 1]));
        let (_, cycle) = parse_hg(&text2).unwrap();
        assert_eq!(cycle, Some(vec![2, 0, 1]));
    }

    #[test]
    fn hg_parse_errors() {
        assert!(matches!(parse_hg("e 0 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_hg("n 2\ne 1 0"), Err(Error::Parse(_))));
        assert!(matches!(parse_hg("n 2\ne 0 5"), Err(Error::Parse(_))));
        assert!(matches!(parse_hg("n x"), Err(Error::Parse(_))));
        // comments and empty edges are fine
        let (h, _) = parse_hg("# header\nn 3\ne\ne 0 2\n").unwrap();
        assert_eq!(h.num_edges(), 2);
        assert_eq!(h.edges()[0].card(), 0);
    }
}
