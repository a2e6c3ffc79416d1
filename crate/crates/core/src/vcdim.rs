//! Exact VC-dimension, the t-VC-dimension, and a dual-shatter exponent
//! diagnostic, all by guarded exhaustive search.
//!
//! Subsets are searched level by level: a set can only be (t-)shattered if
//! all of its one-smaller subsets are, which keeps the enumeration practical
//! well past brute force.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Summary of the dimension diagnostics the CLI reports.
#[derive(Clone, Debug, PartialEq)]
pub struct DimensionReport {
    pub vc: usize,
    /// Assouad bound on the dual VC-dimension: 2^(vc+1).
    pub dual_vc_bound: u64,
    pub t_vc: BTreeMap<usize, usize>,
    /// Fit of the dual shatter function as C * m^d_star over a sampled range.
    pub dual_shatter_fit: Option<(f64, f64)>,
}

const VC_EXACT_GUARD: usize = 25;
const T_SHATTER_GUARD: usize = 20;
const T_VC_GUARD: usize = 16;

/// Exact VC-dimension; guarded at n <= 25.
pub fn vc_dimension(h: &Hypergraph) -> Result<usize> {
    if h.n() > VC_EXACT_GUARD {
        return Err(Error::TooLarge(format!(
            "exact VC-dimension on {} vertices exceeds the {VC_EXACT_GUARD}-vertex guard",
            h.n()
        )));
    }
    vc_dimension_with_cap(h, VC_EXACT_GUARD)
}

/// Exact VC-dimension with an explicit vertex-count guard. The level-pruned
/// search only ever extends shattered sets, so hypergraphs with many
/// vertices but few distinct traces stay tractable; callers that know this
/// (derived tuple hypergraphs, test suites) pick their own cap.
pub fn vc_dimension_with_cap(h: &Hypergraph, cap: usize) -> Result<usize> {
    if h.n() > cap {
        return Err(Error::TooLarge(format!(
            "exact VC-dimension on {} vertices exceeds the {cap}-vertex cap",
            h.n()
        )));
    }
    if h.num_edges() == 0 {
        return Ok(0);
    }
    let n = h.n();
    // level k: all shattered k-subsets
    let mut level: Vec<VertexSet> = vec![VertexSet::empty(n)];
    let mut best = 0usize;
    let mut k = 0usize;
    loop {
        let mut next: Vec<VertexSet> = Vec::new();
        let member: HashSet<&VertexSet> = level.iter().collect();
        // a (k+1)-set is shattered only if it needs at most |E| traces
        if (h.num_edges() as u128) < (1u128 << (k + 1)) {
            return Ok(best);
        }
        for s in &level {
            let start = s.iter().last().map_or(0, |m| m + 1);
            for v in start..n {
                let mut cand = s.clone();
                cand.insert(v);
                let all_subsets_ok = cand.iter().all(|drop| {
                    let mut sub = cand.clone();
                    sub.remove(drop);
                    sub == *s || member.contains(&sub)
                });
                if !all_subsets_ok {
                    continue;
                }
                if h.is_shattered(&cand)? {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            return Ok(best);
        }
        k += 1;
        best = k;
        level = next;
    }
}

/// Whether VC(h) <= k, checked directly by enumerating (k+1)-subsets.
/// Cheap for small k regardless of the vertex count.
pub fn is_vc_at_most(h: &Hypergraph, k: usize) -> bool {
    if h.num_edges() == 0 {
        return true;
    }
    if (h.num_edges() as u128) < (1u128 << (k + 1)) {
        return true;
    }
    let n = h.n();
    let mut found = false;
    crate::util::for_each_combination(n, k + 1, |c| {
        let a = VertexSet::from_indices(n, c);
        if h.is_shattered(&a).unwrap_or(false) {
            found = true;
            return false;
        }
        true
    });
    !found
}

/// Whether `t_set` is t-shattered: every subset of it becomes realized after
/// deleting fewer than `t` elements from some trace member. Guarded at
/// |t_set| <= 20.
pub fn is_t_shattered(h: &Hypergraph, t_set: &VertexSet, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    let k = t_set.card();
    if k > T_SHATTER_GUARD {
        return Err(Error::TooLarge(format!(
            "t-shatter check on a {k}-element set exceeds the {T_SHATTER_GUARD}-element guard"
        )));
    }
    if h.num_edges() == 0 {
        return Ok(false);
    }
    let positions = t_set.indices();
    // realize trace members as bitmasks over t_set positions
    let mut realized: HashSet<u32> = HashSet::new();
    for e in h.edges() {
        let mut m: u32 = 0;
        for (bit, &v) in positions.iter().enumerate() {
            if e.contains(v) {
                m |= 1 << bit;
            }
        }
        realized.insert(m);
    }
    // T' is t-realized iff some realized R contains T' with |R \ T'| < t;
    // mark every R minus a subset of fewer than t of its elements.
    let total = 1usize << k;
    let mut ok = vec![false; total];
    for &r in &realized {
        mark_with_deletions(r, t - 1, &mut ok);
    }
    Ok(ok.into_iter().all(|b| b))
}

fn mark_with_deletions(r: u32, budget: usize, ok: &mut [bool]) {
    if !ok[r as usize] {
        ok[r as usize] = true;
    }
    if budget == 0 {
        return;
    }
    let mut bits = r;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits ^= b;
        mark_with_deletions(r ^ b, budget - 1, ok);
    }
}

/// Exact t-VC-dimension; guarded at n <= 16.
pub fn t_vc_dimension(h: &Hypergraph, t: usize) -> Result<usize> {
    if h.n() > T_VC_GUARD {
        return Err(Error::TooLarge(format!(
            "t-VC-dimension on {} vertices exceeds the {T_VC_GUARD}-vertex guard",
            h.n()
        )));
    }
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    if h.num_edges() == 0 {
        return Ok(0);
    }
    let n = h.n();
    // t-shattering is hereditary, so the same level-pruned search applies
    let mut level: Vec<VertexSet> = vec![VertexSet::empty(n)];
    let mut best = 0usize;
    loop {
        let member: HashSet<&VertexSet> = level.iter().collect();
        let mut next: Vec<VertexSet> = Vec::new();
        for s in &level {
            let start = s.iter().last().map_or(0, |m| m + 1);
            for v in start..n {
                let mut cand = s.clone();
                cand.insert(v);
                let all_subsets_ok = cand.iter().all(|drop| {
                    let mut sub = cand.clone();
                    sub.remove(drop);
                    sub == *s || member.contains(&sub)
                });
                if !all_subsets_ok {
                    continue;
                }
                if is_t_shattered(h, &cand, t)? {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            return Ok(best);
        }
        best += 1;
        level = next;
    }
}

/// Least-squares fit of log pi*_H(m) against log m over m = 2..=m_max,
/// reported as (C, d_star) with C the minimal constant making
/// pi*(m) <= C * m^d_star hold on the sampled range.
pub fn dual_shatter_fit(h: &Hypergraph, m_max: usize) -> Result<(f64, f64)> {
    if m_max < 2 {
        return Err(Error::Domain("dual_shatter_fit needs m_max >= 2".into()));
    }
    let dual = h.dual()?;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut values = Vec::new();
    for m in 2..=m_max {
        let v = dual.shatter_function(m)?;
        if v == 0 {
            return Ok((0.0, 0.0));
        }
        xs.push((m as f64).ln());
        ys.push((v as f64).ln());
        values.push((m, v));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let d_star = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let c = values
        .iter()
        .map(|&(m, v)| v as f64 / (m as f64).powf(d_star))
        .fold(f64::MIN, f64::max);
    Ok((c, d_star))
}
