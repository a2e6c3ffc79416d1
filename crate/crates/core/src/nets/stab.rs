//! Deterministic stabbing constructions.
//!
//! Both the epsilon-net construction (t = 1) and the direct epsilon-t-net
//! construction share one engine: as long as some heavy edge S (truncated to
//! its lexicographically first ceil(eps*n) vertices) contains no member yet,
//! scan the (d+1)-subsets X of S, find the partition X = A u (X \ A) with
//! |A| in {t..d} whose A t-stabs the most complements, and add every
//! t-subset of A. A t-stabs B when every hyperedge containing B meets A in
//! at least t vertices; equivalently, B is not t-realized within A u B, so
//! the counts come straight from the trace of each X.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::nets::TSubsetFamily;
use crate::set::VertexSet;
use crate::util::for_each_combination;

/// Result of a stabbing construction run.
#[derive(Clone, Debug)]
pub struct StabNet {
    pub family: TSubsetFamily,
    pub iterations: usize,
    /// Set when the run discovered a (d+1)-subset X that every hyperedge
    /// meets in at least t vertices; the family is then the t-subsets of X,
    /// which cover every edge outright. Callers decide whether to accept it.
    pub transversal: bool,
}

/// Explicit epsilon-net construction (t = 1) for a hypergraph of
/// VC-dimension at most d.
pub fn det_eps_net(h: &Hypergraph, eps: f64, d: usize) -> Result<StabNet> {
    if d < 1 {
        return Err(Error::BadDimension("det_eps_net needs d >= 1".into()));
    }
    stab_net(h, eps, 1, d)
}

/// Direct epsilon-t-net construction for a hypergraph of t-VC-dimension at
/// most d, t >= 2.
pub fn direct_eps_t_net(h: &Hypergraph, eps: f64, t: usize, d: usize) -> Result<StabNet> {
    if t < 2 {
        return Err(Error::BadDimension(format!(
            "direct construction needs t >= 2, got {t}"
        )));
    }
    if d < t {
        return Err(Error::BadDimension(format!(
            "direct construction needs d >= t, got d={d} t={t}"
        )));
    }
    stab_net(h, eps, t, d)
}

fn stab_net(h: &Hypergraph, eps: f64, t: usize, d: usize) -> Result<StabNet> {
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Domain(format!("eps must be in (0,1], got {eps}")));
    }
    if !h.is_dedup() {
        return Err(Error::NeedsDedup);
    }
    let n = h.n();
    if (t as f64) > eps * n as f64 {
        return Err(Error::Domain(format!(
            "t = {t} exceeds eps*n = {}",
            eps * n as f64
        )));
    }
    let provenance = format!("stab(eps={eps},t={t},d={d})");
    let heavy = h.heavy_edges(eps);
    if heavy.is_empty() {
        return Ok(StabNet {
            family: TSubsetFamily::new(t, vec![], provenance)?,
            iterations: 0,
            transversal: false,
        });
    }
    let s_target = (eps * n as f64).ceil() as usize;
    if s_target < d + 1 {
        return Err(Error::BadDimension(format!(
            "heavy edges truncate to {s_target} vertices < d+1 = {}",
            d + 1
        )));
    }
    // the candidate scan enumerates C(s_target, d+1) subsets per iteration;
    // past these limits it is hopeless regardless of the key widths below
    if s_target > 64 || d + 1 > 25 {
        return Err(Error::TooLarge(format!(
            "truncated edge size {s_target} (cap 64) or d+1 = {} (cap 25) \
             exceeds the stabbing-scan guard",
            d + 1
        )));
    }
    // truncate each heavy edge to its lowest-index s_target vertices
    let targets: Vec<Vec<usize>> = heavy
        .iter()
        .map(|&i| {
            let mut idx = h.edges()[i].indices();
            idx.truncate(s_target);
            idx
        })
        .collect();
    let target_masks: Vec<VertexSet> = targets
        .iter()
        .map(|idx| VertexSet::from_indices(n, idx))
        .collect();

    let mut members: Vec<VertexSet> = Vec::new();
    let mut iterations = 0usize;
    loop {
        let uncovered = target_masks
            .iter()
            .position(|tm| !members.iter().any(|s| s.is_subset_of(tm)));
        let Some(target_idx) = uncovered else { break };
        iterations += 1;
        let s_idx = &targets[target_idx];

        // count, per candidate A (mask over S positions), how many
        // complements it t-stabs
        let mut counts: HashMap<u64, u32> = HashMap::new();
        let full: u32 = (1u32 << (d + 1)) - 1;
        for_each_combination(s_idx.len(), d + 1, |x_pos| {
            let realized = realized_patterns(h, s_idx, x_pos);
            for a_sub in 1..full {
                let i = a_sub.count_ones() as usize;
                if i < t || i > d {
                    continue;
                }
                let b_sub = full ^ a_sub;
                let stabbed = !realized.iter().any(|&r| {
                    (r & b_sub) == b_sub && (r & a_sub).count_ones() < t as u32
                });
                if stabbed {
                    let mut key: u64 = 0;
                    for (bit, &p) in x_pos.iter().enumerate() {
                        if (a_sub >> bit) & 1 == 1 {
                            key |= 1u64 << p;
                        }
                    }
                    *counts.entry(key).or_insert(0) += 1;
                }
            }
            true
        });

        if counts.is_empty() {
            // either some X is met >= t times by every hyperedge (then its
            // t-subsets form a transversal) or the supplied d is too small
            let mut transversal: Option<Vec<usize>> = None;
            for_each_combination(s_idx.len(), d + 1, |x_pos| {
                let realized = realized_patterns(h, s_idx, x_pos);
                if realized.iter().all(|&r| r.count_ones() >= t as u32) {
                    transversal = Some(x_pos.iter().map(|&p| s_idx[p]).collect());
                    return false;
                }
                true
            });
            if let Some(x_glob) = transversal {
                let mut fam_members = Vec::new();
                for_each_combination(x_glob.len(), t, |c| {
                    fam_members.push(VertexSet::from_indices(
                        n,
                        &c.iter().map(|&i| x_glob[i]).collect::<Vec<_>>(),
                    ));
                    true
                });
                return Ok(StabNet {
                    family: TSubsetFamily::new(
                        t,
                        fam_members,
                        format!("{provenance}+transversal"),
                    )?,
                    iterations,
                    transversal: true,
                });
            }
            return Err(Error::NoProgress { d });
        }

        // max count, then smaller |A|, then lexicographically first A
        let mut best: Option<(u32, usize, u64)> = None;
        for (&key, &count) in &counts {
            let i = key.count_ones() as usize;
            let better = match best {
                None => true,
                Some((bc, bi, bk)) => {
                    (count > bc)
                        || (count == bc && i < bi)
                        || (count == bc && i == bi && lex_less_equal_card(key, bk))
                }
            };
            if better {
                best = Some((count, i, key));
            }
        }
        let (_, _, a_key) = best.unwrap();
        let a_glob: Vec<usize> = (0..s_idx.len())
            .filter(|&p| (a_key >> p) & 1 == 1)
            .map(|p| s_idx[p])
            .collect();
        for_each_combination(a_glob.len(), t, |c| {
            let s = VertexSet::from_indices(n, &c.iter().map(|&i| a_glob[i]).collect::<Vec<_>>());
            if !members.contains(&s) {
                members.push(s);
            }
            true
        });
    }

    Ok(StabNet {
        family: TSubsetFamily::new(t, members, provenance)?,
        iterations,
        transversal: false,
    })
}

/// Distinct trace patterns of all hyperedges on the (d+1)-subset of S given
/// by positions `x_pos`, compressed to bitmasks over those positions.
fn realized_patterns(h: &Hypergraph, s_idx: &[usize], x_pos: &[usize]) -> Vec<u32> {
    let verts: Vec<usize> = x_pos.iter().map(|&p| s_idx[p]).collect();
    let mut seen = vec![false; 1 << verts.len()];
    let mut out = Vec::new();
    for e in h.edges() {
        let mut m: u32 = 0;
        for (bit, &v) in verts.iter().enumerate() {
            if e.contains(v) {
                m |= 1 << bit;
            }
        }
        if !seen[m as usize] {
            seen[m as usize] = true;
            out.push(m);
        }
    }
    out
}

/// Lexicographic comparison of equal-cardinality position masks as
/// ascending index lists: the mask owning the lowest differing bit wins.
fn lex_less_equal_card(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return true;
    }
    a & (diff & diff.wrapping_neg()) != 0
}
