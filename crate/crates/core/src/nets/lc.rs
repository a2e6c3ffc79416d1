//! Epsilon-t-nets through the block tuple hypergraph over a low-crossing
//! spanning cycle: an (eps/2)-net of H^t_lc, mapped back to base t-subsets.
//!
//! Validity is guaranteed by the theory only once n clears a threshold that
//! depends on unpinned constants, so the construction always verifies its
//! output against the base hypergraph and reports the verdict instead of
//! certifying it a priori.

use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::nets::{det_eps_net, random_net, verify_net, NetReport, TSubsetFamily};
use crate::tuples::build_ht_lc;

/// Per-heavy-edge slack of the counting argument: an edge with cr crossings
/// must fully contain at least floor(eps*n/t) - cr blocks for the tuple-net
/// route to be guaranteed.
#[derive(Clone, Debug)]
pub struct LcMargin {
    pub edge: usize,
    pub contained_blocks: usize,
    pub crossing: usize,
    /// floor(eps*n/t) - crossing; may be negative when n is too small
    pub guarantee: i64,
}

#[derive(Clone, Debug)]
pub struct LcNet {
    pub family: TSubsetFamily,
    pub report: NetReport,
    pub margins: Vec<LcMargin>,
    pub max_crossing: usize,
}

/// Builds H^t_lc with the given seed, computes an (eps/2)-net over it
/// (deterministic stabbing when a tuple-hypergraph dimension is supplied,
/// random sampling otherwise), and maps the chosen blocks back.
pub fn lc_eps_t_net(
    h: &Hypergraph,
    eps: f64,
    t: usize,
    seed: u64,
    tuple_dim: Option<usize>,
) -> Result<LcNet> {
    let (th, cycle) = build_ht_lc(h, t, seed)?;
    let inner = match tuple_dim {
        Some(d) => det_eps_net(&th.hyper, eps / 2.0, d)?.family,
        None => random_net(&th.hyper, eps / 2.0, 1, seed, 1.0, None)?.0,
    };
    let members = inner
        .members
        .iter()
        .map(|s| {
            let block = s.iter().next().expect("inner members are singletons");
            th.back_map[block].clone()
        })
        .collect();
    let family = TSubsetFamily::new(t, members, format!("lc(eps={eps},t={t},seed={seed})"))?;
    let report = verify_net(h, eps, t, &family);
    let per_block = ((eps * h.n() as f64) / t as f64).floor() as i64;
    let margins = h
        .heavy_edges(eps)
        .into_iter()
        .map(|ei| {
            let e = &h.edges()[ei];
            let contained = th.back_map.iter().filter(|b| b.is_subset_of(e)).count();
            LcMargin {
                edge: ei,
                contained_blocks: contained,
                crossing: cycle.crossings[ei],
                guarantee: per_block - cycle.crossings[ei] as i64,
            }
        })
        .collect();
    Ok(LcNet {
        family,
        report,
        margins,
        max_crossing: cycle.max_crossing,
    })
}
