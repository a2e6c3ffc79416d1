//! Random-sampling baseline: draw uniform t-subsets at the classical
//! epsilon-net size, verify, and double the sample on failure.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::nets::{verify_net, NetReport, TSubsetFamily};
use crate::set::VertexSet;
use crate::vcdim::vc_dimension;

const MAX_ROUNDS: usize = 10;

/// Draws ceil(oversample * (d/eps) * log2(1/eps)) uniform t-subsets (at
/// least one) and retries with doubled sample size until the verifier
/// passes. `dim` overrides the VC-dimension driving the sample size; without
/// it the exact dimension is computed when feasible, else a crude
/// log2(#edges) stand-in is used — the verify-and-retry loop makes the
/// starting size a matter of speed, not correctness.
pub fn random_net(
    h: &Hypergraph,
    eps: f64,
    t: usize,
    seed: u64,
    oversample: f64,
    dim: Option<usize>,
) -> Result<(TSubsetFamily, NetReport)> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Domain(format!("eps must be in (0,1], got {eps}")));
    }
    let n = h.n();
    if (t as f64) > eps * n as f64 {
        return Err(Error::Domain(format!(
            "t = {t} exceeds eps*n = {}",
            eps * n as f64
        )));
    }
    let d = match dim {
        Some(d) => d.max(1),
        None => {
            if n <= 25 {
                vc_dimension(h)?.max(1)
            } else {
                ((h.num_edges() as f64 + 1.0).log2().ceil() as usize).max(1)
            }
        }
    };
    let base = oversample * (d as f64 / eps) * (1.0 / eps).log2();
    let mut draws = (base.ceil() as usize).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 0..MAX_ROUNDS {
        let mut members = Vec::with_capacity(draws);
        for _ in 0..draws {
            let mut pool: Vec<usize> = (0..n).collect();
            let (chosen, _) = pool.partial_shuffle(&mut rng, t);
            members.push(VertexSet::from_indices(n, chosen));
        }
        let fam = TSubsetFamily::new(
            t,
            members,
            format!("random(eps={eps},t={t},seed={seed},round={round})"),
        )?;
        let report = verify_net(h, eps, t, &fam);
        if report.valid {
            return Ok((fam, report));
        }
        draws *= 2;
    }
    Err(Error::GaveUp { rounds: MAX_ROUNDS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_subset_suffices_at_eps_one() {
        let h = Hypergraph::from_index_edges(6, &[vec![0, 1, 2, 3, 4, 5], vec![0, 1]]).unwrap();
        let (fam, rep) = random_net(&h, 1.0, 2, 1, 1.0, Some(2)).unwrap();
        assert!(rep.valid);
        assert!(fam.size() >= 1);
    }

    #[test]
    fn precondition_t_vs_eps_n() {
        let h = Hypergraph::from_index_edges(6, &[vec![0, 1]]).unwrap();
        assert!(matches!(
            random_net(&h, 0.2, 3, 1, 1.0, Some(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn statistical_success_on_random_instances() {
        use rand::SeedableRng;
        let mut gen_rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        let h = crate::gen::random_hypergraph_exact(&mut gen_rng, 40, 200);
        let mut passes = 0;
        for seed in 0..50u64 {
            if let Ok((_, rep)) = random_net(&h, 0.3, 1, seed, 1.0, Some(3)) {
                assert!(rep.valid);
                passes += 1;
            }
        }
        assert!(passes >= 48, "only {passes}/50 runs passed");
    }
}
