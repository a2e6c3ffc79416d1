//! Applications: the Turán-number identity checked through two independent
//! exact searches, and the rainbow pair-coloring construction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::nets::{min_hitting_set, min_net_exact};
use crate::set::VertexSet;
use crate::util::{binomial, for_each_combination};

const TURAN_GUARD: u128 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuranResult {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub turan_number: usize,
    pub min_net_size: usize,
    pub identity_holds: bool,
}

fn check_turan_params(n: usize, k: usize, t: usize) -> Result<usize> {
    if !(n >= k && k > t && t >= 2) {
        return Err(Error::Domain(format!(
            "need n >= k > t >= 2, got n={n} k={k} t={t}"
        )));
    }
    let m = binomial(n, t);
    if m > TURAN_GUARD {
        return Err(Error::TooLarge(format!(
            "C({n},{t}) = {m} t-subsets exceed the search guard {TURAN_GUARD}"
        )));
    }
    Ok(m as usize)
}

/// Exact Turán number T(n,k,t): the maximum number of hyperedges of a
/// t-uniform hypergraph on n vertices containing no complete t-uniform
/// hypergraph on k vertices.
///
/// Branch and bound over the t-subsets in lexicographic order
/// (include-first). A branch dies when it would complete some k-set; the
/// bound subtracts, from the optimistic count, a greedily packed family of
/// k-sets with pairwise disjoint undecided t-subsets, each of which still
/// forces one exclusion.
pub fn turan_exact(n: usize, k: usize, t: usize) -> Result<usize> {
    let m = check_turan_params(n, k, t)?;
    let mut tsub_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut count = 0usize;
    for_each_combination(n, t, |c| {
        tsub_index.insert(c.to_vec(), count);
        count += 1;
        true
    });
    debug_assert_eq!(count, m);
    // per k-set: bitmask (over t-subset indices) of its C(k,t) t-subsets
    let mut ksets: Vec<u64> = Vec::new();
    for_each_combination(n, k, |kc| {
        let mut mask = 0u64;
        for_each_combination(k, t, |tc| {
            let sub: Vec<usize> = tc.iter().map(|&i| kc[i]).collect();
            mask |= 1u64 << tsub_index[&sub];
            true
        });
        ksets.push(mask);
        true
    });
    let per_kset = binomial(k, t) as u32;

    struct Search<'a> {
        m: usize,
        ksets: &'a [u64],
        per_kset: u32,
        best: usize,
    }

    impl Search<'_> {
        fn run(&mut self, pos: usize, included: u64, excluded: u64) {
            let included_count = included.count_ones() as usize;
            if pos == self.m {
                if included_count > self.best {
                    self.best = included_count;
                }
                return;
            }
            let undecided: u64 = !(included | excluded) & ((1u64 << self.m) - 1);
            // optimistic count minus one forced exclusion per packed k-set
            let mut optimistic = included_count + undecided.count_ones() as usize;
            let mut packed: u64 = 0;
            for &ks in self.ksets {
                if ks & excluded != 0 {
                    continue;
                }
                let w = ks & undecided;
                if w != 0 && w & packed == 0 {
                    packed |= w;
                    optimistic -= 1;
                }
            }
            if optimistic <= self.best {
                return;
            }
            let bit = 1u64 << pos;
            // include, unless it completes a k-set
            let completes = self.ksets.iter().any(|&ks| {
                ks & bit != 0 && ((ks & (included | bit)).count_ones() == self.per_kset)
            });
            if !completes {
                self.run(pos + 1, included | bit, excluded);
            }
            self.run(pos + 1, included, excluded | bit);
        }
    }

    // greedy incumbent in lexicographic order
    let mut greedy_included: u64 = 0;
    for pos in 0..m {
        let bit = 1u64 << pos;
        let completes = ksets
            .iter()
            .any(|&ks| ks & bit != 0 && (ks & (greedy_included | bit)).count_ones() == per_kset);
        if !completes {
            greedy_included |= bit;
        }
    }
    let mut search = Search {
        m,
        ksets: &ksets,
        per_kset,
        best: greedy_included.count_ones() as usize,
    };
    search.run(0, 0, 0);
    Ok(search.best)
}

/// Size of a smallest (k/n)-t-net for the complete k-uniform hypergraph on
/// n vertices, through the hitting-set branch and bound — a code path fully
/// independent of `turan_exact`.
pub fn min_net_complete(n: usize, k: usize, t: usize) -> Result<usize> {
    check_turan_params(n, k, t)?;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for_each_combination(n, k, |c| {
        edges.push(c.to_vec());
        true
    });
    let h = Hypergraph::from_index_edges(n, &edges)?;
    let fam = min_net_exact(&h, k as f64 / n as f64, t)?;
    Ok(fam.size())
}

/// Runs both oracles and reports whether the identity
/// min-net = C(n,t) - T(n,k,t) holds.
pub fn check_turan_identity(n: usize, k: usize, t: usize) -> Result<TuranResult> {
    let turan_number = turan_exact(n, k, t)?;
    let min_net_size = min_net_complete(n, k, t)?;
    let total = binomial(n, t) as usize;
    Ok(TuranResult {
        n,
        k,
        t,
        turan_number,
        min_net_size,
        identity_holds: min_net_size == total - turan_number,
    })
}

/// A coloring of all vertex pairs.
#[derive(Clone, Debug)]
pub struct PairColoring {
    pub colors: BTreeMap<(usize, usize), usize>,
    pub num_colors: usize,
}

impl PairColoring {
    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.colors.get(&key).copied()
    }
}

fn pair_id(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    // row-major upper triangle
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Colors vertex pairs so that every heavy edge contains a pair of every
/// color: per round, a net of the residual pair hypergraph (exact hitting
/// set when in reach, greedy otherwise) gets a fresh color and is removed;
/// rounds stop once some heavy edge would drop below ceil(eps^2 n^2 / 4)
/// uncolored internal pairs, and everything left joins color 0. `_seed` is
/// reserved; both cover routines are deterministic.
pub fn rainbow_pair_coloring(h: &Hypergraph, eps: f64, _seed: u64) -> Result<PairColoring> {
    let n = h.n();
    if n < 2 || eps <= 2.0 / n as f64 {
        return Err(Error::TooSmall(format!(
            "rainbow coloring needs eps > 2/n = {}, got {eps}",
            2.0 / n.max(1) as f64
        )));
    }
    let heavy: Vec<&VertexSet> = h
        .heavy_edges(eps)
        .into_iter()
        .map(|i| &h.edges()[i])
        .collect();
    if heavy.is_empty() {
        return Err(Error::TooSmall("no heavy edges to color against".into()));
    }
    let num_pairs = n * (n - 1) / 2;
    let threshold = ((eps * eps * (n * n) as f64) / 4.0).ceil() as usize;
    // per heavy edge, its internal pairs as a mask over pair ids
    let edge_pairs: Vec<VertexSet> = heavy
        .iter()
        .map(|e| {
            let idx = e.indices();
            let mut m = VertexSet::empty(num_pairs);
            for a in 0..idx.len() {
                for b in a + 1..idx.len() {
                    m.insert(pair_id(n, idx[a], idx[b]));
                }
            }
            m
        })
        .collect();
    let mut uncolored = VertexSet::full(num_pairs);
    let mut assignment: Vec<Option<usize>> = vec![None; num_pairs];
    let mut rounds = 0usize;
    loop {
        let residuals: Vec<VertexSet> =
            edge_pairs.iter().map(|m| m.intersect(&uncolored)).collect();
        if residuals.iter().any(|r| r.card() < threshold) {
            break;
        }
        let chosen = cover_pairs(&residuals);
        for p in &chosen {
            assignment[*p] = Some(rounds);
            uncolored.remove(*p);
        }
        rounds += 1;
    }
    let num_colors = rounds.max(1);
    let mut colors = BTreeMap::new();
    for u in 0..n {
        for v in u + 1..n {
            let c = assignment[pair_id(n, u, v)].unwrap_or(0);
            colors.insert((u, v), c);
        }
    }
    Ok(PairColoring { colors, num_colors })
}

/// One pair per residual constraint set: exact when small, greedy past the
/// guards.
fn cover_pairs(residuals: &[VertexSet]) -> Vec<usize> {
    let mut pair_pool: Vec<usize> = Vec::new();
    let mut pool_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut coverage: Vec<Vec<usize>> = Vec::new();
    for (ei, r) in residuals.iter().enumerate() {
        for p in r.iter() {
            let id = *pool_index.entry(p).or_insert_with(|| {
                pair_pool.push(p);
                coverage.push(Vec::new());
                pair_pool.len() - 1
            });
            coverage[id].push(ei);
        }
    }
    let picked = if pair_pool.len() <= 10_000 && residuals.len() <= 10_000 {
        min_hitting_set(&coverage, residuals.len()).expect("residuals are nonempty")
    } else {
        greedy_hit(&coverage, residuals.len())
    };
    picked.into_iter().map(|i| pair_pool[i]).collect()
}

fn greedy_hit(coverage: &[Vec<usize>], num_constraints: usize) -> Vec<usize> {
    let mut unhit = vec![true; num_constraints];
    let mut remaining = num_constraints;
    let mut picked = Vec::new();
    while remaining > 0 {
        let mut best = 0;
        let mut best_gain = 0;
        for (ci, covers) in coverage.iter().enumerate() {
            let gain = covers.iter().filter(|&&c| unhit[c]).count();
            if gain > best_gain {
                best_gain = gain;
                best = ci;
            }
        }
        picked.push(best);
        for &c in &coverage[best] {
            if unhit[c] {
                unhit[c] = false;
                remaining -= 1;
            }
        }
    }
    picked
}

/// True iff every heavy edge contains at least one pair of every color.
pub fn verify_rainbow(h: &Hypergraph, eps: f64, coloring: &PairColoring) -> bool {
    let threshold = eps * h.n() as f64;
    for e in h.edges() {
        if (e.card() as f64) < threshold {
            continue;
        }
        let idx = e.indices();
        let mut present = vec![false; coloring.num_colors];
        let mut missing = coloring.num_colors;
        'pairs: for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                if let Some(c) = coloring.color_of(idx[a], idx[b]) {
                    if c < coloring.num_colors && !present[c] {
                        present[c] = true;
                        missing -= 1;
                        if missing == 0 {
                            break 'pairs;
                        }
                    }
                }
            }
        }
        if missing > 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn mantel_small_cases() {
        // T(n,3,2) = floor(n^2/4)
        for n in 3..=7usize {
            assert_eq!(turan_exact(n, 3, 2).unwrap(), n * n / 4, "n={n}");
        }
    }

    #[test]
    fn turan_known_values() {
        assert_eq!(turan_exact(4, 3, 2).unwrap(), 4);
        assert_eq!(turan_exact(6, 3, 2).unwrap(), 9);
        // n = k: drop a single t-subset
        assert_eq!(turan_exact(5, 5, 2).unwrap(), binomial(5, 2) as usize - 1);
    }

    #[test]
    fn min_net_known_values() {
        assert_eq!(min_net_complete(4, 3, 2).unwrap(), 2);
        assert_eq!(min_net_complete(6, 3, 2).unwrap(), 6);
        assert_eq!(min_net_complete(5, 5, 2).unwrap(), 1);
        assert_eq!(min_net_complete(6, 6, 3).unwrap(), 1);
    }

    #[test]
    fn identity_examples() {
        let r = check_turan_identity(4, 3, 2).unwrap();
        assert_eq!((r.turan_number, r.min_net_size), (4, 2));
        assert!(r.identity_holds);
        let r = check_turan_identity(6, 3, 2).unwrap();
        assert_eq!((r.turan_number, r.min_net_size), (9, 6));
        assert!(r.identity_holds);
        let r = check_turan_identity(7, 4, 3).unwrap();
        assert!(r.identity_holds);
    }

    #[test]
    fn guard_rejects_large_and_bad_params() {
        assert!(matches!(turan_exact(8, 4, 3), Err(Error::TooLarge(_))));
        assert!(matches!(turan_exact(4, 3, 1), Err(Error::Domain(_))));
        assert!(matches!(turan_exact(3, 4, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn rainbow_single_full_edge() {
        let h = Hypergraph::new(10, vec![VertexSet::full(10)]).unwrap();
        let coloring = rainbow_pair_coloring(&h, 1.0, 0).unwrap();
        assert!(verify_rainbow(&h, 1.0, &coloring));
        assert!(coloring.num_colors >= 1);
        assert!(coloring.num_colors <= binomial(10, 2) as usize);
    }

    #[test]
    fn rainbow_disjoint_heavy_edges() {
        let h = crate::gen::disjoint_blocks(20, 10).unwrap();
        let coloring = rainbow_pair_coloring(&h, 0.5, 1).unwrap();
        assert!(verify_rainbow(&h, 0.5, &coloring));
    }

    #[test]
    fn rainbow_random_suite() {
        let mut rng = ChaCha8Rng::seed_from_u64(4242);
        for round in 0..10 {
            let h = crate::gen::random_hypergraph_with_heavy(&mut rng, 24, 30, 10);
            let eps = 10.0 / 24.0;
            match rainbow_pair_coloring(&h, eps, round) {
                Ok(coloring) => {
                    assert!(verify_rainbow(&h, eps, &coloring), "round {round}");
                    let min_heavy = h
                        .heavy_edges(eps)
                        .into_iter()
                        .map(|i| h.edges()[i].card())
                        .min()
                        .unwrap();
                    assert!(coloring.num_colors <= binomial(min_heavy, 2) as usize);
                }
                Err(Error::TooSmall(_)) => {}
                Err(e) => panic!("{e:?}"),
            }
        }
    }

    #[test]
    fn rainbow_rejects_tiny_eps() {
        let h = Hypergraph::new(10, vec![VertexSet::full(10)]).unwrap();
        assert!(matches!(
            rainbow_pair_coloring(&h, 0.1, 0),
            Err(Error::TooSmall(_))
        ));
    }

    #[test]
    fn adversarial_coloring_fails_verification() {
        let h = Hypergraph::new(6, vec![VertexSet::full(6)]).unwrap();
        let mut colors = BTreeMap::new();
        for u in 0..6usize {
            for v in u + 1..6 {
                colors.insert((u, v), 0usize);
            }
        }
        // claims two colors but never uses color 1
        let coloring = PairColoring {
            colors,
            num_colors: 2,
        };
        assert!(!verify_rainbow(&h, 0.9, &coloring));
    }
}
