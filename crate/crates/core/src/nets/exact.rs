//! Exact minimum hitting set by branch and bound, and the minimum
//! epsilon-t-net oracle built on it. This is the independent reference the
//! constructions and the Turán identity are measured against.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::nets::TSubsetFamily;
use crate::set::VertexSet;
use crate::util::for_each_combination;

const POOL_GUARD: usize = 10_000;
const CONSTRAINT_GUARD: usize = 10_000;

/// Minimum set of candidates covering every constraint, or None when some
/// constraint has no covering candidate.
///
/// `coverage[c]` lists the constraints candidate `c` covers. Branching is on
/// the uncovered constraint with the fewest remaining candidates; pruning
/// combines a greedy incumbent with a lower bound from a greedily packed set
/// of candidate-disjoint constraints.
pub fn min_hitting_set(coverage: &[Vec<usize>], num_constraints: usize) -> Option<Vec<usize>> {
    if num_constraints == 0 {
        return Some(Vec::new());
    }
    let num_candidates = coverage.len();
    let mut by_constraint: Vec<Vec<usize>> = vec![Vec::new(); num_constraints];
    for (c, covers) in coverage.iter().enumerate() {
        for &k in covers {
            by_constraint[k].push(c);
        }
    }
    if by_constraint.iter().any(|v| v.is_empty()) {
        return None;
    }
    let cover_masks: Vec<VertexSet> = coverage
        .iter()
        .map(|covers| VertexSet::from_indices(num_constraints, covers))
        .collect();
    let cand_masks: Vec<VertexSet> = by_constraint
        .iter()
        .map(|cands| VertexSet::from_indices(num_candidates, cands))
        .collect();

    let greedy = |uncovered: &VertexSet| -> Vec<usize> {
        let mut left = uncovered.clone();
        let mut picked = Vec::new();
        while !left.is_empty() {
            let mut best = 0usize;
            let mut best_gain = 0usize;
            for (c, mask) in cover_masks.iter().enumerate() {
                let gain = mask.intersection_card(&left);
                if gain > best_gain {
                    best_gain = gain;
                    best = c;
                }
            }
            debug_assert!(best_gain > 0);
            picked.push(best);
            left = left.minus(&cover_masks[best]);
        }
        picked
    };

    let lower_bound = |uncovered: &VertexSet| -> usize {
        // constraints with pairwise disjoint candidate sets need one pick each
        let mut used = VertexSet::empty(num_candidates);
        let mut count = 0usize;
        let mut order: Vec<usize> = uncovered.iter().collect();
        order.sort_by_key(|&k| by_constraint[k].len());
        for k in order {
            if !cand_masks[k].intersects(&used) {
                used = used.union(&cand_masks[k]);
                count += 1;
            }
        }
        count
    };

    let all = VertexSet::full(num_constraints);
    let mut best = greedy(&all);

    struct Ctx<'a> {
        cover_masks: &'a [VertexSet],
        by_constraint: &'a [Vec<usize>],
        lower_bound: &'a dyn Fn(&VertexSet) -> usize,
        best: Vec<usize>,
    }

    fn dfs(ctx: &mut Ctx<'_>, chosen: &mut Vec<usize>, uncovered: &VertexSet) {
        if uncovered.is_empty() {
            if chosen.len() < ctx.best.len() {
                ctx.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + (ctx.lower_bound)(uncovered) >= ctx.best.len() {
            return;
        }
        // branch on the uncovered constraint with the fewest candidates
        let k = uncovered
            .iter()
            .min_by_key(|&k| ctx.by_constraint[k].len())
            .unwrap();
        let mut options = ctx.by_constraint[k].clone();
        options.sort_by_key(|&c| std::cmp::Reverse(ctx.cover_masks[c].intersection_card(uncovered)));
        for c in options {
            chosen.push(c);
            let rest = uncovered.minus(&ctx.cover_masks[c]);
            dfs(ctx, chosen, &rest);
            chosen.pop();
        }
    }

    let mut ctx = Ctx {
        cover_masks: &cover_masks,
        by_constraint: &by_constraint,
        lower_bound: &lower_bound,
        best: best.clone(),
    };
    let mut chosen = Vec::new();
    dfs(&mut ctx, &mut chosen, &all);
    best = ctx.best;
    best.sort_unstable();
    Some(best)
}

/// Exact minimum-cardinality epsilon-t-net via the hitting-set formulation:
/// one constraint per heavy edge, candidates are the t-subsets contained in
/// at least one heavy edge.
pub fn min_net_exact(h: &Hypergraph, eps: f64, t: usize) -> Result<TSubsetFamily> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    let heavy: Vec<&VertexSet> = h
        .heavy_edges(eps)
        .into_iter()
        .map(|i| &h.edges()[i])
        .collect();
    if heavy.len() > CONSTRAINT_GUARD {
        return Err(Error::TooLarge(format!(
            "{} heavy edges exceed the exact-search guard {CONSTRAINT_GUARD}",
            heavy.len()
        )));
    }
    for e in &heavy {
        if e.card() < t {
            return Err(Error::Infeasible(format!(
                "heavy edge of cardinality {} cannot contain a {t}-subset",
                e.card()
            )));
        }
    }
    // candidate pool: t-subsets contained in some heavy edge
    let mut pool: Vec<VertexSet> = Vec::new();
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    let mut coverage: Vec<Vec<usize>> = Vec::new();
    for (k, e) in heavy.iter().enumerate() {
        let members = e.indices();
        let mut overflow = false;
        for_each_combination(members.len(), t, |c| {
            let s = VertexSet::from_indices(
                h.n(),
                &c.iter().map(|&i| members[i]).collect::<Vec<_>>(),
            );
            let id = *index.entry(s.clone()).or_insert_with(|| {
                pool.push(s);
                coverage.push(Vec::new());
                pool.len() - 1
            });
            coverage[id].push(k);
            if pool.len() > POOL_GUARD {
                overflow = true;
                return false;
            }
            true
        });
        if overflow || pool.len() > POOL_GUARD {
            return Err(Error::TooLarge(format!(
                "candidate pool exceeds the exact-search guard {POOL_GUARD}"
            )));
        }
    }
    let solution = min_hitting_set(&coverage, heavy.len())
        .expect("every heavy edge has cardinality >= t, so constraints are coverable");
    let members = solution.into_iter().map(|c| pool[c].clone()).collect();
    TSubsetFamily::new(t, members, format!("exact(eps={eps},t={t})"))
}
