//! The two specialized planar epsilon-2-net constructions: frames (pairs at
//! fixed strides along the axis-parallel lines) and axis-parallel
//! rectangles (a thrice-hitting point set, rank compression, and per
//! aspect-ratio-class pseudo-disk 2-nets).

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::geometry::{compile_kind, PointSet, RangeKind};
use crate::nets::{min_hitting_set, TSubsetFamily};
use crate::set::VertexSet;

/// Epsilon-2-net for points with respect to frames: on every maximal
/// axis-parallel line through at least 2*ceil(eps*n/4) points, the pairs of
/// the (i*q)-th and ((i+1)*q)-th points along the line, q = ceil(eps*n/4).
/// At most 8/eps - 2 pairs.
pub fn frames_eps2net(pts: &PointSet, eps: f64) -> Result<TSubsetFamily> {
    let n = pts.len();
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Domain(format!("eps must be in (0,1], got {eps}")));
    }
    if (n as f64) < 5.0 / eps {
        return Err(Error::TooFewPoints(format!(
            "frames construction needs |P| >= 5/eps = {}, got {n}",
            5.0 / eps
        )));
    }
    let norm = pts.normalized()?;
    let q = ((eps * n as f64) / 4.0).ceil() as usize;
    debug_assert!(q >= 2);
    let mut members = Vec::new();
    let mut lines: Vec<Vec<usize>> = Vec::new();
    let mut by_x: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut by_y: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (p, &(x, y)) in norm.iter().enumerate() {
        by_x.entry(x).or_default().push(p);
        by_y.entry(y).or_default().push(p);
    }
    for (_, mut col) in by_x {
        col.sort_by_key(|&p| norm[p].1);
        lines.push(col);
    }
    for (_, mut row) in by_y {
        row.sort_by_key(|&p| norm[p].0);
        lines.push(row);
    }
    for line in lines {
        let c = line.len();
        if c < 2 * q {
            continue;
        }
        // 1-indexed positions i*q and (i+1)*q
        let mut i = 1;
        while (i + 1) * q <= c {
            members.push(VertexSet::from_indices(
                n,
                &[line[i * q - 1], line[(i + 1) * q - 1]],
            ));
            i += 1;
        }
    }
    TSubsetFamily::new(2, members, format!("frames(eps={eps})"))
}

/// Epsilon-2-net for points with respect to axis-parallel rectangles.
///
/// Stages: (1) grow K = K1 u K2 u K3 so every heavy rectangle contains at
/// least three points of K; (2) rank-compress K to the integer grid;
/// (3) for each aspect-ratio class 2^i, cover every class rectangle holding
/// two or more K-points with a contained pair (exact hitting set, greedy
/// when past the guard); union the classes. A heavy rectangle splits into
/// two same-aspect rectangles, one holding two of its three K-points, so
/// the union is an epsilon-2-net. The parameter `_seed` is reserved; all
/// stages here are deterministic.
pub fn rectangles_eps2net(pts: &PointSet, eps: f64, _seed: u64) -> Result<TSubsetFamily> {
    let n = pts.len();
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::Domain(format!("eps must be in (0,1], got {eps}")));
    }
    if eps * (n as f64) < 3.0 {
        return Err(Error::TooFewPoints(format!(
            "rectangles construction needs eps*|P| >= 3, got {}",
            eps * n as f64
        )));
    }
    let provenance = format!("rects(eps={eps})");
    let inst = compile_kind(pts, RangeKind::AxisRect)?;
    let heavy_masks: Vec<&VertexSet> = inst
        .hyper
        .heavy_edges(eps)
        .into_iter()
        .map(|i| &inst.hyper.edges()[i])
        .collect();
    if heavy_masks.is_empty() {
        return TSubsetFamily::new(2, vec![], provenance);
    }

    // stage 1: K hits every heavy rectangle at least three times
    let mut k_set = VertexSet::empty(n);
    for round in 0..3 {
        let targets: Vec<VertexSet> = heavy_masks
            .iter()
            .filter(|e| e.intersection_card(&k_set) <= round.min(2))
            .map(|e| e.minus(&k_set))
            .collect();
        if targets.is_empty() {
            continue;
        }
        if targets.iter().any(|t| t.is_empty()) {
            return Err(Error::Infeasible(
                "a heavy rectangle ran out of fresh points".into(),
            ));
        }
        for v in hit_all(n, &targets, &k_set) {
            k_set.insert(v);
        }
    }
    let k_points: Vec<usize> = k_set.indices();
    let k = k_points.len();
    if k < 2 {
        // every heavy rectangle is hit three times by fewer than two
        // points: impossible, heavy rectangles hold >= 3 points
        return Err(Error::Infeasible("thrice-hitting set degenerated".into()));
    }

    // stage 2: rank-compress K
    let norm = pts.normalized()?;
    let mut xs: Vec<i64> = k_points.iter().map(|&p| norm[p].0).collect();
    let mut ys: Vec<i64> = k_points.iter().map(|&p| norm[p].1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let xr: HashMap<i64, usize> = xs.iter().enumerate().map(|(r, &v)| (v, r)).collect();
    let yr: HashMap<i64, usize> = ys.iter().enumerate().map(|(r, &v)| (v, r)).collect();
    let compressed: Vec<(usize, usize)> = k_points
        .iter()
        .map(|&p| (xr[&norm[p].0], yr[&norm[p].1]))
        .collect();
    let kx = xs.len();
    let ky = ys.len();

    // stage 3: per aspect class, cover class rectangles with >= 2 K-points
    let level = (k.max(2) as f64).log2().ceil() as i32 + 1;
    let mut members: Vec<VertexSet> = Vec::new();
    for i in -level..=level {
        let traces = class_traces(&compressed, kx, ky, k, i);
        let constraints: Vec<VertexSet> =
            traces.into_iter().filter(|t| t.card() >= 2).collect();
        if constraints.is_empty() {
            continue;
        }
        for pair in cover_with_pairs(k, &constraints) {
            let (a, b) = pair;
            members.push(VertexSet::from_indices(n, &[k_points[a], k_points[b]]));
        }
    }
    TSubsetFamily::new(2, members, provenance)
}

/// Greedy hitting set over points for the given target sets.
fn hit_all(n: usize, targets: &[VertexSet], used: &VertexSet) -> Vec<usize> {
    let mut unhit: Vec<bool> = vec![true; targets.len()];
    let mut remaining = targets.len();
    let mut picked = Vec::new();
    let mut picked_mask = VertexSet::empty(n);
    while remaining > 0 {
        let mut best = None;
        let mut best_gain = 0;
        for v in 0..n {
            if used.contains(v) || picked_mask.contains(v) {
                continue;
            }
            let gain = targets
                .iter()
                .zip(unhit.iter())
                .filter(|(t, &u)| u && t.contains(v))
                .count();
            if gain > best_gain {
                best_gain = gain;
                best = Some(v);
            }
        }
        let v = best.expect("targets are nonempty");
        picked.push(v);
        picked_mask.insert(v);
        for (idx, t) in targets.iter().enumerate() {
            if unhit[idx] && t.contains(v) {
                unhit[idx] = false;
                remaining -= 1;
            }
        }
    }
    picked
}

/// Distinct K-subsets realized by rectangles of aspect ratio 2^i over the
/// compressed grid. A column range a..=b is coverable by width w iff
/// b - a <= w < b - a + 2 (unbounded at the borders), so a quadruple is
/// class-realizable iff the width window intersects the height window
/// scaled by 2^-i.
fn class_traces(
    compressed: &[(usize, usize)],
    kx: usize,
    ky: usize,
    k: usize,
    class: i32,
) -> Vec<VertexSet> {
    let ratio = 2f64.powi(class);
    let mut col_masks: HashMap<(usize, usize), VertexSet> = HashMap::new();
    let mut row_masks: HashMap<(usize, usize), VertexSet> = HashMap::new();
    for a in 0..kx {
        for b in a..kx {
            let mut m = VertexSet::empty(k);
            for (p, &(x, _)) in compressed.iter().enumerate() {
                if x >= a && x <= b {
                    m.insert(p);
                }
            }
            col_masks.insert((a, b), m);
        }
    }
    for c in 0..ky {
        for d in c..ky {
            let mut m = VertexSet::empty(k);
            for (p, &(_, y)) in compressed.iter().enumerate() {
                if y >= c && y <= d {
                    m.insert(p);
                }
            }
            row_masks.insert((c, d), m);
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..kx {
        for b in a..kx {
            // width window (lo, hi): lo exclusive only at 0-width
            let w_lo = (b - a) as f64;
            let w_hi = if a == 0 && b == kx - 1 {
                f64::INFINITY
            } else {
                (b - a + 2) as f64
            };
            for c in 0..ky {
                for d in c..ky {
                    let h_lo = (d - c) as f64;
                    let h_hi = if c == 0 && d == ky - 1 {
                        f64::INFINITY
                    } else {
                        (d - c + 2) as f64
                    };
                    // need w > 0 with w in [w_lo, w_hi) and ratio*w in [h_lo, h_hi)
                    let lo = w_lo.max(h_lo / ratio).max(f64::MIN_POSITIVE);
                    let hi = w_hi.min(h_hi / ratio);
                    if lo >= hi {
                        continue;
                    }
                    let mask = col_masks[&(a, b)].intersect(&row_masks[&(c, d)]);
                    if seen.insert(mask.clone()) {
                        out.push(mask);
                    }
                }
            }
        }
    }
    out
}

/// Covers every constraint with a contained pair: exact hitting set when
/// within the guard, greedy otherwise.
fn cover_with_pairs(k: usize, constraints: &[VertexSet]) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut coverage: Vec<Vec<usize>> = Vec::new();
    for (ci, cons) in constraints.iter().enumerate() {
        let idx = cons.indices();
        for ai in 0..idx.len() {
            for bi in ai + 1..idx.len() {
                let key = (idx[ai], idx[bi]);
                let id = *pair_index.entry(key).or_insert_with(|| {
                    pairs.push(key);
                    coverage.push(Vec::new());
                    pairs.len() - 1
                });
                coverage[id].push(ci);
            }
        }
    }
    let use_exact = pairs.len() <= 2_000 && constraints.len() <= 10_000;
    let picked = if use_exact {
        min_hitting_set(&coverage, constraints.len()).expect("constraints hold >= 2 points")
    } else {
        greedy_pairs(&coverage, constraints.len())
    };
    let _ = k;
    picked.into_iter().map(|i| pairs[i]).collect()
}

fn greedy_pairs(coverage: &[Vec<usize>], num_constraints: usize) -> Vec<usize> {
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
        debug_assert!(best_gain > 0);
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{grid_points, random_points, staircase};
    use crate::nets::verify_net;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn collinear(n: usize) -> PointSet {
        PointSet::from_integers(&(0..n as i64).map(|i| (i, 0)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn frames_on_one_line_matches_stride() {
        let pts = collinear(20);
        let fam = frames_eps2net(&pts, 0.5).unwrap();
        // q = ceil(2.5) = 3: pairs at positions (3,6),(6,9),(9,12),(12,15),(15,18)
        assert_eq!(fam.size(), 5);
        assert!(fam.size() as f64 <= 8.0 / 0.5 - 2.0);
        let expect = VertexSet::from_indices(20, &[2, 5]);
        assert!(fam.members.contains(&expect));
        let inst = compile_kind(&pts, RangeKind::Frame).unwrap();
        assert!(verify_net(&inst.hyper, 0.5, 2, &fam).valid);
    }

    #[test]
    fn frames_vacuous_when_no_heavy_frames() {
        // points in strictly general position: no two share an axis line
        let pts = PointSet::from_integers(&[
            (0, 3),
            (1, 7),
            (2, 1),
            (3, 9),
            (4, 2),
            (5, 8),
            (6, 5),
            (7, 0),
            (8, 6),
            (9, 4),
        ])
        .unwrap();
        let fam = frames_eps2net(&pts, 0.6).unwrap();
        assert_eq!(fam.size(), 0);
        let inst = compile_kind(&pts, RangeKind::Frame).unwrap();
        assert!(verify_net(&inst.hyper, 0.6, 2, &fam).valid, "no heavy frames");
    }

    #[test]
    fn frames_too_few_points() {
        let pts = collinear(8);
        assert!(matches!(
            frames_eps2net(&pts, 0.5),
            Err(Error::TooFewPoints(_))
        ));
    }

    #[test]
    fn frames_grid_size_bound() {
        let pts = grid_points(10).unwrap();
        let fam = frames_eps2net(&pts, 0.2).unwrap();
        assert!(fam.size() as f64 <= 8.0 / 0.2 - 2.0, "size {}", fam.size());
    }

    #[test]
    fn rects_on_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pts = random_points(&mut rng, 30, 50).unwrap();
        let fam = rectangles_eps2net(&pts, 0.3, 0).unwrap();
        let inst = compile_kind(&pts, RangeKind::AxisRect).unwrap();
        let rep = verify_net(&inst.hyper, 0.3, 2, &fam);
        assert!(rep.valid, "witness {:?}", rep.witness);
    }

    #[test]
    fn rects_on_staircase() {
        // eps*n = 2 < 3 rejects staircase(8) at eps = 1/4
        assert!(matches!(
            rectangles_eps2net(&staircase(8).unwrap(), 0.25, 0),
            Err(Error::TooFewPoints(_))
        ));
        let pts = staircase(16).unwrap();
        let fam = rectangles_eps2net(&pts, 0.25, 0).unwrap();
        let inst = compile_kind(&pts, RangeKind::AxisRect).unwrap();
        let rep = verify_net(&inst.hyper, 0.25, 2, &fam);
        assert!(rep.valid, "witness {:?}", rep.witness);
    }

    #[test]
    fn rects_on_diagonal_line() {
        let pts = PointSet::from_integers(&(0..12i64).map(|i| (i, i)).collect::<Vec<_>>())
            .unwrap();
        let fam = rectangles_eps2net(&pts, 0.5, 0).unwrap();
        let inst = compile_kind(&pts, RangeKind::AxisRect).unwrap();
        assert!(verify_net(&inst.hyper, 0.5, 2, &fam).valid);
    }
}
