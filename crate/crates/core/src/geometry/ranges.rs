//! Canonical range enumeration: for each supported range class, one
//! representative per distinct realizable point subset.
//!
//! All predicates run on integer coordinates (denominators cleared by
//! `PointSet::normalized`), so canonicalization is exact even on degenerate
//! inputs like grids. Open/closed boundary distinctions are realized by
//! enumerating between-value cut positions rather than by perturbation.

use std::collections::{HashMap, HashSet};

use num::integer::gcd;
use num::BigInt;

use crate::error::{Error, Result};
use crate::geometry::{PointSet, RangeDesc, RangeFamily, RangeKind, Rat};
use crate::set::VertexSet;

pub fn canonical_ranges(pts: &PointSet, kind: RangeKind) -> Result<RangeFamily> {
    let n = pts.len();
    match kind {
        RangeKind::AxisRect | RangeKind::Frame if n > 500 => Err(Error::TooLarge(format!(
            "canonical {kind:?} enumeration is guarded at 500 points, got {n}"
        ))),
        RangeKind::Disk if n > 300 => Err(Error::TooLarge(format!(
            "canonical disk enumeration is guarded at 300 points, got {n}"
        ))),
        _ => Ok(()),
    }?;
    let norm = pts.normalized()?;
    let mut dedup: HashMap<VertexSet, RangeDesc> = HashMap::new();
    let mut order: Vec<VertexSet> = Vec::new();
    let mut add = |mask: VertexSet, desc: RangeDesc| {
        dedup.entry(mask.clone()).or_insert_with(|| {
            order.push(mask);
            desc
        });
    };
    // the empty range is realizable for every class
    add(VertexSet::empty(n), RangeDesc::Trivial("empty".into()));
    match kind {
        RangeKind::Halfplane => halfplanes(&norm, &mut add),
        RangeKind::Disk => disks(&norm, &mut add),
        RangeKind::AxisRect => axis_rects(pts, &norm, &mut add),
        RangeKind::Frame => frames(&norm, &mut add),
        RangeKind::AxisSegment => axis_segments(pts, &norm, &mut add),
    }
    let ranges = order
        .into_iter()
        .map(|m| {
            let d = dedup.remove(&m).expect("inserted above");
            (d, m)
        })
        .collect();
    Ok(RangeFamily { kind, ranges })
}

/// Every halfplane trace is a prefix of the point order keyed by the
/// halfplane's inner normal; rotating the normal to the nearest direction
/// orthogonal to a point difference preserves the order up to ties, which a
/// secondary key along the boundary resolves. Enumerating all prefixes of
/// the four (sign of normal) x (sign of tie key) orders per distinct pair
/// direction therefore realizes every trace.
fn halfplanes(norm: &[(i64, i64)], add: &mut impl FnMut(VertexSet, RangeDesc)) {
    let n = norm.len();
    if n == 0 {
        return;
    }
    let mut dirs: HashSet<(i64, i64)> = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (norm[j].0 - norm[i].0, norm[j].1 - norm[i].1);
            let g = gcd(dx.abs(), dy.abs());
            let (mut dx, mut dy) = (dx / g, dy / g);
            if dy < 0 || (dy == 0 && dx < 0) {
                dx = -dx;
                dy = -dy;
            }
            dirs.insert((dx, dy));
        }
    }
    if dirs.is_empty() {
        // a single point: the two trivial traces plus the singleton
        add(VertexSet::full(n), RangeDesc::Trivial("all".into()));
        return;
    }
    for (dx, dy) in dirs {
        // tangent (dx,dy), normal (-dy,dx)
        for (sn, st) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let nx = -dy * sn;
            let ny = dx * sn;
            let mut keyed: Vec<(i128, i128, usize)> = (0..n)
                .map(|p| {
                    let kn = nx as i128 * norm[p].0 as i128 + ny as i128 * norm[p].1 as i128;
                    let kt = st as i128
                        * (dx as i128 * norm[p].0 as i128 + dy as i128 * norm[p].1 as i128);
                    (kn, kt, p)
                })
                .collect();
            keyed.sort_unstable();
            let mut mask = VertexSet::empty(n);
            add(mask.clone(), RangeDesc::Trivial("empty".into()));
            for (count, &(_, _, p)) in keyed.iter().enumerate() {
                mask.insert(p);
                add(
                    mask.clone(),
                    RangeDesc::Halfplane {
                        normal: (-nx, -ny),
                        count: count + 1,
                    },
                );
            }
        }
    }
}

#[inline]
fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let abx = (b.0 - a.0) as i128;
    let aby = (b.1 - a.1) as i128;
    let acx = (c.0 - a.0) as i128;
    let acy = (c.1 - a.1) as i128;
    abx * acy - aby * acx
}

/// in-circle determinant, positive when d is strictly inside the circle
/// through a, b, c taken counterclockwise
fn incircle(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> i128 {
    let col = |p: (i64, i64)| {
        let x = (p.0 - d.0) as i128;
        let y = (p.1 - d.1) as i128;
        (x, y, x * x + y * y)
    };
    let (ax, ay, az) = col(a);
    let (bx, by, bz) = col(b);
    let (cx, cy, cz) = col(c);
    ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)
}

/// Closed and open circumdisks of every non-collinear triple, diametral
/// disks of every pair, all singletons, and the trivial traces.
fn disks(norm: &[(i64, i64)], add: &mut impl FnMut(VertexSet, RangeDesc)) {
    let n = norm.len();
    add(VertexSet::full(n), RangeDesc::Trivial("all".into()));
    for p in 0..n {
        add(
            VertexSet::singleton(n, p),
            RangeDesc::Trivial(format!("point {p}")),
        );
    }
    for i in 0..n {
        for j in i + 1..n {
            // diametral disk: d inside iff (d-i).(d-j) <= 0
            for strict in [false, true] {
                let mut mask = VertexSet::empty(n);
                for (p, &pt) in norm.iter().enumerate() {
                    let dot = (pt.0 - norm[i].0) as i128 * (pt.0 - norm[j].0) as i128
                        + (pt.1 - norm[i].1) as i128 * (pt.1 - norm[j].1) as i128;
                    let inside = if strict { dot < 0 } else { dot <= 0 };
                    if inside {
                        mask.insert(p);
                    }
                }
                add(
                    mask,
                    RangeDesc::Disk {
                        through: vec![i, j],
                        strict,
                    },
                );
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (mut a, b, mut c) = (norm[i], norm[j], norm[k]);
                let o = orient(a, b, c);
                if o == 0 {
                    continue;
                }
                if o < 0 {
                    std::mem::swap(&mut a, &mut c);
                }
                for strict in [false, true] {
                    let mut mask = VertexSet::empty(n);
                    for (p, &pt) in norm.iter().enumerate() {
                        let det = incircle(a, b, c, pt);
                        let inside = if strict { det > 0 } else { det >= 0 };
                        if inside {
                            mask.insert(p);
                        }
                    }
                    add(
                        mask,
                        RangeDesc::Disk {
                            through: vec![i, j, k],
                            strict,
                        },
                    );
                }
            }
        }
    }
}

/// Distinct sorted coordinate values along one axis.
fn value_ranks(vals: impl Iterator<Item = i64>) -> Vec<i64> {
    let mut v: Vec<i64> = vals.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Closed axis-parallel rectangles realize exactly the products of
/// contiguous coordinate-value ranges.
fn axis_rects(pts: &PointSet, norm: &[(i64, i64)], add: &mut impl FnMut(VertexSet, RangeDesc)) {
    let n = norm.len();
    let xs = value_ranks(norm.iter().map(|p| p.0));
    let ys = value_ranks(norm.iter().map(|p| p.1));
    let x_orig = rational_values(pts, true);
    let y_orig = rational_values(pts, false);
    // membership masks per contiguous value range
    let x_masks = range_masks(n, norm.iter().map(|p| p.0), &xs);
    let y_masks = range_masks(n, norm.iter().map(|p| p.1), &ys);
    for (xi, xj, xm) in &x_masks {
        for (yi, yj, ym) in &y_masks {
            let mask = xm.intersect(ym);
            add(
                mask,
                RangeDesc::AxisRect {
                    x: (x_orig[*xi].clone(), x_orig[*xj].clone()),
                    y: (y_orig[*yi].clone(), y_orig[*yj].clone()),
                },
            );
        }
    }
}

fn rational_values(pts: &PointSet, x_axis: bool) -> Vec<Rat> {
    let mut v: Vec<Rat> = pts
        .points
        .iter()
        .map(|p| if x_axis { p.0.clone() } else { p.1.clone() })
        .collect();
    v.sort();
    v.dedup();
    v
}

fn range_masks(
    n: usize,
    coords: impl Iterator<Item = i64>,
    vals: &[i64],
) -> Vec<(usize, usize, VertexSet)> {
    let coords: Vec<i64> = coords.collect();
    let mut out = Vec::new();
    for i in 0..vals.len() {
        for j in i..vals.len() {
            let mut m = VertexSet::empty(n);
            for (p, &c) in coords.iter().enumerate() {
                if c >= vals[i] && c <= vals[j] {
                    m.insert(p);
                }
            }
            out.push((i, j, m));
        }
    }
    out
}

/// Frame boundaries pass through point coordinates or between them; working
/// in doubled coordinates makes the between-value cuts exact integers.
fn frames(norm: &[(i64, i64)], add: &mut impl FnMut(VertexSet, RangeDesc)) {
    let n = norm.len();
    let xs = value_ranks(norm.iter().map(|p| p.0));
    let ys = value_ranks(norm.iter().map(|p| p.1));
    let x_slots = slot_positions(&xs);
    let y_slots = slot_positions(&ys);
    let px: Vec<i64> = norm.iter().map(|p| 2 * p.0).collect();
    let py: Vec<i64> = norm.iter().map(|p| 2 * p.1).collect();
    for (a, &xl) in x_slots.iter().enumerate() {
        for &xr in x_slots.iter().skip(a + 1) {
            for (c, &yb) in y_slots.iter().enumerate() {
                for &yt in y_slots.iter().skip(c + 1) {
                    let mut mask = VertexSet::empty(n);
                    for p in 0..n {
                        let on_vertical =
                            (px[p] == xl || px[p] == xr) && py[p] >= yb && py[p] <= yt;
                        let on_horizontal =
                            (py[p] == yb || py[p] == yt) && px[p] >= xl && px[p] <= xr;
                        if on_vertical || on_horizontal {
                            mask.insert(p);
                        }
                    }
                    if mask.is_empty() {
                        continue;
                    }
                    add(
                        mask,
                        RangeDesc::Frame {
                            x: (half_rat(xl), half_rat(xr)),
                            y: (half_rat(yb), half_rat(yt)),
                        },
                    );
                }
            }
        }
    }
}

/// Doubled-coordinate slot positions: below the smallest value, every
/// value, every midpoint between consecutive values, above the largest.
fn slot_positions(vals: &[i64]) -> Vec<i64> {
    let mut slots = Vec::with_capacity(2 * vals.len() + 1);
    if vals.is_empty() {
        return slots;
    }
    slots.push(2 * vals[0] - 2);
    for (i, &v) in vals.iter().enumerate() {
        slots.push(2 * v);
        if let Some(&next) = vals.get(i + 1) {
            slots.push(v + next);
        }
    }
    slots.push(2 * vals[vals.len() - 1] + 2);
    slots
}

fn half_rat(doubled: i64) -> Rat {
    Rat::new(BigInt::from(doubled), BigInt::from(2))
}

/// Axis-parallel segments: contiguous runs within one column or one row.
fn axis_segments(pts: &PointSet, norm: &[(i64, i64)], add: &mut impl FnMut(VertexSet, RangeDesc)) {
    let n = norm.len();
    let mut by_x: HashMap<i64, Vec<usize>> = HashMap::new();
    let mut by_y: HashMap<i64, Vec<usize>> = HashMap::new();
    for (p, &(x, y)) in norm.iter().enumerate() {
        by_x.entry(x).or_default().push(p);
        by_y.entry(y).or_default().push(p);
    }
    for (_, mut col) in by_x {
        col.sort_by_key(|&p| norm[p].1);
        for i in 0..col.len() {
            for j in i..col.len() {
                let mask = VertexSet::from_indices(n, &col[i..=j]);
                add(
                    mask,
                    RangeDesc::AxisSegment {
                        vertical: true,
                        at: pts.points[col[i]].0.clone(),
                        range: (
                            pts.points[col[i]].1.clone(),
                            pts.points[col[j]].1.clone(),
                        ),
                    },
                );
            }
        }
    }
    for (_, mut row) in by_y {
        row.sort_by_key(|&p| norm[p].0);
        for i in 0..row.len() {
            for j in i..row.len() {
                let mask = VertexSet::from_indices(n, &row[i..=j]);
                add(
                    mask,
                    RangeDesc::AxisSegment {
                        vertical: false,
                        at: pts.points[row[i]].1.clone(),
                        range: (
                            pts.points[row[i]].0.clone(),
                            pts.points[row[j]].0.clone(),
                        ),
                    },
                );
            }
        }
    }
}
