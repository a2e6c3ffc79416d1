//! Planar instances: point sets with exact rational coordinates, canonical
//! range families (one representative per realizable point subset), and the
//! compilation into abstract hypergraphs.

mod gnets;
mod ranges;

pub use gnets::{frames_eps2net, rectangles_eps2net};
pub use ranges::canonical_ranges;

use std::collections::HashSet;
use std::str::FromStr;

use num::{BigInt, BigRational, ToPrimitive};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

pub type Rat = BigRational;

/// Coordinates after clearing denominators must stay within this bound so
/// the orientation and in-circle predicates fit in i128.
const COORD_BOUND: i64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub points: Vec<(Rat, Rat)>,
}

impl PointSet {
    pub fn new(points: Vec<(Rat, Rat)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert((p.0.clone(), p.1.clone())) {
                return Err(Error::BadInput(format!(
                    "duplicate point ({}, {})",
                    p.0, p.1
                )));
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_integers(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| (Rat::from_integer(x.into()), Rat::from_integer(y.into())))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Scales all coordinates by the common denominator, yielding exact
    /// integer coordinates for the predicates.
    pub fn normalized(&self) -> Result<Vec<(i64, i64)>> {
        let mut lcm = BigInt::from(1);
        for (x, y) in &self.points {
            lcm = num::integer::lcm(lcm.clone(), x.denom().clone());
            lcm = num::integer::lcm(lcm, y.denom().clone());
        }
        let mut out = Vec::with_capacity(self.points.len());
        for (x, y) in &self.points {
            let xi = (x * &lcm).to_integer();
            let yi = (y * &lcm).to_integer();
            let (Some(xi), Some(yi)) = (xi.to_i64(), yi.to_i64()) else {
                return Err(Error::BadInput(
                    "coordinates too large after clearing denominators".into(),
                ));
            };
            if xi.abs() > COORD_BOUND || yi.abs() > COORD_BOUND {
                return Err(Error::BadInput(format!(
                    "normalized coordinate {xi},{yi} exceeds the exact-predicate bound"
                )));
            }
            out.push((xi, yi));
        }
        Ok(out)
    }
}

/// The supported canonical range classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RangeKind {
    Halfplane,
    Disk,
    AxisRect,
    Frame,
    AxisSegment,
}

impl FromStr for RangeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "halfplane" => Ok(RangeKind::Halfplane),
            "disk" => Ok(RangeKind::Disk),
            "rect" | "axis_rect" => Ok(RangeKind::AxisRect),
            "frame" => Ok(RangeKind::Frame),
            "segment" | "axis_segment" => Ok(RangeKind::AxisSegment),
            other => Err(Error::BadInput(format!("unknown range family '{other}'"))),
        }
    }
}

/// Witness parameters of one canonical range, for reporting.
#[derive(Clone, Debug, PartialEq)]
pub enum RangeDesc {
    /// prefix of size `count` in the order keyed by `normal`
    Halfplane { normal: (i64, i64), count: usize },
    /// circumdisk of three points, or diametral disk of two; `strict` marks
    /// the open variant
    Disk { through: Vec<usize>, strict: bool },
    AxisRect { x: (Rat, Rat), y: (Rat, Rat) },
    Frame { x: (Rat, Rat), y: (Rat, Rat) },
    /// vertical: fixed x, y-range; horizontal: fixed y, x-range
    AxisSegment { vertical: bool, at: Rat, range: (Rat, Rat) },
    /// the empty or full range, or a single point
    Trivial(String),
}

/// A canonical family: ranges deduplicated by the point subset they induce.
#[derive(Clone, Debug)]
pub struct RangeFamily {
    pub kind: RangeKind,
    /// (witness parameters, realized subset), one entry per distinct subset
    pub ranges: Vec<(RangeDesc, VertexSet)>,
}

/// A point set, its range family, and the compiled hypergraph.
#[derive(Clone, Debug)]
pub struct GeometricInstance {
    pub points: PointSet,
    pub kind: RangeKind,
    pub hyper: Hypergraph,
    /// edge index -> witness range parameters
    pub range_map: Vec<RangeDesc>,
}

/// Compiles a family into a hypergraph: one edge per distinct realized
/// subset, in the family's order.
pub fn compile(points: &PointSet, family: &RangeFamily) -> Result<GeometricInstance> {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut range_map = Vec::new();
    for (desc, mask) in &family.ranges {
        if seen.insert(mask.clone()) {
            edges.push(mask.clone());
            range_map.push(desc.clone());
        }
    }
    let hyper = Hypergraph::new(points.len(), edges)?;
    debug_assert!(hyper.is_dedup());
    Ok(GeometricInstance {
        points: points.clone(),
        kind: family.kind,
        hyper,
        range_map,
    })
}

/// Convenience: canonical ranges of the given kind, compiled.
pub fn compile_kind(points: &PointSet, kind: RangeKind) -> Result<GeometricInstance> {
    let fam = canonical_ranges(points, kind)?;
    compile(points, &fam)
}

/// The staircase lower-bound instance: n/2 points on each of the two
/// diagonal segments {(1-k/m, -k/m)} and {(-k/m, 1-k/m)}, k = 1..m.
pub fn staircase(n: usize) -> Result<PointSet> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::BadInput(format!(
            "staircase needs an even n >= 4, got {n}"
        )));
    }
    let m = (n / 2) as i64;
    let mut points = Vec::with_capacity(n);
    let rat = |num: i64, den: i64| Rat::new(BigInt::from(num), BigInt::from(den));
    for k in 1..=m {
        points.push((rat(m - k, m), rat(-k, m)));
    }
    for k in 1..=m {
        points.push((rat(-k, m), rat(m - k, m)));
    }
    PointSet::new(points)
}

/// side x side integer grid.
pub fn grid_points(side: usize) -> Result<PointSet> {
    let mut coords = Vec::with_capacity(side * side);
    for y in 0..side {
        for x in 0..side {
            coords.push((x as i64, y as i64));
        }
    }
    PointSet::from_integers(&coords)
}

/// n distinct points with uniform integer coordinates in [0, extent)^2.
pub fn random_points(rng: &mut impl rand::Rng, n: usize, extent: i64) -> Result<PointSet> {
    let mut seen = HashSet::new();
    let mut coords = Vec::with_capacity(n);
    let mut attempts = 0;
    while coords.len() < n {
        attempts += 1;
        if attempts > 100 * n + 1000 {
            return Err(Error::BadInput(format!(
                "cannot place {n} distinct points in a {extent}x{extent} box"
            )));
        }
        let p = (rng.gen_range(0..extent), rng.gen_range(0..extent));
        if seen.insert(p) {
            coords.push(p);
        }
    }
    PointSet::from_integers(&coords)
}

/// `.pts` format: one `p <x> <y>` line per point, rational coordinates.
pub fn write_pts(pts: &PointSet) -> String {
    let mut out = String::new();
    for (x, y) in &pts.points {
        out.push_str(&format!("p {x} {y}\n"));
    }
    out
}

pub fn parse_pts(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "p" {
            return Err(Error::Parse(format!(
                "line {}: expected 'p <x> <y>'",
                lineno + 1
            )));
        }
        let parse_rat = |s: &str| -> Result<Rat> {
            Rat::from_str(s).map_err(|_| Error::Parse(format!("line {}: bad rational '{s}'", lineno + 1)))
        };
        points.push((parse_rat(toks[1])?, parse_rat(toks[2])?));
    }
    PointSet::new(points)
}
