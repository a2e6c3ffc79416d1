//! Layered constructions: the trivial epsilon-t-net from t pairwise
//! disjoint epsilon-nets, and the size-(t ceil(1/eps) + 1) construction for
//! VC-dimension-1 hypergraphs.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::nets::exact::min_hitting_set;
use crate::nets::TSubsetFamily;
use crate::set::VertexSet;
use crate::vcdim::is_vc_at_most;

const PRODUCT_GUARD: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct TrivialNet {
    pub family: TSubsetFamily,
    pub layer_sizes: Vec<usize>,
}

/// Builds t pairwise disjoint epsilon-nets, each hitting what remains of
/// every heavy edge after the earlier layers are deleted (heaviness judged
/// against the original n throughout), and returns all transversal
/// t-subsets of the layers.
pub fn trivial_eps_t_net(h: &Hypergraph, eps: f64, t: usize) -> Result<TrivialNet> {
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
    let heavy: Vec<&VertexSet> = h
        .heavy_edges(eps)
        .into_iter()
        .map(|i| &h.edges()[i])
        .collect();
    if heavy.is_empty() {
        return Ok(TrivialNet {
            family: TSubsetFamily::new(t, vec![], format!("trivial(eps={eps},t={t})"))?,
            layer_sizes: vec![0; t],
        });
    }
    let mut used = VertexSet::empty(n);
    let mut layers: Vec<Vec<usize>> = Vec::with_capacity(t);
    for round in 0..t {
        let targets: Vec<VertexSet> = heavy.iter().map(|e| e.minus(&used)).collect();
        if targets.iter().any(|r| r.is_empty()) {
            return Err(Error::Infeasible(format!(
                "a heavy edge ran out of fresh vertices before layer {}",
                round + 1
            )));
        }
        let layer = greedy_vertex_hitting(n, &targets, &used);
        for &v in &layer {
            used.insert(v);
        }
        layers.push(layer);
    }
    let product: usize = layers.iter().map(Vec::len).product();
    if product > PRODUCT_GUARD {
        return Err(Error::TooLarge(format!(
            "transversal family of {product} members exceeds the {PRODUCT_GUARD} guard"
        )));
    }
    let mut members = Vec::with_capacity(product);
    let mut pick = vec![0usize; t];
    loop {
        let idx: Vec<usize> = pick.iter().enumerate().map(|(j, &k)| layers[j][k]).collect();
        members.push(VertexSet::from_indices(n, &idx));
        // advance the odometer
        let mut j = t;
        loop {
            if j == 0 {
                let layer_sizes = layers.iter().map(Vec::len).collect();
                let family =
                    TSubsetFamily::new(t, members, format!("trivial(eps={eps},t={t})"))?;
                return Ok(TrivialNet {
                    family,
                    layer_sizes,
                });
            }
            j -= 1;
            pick[j] += 1;
            if pick[j] < layers[j].len() {
                break;
            }
            pick[j] = 0;
        }
    }
}

/// Greedy hitting set over vertices: repeatedly takes the unused vertex
/// covering the most unhit targets (ties to the lowest index).
fn greedy_vertex_hitting(n: usize, targets: &[VertexSet], used: &VertexSet) -> Vec<usize> {
    let mut unhit: Vec<bool> = vec![true; targets.len()];
    let mut remaining = targets.len();
    let mut picked = Vec::new();
    while remaining > 0 {
        let mut best = None;
        let mut best_gain = 0usize;
        for v in 0..n {
            if used.contains(v) || picked.contains(&v) {
                continue;
            }
            let gain = targets
                .iter()
                .zip(unhit.iter())
                .filter(|(tgt, &u)| u && tgt.contains(v))
                .count();
            if gain > best_gain {
                best_gain = gain;
                best = Some(v);
            }
        }
        let v = best.expect("nonempty targets always have a candidate");
        picked.push(v);
        for (k, tgt) in targets.iter().enumerate() {
            if unhit[k] && tgt.contains(v) {
                unhit[k] = false;
                remaining -= 1;
            }
        }
    }
    picked.sort_unstable();
    picked
}

/// Minimum hitting set over vertices for the given targets, restricted to
/// vertices outside `used`.
fn exact_vertex_hitting(n: usize, targets: &[VertexSet], used: &VertexSet) -> Option<Vec<usize>> {
    let candidates: Vec<usize> = (0..n).filter(|&v| !used.contains(v)).collect();
    let coverage: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&v| {
            (0..targets.len())
                .filter(|&k| targets[k].contains(v))
                .collect()
        })
        .collect();
    let sol = min_hitting_set(&coverage, targets.len())?;
    Some(sol.into_iter().map(|c| candidates[c]).collect())
}

/// Epsilon-t-net of size at most t*ceil(1/eps) + 1 for hypergraphs of
/// VC-dimension exactly 1: grow a vertex set N_t hitting every heavy edge
/// at least t times, one layer of at most ceil(1/eps) vertices per round,
/// then take the lexicographically first t-subset of every trace member of
/// N_t with at least t vertices.
pub fn vc1_eps_t_net(h: &Hypergraph, eps: f64, t: usize) -> Result<TSubsetFamily> {
    if t == 0 {
        return Err(Error::Domain("t must be >= 1".into()));
    }
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::Domain(format!(
            "vc1 construction needs eps in (0, 1/2], got {eps}"
        )));
    }
    let n = h.n();
    let cap = (1.0 / eps).ceil() as usize;
    if n < t * cap {
        return Err(Error::Domain(format!(
            "vc1 construction needs n >= t*ceil(1/eps) = {}, got {n}",
            t * cap
        )));
    }
    if !is_vc_at_most(h, 1) {
        return Err(Error::WrongDimension(
            "vc1 construction needs VC-dimension exactly 1 (found >= 2)".into(),
        ));
    }
    if is_vc_at_most(h, 0) {
        return Err(Error::WrongDimension(
            "vc1 construction needs VC-dimension exactly 1 (found 0)".into(),
        ));
    }
    let heavy: Vec<&VertexSet> = h
        .heavy_edges(eps)
        .into_iter()
        .map(|i| &h.edges()[i])
        .collect();
    let provenance = format!("vc1(eps={eps},t={t})");
    if heavy.is_empty() {
        return TSubsetFamily::new(t, vec![], provenance);
    }
    let mut hit = VertexSet::empty(n);
    for round in 1..=t {
        // edges hit fewer than `round` times so far (exactly round-1 by the
        // loop invariant); the layer must hit each of their remainders
        let targets: Vec<VertexSet> = heavy
            .iter()
            .filter(|e| e.intersection_card(&hit) < round)
            .map(|e| e.minus(&hit))
            .collect();
        if targets.is_empty() {
            continue;
        }
        if targets.iter().any(|r| r.is_empty()) {
            return Err(Error::Infeasible(format!(
                "a heavy edge ran out of fresh vertices in round {round}"
            )));
        }
        let mut layer = greedy_vertex_hitting(n, &targets, &hit);
        if layer.len() > cap {
            layer = exact_vertex_hitting(n, &targets, &hit).ok_or_else(|| {
                Error::Infeasible("layer hitting set infeasible".into())
            })?;
        }
        if layer.len() > cap {
            return Err(Error::SizeExceeded(format!(
                "layer {round} needs {} vertices, above ceil(1/eps) = {cap}",
                layer.len()
            )));
        }
        for v in layer {
            hit.insert(v);
        }
    }
    // one t-subset from each trace member with >= t vertices
    let mut members = Vec::new();
    for tr in h.trace(&hit) {
        if tr.card() >= t {
            let idx = tr.indices();
            members.push(VertexSet::from_indices(n, &idx[..t]));
        }
    }
    TSubsetFamily::new(t, members, provenance)
}
