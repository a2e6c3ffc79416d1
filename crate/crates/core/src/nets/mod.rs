//! Epsilon-t-net constructions, the universal verifier, and the exact
//! branch-and-bound minimum oracle.

mod exact;
mod format;
mod layered;
mod lc;
mod random;
mod stab;

pub use exact::{min_hitting_set, min_net_exact};
pub use format::{parse_net, write_net};
pub use layered::{trivial_eps_t_net, vc1_eps_t_net, TrivialNet};
pub use lc::{lc_eps_t_net, LcMargin, LcNet};
pub use random::random_net;
pub use stab::{det_eps_net, direct_eps_t_net, StabNet};

use std::time::Instant;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// A family of t-element vertex subsets: the net certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSubsetFamily {
    pub t: usize,
    pub members: Vec<VertexSet>,
    /// construction tag + parameters, for reports
    pub provenance: String,
}

impl TSubsetFamily {
    /// Validates cardinalities, deduplicates and sorts the members.
    pub fn new(t: usize, members: Vec<VertexSet>, provenance: impl Into<String>) -> Result<Self> {
        for m in &members {
            if m.card() != t {
                return Err(Error::BadInput(format!(
                    "family member {:?} has cardinality {} != t = {t}",
                    m.indices(),
                    m.card()
                )));
            }
        }
        let mut members = members;
        members.sort_by(|a, b| a.cmp_lex(b));
        members.dedup();
        Ok(TSubsetFamily {
            t,
            members,
            provenance: provenance.into(),
        })
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Drops each member to its smallest contained vertex, giving a plain
    /// epsilon-net candidate (t = 1 family).
    pub fn downgrade_to_net(&self) -> TSubsetFamily {
        let members: Vec<VertexSet> = self
            .members
            .iter()
            .map(|m| {
                let first = m.iter().next().expect("members are nonempty");
                let mut s = m.clone();
                for i in m.indices() {
                    if i != first {
                        s.remove(i);
                    }
                }
                s
            })
            .collect();
        TSubsetFamily::new(1, members, format!("downgrade({})", self.provenance))
            .expect("singletons are valid members")
    }
}

/// Outcome of a verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct NetReport {
    pub eps: f64,
    pub t: usize,
    pub size: usize,
    pub valid: bool,
    /// first failing edge index when invalid
    pub witness: Option<usize>,
    pub runtime_ms: u128,
}

impl NetReport {
    pub fn csv_header() -> &'static str {
        "instance,method,eps,t,size,valid,runtime_ms"
    }

    pub fn to_csv_row(&self, instance: &str, method: &str) -> String {
        format!(
            "{instance},{method},{},{},{},{},{}",
            self.eps, self.t, self.size, self.valid, self.runtime_ms
        )
    }
}

/// Checks the defining property: every hyperedge of cardinality at least
/// eps * n contains some member of the family. The first failing edge index
/// is reported as a witness.
pub fn verify_net(h: &Hypergraph, eps: f64, t: usize, family: &TSubsetFamily) -> NetReport {
    let start = Instant::now();
    let threshold = eps * h.n() as f64;
    let mut valid = true;
    let mut witness = None;
    for (ei, e) in h.edges().iter().enumerate() {
        if (e.card() as f64) < threshold {
            continue;
        }
        if !family.members.iter().any(|s| s.is_subset_of(e)) {
            valid = false;
            witness = Some(ei);
            break;
        }
    }
    NetReport {
        eps,
        t,
        size: family.size(),
        valid,
        witness,
        runtime_ms: start.elapsed().as_millis(),
    }
}
