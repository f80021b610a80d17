//! Simultaneous addition of an edge set, checked by search or by certificate.
//!
//! In certificate mode a witness ranking of `G ∪ S` with top label `L` shows
//! `χ_r(G ∪ S) <= L`, and a subgraph of `G` with known rank number `>= L`
//! shows `χ_r(G) >= L`; together with monotonicity both equal `L`.

use serde::Serialize;

use super::{exists_ranking_with, rank_number_with, OracleConfig};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Edge, Graph};
use crate::ranking::{is_valid_ranking, Ranking};

/// A subgraph of the host graph whose rank number is known in closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "lowercase")]
pub enum LowerBoundCertificate {
    /// Vertices in path order; rank `floor(log2 len) + 1`.
    Path(Vec<usize>),
    /// Vertices in cycle order; rank `2 + floor(log2(len - 1))`.
    Cycle(Vec<usize>),
    /// Pairwise adjacent vertices; rank `len`.
    Clique(Vec<usize>),
}

impl LowerBoundCertificate {
    /// The rank number of the certified subgraph.
    pub fn value(&self) -> u32 {
        let log2 = |n: usize| usize::BITS - 1 - n.leading_zeros();
        match self {
            LowerBoundCertificate::Path(vs) if vs.is_empty() => 0,
            LowerBoundCertificate::Path(vs) => log2(vs.len()) + 1,
            LowerBoundCertificate::Cycle(vs) => 2 + log2(vs.len() - 1),
            LowerBoundCertificate::Clique(vs) => vs.len() as u32,
        }
    }

    /// Checks that the certified subgraph really lies in `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let vs = match self {
            LowerBoundCertificate::Path(vs)
            | LowerBoundCertificate::Cycle(vs)
            | LowerBoundCertificate::Clique(vs) => vs,
        };
        for &v in vs {
            g.check_vertex(v)?;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return Err(Error::InvalidCertificate("repeated vertex".into()));
        }
        let missing = |a: usize, b: usize| Error::InvalidCertificate(format!("missing edge {{v{a}, v{b}}}"));
        match self {
            LowerBoundCertificate::Path(_) => {
                for w in vs.windows(2) {
                    if !g.has_edge(w[0], w[1]) {
                        return Err(missing(w[0], w[1]));
                    }
                }
            }
            LowerBoundCertificate::Cycle(_) => {
                if vs.len() < 3 {
                    return Err(Error::InvalidCertificate("a cycle needs 3 vertices".into()));
                }
                for i in 0..vs.len() {
                    let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                    if !g.has_edge(a, b) {
                        return Err(missing(a, b));
                    }
                }
            }
            LowerBoundCertificate::Clique(_) => {
                for (i, &a) in vs.iter().enumerate() {
                    for &b in &vs[i + 1..] {
                        if !g.has_edge(a, b) {
                            return Err(missing(a, b));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The whole host graph, for the path and cycle families.
    pub fn for_family(spec: &FamilySpec) -> Option<LowerBoundCertificate> {
        let n = spec.order();
        match spec {
            FamilySpec::Path2kMinus1 { .. } => Some(LowerBoundCertificate::Path((1..=n).collect())),
            FamilySpec::Cycle2k { .. } => Some(LowerBoundCertificate::Cycle((1..=n).collect())),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationMode {
    /// Exact rank numbers of both graphs; subject to the order cap.
    Exact,
    Certificate {
        witness: Ranking,
        lower: LowerBoundCertificate,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimultaneousCheck {
    pub mode: &'static str,
    /// `χ_r(G)`, or the certified lower bound.
    pub base: u32,
    /// `χ_r(G ∪ S)`, or the witness's top label.
    pub augmented: u32,
    pub holds: bool,
    /// Edges of `S` that were already in `G`.
    pub already_present: Vec<Edge>,
}

/// Whether adding all of `edges` at once leaves the rank number unchanged.
pub fn verify_simultaneous(
    g: &Graph,
    edges: &[Edge],
    mode: &VerificationMode,
    cfg: &OracleConfig,
) -> Result<SimultaneousCheck> {
    let (h, already_present) = g.add_edges(edges)?;
    match mode {
        VerificationMode::Exact => {
            let (base, _) = rank_number_with(g, cfg)?;
            let augmented = if exists_ranking_with(&h, base, cfg)? {
                base
            } else {
                rank_number_with(&h, cfg)?.0
            };
            Ok(SimultaneousCheck {
                mode: "exact",
                base,
                augmented,
                holds: augmented == base,
                already_present,
            })
        }
        VerificationMode::Certificate { witness, lower } => {
            lower.check(g)?;
            let valid = is_valid_ranking(&h, witness)?;
            let base = lower.value();
            let augmented = witness.max_label();
            Ok(SimultaneousCheck {
                mode: "certificate",
                base,
                augmented,
                holds: valid && augmented <= base,
                already_present,
            })
        }
    }
}
