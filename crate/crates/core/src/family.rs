//! The four graph families and their canonical vertex numbering.
//!
//! * `path:k`: `P_{2^k - 1}` numbered along the path.
//! * `cycle:k`: `C_{2^k}` numbered along the cycle.
//! * `multipartite:m1,m2,...`: `K_{m_1,...,m_t}`, parts numbered consecutively,
//!   largest part first.
//! * `joined:n`: two copies of `K_n`, `w_1..w_n` as `1..=n` and `v_1..v_n` as
//!   `n+1..=2n`, joined by the edge `{w_n, v_n}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::ranking::{self, Ranking};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    #[serde(rename = "path")]
    Path2kMinus1 {
        k: u32,
    },
    #[serde(rename = "cycle")]
    Cycle2k {
        k: u32,
    },
    Multipartite {
        parts: Vec<usize>,
    },
    #[serde(rename = "joined")]
    JoinedCliques {
        n: usize,
    },
}

impl FamilySpec {
    /// Checks the parameter ranges and sorts multipartite parts descending.
    pub fn normalized(&self) -> Result<FamilySpec> {
        Ok(match self {
            FamilySpec::Path2kMinus1 { k } => {
                ranking::check_power_order("k", *k, 1)?;
                self.clone()
            }
            FamilySpec::Cycle2k { k } => {
                ranking::check_power_order("k", *k, 2)?;
                self.clone()
            }
            FamilySpec::Multipartite { parts } => FamilySpec::Multipartite {
                parts: normalize_parts(parts)?,
            },
            FamilySpec::JoinedCliques { n } => {
                check_clique_order(*n)?;
                self.clone()
            }
        })
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path2kMinus1 { k } => (1usize << k) - 1,
            FamilySpec::Cycle2k { k } => 1usize << k,
            FamilySpec::Multipartite { parts } => parts.iter().sum(),
            FamilySpec::JoinedCliques { n } => 2 * n,
        }
    }

    /// The rank number the closed-form ranking achieves.
    pub fn rank_number(&self) -> Result<u32> {
        Ok(match self.normalized()? {
            FamilySpec::Path2kMinus1 { k } => k,
            FamilySpec::Cycle2k { k } => k + 1,
            FamilySpec::Multipartite { parts } => (parts.iter().sum::<usize>() - parts[0] + 1) as u32,
            FamilySpec::JoinedCliques { n } => n as u32 + 1,
        })
    }

    /// Printable name of vertex `id` under this family's numbering.
    pub fn vertex_name(&self, id: usize) -> String {
        match self {
            FamilySpec::JoinedCliques { n } if id > *n => format!("v{}", id - n),
            FamilySpec::JoinedCliques { .. } => format!("w{id}"),
            _ => format!("v{id}"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path2kMinus1 { k } => write!(f, "path:{k}"),
            FamilySpec::Cycle2k { k } => write!(f, "cycle:{k}"),
            FamilySpec::Multipartite { parts } => {
                let p: Vec<String> = parts.iter().map(|m| m.to_string()).collect();
                write!(f, "multipartite:{}", p.join(","))
            }
            FamilySpec::JoinedCliques { n } => write!(f, "joined:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `path:4`, `cycle:4`, `multipartite:4,3,2` or `joined:5`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("expected <kind>:<params>, got {s:?}")))?;
        let int = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidFamily(format!("bad integer {t:?} in {s:?}")))
        };
        let spec = match kind {
            "path" => FamilySpec::Path2kMinus1 { k: int(args)? as u32 },
            "cycle" => FamilySpec::Cycle2k { k: int(args)? as u32 },
            "multipartite" => FamilySpec::Multipartite {
                parts: args.split(',').map(int).collect::<Result<_>>()?,
            },
            "joined" => FamilySpec::JoinedCliques { n: int(args)? },
            other => return Err(Error::InvalidFamily(format!("unknown family kind {other:?}"))),
        };
        spec.normalized()
    }
}

pub(crate) fn normalize_parts(parts: &[usize]) -> Result<Vec<usize>> {
    if parts.len() < 2 {
        return Err(Error::InvalidFamily(
            "a multipartite graph needs at least two parts".into(),
        ));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidFamily("part sizes must be positive".into()));
    }
    let total: usize = parts.iter().sum();
    if total > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n: total,
            max: MAX_ORDER,
        });
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sorted)
}

pub(crate) fn check_clique_order(n: usize) -> Result<()> {
    if n < 2 || 2 * n > MAX_ORDER {
        return Err(Error::out_of_range("n", n, format!("2..={}", MAX_ORDER / 2)));
    }
    Ok(())
}

/// Vertex ranges `(first, last)` of each multipartite part, largest first.
pub fn part_ranges(parts: &[usize]) -> Result<Vec<(usize, usize)>> {
    let parts = normalize_parts(parts)?;
    let mut start = 1;
    Ok(parts
        .iter()
        .map(|&m| {
            let r = (start, start + m - 1);
            start += m;
            r
        })
        .collect())
}

/// The concrete graph of a family.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    match spec.normalized()? {
        FamilySpec::Path2kMinus1 { k } => Graph::path((1 << k) - 1),
        FamilySpec::Cycle2k { k } => Graph::cycle(1 << k),
        FamilySpec::Multipartite { parts } => {
            let ranges = part_ranges(&parts)?;
            let total = parts.iter().sum();
            let mut edges = Vec::new();
            for (i, &(a0, a1)) in ranges.iter().enumerate() {
                for &(b0, b1) in &ranges[i + 1..] {
                    for u in a0..=a1 {
                        edges.extend((b0..=b1).map(|v| (u, v)));
                    }
                }
            }
            Graph::from_edges(total, edges)
        }
        FamilySpec::JoinedCliques { n } => {
            let clique = |off: usize| (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| (a + off, b + off)));
            Graph::from_edges(2 * n, clique(0).chain(clique(n)).chain([(n, 2 * n)]))
        }
    }
}

/// The closed-form optimal ranking of a family.
pub fn standard_ranking(spec: &FamilySpec) -> Result<Ranking> {
    match spec.normalized()? {
        FamilySpec::Path2kMinus1 { k } => ranking::standard_path_ranking(k),
        FamilySpec::Cycle2k { k } => ranking::standard_cycle_ranking(k),
        FamilySpec::Multipartite { parts } => ranking::multipartite_ranking(&parts),
        FamilySpec::JoinedCliques { n } => ranking::joined_cliques_ranking(n),
    }
}
