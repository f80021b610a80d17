//! Ground truth by exhaustive search.
//!
//! * [`rank_number`] / [`exists_ranking`]: exact rank numbers.
//! * [`classify_edge`] / [`good_edge_set`]: per-edge good/forbidden verdicts.
//! * [`max_good_set`]: the largest set of non-edges that can be added
//!   together without raising the rank number.
//! * [`verify_simultaneous`]: whether a given edge set can be added together,
//!   by search or by a witness/lower-bound certificate for larger graphs.
//! * [`enumerate_optimal_rankings`]: every optimal ranking, for uniqueness
//!   checks.
//!
//! Every search refuses graphs above its order cap instead of approximating.

mod certificate;
mod closure;
mod enumerate;
mod search;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use certificate::{verify_simultaneous, LowerBoundCertificate, SimultaneousCheck, VerificationMode};
pub use closure::{is_saturated, max_good_set, MaxGoodSet};
pub use enumerate::{
    automorphisms, census, count_optimal_rankings, enumerate_optimal_rankings, RankingCensus,
    MAX_AUTOMORPHISMS, MAX_RANKINGS,
};
pub use search::{RankSearch, SearchStats};

/// Default order cap for exact rank search.
pub const DEFAULT_CAP: usize = 20;
/// Default order cap for optimal-ranking enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    pub enumeration_cap: usize,
    pub use_memo: bool,
    /// Classify candidate edges on the rayon pool.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            use_memo: true,
            parallel: true,
        }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> Self {
        OracleConfig {
            cap,
            ..Self::default()
        }
    }

    pub(crate) fn check(&self, g: &Graph) -> Result<()> {
        if g.order() > self.cap {
            return Err(Error::OrderAboveCap {
                n: g.order(),
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// Exact rank number with search statistics.
pub fn rank_number(g: &Graph) -> Result<(u32, SearchStats)> {
    rank_number_with(g, &OracleConfig::default())
}

pub fn rank_number_with(g: &Graph, cfg: &OracleConfig) -> Result<(u32, SearchStats)> {
    cfg.check(g)?;
    let mut search = RankSearch::new(g, cfg.use_memo);
    let r = search.rank(g.vertices());
    Ok((r, search.stats()))
}

/// Exact rank number, searching below `hint + 1` first (a known ranking with
/// `hint` labels makes that search cheap), then without a cutoff if the hint
/// was too low.
pub fn rank_number_with_hint(g: &Graph, hint: u32, cfg: &OracleConfig) -> Result<(u32, SearchStats)> {
    cfg.check(g)?;
    let mut search = RankSearch::new(g, cfg.use_memo);
    let mut r = search.rank_below(g.vertices(), hint + 1);
    if r > hint {
        r = search.rank(g.vertices());
    }
    Ok((r, search.stats()))
}

/// Whether `g` has a ranking with at most `k` labels.
pub fn exists_ranking(g: &Graph, k: u32) -> Result<bool> {
    exists_ranking_with(g, k, &OracleConfig::default())
}

pub fn exists_ranking_with(g: &Graph, k: u32, cfg: &OracleConfig) -> Result<bool> {
    cfg.check(g)?;
    let mut search = RankSearch::new(g, cfg.use_memo);
    Ok(search.rank_below(g.vertices(), k + 1) <= k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Good,
    Forbidden,
}

/// `{"edge": [u, v], "base": k1, "augmented": k2, "verdict": "good|forbidden"}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeVerdict {
    pub edge: Edge,
    #[serde(rename = "base")]
    pub base_rank: u32,
    #[serde(rename = "augmented")]
    pub augmented_rank: u32,
    pub verdict: Verdict,
}

/// Good iff adding `e` alone leaves the rank number unchanged.
pub fn classify_edge(g: &Graph, e: Edge) -> Result<EdgeVerdict> {
    let cfg = OracleConfig::default();
    let (base, _) = rank_number_with(g, &cfg)?;
    classify_against(g, base, e, &cfg)
}

fn classify_against(g: &Graph, base: u32, e: Edge, cfg: &OracleConfig) -> Result<EdgeVerdict> {
    if g.contains_edge(e) {
        return Err(Error::EdgeAlreadyPresent(e));
    }
    let (aug, _) = g.add_edges(&[e])?;
    // Adding one edge raises the rank number by at most one.
    let augmented = if exists_ranking_with(&aug, base, cfg)? {
        base
    } else {
        rank_number_with_hint(&aug, base + 1, cfg)?.0
    };
    Ok(EdgeVerdict {
        edge: e,
        base_rank: base,
        augmented_rank: augmented,
        verdict: if augmented == base {
            Verdict::Good
        } else {
            Verdict::Forbidden
        },
    })
}

/// Verdicts for every non-edge, in lexicographic edge order.
pub fn classify_all(g: &Graph, cfg: &OracleConfig) -> Result<Vec<EdgeVerdict>> {
    let (base, _) = rank_number_with(g, cfg)?;
    classify_candidates(g, base, &g.non_edges(), cfg)
}

pub fn classify_candidates(
    g: &Graph,
    base: u32,
    candidates: &[Edge],
    cfg: &OracleConfig,
) -> Result<Vec<EdgeVerdict>> {
    if cfg.parallel {
        candidates
            .par_iter()
            .map(|&e| classify_against(g, base, e, cfg))
            .collect()
    } else {
        candidates
            .iter()
            .map(|&e| classify_against(g, base, e, cfg))
            .collect()
    }
}

/// Per-edge classification of all non-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoodEdgeReport {
    pub base_rank: u32,
    pub good: Vec<Edge>,
    pub verdicts: Vec<EdgeVerdict>,
}

impl GoodEdgeReport {
    pub fn forbidden(&self) -> Vec<Edge> {
        self.verdicts
            .iter()
            .filter(|v| v.verdict == Verdict::Forbidden)
            .map(|v| v.edge)
            .collect()
    }
}

pub fn good_edge_set(g: &Graph) -> Result<GoodEdgeReport> {
    good_edge_set_with(g, &OracleConfig::default())
}

pub fn good_edge_set_with(g: &Graph, cfg: &OracleConfig) -> Result<GoodEdgeReport> {
    let verdicts = classify_all(g, cfg)?;
    let base_rank = match verdicts.first() {
        Some(v) => v.base_rank,
        None => rank_number_with(g, cfg)?.0,
    };
    let good = verdicts
        .iter()
        .filter(|v| v.verdict == Verdict::Good)
        .map(|v| v.edge)
        .collect();
    Ok(GoodEdgeReport {
        base_rank,
        good,
        verdicts,
    })
}
