//! Programmatic checks of the closed-form claims against the oracle.
//!
//! Each claim carries a stable id such as `path.count.k4`; a suite is a list
//! of claims, each with expected and observed values.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::constructive::{self, Reading};
use crate::error::{Error, Result};
use crate::family::{self, FamilySpec};
use crate::graph::{Edge, Graph};
use crate::oracle::{self, LowerBoundCertificate, OracleConfig, Verdict, VerificationMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PaperAll,
    Path,
    Cycle,
    Multipartite,
    Joined,
    Uniqueness,
    Formulas,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::PaperAll,
        Suite::Path,
        Suite::Cycle,
        Suite::Multipartite,
        Suite::Joined,
        Suite::Uniqueness,
        Suite::Formulas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperAll => "paper-all",
            Suite::Path => "path",
            Suite::Cycle => "cycle",
            Suite::Multipartite => "multipartite",
            Suite::Joined => "joined",
            Suite::Uniqueness => "uniqueness",
            Suite::Formulas => "formulas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl Claim {
    fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        Claim {
            id: id.into(),
            statement: statement.into(),
            pass: expected == observed,
            expected,
            observed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub max_k: u32,
    pub passed: usize,
    pub failed: usize,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {:<32} expected {} observed {}  ({})\n",
                c.id, c.expected, c.observed, c.statement
            ));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.suite, self.passed, self.failed
        ));
        out
    }
}

/// Runs one suite. `max_k` bounds the path and cycle exponents (up to 5);
/// oracle claims are skipped for graphs above `cfg.cap`.
pub fn run(suite: Suite, max_k: u32, cfg: &OracleConfig) -> Result<Report> {
    if !(3..=5).contains(&max_k) {
        return Err(Error::out_of_range("max_k", max_k, "3..=5"));
    }
    let mut claims = Vec::new();
    let suites: &[Suite] = match suite {
        Suite::PaperAll => &[
            Suite::Formulas,
            Suite::Path,
            Suite::Cycle,
            Suite::Multipartite,
            Suite::Joined,
            Suite::Uniqueness,
        ],
        _ => std::slice::from_ref(&suite),
    };
    for s in suites {
        match s {
            Suite::Formulas => formula_claims(&mut claims)?,
            Suite::Path => path_claims(max_k, cfg, &mut claims)?,
            Suite::Cycle => cycle_claims(max_k, cfg, &mut claims)?,
            Suite::Multipartite => multipartite_claims(9.min(cfg.cap), cfg, &mut claims)?,
            Suite::Joined => joined_claims(cfg, &mut claims)?,
            Suite::Uniqueness => uniqueness_claims(max_k, cfg, &mut claims)?,
            Suite::PaperAll => unreachable!("expanded above"),
        }
    }
    let passed = claims.iter().filter(|c| c.pass).count();
    Ok(Report {
        suite,
        max_k,
        passed,
        failed: claims.len() - passed,
        claims,
    })
}

fn fmt_edges(es: &[Edge]) -> String {
    let parts: Vec<String> = es.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
    format!("[{}]", parts.join(" "))
}

fn formula_claims(out: &mut Vec<Claim>) -> Result<()> {
    for k in 3..=10u32 {
        let direct = constructive::mu_path(k)?;
        let rec = constructive::mu_path_recurrence(k)?;
        let sum: i64 = (4..=k + 1)
            .map(|j| (1i64 << (k + 1 - j)) * ((1i64 << (j - 1)) - 4))
            .sum();
        out.push(Claim::new(
            format!("formula.path.k{k}"),
            "closed form, recurrence and level sum agree",
            format!("{direct}/{direct}/{direct}"),
            format!("{direct}/{rec}/{sum}"),
        ));
        out.push(Claim::new(
            format!("formula.cycle.k{k}"),
            "cycle count is path count plus 2^k - 3",
            direct + (1i64 << k) - 3,
            constructive::mu_cycle(k)?,
        ));
    }
    Ok(())
}

fn simultaneous(
    spec: &FamilySpec,
    g: &Graph,
    edges: &[Edge],
    cfg: &OracleConfig,
) -> Result<oracle::SimultaneousCheck> {
    let mode = if g.order() <= cfg.cap {
        VerificationMode::Exact
    } else {
        let lower = LowerBoundCertificate::for_family(spec).ok_or(Error::OrderAboveCap {
            n: g.order(),
            cap: cfg.cap,
        })?;
        VerificationMode::Certificate {
            witness: family::standard_ranking(spec)?,
            lower,
        }
    };
    oracle::verify_simultaneous(g, edges, &mode, cfg)
}

fn path_claims(max_k: u32, cfg: &OracleConfig, out: &mut Vec<Claim>) -> Result<()> {
    for k in 3..=max_k {
        let spec = FamilySpec::Path2kMinus1 { k };
        let g = family::build_family(&spec)?;
        let set = constructive::path_good_edges(k, Reading::Corrected)?;
        let edges = set.edges();
        out.push(Claim::new(
            format!("path.count.k{k}"),
            "constructed good edges match (k-3)2^k + 4",
            constructive::mu_path(k)?,
            set.len(),
        ));
        let levels = constructive::level_union(k, Reading::Corrected)?;
        out.push(Claim::new(
            format!("path.levels.k{k}"),
            "position rules and level decomposition give the same set",
            "[]",
            fmt_edges(&symmetric_difference(&edges, &levels.edges())),
        ));
        let check = simultaneous(&spec, &g, &edges, cfg)?;
        out.push(Claim::new(
            format!("path.simultaneous.k{k}"),
            format!(
                "adding all good edges keeps the rank number at {} ({} mode)",
                k, check.mode
            ),
            true,
            check.holds && check.augmented == k,
        ));
        if g.order() > cfg.cap {
            continue;
        }
        let (rank, _) = oracle::rank_number_with(&g, cfg)?;
        out.push(Claim::new(
            format!("path.rank.k{k}"),
            "rank number of P_{2^k-1} is k",
            k,
            rank,
        ));
        let rep = oracle::good_edge_set_with(&g, cfg)?;
        out.push(Claim::new(
            format!("path.oracle.k{k}"),
            "constructed set equals the oracle's per-edge good set",
            "[]",
            fmt_edges(&symmetric_difference(&edges, &rep.good)),
        ));
        let best = oracle::max_good_set(&g, cfg)?;
        out.push(Claim::new(
            format!("path.maximum.k{k}"),
            "largest simultaneously addable set has the constructed size",
            set.len(),
            best.mu(),
        ));
    }
    Ok(())
}

fn cycle_claims(max_k: u32, cfg: &OracleConfig, out: &mut Vec<Claim>) -> Result<()> {
    for k in 3..=max_k {
        let spec = FamilySpec::Cycle2k { k };
        let g = family::build_family(&spec)?;
        let set = constructive::cycle_good_edges(k, Reading::Corrected)?;
        let edges = set.edges();
        out.push(Claim::new(
            format!("cycle.count.k{k}"),
            "constructed good edges match (k-2)2^k + 1",
            constructive::mu_cycle(k)?,
            set.len(),
        ));
        let check = simultaneous(&spec, &g, &edges, cfg)?;
        out.push(Claim::new(
            format!("cycle.simultaneous.k{k}"),
            format!(
                "adding all good edges keeps the rank number at {} ({} mode)",
                k + 1,
                check.mode
            ),
            true,
            check.holds && check.augmented == k + 1,
        ));
        if g.order() > cfg.cap {
            continue;
        }
        let (rank, _) = oracle::rank_number_with(&g, cfg)?;
        out.push(Claim::new(
            format!("cycle.rank.k{k}"),
            "rank number of C_{2^k} is k + 1",
            k + 1,
            rank,
        ));
        let best = oracle::max_good_set(&g, cfg)?;
        out.push(Claim::new(
            format!("cycle.maximum.k{k}"),
            "largest simultaneously addable set has the constructed size",
            set.len(),
            best.mu(),
        ));
        out.push(Claim::new(
            format!("cycle.saturated.k{k}"),
            "every other non-edge is forbidden once the set is added",
            true,
            oracle::is_saturated(&g, &edges, cfg)?,
        ));
        let path = constructive::path_good_edges(k, Reading::Corrected)?.edges();
        let (base, _) = oracle::rank_number_with(&g, cfg)?;
        let not_good: Vec<Edge> = oracle::classify_candidates(&g, base, &path, cfg)?
            .into_iter()
            .filter(|v| v.verdict != Verdict::Good)
            .map(|v| v.edge)
            .collect();
        out.push(Claim::new(
            format!("cycle.inherits.k{k}"),
            "every good edge of the path is good for the cycle",
            "[]",
            fmt_edges(&not_good),
        ));
    }
    Ok(())
}

/// All part profiles (descending, at least two parts) with total at most `max_total`.
pub fn part_profiles(max_total: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() >= 2 {
            out.push(current.clone());
        }
        for p in (1..=max_part.min(remaining)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_total, max_total, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        a.iter()
            .sum::<usize>()
            .cmp(&b.iter().sum())
            .then_with(|| b.cmp(a))
    });
    out
}

/// Per-profile outcome of the multipartite partition check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCheck {
    pub parts: Vec<usize>,
    pub rank: u32,
    pub expected_rank: u32,
    /// Largest part is shared by another part.
    pub tied: bool,
    /// Per-edge good set against the bare graph.
    pub per_edge_good: usize,
    /// Constructed good set can be added at once and saturates.
    pub partition_holds: bool,
    pub maximum: usize,
    pub formula: i64,
}

impl PartitionCheck {
    pub fn pass(&self) -> bool {
        self.partition_holds && self.rank == self.expected_rank && self.maximum as i64 == self.formula
    }
}

/// With a unique largest part, the per-edge verdicts must be exactly "inside
/// the largest part forbidden, inside any other part good". With a tie, the
/// edges inside every part but the first are added together, and then every
/// pair inside the first part must be forbidden.
pub fn check_partition(parts: &[usize], cfg: &OracleConfig) -> Result<PartitionCheck> {
    let spec = FamilySpec::Multipartite {
        parts: parts.to_vec(),
    }
    .normalized()?;
    let FamilySpec::Multipartite { parts } = spec.clone() else {
        unreachable!()
    };
    let g = family::build_family(&spec)?;
    let good = constructive::multipartite_good_edges(&parts)?;
    let forbidden = constructive::multipartite_forbidden_edges(&parts)?;
    let tied = parts.len() > 1 && parts[0] == parts[1];
    let (rank, _) = oracle::rank_number_with(&g, cfg)?;
    let verdicts = oracle::classify_all(&g, cfg)?;
    let per_edge_good = verdicts.iter().filter(|v| v.verdict == Verdict::Good).count();
    let partition_holds = if tied {
        let kept = oracle::verify_simultaneous(&g, &good.edges(), &VerificationMode::Exact, cfg)?.holds;
        kept && oracle::is_saturated(&g, &good.edges(), cfg)?
    } else {
        verdicts.iter().all(|v| match v.verdict {
            Verdict::Good => good.contains(v.edge),
            Verdict::Forbidden => forbidden.contains(v.edge),
        }) && verdicts.len() == good.len() + forbidden.len()
    };
    Ok(PartitionCheck {
        rank,
        expected_rank: spec.rank_number()?,
        tied,
        per_edge_good,
        partition_holds,
        maximum: oracle::max_good_set(&g, cfg)?.mu(),
        formula: constructive::mu_multipartite(&parts)?,
        parts,
    })
}

fn multipartite_claims(max_total: usize, cfg: &OracleConfig, out: &mut Vec<Claim>) -> Result<()> {
    for parts in part_profiles(max_total) {
        let c = check_partition(&parts, cfg)?;
        let name = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        out.push(Claim::new(
            format!("multipartite.rank.{name}"),
            "rank number is n - m_1 + 1",
            c.expected_rank,
            c.rank,
        ));
        out.push(Claim::new(
            format!("multipartite.partition.{name}"),
            if c.tied {
                "other parts' pairs addable together, first part then forbidden"
            } else {
                "largest part's pairs forbidden, other parts' pairs good"
            },
            true,
            c.partition_holds,
        ));
        out.push(Claim::new(
            format!("multipartite.maximum.{name}"),
            "largest addable set has sum over smaller parts of C(m_i, 2)",
            c.formula,
            c.maximum,
        ));
    }
    Ok(())
}

fn joined_claims(cfg: &OracleConfig, out: &mut Vec<Claim>) -> Result<()> {
    for n in 2..=5usize {
        let spec = FamilySpec::JoinedCliques { n };
        let g = family::build_family(&spec)?;
        if g.order() > cfg.cap {
            continue;
        }
        let set = constructive::joined_good_edges(n)?;
        let edges = set.edges();
        let (rank, _) = oracle::rank_number_with(&g, cfg)?;
        out.push(Claim::new(
            format!("joined.rank.n{n}"),
            "rank number is n + 1",
            n + 1,
            rank,
        ));
        out.push(Claim::new(
            format!("joined.count.n{n}"),
            "constructed good edges match 2(n - 1)",
            constructive::mu_joined(n)?,
            set.len(),
        ));
        let check = oracle::verify_simultaneous(&g, &edges, &VerificationMode::Exact, cfg)?;
        out.push(Claim::new(
            format!("joined.simultaneous.n{n}"),
            "adding all good edges keeps the rank number",
            n + 1,
            check.augmented,
        ));
        out.push(Claim::new(
            format!("joined.maximum.n{n}"),
            "largest simultaneously addable set has the constructed size",
            set.len(),
            oracle::max_good_set(&g, cfg)?.mu(),
        ));
        out.push(Claim::new(
            format!("joined.saturated.n{n}"),
            "every other non-edge is forbidden once the set is added",
            true,
            oracle::is_saturated(&g, &edges, cfg)?,
        ));
    }
    Ok(())
}

fn uniqueness_claims(max_k: u32, cfg: &OracleConfig, out: &mut Vec<Claim>) -> Result<()> {
    for k in 1..=max_k {
        let spec = FamilySpec::Path2kMinus1 { k };
        let g = family::build_family(&spec)?;
        if g.order() > cfg.enumeration_cap {
            continue;
        }
        let all = oracle::enumerate_optimal_rankings(&g, cfg)?;
        let standard = family::standard_ranking(&spec)?;
        out.push(Claim::new(
            format!("uniqueness.path.k{k}"),
            "the standard ranking is the only optimal ranking",
            "1 standard",
            format!(
                "{} {}",
                all.len(),
                if all == [standard] { "standard" } else { "other" }
            ),
        ));
    }
    for k in 2..=max_k {
        let g = family::build_family(&FamilySpec::Cycle2k { k })?;
        if g.order() > cfg.enumeration_cap {
            continue;
        }
        let c = oracle::census(&g, cfg)?;
        out.push(Claim::new(
            format!("uniqueness.cycle.k{k}"),
            "optimal rankings are the rotations of the standard one (raw/automorphism/label-swap classes)",
            format!("{}/1/{}", 1 << k, 1 << (k - 1)),
            format!("{}/{}/{}", c.raw, c.automorphism_classes, c.label_swap_classes),
        ));
    }
    Ok(())
}

/// Edges in exactly one of two sorted lists.
pub fn symmetric_difference(a: &[Edge], b: &[Edge]) -> Vec<Edge> {
    let mut out: Vec<Edge> = a
        .iter()
        .filter(|e| b.binary_search(e).is_err())
        .chain(b.iter().filter(|e| a.binary_search(e).is_err()))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        assert_eq!(part_profiles(3), vec![vec![1, 1], vec![2, 1], vec![1, 1, 1]]);
        assert!(part_profiles(9).contains(&vec![4, 3, 2]));
        assert!(part_profiles(9)
            .iter()
            .all(|p| p.len() >= 2 && p.iter().sum::<usize>() <= 9));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn partition_examples() {
        let cfg = OracleConfig::default();
        let c = check_partition(&[4, 3, 2], &cfg).unwrap();
        assert!(c.pass() && !c.tied);
        let c = check_partition(&[2, 2], &cfg).unwrap();
        assert!(c.pass() && c.tied);
        assert_eq!((c.per_edge_good, c.maximum), (2, 1));
    }

    #[test]
    fn small_suites_pass() {
        let cfg = OracleConfig::default();
        for s in [Suite::Formulas, Suite::Path, Suite::Joined] {
            let r = run(s, 3, &cfg).unwrap();
            assert!(r.all_pass(), "{}", r.to_text());
        }
    }
}
