//! Command-line front end. [`run`] parses arguments and returns everything
//! the process should print plus its exit code, so the binary stays a thin
//! wrapper and the commands are testable in-process.
//!
//! Exit codes: 0 success, 1 a checked claim does not hold, 2 usage or cap
//! error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::constructive::{self, EdgeSet, Reading};
use crate::error::{Error, Result};
use crate::export::{ExportDocument, FamilyDocument};
use crate::family::{self, FamilySpec};
use crate::graph::{Edge, Graph, GraphJson};
use crate::oracle::{self, OracleConfig, SearchStats, VerificationMode};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "edge-ranking",
    version,
    about = "Optimal rankings and good edges of graph families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Construct,
    Oracle,
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a family's graph and standard ranking.
    Generate {
        /// path:K, cycle:K, multipartite:M1,M2,... or joined:N
        family: FamilySpec,
        #[arg(long)]
        json: bool,
    },
    /// Exact rank number of a family or of a graph read from a JSON file.
    Rank {
        #[arg(required_unless_present = "graph")]
        family: Option<FamilySpec>,
        /// `{"n": .., "edges": [[u, v], ..]}` or a `generate --json` document.
        #[arg(long, conflicts_with = "family")]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Good edges by construction, by oracle, or both compared.
    GoodEdges {
        family: FamilySpec,
        #[arg(long, value_enum, default_value_t = Mode::Construct)]
        mode: Mode,
        /// Use the construction rules verbatim and report where they fall short.
        #[arg(long)]
        strict_paper: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form good-edge count, optionally beside the oracle's.
    Mu {
        family: FamilySpec,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a suite of claims: paper-all, path, cycle, multipartite, joined,
    /// uniqueness or formulas.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, default_value_t = oracle::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Write a family with its ranking and good edges as JSON or DOT.
    Export {
        family: FamilySpec,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        strict_paper: bool,
    },
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Default::default()
        }
    }

    fn checked(stdout: String, holds: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if holds { EXIT_OK } else { EXIT_MISMATCH },
        }
    }

    fn with_stats(mut self, stats: &SearchStats) -> Self {
        let _ = writeln!(
            self.stderr,
            "stats: memo_entries={} nodes_expanded={} wall_time={:.3}s",
            stats.memo_entries,
            stats.nodes_expanded,
            stats.wall_time.as_secs_f64()
        );
        self
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stderr: text,
                    code: EXIT_USAGE,
                    ..Default::default()
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
            ..Default::default()
        },
    }
}

pub fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Generate { family, json } => generate(&family, json),
        Command::Rank {
            family,
            graph,
            cap,
            json,
        } => rank(family.as_ref(), graph, &OracleConfig::with_cap(cap), json),
        Command::GoodEdges {
            family,
            mode,
            strict_paper,
            cap,
            json,
        } => good_edges(&family, mode, strict_paper, &OracleConfig::with_cap(cap), json),
        Command::Mu {
            family,
            oracle,
            cap,
            json,
        } => mu(&family, oracle, &OracleConfig::with_cap(cap), json),
        Command::Verify {
            suite,
            max_k,
            cap,
            json,
        } => {
            let report = verify::run(suite, max_k, &OracleConfig::with_cap(cap))?;
            let text = if json { pretty(&report)? } else { report.to_text() };
            Ok(Outcome::checked(text, report.all_pass()))
        }
        Command::Export {
            family,
            format,
            out,
            strict_paper,
        } => export(&family, format, out, reading(strict_paper)),
    }
}

fn reading(strict: bool) -> Reading {
    if strict {
        Reading::Literal
    } else {
        Reading::Corrected
    }
}

fn pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn edge_list(es: &[Edge]) -> String {
    es.iter().map(Edge::to_string).collect::<Vec<_>>().join(" ")
}

fn generate(spec: &FamilySpec, json: bool) -> Result<Outcome> {
    let doc = FamilyDocument::build(spec)?;
    if json {
        return Ok(Outcome::ok(pretty(&doc)?));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {} vertices, {} edges, rank number {}",
        doc.family,
        doc.graph.n,
        doc.graph.edges.len(),
        doc.ranking.max_label()
    );
    for (i, l) in doc.ranking.labels().iter().enumerate() {
        let _ = writeln!(out, "  {:>4}  label {l}", doc.family.vertex_name(i + 1));
    }
    let _ = writeln!(out, "edges: {}", edge_list(&doc.graph.edges));
    Ok(Outcome::ok(out))
}

fn read_graph(path: &PathBuf) -> Result<(String, Graph)> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    let gj: GraphJson = match value.get("graph") {
        Some(inner) => serde_json::from_value(inner.clone())?,
        None => serde_json::from_value(value)?,
    };
    Ok((path.display().to_string(), Graph::try_from(gj)?))
}

fn rank(spec: Option<&FamilySpec>, path: Option<PathBuf>, cfg: &OracleConfig, json: bool) -> Result<Outcome> {
    let (name, g, expected) = match (spec, path) {
        (Some(spec), _) => (
            spec.to_string(),
            family::build_family(spec)?,
            Some(spec.rank_number()?),
        ),
        (None, Some(path)) => {
            let (name, g) = read_graph(&path)?;
            (name, g, None)
        }
        (None, None) => return Err(Error::InvalidFamily("give a family or --graph".into())),
    };
    let (r, stats) = match expected {
        Some(hint) => oracle::rank_number_with_hint(&g, hint, cfg)?,
        None => oracle::rank_number_with(&g, cfg)?,
    };
    let holds = expected.is_none_or(|e| e == r);
    let text = if json {
        pretty(&json!({ "graph": name, "rank": r, "expected": expected, "holds": holds }))?
    } else {
        match expected {
            Some(e) => format!("{name}: rank number {r} (closed form {e})\n"),
            None => format!("{name}: rank number {r}\n"),
        }
    };
    Ok(Outcome::checked(text, holds).with_stats(&stats))
}

/// Oracle view of a family: per-edge verdicts and one maximum simultaneous set.
#[derive(Debug, Serialize)]
struct OracleView {
    base_rank: u32,
    per_edge_good: Vec<Edge>,
    verdicts: Vec<oracle::EdgeVerdict>,
    maximum_size: usize,
    maximum_example: Vec<Edge>,
}

fn oracle_view(g: &Graph, cfg: &OracleConfig) -> Result<(OracleView, SearchStats)> {
    let rep = oracle::good_edge_set_with(g, cfg)?;
    let best = oracle::max_good_set(g, cfg)?;
    Ok((
        OracleView {
            base_rank: rep.base_rank,
            per_edge_good: rep.good,
            verdicts: rep.verdicts,
            maximum_size: best.mu(),
            maximum_example: best.edges.clone(),
        },
        best.stats,
    ))
}

#[derive(Debug, Serialize)]
struct Comparison {
    constructed: usize,
    /// Adding the constructed set at once keeps the rank number.
    simultaneous: bool,
    maximum_size: usize,
    /// Every other non-edge is forbidden after adding the set.
    saturated: bool,
    /// Constructed edges that are not individually good.
    constructed_not_good: Vec<Edge>,
    /// Individually good edges outside the constructed set.
    good_not_constructed: Vec<Edge>,
    identical: bool,
}

fn compare(g: &Graph, set: &EdgeSet, view: &OracleView, cfg: &OracleConfig) -> Result<Comparison> {
    let edges = set.edges();
    let simultaneous = oracle::verify_simultaneous(g, &edges, &VerificationMode::Exact, cfg)?.holds;
    let saturated = simultaneous && oracle::is_saturated(g, &edges, cfg)?;
    let constructed_not_good: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|e| view.per_edge_good.binary_search(e).is_err())
        .collect();
    let good_not_constructed: Vec<Edge> = view
        .per_edge_good
        .iter()
        .copied()
        .filter(|&e| !set.contains(e))
        .collect();
    Ok(Comparison {
        constructed: set.len(),
        simultaneous,
        maximum_size: view.maximum_size,
        saturated,
        identical: simultaneous && saturated && set.len() == view.maximum_size,
        constructed_not_good,
        good_not_constructed,
    })
}

/// The verbatim rules next to the corrected ones, for path-based families.
fn discrepancy_report(spec: &FamilySpec) -> Result<Option<serde_json::Value>> {
    let k = match spec {
        FamilySpec::Path2kMinus1 { k } | FamilySpec::Cycle2k { k } => *k,
        _ => return Ok(None),
    };
    if k < 3 {
        return Ok(None);
    }
    let c = constructive::compare_readings(k)?;
    let corrected = constructive::path_good_edges(k, Reading::Corrected)?;
    let by_clause = |tag: &str| -> Vec<Edge> {
        corrected
            .entries()
            .iter()
            .filter(|(e, cl)| cl.tag() == tag && c.missing_from_literal_rules.contains(e))
            .map(|&(e, _)| e)
            .collect()
    };
    Ok(Some(json!({
        "k": k,
        "rules": {
            "corrected": c.corrected_rules,
            "literal": c.literal_rules,
            "dropped_by_interval_clause_l_positive": by_clause("interval"),
            "dropped_without_even_offset": by_clause("even-offset"),
        },
        "levels": {
            "corrected_range": format!("4..={}", k + 1),
            "corrected": c.corrected_levels,
            "literal_range": format!("4..={k}"),
            "literal": c.literal_levels,
            "missing": c.missing_from_literal_levels,
        },
        "formula": c.formula,
    })))
}

fn discrepancy_text(report: &serde_json::Value) -> String {
    let edges = |v: &serde_json::Value| -> String {
        let list: Vec<Edge> = serde_json::from_value(v.clone()).unwrap_or_default();
        edge_list(&list)
    };
    let r = &report["rules"];
    let l = &report["levels"];
    let mut out = String::new();
    let _ = writeln!(out, "literal reading vs corrected reading (k = {}):", report["k"]);
    let _ = writeln!(
        out,
        "  position rules: literal {} edges, corrected {} edges, formula {}",
        r["literal"], r["corrected"], report["formula"]
    );
    let _ = writeln!(
        out,
        "    interval rule restricted to l > 0 drops: {}",
        edges(&r["dropped_by_interval_clause_l_positive"])
    );
    let _ = writeln!(
        out,
        "    offset rule restricted to odd m drops: {}",
        edges(&r["dropped_without_even_offset"])
    );
    let _ = writeln!(
        out,
        "  level union: j in {} gives {} edges, j in {} gives {} edges",
        l["literal_range"].as_str().unwrap_or(""),
        l["literal"],
        l["corrected_range"].as_str().unwrap_or(""),
        l["corrected"]
    );
    let _ = writeln!(
        out,
        "    missing from the shorter range: {}",
        edges(&l["missing"])
    );
    out
}

fn good_edges(
    spec: &FamilySpec,
    mode: Mode,
    strict: bool,
    cfg: &OracleConfig,
    json: bool,
) -> Result<Outcome> {
    let spec = spec.normalized()?;
    let set = constructive::good_edges(&spec, reading(strict))?;
    let discrepancy = if strict { discrepancy_report(&spec)? } else { None };
    let reading_name = if strict { "literal" } else { "corrected" };

    if mode == Mode::Construct {
        let text = if json {
            pretty(&json!({ "reading": reading_name, "constructed": set, "discrepancy": discrepancy }))?
        } else {
            let mut out = format!(
                "{spec}: {} constructed good edges ({reading_name} reading)\n",
                set.len()
            );
            for (e, clause) in set.entries() {
                let _ = writeln!(out, "  {e}  {}", clause.tag());
            }
            if let Some(d) = &discrepancy {
                out.push_str(&discrepancy_text(d));
            }
            out
        };
        return Ok(Outcome::ok(text));
    }

    let g = family::build_family(&spec)?;
    cfg.check(&g)?;
    let (view, stats) = oracle_view(&g, cfg)?;
    if mode == Mode::Oracle {
        let text = if json {
            pretty(&json!({ "family": spec, "oracle": view }))?
        } else {
            let mut out = format!("{spec}: rank number {}\n", view.base_rank);
            let _ = writeln!(out, "  individually good non-edges: {}", view.per_edge_good.len());
            let _ = writeln!(out, "    {}", edge_list(&view.per_edge_good));
            let _ = writeln!(
                out,
                "  individually forbidden non-edges: {}",
                view.verdicts.len() - view.per_edge_good.len()
            );
            let _ = writeln!(out, "  largest set addable at once: {}", view.maximum_size);
            let _ = writeln!(out, "    e.g. {}", edge_list(&view.maximum_example));
            out
        };
        return Ok(Outcome::ok(text).with_stats(&stats));
    }

    let cmp = compare(&g, &set, &view, cfg)?;
    let text = if json {
        pretty(&json!({
            "family": spec,
            "reading": reading_name,
            "base_rank": view.base_rank,
            "per_edge_good": view.per_edge_good.len(),
            "comparison": cmp,
            "discrepancy": discrepancy,
        }))?
    } else {
        let mut out = format!(
            "{spec}: rank number {} ({reading_name} reading)\n",
            view.base_rank
        );
        let _ = writeln!(out, "  constructed: {} edges", cmp.constructed);
        let _ = writeln!(
            out,
            "  oracle largest set addable at once: {} edges",
            cmp.maximum_size
        );
        let _ = writeln!(
            out,
            "  constructed set keeps the rank number: {}",
            cmp.simultaneous
        );
        let _ = writeln!(out, "  every other non-edge then forbidden: {}", cmp.saturated);
        let _ = writeln!(
            out,
            "  oracle individually good: {} edges",
            view.per_edge_good.len()
        );
        let _ = writeln!(
            out,
            "    constructed but not individually good: [{}]",
            edge_list(&cmp.constructed_not_good)
        );
        let _ = writeln!(
            out,
            "    individually good but not constructed: [{}]",
            edge_list(&cmp.good_not_constructed)
        );
        let _ = writeln!(out, "  {}", if cmp.identical { "identical" } else { "MISMATCH" });
        if let Some(d) = &discrepancy {
            out.push_str(&discrepancy_text(d));
        }
        out
    };
    Ok(Outcome::checked(text, cmp.identical).with_stats(&stats))
}

fn mu(spec: &FamilySpec, with_oracle: bool, cfg: &OracleConfig, json: bool) -> Result<Outcome> {
    let spec = spec.normalized()?;
    let formula = constructive::mu(&spec)?;
    if !with_oracle {
        let text = if json {
            pretty(&json!({ "family": spec, "formula": formula }))?
        } else {
            format!("{spec}: {formula}\n")
        };
        return Ok(Outcome::ok(text));
    }
    let g = family::build_family(&spec)?;
    cfg.check(&g)?;
    let best = oracle::max_good_set(&g, cfg)?;
    let per_edge = oracle::good_edge_set_with(&g, cfg)?.good.len();
    let holds = best.mu() as i64 == formula;
    let text = if json {
        pretty(&json!({
            "family": spec,
            "formula": formula,
            "oracle_maximum": best.mu(),
            "oracle_per_edge_good": per_edge,
            "holds": holds,
        }))?
    } else {
        format!(
            "{:<24} {:>8} {:>15} {:>15}\n{:<24} {:>8} {:>15} {:>15}\n",
            "family",
            "formula",
            "oracle maximum",
            "per-edge good",
            spec.to_string(),
            formula,
            best.mu(),
            per_edge
        )
    };
    Ok(Outcome::checked(text, holds).with_stats(&best.stats))
}

fn export(spec: &FamilySpec, format: Format, out: Option<PathBuf>, reading: Reading) -> Result<Outcome> {
    let doc = ExportDocument::build(spec, reading)?;
    let text = match format {
        Format::Json => doc.to_json()? + "\n",
        Format::Dot => doc.to_dot(),
    };
    match out {
        Some(path) => {
            std::fs::write(&path, &text)?;
            Ok(Outcome {
                stderr: format!("wrote {}\n", path.display()),
                ..Default::default()
            })
        }
        None => Ok(Outcome::ok(text)),
    }
}
