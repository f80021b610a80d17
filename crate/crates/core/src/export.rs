//! JSON documents and Graphviz DOT output for a family, its standard ranking
//! and its constructed good edges.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructive::{self, EdgeSet, Reading};
use crate::error::{Error, Result};
use crate::family::{self, FamilySpec};
use crate::graph::{Edge, Graph, GraphJson};
use crate::ranking::{self, Ranking};

/// A family instance with its standard ranking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDocument {
    pub family: FamilySpec,
    pub graph: GraphJson,
    pub ranking: Ranking,
}

impl FamilyDocument {
    pub fn build(spec: &FamilySpec) -> Result<Self> {
        let spec = spec.normalized()?;
        let g = family::build_family(&spec)?;
        Ok(FamilyDocument {
            graph: GraphJson::from(&g),
            ranking: family::standard_ranking(&spec)?,
            family: spec,
        })
    }

    /// Parses a document and checks it describes a valid ranking of its graph.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FamilyDocument = serde_json::from_str(text)?;
        let g = doc.to_graph()?;
        if !ranking::is_valid_ranking(&g, &doc.ranking)? {
            return Err(Error::InvalidFamily("ranking is not valid for the graph".into()));
        }
        Ok(doc)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::try_from(self.graph.clone())
    }
}

/// A family document together with its constructed good edges.
#[derive(Debug, Clone, Serialize)]
pub struct ExportDocument {
    #[serde(flatten)]
    pub base: FamilyDocument,
    pub good_edges: EdgeSet,
}

impl ExportDocument {
    pub fn build(spec: &FamilySpec, reading: Reading) -> Result<Self> {
        let base = FamilyDocument::build(spec)?;
        let good_edges = constructive::good_edges(&base.family, reading)?;
        Ok(ExportDocument { base, good_edges })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Undirected DOT graph: nodes labeled by ranking value, host edges solid,
    /// good edges dashed.
    pub fn to_dot(&self) -> String {
        let spec = &self.base.family;
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{spec}\" {{");
        let _ = writeln!(out, "  node [shape=circle];");
        for (i, label) in self.base.ranking.labels().iter().enumerate() {
            let v = i + 1;
            let _ = writeln!(
                out,
                "  {v} [label=\"{label}\", xlabel=\"{}\"];",
                spec.vertex_name(v)
            );
        }
        for e in &self.base.graph.edges {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        }
        for e in self.good_edges.edges() {
            let _ = writeln!(out, "  {} -- {} [style=dashed];", e.u(), e.v());
        }
        out.push_str("}\n");
        out
    }
}

/// Counts of `(nodes, solid edges, dashed edges)` in a DOT string produced
/// by [`ExportDocument::to_dot`].
pub fn dot_counts(dot: &str) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for line in dot.lines().map(str::trim) {
        if line.contains(" -- ") {
            if line.contains("style=dashed") {
                counts.2 += 1;
            } else {
                counts.1 += 1;
            }
        } else if line.contains("[label=") {
            counts.0 += 1;
        }
    }
    counts
}

/// Edges listed in a DOT string, split into `(solid, dashed)`.
pub fn dot_edges(dot: &str) -> Result<(Vec<Edge>, Vec<Edge>)> {
    let mut solid = Vec::new();
    let mut dashed = Vec::new();
    for line in dot.lines().map(str::trim) {
        let Some((a, rest)) = line.split_once(" -- ") else {
            continue;
        };
        let b: String = rest.chars().take_while(char::is_ascii_digit).collect();
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidFamily(format!("bad DOT edge line {line:?}")))
        };
        let e = Edge::new(parse(a)?, parse(&b)?)?;
        if line.contains("style=dashed") {
            dashed.push(e);
        } else {
            solid.push(e);
        }
    }
    Ok((solid, dashed))
}
