//! Two copies of K_5 joined by one edge: the 8 constructed good edges are the
//! non-edges at the two ends of the joining edge.

use edge_ranking::constructive::joined_good_edges;
use edge_ranking::family::{build_family, FamilySpec};
use edge_ranking::oracle::{self, OracleConfig};

fn main() -> edge_ranking::Result<()> {
    let spec = FamilySpec::JoinedCliques { n: 5 };
    let g = build_family(&spec)?;
    let cfg = OracleConfig::default();
    let set = joined_good_edges(5)?;
    for (e, clause) in set.entries() {
        println!(
            "{{{}, {}}}  {}",
            spec.vertex_name(e.u()),
            spec.vertex_name(e.v()),
            clause.tag()
        );
    }
    let best = oracle::max_good_set(&g, &cfg)?;
    println!(
        "rank number {}, largest addable set {}, saturated {}",
        best.rank,
        best.mu(),
        oracle::is_saturated(&g, &set.edges(), &cfg)?
    );
    Ok(())
}
