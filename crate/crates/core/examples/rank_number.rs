//! Exact rank numbers from the elimination search, with search statistics.

use edge_ranking::graph::Graph;
use edge_ranking::oracle::{exists_ranking, rank_number};

fn main() -> edge_ranking::Result<()> {
    let graphs = [
        ("P_7", Graph::path(7)?),
        ("P_15", Graph::path(15)?),
        ("C_8", Graph::cycle(8)?),
        ("C_16", Graph::cycle(16)?),
        ("K_4", Graph::complete(4)?),
        ("Petersen", petersen()?),
    ];
    for (name, g) in graphs {
        let (r, stats) = rank_number(&g)?;
        println!(
            "{name:>8}: rank {r}  (fits {} labels: {}, {} labels: {})  memo {} nodes {}",
            r - 1,
            exists_ranking(&g, r - 1)?,
            r,
            exists_ranking(&g, r)?,
            stats.memo_entries,
            stats.nodes_expanded
        );
    }
    Ok(())
}

fn petersen() -> edge_ranking::Result<Graph> {
    let outer = (1..=5).map(|i| (i, i % 5 + 1));
    let spokes = (1..=5).map(|i| (i, i + 5));
    let inner = (1..=5).map(|i| (i + 5, (i + 1) % 5 + 6));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
}
