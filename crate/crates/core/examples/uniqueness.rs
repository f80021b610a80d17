//! Optimal rankings of small paths and cycles, with counts modulo symmetry.

use edge_ranking::graph::Graph;
use edge_ranking::oracle::{census, enumerate_optimal_rankings, OracleConfig};

fn main() -> edge_ranking::Result<()> {
    let cfg = OracleConfig::default();
    for n in [3, 7, 15] {
        let all = enumerate_optimal_rankings(&Graph::path(n)?, &cfg)?;
        println!("P_{n}: {} optimal ranking(s): {:?}", all.len(), all[0].labels());
    }
    for n in [4, 8, 16] {
        let c = census(&Graph::cycle(n)?, &cfg)?;
        println!(
            "C_{n}: {} raw, {} up to label swap, {} up to the {} automorphisms, {} up to both",
            c.raw, c.label_swap_classes, c.automorphism_classes, c.automorphism_count, c.combined_classes
        );
    }
    Ok(())
}
