//! C_16: the constructed good edges against the exact oracle. Every single
//! non-edge is individually good, but at most 33 can be added together.

use edge_ranking::constructive::{cycle_good_edges, Reading};
use edge_ranking::graph::Graph;
use edge_ranking::oracle::{self, OracleConfig, VerificationMode};

fn main() -> edge_ranking::Result<()> {
    let cfg = OracleConfig::default();
    let g = Graph::cycle(16)?;
    let set = cycle_good_edges(4, Reading::Corrected)?;
    let per_edge = oracle::good_edge_set_with(&g, &cfg)?;
    let best = oracle::max_good_set(&g, &cfg)?;
    let check = oracle::verify_simultaneous(&g, &set.edges(), &VerificationMode::Exact, &cfg)?;
    println!("rank number:                  {}", per_edge.base_rank);
    println!(
        "non-edges individually good:  {} of {}",
        per_edge.good.len(),
        per_edge.verdicts.len()
    );
    println!("largest set addable at once:  {}", best.mu());
    println!("constructed set:              {}", set.len());
    println!("rank after adding it:         {}", check.augmented);
    println!(
        "saturated:                    {}",
        oracle::is_saturated(&g, &set.edges(), &cfg)?
    );
    Ok(())
}
