//! Good edges of P_15 from the binary position rules, grouped by the rule
//! that produced them, and checked against the level decomposition.

use edge_ranking::constructive::{level_edges, path_good_edges, path_targets, Reading};

fn main() -> edge_ranking::Result<()> {
    let k = 4;
    for m in 1..(1u64 << k) {
        let t = path_targets(m, k, Reading::Corrected)?;
        if !t.kept.is_empty() {
            let parts: Vec<String> = t
                .kept
                .iter()
                .map(|(n, c)| format!("v{n} ({})", c.tag()))
                .collect();
            println!("v{m:<2} -> {}", parts.join(", "));
        }
    }
    let set = path_good_edges(k, Reading::Corrected)?;
    println!("total: {} edges", set.len());
    for j in 4..=k + 1 {
        println!("level {j}: {} edges", level_edges(k, j)?.len());
    }
    Ok(())
}
