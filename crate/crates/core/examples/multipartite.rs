//! Complete multipartite graphs: pairs inside the largest part are forbidden,
//! pairs inside every other part are good.

use edge_ranking::oracle::OracleConfig;
use edge_ranking::verify::check_partition;

fn main() -> edge_ranking::Result<()> {
    let cfg = OracleConfig::default();
    println!(
        "{:<10} {:>4} {:>6} {:>9} {:>8} {:>8}",
        "parts", "rank", "tied", "per-edge", "maximum", "formula"
    );
    for parts in [
        vec![4, 3, 2],
        vec![3, 2],
        vec![3, 3, 2],
        vec![5, 2, 2],
        vec![2, 2, 2, 2],
    ] {
        let c = check_partition(&parts, &cfg)?;
        let name = parts.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        println!(
            "{name:<10} {:>4} {:>6} {:>9} {:>8} {:>8}  {}",
            c.rank,
            c.tied,
            c.per_edge_good,
            c.maximum,
            c.formula,
            if c.pass() { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
