//! Run every claim check and print the report.

use edge_ranking::oracle::OracleConfig;
use edge_ranking::verify::{run, Suite};

fn main() -> edge_ranking::Result<()> {
    let report = run(Suite::PaperAll, 5, &OracleConfig::default())?;
    print!("{}", report.to_text());
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
