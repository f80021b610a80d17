//! DOT rendering of P_15 with its good edges dashed; pipe into `dot -Tsvg`.

use edge_ranking::constructive::Reading;
use edge_ranking::export::ExportDocument;
use edge_ranking::family::FamilySpec;

fn main() -> edge_ranking::Result<()> {
    let spec: FamilySpec = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "path:4".into())
        .parse()?;
    print!("{}", ExportDocument::build(&spec, Reading::Corrected)?.to_dot());
    Ok(())
}
