//! Build each family, print its standard ranking and confirm it is valid.

use edge_ranking::family::{build_family, standard_ranking, FamilySpec};
use edge_ranking::ranking::is_valid_ranking;

fn main() -> edge_ranking::Result<()> {
    for text in ["path:4", "cycle:3", "multipartite:4,3,2", "joined:3"] {
        let spec: FamilySpec = text.parse()?;
        let g = build_family(&spec)?;
        let r = standard_ranking(&spec)?;
        println!(
            "{spec}: n = {}, |E| = {}, labels {:?}, valid = {}, max label = {}",
            g.order(),
            g.size(),
            r.labels(),
            is_valid_ranking(&g, &r)?,
            r.max_label()
        );
    }
    Ok(())
}
