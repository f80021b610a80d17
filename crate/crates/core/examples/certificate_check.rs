//! P_31 and C_32 are above the exact search cap; a witness ranking plus a
//! lower-bound subgraph still proves the good-edge sets can be added.

use edge_ranking::constructive::{good_edges, Reading};
use edge_ranking::family::{build_family, standard_ranking, FamilySpec};
use edge_ranking::oracle::{verify_simultaneous, LowerBoundCertificate, OracleConfig, VerificationMode};

fn main() -> edge_ranking::Result<()> {
    for spec in [FamilySpec::Path2kMinus1 { k: 5 }, FamilySpec::Cycle2k { k: 5 }] {
        let g = build_family(&spec)?;
        let set = good_edges(&spec, Reading::Corrected)?;
        let mode = VerificationMode::Certificate {
            witness: standard_ranking(&spec)?,
            lower: LowerBoundCertificate::for_family(&spec).expect("path or cycle"),
        };
        let check = verify_simultaneous(&g, &set.edges(), &mode, &OracleConfig::default())?;
        println!(
            "{spec}: {} edges, lower bound {}, witness uses {} labels, holds = {}",
            set.len(),
            check.base,
            check.augmented,
            check.holds
        );
    }
    Ok(())
}
