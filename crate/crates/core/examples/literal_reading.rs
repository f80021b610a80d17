//! The construction rules applied verbatim against the corrected rules.

use edge_ranking::constructive::compare_readings;

fn main() -> edge_ranking::Result<()> {
    for k in 3..=5 {
        let c = compare_readings(k)?;
        println!(
            "k = {k}: rules {} vs {}, levels {} vs {}, formula {}",
            c.literal_rules, c.corrected_rules, c.literal_levels, c.corrected_levels, c.formula
        );
        let missing: Vec<String> = c
            .missing_from_literal_rules
            .iter()
            .map(|e| e.to_string())
            .collect();
        println!("  literal rules miss: {}", missing.join(" "));
    }
    Ok(())
}
