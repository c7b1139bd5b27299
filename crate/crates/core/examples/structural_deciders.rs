//! Compare brute-force search with the structural classification.

use grouplab::genset::GenSearch;
use grouplab::structure::{decide_independence_structural, decide_rank_independence_structural};
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    for spec in [
        "C8",
        "Q8",
        "D10",
        "D12",
        "Alt4",
        "AGL1(5)",
        "C3^2",
        "ScalarSemidirect(3,2,2)",
        "Example600",
    ] {
        let g = build_str(spec)?;
        let s = GenSearch::new(&g)?;
        println!(
            "{spec:<24} independence: brute {:<5} structural {:<28} rank: brute {:<13?} structural {}",
            s.has_independence_property()?,
            decide_independence_structural(&g)?.to_string(),
            s.has_rank_independence_property()?,
            decide_rank_independence_structural(&g)?,
        );
    }
    Ok(())
}
