//! Smallest and largest minimal generating sets, and pairwise independence.

use grouplab::genset::GenSearch;
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    for spec in ["Sym4", "D12", "C2^3", "Q8", "AGL1(5)"] {
        let g = build_str(spec)?;
        let s = GenSearch::new(&g)?;
        let largest = s.largest_minimal_generating_set()?;
        println!("{spec}: d = {}, m = {}, e.g. {:?}", s.d()?, s.m()?, largest);
        match s.independence_counterexample()? {
            None => println!("  every pair without a power relation is independent"),
            Some((x, y)) => {
                let v = s.are_independent(x, y)?;
                println!(
                    "  e{x} (order {}) and e{y} (order {}) are not independent: {:?}",
                    g.elem_order(x),
                    g.elem_order(y),
                    v.obstruction
                );
            }
        }
        println!(
            "  rank-independence: {:?}",
            s.has_rank_independence_property()?
        );
    }
    Ok(())
}
