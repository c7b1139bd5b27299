//! Build groups from spec strings and print their basic invariants.

use grouplab::characteristic::{
    center, derived_subgroup, fitting, frattini, is_nilpotent, is_supersoluble,
};
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    for spec in [
        "Sym4",
        "Q8",
        "AGL1(7)",
        "ScalarSemidirect(5,2,4)",
        "DirectProduct(C3,Sym3)",
    ] {
        let g = build_str(spec)?;
        println!(
            "{spec:<26} order {:>3}  degree {:>2}  |Z| {:>2}  |G'| {:>2}  |Phi| {:>2}  |F| {:>3}  nilpotent {:<5}  supersoluble {}",
            g.order(),
            g.degree(),
            center(&g).order(),
            derived_subgroup(&g).order(),
            frattini(&g)?.order(),
            fitting(&g)?.order(),
            is_nilpotent(&g),
            is_supersoluble(&g)?,
        );
    }
    Ok(())
}
