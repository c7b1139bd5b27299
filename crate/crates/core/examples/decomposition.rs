//! Split a group as W ⋊ H and apply the matrix criterion to pairs.

use grouplab::constructors::example600;
use grouplab::structure::{
    build_criterion_matrix, condition_a, condition_c, condition_d, decompose, CriterionContext,
};
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    for spec in ["D30", "Sym3", "Q8", "Alt4"] {
        let g = build_str(spec)?;
        let dec = decompose(&g)?;
        println!("{spec}: {:?}", dec.status);
        for (j, c) in dec.components.iter().enumerate() {
            println!(
                "  component {j}: p = {}, delta = {}, action order {}",
                c.p,
                c.delta,
                c.action_order()
            );
        }
    }

    let (g, x, y) = example600();
    let dec = decompose(&g)?;
    println!(
        "order {}: |W| = {}, |H| = {}, (a) {}, (c) {}, (d) {}",
        g.order(),
        dec.w.order(),
        dec.h.order(),
        condition_a(&dec),
        condition_c(&dec),
        condition_d(&dec)?
    );
    let x2y = g.mul(g.mul(x, x), y);
    for j in 0..dec.rank() {
        let m = build_criterion_matrix(&dec, &[x2y, y], j)?;
        println!(
            "  A({j}) for (x^2 y, y) mod {}: rows {:?}, rank {}",
            m.p,
            m.rows,
            m.rank()
        );
    }
    let ctx = CriterionContext::new(&dec)?;
    println!("  x^2 y and y independent: {}", ctx.independent(x2y, y)?);
    println!(
        "{}",
        serde_json::to_string_pretty(&dec).expect("serializable")
    );
    Ok(())
}
