//! Maximal-subgroup census of Alt5 and a non-independent witness pair.

use grouplab::genset::GenSearch;
use grouplab::simpleverify::{candidate_report, census, find_witness};
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    let g = build_str("Alt5")?;
    let c = census(&g)?;
    println!(
        "{} maximal subgroups in {} classes of orders {:?}",
        c.maximals().len(),
        c.classes().len(),
        c.per_class_order()
    );
    if let Some(w) = find_witness(&g)? {
        let independent = GenSearch::new(&g)?.independent(w.s, w.x)?;
        println!(
            "s = e{} (order {}), x = e{} (order {}), {} maximal subgroups contain s, independent: {independent}",
            w.s,
            g.elem_order(w.s),
            w.x,
            g.elem_order(w.x),
            w.containing.len()
        );
    }
    for row in candidate_report(&g)? {
        println!(
            "  order {}: in {} maximals from {} classes, no two conjugate {}, N > C {}",
            row.order, row.maximals_containing, row.classes_met, row.no_two_conjugate, row.n_gt_c
        );
    }
    Ok(())
}
