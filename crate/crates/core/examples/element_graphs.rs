//! Graphs on group elements, the complement identities, and DOT export.

use grouplab::genset::GenSearch;
use grouplab::graphs::{build_graph, complement_identity_holds, GraphKind};
use grouplab::{build_str, Result};

fn main() -> Result<()> {
    let kinds = [
        GraphKind::Power,
        GraphKind::EnhancedPower,
        GraphKind::Independence,
        GraphKind::Rank,
    ];
    for spec in ["Sym3", "Q8", "Alt4"] {
        let g = build_str(spec)?;
        let s = GenSearch::new(&g)?;
        print!("{spec}:");
        for kind in kinds {
            print!(
                "  {} {}",
                kind.as_str(),
                build_graph(&s, kind)?.edge_count()
            );
        }
        println!();
        println!(
            "  independence = complement of power: {}; rank = complement of enhanced power: {}",
            complement_identity_holds(&s, GraphKind::Independence)?,
            complement_identity_holds(&s, GraphKind::Rank)?,
        );
    }
    let g = build_str("Sym3")?;
    let dot = build_graph(&GenSearch::new(&g)?, GraphKind::Independence)?.to_dot();
    print!("{dot}");
    Ok(())
}
