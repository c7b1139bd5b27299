//! Write a group's generators to a `.gens` file and read them back.

use grouplab::constructors::{parse_gens, write_gens};
use grouplab::{build_str, Caps, Group, Result};

fn main() -> Result<()> {
    let g = build_str("AGL1(7)")?;
    let path = std::env::temp_dir().join("agl1_7.gens");
    write_gens(&g, &path)?;
    print!("{}", std::fs::read_to_string(&path).expect("just written"));
    let (degree, gens) = parse_gens(&path)?;
    let h = Group::from_generators("reloaded", degree, gens, Caps::default())?;
    println!("reloaded order {} (original {})", h.order(), g.order());
    let _ = std::fs::remove_file(&path);
    Ok(())
}
