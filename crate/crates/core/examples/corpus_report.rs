//! Sweep the small corpus and print the comparison table.

use grouplab::constructors::{profile_specs, Profile};
use grouplab::report::{run_corpus, EvalOptions};
use grouplab::{Caps, GroupSpec, Result};

fn main() -> Result<()> {
    let specs: Vec<GroupSpec> = profile_specs(Profile::Small)
        .into_iter()
        .map(str::parse)
        .collect::<Result<_>>()?;
    let report = run_corpus(&specs, Caps::default(), &EvalOptions::default(), None)?;
    print!("{}", report.to_tsv());
    let s = report.summary();
    eprintln!(
        "{} agree, {} disagree, {} undecided",
        s.agreements, s.disagreements, s.undecided
    );
    Ok(())
}
