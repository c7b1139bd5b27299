use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use super::{build_with_caps, GroupSpec};
use crate::error::{Error, Result};
use crate::group::{Caps, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    Small,
    Standard,
    Extended,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Profile> {
        match s.to_ascii_lowercase().as_str() {
            "small" => Ok(Profile::Small),
            "standard" => Ok(Profile::Standard),
            "extended" => Ok(Profile::Extended),
            _ => Err(Error::InvalidSpec(format!("unknown profile {s:?}"))),
        }
    }
}

const SMALL: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "C8",
    "C9",
    "C12",
    "C2^2",
    "C3^2",
    "C5^2",
    "C7^2",
    "C2^3",
    "C2^4",
    "C3^3",
    "Sym3",
    "D8",
    "D10",
    "D12",
    "D14",
    "D16",
    "D18",
    "D20",
    "D30",
    "Q8",
    "Q16",
    "Sym4",
    "Alt4",
    "AGL1(5)",
    "AGL1(7)",
    "CpByCqm(3,2,2)",
    "CpByCqm(5,2,2)",
    "CpByCqm(3,2,3)",
    "CpByCqm(7,3,2)",
    "ScalarSemidirect(3,2,2)",
    "ScalarSemidirect(5,2,2)",
    "ScalarSemidirect(5,2,4)",
    "ScalarSemidirect(3,3,2)",
    "ScalarSemidirect(7,1,3)",
    "ScalarSemidirect(2,2,3)",
    "DirectProduct(C2,C4)",
    "DirectProduct(C2,Sym3)",
    "DirectProduct(C3,Sym3)",
    "DirectProduct(C5,Sym3)",
    "DirectProduct(C2,Q8)",
    "DirectProduct(Sym3,Sym3)",
];

const STANDARD: &[&str] = &[
    "C2^5",
    "D24",
    "D42",
    "Q32",
    "Alt5",
    "Sym5",
    "PSL2(7)",
    "AGL1(8)",
    "AGL1(9)",
    "AGL1(11)",
    "AGL1(13)",
    "CpByCqm(3,2,4)",
    "CpByCqm(7,2,3)",
    "CpByCqm(13,3,2)",
    "ScalarSemidirect(3,2,8)",
    "ScalarSemidirect(3,4,2)",
    "ScalarSemidirect(7,2,3)",
    "ScalarSemidirect(7,2,6)",
    "ScalarSemidirect(11,1,5)",
    "ScalarSemidirect(5,3,4)",
    "DirectProduct(Alt4,C2)",
    "DirectProduct(Sym4,C2)",
    "DirectProduct(AGL1(3),AGL1(5))",
    "DirectProduct(C3,AGL1(5))",
    "Example600",
];

const EXTENDED: &[&str] = &["Alt6", "Alt7", "PSL2(8)", "PSL2(11)", "Sym6"];

/// Spec strings of a profile, in corpus order.
pub fn profile_specs(profile: Profile) -> Vec<&'static str> {
    let mut out = SMALL.to_vec();
    if profile != Profile::Small {
        out.extend_from_slice(STANDARD);
    }
    if profile == Profile::Extended {
        out.extend_from_slice(EXTENDED);
    }
    out
}

/// Builds every group of a profile, in corpus order.
pub fn corpus(profile: Profile) -> Result<Vec<(GroupSpec, Group)>> {
    corpus_with_caps(profile, Caps::default())
}

pub fn corpus_with_caps(profile: Profile, caps: Caps) -> Result<Vec<(GroupSpec, Group)>> {
    let specs: Vec<GroupSpec> = profile_specs(profile)
        .into_iter()
        .map(str::parse)
        .collect::<Result<_>>()?;
    build_all(specs, caps)
}

pub(crate) fn build_all(specs: Vec<GroupSpec>, caps: Caps) -> Result<Vec<(GroupSpec, Group)>> {
    specs
        .into_par_iter()
        .map(|s| build_with_caps(&s, caps).map(|g| (s, g)))
        .collect()
}

/// One spec string per line; blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str, path: &Path) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(line.parse().map_err(|e: Error| Error::MalformedLine {
            path: path.to_path_buf(),
            line: i + 1,
            reason: e.to_string(),
        })?);
    }
    Ok(out)
}

pub fn read_manifest(path: &Path) -> Result<Vec<GroupSpec>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_manifest(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::expected_order;

    #[test]
    fn profiles_are_nested_and_sized() {
        let small = corpus(Profile::Small).unwrap();
        assert!((38..=50).contains(&small.len()));
        assert!(small.iter().all(|(_, g)| g.order() <= 100));
        for p in [2, 3, 5, 7] {
            let name = format!("C{p}^2");
            assert!(small.iter().any(|(s, _)| s.to_string() == name));
        }
        let standard = profile_specs(Profile::Standard);
        assert!(standard.contains(&"Example600"));
        assert!(standard.len() >= 60);
        assert!(profile_specs(Profile::Extended).contains(&"Alt6"));
    }

    #[test]
    fn standard_orders_match_formulas() {
        for (spec, g) in corpus(Profile::Standard).unwrap() {
            assert!(g.order() <= 600, "{spec}");
            assert_eq!(Some(g.order()), expected_order(&spec), "{spec}");
        }
    }

    #[test]
    fn manifest_parsing() {
        let specs = parse_manifest("# corpus\nC6\n\nSym(4)  # comment\n", Path::new("m")).unwrap();
        assert_eq!(specs, vec![GroupSpec::Cyclic(6), GroupSpec::Sym(4)]);
        let err = parse_manifest("C6\nBogus\n", Path::new("m")).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 2, .. }));
    }
}
