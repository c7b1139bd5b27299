//! The `.gens` generator format: `degree N`, then one generator per line as
//! `N` space-separated images. `#` starts a comment.

use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

pub fn parse_gens(path: &Path) -> Result<(usize, Vec<Permutation>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_gens_str(&text, path)
}

/// Parses file contents; `path` is only used in error messages.
pub fn parse_gens_str(text: &str, path: &Path) -> Result<(usize, Vec<Permutation>)> {
    let bad = |line: usize, reason: String| Error::MalformedLine {
        path: path.to_path_buf(),
        line,
        reason,
    };
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = degree else {
            let n = line
                .strip_prefix("degree")
                .and_then(|r| r.trim().parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| bad(line_no, format!("expected \"degree N\", found {line:?}")))?;
            degree = Some(n);
            continue;
        };
        let images: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(line_no, format!("bad integer: {e}")))?;
        if images.len() != n {
            return Err(bad(
                line_no,
                format!("expected {n} images, found {}", images.len()),
            ));
        }
        let perm = Permutation::from_images(&images).map_err(|e| bad(line_no, e.to_string()))?;
        gens.push(perm);
    }
    let degree = degree.ok_or_else(|| bad(1, "missing \"degree N\" header".into()))?;
    Ok((degree, gens))
}

pub fn format_gens(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for g in gens {
        let parts: Vec<String> = g.images().iter().map(|i| i.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_gens(g: &Group, path: &Path) -> Result<()> {
    std::fs::write(path, format_gens(g.degree(), g.generators())).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    #[test]
    fn parses_sym3() {
        let (n, gens) = parse_gens_str("degree 3\n1 0 2\n1 2 0\n", Path::new("s3.gens")).unwrap();
        let g = Group::from_generators("S3", n, gens, Caps::default()).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn empty_generator_list_is_trivial() {
        let (n, gens) = parse_gens_str("# nothing\ndegree 4\n", Path::new("t.gens")).unwrap();
        assert_eq!(n, 4);
        assert!(gens.is_empty());
        let g = Group::from_generators("1", n, gens, Caps::default()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn malformed_lines_are_reported() {
        let err = parse_gens_str("degree 3\n1 0 2\n0 1 3\n", Path::new("x.gens")).unwrap_err();
        assert!(
            matches!(err, Error::MalformedLine { line: 3, .. }),
            "{err:?}"
        );
        let err = parse_gens_str("degree 3\n1 0\n", Path::new("x.gens")).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 2, .. }));
        let err = parse_gens_str("1 0 2\n", Path::new("x.gens")).unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 1, .. }));
    }

    #[test]
    fn comments_are_ignored() {
        let text = "degree 3 # header\n# a comment\n1 0 2  # swap\n";
        let (n, gens) = parse_gens_str(text, Path::new("c.gens")).unwrap();
        assert_eq!(format_gens(n, &gens), "degree 3\n1 0 2\n");
    }
}
