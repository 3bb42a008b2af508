//! Text format for groups: optional `#` comment lines, then `degree n`,
//! then one generator per line in 0-based disjoint-cycle notation.

use super::group::GeneratedGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .and_then(|rest| rest.trim().parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::Parse {
                        line: lineno + 1,
                        msg: "expected `degree n`".into(),
                    })?;
                degree = Some(n);
            }
            Some(n) => {
                let g = Permutation::parse_cycles(n, line).map_err(|e| Error::Parse {
                    line: lineno + 1,
                    msg: e.to_string(),
                })?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "missing `degree n` line".into(),
    })?;
    Ok((degree, gens))
}

pub fn parse_group(text: &str) -> Result<GeneratedGroup> {
    let (degree, gens) = parse_generators(text)?;
    GeneratedGroup::new(degree, gens)
}

pub fn write_group(g: &GeneratedGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for x in g.generators() {
        out.push_str(&format!("{x}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_identity() {
        let g = parse_group("# S3\ndegree 3\n(0 1 2)\n\n(0 1)\n()\n").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.generators().len(), 3);
        let again = parse_group(&write_group(&g)).unwrap();
        assert_eq!(again.generators(), g.generators());
    }

    #[test]
    fn malformed_files() {
        assert!(matches!(parse_group("(0 1)\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_group("degree 3\n(0 3)\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_group("# nothing\n").is_err());
    }
}
