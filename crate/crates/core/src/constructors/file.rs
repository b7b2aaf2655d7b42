//! Line-oriented group files.
//!
//! ```text
//! # comment
//! degree 8
//! gen (1 2 3 4 5 6 7)
//! gen (1 2)(3 4)
//! ```

use crate::error::{GroupError, Result};
use crate::permcore::{Caps, PermGroup, Permutation};

pub fn parse_group_file(text: &str, caps: Caps) -> Result<PermGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        match (keyword, degree) {
            ("degree", None) => {
                let n: usize = rest
                    .parse()
                    .map_err(|_| GroupError::parse(line_no, format!("bad degree '{rest}'")))?;
                if n == 0 || n > caps.max_degree {
                    return Err(GroupError::parse(
                        line_no,
                        format!("degree {n} outside 1..={}", caps.max_degree),
                    ));
                }
                degree = Some(n);
            }
            ("degree", Some(_)) => {
                return Err(GroupError::parse(line_no, "repeated degree line"));
            }
            (_, None) => {
                return Err(GroupError::parse(line_no, "expected 'degree N' first"));
            }
            ("gen", Some(n)) => {
                let cycles = parse_cycles(rest).map_err(|m| GroupError::parse(line_no, m))?;
                let p = Permutation::from_cycles(n, &cycles).map_err(|e| match e {
                    GroupError::PointOutOfRange { point, degree } => GroupError::parse(
                        line_no,
                        format!("point {point} out of range 1..={degree}"),
                    ),
                    GroupError::DuplicatePoint(pt) => {
                        GroupError::parse(line_no, format!("point {pt} repeated"))
                    }
                    other => other,
                })?;
                gens.push(p);
            }
            (other, Some(_)) => {
                return Err(GroupError::parse(
                    line_no,
                    format!("unknown keyword '{other}'"),
                ));
            }
        }
    }
    let n = degree.ok_or_else(|| GroupError::parse(0, "missing degree line"))?;
    if gens.is_empty() {
        return Err(GroupError::parse(0, "no generators"));
    }
    PermGroup::new(n, gens)
}

/// Parses `(1 2)(3 4 5)`; `()` is the empty cycle list.
fn parse_cycles(s: &str) -> std::result::Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    if rest.is_empty() {
        return Err("missing cycles after 'gen'".into());
    }
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at '{rest}'"))?;
        let close = inner
            .find(')')
            .ok_or_else(|| "unterminated cycle".to_string())?;
        let body = &inner[..close];
        if body.contains('(') {
            return Err("nested '('".into());
        }
        let points = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad point '{t}'")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn serialize_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&format!("gen {gen}\n"));
    }
    out
}
