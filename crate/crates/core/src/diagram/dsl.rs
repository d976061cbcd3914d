//! Line-oriented text format for diagrams (`.wh` files).
//!
//! ```text
//! bottom 1 1        # optional header, omitted for closed diagrams
//! cup 0 1
//! x+ 1
//! vmerge 0 1 1 2
//! vsplit 0 2 1 1
//! disk D1 0 2
//! cap 0
//! top 1 1           # optional footer, must match the final profile
//! ```

use std::collections::HashSet;

use super::{apply_slice, Diagram, DiagramError, Slice};
use crate::recoupling::Color;

fn syntax(line: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::SyntaxError { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, DiagramError> {
    tok.parse().map_err(|_| syntax(line, format!("expected a nonnegative integer, got `{tok}`")))
}

fn args<'a>(toks: &[&'a str], n: usize, line: usize) -> Result<Vec<&'a str>, DiagramError> {
    if toks.len() != n + 1 {
        return Err(syntax(line, format!("`{}` takes {n} arguments, got {}", toks[0], toks.len() - 1)));
    }
    Ok(toks[1..].to_vec())
}

/// Parses and validates a diagram.
pub fn parse_dsl(text: &str) -> Result<Diagram, DiagramError> {
    let mut bottom: Option<Vec<Color>> = None;
    let mut top: Option<(usize, Vec<Color>)> = None;
    let mut slices = Vec::new();
    let mut profile: Vec<Color> = Vec::new();
    let mut ids = HashSet::new();
    let mut seen_slice = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if top.is_some() {
            return Err(syntax(line, "nothing may follow the `top` line"));
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let slice = match toks[0] {
            "bottom" => {
                if seen_slice || bottom.is_some() {
                    return Err(syntax(line, "`bottom` must be the first line"));
                }
                let colors = toks[1..].iter().map(|t| num(t, line)).collect::<Result<Vec<_>, _>>()?;
                profile = colors.clone();
                bottom = Some(colors);
                continue;
            }
            "top" => {
                let colors = toks[1..].iter().map(|t| num(t, line)).collect::<Result<Vec<_>, _>>()?;
                top = Some((line, colors));
                continue;
            }
            "cup" => {
                let a = args(&toks, 2, line)?;
                Slice::Cup { pos: num(a[0], line)?, color: num(a[1], line)? }
            }
            "cap" => Slice::Cap { pos: num(args(&toks, 1, line)?[0], line)? },
            "x+" => Slice::CrossPos { pos: num(args(&toks, 1, line)?[0], line)? },
            "x-" => Slice::CrossNeg { pos: num(args(&toks, 1, line)?[0], line)? },
            "vmerge" => {
                let a = args(&toks, 4, line)?;
                Slice::VertexMerge {
                    pos: num(a[0], line)?,
                    a: num(a[1], line)?,
                    b: num(a[2], line)?,
                    c: num(a[3], line)?,
                }
            }
            "vsplit" => {
                let a = args(&toks, 4, line)?;
                Slice::VertexSplit {
                    pos: num(a[0], line)?,
                    c: num(a[1], line)?,
                    a: num(a[2], line)?,
                    b: num(a[3], line)?,
                }
            }
            "disk" => {
                let a = args(&toks, 3, line)?;
                let id = a[0].to_string();
                if !ids.insert(id.clone()) {
                    return Err(DiagramError::DuplicateDiskId { line, id });
                }
                Slice::DiskGate { id, pos: num(a[1], line)?, span: num(a[2], line)? }
            }
            other => return Err(syntax(line, format!("unknown slice `{other}`"))),
        };
        seen_slice = true;
        apply_slice(&mut profile, &slice, line)?;
        slices.push(slice);
    }

    let bottom = bottom.unwrap_or_default();
    let declared = top.as_ref().map(|t| t.1.clone()).unwrap_or_default();
    if declared != profile {
        let line = top.map(|t| t.0).unwrap_or(text.lines().count());
        return Err(DiagramError::ColorMismatch {
            line,
            msg: format!("diagram ends with {profile:?} but declares top {declared:?}"),
        });
    }
    Ok(Diagram { bottom, slices, top: profile })
}

fn colors(c: &[Color]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical text form; `parse_dsl(to_dsl(d)) == d`.
pub(super) fn to_dsl(d: &Diagram) -> String {
    let mut out = String::new();
    if !d.bottom.is_empty() {
        out.push_str(&format!("bottom {}\n", colors(&d.bottom)));
    }
    for s in &d.slices {
        let line = match s {
            Slice::Cup { pos, color } => format!("cup {pos} {color}"),
            Slice::Cap { pos } => format!("cap {pos}"),
            Slice::CrossPos { pos } => format!("x+ {pos}"),
            Slice::CrossNeg { pos } => format!("x- {pos}"),
            Slice::VertexMerge { pos, a, b, c } => format!("vmerge {pos} {a} {b} {c}"),
            Slice::VertexSplit { pos, c, a, b } => format!("vsplit {pos} {c} {a} {b}"),
            Slice::DiskGate { id, pos, span } => format!("disk {id} {pos} {span}"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    if !d.top.is_empty() {
        out.push_str(&format!("top {}\n", colors(&d.top)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_unknot() {
        let d = parse_dsl("cup 0 1\ncap 0\n").unwrap();
        assert!(d.is_closed());
        assert_eq!(d.slices(), &[Slice::Cup { pos: 0, color: 1 }, Slice::Cap { pos: 0 }]);
    }

    #[test]
    fn parse_gate_spanning_both_legs() {
        let d = parse_dsl("cup 0 1\ndisk D1 0 2\ncap 0\n").unwrap();
        assert_eq!(d.gate_ids(), vec!["D1"]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = parse_dsl("# a loop\n\ncup 0 1   # left\n  cap 0\n").unwrap();
        assert_eq!(d.slices().len(), 2);
    }

    #[test]
    fn error_lines() {
        let e = parse_dsl("cup 0 1\nvmerge 0 1 1 3\n").unwrap_err();
        assert_eq!(e, DiagramError::InadmissibleVertex { line: 2, a: 1, b: 1, c: 3 });
        let e = parse_dsl("cup 0 1\ncap 3\n").unwrap_err();
        assert!(matches!(e, DiagramError::PositionOutOfRange { line: 2, .. }));
        let e = parse_dsl("cup 0 1\ncup 0 2\ncap 1\n").unwrap_err();
        assert!(matches!(e, DiagramError::ColorMismatch { line: 3, .. }));
        let e = parse_dsl("cup 0 1\ndisk A 0 1\ndisk A 1 1\ncap 0\n").unwrap_err();
        assert!(matches!(e, DiagramError::DuplicateDiskId { line: 3, .. }));
        let e = parse_dsl("cup 0 1\nfrob 2\n").unwrap_err();
        assert!(matches!(e, DiagramError::SyntaxError { line: 2, .. }));
        let e = parse_dsl("cup 0 x\n").unwrap_err();
        assert!(matches!(e, DiagramError::SyntaxError { line: 1, .. }));
        let e = parse_dsl("cup 0 1\n").unwrap_err();
        assert!(matches!(e, DiagramError::ColorMismatch { .. }));
    }

    #[test]
    fn tangles_need_matching_footer() {
        let d = parse_dsl("bottom 1 1\nx+ 0\ntop 1 1\n").unwrap();
        assert_eq!(d.bottom(), &[1, 1]);
        assert!(parse_dsl("bottom 1 2\nx+ 0\ntop 1 2\n").is_err());
        assert!(parse_dsl("bottom 1 2\nx+ 0\ntop 2 1\n").is_ok());
        assert!(parse_dsl("cup 0 1\nbottom 1\n").is_err());
    }

    #[test]
    fn print_parse_roundtrip_on_fixtures() {
        let mut all = vec![
            fixtures::z_power(0),
            fixtures::z_power(3),
            fixtures::hopf_link(2, 1, true),
            fixtures::theta_graph(2, 3, 3),
            fixtures::kinked_unknot(2, false),
            fixtures::two_gate_knot(),
        ];
        all.push(parse_dsl("bottom 1 2\nx- 0\nvmerge 0 2 1 1\nvsplit 0 1 1 2\ntop 1 2\n").unwrap());
        for d in all {
            let text = d.to_string();
            assert_eq!(parse_dsl(&text).unwrap(), d, "{text}");
        }
    }
}
