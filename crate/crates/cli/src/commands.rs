use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;
use wormhole_core::engine::{self, EngineError, Evaluator, FusionShape};
use wormhole_core::qring::{ComplexValue, LaurentPoly};
use wormhole_core::tqft::{self, BasisKind, MarkedSphere, TqftError};
use wormhole_core::wrt::{self, CheckRow, CheckStatus, WrtError};
use wormhole_core::{parse_dsl, Color, Diagram, DiagramError, RatFn};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: DiagramError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error("WRT check failed")]
    WrtFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 1,
            CliError::Internal(_) => 2,
            CliError::WrtFailed(_) => 3,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NotClosed | EngineError::HasDiskGates | EngineError::Invalid(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<TqftError> for CliError {
    fn from(e: TqftError) -> Self {
        match e {
            TqftError::Engine(e) => e.into(),
            TqftError::BoundaryMismatch { .. } | TqftError::NotSingleWormhole | TqftError::NonLaurentResult(_) => {
                CliError::Usage(e.to_string())
            }
            TqftError::SingularBasis => CliError::Internal(e.to_string()),
        }
    }
}

impl From<WrtError> for CliError {
    fn from(e: WrtError) -> Self {
        match e {
            WrtError::Engine(e) => e.into(),
            WrtError::InvalidRoot(_) | WrtError::ColorOutOfRange { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Diagram, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    parse_dsl(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn parse_colors(s: &str) -> Result<Vec<Color>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<Color>().map_err(|_| CliError::Usage(format!("bad color {t:?} in {s:?}"))))
        .collect()
}

fn parse_range(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Usage(format!("bad range {s:?}, expected A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a < 3 || b < a {
        return Err(CliError::Usage(format!("range {s:?} must satisfy 3 <= A <= B")));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct Invariant<'a> {
    num: &'a LaurentPoly,
    den: &'a LaurentPoly,
}

#[derive(Serialize)]
struct EvalRecord<'a> {
    input: String,
    invariant: Invariant<'a>,
    pretty: String,
    wrt: &'a [CheckRow],
}

fn to_sorted_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    // a Value map keeps keys sorted
    let value = serde_json::to_value(v).map_err(|e| CliError::Internal(e.to_string()))?;
    serde_json::to_string(&value).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn eval(path: &Path, oracle: bool, json: bool, r_range: Option<&str>) -> Result<String, CliError> {
    let d = load(path)?;
    let evaluator = if oracle { Evaluator::BruteForce } else { Evaluator::Transfer };
    let value = engine::bracket_with(&d, FusionShape::LeftComb, evaluator)?;
    if !json {
        return Ok(format!("{value}\n"));
    }
    let rows = match r_range {
        Some(r) => {
            let (a, b) = parse_range(r)?;
            wrt::convergence_check_with(&value, &d, a, b, 1e-9)?
        }
        None => Vec::new(),
    };
    let record = EvalRecord {
        input: path.display().to_string(),
        invariant: Invariant { num: value.num(), den: value.den() },
        pretty: value.to_string(),
        wrt: &rows,
    };
    Ok(to_sorted_json(&record)? + "\n")
}

pub fn dim(points: &str) -> Result<String, CliError> {
    let colors = parse_colors(points)?;
    Ok(format!("{}\n", tqft::dim_v(&MarkedSphere::new(colors))))
}

fn matrix_rows(entries: &[Vec<RatFn>]) -> String {
    let mut out = String::new();
    for row in entries {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "[{}]", cells.join(", "));
    }
    out
}

pub fn gram(n: usize, det: bool) -> Result<String, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let g = tqft::catalan_gram(n)?;
    let mut out = matrix_rows(&g.entries);
    if det {
        let v = g.determinant();
        let _ = writeln!(out, "det = {v}");
        let deg = v.as_laurent().ok().and_then(|p| p.to_poly_in_loop_value()).map(|c| c.len().saturating_sub(1));
        match deg {
            Some(k) => {
                let _ = writeln!(out, "degree in d = {k}");
            }
            None => out.push_str("det is not a polynomial in d\n"),
        }
    }
    Ok(out)
}

pub fn matrix(path: &Path, points: Option<&str>, kind: BasisKind) -> Result<String, CliError> {
    let t = load(path)?;
    if let Some(p) = points {
        let want = parse_colors(p)?;
        if t.bottom() != want.as_slice() || t.top() != want.as_slice() {
            return Err(TqftError::BoundaryMismatch { expected: want, found: t.bottom().to_vec() }.into());
        }
    }
    if t.bottom() != t.top() {
        return Err(TqftError::BoundaryMismatch { expected: t.bottom().to_vec(), found: t.top().to_vec() }.into());
    }
    if kind == BasisKind::Catalan && tqft::basis(&MarkedSphere::new(t.bottom().to_vec()), kind).is_none() {
        return Err(CliError::Usage("the Catalan basis needs an even number of color-1 points".into()));
    }
    let m = tqft::endomorphism_matrix(&t, kind)?;
    let mut out = format!("dimension {}\n", m.entries.len());
    out += &matrix_rows(&m.entries);
    let _ = writeln!(out, "trace = {}", m.trace());
    Ok(out)
}

fn fmt_complex(z: Option<ComplexValue>) -> String {
    match z {
        Some(z) => format!("{:+.12}{:+.12}i", z.re, z.im),
        None => "-".into(),
    }
}

pub fn wrt_check(path: &Path, r_range: &str, tol: f64, json: bool) -> Result<String, CliError> {
    let d = load(path)?;
    let (a, b) = parse_range(r_range)?;
    let rows = wrt::convergence_check(&d, a, b, tol)?;
    let out = if json {
        to_sorted_json(&rows)? + "\n"
    } else {
        let mut out = String::new();
        for row in &rows {
            let status = match row.status {
                CheckStatus::Pass => "pass".to_string(),
                CheckStatus::Fail => "FAIL".to_string(),
                CheckStatus::Skip => format!("skip ({})", row.reason.as_deref().unwrap_or("")),
            };
            let err = row.abs_err.map_or("-".into(), |e| format!("{e:.3e}"));
            let _ = writeln!(
                out,
                "r={:<3} lhs={} rhs={} err={} {}",
                row.r,
                fmt_complex(row.lhs),
                fmt_complex(row.rhs),
                err,
                status
            );
        }
        out
    };
    if rows.iter().any(|r| r.status == CheckStatus::Fail) {
        return Err(CliError::WrtFailed(out));
    }
    Ok(out)
}

pub fn parse(path: &Path) -> Result<String, CliError> {
    let d = load(path)?;
    let mut out = d.to_string();
    if !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..10").unwrap(), (5, 10));
        assert_eq!(parse_range("5..=10").unwrap(), (5, 10));
        assert!(parse_range("2..4").is_err());
        assert!(parse_range("7..5").is_err());
        assert!(parse_range("7").is_err());
    }

    #[test]
    fn color_lists() {
        assert_eq!(parse_colors("1, 2,3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_colors("").unwrap(), Vec::<Color>::new());
        assert!(parse_colors("1,-1").is_err());
    }
}
