//! Numerical specialization at `A_r = e^{i pi / 2r}` and an independent
//! computation of the normalized WRT ratio, with every disk gate replaced by
//! an `omega`-colored belt.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{BeltChirality, Diagram, Slice};
use crate::engine::{self, EngineError};
use crate::qring::{root_of_unity, ComplexValue, LaurentOrNot, LaurentPoly, QringError, RatFn};
use crate::recoupling::{quantum_delta, Color};
use crate::tl::{IntegralTl, TlElement};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WrtError {
    #[error("r = {0} is below 3")]
    InvalidRoot(u32),
    #[error("color {color} exceeds the maximal color {max} at this root")]
    ColorOutOfRange { color: Color, max: Color },
    #[error("the normalizing denominator vanishes; r is too small")]
    DenominatorZero,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl From<QringError> for WrtError {
    fn from(_: QringError) -> Self {
        WrtError::PoleAtPoint
    }
}

/// The root `A_r` and maximal color `k = r - 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootSpec {
    pub r: u32,
    pub a: ComplexValue,
    pub k: Color,
}

impl RootSpec {
    pub fn new(r: u32) -> Result<Self, WrtError> {
        if r < 3 {
            return Err(WrtError::InvalidRoot(r));
        }
        Ok(Self { r, a: root_of_unity(r), k: (r - 2) as Color })
    }
}

/// `(i, Delta_i(A_r))` for `i = 0..=k`.
pub fn omega_weights(spec: &RootSpec) -> Result<Vec<(Color, ComplexValue)>, WrtError> {
    (0..=spec.k).map(|i| Ok((i, quantum_delta(i).evaluate_at(spec.a)?))).collect()
}

/// The Temperley-Lieb element of one plain belt around `width` strands.
fn plain_belt(width: usize, chirality: BeltChirality) -> TlElement<LaurentPoly> {
    let gated = Diagram::new(vec![1; width], vec![Slice::DiskGate { id: "B".into(), pos: 0, span: width }])
        .expect("a gate over all strands is valid");
    let belt = gated.expand_gate_to_belt("B", 1, chirality).expect("gate exists");
    let e = engine::tangle_element(&belt).expect("belt tangle is gate-free");
    e.map_coeffs(|c| match c.as_laurent() {
        LaurentOrNot::Laurent(p) => p,
        LaurentOrNot::NotLaurent => unreachable!("crossings have Laurent coefficients"),
    })
}

/// Belts colored `0..=k` around `width` strands, as `S_c` of the plain belt:
/// `E_0 = 1`, `E_1 = B`, `E_c = B E_(c-1) - E_(c-2)`.
pub fn colored_belts(width: usize, k: Color, chirality: BeltChirality) -> Vec<Arc<IntegralTl>> {
    let b = plain_belt(width, chirality);
    let mut out: Vec<TlElement<LaurentPoly>> = vec![TlElement::identity(width)];
    if k >= 1 {
        out.push(b.clone());
    }
    for c in 2..=k as usize {
        let next = out[c - 1].compose(&b).unwrap().sub(&out[c - 2]).unwrap();
        out.push(next);
    }
    out.into_iter()
        .map(|numerators| Arc::new(IntegralTl { numerators, denom: LaurentPoly::one() }))
        .collect()
}

fn gate_widths(d: &Diagram) -> Vec<(String, usize)> {
    let profiles = d.profiles();
    d.slices()
        .iter()
        .enumerate()
        .filter_map(|(i, s)| match s {
            Slice::DiskGate { id, pos, span } => {
                Some((id.clone(), profiles[i][*pos..pos + span].iter().map(|&c| c as usize).sum()))
            }
            _ => None,
        })
        .collect()
}

fn check_colors(d: &Diagram, spec: &RootSpec) -> Result<(), WrtError> {
    let max = d.profiles().iter().flatten().copied().max().unwrap_or(0);
    let vmax = d
        .slices()
        .iter()
        .filter_map(|s| match *s {
            Slice::VertexMerge { c, .. } | Slice::VertexSplit { c, .. } => Some(c),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let color = max.max(vmax);
    if color > spec.k {
        return Err(WrtError::ColorOutOfRange { color, max: spec.k });
    }
    Ok(())
}

/// The ratio with caller-supplied weights for colors `0..weights.len()`.
pub fn wrt_ratio_with(
    d: &Diagram,
    spec: &RootSpec,
    weights: &[ComplexValue],
    chirality: BeltChirality,
) -> Result<ComplexValue, WrtError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed.into());
    }
    check_colors(d, spec)?;
    let gates = gate_widths(d);
    let norm: ComplexValue = (0..weights.len())
        .map(|i| Ok(weights[i] * quantum_delta(i as Color).evaluate_at(spec.a)?))
        .sum::<Result<ComplexValue, WrtError>>()?;
    if norm.norm() < 1e-12 {
        return Err(WrtError::DenominatorZero);
    }
    let k = (weights.len() - 1) as Color;
    let belts: Vec<Vec<Arc<IntegralTl>>> = gates.iter().map(|(_, w)| colored_belts(*w, k, chirality)).collect();
    let assignments: Vec<Vec<usize>> =
        gates.iter().map(|_| 0..weights.len()).multi_cartesian_product().collect();
    let values: Vec<Result<ComplexValue, WrtError>> = assignments
        .par_iter()
        .map(|colors| {
            let inserts: HashMap<String, Arc<IntegralTl>> = gates
                .iter()
                .zip(colors)
                .enumerate()
                .map(|(g, ((id, _), &c))| (id.clone(), belts[g][c].clone()))
                .collect();
            let weight: ComplexValue = colors.iter().map(|&c| weights[c]).product();
            if weight == ComplexValue::new(0.0, 0.0) {
                return Ok(weight);
            }
            let v = engine::eval_with_gate_elements(d, &inserts)?.evaluate_at(spec.a)?;
            Ok(weight * v)
        })
        .collect();
    let mut num = ComplexValue::new(0.0, 0.0);
    for v in values {
        num += v?;
    }
    Ok(num / norm.powi(gates.len() as i32))
}

/// `Z_r(M, G) / Z_r(M)` with the standard weights `Delta_i(A_r)`.
pub fn wrt_ratio(d: &Diagram, spec: &RootSpec) -> Result<ComplexValue, WrtError> {
    let w: Vec<ComplexValue> = omega_weights(spec)?.into_iter().map(|(_, x)| x).collect();
    wrt_ratio_with(d, spec, &w, BeltChirality::FrontOver)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// One row of a convergence report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRow {
    pub r: u32,
    #[serde(serialize_with = "ser_complex")]
    pub lhs: Option<ComplexValue>,
    #[serde(serialize_with = "ser_complex")]
    pub rhs: Option<ComplexValue>,
    pub abs_err: Option<f64>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn ser_complex<S: serde::Serializer>(z: &Option<ComplexValue>, s: S) -> Result<S::Ok, S::Error> {
    z.map(|z| [z.re, z.im]).serialize(s)
}

/// Compares `bracket(d)` at `A_r` with [`wrt_ratio`] for each `r` in
/// `r_lo..=r_hi`. Poles, out-of-range colors and vanishing denominators are
/// reported as skips.
pub fn convergence_check(d: &Diagram, r_lo: u32, r_hi: u32, tol: f64) -> Result<Vec<CheckRow>, WrtError> {
    let exact = engine::bracket(d)?;
    convergence_check_with(&exact, d, r_lo, r_hi, tol)
}

/// As [`convergence_check`], reusing an already computed bracket.
pub fn convergence_check_with(
    exact: &RatFn,
    d: &Diagram,
    r_lo: u32,
    r_hi: u32,
    tol: f64,
) -> Result<Vec<CheckRow>, WrtError> {
    if r_lo < 3 {
        return Err(WrtError::InvalidRoot(r_lo));
    }
    let mut rows = Vec::new();
    for r in r_lo..=r_hi {
        let spec = RootSpec::new(r)?;
        let skip = |reason: String, lhs: Option<ComplexValue>| CheckRow {
            r,
            lhs,
            rhs: None,
            abs_err: None,
            status: CheckStatus::Skip,
            reason: Some(reason),
        };
        let lhs = match exact.evaluate_at(spec.a) {
            Ok(v) => v,
            Err(_) => {
                rows.push(skip("PoleAtPoint".into(), None));
                continue;
            }
        };
        let rhs = match wrt_ratio(d, &spec) {
            Ok(v) => v,
            Err(WrtError::PoleAtPoint) => {
                rows.push(skip("PoleAtPoint".into(), Some(lhs)));
                continue;
            }
            Err(WrtError::ColorOutOfRange { .. }) => {
                rows.push(skip("ColorOutOfRange".into(), Some(lhs)));
                continue;
            }
            Err(WrtError::DenominatorZero) => {
                rows.push(skip("DenominatorZero".into(), Some(lhs)));
                continue;
            }
            Err(e) => return Err(e),
        };
        let err = (lhs - rhs).norm();
        rows.push(CheckRow {
            r,
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_err: Some(err),
            status: if err < tol { CheckStatus::Pass } else { CheckStatus::Fail },
            reason: None,
        });
    }
    Ok(rows)
}
