//! The invariant: wormhole reduction followed by exact Kauffman bracket
//! evaluation of colored graphs in `S^3`.
//!
//! Two evaluators share the same cabling. [`eval_s3_transfer`] sweeps the
//! diagram keeping one coefficient per boundary matching;
//! [`eval_s3_bruteforce`] expands every smoothing and projector term
//! separately and serves as the reference.

mod brute;
mod cable;
mod transfer;
mod wormhole;

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::Diagram;
use crate::qring::{LaurentPoly, RatFn};
use crate::tl::{IntegralTl, TlElement};

pub use wormhole::{gate_terms, wormhole_reduce_with, FusionShape, FusionTree, WeightedDiagrams};

/// Default cap on the number of complete states the reference evaluator
/// may expand.
pub const DEFAULT_BRUTE_BUDGET: f64 = (1u64 << 22) as f64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("diagram is not closed")]
    NotClosed,
    #[error("diagram still has disk gates")]
    HasDiskGates,
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("reference expansion needs {leaves:e} states, budget is {budget:e}")]
    BudgetExceeded { leaves: f64, budget: f64 },
    #[error("element inserted at gate {gate} has width {found}, gate has cabled width {expected}")]
    InsertWidthMismatch { gate: String, expected: usize, found: usize },
    #[error("internal contract violated: {0}")]
    Internal(String),
}

/// Which closed-diagram evaluator to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Evaluator {
    #[default]
    Transfer,
    BruteForce,
}

fn closed_gate_free(d: &Diagram) -> Result<(), EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    if d.has_gates() {
        return Err(EngineError::HasDiskGates);
    }
    Ok(())
}

/// Kauffman bracket of a closed, gate-free colored diagram by the transfer
/// sweep.
pub fn eval_s3_transfer(d: &Diagram) -> Result<RatFn, EngineError> {
    closed_gate_free(d)?;
    let c = cable::cable(d, &HashMap::new())?;
    Ok(transfer::sweep(&c).scalar())
}

/// Kauffman bracket of a closed, gate-free colored diagram by full
/// expansion, within [`DEFAULT_BRUTE_BUDGET`].
pub fn eval_s3_bruteforce(d: &Diagram) -> Result<RatFn, EngineError> {
    eval_s3_bruteforce_with_budget(d, DEFAULT_BRUTE_BUDGET)
}

pub fn eval_s3_bruteforce_with_budget(d: &Diagram, budget: f64) -> Result<RatFn, EngineError> {
    closed_gate_free(d)?;
    let c = cable::cable(d, &HashMap::new())?;
    let num = brute::evaluate(&c, budget)?;
    Ok(RatFn::new(num, insert_denominator(&c)).expect("projector denominators are nonzero"))
}

/// Number of complete states the reference evaluator would expand.
pub fn bruteforce_leaf_count(d: &Diagram) -> Result<f64, EngineError> {
    let c = cable::cable(d, &HashMap::new())?;
    Ok(brute::leaf_count(&c))
}

fn insert_denominator(c: &cable::Cabled) -> LaurentPoly {
    c.ops
        .iter()
        .filter_map(|op| match op {
            cable::CableOp::Insert { elem, .. } => Some(elem.denom.clone()),
            _ => None,
        })
        .fold(LaurentPoly::one(), |acc, x| &acc * &x)
}

/// Evaluates a gate-free closed diagram with the chosen evaluator.
pub fn eval_s3(d: &Diagram, evaluator: Evaluator) -> Result<RatFn, EngineError> {
    match evaluator {
        Evaluator::Transfer => eval_s3_transfer(d),
        Evaluator::BruteForce => eval_s3_bruteforce(d),
    }
}

/// The Temperley-Lieb element of a gate-free tangle, on the cabled
/// boundary: each boundary point of color `n` contributes `n` points.
pub fn tangle_element(d: &Diagram) -> Result<TlElement<RatFn>, EngineError> {
    if d.has_gates() {
        return Err(EngineError::HasDiskGates);
    }
    let c = cable::cable(d, &HashMap::new())?;
    Ok(transfer::sweep(&c).element())
}

/// Evaluates a closed diagram in which each gate is replaced by the given
/// Temperley-Lieb element acting on the gate's cabled strands.
pub fn eval_with_gate_elements(
    d: &Diagram,
    elements: &HashMap<String, Arc<IntegralTl>>,
) -> Result<RatFn, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    let c = cable::cable(d, elements)?;
    Ok(transfer::sweep(&c).scalar())
}

/// Fusion expansion with the default left-comb trees.
pub fn wormhole_reduce(d: &Diagram) -> Result<WeightedDiagrams, EngineError> {
    wormhole_reduce_with(d, FusionShape::LeftComb)
}

/// The invariant of a closed diagram in a wormhole space.
pub fn bracket(d: &Diagram) -> Result<RatFn, EngineError> {
    bracket_with(d, FusionShape::LeftComb, Evaluator::Transfer)
}

pub fn bracket_with(d: &Diagram, shape: FusionShape, evaluator: Evaluator) -> Result<RatFn, EngineError> {
    let reduced = wormhole_reduce_with(d, shape)?;
    let values: Vec<Result<RatFn, EngineError>> = reduced
        .terms
        .par_iter()
        .map(|(w, g)| eval_s3(g, evaluator).map(|v| w * &v))
        .collect();
    let mut acc = RatFn::zero();
    for v in values {
        acc = &acc + &v?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_dsl;
    use crate::fixtures;
    use crate::qring::LaurentPoly;
    use crate::recoupling::quantum_delta;

    fn lp(t: &[(i64, i64)]) -> RatFn {
        RatFn::from(LaurentPoly::from_terms(t.iter().copied()))
    }

    fn both(d: &Diagram) -> RatFn {
        let t = eval_s3_transfer(d).unwrap();
        let b = eval_s3_bruteforce(d).unwrap();
        assert_eq!(t, b, "evaluators disagree on\n{d}");
        t
    }

    #[test]
    fn empty_and_unknots() {
        assert_eq!(both(&Diagram::empty()), RatFn::one());
        assert_eq!(both(&parse_dsl("cup 0 1\ncap 0\n").unwrap()), RatFn::loop_value());
        assert_eq!(both(&parse_dsl("cup 0 2\ncap 0\n").unwrap()), lp(&[(4, 1), (0, 1), (-4, 1)]));
        assert_eq!(both(&parse_dsl("cup 0 0\ncap 0\n").unwrap()), RatFn::one());
    }

    #[test]
    fn hopf_link_colored_one() {
        // d (-A^4 - A^-4): the loop value is not normalized away
        let want = lp(&[(6, 1), (2, 1), (-2, 1), (-6, 1)]);
        assert_eq!(both(&fixtures::hopf_link(1, 1, true)), want);
        assert_eq!(both(&fixtures::hopf_link(1, 1, false)), want);
    }

    #[test]
    fn single_kink() {
        // the positive kink multiplies by -A^3
        assert_eq!(both(&fixtures::kinked_unknot(1, true)), lp(&[(5, 1), (1, 1)]));
    }

    #[test]
    fn projector_on_unknot_matches_delta() {
        for n in 0..=4 {
            let d = parse_dsl(&format!("cup 0 {n}\ncap 0\n")).unwrap();
            assert_eq!(both(&d), quantum_delta(n));
        }
    }

    #[test]
    fn colored_hopf_oracle_agreement() {
        for (a, b) in [(1, 2), (2, 1), (2, 2)] {
            both(&fixtures::hopf_link(a, b, true));
            both(&fixtures::hopf_link(a, b, false));
        }
    }

    #[test]
    fn theta_graphs_agree() {
        for (a, b, c) in [(1, 1, 2), (2, 2, 2), (1, 2, 3), (2, 2, 0)] {
            both(&fixtures::theta_graph(a, b, c));
        }
    }

    #[test]
    fn tangle_element_of_a_crossing() {
        let d = parse_dsl("bottom 1 1\nx+ 0\ntop 1 1\n").unwrap();
        let e = tangle_element(&d).unwrap();
        let want = TlElement::identity(2)
            .scale(&RatFn::a_pow(1))
            .add(&TlElement::generator(2, 1).scale(&RatFn::a_pow(-1)))
            .unwrap();
        assert_eq!(e, want);
    }

    #[test]
    fn tangle_element_of_a_colored_strand_is_the_projector() {
        let d = Diagram::identity(vec![3]);
        assert_eq!(tangle_element(&d).unwrap(), crate::tl::jones_wenzl(3).element);
    }

    #[test]
    fn closed_errors() {
        let open = Diagram::identity(vec![1]);
        assert_eq!(eval_s3_transfer(&open), Err(EngineError::NotClosed));
        assert_eq!(eval_s3_transfer(&fixtures::z_power(2)), Err(EngineError::HasDiskGates));
        assert_eq!(eval_s3_bruteforce(&fixtures::z_power(2)), Err(EngineError::HasDiskGates));
        assert_eq!(bracket(&open), Err(EngineError::NotClosed));
    }

    #[test]
    fn wormhole_examples() {
        assert_eq!(bracket(&Diagram::empty()).unwrap(), RatFn::one());
        assert!(wormhole_reduce(&fixtures::z_power(1)).unwrap().is_empty());
        let z2 = wormhole_reduce(&fixtures::z_power(2)).unwrap();
        assert_eq!(z2.len(), 1);
        assert_eq!(z2.terms[0].0, RatFn::loop_value().inverse().unwrap());
        assert_eq!(eval_s3_transfer(&z2.terms[0].1).unwrap(), RatFn::loop_value());
        let catalan = [1, 0, 1, 0, 2, 0, 5, 0, 14];
        for (m, &c) in catalan.iter().enumerate() {
            assert_eq!(bracket(&fixtures::z_power(m)).unwrap(), RatFn::from_int(c), "z^{m}");
        }
    }

    #[test]
    fn a_gate_around_both_legs_of_one_loop_is_trivial() {
        let d = parse_dsl("cup 0 1\ndisk D1 0 2\ncap 0\n").unwrap();
        assert_eq!(bracket(&d).unwrap(), RatFn::loop_value());
    }

    #[test]
    fn fusion_shapes_agree_on_z_powers() {
        for m in 2..=6 {
            let z = fixtures::z_power(m);
            let l = bracket_with(&z, FusionShape::LeftComb, Evaluator::Transfer).unwrap();
            for shape in [FusionShape::RightComb, FusionShape::Balanced] {
                assert_eq!(bracket_with(&z, shape, Evaluator::Transfer).unwrap(), l);
            }
        }
    }

    #[test]
    fn two_gate_knot_is_one_over_d() {
        let k = fixtures::two_gate_knot();
        assert_eq!(bracket(&k).unwrap(), RatFn::loop_value().inverse().unwrap());
    }
}
