//! Exact scalars: `Z[A, A^-1]`, its fraction field `Q(A)` with the bar
//! involution `A -> A^-1`, and numerical evaluation at complex points.

mod laurent;
mod poly;
mod ratfn;

pub use laurent::{gcd as laurent_gcd, LaurentPoly};
pub use num_complex::Complex64 as ComplexValue;
pub use ratfn::{LaurentOrNot, RatFn, DEFAULT_POLE_TOLERANCE};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum QringError {
    #[error("division by zero in Q(A)")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
}

/// `e^{i pi / 2r}`, the primitive `4r`-th root of unity at which the level
/// `r - 2` theory is recovered.
pub fn root_of_unity(r: u32) -> ComplexValue {
    ComplexValue::from_polar(1.0, std::f64::consts::PI / (2.0 * f64::from(r)))
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, -4i64..=4), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn ratfn() -> impl Strategy<Value = RatFn> {
        (laurent(), laurent().prop_filter("nonzero", |p| !p.is_zero()))
            .prop_map(|(n, d)| RatFn::new(n, d).unwrap())
    }

    fn wide_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-40i64..=40, -5i64..=5), 0..8).prop_map(LaurentPoly::from_terms)
    }

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in ratfn(), b in ratfn(), c in ratfn()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, RatFn::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), RatFn::one());
            }
        }

        #[test]
        fn canonical_form_is_idempotent(a in ratfn()) {
            prop_assert_eq!(a.canonicalize(), a.clone());
            prop_assert_eq!(a.canonicalize().canonicalize(), a.canonicalize());
        }

        #[test]
        fn involution_is_a_field_automorphism(a in ratfn(), b in ratfn()) {
            prop_assert_eq!(a.involute().involute(), a.clone());
            prop_assert_eq!((&a * &b).involute(), &a.involute() * &b.involute());
            prop_assert_eq!((&a + &b).involute(), &a.involute() + &b.involute());
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(p in wide_laurent(), q in wide_laurent(), t in 0.05f64..3.0) {
            let z = ComplexValue::from_polar(1.0, t);
            let (p, q) = (RatFn::from(p), RatFn::from(q));
            let ev = |x: &RatFn| x.evaluate_at(z).unwrap();
            prop_assert!(close(ev(&(&p + &q)), ev(&p) + ev(&q), 1e-10));
            prop_assert!(close(ev(&(&p * &q)), ev(&p) * ev(&q), 1e-10));
        }

        #[test]
        fn bar_is_complex_conjugation_on_the_circle(a in ratfn(), t in 0.05f64..3.0) {
            let z = ComplexValue::from_polar(1.0, t);
            if let (Ok(x), Ok(y)) = (a.evaluate_at(z), a.involute().evaluate_at(z)) {
                prop_assert!(close(y, x.conj(), 1e-10));
            }
        }
    }
}
