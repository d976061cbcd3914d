//! The field `Q(A)` of rational functions, kept in a reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{self, LaurentPoly};
use super::QringError;

/// Relative tolerance below which a denominator counts as vanishing.
pub const DEFAULT_POLE_TOLERANCE: f64 = 1e-12;

/// A rational function `num / den`.
///
/// Canonical form: `num` and `den` share no common factor over `Z[A]`, and
/// `den` has lowest exponent 0 with a positive leading coefficient. Zero is
/// `0 / 1`. Derived equality is therefore equality in `Q(A)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Outcome of [`RatFn::as_laurent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaurentOrNot {
    Laurent(LaurentPoly),
    NotLaurent,
}

impl LaurentOrNot {
    pub fn ok(self) -> Option<LaurentPoly> {
        match self {
            LaurentOrNot::Laurent(p) => Some(p),
            LaurentOrNot::NotLaurent => None,
        }
    }
}

impl RatFn {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `A^k`.
    pub fn a_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::a_pow(k))
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn loop_value() -> Self {
        Self::from_laurent(LaurentPoly::loop_value())
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QringError> {
        if den.is_zero() {
            return Err(QringError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.low() - den.low();
        let (mut n, mut d) = if den.is_monomial() {
            let c = den.leading_coeff().unwrap().clone();
            let g = num.content().gcd_with(&c);
            (
                LaurentPoly::from_dense(0, num.dense().iter().map(|x| x / &g).collect()),
                LaurentPoly::constant(c / g),
            )
        } else {
            let n0 = LaurentPoly::from_dense(0, num.dense().to_vec());
            let d0 = LaurentPoly::from_dense(0, den.dense().to_vec());
            let g = laurent::gcd(&n0, &d0);
            if g.is_one() {
                (n0, d0)
            } else {
                (n0.div_exact(&g).unwrap(), d0.div_exact(&g).unwrap())
            }
        };
        if d.leading_coeff().unwrap().is_negative() {
            n = -n;
            d = -d;
        }
        // d has lowest exponent 0 after the reduction above
        let dl = d.low();
        Self { num: n.shift(shift + dl), den: d.shift(-dl) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Re-canonicalizes; the identity on canonical values.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &RatFn) -> Result<RatFn, QringError> {
        if rhs.is_zero() {
            return Err(QringError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inverse(&self) -> Result<RatFn, QringError> {
        RatFn::one().checked_div(self)
    }

    /// The field automorphism `A -> A^-1`.
    pub fn involute(&self) -> Self {
        Self::canonical(self.num.involute(), self.den.involute())
    }

    pub fn pow(&self, n: i32) -> Result<Self, QringError> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let n = n as u32;
        Ok(Self { num: self.num.pow(n), den: self.den.pow(n) }.canonicalize())
    }

    pub fn scale_laurent(&self, p: &LaurentPoly) -> Self {
        Self::canonical(&self.num * p, self.den.clone())
    }

    /// Evaluates at a complex point with the default pole tolerance.
    pub fn evaluate_at(&self, z: Complex64) -> Result<Complex64, QringError> {
        self.evaluate_at_tol(z, DEFAULT_POLE_TOLERANCE)
    }

    /// Evaluates at `z`; fails when `|den(z)|` is below `tol` relative to the
    /// denominator's coefficient magnitude at `|z|`.
    pub fn evaluate_at_tol(&self, z: Complex64, tol: f64) -> Result<Complex64, QringError> {
        let (dv, dscale) = self.den.evaluate_scaled(z);
        if dv.norm().is_nan() || dv.norm() <= tol * dscale {
            return Err(QringError::PoleAtPoint);
        }
        let v = self.num.evaluate(z) / dv;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(QringError::PoleAtPoint);
        }
        Ok(v)
    }

    /// The Laurent polynomial equal to `self`, when there is one.
    pub fn as_laurent(&self) -> LaurentOrNot {
        // reduced with normalized denominator: integral iff the denominator is 1
        if self.den.is_one() {
            LaurentOrNot::Laurent(self.num.clone())
        } else {
            LaurentOrNot::NotLaurent
        }
    }

    /// A display-friendly `(num, den)` pair: the denominator's exponents are
    /// centred around zero and the numerator's leading coefficient is
    /// positive. Used only for printing.
    fn display_parts(&self) -> (LaurentPoly, LaurentPoly) {
        let lo = self.den.min_exp().unwrap();
        let hi = self.den.max_exp().unwrap();
        let s = -(lo + hi).div_euclid(2);
        let (mut n, mut d) = (self.num.shift(s), self.den.shift(s));
        if n.leading_coeff().is_some_and(Signed::is_negative) {
            n = -n;
            d = -d;
        }
        (n, d)
    }
}

trait GcdWith {
    fn gcd_with(&self, other: &BigInt) -> BigInt;
}

impl GcdWith for BigInt {
    fn gcd_with(&self, other: &BigInt) -> BigInt {
        num_integer::Integer::gcd(self, other)
    }
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RatFn {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn wrap(p: &LaurentPoly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (n, d) = self.display_parts();
        write!(f, "{}/{}", wrap(&n), wrap(&d))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(d)?;
        RatFn::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl Add<&RatFn> for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFn::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub<&RatFn> for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul<&RatFn> for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from_laurent(&self.num * &rhs.num);
        }
        RatFn::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RatFn::checked_div`] to handle it.
impl Div<&RatFn> for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self.checked_div(rhs).expect("division by zero in Q(A)")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFn> for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: &RatFn) -> RatFn {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::ops::AddAssign<&RatFn> for RatFn {
    fn add_assign(&mut self, rhs: &RatFn) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for RatFn {
    fn sum<I: Iterator<Item = RatFn>>(iter: I) -> Self {
        iter.fold(RatFn::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFn {
    fn product<I: Iterator<Item = RatFn>>(iter: I) -> Self {
        iter.fold(RatFn::one(), |acc, x| acc * x)
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn delta2() -> RatFn {
        RatFn::from(lp(&[(4, 1), (0, 1), (-4, 1)]))
    }

    #[test]
    fn add_monomials() {
        let x = RatFn::a_pow(2) + RatFn::a_pow(-2);
        assert_eq!(x, RatFn::from(lp(&[(2, 1), (-2, 1)])));
    }

    #[test]
    fn square_of_loop_value() {
        let d = RatFn::loop_value();
        assert_eq!(&d * &d, RatFn::from(lp(&[(4, 1), (0, 2), (-4, 1)])));
    }

    #[test]
    fn inverse_of_loop_value_is_canonical() {
        let inv = RatFn::one().checked_div(&RatFn::loop_value()).unwrap();
        // 1/(-A^2 - A^-2) = -A^2 / (A^4 + 1)
        assert_eq!(inv.num(), &LaurentPoly::monomial(-1, 2));
        assert_eq!(inv.den(), &lp(&[(4, 1), (0, 1)]));
        assert_eq!(inv.to_string(), "1/(-A^2 - A^-2)");
        assert_eq!(&inv * &RatFn::loop_value(), RatFn::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFn::one().checked_div(&RatFn::zero()), Err(QringError::DivisionByZero));
        assert!(RatFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn involute_examples() {
        let x = RatFn::from(lp(&[(3, 1), (0, 2)]));
        assert_eq!(x.involute(), RatFn::from(lp(&[(-3, 1), (0, 2)])));
        assert_eq!(RatFn::loop_value().involute(), RatFn::loop_value());
        let inv = delta2().inverse().unwrap();
        assert_eq!(inv.involute(), inv);
    }

    #[test]
    fn as_laurent_examples() {
        let x = RatFn::new(lp(&[(4, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(x.as_laurent(), LaurentOrNot::Laurent(lp(&[(2, 1), (0, 1)])));
        let inv_d = RatFn::loop_value().inverse().unwrap();
        assert_eq!(inv_d.as_laurent(), LaurentOrNot::NotLaurent);
        let d = RatFn::loop_value();
        let dd = (&d * &d).checked_div(&d).unwrap();
        assert_eq!(dd.as_laurent(), LaurentOrNot::Laurent(LaurentPoly::loop_value()));
        let half = RatFn::new(LaurentPoly::one(), LaurentPoly::constant(2)).unwrap();
        assert_eq!(half.as_laurent(), LaurentOrNot::NotLaurent);
    }

    #[test]
    fn evaluation_examples() {
        let z = Complex64::from_polar(1.0, std::f64::consts::PI / 8.0);
        let v = RatFn::a_pow(2).evaluate_at(z).unwrap();
        let want = Complex64::from_polar(1.0, std::f64::consts::PI / 4.0);
        assert!((v - want).norm() < 1e-14);

        let a3 = Complex64::from_polar(1.0, std::f64::consts::PI / 6.0);
        let inv = delta2().inverse().unwrap();
        assert_eq!(inv.evaluate_at(a3), Err(QringError::PoleAtPoint));

        let a = Complex64::from_polar(1.0, std::f64::consts::PI / 10.0);
        let v = RatFn::loop_value().evaluate_at(a).unwrap();
        let want = -2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!((v - Complex64::new(want, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn json_shape() {
        let inv = RatFn::loop_value().inverse().unwrap();
        let s = serde_json::to_string(&inv).unwrap();
        assert_eq!(s, r#"{"num":[[2,-1]],"den":[[0,1],[4,1]]}"#);
        let back: RatFn = serde_json::from_str(&s).unwrap();
        assert_eq!(back, inv);
        // non-canonical input is reduced on the way in
        let raw = r#"{"num":[[2,1],[0,-1]],"den":[[4,1],[0,-1]]}"#;
        let r: RatFn = serde_json::from_str(raw).unwrap();
        assert_eq!(r, RatFn::new(LaurentPoly::one(), lp(&[(2, 1), (0, 1)])).unwrap());
    }
}
