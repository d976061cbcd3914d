//! Laurent polynomials in one variable `A` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::poly;

/// An element of `Z[A, A^-1]`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `A^(low + i)`. The first
/// and last stored coefficients are nonzero, and the zero polynomial has no
/// coefficients at all (with `low == 0`), so derived equality is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: vec![c] }
    }

    /// The indeterminate `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// `A^exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn loop_value() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Builds from a dense coefficient vector starting at `A^low`, trimming
    /// zeros at both ends.
    pub(crate) fn from_dense(mut low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a single term `c A^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficient of the highest power of `A`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending in exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The bar involution `A -> A^-1`.
    pub fn involute(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { low: -hi, coeffs }
            }
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        poly::content(&self.coeffs)
    }

    /// Exact quotient in `Z[A, A^-1]`, or `None` when `other` does not divide
    /// `self` there.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division of a Laurent polynomial by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let q = poly::div_exact(&self.coeffs, &other.coeffs)?;
        Some(Self::from_dense(self.low - other.low, q))
    }

    /// Horner evaluation at a complex point. Returns the value together with
    /// the magnitude scale `sum |c_i| |z|^(e_i)` used for relative tolerances.
    pub fn evaluate_scaled(&self, z: Complex64) -> (Complex64, f64) {
        if self.is_zero() {
            return (Complex64::new(0.0, 0.0), 0.0);
        }
        let r = z.norm();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut mag = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let cf = c.to_f64().unwrap_or(f64::INFINITY);
            acc = acc * z + cf;
            mag = mag * r + cf.abs();
        }
        let base = z.powi(self.low as i32);
        (acc * base, mag * r.powi(self.low as i32))
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.evaluate_scaled(z).0
    }

    pub(crate) fn low(&self) -> i64 {
        self.low
    }

    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Rewrites a bar-symmetric polynomial as a polynomial in `d = -A^2 - A^-2`,
    /// returning its coefficients in ascending powers of `d`. `None` if the
    /// polynomial is not in `Z[d]`.
    pub fn to_poly_in_loop_value(&self) -> Option<Vec<BigInt>> {
        let mut rest = self.clone();
        let mut out: Vec<BigInt> = Vec::new();
        let d = Self::loop_value();
        while let Some(hi) = rest.max_exp() {
            if hi < 0 || hi % 2 != 0 {
                return None;
            }
            let m = (hi / 2) as usize;
            // d^m has leading term (-1)^m A^(2m)
            let mut c = rest.leading_coeff().unwrap().clone();
            if m % 2 == 1 {
                c = -c;
            }
            if out.len() <= m {
                out.resize(m + 1, BigInt::zero());
            }
            out[m] = c.clone();
            rest = &rest - &d.pow(m as u32).scale(&c);
        }
        Some(out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Terms in descending exponent order, e.g. `-A^2 - A^-2`, `2A^3 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "A")?;
                    } else {
                        write!(f, "A^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

fn add_into(acc: &mut LaurentPoly, rhs: &LaurentPoly, sign: bool) {
    if rhs.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if sign { rhs.clone() } else { -rhs };
        return;
    }
    let lo = acc.low.min(rhs.low);
    let hi = acc.max_exp().unwrap().max(rhs.max_exp().unwrap());
    let mut coeffs = std::mem::take(&mut acc.coeffs);
    if acc.low > lo {
        let pad = (acc.low - lo) as usize;
        coeffs.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
    }
    coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
    let off = (rhs.low - lo) as usize;
    for (i, c) in rhs.coeffs.iter().enumerate() {
        if sign {
            coeffs[off + i] += c;
        } else {
            coeffs[off + i] -= c;
        }
    }
    *acc = LaurentPoly::from_dense(lo, coeffs);
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() && rhs.coeffs[0].is_one() {
            return self.shift(rhs.low);
        }
        if self.is_monomial() && self.coeffs[0].is_one() {
            return rhs.shift(self.low);
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

// Serialized as a sorted list of [exponent, coefficient] pairs. Coefficients
// that fit in an i64 are plain JSON integers, larger ones are decimal strings.

fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, coeff_to_json(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PairsVisitor;
        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<S: SeqAccess<'de>>(self, mut seq: S) -> Result<LaurentPoly, S::Error> {
                let mut terms = Vec::new();
                while let Some((e, c)) = seq.next_element::<(i64, serde_json::Value)>()? {
                    let c: BigInt = match c {
                        serde_json::Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .ok_or_else(|| de::Error::custom("non-integer coefficient"))?,
                        serde_json::Value::String(s) => {
                            s.parse().map_err(|_| de::Error::custom("bad integer string"))?
                        }
                        _ => return Err(de::Error::custom("coefficient must be integer")),
                    };
                    terms.push((e, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }
        d.deserialize_seq(PairsVisitor)
    }
}

/// Greatest common divisor of two Laurent polynomials, normalized to have
/// lowest exponent 0 and positive leading coefficient.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_unit(b);
    }
    if b.is_zero() {
        return normalize_unit(a);
    }
    LaurentPoly::from_dense(0, poly::gcd(a.dense(), b.dense()))
}

fn normalize_unit(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let mut c = a.coeffs.clone();
    if c.last().unwrap().is_negative() {
        for x in &mut c {
            *x = -std::mem::take(x);
        }
    }
    LaurentPoly::from_dense(0, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn canonical_trimming() {
        let p = lp(&[(3, 1), (3, -1), (5, 2)]);
        assert_eq!(p, LaurentPoly::monomial(2, 5));
        assert!(lp(&[(1, 1), (1, -1)]).is_zero());
        assert_eq!(lp(&[]), LaurentPoly::zero());
    }

    #[test]
    fn add_mul_basics() {
        let a2 = LaurentPoly::a_pow(2);
        let am2 = LaurentPoly::a_pow(-2);
        assert_eq!(&a2 + &am2, lp(&[(2, 1), (-2, 1)]));
        let d = LaurentPoly::loop_value();
        assert_eq!(&d * &d, lp(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn display_format() {
        assert_eq!(LaurentPoly::loop_value().to_string(), "-A^2 - A^-2");
        assert_eq!(lp(&[(3, 2), (0, 1)]).to_string(), "2A^3 + 1");
        assert_eq!(lp(&[(1, 1)]).to_string(), "A");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn involute_reverses_exponents() {
        assert_eq!(lp(&[(3, 1), (0, 2)]).involute(), lp(&[(-3, 1), (0, 2)]));
        assert_eq!(LaurentPoly::loop_value().involute(), LaurentPoly::loop_value());
    }

    #[test]
    fn exact_division() {
        let num = lp(&[(4, 1), (0, -1)]);
        let den = lp(&[(2, 1), (0, -1)]);
        assert_eq!(num.div_exact(&den), Some(lp(&[(2, 1), (0, 1)])));
        assert_eq!(LaurentPoly::one().div_exact(&LaurentPoly::loop_value()), None);
        // 2 does not divide A + 1
        assert_eq!(lp(&[(1, 1), (0, 1)]).div_exact(&LaurentPoly::constant(2)), None);
    }

    #[test]
    fn poly_in_loop_value() {
        let d = LaurentPoly::loop_value();
        let p = &(&d.pow(4) - &d.pow(2)) + &LaurentPoly::constant(3);
        let v = p.to_poly_in_loop_value().unwrap();
        let want: Vec<BigInt> = [3, 0, -1, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(v, want);
        assert!(LaurentPoly::a().to_poly_in_loop_value().is_none());
    }

    #[test]
    fn json_roundtrip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_terms([(-2, big.clone()), (3, BigInt::from(-7))]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-2,"123456789012345678901234567890"],[3,-7]]"#);
        let q: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }
}
