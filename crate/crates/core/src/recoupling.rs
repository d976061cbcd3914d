//! Scalar recoupling data: loop values, theta nets, admissibility, fusion
//! and twist coefficients.
//!
//! The closed forms here are fast paths. Each one is checked in tests
//! against a diagrammatic evaluation (projector closures, theta graphs and
//! kinked unknots evaluated by the engine), which is what pins the
//! conventions.

use thiserror::Error;

use crate::qring::{LaurentPoly, RatFn};

/// An edge color: the number of parallel strands in the cable.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecouplingError {
    #[error("({0}, {1}, {2}) is not an admissible triple")]
    InadmissibleTriple(Color, Color, Color),
}

/// Colors meeting at a trivalent vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleTriple {
    a: Color,
    b: Color,
    c: Color,
}

impl AdmissibleTriple {
    pub fn new(a: Color, b: Color, c: Color) -> Result<Self, RecouplingError> {
        if is_admissible(a, b, c) {
            Ok(Self { a, b, c })
        } else {
            Err(RecouplingError::InadmissibleTriple(a, b, c))
        }
    }

    pub fn colors(&self) -> (Color, Color, Color) {
        (self.a, self.b, self.c)
    }

    /// Strands running a-b, b-c and a-c inside the vertex.
    pub fn internal_counts(&self) -> (Color, Color, Color) {
        let (a, b, c) = (self.a, self.b, self.c);
        ((a + b - c) / 2, (b + c - a) / 2, (a + c - b) / 2)
    }
}

/// Even sum and the triangle inequalities.
pub fn is_admissible(a: Color, b: Color, c: Color) -> bool {
    (a + b + c).is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b
}

/// The colors `c` with `(a, b, c)` admissible, ascending.
pub fn admissible_thirds(a: Color, b: Color) -> impl Iterator<Item = Color> {
    (a.abs_diff(b)..=a + b).step_by(2)
}

/// `Delta_n = (-1)^n [n+1]` as a Laurent polynomial.
pub(crate) fn delta_laurent(n: usize) -> LaurentPoly {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let n = n as i64;
    LaurentPoly::from_terms((0..=n).map(|j| (2 * n - 4 * j, sign)))
}

/// The quantum integer `[m] = (A^2m - A^-2m) / (A^2 - A^-2)`.
pub fn quantum_integer(m: u32) -> LaurentPoly {
    let m = i64::from(m);
    LaurentPoly::from_terms((0..m).map(|j| (2 * (m - 1) - 4 * j, 1)))
}

pub fn quantum_factorial(m: u32) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k))
}

/// `Delta_n`, the value of an unknot colored `n`.
pub fn quantum_delta(n: Color) -> RatFn {
    RatFn::from(delta_laurent(n as usize))
}

/// The theta graph with edges colored `a`, `b`, `c`.
pub fn theta_net(a: Color, b: Color, c: Color) -> Result<RatFn, RecouplingError> {
    let t = AdmissibleTriple::new(a, b, c)?;
    let (k, i, j) = t.internal_counts();
    let sign = if (i + j + k) % 2 == 0 { 1 } else { -1 };
    let num = quantum_factorial(i + j + k + 1)
        * quantum_factorial(i)
        * quantum_factorial(j)
        * quantum_factorial(k);
    let den = quantum_factorial(i + j) * quantum_factorial(j + k) * quantum_factorial(i + k);
    let v = RatFn::new(num.scale(&sign.into()), den).expect("quantum factorials are nonzero");
    Ok(v)
}

/// Coefficients `Delta_c / theta(a, b, c)` of the fusion identity
/// `id_a (x) id_b = sum_c coeff(c) * (merge a,b into c; split c into a,b)`.
pub fn fusion_coefficients(a: Color, b: Color) -> Vec<(Color, RatFn)> {
    admissible_thirds(a, b)
        .map(|c| {
            let theta = theta_net(a, b, c).unwrap();
            (c, quantum_delta(c).checked_div(&theta).unwrap())
        })
        .collect()
}

/// Factor by which one positive kink (the curl produced by a `x+` slice, see
/// `fixtures::kinked_unknot`) multiplies an edge colored `n`:
/// `(-1)^n A^(n(n+2))`.
pub fn twist_coefficient(n: Color) -> RatFn {
    let n = i64::from(n);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    RatFn::from(LaurentPoly::monomial(sign, n * (n + 2)))
}
