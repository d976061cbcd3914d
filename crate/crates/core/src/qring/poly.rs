//! Dense univariate polynomials over the integers, coefficients in ascending
//! degree. Only what the rational-function layer needs: multiplication, exact
//! division and a primitive-remainder-sequence gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.to_vec();
    }
    p.iter().map(|x| x / &c).collect()
}

/// Quotient `a / b` when `b` divides `a` exactly over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &qc * bj;
        }
        q[k] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Pseudo-remainder of `a` by `b` (`deg a >= deg b`).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    let db = b.len() - 1;
    while r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// gcd over `Z[x]`, normalized to a positive leading coefficient. Neither
/// argument may be zero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    let cont = content(&a).gcd(&content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            a = vec![BigInt::one()];
            break;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    let mut g: Vec<BigInt> = a.into_iter().map(|c| c * &cont).collect();
    if g.last().is_some_and(Signed::is_negative) {
        for c in g.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(gcd(&p(&[4, 6]), &p(&[6, 9])), p(&[2, 3]));
        assert_eq!(gcd(&p(&[4]), &p(&[6, 2])), p(&[2]));
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[1, -1])), p(&[-1, 1]));
    }

    #[test]
    fn exact_division_rejects_remainders() {
        assert_eq!(div_exact(&p(&[-1, 0, 1]), &p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(div_exact(&p(&[1, 0, 1]), &p(&[1, 1])), None);
        assert_eq!(div_exact(&p(&[1, 1]), &p(&[2])), None);
    }
}
