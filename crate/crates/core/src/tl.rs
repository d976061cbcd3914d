//! The Temperley-Lieb diagram algebra over `Q(A)`.
//!
//! A [`Matching`] is a crossingless pairing of `n_bottom + n_top` boundary
//! points. Points are indexed naturally: bottom points `0..n_bottom` left to
//! right, then top points `n_bottom..n_bottom + n_top` left to right.
//! Planarity is checked over the boundary circle, which reads the bottom
//! left to right and then the top right to left.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

use crate::qring::{laurent_gcd, LaurentPoly, RatFn};
use crate::recoupling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TlError {
    #[error("boundary mismatch: {0} points against {1}")]
    BoundaryMismatch(usize, usize),
    #[error("not a crossingless perfect matching: {0}")]
    InvalidMatching(String),
}

const UNSET: u16 = u16::MAX;

/// A crossingless perfect matching between bottom and top boundary points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n_bottom: u16,
    n_top: u16,
    partner: Vec<u16>,
}

impl Matching {
    /// Builds a matching from a partner table over natural indices.
    pub fn new(n_bottom: usize, n_top: usize, partner: Vec<usize>) -> Result<Self, TlError> {
        let n = n_bottom + n_top;
        if partner.len() != n || !n.is_multiple_of(2) {
            return Err(TlError::InvalidMatching(format!("{partner:?}")));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= n || p == i || partner[p] != i {
                return Err(TlError::InvalidMatching(format!("{partner:?}")));
            }
        }
        let m = Self {
            n_bottom: n_bottom as u16,
            n_top: n_top as u16,
            partner: partner.into_iter().map(|p| p as u16).collect(),
        };
        if !m.is_planar() {
            return Err(TlError::InvalidMatching(format!("crossing chords in {m}")));
        }
        Ok(m)
    }

    pub(crate) fn from_raw(n_bottom: usize, n_top: usize, partner: Vec<u16>) -> Self {
        let m = Self { n_bottom: n_bottom as u16, n_top: n_top as u16, partner };
        debug_assert!(m.is_planar(), "non-planar matching {m}");
        m
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { i + n } else { i - n } as u16).collect();
        Self::from_raw(n, n, partner)
    }

    /// The turn-back generator `e_i` of `TL_n`, `1 <= i < n`: bottom points
    /// `i-1, i` are joined, as are top points `i-1, i`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator e_{i} does not exist in TL_{n}");
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.partner[a] = b as u16;
        m.partner[b] = a as u16;
        m.partner[n + a] = (n + b) as u16;
        m.partner[n + b] = (n + a) as u16;
        m
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom as usize
    }

    pub fn n_top(&self) -> usize {
        self.n_top as usize
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    fn len(&self) -> usize {
        self.partner.len()
    }

    /// Position of a natural index on the boundary circle.
    fn boundary_pos(&self, i: usize) -> usize {
        let nb = self.n_bottom();
        if i < nb {
            i
        } else {
            nb + self.n_top() - 1 - (i - nb)
        }
    }

    fn natural_index(&self, pos: usize) -> usize {
        let nb = self.n_bottom();
        if pos < nb {
            pos
        } else {
            nb + self.n_top() - 1 - (pos - nb)
        }
    }

    /// Chords are nested or disjoint along the boundary circle.
    pub fn is_planar(&self) -> bool {
        let mut stack = Vec::new();
        for pos in 0..self.len() {
            let other = self.boundary_pos(self.partner(self.natural_index(pos)));
            if other > pos {
                stack.push(other);
            } else if stack.pop() != Some(pos) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Stacks `upper` on top of `self`. Returns the resulting matching and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, upper: &Matching) -> Result<(Matching, usize), TlError> {
        if self.n_top != upper.n_bottom {
            return Err(TlError::BoundaryMismatch(self.n_top(), upper.n_bottom()));
        }
        let nb = self.n_bottom();
        let mid = self.n_top();
        let nt = upper.n_top();
        let mut out = vec![UNSET; nb + nt];
        let mut seen = vec![false; mid];

        // From a point of `self` reached at index q, walk until an outer point.
        let walk_lower = |mut q: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                if q < nb {
                    return q;
                }
                let j = q - nb;
                seen[j] = true;
                let r = upper.partner(j);
                if r >= mid {
                    return nb + (r - mid);
                }
                seen[r] = true;
                q = self.partner(nb + r);
            }
        };

        for start in 0..nb + nt {
            if out[start] != UNSET {
                continue;
            }
            let end = if start < nb {
                walk_lower(self.partner(start), &mut seen)
            } else {
                let r = upper.partner(mid + (start - nb));
                if r >= mid {
                    nb + (r - mid)
                } else {
                    seen[r] = true;
                    walk_lower(self.partner(nb + r), &mut seen)
                }
            };
            out[start] = end as u16;
            out[end] = start as u16;
        }

        let mut loops = 0;
        for j in 0..mid {
            if seen[j] {
                continue;
            }
            loops += 1;
            let mut cur = j;
            loop {
                seen[cur] = true;
                let up = upper.partner(cur);
                seen[up] = true;
                let down = self.partner(nb + up) - nb;
                if down == j {
                    break;
                }
                cur = down;
            }
        }
        Ok((Matching::from_raw(nb, nt, out), loops))
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, right: &Matching) -> Matching {
        let (b1, t1) = (self.n_bottom(), self.n_top());
        let (b2, t2) = (right.n_bottom(), right.n_top());
        let map1 = |i: usize| if i < b1 { i } else { b1 + b2 + (i - b1) };
        let map2 = |i: usize| if i < b2 { b1 + i } else { b1 + b2 + t1 + (i - b2) };
        let mut partner = vec![0u16; b1 + b2 + t1 + t2];
        for i in 0..self.len() {
            partner[map1(i)] = map1(self.partner(i)) as u16;
        }
        for i in 0..right.len() {
            partner[map2(i)] = map2(right.partner(i)) as u16;
        }
        Matching::from_raw(b1 + b2, t1 + t2, partner)
    }

    /// Number of loops in the trace closure (bottom `i` joined to top `i`).
    pub fn closure_loops(&self) -> Result<usize, TlError> {
        let n = self.n_bottom();
        if n != self.n_top() {
            return Err(TlError::BoundaryMismatch(n, self.n_top()));
        }
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut cur = s;
            loop {
                seen[cur] = true;
                let p = self.partner(cur);
                seen[p] = true;
                // across the closure arc
                let next = if p < n { p + n } else { p - n };
                if next == s {
                    break;
                }
                cur = next;
            }
        }
        Ok(loops)
    }

    /// The vertical reflection: bottom and top exchanged.
    pub fn flip(&self) -> Matching {
        let (nb, nt) = (self.n_bottom(), self.n_top());
        let map = |i: usize| if i < nb { nt + i } else { i - nb };
        let mut partner = vec![0u16; nb + nt];
        for i in 0..nb + nt {
            partner[map(i)] = map(self.partner(i)) as u16;
        }
        Matching::from_raw(nt, nb, partner)
    }

    /// True if every bottom point is joined to the top point directly above.
    pub fn is_identity(&self) -> bool {
        self.n_bottom == self.n_top && (0..self.n_bottom()).all(|i| self.partner(i) == i + self.n_bottom())
    }

    /// Nested-parentheses form over the boundary circle, with `|` separating
    /// the bottom points from the top points.
    pub fn to_parens(&self) -> String {
        let mut s = String::with_capacity(self.len() + 1);
        for pos in 0..self.len() {
            if pos == self.n_bottom() {
                s.push('|');
            }
            let other = self.boundary_pos(self.partner(self.natural_index(pos)));
            s.push(if other > pos { '(' } else { ')' });
        }
        if self.n_top == 0 {
            s.push('|');
        }
        s
    }

    pub fn from_parens(s: &str) -> Result<Matching, TlError> {
        let bad = || TlError::InvalidMatching(s.to_string());
        let (bottom, top) = s.split_once('|').ok_or_else(bad)?;
        let (nb, nt) = (bottom.len(), top.len());
        let seq: Vec<char> = bottom.chars().chain(top.chars()).collect();
        let natural = |pos: usize| if pos < nb { pos } else { nb + nt - 1 - (pos - nb) };
        let mut partner = vec![usize::MAX; nb + nt];
        let mut stack = Vec::new();
        for (pos, c) in seq.iter().enumerate() {
            match c {
                '(' => stack.push(pos),
                ')' => {
                    let open = stack.pop().ok_or_else(bad)?;
                    partner[natural(open)] = natural(pos);
                    partner[natural(pos)] = natural(open);
                }
                _ => return Err(bad()),
            }
        }
        if !stack.is_empty() {
            return Err(bad());
        }
        Matching::new(nb, nt, partner)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({})", self.to_parens())
    }
}

/// Every crossingless matching with the given boundary, in a fixed order.
pub fn all_matchings(n_bottom: usize, n_top: usize) -> Vec<Matching> {
    let n = n_bottom + n_top;
    if !n.is_multiple_of(2) {
        return Vec::new();
    }
    let natural = |pos: usize| if pos < n_bottom { pos } else { n_bottom + n_top - 1 - (pos - n_bottom) };
    noncrossing_pairings(n)
        .into_iter()
        .map(|circle| {
            let mut partner = vec![0u16; n];
            for (pos, &other) in circle.iter().enumerate() {
                partner[natural(pos)] = natural(other) as u16;
            }
            Matching::from_raw(n_bottom, n_top, partner)
        })
        .collect()
}

/// Noncrossing perfect matchings of `0..n` on a line, as partner tables.
fn noncrossing_pairings(n: usize) -> Vec<Vec<usize>> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in (lo + 1..hi).step_by(2) {
            let inner = rec(lo + 1, k);
            let outer = rec(k + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut v = Vec::with_capacity(1 + a.len() + b.len());
                    v.push((lo, k));
                    v.extend_from_slice(a);
                    v.extend_from_slice(b);
                    out.push(v);
                }
            }
        }
        out
    }
    rec(0, n)
        .into_iter()
        .map(|pairs| {
            let mut partner = vec![0; n];
            for (a, b) in pairs {
                partner[a] = b;
                partner[b] = a;
            }
            partner
        })
        .collect()
}

/// Coefficient ring for formal combinations of matchings.
pub trait TlScalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn loop_power(loops: usize) -> Self;
}

impl TlScalar for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn loop_power(loops: usize) -> Self {
        RatFn::from(LaurentPoly::loop_value().pow(loops as u32))
    }
}

impl TlScalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn loop_power(loops: usize) -> Self {
        LaurentPoly::loop_value().pow(loops as u32)
    }
}

/// A formal linear combination of matchings sharing one boundary shape.
#[derive(Clone, PartialEq, Eq)]
pub struct TlElement<C = RatFn> {
    n_bottom: usize,
    n_top: usize,
    terms: BTreeMap<Matching, C>,
}

impl<C: TlScalar> TlElement<C> {
    pub fn zero(n_bottom: usize, n_top: usize) -> Self {
        Self { n_bottom, n_top, terms: BTreeMap::new() }
    }

    pub fn from_matching(m: Matching) -> Self {
        Self::from_term(m, C::one())
    }

    pub fn from_term(m: Matching, c: C) -> Self {
        let mut out = Self::zero(m.n_bottom(), m.n_top());
        out.add_term(m, c);
        out
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matching(Matching::identity(n))
    }

    /// `e_i` in `TL_n`, `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::from_matching(Matching::generator(n, i))
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Matching, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Matching) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Matching, c: C) {
        debug_assert_eq!((m.n_bottom(), m.n_top()), (self.n_bottom, self.n_top));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n_bottom, self.n_top);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.mul(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TlError>
    where
        C: std::ops::Neg<Output = C>,
    {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), TlError> {
        if (self.n_bottom, self.n_top) != (other.n_bottom, other.n_top) {
            return Err(TlError::BoundaryMismatch(self.n_bottom + self.n_top, other.n_bottom + other.n_top));
        }
        Ok(())
    }

    /// Stacks `upper` on top of `self`, each closed loop contributing a
    /// factor `d`.
    pub fn compose(&self, upper: &Self) -> Result<Self, TlError> {
        if self.n_top != upper.n_bottom {
            return Err(TlError::BoundaryMismatch(self.n_top, upper.n_bottom));
        }
        let mut out = Self::zero(self.n_bottom, upper.n_top);
        let mut loop_pows: Vec<C> = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &upper.terms {
                let (m, loops) = m1.compose(m2)?;
                while loop_pows.len() <= loops {
                    loop_pows.push(C::loop_power(loop_pows.len()));
                }
                let mut c = c1.mul(c2);
                if loops > 0 {
                    c = c.mul(&loop_pows[loops]);
                }
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, right: &Self) -> Self {
        let mut out = Self::zero(self.n_bottom + right.n_bottom, self.n_top + right.n_top);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &right.terms {
                out.add_term(m1.tensor(m2), c1.mul(c2));
            }
        }
        out
    }

    /// Trace closure: `sum coeff * d^(loops)`.
    pub fn closure_value(&self) -> Result<C, TlError> {
        if self.n_bottom != self.n_top {
            return Err(TlError::BoundaryMismatch(self.n_bottom, self.n_top));
        }
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            acc = acc.add(&c.mul(&C::loop_power(m.closure_loops()?)));
        }
        Ok(acc)
    }

    pub fn map_coeffs<D: TlScalar>(&self, f: impl Fn(&C) -> D) -> TlElement<D> {
        let mut out = TlElement::zero(self.n_bottom, self.n_top);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl TlElement<RatFn> {
    /// Vertical reflection with conjugated coefficients.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.n_top, self.n_bottom);
        for (m, c) in &self.terms {
            out.add_term(m.flip(), c.involute());
        }
        out
    }
}

impl<C: TlScalar + fmt::Display> fmt::Display for TlElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*[{m}]")?;
        }
        Ok(())
    }
}

impl<C: TlScalar> fmt::Debug for TlElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `f^(n)` written over a common denominator: `f^(n) = (1 / denom) * sum P_m m`
/// with Laurent-polynomial numerators.
#[derive(Clone, Debug)]
pub struct IntegralTl {
    pub numerators: TlElement<LaurentPoly>,
    pub denom: LaurentPoly,
}

/// A memoized Jones-Wenzl projector in both forms.
#[derive(Debug)]
pub struct JonesWenzl {
    pub element: TlElement<RatFn>,
    pub integral: IntegralTl,
}

fn jw_cache() -> &'static RwLock<Vec<Arc<JonesWenzl>>> {
    static CACHE: OnceLock<RwLock<Vec<Arc<JonesWenzl>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// The Jones-Wenzl projector `f^(n)` by the Wenzl recursion
/// `f^(n+1) = f^(n) (x) 1 - (D_(n-1) / D_n) (f^(n) (x) 1) e_n (f^(n) (x) 1)`.
pub fn jones_wenzl(n: usize) -> Arc<JonesWenzl> {
    if let Some(jw) = jw_cache().read().unwrap().get(n) {
        return jw.clone();
    }
    let mut cache = jw_cache().write().unwrap();
    while cache.len() <= n {
        let k = cache.len();
        let next = if k == 0 {
            integral_to_jw(TlElement::identity(0), LaurentPoly::one())
        } else if k == 1 {
            integral_to_jw(TlElement::identity(1), LaurentPoly::one())
        } else {
            wenzl_step(&cache[k - 1].integral, k - 1)
        };
        cache.push(Arc::new(next));
    }
    cache[n].clone()
}

fn wenzl_step(prev: &IntegralTl, n: usize) -> JonesWenzl {
    // prev is f^(n); build f^(n+1)
    let lifted = prev.numerators.tensor(&TlElement::identity(1));
    let e = TlElement::<LaurentPoly>::generator(n + 1, n);
    let sandwich = lifted.compose(&e).unwrap().compose(&lifted).unwrap();
    let delta_n = recoupling::delta_laurent(n);
    let delta_prev = recoupling::delta_laurent(n - 1);
    let first = lifted.scale(&(&prev.denom * &delta_n));
    let second = sandwich.scale(&(-&delta_prev));
    let numer = first.add(&second).unwrap();
    let denom = &(&prev.denom * &prev.denom) * &delta_n;

    let mut g = denom.clone();
    for (_, c) in numer.terms() {
        g = laurent_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    let (numer, denom) = if g.is_one() {
        (numer, denom)
    } else {
        (numer.map_coeffs(|c| c.div_exact(&g).unwrap()), denom.div_exact(&g).unwrap())
    };
    integral_to_jw(numer, denom)
}

fn integral_to_jw(numerators: TlElement<LaurentPoly>, denom: LaurentPoly) -> JonesWenzl {
    let element = numerators.map_coeffs(|c| RatFn::new(c.clone(), denom.clone()).unwrap());
    JonesWenzl { element, integral: IntegralTl { numerators, denom } }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> RatFn {
        RatFn::loop_value()
    }

    fn e(n: usize, i: usize) -> TlElement {
        TlElement::generator(n, i)
    }

    #[test]
    fn matching_validation() {
        // bottom 0 to top 1 and bottom 1 to top 0 cross
        assert!(Matching::new(2, 2, vec![3, 2, 1, 0]).is_err());
        assert!(Matching::new(2, 2, vec![1, 0, 3, 2]).is_ok());
        assert!(Matching::new(2, 2, vec![2, 3, 0, 1]).unwrap().is_identity());
        assert!(Matching::new(0, 4, vec![2, 3, 0, 1]).is_err());
        assert!(Matching::new(1, 2, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn parens_roundtrip() {
        for m in all_matchings(3, 3).into_iter().chain(all_matchings(0, 6)).chain(all_matchings(4, 2)) {
            let s = m.to_parens();
            assert_eq!(Matching::from_parens(&s).unwrap(), m, "{s}");
        }
        assert_eq!(Matching::identity(2).to_parens(), "((|))");
        assert_eq!(Matching::generator(2, 1).to_parens(), "()|()");
    }

    #[test]
    fn matching_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(all_matchings(n, n).len(), c);
            assert_eq!(all_matchings(0, 2 * n).len(), c);
        }
        assert!(all_matchings(1, 2).is_empty());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(e(2, 1).compose(&e(2, 1)).unwrap(), e(2, 1).scale(&d()));
        assert_eq!(TlElement::identity(2).compose(&e(2, 1)).unwrap(), e(2, 1));
        let f2 = jones_wenzl(2);
        assert!(f2.element.compose(&e(2, 1)).unwrap().is_zero());
        assert_eq!(
            e(2, 1).compose(&TlElement::identity(3)),
            Err(TlError::BoundaryMismatch(2, 3))
        );
    }

    #[test]
    fn tensor_examples() {
        let id1 = TlElement::<RatFn>::identity(1);
        assert_eq!(id1.tensor(&id1), TlElement::identity(2));
        assert_eq!(e(2, 1).tensor(&id1), e(3, 1));
        let f1 = &jones_wenzl(1).element;
        assert_ne!(f1.tensor(f1), jones_wenzl(2).element);
    }

    #[test]
    fn small_projectors() {
        assert_eq!(jones_wenzl(0).element, TlElement::identity(0));
        assert_eq!(jones_wenzl(1).element, TlElement::identity(1));
        let inv_d = d().inverse().unwrap();
        let want = TlElement::identity(2).sub(&e(2, 1).scale(&inv_d)).unwrap();
        assert_eq!(jones_wenzl(2).element, want);
        let f3 = &jones_wenzl(3).element;
        assert_eq!(f3.coeff(&Matching::identity(3)), RatFn::one());
        for i in 1..3 {
            assert!(f3.compose(&e(3, i)).unwrap().is_zero());
        }
    }

    #[test]
    fn closure_examples() {
        assert_eq!(TlElement::<RatFn>::identity(1).closure_value().unwrap(), d());
        assert_eq!(e(2, 1).closure_value().unwrap(), d());
        let want = RatFn::from(LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)]));
        assert_eq!(jones_wenzl(2).element.closure_value().unwrap(), want);
    }

    #[test]
    fn temperley_lieb_relations() {
        for n in 2..=6 {
            for i in 1..n {
                assert_eq!(e(n, i).compose(&e(n, i)).unwrap(), e(n, i).scale(&d()));
                if i + 1 < n {
                    let lhs = e(n, i).compose(&e(n, i + 1)).unwrap().compose(&e(n, i)).unwrap();
                    assert_eq!(lhs, e(n, i));
                    let lhs = e(n, i + 1).compose(&e(n, i)).unwrap().compose(&e(n, i + 1)).unwrap();
                    assert_eq!(lhs, e(n, i + 1));
                }
                for j in i + 2..n {
                    assert_eq!(
                        e(n, i).compose(&e(n, j)).unwrap(),
                        e(n, j).compose(&e(n, i)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn projectors_are_idempotent_and_killed_by_turnbacks() {
        for n in 0..=6 {
            let f = &jones_wenzl(n).element;
            assert_eq!(&f.compose(f).unwrap(), f, "f^({n}) not idempotent");
            for i in 1..n {
                assert!(f.compose(&e(n, i)).unwrap().is_zero(), "f^({n}) e_{i} != 0");
                assert!(e(n, i).compose(f).unwrap().is_zero(), "e_{i} f^({n}) != 0");
            }
        }
    }

    #[test]
    fn projectors_are_self_adjoint() {
        for n in 0..=5 {
            let f = &jones_wenzl(n).element;
            assert_eq!(&f.adjoint(), f);
        }
    }

    #[test]
    fn integral_form_matches() {
        for n in 0..=5 {
            let jw = jones_wenzl(n);
            let back = jw
                .integral
                .numerators
                .map_coeffs(|c| RatFn::new(c.clone(), jw.integral.denom.clone()).unwrap());
            assert_eq!(back, jw.element);
            assert_eq!(jw.integral.numerators.coeff(&Matching::identity(n)), jw.integral.denom);
        }
    }
}
