//! Bottom-to-top sweep over a cabled diagram.
//!
//! A state records how the fixed bottom boundary points and the strands
//! currently cut by the sweep line are paired by the part of the diagram
//! already swept. Index `i < n_bottom` is bottom point `i`; index
//! `n_bottom + j` is current strand `j`. Coefficients stay in `Z[A, A^-1]`;
//! projector denominators are collected into one global factor.

use rustc_hash::FxHashMap;

use super::cable::{CableOp, Cabled};
use crate::qring::{LaurentPoly, RatFn};
use crate::tl::{Matching, TlElement};

pub(crate) type State = Vec<u16>;

fn cup(s: &[u16], at: usize) -> State {
    let shift = |p: u16| if p as usize >= at { p + 2 } else { p };
    let mut out = Vec::with_capacity(s.len() + 2);
    out.extend(s[..at].iter().map(|&p| shift(p)));
    out.push(at as u16 + 1);
    out.push(at as u16);
    out.extend(s[at..].iter().map(|&p| shift(p)));
    out
}

/// Joins strands `at`, `at + 1`; reports whether a closed loop formed.
fn cap(s: &[u16], at: usize) -> (State, bool) {
    let (i, j) = (at, at + 1);
    let closes = s[i] as usize == j;
    let mut tmp = s.to_vec();
    if !closes {
        let (a, b) = (s[i] as usize, s[j] as usize);
        tmp[a] = b as u16;
        tmp[b] = a as u16;
    }
    let shift = |p: u16| if p as usize > j { p - 2 } else { p };
    let mut out = Vec::with_capacity(s.len() - 2);
    out.extend(tmp[..i].iter().map(|&p| shift(p)));
    out.extend(tmp[j + 1..].iter().map(|&p| shift(p)));
    (out, closes)
}

/// Glues the matching `m` (square, width `n`) onto strands `at..at + n`.
/// Returns the new state and the number of closed loops formed.
fn insert(s: &[u16], at: usize, n: usize, m: &Matching) -> (State, u32) {
    let in_win = |p: usize| p >= at && p < at + n;
    let mut out = s.to_vec();
    let mut seen = vec![false; n];
    // walk from bottom point `b` of `m`, entered from the state side, until
    // the path leaves the window
    let follow = |mut b: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            seen[b] = true;
            let mp = m.partner(b);
            if mp >= n {
                return at + (mp - n);
            }
            seen[mp] = true;
            let sp = s[at + mp] as usize;
            if !in_win(sp) {
                return sp;
            }
            b = sp - at;
        }
    };
    for x in (0..s.len()).filter(|&x| !in_win(x)) {
        let p = s[x] as usize;
        if in_win(p) {
            let e = follow(p - at, &mut seen);
            out[x] = e as u16;
            out[e] = x as u16;
        }
    }
    for t in 0..n {
        let mp = m.partner(n + t);
        if mp >= n {
            out[at + t] = (at + mp - n) as u16;
            continue;
        }
        seen[mp] = true;
        let sp = s[at + mp] as usize;
        if in_win(sp) {
            let e = follow(sp - at, &mut seen);
            out[at + t] = e as u16;
            out[e] = (at + t) as u16;
        }
    }
    let mut loops = 0;
    for b in 0..n {
        if seen[b] {
            continue;
        }
        loops += 1;
        let mut cur = b;
        loop {
            seen[cur] = true;
            let mp = m.partner(cur);
            seen[mp] = true;
            let next = s[at + mp] as usize - at;
            if seen[next] {
                break;
            }
            cur = next;
        }
    }
    (out, loops)
}

type StateMap = FxHashMap<State, LaurentPoly>;

fn add_into(map: &mut StateMap, s: State, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(s) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Result of a sweep: `(1 / denom) * sum coeff * state`.
pub(crate) struct Swept {
    pub n_bottom: usize,
    pub n_top: usize,
    pub states: StateMap,
    pub denom: LaurentPoly,
}

pub(crate) fn sweep(c: &Cabled) -> Swept {
    let nb = c.n_bottom;
    let mut states: StateMap = FxHashMap::default();
    let init: State = (0..2 * nb).map(|i| if i < nb { i + nb } else { i - nb } as u16).collect();
    states.insert(init, LaurentPoly::one());
    let mut denom = LaurentPoly::one();
    let d = LaurentPoly::loop_value();
    let d_pows: Vec<LaurentPoly> = (0..32).map(|k| d.pow(k)).collect();
    let dpow = |k: u32| -> LaurentPoly {
        if (k as usize) < d_pows.len() {
            d_pows[k as usize].clone()
        } else {
            d.pow(k)
        }
    };

    for op in &c.ops {
        let mut next: StateMap = FxHashMap::default();
        match op {
            CableOp::Cup(q) => {
                for (s, coef) in states {
                    next.insert(cup(&s, nb + q), coef);
                }
            }
            CableOp::Cap(q) => {
                for (s, coef) in states {
                    let (t, closed) = cap(&s, nb + q);
                    add_into(&mut next, t, if closed { &coef * &d } else { coef });
                }
            }
            CableOp::Cross { pos, positive } => {
                let (id_exp, turn_exp) = if *positive { (1, -1) } else { (-1, 1) };
                for (s, coef) in states {
                    let (t, closed) = cap(&s, nb + pos);
                    let t = cup(&t, nb + pos);
                    let mut turn = coef.shift(turn_exp);
                    if closed {
                        turn = &turn * &d;
                    }
                    add_into(&mut next, t, turn);
                    add_into(&mut next, s, coef.shift(id_exp));
                }
            }
            CableOp::Insert { pos, elem } => {
                let n = elem.numerators.n_bottom();
                let terms: Vec<_> = elem.numerators.terms().collect();
                for (s, coef) in states {
                    for (m, p) in &terms {
                        let (t, loops) = insert(&s, nb + pos, n, m);
                        let mut c = &coef * *p;
                        if loops > 0 {
                            c = &c * &dpow(loops);
                        }
                        add_into(&mut next, t, c);
                    }
                }
                denom = &denom * &elem.denom;
            }
        }
        states = next;
    }
    Swept { n_bottom: nb, n_top: c.n_top, states, denom }
}

impl Swept {
    /// The scalar value of a closed sweep.
    pub fn scalar(&self) -> RatFn {
        let num = self.states.get(&Vec::new()).cloned().unwrap_or_else(LaurentPoly::zero);
        RatFn::new(num, self.denom.clone()).expect("projector denominators are nonzero")
    }

    pub fn element(&self) -> TlElement<RatFn> {
        let mut out = TlElement::zero(self.n_bottom, self.n_top);
        for (s, c) in &self.states {
            let m = Matching::from_raw(self.n_bottom, self.n_top, s.clone());
            out.add_term(m, RatFn::new(c.clone(), self.denom.clone()).unwrap());
        }
        out
    }
}
