//! Reference evaluator: every crossing smoothing and every projector term is
//! expanded separately and loops are counted with a union-find.

use super::cable::{CableOp, Cabled};
use super::EngineError;
use crate::qring::LaurentPoly;

/// Number of complete states the expansion visits.
pub(crate) fn leaf_count(c: &Cabled) -> f64 {
    c.ops
        .iter()
        .map(|op| match op {
            CableOp::Cross { .. } => 2.0,
            CableOp::Insert { elem, .. } => elem.numerators.len() as f64,
            _ => 1.0,
        })
        .product()
}

#[derive(Clone)]
struct Walk {
    labels: Vec<u32>,
    parent: Vec<u32>,
}

impl Walk {
    fn node(&mut self) -> u32 {
        self.parent.push(self.parent.len() as u32);
        (self.parent.len() - 1) as u32
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn join(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a as usize] = b;
        }
    }

    fn cup(&mut self, q: usize) {
        let x = self.node();
        self.labels.splice(q..q, [x, x]);
    }

    fn cap(&mut self, q: usize) {
        self.join(self.labels[q], self.labels[q + 1]);
        self.labels.drain(q..q + 2);
    }

    fn components(&self) -> u32 {
        (0..self.parent.len() as u32).filter(|&x| self.parent[x as usize] == x).count() as u32
    }
}

pub(crate) fn evaluate(c: &Cabled, budget: f64) -> Result<LaurentPoly, EngineError> {
    if c.n_bottom != 0 || c.n_top != 0 {
        return Err(EngineError::NotClosed);
    }
    let leaves = leaf_count(c);
    if leaves > budget {
        return Err(EngineError::BudgetExceeded { leaves, budget });
    }
    let mut acc = LaurentPoly::zero();
    let start = Walk { labels: Vec::new(), parent: Vec::new() };
    expand(&c.ops, start, LaurentPoly::one(), &mut acc);
    Ok(acc)
}

fn expand(ops: &[CableOp], mut w: Walk, coef: LaurentPoly, acc: &mut LaurentPoly) {
    let mut i = 0;
    while i < ops.len() {
        match &ops[i] {
            CableOp::Cup(q) => w.cup(*q),
            CableOp::Cap(q) => w.cap(*q),
            CableOp::Cross { pos, positive } => {
                let (id_exp, turn_exp) = if *positive { (1, -1) } else { (-1, 1) };
                let mut turned = w.clone();
                turned.cap(*pos);
                turned.cup(*pos);
                expand(&ops[i + 1..], turned, coef.shift(turn_exp), acc);
                expand(&ops[i + 1..], w, coef.shift(id_exp), acc);
                return;
            }
            CableOp::Insert { pos, elem } => {
                let n = elem.numerators.n_bottom();
                for (m, p) in elem.numerators.terms() {
                    let mut v = w.clone();
                    let below: Vec<u32> = v.labels[*pos..pos + n].to_vec();
                    let mut above = vec![u32::MAX; n];
                    for b in 0..n {
                        let mp = m.partner(b);
                        if mp < n {
                            v.join(below[b], below[mp]);
                        } else {
                            above[mp - n] = below[b];
                        }
                    }
                    for t in 0..n {
                        if above[t] == u32::MAX {
                            let x = v.node();
                            above[t] = x;
                            above[m.partner(n + t) - n] = x;
                        }
                    }
                    v.labels.splice(*pos..pos + n, above);
                    expand(&ops[i + 1..], v, &coef * p, acc);
                }
                return;
            }
        }
        i += 1;
    }
    let loops = w.components();
    *acc += &(&coef * &LaurentPoly::loop_value().pow(loops));
}
