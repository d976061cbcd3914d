//! Replaces colored edges by parallel cables of plain strands.
//!
//! Each edge of color `n` becomes `n` parallel strands carrying exactly one
//! Jones-Wenzl projector `f^(n)`. Vertices are realized by the planar routing
//! with `(a+b-c)/2` turn-backs between the two incoming cables.

use std::collections::HashMap;
use std::sync::Arc;

use super::EngineError;
use crate::diagram::{Diagram, Slice};
use crate::recoupling::Color;
use crate::tl::{jones_wenzl, IntegralTl};

/// One operation on plain strands. Positions index the cabled width.
#[derive(Clone, Debug)]
pub(crate) enum CableOp {
    Cup(usize),
    Cap(usize),
    Cross { pos: usize, positive: bool },
    /// A square Temperley-Lieb element on strands `pos..pos + n`, in
    /// integral form.
    Insert { pos: usize, elem: Arc<IntegralTl> },
}

#[derive(Clone, Debug)]
pub(crate) struct Cabled {
    pub n_bottom: usize,
    pub n_top: usize,
    pub ops: Vec<CableOp>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        // the smaller id stays the root so the root is the first-created segment
        if a < b {
            self.0[b] = a;
        } else {
            self.0[a] = b;
        }
    }
}

fn offset(profile: &[Color], pos: usize) -> usize {
    profile[..pos].iter().map(|&c| c as usize).sum()
}

fn projector_op(pos: usize, n: Color) -> Option<CableOp> {
    (n >= 2).then(|| CableOp::Insert { pos, elem: Arc::new(jones_wenzl(n as usize).integral.clone()) })
}

/// Cables a diagram. Disk gates listed in `inserts` become insertions of the
/// given element over the gate's cabled strands; any other gate is an error.
pub(crate) fn cable(d: &Diagram, inserts: &HashMap<String, Arc<IntegralTl>>) -> Result<Cabled, EngineError> {
    d.validate().map_err(|e| EngineError::Invalid(e[0].to_string()))?;
    let profiles = d.profiles();

    // pass 1: strand segments, joined into edges through cups and caps
    let mut uf = UnionFind(Vec::new());
    let mut created: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d.slices().len() + 1];
    let mut segs: Vec<usize> = Vec::new();
    for (i, _) in d.bottom().iter().enumerate() {
        let s = uf.add();
        segs.push(s);
        created[0].push((s, i));
    }
    for (k, slice) in d.slices().iter().enumerate() {
        let at = k + 1;
        match *slice {
            Slice::Cup { pos, .. } => {
                let s = uf.add();
                segs.splice(pos..pos, [s, s]);
                created[at].push((s, pos));
            }
            Slice::Cap { pos } => {
                uf.union(segs[pos], segs[pos + 1]);
                segs.drain(pos..pos + 2);
            }
            Slice::CrossPos { pos } | Slice::CrossNeg { pos } => segs.swap(pos, pos + 1),
            Slice::VertexMerge { pos, .. } => {
                let s = uf.add();
                segs.splice(pos..pos + 2, [s]);
                created[at].push((s, pos));
            }
            Slice::VertexSplit { pos, .. } => {
                let (s, t) = (uf.add(), uf.add());
                segs.splice(pos..pos + 1, [s, t]);
                created[at].push((s, pos));
                created[at].push((t, pos + 1));
            }
            Slice::DiskGate { .. } => {}
        }
    }

    // pass 2: emit plain-strand operations, one projector per edge
    let mut ops = Vec::new();
    let emit_projectors = |ops: &mut Vec<CableOp>, at: usize, uf: &mut UnionFind| {
        for &(s, pos) in &created[at] {
            if uf.find(s) == s {
                let profile = &profiles[at];
                if let Some(op) = projector_op(offset(profile, pos), profile[pos]) {
                    ops.push(op);
                }
            }
        }
    };
    emit_projectors(&mut ops, 0, &mut uf);
    for (k, slice) in d.slices().iter().enumerate() {
        let below = &profiles[k];
        match slice {
            &Slice::Cup { pos, color } => {
                let q = offset(below, pos);
                ops.extend((0..color as usize).map(|j| CableOp::Cup(q + j)));
            }
            &Slice::Cap { pos } => {
                let q = offset(below, pos);
                let n = below[pos] as usize;
                ops.extend((0..n).map(|t| CableOp::Cap(q + n - 1 - t)));
            }
            &Slice::CrossPos { pos } | &Slice::CrossNeg { pos } => {
                let positive = matches!(slice, Slice::CrossPos { .. });
                let q = offset(below, pos);
                let (a, b) = (below[pos] as usize, below[pos + 1] as usize);
                for i in (0..a).rev() {
                    for j in 0..b {
                        ops.push(CableOp::Cross { pos: q + i + j, positive });
                    }
                }
            }
            &Slice::VertexMerge { pos, a, b, c } => {
                let q = offset(below, pos);
                let k = ((a + b - c) / 2) as usize;
                ops.extend((0..k).map(|t| CableOp::Cap(q + a as usize - 1 - t)));
            }
            &Slice::VertexSplit { pos, c, a, b } => {
                let q = offset(below, pos);
                let k = ((a + b - c) / 2) as usize;
                ops.extend((0..k).map(|t| CableOp::Cup(q + (a as usize - k) + t)));
            }
            Slice::DiskGate { id, pos, span } => {
                let elem = inserts.get(id).ok_or(EngineError::HasDiskGates)?;
                let q = offset(below, *pos);
                let width: usize = below[*pos..pos + span].iter().map(|&c| c as usize).sum();
                let n = elem.numerators.n_bottom();
                if n != width || elem.numerators.n_top() != width {
                    return Err(EngineError::InsertWidthMismatch { gate: id.clone(), expected: width, found: n });
                }
                ops.push(CableOp::Insert { pos: q, elem: elem.clone() });
            }
        }
        emit_projectors(&mut ops, k + 1, &mut uf);
    }
    Ok(Cabled {
        n_bottom: offset(d.bottom(), d.bottom().len()),
        n_top: offset(d.top(), d.top().len()),
        ops,
    })
}
