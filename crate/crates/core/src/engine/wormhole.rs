//! Fusion at disk gates: the strands through a gate are fused along a binary
//! tree, only the terms whose root color is 0 survive, and the zero-colored
//! neck is erased, leaving a cap below and a cup above.

use itertools::Itertools;

use super::EngineError;
use crate::diagram::{Diagram, Slice};
use crate::qring::RatFn;
use crate::recoupling::{admissible_thirds, quantum_delta, theta_net, Color};

/// A binary tree whose leaves are the strands through a gate, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FusionTree {
    Leaf,
    Node(Box<FusionTree>, Box<FusionTree>),
}

impl FusionTree {
    pub fn leaves(&self) -> usize {
        match self {
            FusionTree::Leaf => 1,
            FusionTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    fn node(l: FusionTree, r: FusionTree) -> Self {
        FusionTree::Node(Box::new(l), Box::new(r))
    }

    /// `((a1 a2) a3) ... ak`.
    pub fn left_comb(k: usize) -> Self {
        assert!(k >= 1);
        (1..k).fold(FusionTree::Leaf, |acc, _| Self::node(acc, FusionTree::Leaf))
    }

    /// `a1 (a2 (... ak))`.
    pub fn right_comb(k: usize) -> Self {
        assert!(k >= 1);
        (1..k).fold(FusionTree::Leaf, |acc, _| Self::node(FusionTree::Leaf, acc))
    }

    /// Splits leaves as evenly as possible, left half rounded down.
    pub fn balanced(k: usize) -> Self {
        assert!(k >= 1);
        if k == 1 {
            FusionTree::Leaf
        } else {
            Self::node(Self::balanced(k / 2), Self::balanced(k - k / 2))
        }
    }
}

/// How to choose the fusion tree for a gate with `k` strands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FusionShape {
    #[default]
    LeftComb,
    RightComb,
    Balanced,
}

impl FusionShape {
    pub fn tree(self, k: usize) -> FusionTree {
        match self {
            FusionShape::LeftComb => FusionTree::left_comb(k),
            FusionShape::RightComb => FusionTree::right_comb(k),
            FusionShape::Balanced => FusionTree::balanced(k),
        }
    }
}

/// A fusion tree with a color on every edge.
#[derive(Clone, Debug)]
enum Colored {
    Leaf(Color),
    Node(Box<Colored>, Box<Colored>, Color),
}

impl Colored {
    fn color(&self) -> Color {
        match self {
            Colored::Leaf(c) | Colored::Node(_, _, c) => *c,
        }
    }
}

/// All colorings of `tree` with the given leaf colors, each with the product
/// of its fusion coefficients.
fn colorings(tree: &FusionTree, leaves: &[Color]) -> Vec<(Colored, RatFn)> {
    match tree {
        FusionTree::Leaf => vec![(Colored::Leaf(leaves[0]), RatFn::one())],
        FusionTree::Node(l, r) => {
            let k = l.leaves();
            let lefts = colorings(l, &leaves[..k]);
            let rights = colorings(r, &leaves[k..]);
            let mut out = Vec::new();
            for ((lc, lw), (rc, rw)) in lefts.iter().cartesian_product(&rights) {
                let (a, b) = (lc.color(), rc.color());
                for c in admissible_thirds(a, b) {
                    let f = quantum_delta(c).checked_div(&theta_net(a, b, c).unwrap()).unwrap();
                    let w = &(lw * rw) * &f;
                    out.push((Colored::Node(Box::new(lc.clone()), Box::new(rc.clone()), c), w));
                }
            }
            out
        }
    }
}

fn emit_merge(t: &Colored, pos: usize, out: &mut Vec<Slice>) {
    if let Colored::Node(l, r, c) = t {
        emit_merge(l, pos, out);
        emit_merge(r, pos + 1, out);
        out.push(Slice::VertexMerge { pos, a: l.color(), b: r.color(), c: *c });
    }
}

fn emit_split(t: &Colored, pos: usize, out: &mut Vec<Slice>) {
    if let Colored::Node(l, r, c) = t {
        out.push(Slice::VertexSplit { pos, c: *c, a: l.color(), b: r.color() });
        emit_split(r, pos + 1, out);
        emit_split(l, pos, out);
    }
}

/// The surviving terms for one gate: coefficient and replacement slices.
/// An empty list means the gate forces the whole diagram to vanish.
pub fn gate_terms(colors: &[Color], pos: usize, tree: &FusionTree) -> Vec<(RatFn, Vec<Slice>)> {
    match colors.len() {
        0 => return vec![(RatFn::one(), Vec::new())],
        1 => {
            return if colors[0] == 0 { vec![(RatFn::one(), Vec::new())] } else { Vec::new() };
        }
        _ => {}
    }
    assert_eq!(tree.leaves(), colors.len(), "fusion tree does not fit the gate");
    let FusionTree::Node(l, r) = tree else { unreachable!() };
    let k = l.leaves();
    let lefts = colorings(l, &colors[..k]);
    let rights = colorings(r, &colors[k..]);
    let mut out = Vec::new();
    for ((lc, lw), (rc, rw)) in lefts.iter().cartesian_product(&rights) {
        let x = lc.color();
        if rc.color() != x {
            continue;
        }
        let w = (lw * rw).checked_div(&quantum_delta(x)).unwrap();
        let mut slices = Vec::new();
        emit_merge(lc, pos, &mut slices);
        emit_merge(rc, pos + 1, &mut slices);
        slices.push(Slice::Cap { pos });
        slices.push(Slice::Cup { pos, color: x });
        emit_split(rc, pos + 1, &mut slices);
        emit_split(lc, pos, &mut slices);
        out.push((w, slices));
    }
    out
}

/// A formal combination of closed, gate-free diagrams.
#[derive(Clone, Debug, Default)]
pub struct WeightedDiagrams {
    pub terms: Vec<(RatFn, Diagram)>,
}

impl WeightedDiagrams {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Replaces every gate by its fusion expansion. A gate crossed by a single
/// strand of nonzero color empties the sum.
pub fn wormhole_reduce_with(d: &Diagram, shape: FusionShape) -> Result<WeightedDiagrams, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    d.validate().map_err(|e| EngineError::Invalid(e[0].to_string()))?;
    let profiles = d.profiles();
    let mut per_slice: Vec<Vec<(RatFn, Vec<Slice>)>> = Vec::with_capacity(d.slices().len());
    for (i, s) in d.slices().iter().enumerate() {
        match s {
            Slice::DiskGate { pos, span, .. } => {
                let colors = &profiles[i][*pos..pos + span];
                let terms = if colors.len() >= 2 {
                    gate_terms(colors, *pos, &shape.tree(colors.len()))
                } else {
                    gate_terms(colors, *pos, &FusionTree::Leaf)
                };
                if terms.is_empty() {
                    return Ok(WeightedDiagrams::default());
                }
                per_slice.push(terms);
            }
            other => per_slice.push(vec![(RatFn::one(), vec![other.clone()])]),
        }
    }
    let mut terms = Vec::new();
    for choice in per_slice.iter().map(|v| v.iter()).multi_cartesian_product() {
        let mut coeff = RatFn::one();
        let mut slices = Vec::new();
        for (w, s) in choice {
            coeff = &coeff * w;
            slices.extend(s.iter().cloned());
        }
        let diagram = Diagram::closed(slices).map_err(|e| EngineError::Internal(e.to_string()))?;
        terms.push((coeff, diagram));
    }
    Ok(WeightedDiagrams { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_shapes() {
        assert_eq!(FusionTree::left_comb(3).leaves(), 3);
        assert_eq!(FusionTree::right_comb(4).leaves(), 4);
        assert_eq!(FusionTree::balanced(5).leaves(), 5);
        assert_eq!(FusionTree::left_comb(1), FusionTree::Leaf);
    }

    #[test]
    fn single_strand_gates() {
        assert!(gate_terms(&[1], 0, &FusionTree::Leaf).is_empty());
        assert_eq!(gate_terms(&[0], 0, &FusionTree::Leaf).len(), 1);
        assert_eq!(gate_terms(&[], 0, &FusionTree::Leaf).len(), 1);
    }

    #[test]
    fn four_ones_give_two_paths() {
        let terms = gate_terms(&[1, 1, 1, 1], 0, &FusionTree::left_comb(4));
        let d = RatFn::loop_value();
        let mut coeffs: Vec<RatFn> = terms.into_iter().map(|t| t.0).collect();
        coeffs.sort_by_key(|c| c.to_string());
        let mut want = vec![
            (&d * &d).inverse().unwrap(),
            quantum_delta(2).inverse().unwrap(),
        ];
        want.sort_by_key(|c| c.to_string());
        assert_eq!(coeffs, want);
    }

    #[test]
    fn gadget_preserves_the_profile() {
        for tree in [FusionTree::left_comb(4), FusionTree::right_comb(4), FusionTree::balanced(4)] {
            for (_, slices) in gate_terms(&[1, 2, 1, 2], 1, &tree) {
                let d = Diagram::new(vec![3, 1, 2, 1, 2], slices).unwrap();
                assert_eq!(d.top(), d.bottom());
            }
        }
    }
}
