//! Vector spaces of spheres with colored banded points: dimensions, bases,
//! the Hermitian pairing, Gram and morphism matrices.
//!
//! A vector in `V(S)` for boundary colors `s` is presented by a diagram with
//! empty bottom and top profile `s` (a graph in the ball bounded by the
//! sphere). The pairing glues the reflection of the first argument on top of
//! the second and takes the bracket, so it is conjugate-linear in the first
//! argument.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, Slice};
use crate::engine::{self, EngineError, FusionTree};
use crate::qring::{LaurentOrNot, LaurentPoly, RatFn};
use crate::recoupling::{admissible_thirds, Color};
use crate::tl::{all_matchings, Matching};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TqftError {
    #[error("boundary mismatch: {expected:?} against {found:?}")]
    BoundaryMismatch { expected: Vec<Color>, found: Vec<Color> },
    #[error("the target basis has a singular Gram matrix")]
    SingularBasis,
    #[error("expected exactly one disk gate and only color-1 strands")]
    NotSingleWormhole,
    #[error("bracket {0} is not a Laurent polynomial")]
    NonLaurentResult(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A 2-sphere with an ordered list of colored banded points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedSphere {
    pub colors: Vec<Color>,
}

impl MarkedSphere {
    pub fn new(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    /// `2n` points of color 1.
    pub fn ones(points: usize) -> Self {
        Self { colors: vec![1; points] }
    }
}

/// Number of admissible colorings of a tree whose leaves carry `colors`,
/// keyed by the color of the root edge.
fn root_color_counts(tree: &FusionTree, colors: &[Color]) -> BTreeMap<Color, u128> {
    match tree {
        FusionTree::Leaf => BTreeMap::from([(colors[0], 1)]),
        FusionTree::Node(l, r) => {
            let k = l.leaves();
            let lc = root_color_counts(l, &colors[..k]);
            let rc = root_color_counts(r, &colors[k..]);
            let mut out = BTreeMap::new();
            for (&a, &na) in &lc {
                for (&b, &nb) in &rc {
                    for c in admissible_thirds(a, b) {
                        *out.entry(c).or_insert(0) += na * nb;
                    }
                }
            }
            out
        }
    }
}

/// `dim V(S)`, counted as colorings of a trivalent tree with leaves on the
/// points whose root edge has color 0.
pub fn dim_v_with_tree(s: &MarkedSphere, tree: &FusionTree) -> u128 {
    match s.colors.len() {
        0 => 1,
        1 => u128::from(s.colors[0] == 0),
        k => {
            assert_eq!(tree.leaves(), k, "tree does not fit the sphere");
            root_color_counts(tree, &s.colors).get(&0).copied().unwrap_or(0)
        }
    }
}

/// `dim V(S)` using the left-comb tree.
pub fn dim_v(s: &MarkedSphere) -> u128 {
    let k = s.colors.len().max(1);
    dim_v_with_tree(s, &FusionTree::left_comb(k))
}

/// `c(n) = binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: u64) -> u128 {
    (0..n).fold(1u128, |c, i| c * 2 * (2 * u128::from(i) + 1) / (u128::from(i) + 2))
}

/// All crossingless matchings of `2n` points in a row.
pub fn catalan_basis(n: usize) -> Vec<Matching> {
    all_matchings(0, 2 * n)
}

/// The matching as a diagram of nested cups with top profile `2n` ones.
pub fn matching_diagram(m: &Matching) -> Diagram {
    assert_eq!(m.n_bottom(), 0, "expected a matching of top points only");
    let n = m.n_top();
    let mut arcs: Vec<(usize, usize)> = (0..n)
        .filter_map(|i| {
            let j = m.partner(i);
            (i < j).then_some((i, j))
        })
        .collect();
    // outermost arcs first; an inner arc then lands between its parents' legs
    arcs.sort_by_key(|&(i, j)| (std::cmp::Reverse(j - i), i));
    let mut placed: Vec<usize> = Vec::new();
    let mut slices = Vec::new();
    for (i, j) in arcs {
        let pos = placed.iter().filter(|&&p| p < i).count();
        slices.push(Slice::Cup { pos, color: 1 });
        placed.push(i);
        placed.push(j);
    }
    Diagram::new(Vec::new(), slices).expect("nested cups are valid")
}

/// The left-comb tree vectors of `V(S)`: one per admissible coloring, each a
/// cup of the root's child color split down to the points.
pub fn tree_basis(s: &MarkedSphere) -> Vec<Diagram> {
    let a = &s.colors;
    match a.len() {
        0 => return vec![Diagram::empty()],
        1 => {
            return if a[0] == 0 {
                let slices = vec![
                    Slice::Cup { pos: 0, color: 0 },
                    Slice::VertexMerge { pos: 0, a: 0, b: 0, c: 0 },
                ];
                vec![Diagram::new(Vec::new(), slices).unwrap()]
            } else {
                Vec::new()
            };
        }
        _ => {}
    }
    // internal colors c_1 = a_1, c_j in a_(j-1) x a_j, with c_(k-1) = a_k
    let k = a.len();
    let mut paths: Vec<Vec<Color>> = vec![vec![a[0]]];
    for &next in &a[1..k - 1] {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                let last = *p.last().unwrap();
                admissible_thirds(last, next).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    paths
        .into_iter()
        .filter(|p| *p.last().unwrap() == a[k - 1])
        .map(|p| {
            let mut slices = vec![Slice::Cup { pos: 0, color: a[k - 1] }];
            // split c_(k-1) into c_(k-2), a_(k-1), and so on down the comb
            for j in (1..k - 1).rev() {
                slices.push(Slice::VertexSplit { pos: 0, c: p[j], a: p[j - 1], b: a[j] });
            }
            Diagram::new(Vec::new(), slices).expect("admissible tree coloring")
        })
        .collect()
}

fn check_vector(x: &Diagram, s: &[Color]) -> Result<(), TqftError> {
    if !x.bottom().is_empty() || x.top() != s {
        return Err(TqftError::BoundaryMismatch { expected: s.to_vec(), found: x.top().to_vec() });
    }
    Ok(())
}

/// `<x, y>`: the bracket of `y` capped off by the reflection of `x`.
pub fn pair_hermitian(x: &Diagram, y: &Diagram) -> Result<RatFn, TqftError> {
    check_vector(x, y.top())?;
    check_vector(y, x.top())?;
    let glued = y.compose_vertical(&x.reflect()).map_err(|_| TqftError::BoundaryMismatch {
        expected: x.top().to_vec(),
        found: y.top().to_vec(),
    })?;
    Ok(engine::bracket(&glued)?)
}

/// Sesquilinear extension of [`pair_hermitian`] to formal combinations.
pub fn pair_combinations(xs: &[(RatFn, Diagram)], ys: &[(RatFn, Diagram)]) -> Result<RatFn, TqftError> {
    let mut acc = RatFn::zero();
    for (a, x) in xs {
        for (b, y) in ys {
            acc = &acc + &(&(&a.involute() * b) * &pair_hermitian(x, y)?);
        }
    }
    Ok(acc)
}

/// A square matrix over `Q(A)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GramMatrix {
    pub entries: Vec<Vec<RatFn>>,
}

/// Pairings of every basis vector with every other.
pub fn gram_matrix(basis: &[Diagram]) -> Result<GramMatrix, TqftError> {
    let n = basis.len();
    let flat: Vec<Result<RatFn, TqftError>> = (0..n * n)
        .into_par_iter()
        .map(|ij| pair_hermitian(&basis[ij / n], &basis[ij % n]))
        .collect();
    let mut entries = vec![Vec::with_capacity(n); n];
    for (ij, v) in flat.into_iter().enumerate() {
        entries[ij / n].push(v?);
    }
    Ok(GramMatrix { entries })
}

/// The Gram matrix of the Catalan basis on `2n` points of color 1.
pub fn catalan_gram(n: usize) -> Result<GramMatrix, TqftError> {
    let basis: Vec<Diagram> = catalan_basis(n).iter().map(matching_diagram).collect();
    gram_matrix(&basis)
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i].involute()))
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> RatFn {
        determinant(&self.entries)
    }
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &[Vec<RatFn>]) -> RatFn {
    let n = m.len();
    if n == 0 {
        return RatFn::one();
    }
    let mut a: Vec<Vec<RatFn>> = m.to_vec();
    let mut sign = 1;
    let mut prev = RatFn::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return RatFn::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.checked_div(&prev).unwrap();
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves `g x = b` column by column by Gaussian elimination.
fn solve(g: &[Vec<RatFn>], b: &[Vec<RatFn>]) -> Option<Vec<Vec<RatFn>>> {
    let n = g.len();
    let mut aug: Vec<Vec<RatFn>> =
        (0..n).map(|i| g[i].iter().chain(b[i].iter()).cloned().collect()).collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !aug[i][k].is_zero())?;
        aug.swap(k, p);
        let inv = aug[k][k].inverse().ok()?;
        for v in aug[k].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..n {
            if i != k && !aug[i][k].is_zero() {
                let f = aug[i][k].clone();
                let pivot = aug[k].clone();
                for (x, p) in aug[i].iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The d-degree of `det(Gram)` on the Catalan basis equals `n c(n)`.
pub fn gram_det_degree_check(n: usize) -> Result<bool, TqftError> {
    Ok(gram_det_degree(n)? == Some(n * catalan_number(n as u64) as usize))
}

/// Degree in `d` of the Catalan Gram determinant, when it is a polynomial
/// in `d`.
pub fn gram_det_degree(n: usize) -> Result<Option<usize>, TqftError> {
    let det = catalan_gram(n)?.determinant();
    Ok(match det.as_laurent() {
        LaurentOrNot::Laurent(p) => p.to_poly_in_loop_value().map(|c| c.len().saturating_sub(1)),
        LaurentOrNot::NotLaurent => None,
    })
}

/// The matrix of a tangle `m` from `V(bottom)` to `V(top)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphismMatrix {
    pub source: MarkedSphere,
    pub target: MarkedSphere,
    pub entries: Vec<Vec<RatFn>>,
}

impl MorphismMatrix {
    pub fn trace(&self) -> RatFn {
        (0..self.entries.len().min(self.entries.first().map_or(0, Vec::len)))
            .map(|i| self.entries[i][i].clone())
            .sum()
    }

    pub fn compose(&self, after: &MorphismMatrix) -> MorphismMatrix {
        let (n, k, m) = (after.entries.len(), self.entries.len(), self.entries.first().map_or(0, Vec::len));
        let entries = (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| (0..k).map(|l| &after.entries[i][l] * &self.entries[l][j]).sum())
                    .collect()
            })
            .collect();
        MorphismMatrix { source: self.source.clone(), target: after.target.clone(), entries }
    }
}

/// Coordinates of `m` applied to each source basis vector, in the target
/// basis: `G M = P` with `G` the target Gram matrix and
/// `P[i][j] = <b2_i, m b1_j>`. For an orthogonal target basis this is
/// `P[i][j] / <b2_i, b2_i>`.
pub fn morphism_matrix(m: &Diagram, b1: &[Diagram], b2: &[Diagram]) -> Result<MorphismMatrix, TqftError> {
    for x in b1 {
        check_vector(x, m.bottom())?;
    }
    for y in b2 {
        check_vector(y, m.top())?;
    }
    let images: Vec<Diagram> = b1
        .iter()
        .map(|x| x.compose_vertical(m).expect("boundaries checked"))
        .collect();
    let (n2, n1) = (b2.len(), b1.len());
    let flat: Vec<Result<RatFn, TqftError>> = (0..n2 * n1)
        .into_par_iter()
        .map(|ij| pair_hermitian(&b2[ij / n1], &images[ij % n1]))
        .collect();
    let mut p = vec![Vec::with_capacity(n1); n2];
    for (ij, v) in flat.into_iter().enumerate() {
        p[ij / n1].push(v?);
    }
    let g = gram_matrix(b2)?;
    let entries = solve(&g.entries, &p).ok_or(TqftError::SingularBasis)?;
    Ok(MorphismMatrix {
        source: MarkedSphere::new(m.bottom().to_vec()),
        target: MarkedSphere::new(m.top().to_vec()),
        entries,
    })
}

/// Which basis to use for boundary spaces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BasisKind {
    #[default]
    Tree,
    Catalan,
}

/// A basis of `V(s)`; the Catalan basis needs all colors 1.
pub fn basis(s: &MarkedSphere, kind: BasisKind) -> Option<Vec<Diagram>> {
    match kind {
        BasisKind::Tree => Some(tree_basis(s)),
        BasisKind::Catalan => {
            if s.colors.iter().all(|&c| c == 1) && s.colors.len().is_multiple_of(2) {
                Some(catalan_basis(s.colors.len() / 2).iter().map(matching_diagram).collect())
            } else {
                None
            }
        }
    }
}

/// The matrix of an endomorphism tangle in the chosen basis.
pub fn endomorphism_matrix(m: &Diagram, kind: BasisKind) -> Result<MorphismMatrix, TqftError> {
    let src = MarkedSphere::new(m.bottom().to_vec());
    let tgt = MarkedSphere::new(m.top().to_vec());
    let b1 = basis(&src, kind).ok_or(TqftError::SingularBasis)?;
    let b2 = basis(&tgt, kind).ok_or(TqftError::SingularBasis)?;
    morphism_matrix(m, &b1, &b2)
}

/// Trace of an endomorphism tangle.
pub fn trace_morphism(m: &Diagram, kind: BasisKind) -> Result<RatFn, TqftError> {
    if m.bottom() != m.top() {
        return Err(TqftError::BoundaryMismatch { expected: m.bottom().to_vec(), found: m.top().to_vec() });
    }
    Ok(endomorphism_matrix(m, kind)?.trace())
}

/// The bracket of a color-1 link in a single `S^1 x S^2`, as a Laurent
/// polynomial.
pub fn hp_projection(d: &Diagram) -> Result<LaurentPoly, TqftError> {
    let gates = d.gate_ids().len();
    let only_ones = d.profiles().iter().all(|p| p.iter().all(|&c| c == 1))
        && !d
            .slices()
            .iter()
            .any(|s| matches!(s, Slice::VertexMerge { .. } | Slice::VertexSplit { .. }));
    if gates != 1 || !only_ones {
        return Err(TqftError::NotSingleWormhole);
    }
    let v = engine::bracket(d)?;
    match v.as_laurent() {
        LaurentOrNot::Laurent(p) => Ok(p),
        LaurentOrNot::NotLaurent => Err(TqftError::NonLaurentResult(v.to_string())),
    }
}
