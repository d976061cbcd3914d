//! Sliced diagrams of colored banded trivalent graphs in wormhole spaces.
//!
//! A diagram is read bottom to top as a list of slices acting on a row of
//! colored strands. Each dotted unlink component of the surgery picture is a
//! [`Slice::DiskGate`]: the consecutive strands it spans are exactly the ones
//! piercing that component's spanning disk.

mod dsl;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::recoupling::{is_admissible, Color};

pub use dsl::parse_dsl;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: syntax error: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("line {line}: position {pos} out of range for width {width}")]
    PositionOutOfRange { line: usize, pos: usize, width: usize },
    #[error("line {line}: color mismatch: {msg}")]
    ColorMismatch { line: usize, msg: String },
    #[error("line {line}: inadmissible vertex ({a}, {b}, {c})")]
    InadmissibleVertex { line: usize, a: Color, b: Color, c: Color },
    #[error("line {line}: duplicate disk id {id}")]
    DuplicateDiskId { line: usize, id: String },
    #[error("boundary mismatch: {expected:?} against {found:?}")]
    BoundaryMismatch { expected: Vec<Color>, found: Vec<Color> },
}

/// One horizontal slice. Positions are 0-based strand indices in the width
/// profile just below the slice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// Inserts two strands of `color` at `pos`, `pos + 1`.
    Cup { pos: usize, color: Color },
    /// Joins strands `pos`, `pos + 1`, which must have equal colors.
    Cap { pos: usize },
    /// Strands `pos`, `pos + 1` cross; the one entering lower left leaves
    /// upper right passing over.
    CrossPos { pos: usize },
    /// As `CrossPos`, with the lower-left strand passing under.
    CrossNeg { pos: usize },
    /// Strands `pos` (color `a`) and `pos + 1` (color `b`) meet at a vertex
    /// and continue as one strand of color `c`.
    VertexMerge { pos: usize, a: Color, b: Color, c: Color },
    /// Strand `pos` (color `c`) splits into `a` (left) and `b` (right).
    VertexSplit { pos: usize, c: Color, a: Color, b: Color },
    /// Strands `pos..pos + span` pass through the spanning disk of the
    /// dotted circle `id`.
    DiskGate { id: String, pos: usize, span: usize },
}

impl Slice {
    pub fn is_crossing(&self) -> bool {
        matches!(self, Slice::CrossPos { .. } | Slice::CrossNeg { .. })
    }
}

/// The row of strand colors between slices.
pub type Profile = Vec<Color>;

/// Applies one slice to a width profile. `line` is only used for errors.
pub(crate) fn apply_slice(profile: &mut Profile, slice: &Slice, line: usize) -> Result<(), DiagramError> {
    let width = profile.len();
    let need = |pos: usize, k: usize| {
        if pos + k > width {
            Err(DiagramError::PositionOutOfRange { line, pos, width })
        } else {
            Ok(())
        }
    };
    match *slice {
        Slice::Cup { pos, color } => {
            if pos > width {
                return Err(DiagramError::PositionOutOfRange { line, pos, width });
            }
            profile.splice(pos..pos, [color, color]);
        }
        Slice::Cap { pos } => {
            need(pos, 2)?;
            if profile[pos] != profile[pos + 1] {
                return Err(DiagramError::ColorMismatch {
                    line,
                    msg: format!("cap joins colors {} and {}", profile[pos], profile[pos + 1]),
                });
            }
            profile.drain(pos..pos + 2);
        }
        Slice::CrossPos { pos } | Slice::CrossNeg { pos } => {
            need(pos, 2)?;
            profile.swap(pos, pos + 1);
        }
        Slice::VertexMerge { pos, a, b, c } => {
            need(pos, 2)?;
            if (profile[pos], profile[pos + 1]) != (a, b) {
                return Err(DiagramError::ColorMismatch {
                    line,
                    msg: format!("merge expects ({a}, {b}), found ({}, {})", profile[pos], profile[pos + 1]),
                });
            }
            if !is_admissible(a, b, c) {
                return Err(DiagramError::InadmissibleVertex { line, a, b, c });
            }
            profile.splice(pos..pos + 2, [c]);
        }
        Slice::VertexSplit { pos, c, a, b } => {
            need(pos, 1)?;
            if profile[pos] != c {
                return Err(DiagramError::ColorMismatch {
                    line,
                    msg: format!("split expects {c}, found {}", profile[pos]),
                });
            }
            if !is_admissible(a, b, c) {
                return Err(DiagramError::InadmissibleVertex { line, a, b, c });
            }
            profile.splice(pos..pos + 1, [a, b]);
        }
        Slice::DiskGate { pos, span, .. } => {
            if pos + span > width {
                return Err(DiagramError::PositionOutOfRange { line, pos: pos + span, width });
            }
        }
    }
    Ok(())
}

/// A colored graph in a wormhole space, presented by slices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    bottom: Profile,
    slices: Vec<Slice>,
    top: Profile,
}

/// Which way a belt replacing a gate winds around its strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BeltChirality {
    /// Front arc over the strands, back arc under.
    FrontOver,
    FrontUnder,
}

impl Diagram {
    /// Builds and validates a diagram; the top profile is computed.
    pub fn new(bottom: Profile, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let mut profile = bottom.clone();
        let mut ids = HashSet::new();
        for (i, s) in slices.iter().enumerate() {
            apply_slice(&mut profile, s, i + 1)?;
            if let Slice::DiskGate { id, .. } = s {
                if !ids.insert(id.clone()) {
                    return Err(DiagramError::DuplicateDiskId { line: i + 1, id: id.clone() });
                }
            }
        }
        Ok(Self { bottom, slices, top: profile })
    }

    /// A closed diagram (empty bottom and top).
    pub fn closed(slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let d = Self::new(Vec::new(), slices)?;
        if !d.top.is_empty() {
            return Err(DiagramError::BoundaryMismatch { expected: Vec::new(), found: d.top });
        }
        Ok(d)
    }

    /// Assembles a diagram without any checks; [`Diagram::validate`] reports
    /// what is wrong with it.
    pub fn from_parts_unchecked(bottom: Profile, slices: Vec<Slice>, top: Profile) -> Self {
        Self { bottom, slices, top }
    }

    /// The empty closed diagram.
    pub fn empty() -> Self {
        Self { bottom: Vec::new(), slices: Vec::new(), top: Vec::new() }
    }

    /// The identity tangle on the given colors.
    pub fn identity(colors: Profile) -> Self {
        Self { bottom: colors.clone(), slices: Vec::new(), top: colors }
    }

    pub fn bottom(&self) -> &[Color] {
        &self.bottom
    }

    pub fn top(&self) -> &[Color] {
        &self.top
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top.is_empty()
    }

    pub fn has_gates(&self) -> bool {
        self.slices.iter().any(|s| matches!(s, Slice::DiskGate { .. }))
    }

    pub fn gate_ids(&self) -> Vec<&str> {
        self.slices
            .iter()
            .filter_map(|s| match s {
                Slice::DiskGate { id, .. } => Some(id.as_str()),
                _ => None,
            })
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| s.is_crossing()).count()
    }

    /// Width profiles: entry `i` is the profile below slice `i`; the last entry
    /// is the top. Assumes a valid diagram.
    pub fn profiles(&self) -> Vec<Profile> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut p = self.bottom.clone();
        out.push(p.clone());
        for (i, s) in self.slices.iter().enumerate() {
            apply_slice(&mut p, s, i + 1).expect("profiles() on an invalid diagram");
            out.push(p.clone());
        }
        out
    }

    pub fn max_width(&self) -> usize {
        self.profiles().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Re-checks every invariant. Errors carry 1-based slice numbers.
    pub fn validate(&self) -> Result<(), Vec<DiagramError>> {
        let mut errors = Vec::new();
        let mut profile = self.bottom.clone();
        let mut ok = true;
        for (i, s) in self.slices.iter().enumerate() {
            if let Err(e) = apply_slice(&mut profile, s, i + 1) {
                errors.push(e);
                ok = false;
                break;
            }
        }
        if ok && profile != self.top {
            errors.push(DiagramError::BoundaryMismatch { expected: self.top.clone(), found: profile });
        }
        let mut ids = HashSet::new();
        for (i, s) in self.slices.iter().enumerate() {
            if let Slice::DiskGate { id, .. } = s {
                if !ids.insert(id) {
                    errors.push(DiagramError::DuplicateDiskId { line: i + 1, id: id.clone() });
                }
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }

    /// Orientation reversal of the ambient space: every crossing changes
    /// sign, nothing else moves.
    pub fn mirror(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::CrossPos { pos } => Slice::CrossNeg { pos },
                Slice::CrossNeg { pos } => Slice::CrossPos { pos },
                ref other => other.clone(),
            })
            .collect();
        Self { bottom: self.bottom.clone(), slices, top: self.top.clone() }
    }

    /// The image under the reflection `y -> -y` of the diagram plane, which
    /// reverses orientation: slices in reverse order, cups and caps
    /// exchanged, merges and splits exchanged, crossings change sign.
    pub fn reflect(&self) -> Self {
        let profiles = self.profiles();
        let mut slices = Vec::with_capacity(self.slices.len());
        for (i, s) in self.slices.iter().enumerate().rev() {
            let below = &profiles[i];
            slices.push(match s.clone() {
                Slice::Cup { pos, .. } => Slice::Cap { pos },
                Slice::Cap { pos } => Slice::Cup { pos, color: below[pos] },
                Slice::CrossPos { pos } => Slice::CrossNeg { pos },
                Slice::CrossNeg { pos } => Slice::CrossPos { pos },
                Slice::VertexMerge { pos, a, b, c } => Slice::VertexSplit { pos, c, a, b },
                Slice::VertexSplit { pos, c, a, b } => Slice::VertexMerge { pos, a, b, c },
                g @ Slice::DiskGate { .. } => g,
            });
        }
        Self { bottom: self.top.clone(), slices, top: self.bottom.clone() }
    }

    fn renamed_gates(&self, taken: &HashSet<String>) -> Vec<Slice> {
        let mut used: HashSet<String> = taken.clone();
        self.slices
            .iter()
            .map(|s| match s {
                Slice::DiskGate { id, pos, span } => {
                    let mut new_id = id.clone();
                    let mut k = 2;
                    while used.contains(&new_id) {
                        new_id = format!("{id}_{k}");
                        k += 1;
                    }
                    used.insert(new_id.clone());
                    Slice::DiskGate { id: new_id, pos: *pos, span: *span }
                }
                other => other.clone(),
            })
            .collect()
    }

    fn gate_id_set(&self) -> HashSet<String> {
        self.gate_ids().into_iter().map(String::from).collect()
    }

    /// Disjoint union of two closed diagrams; colliding disk ids in `other`
    /// are renamed.
    pub fn disjoint_union(&self, other: &Diagram) -> Result<Self, DiagramError> {
        for d in [self, other] {
            if !d.is_closed() {
                return Err(DiagramError::BoundaryMismatch { expected: Vec::new(), found: d.top.clone() });
            }
        }
        let mut slices = self.slices.clone();
        slices.extend(other.renamed_gates(&self.gate_id_set()));
        Ok(Self { bottom: Vec::new(), slices, top: Vec::new() })
    }

    /// Side-by-side placement, `self` on the left, for tangles.
    pub fn beside(&self, right: &Diagram) -> Self {
        // run self first with right's bottom strands idle on the right, then
        // right's slices shifted past self's top
        let shift = self.top.len();
        let mut slices = self.slices.clone();
        for s in right.renamed_gates(&self.gate_id_set()) {
            slices.push(shift_slice(s, shift));
        }
        let mut bottom = self.bottom.clone();
        bottom.extend_from_slice(&right.bottom);
        let mut top = self.top.clone();
        top.extend_from_slice(&right.top);
        Self { bottom, slices, top }
    }

    /// `self` followed by `upper`.
    pub fn compose_vertical(&self, upper: &Diagram) -> Result<Self, DiagramError> {
        if self.top != upper.bottom {
            return Err(DiagramError::BoundaryMismatch {
                expected: self.top.clone(),
                found: upper.bottom.clone(),
            });
        }
        let mut slices = self.slices.clone();
        slices.extend(upper.renamed_gates(&self.gate_id_set()));
        Ok(Self { bottom: self.bottom.clone(), slices, top: upper.top.clone() })
    }

    /// Trace closure: bottom point `i` is joined to top point `i` by nested
    /// arcs around the right side.
    pub fn closure_of_tangle(&self) -> Result<Self, DiagramError> {
        self.closure_impl(None)
    }

    /// Trace closure in `S^1 x S^2`: as [`Diagram::closure_of_tangle`], with
    /// the tangle's strands passing once through a dotted disk `gate_id`.
    pub fn closure_through_gate(&self, gate_id: &str) -> Result<Self, DiagramError> {
        self.closure_impl(Some(gate_id))
    }

    fn closure_impl(&self, gate: Option<&str>) -> Result<Self, DiagramError> {
        if self.bottom != self.top {
            return Err(DiagramError::BoundaryMismatch { expected: self.bottom.clone(), found: self.top.clone() });
        }
        let m = self.bottom.len();
        let mut slices = Vec::new();
        for (i, &c) in self.bottom.iter().enumerate() {
            slices.push(Slice::Cup { pos: i, color: c });
        }
        let mut taken = HashSet::new();
        if let Some(id) = gate {
            slices.push(Slice::DiskGate { id: id.to_string(), pos: 0, span: m });
            taken.insert(id.to_string());
        }
        slices.extend(self.renamed_gates(&taken));
        for i in (0..m).rev() {
            slices.push(Slice::Cap { pos: i });
        }
        Diagram::closed(slices)
    }

    /// Replaces gate `id` by an unknot of `color` encircling its strands:
    /// a cup on the left, one leg swept right across the strands along the
    /// front arc, back left along the back arc, then a cap.
    pub fn expand_gate_to_belt(&self, id: &str, color: Color, chirality: BeltChirality) -> Option<Self> {
        let idx = self
            .slices
            .iter()
            .position(|s| matches!(s, Slice::DiskGate { id: g, .. } if g == id))?;
        let Slice::DiskGate { pos, span, .. } = self.slices[idx] else { unreachable!() };
        let mut belt = Vec::new();
        belt.push(Slice::Cup { pos, color });
        // sweeping right: the belt enters lower left; sweeping back it enters
        // lower right, so front-over/back-under is x+ both ways
        let cross = |p: usize| match chirality {
            BeltChirality::FrontOver => Slice::CrossPos { pos: p },
            BeltChirality::FrontUnder => Slice::CrossNeg { pos: p },
        };
        for i in 0..span {
            belt.push(cross(pos + 1 + i));
        }
        for i in (0..span).rev() {
            belt.push(cross(pos + 1 + i));
        }
        belt.push(Slice::Cap { pos });
        let mut slices = self.slices.clone();
        slices.splice(idx..idx + 1, belt);
        Some(Self { bottom: self.bottom.clone(), slices, top: self.top.clone() })
    }
}

fn shift_slice(s: Slice, k: usize) -> Slice {
    match s {
        Slice::Cup { pos, color } => Slice::Cup { pos: pos + k, color },
        Slice::Cap { pos } => Slice::Cap { pos: pos + k },
        Slice::CrossPos { pos } => Slice::CrossPos { pos: pos + k },
        Slice::CrossNeg { pos } => Slice::CrossNeg { pos: pos + k },
        Slice::VertexMerge { pos, a, b, c } => Slice::VertexMerge { pos: pos + k, a, b, c },
        Slice::VertexSplit { pos, c, a, b } => Slice::VertexSplit { pos: pos + k, c, a, b },
        Slice::DiskGate { id, pos, span } => Slice::DiskGate { id, pos: pos + k, span },
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram {{\n{}}}", dsl::to_dsl(self))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dsl::to_dsl(self))
    }
}
