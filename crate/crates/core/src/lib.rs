//! Exact invariants of colored trivalent graphs in wormhole spaces
//! (connected sums of `S^1 x S^2`), together with the Temperley-Lieb and
//! recoupling machinery they are computed with and the associated TQFT data.

pub mod diagram;
pub mod engine;
pub mod fixtures;
pub mod qring;
pub mod recoupling;
pub mod tl;
pub mod tqft;
pub mod wrt;

pub use diagram::{parse_dsl, BeltChirality, Diagram, DiagramError, Slice};
pub use engine::{bracket, eval_s3_bruteforce, eval_s3_transfer, wormhole_reduce, EngineError};
pub use qring::{ComplexValue, LaurentOrNot, LaurentPoly, RatFn};
pub use recoupling::Color;
pub use tl::{jones_wenzl, Matching, TlElement};
pub use tqft::{MarkedSphere, TqftError};
pub use wrt::{RootSpec, WrtError};
