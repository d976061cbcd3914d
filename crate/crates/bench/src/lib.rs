//! Benchmark inputs shared by the criterion targets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wormhole_core::fixtures::{self, RandomParams};
use wormhole_core::Diagram;

/// Seeded gate-free diagrams within the default random limits.
pub fn random_closed(seed: u64, count: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = RandomParams::default();
    (0..count).map(|_| fixtures::random_closed_diagram(&mut rng, &p)).collect()
}

/// Seeded diagrams with one or two gates.
pub fn random_gated(seed: u64, count: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = RandomParams { max_gates: 2, max_width: 6, max_crossings: 6, ..Default::default() };
    (0..count).map(|_| fixtures::random_gated_diagram(&mut rng, &p)).collect()
}
