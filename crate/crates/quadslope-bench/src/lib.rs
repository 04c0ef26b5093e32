//! Shared inputs for the benchmark targets.

use quadslope::{samples, Graph};
use rand::SeedableRng;

/// A deterministic random connected cubic graph of the given order.
pub fn seeded_cubic(n: usize, seed: u64) -> Graph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    quadslope::structure::random_cubic(n, &mut rng).expect("valid order")
}

pub fn petersen() -> Graph {
    samples::petersen()
}

pub fn two_gadget() -> Graph {
    samples::two_gadget()
}

pub fn heawood() -> Graph {
    samples::heawood()
}
