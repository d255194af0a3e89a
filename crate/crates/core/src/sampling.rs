//! Seeded sample generation.
//!
//! All randomized sweeps draw from ChaCha8 (the 8-round ChaCha stream
//! cipher generator of `rand_chacha`) seeded with `seed_from_u64`, so a given
//! seed reproduces the same samples on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

pub const GENERATOR_NAME: &str = "ChaCha8 (rand_chacha, seed_from_u64)";

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform draw from the half-open interval `[lo, hi)`.
pub fn uniform(rng: &mut SampleRng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn rng_stream(seed: u64, stream: u64) -> SampleRng {
    let mut r = rng(seed);
    r.set_stream(stream);
    r
}
