//! Deterministic random stream.
//!
//! Every random draw in the crate goes through [`RngStream`]. The generator is
//! xoshiro256++ with its 256-bit state filled from the 64-bit seed by
//! SplitMix64 (the reference seeding of `rand_xoshiro`). On top of the raw
//! `u64` output the stream fixes its own derived draws so they stay stable
//! regardless of `rand` versions:
//!
//! - `next_f64`: the top 53 bits of one `u64`, scaled by `2^-53`, giving `[0, 1)`.
//! - `below(b)`: Lemire's multiply-and-reject method on one or more `u64`s.
//! - `shuffle`: Fisher-Yates from the last index down, one `below` per step.
//!
//! Child streams for parallel work are seeded with [`derive_seed`].

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of child stream `index` of a stream seeded with `parent`.
///
/// `splitmix64(parent ^ splitmix64(index))`. Distinct indices give
/// unrelated streams; the mapping is fixed and platform independent.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    splitmix64(parent ^ splitmix64(index))
}

/// Single-owner deterministic random stream.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: Xoshiro256PlusPlus,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream {
            seed,
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    /// Seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent stream for sub-task `index`. Does not advance `self`.
    pub fn child(&self, index: u64) -> RngStream {
        RngStream::new(derive_seed(self.seed, index))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform draw on `[0, 1)` with 53 bits of resolution.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below() needs a positive bound");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = (self.next_u64() as u128) * (bound as u128);
            if (wide as u64) >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Uniform random permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> alloc::vec::Vec<usize> {
        let mut perm: alloc::vec::Vec<usize> = (0..n).collect();
        self.shuffle(&mut perm);
        perm
    }
}
