//! Seeded pseudo-random sampling.
//!
//! A splitmix64 generator, written out so that any implementation in any
//! language can reproduce the exact stream (the update rule is documented
//! in the README). Draw `i` of seed `s` is a pure function of `(s, i)`,
//! which lets verification sweeps run in parallel without changing the
//! stream.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Sequential splitmix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        u64_to_unit(self.next_u64())
    }
}

/// The i-th output of the stream seeded by `seed` (0-based), without
/// advancing any state.
pub fn nth_u64(seed: u64, i: u64) -> u64 {
    mix(seed.wrapping_add(GOLDEN.wrapping_mul(i.wrapping_add(1))))
}

/// The i-th output mapped to [0, 1).
pub fn nth_f64(seed: u64, i: u64) -> f64 {
    u64_to_unit(nth_u64(seed, i))
}

fn mix(z: u64) -> u64 {
    let mut z = z;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn u64_to_unit(v: u64) -> f64 {
    (v >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
