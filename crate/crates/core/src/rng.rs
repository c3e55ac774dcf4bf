//! Deterministic PRNG for the simulation paths.
//!
//! This is SplitMix64 (Steele, Lea & Vigna — the `java.util.SplittableRandom`
//! / xoshiro-seeding finalizer), implemented here verbatim so that simulation
//! output is bit-identical across platforms and toolchain versions. Bounded
//! draws use rejection sampling, so shuffles are unbiased.

/// SplitMix64 generator. The full state is the 64-bit seed.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` (rejection sampling; `bound > 0`).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = bound.wrapping_mul(u64::MAX / bound);
        loop {
            let v = self.next_u64();
            if zone == 0 || v < zone {
                return v % bound;
            }
        }
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            xs.swap(i, j);
        }
    }
}
