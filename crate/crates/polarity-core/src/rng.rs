//! Seeded pseudo-randomness for splits and epoch shuffles.
//!
//! The generator is written out here instead of pulling in an RNG crate so
//! that a seed pins the exact same split and shuffle order forever, across
//! library upgrades and across reimplementations in other languages. It is
//! SplitMix64 (Steele, Lea & Flood's mixer, the same one used to seed Java's
//! SplittableRandom): a 64-bit Weyl sequence with increment 0x9E3779B97F4A7C15
//! passed through a two-round xor-shift-multiply finalizer.

/// SplitMix64 generator. One instance drives one reproducible stream.
#[derive(Debug, Clone)]
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

    /// Draws from `0..n` by the multiply-shift map `(x * n) >> 64`.
    ///
    /// The map is negligibly biased (at most 1 part in 2^64 per value) and,
    /// unlike rejection sampling, consumes exactly one raw draw, which keeps
    /// the stream position predictable.
    pub fn next_below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0, "next_below needs a nonempty range");
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Fisher-Yates shuffle, walking from the last index down: at position
    /// `i` the element swaps with a uniform draw from `0..=i`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
