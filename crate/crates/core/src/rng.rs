//! Seeded 64-bit multiplicative congruential generator.
//!
//! State update `s <- s * 0xf1357aea2e62a9c5 (mod 2^64)` on an odd state; the
//! output is the upper 32 bits. The seed maps to the state as
//! `2 * seed + 1`, so every seed (including 0) is valid and distinct.
//! Reports echo the seed, so any run can be replayed bit-for-bit.

const MULTIPLIER: u64 = 0xf135_7aea_2e62_a9c5;

#[derive(Clone, Debug)]
pub struct Mcg64 {
    state: u64,
}

impl Mcg64 {
    pub fn new(seed: u64) -> Mcg64 {
        let mut rng = Mcg64 { state: seed.wrapping_mul(2).wrapping_add(1) };
        // Mix away the low-entropy start.
        for _ in 0..4 {
            rng.next_u32();
        }
        rng
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER);
        (self.state >> 32) as u32
    }

    /// Uniform draw from `0..n` by rejection; `n > 0`.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0);
        let zone = u32::MAX - (u32::MAX % n);
        loop {
            let v = self.next_u32();
            if v < zone {
                return v % n;
            }
        }
    }

    /// Child generator for trial `index`, independent of how many values the
    /// parent has produced.
    pub fn derive(seed: u64, index: u64) -> Mcg64 {
        Mcg64::new(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}
