//! Seed derivation and the random number generator used everywhere.
//!
//! All randomness flows from a single master seed through `derive_seed`,
//! which hashes a (parent, index) pair with the splitmix64 finalizer. Seeds
//! form a tree: master -> trial -> iteration -> rollout, so results do not
//! depend on thread scheduling or on how work is batched.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used for all sampling. ChaCha8 is fast, of high statistical
/// quality, and produces an identical stream on every platform.
pub type Rng = ChaCha8Rng;

/// Derive a child seed from a parent seed and a lane index.
///
/// splitmix64 finalizer over `parent XOR (index+1)*GOLDEN`; the +1 keeps
/// index 0 from passing the parent through unmixed.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    let mut z = parent ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Construct the generator for a derived seed.
pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng as _;

    #[test]
    fn derive_is_deterministic_and_distinct() {
        assert_eq!(derive_seed(42, 0), derive_seed(42, 0));
        assert_ne!(derive_seed(42, 0), derive_seed(42, 1));
        assert_ne!(derive_seed(42, 0), derive_seed(43, 0));
        // index 0 must not be the identity
        assert_ne!(derive_seed(42, 0), 42);
    }

    #[test]
    fn streams_reproduce() {
        let mut a = rng_from_seed(derive_seed(7, 3));
        let mut b = rng_from_seed(derive_seed(7, 3));
        for _ in 0..16 {
            assert_eq!(a.random::<u64>(), b.random::<u64>());
        }
    }
}
