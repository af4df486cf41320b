//! Stable seed derivation.
//!
//! Every random draw in the toolkit descends from one root seed, fanned out
//! by hashing a purpose tag plus identifying payload. Adding a stage or
//! reordering queries therefore never perturbs the randomness of another
//! stage, and identical queries yield identical draws regardless of order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(hash: &mut u64, bytes: &[u8]) {
    for &b in bytes {
        *hash ^= u64::from(b);
        *hash = hash.wrapping_mul(FNV_PRIME);
    }
}

/// Derives a child seed from `(root, tag, label, indices)` with FNV-1a.
/// The hash is fixed for all time; derived streams are reproducible across
/// platforms and versions.
pub fn derive_seed(root: u64, tag: &str, label: &str, indices: &[u64]) -> u64 {
    let mut h = FNV_OFFSET;
    fnv1a(&mut h, &root.to_le_bytes());
    fnv1a(&mut h, tag.as_bytes());
    fnv1a(&mut h, &[0xff]);
    fnv1a(&mut h, label.as_bytes());
    fnv1a(&mut h, &[0xfe]);
    for &i in indices {
        fnv1a(&mut h, &i.to_le_bytes());
    }
    h
}

/// A ChaCha stream seeded via [`derive_seed`].
pub fn rng_for(root: u64, tag: &str, label: &str, indices: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(root, tag, label, indices))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivation_is_stable_and_sensitive() {
        let a = derive_seed(7, "oracle-tp", "scene_1", &[0, 440, 640, 640]);
        assert_eq!(a, derive_seed(7, "oracle-tp", "scene_1", &[0, 440, 640, 640]));
        assert_ne!(a, derive_seed(8, "oracle-tp", "scene_1", &[0, 440, 640, 640]));
        assert_ne!(a, derive_seed(7, "oracle-fp", "scene_1", &[0, 440, 640, 640]));
        assert_ne!(a, derive_seed(7, "oracle-tp", "scene_2", &[0, 440, 640, 640]));
        assert_ne!(a, derive_seed(7, "oracle-tp", "scene_1", &[0, 440, 640, 641]));
    }

    #[test]
    fn tag_label_boundary_is_unambiguous() {
        assert_ne!(
            derive_seed(1, "ab", "c", &[]),
            derive_seed(1, "a", "bc", &[])
        );
    }
}
