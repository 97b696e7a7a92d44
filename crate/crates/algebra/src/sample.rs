use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Rational;

/// Deterministic stream of positive rationals `p/q` with `p, q` uniform in
/// `1..=1000`. Used both as direct values and as square roots of assignments,
/// so every drawn value corresponds to a positive variable.
pub fn seeded_rationals(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p: i64 = rng.gen_range(1..=1000);
            let q: i64 = rng.gen_range(1..=1000);
            Rational::new(BigInt::from(p), BigInt::from(q))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_fixed_seed() {
        assert_eq!(seeded_rationals(7, 5), seeded_rationals(7, 5));
        assert_ne!(seeded_rationals(7, 5), seeded_rationals(8, 5));
    }

    #[test]
    fn values_positive_and_bounded() {
        use num::Signed;
        for r in seeded_rationals(1, 50) {
            assert!(r.is_positive());
            assert!(*r.numer() <= BigInt::from(1000));
            assert!(*r.denom() <= BigInt::from(1000));
        }
    }
}
