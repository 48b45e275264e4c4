//! Seeded sampling of rational points for numerical identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat_frac, Rational};

pub const DEFAULT_SEED: u64 = 0x5a7a_4e00;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `a / b` with `|a| <= bound` and `1 <= b <= bound`.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    let a = rng.gen_range(-bound..=bound);
    let b = rng.gen_range(1..=bound.max(1));
    rat_frac(a, b)
}

pub fn random_point(rng: &mut impl Rng, dim: usize, bound: i64) -> Vec<Rational> {
    (0..dim).map(|_| random_rational(rng, bound)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let a = random_point(&mut seeded_rng(7), 5, 9);
        let b = random_point(&mut seeded_rng(7), 5, 9);
        assert_eq!(a, b);
        assert_ne!(a, random_point(&mut seeded_rng(8), 5, 9));
    }
}
