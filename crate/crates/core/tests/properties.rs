use num_traits::One;
use proptest::prelude::*;
use satake_core::algebra::{rat, MultiPolynomial, PolyMatrix, RationalMatrix};
use satake_core::gln::{character, weight_multiplicity};
use satake_core::kostka::{kostka_foulkes_charge, specialize_at_one};
use satake_core::spectral::{shear, unshear, BigradedSeries};
use satake_core::weights::{dominance_leq, partitions, rho_pairing_difference, Coweight};

const NV: usize = 2;

fn poly() -> impl Strategy<Value = MultiPolynomial> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|terms| {
        MultiPolynomial::from_terms(
            NV,
            terms.into_iter().map(|((a, b), c)| (vec![a, b], rat(c))),
        )
    })
}

fn poly_matrix(dim: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(), dim * dim)
        .prop_map(move |e| PolyMatrix::from_fn(dim, NV, |i, j| e[i * dim + j].clone()))
}

/// Products of elementary matrices with polynomial off-diagonal entries:
/// determinant one, so the inverse stays polynomial.
fn unimodular(dim: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec((0..dim, 0..dim, poly()), 1..4).prop_map(move |ops| {
        let mut g = PolyMatrix::identity(dim, NV);
        for (i, j, p) in ops {
            if i == j {
                continue;
            }
            let mut e = PolyMatrix::identity(dim, NV);
            e.set(i, j, p);
            g = g.mul(&e).unwrap();
        }
        g
    })
}

fn strictly_upper(dim: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-2i64..3, dim * dim).prop_map(move |v| {
        RationalMatrix::from_fn(
            dim,
            dim,
            |i, j| if i < j { rat(v[i * dim + j]) } else { rat(0) },
        )
    })
}

fn small_partition() -> impl Strategy<Value = Coweight> {
    (1usize..4, 0i64..6).prop_flat_map(|(n, s)| {
        let parts = partitions(s, n);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn series() -> impl Strategy<Value = BigradedSeries> {
    prop::collection::vec((-6i64..7, -3i64..4, 1u64..5), 0..8).prop_map(|v| {
        let mut s = BigradedSeries::new();
        for (i, j, m) in v {
            s.add(i, 2 * j, m);
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &MultiPolynomial::one(NV), a);
    }

    #[test]
    fn char_poly_is_a_similarity_invariant(x in poly_matrix(2), g in unimodular(2)) {
        let y = PolyMatrix::conjugate(&g, &x).unwrap();
        prop_assert_eq!(y.char_poly(), x.char_poly());
    }

    #[test]
    fn char_poly_is_a_similarity_invariant_3x3(x in poly_matrix(3), g in unimodular(3)) {
        let y = PolyMatrix::conjugate(&g, &x).unwrap();
        prop_assert_eq!(y.char_poly(), x.char_poly());
    }

    #[test]
    fn nilpotent_kernel_increments_do_not_grow(x in strictly_upper(5)) {
        let dims: Vec<usize> = (0..=5u32).map(|k| x.kernel_power(k).unwrap().len()).collect();
        prop_assert_eq!(dims[5], 5);
        for k in 0..4 {
            prop_assert!(dims[k + 2] - dims[k + 1] <= dims[k + 1] - dims[k], "{:?}", dims);
        }
    }

    #[test]
    fn weight_multiplicities_are_permutation_invariant(lam in small_partition(), seed in any::<u64>()) {
        let n = lam.n();
        for mu in partitions(lam.size(), n) {
            let mut perm = mu.0.clone();
            // a deterministic shuffle driven by the seed
            let mut s = seed;
            for i in (1..n).rev() {
                perm.swap(i, (s % (i as u64 + 1)) as usize);
                s /= i as u64 + 1;
            }
            let permuted = Coweight(perm);
            let m = weight_multiplicity(&lam, &mu);
            prop_assert_eq!(weight_multiplicity(&lam, &permuted), m);
            prop_assert_eq!(character(&lam).coeff(&permuted.0), m.into());
        }
    }

    #[test]
    fn kostka_foulkes_specializes_and_vanishes(lam in small_partition()) {
        for mu in partitions(lam.size(), lam.n()) {
            let k = kostka_foulkes_charge(&lam, &mu);
            prop_assert!(k.has_nonnegative_coefficients());
            prop_assert_eq!(specialize_at_one(&k), weight_multiplicity(&lam, &mu).into());
            if !dominance_leq(&mu, &lam).unwrap() {
                prop_assert!(k.is_zero());
            } else {
                prop_assert!(rho_pairing_difference(&lam, &mu).unwrap() >= 0);
            }
        }
        prop_assert!(kostka_foulkes_charge(&lam, &lam).coeff(0).is_one());
    }

    #[test]
    fn shear_round_trips(s in series()) {
        let sheared = shear(&s).unwrap();
        prop_assert_eq!(sheared.total_dimension(), s.total_dimension());
        prop_assert_eq!(unshear(&sheared), s);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 1..=4 {
        for size in 0..=6 {
            let ps = partitions(size, n);
            for a in &ps {
                assert!(dominance_leq(a, a).unwrap());
                for b in &ps {
                    let ab = dominance_leq(a, b).unwrap();
                    if ab && dominance_leq(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if ab && dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
