use num_traits::Zero;
use satake_core::algebra::{rat, MultiPolynomial, PolyMatrix, RationalMatrix};
use satake_core::centralizers::*;
use satake_core::sample::{random_point, seeded_rng};

#[test]
fn kostant_section_reproduces_coefficients() {
    let mut rng = seeded_rng(1);
    for k in 0..100 {
        let s = 1 + k % 6;
        let c = CharPolyPoint(random_point(&mut rng, s, 20));
        assert_eq!(CharPolyPoint::of_matrix(&kostant_section(&c)), c);
    }
}

#[test]
fn companion_identity() {
    for n in 1..=3 {
        assert!(companion_conjugation_symbolic(n).unwrap(), "n={n}");
    }
    let mut rng = seeded_rng(2);
    for n in 3..=5 {
        for _ in 0..50 {
            let c = CharPolyPoint(random_point(&mut rng, n, 9));
            companion_conjugation_check(&c).unwrap();
        }
    }
}

#[test]
fn tau_preserves_and_detects_regularity() {
    let mut rng = seeded_rng(3);
    let (mut regular, mut singular) = (0, 0);
    for k in 0..100 {
        let n = 1 + k % 3;
        // conjugates of diagonal matrices with entries in {0, 1} are often
        // non-regular; companion matrices always are regular
        let c = if k % 2 == 0 {
            let s = random_invertible(&mut rng, n, 4);
            let d = RationalMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    rat((i as i64 * 7 + k as i64) % 2)
                } else {
                    rat(0)
                }
            });
            &(&s * &d) * &s.inverse().unwrap()
        } else {
            kostant_section(&CharPolyPoint(random_point(&mut rng, n, 5)))
        };
        let t = tau_embed_matrix(&c).unwrap();
        assert_eq!(is_regular(&t), is_regular(&c), "{c:?}");
        if is_regular(&c) {
            regular += 1
        } else {
            singular += 1
        }
    }
    assert!(regular > 0 && singular > 0);
}

#[test]
fn interleaved_char_poly_symbolic() {
    for n in 1..=3 {
        let nv = n * n;
        let c = PolyMatrix::from_fn(n, nv, |i, j| MultiPolynomial::var(nv, i * n + j));
        let t = satake_core::twistor::tau(&c);
        let expected: Vec<_> = c
            .char_poly_faddeev()
            .into_iter()
            .flat_map(|ci| [MultiPolynomial::zero(nv), ci])
            .collect();
        assert_eq!(t.char_poly_faddeev(), expected, "n={n}");
    }
}

#[test]
fn interleaved_char_poly_numeric() {
    let mut rng = seeded_rng(4);
    for n in 1..=5 {
        for _ in 0..10 {
            let c = random_matrix(&mut rng, n, n, 6);
            let t = tau_embed_matrix(&c).unwrap();
            assert_eq!(
                CharPolyPoint::of_matrix(&t),
                CharPolyPoint::of_matrix(&c).interleave()
            );
        }
    }
}

#[test]
fn regular_centralizers_are_commutative() {
    let mut rng = seeded_rng(5);
    for n in 1..=4 {
        let x = kostant_section(&CharPolyPoint(random_point(&mut rng, n, 5)));
        let basis = centralizer_basis(&x);
        assert_eq!(basis.len(), n);
        assert!(is_commutative(&basis));
        assert!(basis.iter().all(|b| b.commutes_with(&x)));
        assert!(power_basis(&x).iter().all(|b| b.commutes_with(&x)));
    }
}

#[test]
fn embedding_lands_in_centralizer() {
    for n in 1..=3 {
        let report = run_check(CheckKind::Embedding, n, 6, 20).unwrap();
        assert!(report.ok(), "{report:?}");
    }
}

#[test]
fn shalika_slice() {
    assert!(shalika_identity_symbolic(1).unwrap());
    assert!(shalika_identity_symbolic(2).unwrap());
    let mut rng = seeded_rng(7);
    for n in 1..=4 {
        for _ in 0..10 {
            let a = random_matrix(&mut rng, n, n, 5);
            let c = random_matrix(&mut rng, n, n, 5);
            let x = random_matrix(&mut rng, n, n, 5);
            assert_eq!(
                shalika_conjugate(&a, &c, &x),
                shalika_closed_form(&a, &c, &x)
            );
            let nf = shalika_normal_form(&a, &c).unwrap();
            assert!(nf.verified);
            assert_eq!(nf.normal, &c + &(&a * &a));
            assert!(shalika_uniqueness(&a, &c));
        }
    }
}

#[test]
fn moment_map_char_poly_is_even_and_invariant() {
    let mut rng = seeded_rng(8);
    let c = random_matrix(&mut rng, 2, 2, 5);
    let base = CharPolyPoint::of_matrix(&tau_embed_matrix(&c).unwrap());
    for _ in 0..50 {
        let x = random_invertible(&mut rng, 4, 5);
        let img = moment_map_image(&x, &c).unwrap();
        let cp = CharPolyPoint::of_matrix(&img);
        assert_eq!(cp, base);
        assert!(cp.0.iter().step_by(2).all(Zero::is_zero));
    }
}

#[test]
fn e_t_x_generic_regularity() {
    let mut rng = seeded_rng(9);
    for n in 1..=4 {
        let t = random_point(&mut rng, n, 7);
        let m = e_t_x_at(&t);
        assert!(is_regular(&m));
        let x = MultiPolynomial::var(1, 0);
        let expected = t.iter().fold(MultiPolynomial::one(1), |acc, ti| {
            &acc * &(&x - &MultiPolynomial::constant(1, ti * ti))
        });
        let coeffs = m.char_poly();
        let got = (0..=n).fold(MultiPolynomial::zero(1), |acc, k| {
            let c = if k == 0 {
                rat(1)
            } else {
                coeffs[k - 1].clone()
            };
            &acc + &x.pow((n - k) as u32).scale(&c)
        });
        assert_eq!(got, expected);
    }
}

#[test]
fn check_runner_all_kinds() {
    for kind in [
        CheckKind::Companion,
        CheckKind::Tau,
        CheckKind::Shalika,
        CheckKind::Embedding,
    ] {
        for n in 1..=3 {
            let r = run_check(kind, n, 42, 10).unwrap();
            assert!(r.ok(), "{r:?}");
            assert_eq!(r.passed, 10);
        }
    }
}
