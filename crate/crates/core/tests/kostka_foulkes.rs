use num_bigint::BigInt;
use satake_core::algebra::QPolynomial;
use satake_core::gln::{weight_multiplicity, weyl_dimension};
use satake_core::kostka::{kostka_foulkes_charge, kostka_foulkes_lusztig};
use satake_core::weights::{dominance_leq, dominant_pairs, partitions, Coweight};

fn ranges() -> Vec<(usize, i64)> {
    vec![(1, 6), (2, 6), (3, 6), (4, 5)]
}

#[test]
fn charge_and_lusztig_agree_on_all_small_pairs() {
    for (n, size) in ranges() {
        for (lam, mu) in dominant_pairs(n, size) {
            let c = kostka_foulkes_charge(&lam, &mu);
            let l = kostka_foulkes_lusztig(&lam, &mu);
            assert_eq!(c, l, "lam={lam} mu={mu}");
            assert!(c.has_nonnegative_coefficients());
            assert_eq!(
                c.eval_at_one(),
                BigInt::from(weight_multiplicity(&lam, &mu)),
                "q=1 specialization for lam={lam} mu={mu}"
            );
        }
    }
}

#[test]
fn vanishing_off_the_dominance_cone() {
    for n in 2..=3 {
        for s in 0..=5 {
            let parts = partitions(s, n);
            for lam in &parts {
                for mu in &parts {
                    if !dominance_leq(mu, lam).unwrap() {
                        assert!(kostka_foulkes_charge(lam, mu).is_zero());
                        assert!(kostka_foulkes_lusztig(lam, mu).is_zero());
                    }
                }
                assert_eq!(kostka_foulkes_charge(lam, lam), QPolynomial::one());
            }
        }
    }
}

#[test]
fn column_shape_gives_q_binomial_leading_degree() {
    // K_{(n),(1^n)} = q^{n(n-1)/2}
    for n in 1..=5usize {
        let mut lam = vec![0; n];
        lam[0] = n as i64;
        let mu = vec![1; n];
        let k = kostka_foulkes_charge(&Coweight(lam), &Coweight(mu));
        assert_eq!(k, QPolynomial::monomial(1, (n * (n - 1) / 2) as i64));
    }
}

#[test]
fn multiplicities_sum_to_weyl_dimension() {
    // summing over all weights, not just dominant ones
    for n in 1..=4usize {
        for s in 0..=(8 / n as i64).min(8) {
            for lam in partitions(s, n) {
                let mut total = 0u64;
                for_each_composition(s, n, &mut |mu| total += weight_multiplicity(&lam, mu));
                assert_eq!(BigInt::from(total), weyl_dimension(&lam), "lam={lam}");
            }
        }
    }
}

fn for_each_composition(s: i64, n: usize, f: &mut dyn FnMut(&Coweight)) {
    fn rec(rem: i64, cur: &mut Vec<i64>, n: usize, f: &mut dyn FnMut(&Coweight)) {
        if cur.len() + 1 == n {
            cur.push(rem);
            f(&Coweight(cur.clone()));
            cur.pop();
            return;
        }
        for k in 0..=rem {
            cur.push(k);
            rec(rem - k, cur, n, f);
            cur.pop();
        }
    }
    rec(s, &mut Vec::new(), n, f);
}
