use satake_core::stalks::*;
use satake_core::weights::{partitions, Coweight};

#[test]
fn quaternionic_tables_double_the_complex_degrees() {
    for (n, size) in [(1, 6), (2, 6), (3, 6), (4, 5)] {
        let c = complex_stalk_table(n, size).unwrap();
        let q = quaternionic_stalk_table(n, size).unwrap();
        let s = stalk_table(n, size, Flavor::Symmetric).unwrap();
        assert_eq!(c.rows.len(), q.rows.len());
        for ((rc, rq), rs) in c.rows.iter().zip(&q.rows).zip(&s.rows) {
            assert_eq!((&rc.lam, &rc.mu), (&rq.lam, &rq.mu));
            assert_eq!(rc.poly, rq.poly);
            assert_eq!(rq.poly, rs.poly);
            assert_eq!(rq.degrees, rs.degrees);
            // complex degree d sits at quaternionic degree 2d
            let doubled: Vec<_> = rc.degrees.iter().map(|(d, m)| (2 * d, *m)).collect();
            let quat: Vec<_> = rq.degrees.iter().map(|(d, m)| (*d, *m)).collect();
            assert_eq!(doubled, quat);
            assert!(
                rc.degree_bound_ok() && rq.degree_bound_ok(),
                "{} {}",
                rc.lam,
                rc.mu
            );
        }
        assert!(c.parity_ok() && q.parity_ok() && s.parity_ok());
    }
}

#[test]
fn diagonal_rows_are_one() {
    let t = quaternionic_stalk_table(3, 5).unwrap();
    for r in t.rows.iter().filter(|r| r.lam == r.mu) {
        assert_eq!(r.degrees.len(), 1);
        let (&deg, &dim) = r.degrees.iter().next().unwrap();
        assert_eq!(dim, 1);
        assert_eq!(deg, -orbit_real_dimension(&r.lam, Flavor::Quaternionic) / 2);
    }
}

#[test]
fn quaternionic_orbit_dimensions_are_multiples_of_four() {
    for n in 1..=4 {
        for size in 0..=5 {
            for lam in partitions(size, n) {
                assert_eq!(orbit_real_dimension(&lam, Flavor::Quaternionic) % 4, 0);
                assert_eq!(
                    orbit_real_dimension(&lam, Flavor::Quaternionic),
                    2 * orbit_real_dimension(&lam, Flavor::Complex)
                );
            }
        }
    }
    assert_eq!(
        orbit_real_dimension(&Coweight(vec![1, 0]), Flavor::Quaternionic),
        4
    );
}
