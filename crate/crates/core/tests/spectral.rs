use satake_core::spectral::*;
use satake_core::weights::{partitions, Coweight};

fn range() -> Vec<Coweight> {
    let mut out = Vec::new();
    for n in 1..=2usize {
        for size in 0..=4 {
            out.extend(partitions(size, 2 * n));
        }
    }
    out.push(Coweight(vec![1, 0, 0, -1]));
    out.push(Coweight(vec![0, -1]));
    out.push(Coweight(vec![2, 1, -1, -2]));
    out
}

#[test]
fn free_module_hilbert_series_identity() {
    for lam in range() {
        let (lhs, rhs) = hilbert_series_identity(&lam, 16).unwrap();
        assert_eq!(lhs, rhs, "{lam}");
        assert!(sheared_free_module(&lam).unwrap().base_change_is_graded());
    }
}

#[test]
fn branching_is_well_formed_and_restricts_diagonally() {
    for lam in range() {
        let d = branch_psi_x(&lam).unwrap();
        assert!(decomposition_well_formed(&d), "{lam}");
        assert_eq!(
            d.diagonal_multiplicities(),
            diagonal_restriction(&lam).unwrap(),
            "{lam}"
        );
    }
}

#[test]
fn branching_commutes_with_duality() {
    for lam in range() {
        let d = branch_psi_x(&lam).unwrap();
        let dual = branch_psi_x(&lam.dual()).unwrap();
        assert_eq!(dual.terms, dual_decomposition(&d), "{lam}");
    }
    // self-dual weights give a decomposition symmetric under (lam, j) -> (lam^*, -j)
    for lam in [Coweight(vec![1, 0, 0, -1]), Coweight(vec![2, 1, -1, -2])] {
        let d = branch_psi_x(&lam).unwrap();
        assert_eq!(d.terms, dual_decomposition(&d));
    }
}

#[test]
fn nearby_cycles_of_generators() {
    for n in 1..=3usize {
        let mut omega = vec![0; 2 * n];
        omega[0] = 1;
        let d = branch_psi_x(&Coweight(omega)).unwrap();
        let mut std = vec![0; n];
        std[0] = 1;
        let js: Vec<_> = d
            .terms
            .iter()
            .map(|t| (t.lam.clone(), t.j, t.mult.clone()))
            .collect();
        assert_eq!(
            js,
            vec![
                (Coweight(std.clone()), 1, 1.into()),
                (Coweight(std), -1, 1.into())
            ]
        );
        let d = branch_psi_x(&Coweight(vec![1; 2 * n])).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(
            (d.terms[0].lam.clone(), d.terms[0].j),
            (Coweight(vec![2; n]), 0)
        );
    }
}

#[test]
fn shear_preserves_dimension_and_inverts() {
    for n in 1..=3 {
        let g = sym_generator_series(n);
        let s = shear(&g).unwrap();
        assert_eq!(s.total_dimension(), g.total_dimension());
        assert_eq!(unshear(&s), g);
        // generators of Sym(g_n[-4]) on the quaternionic side all sit in degree 4
        let m = sheared_free_module(&Coweight(vec![0; 2 * n])).unwrap();
        assert!(m
            .generators
            .iter()
            .filter(|(b, _)| *b == Block::C)
            .all(|(_, s)| s.entries().all(|((i, _), _)| i == 4)));
    }
    let weight_zero = BigradedSeries::from(vec![(0, 0, 2), (5, 0, 1)]);
    assert_eq!(shear(&weight_zero).unwrap(), weight_zero);
}
