use matlis::field::{Field, Fp};
use matlis::linalg::{solve_linear, Matrix};
use matlis::poly;
use proptest::prelude::*;

fn matrix(p: u64, rows: usize, cols: usize, entries: &[u64]) -> Matrix<Fp> {
    let f = Fp::new(p).unwrap();
    Matrix::from_fn(&f, rows, cols, |r, c| entries[r * cols + c] % p)
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rank_plus_nullity(rows in 1usize..7, cols in 1usize..7, entries in prop::collection::vec(0u64..5, 49)) {
        let m = matrix(5, rows, cols, &entries);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn min_poly_annihilates(n in 1usize..7, entries in prop::collection::vec(0u64..32003, 36)) {
        let m = matrix(32003, n, n, &entries);
        let f = m.field().clone();
        let mp = m.min_poly().unwrap();
        prop_assert!(f.is_one(mp.last().unwrap()));
        prop_assert!(poly::eval_matrix(&f, &mp, &m).is_zero());
        // no proper monic divisor of lower degree annihilates: the powers
        // I, m, ..., m^(deg-1) are independent
        let deg = mp.len() - 1;
        let powers: Vec<Vec<u64>> = (0..deg).map(|k| m.pow(k as u64).entries().to_vec()).collect();
        prop_assert_eq!(Matrix::from_columns(&f, n * n, &powers).rank(), deg);
    }
}

/// Every matrix over GF(2) of the given shape.
fn all_matrices(rows: usize, cols: usize) -> Vec<Matrix<Fp>> {
    let f = Fp::new(2).unwrap();
    (0..1u32 << (rows * cols))
        .map(|bits| Matrix::from_fn(&f, rows, cols, |r, c| ((bits >> (r * cols + c)) & 1) as u64))
        .collect()
}

#[test]
fn solve_matches_brute_force_over_gf2() {
    for (rows, cols) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let candidates = all_matrices(cols, 1);
        for a in all_matrices(rows, cols) {
            for b in all_matrices(rows, 1) {
                let brute = candidates.iter().any(|x| a.mul(x) == b);
                let solved = solve_linear(&a, &b).unwrap();
                assert_eq!(solved.is_some(), brute, "a={a:?} b={b:?}");
                if let Some(x) = solved {
                    assert_eq!(a.mul(&x), b);
                }
                let augmented = a.hstack(&b).rank();
                assert_eq!(brute, augmented == a.rank());
            }
        }
    }
}
