use matlis::field::{Field, Fp};
use matlis::linalg::Matrix;
use matlis::modrep::*;
use matlis::strings::{band_words, finite_words, parse_band};
use matlis::suite::{random_module, verify_iso_witness};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> Fp {
    Fp::new(32003).unwrap()
}

fn module(seed: u64, max_dim: usize) -> ModuleRep<Fp> {
    random_module(&mut ChaCha8Rng::seed_from_u64(seed), &field(), max_dim)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn adjunction_symmetry(a in any::<u64>(), b in any::<u64>()) {
        let (m, n) = (module(a, 8), module(b, 8));
        prop_assert_eq!(hom_dim(&m, &dual(&n)).unwrap(), hom_dim(&n, &dual(&m)).unwrap());
    }

    #[test]
    fn hom_is_additive(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (ma, mb, mc) = (module(a, 6), module(b, 6), module(c, 6));
        let sum = direct_sum(&ma, &mb).unwrap();
        prop_assert_eq!(hom_dim(&sum, &mc).unwrap(), hom_dim(&ma, &mc).unwrap() + hom_dim(&mb, &mc).unwrap());
        prop_assert_eq!(hom_dim(&mc, &sum).unwrap(), hom_dim(&mc, &ma).unwrap() + hom_dim(&mc, &mb).unwrap());
    }

    #[test]
    fn hom_basis_is_exact(a in any::<u64>(), b in any::<u64>()) {
        let (m, n) = (module(a, 7), module(b, 7));
        let h = hom_basis(&m, &n).unwrap();
        for g in &h.basis {
            prop_assert!(m.intertwines(&n, g));
        }
        // independent oracle: kernel of the Kronecker-form intertwiner system
        let f = field();
        let (d, e) = (m.dim(), n.dim());
        let mut rows = Vec::new();
        for (sa, ta) in [(m.x(), n.x()), (m.y(), n.y())] {
            // (h * sa - ta * h)[i][j] as a linear form in the entries h[r][c]
            for i in 0..e {
                for j in 0..d {
                    let mut row = vec![0u64; e * d];
                    for c in 0..d {
                        row[i * d + c] = f.add(&row[i * d + c], sa.get(c, j));
                    }
                    for r in 0..e {
                        row[r * d + j] = f.sub(&row[r * d + j], ta.get(i, r));
                    }
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_fn(&f, rows.len(), e * d, |r, c| rows[r][c]);
        prop_assert_eq!(h.dim(), e * d - system.rank());
    }

    #[test]
    fn double_dual_unit_is_iso(a in any::<u64>()) {
        let m = module(a, 12);
        let u = double_dual_unit(&m);
        prop_assert!(verify_iso_witness(&m, &dual(&dual(&m)), &u));
    }

    #[test]
    fn socle_and_top_are_dual(a in any::<u64>()) {
        let m = module(a, 12);
        prop_assert_eq!(socle(&m).cols(), top_dim(&dual(&m)));
        // soc^i(m) is the annihilator of rad^i of the dual, so the layers match in order
        let soc = socle_series(&m);
        let rad = radical_series(&dual(&m));
        let mut soc_inc = vec![soc[0]];
        soc_inc.extend(soc.windows(2).map(|w| w[1] - w[0]));
        let mut chain = vec![m.dim()];
        chain.extend(rad.iter().copied());
        let rad_inc: Vec<usize> = chain.windows(2).map(|w| w[0] - w[1]).collect();
        prop_assert_eq!(soc_inc, rad_inc);
    }

    #[test]
    fn sub_plus_quotient(a in any::<u64>(), v in prop::collection::vec(0u64..3, 12)) {
        let m = module(a, 12);
        let vec: Vec<u64> = (0..m.dim()).map(|i| v[i % v.len()]).collect();
        let (sub, inc) = submodule_generated(&m, &[vec]).unwrap();
        prop_assert!(sub.intertwines(&m, &inc));
        let q = quotient(&m, &inc).unwrap();
        prop_assert_eq!(sub.dim() + q.dim(), m.dim());
    }
}

#[test]
fn string_duals_for_all_small_words() {
    let f = field();
    for w in finite_words(8) {
        let m = materialize_string(&w, &f).unwrap();
        let target = materialize_string(&w.inverse(), &f).unwrap();
        match is_isomorphic(&dual(&m), &target, 0, 20).unwrap() {
            IsoResult::Isomorphic { witness } => assert!(verify_iso_witness(&dual(&m), &target, &witness)),
            other => panic!("{w}: {other:?}"),
        }
        let u = double_dual_unit(&m);
        assert!(verify_iso_witness(&m, &dual(&dual(&m)), &u));
    }
}

#[test]
fn band_additivity_in_the_parameter() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for b in band_words(4) {
        let v1 = BandParam::Jordan { eigenvalue: f.random_nonzero(&mut rng), size: 1 };
        let v2 = BandParam::Jordan { eigenvalue: f.random_nonzero(&mut rng), size: 2 };
        let t = v1.twist(&f).unwrap().block_diag(&v2.twist(&f).unwrap());
        let joint = materialize_band_twist(&b, &t).unwrap();
        assert_eq!(joint.dim(), 3 * b.period());
        let sum = direct_sum(&materialize_band(&b, &v1, &f).unwrap(), &materialize_band(&b, &v2, &f).unwrap()).unwrap();
        assert!(is_isomorphic(&joint, &sum, 0, 20).unwrap().is_iso(), "{b}");
    }
}

/// Records how duality acts on band parameters: with the wrap convention
/// used here, the dual of `M(C, J_m(λ))` is `M(C^-, J_m(λ^-1))`.
#[test]
fn band_duals_invert_the_eigenvalue() {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for b in band_words(4) {
        for size in 1..=2 {
            let lambda = loop {
                let l = f.random_nonzero(&mut rng);
                if f.mul(&l, &l) != 1 {
                    break l;
                }
            };
            let inv = f.inv(&lambda).unwrap();
            let m = materialize_band(&b, &BandParam::Jordan { eigenvalue: lambda, size }, &f).unwrap();
            let d = dual(&m);
            let expected = materialize_band(&b.inverse(), &BandParam::Jordan { eigenvalue: inv, size }, &f).unwrap();
            let same = materialize_band(&b.inverse(), &BandParam::Jordan { eigenvalue: lambda, size }, &f).unwrap();
            assert!(is_isomorphic(&d, &expected, 0, 20).unwrap().is_iso(), "{b}");
            assert!(!is_isomorphic(&d, &same, 0, 20).unwrap().is_iso(), "{b}");
        }
    }
}

#[test]
fn band_example_over_gf5() {
    let f = Fp::new(5).unwrap();
    let m = materialize_band(&parse_band("band(xY)").unwrap(), &BandParam::Jordan { eigenvalue: 2, size: 1 }, &f).unwrap();
    // the inverse wrap letter carries 2^-1 = 3
    assert_eq!(m.y().get(1, 0), &3);
    assert!(m.x().mul(m.y()).is_zero() && m.y().mul(m.x()).is_zero());
}
