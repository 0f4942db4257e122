use matlis::field::{Field, Fp, Rationals};
use matlis::ksdecomp::*;
use matlis::linalg::Matrix;
use matlis::modrep::{direct_sum, is_isomorphic, materialize_string, ModuleRep};
use matlis::strings::parse_word;
use matlis::suite::{ks_trial, random_module};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> Fp {
    Fp::new(32003).unwrap()
}

fn same_multiset(a: &DecompositionResult<Fp>, b: &DecompositionResult<Fp>) -> bool {
    a.parts.len() == b.parts.len()
        && a.parts.iter().all(|p| {
            b.parts.iter().any(|q| {
                p.multiplicity == q.multiplicity && is_isomorphic(&p.module, &q.module, 0, 20).unwrap().is_iso()
            })
        })
}

#[test]
fn decomposition_is_seed_independent() {
    let f = field();
    for instance in 0..6u64 {
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(instance), &f, 16);
        let reference = decompose(&m, 0).unwrap();
        for seed in 1..10 {
            let other = decompose(&m, seed).unwrap();
            assert!(same_multiset(&reference, &other), "instance {instance} seed {seed}");
        }
    }
}

#[test]
fn parts_are_indecomposable_and_fill_the_module() {
    let f = field();
    for instance in 0..10u64 {
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(100 + instance), &f, 20);
        let d = decompose(&m, instance).unwrap();
        assert_eq!(d.total_dim(), m.dim());
        assert!(d.summand_count() <= m.dim());
        for part in &d.parts {
            let again = decompose(&part.module, 5).unwrap();
            assert_eq!(again.parts.len(), 1);
            assert_eq!(again.parts[0].multiplicity, 1);
            assert!(part.certificate.is_exact());
        }
    }
}

#[test]
fn radical_is_nilpotent_and_quotient_is_semisimple() {
    let f = field();
    for instance in 0..10u64 {
        let m = random_module(&mut ChaCha8Rng::seed_from_u64(200 + instance), &f, 12);
        let e = endo_algebra(&m).unwrap();
        let rad = radical_of_endo(&e).unwrap();
        for b in &rad.basis {
            assert!(b.pow(m.dim() as u64).is_zero());
        }
        // products of radical elements stay in the radical
        for a in &rad.basis {
            for b in e.basis() {
                assert!(rad.contains(&a.mul(b)) && rad.contains(&b.mul(a)));
            }
        }
        // trace form on the lifts is nondegenerate modulo the radical
        let s = rad.residue_dim();
        let gram = Matrix::from_fn(&f, s, s, |i, j| rad.lifts[i].mul(&rad.lifts[j]).trace());
        assert_eq!(gram.rank(), s);
        assert_eq!(s + rad.basis.len(), e.dim());
    }
}

#[test]
fn endomorphisms_of_the_socle_square() {
    // End(M(xY)) is k[x,y]/(x,y)^2: the radical squares to zero
    let f = field();
    let m = materialize_string(&parse_word("xY").unwrap(), &f).unwrap();
    let e = endo_algebra(&m).unwrap();
    let rad = radical_of_endo(&e).unwrap();
    assert_eq!((e.dim(), rad.basis.len()), (3, 2));
    for a in &rad.basis {
        for b in &rad.basis {
            assert!(a.mul(b).is_zero());
        }
    }
    let table = e.structure_constants();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(table[i][j], table[j][i]);
        }
    }
}

#[test]
fn small_characteristic_is_refused() {
    let f = Fp::new(3).unwrap();
    let m = materialize_string(&parse_word("").unwrap(), &f).unwrap();
    let kk = direct_sum(&m, &m).unwrap();
    assert!(matches!(decompose(&kk, 0), Err(KsError::CharacteristicTooSmall { p: 3, needed: 4 })));
}

#[test]
fn decomposition_over_the_rationals() {
    let q = Rationals;
    let x = materialize_string(&parse_word("x").unwrap(), &q).unwrap();
    let k = ModuleRep::simple(&q);
    let m = direct_sum(&x, &k).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let p = Matrix::random_invertible(&q, 3, &mut rng);
    let m = m.conjugate(&p).unwrap();
    let d = decompose(&m, 0).unwrap();
    let mut dims: Vec<usize> = d.parts.iter().map(|p| p.module.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 2]);
    let twice = decompose(&direct_sum(&x, &x).unwrap(), 3).unwrap();
    assert_eq!(twice.parts.len(), 1);
    assert_eq!(twice.parts[0].multiplicity, 2);
    assert!(q.is_one(&q.one()));
}

#[test]
fn a_few_krull_schmidt_trials() {
    for seed in 5000..5010 {
        let t = ks_trial(seed);
        assert!(t.recovered, "{:?}", t.pieces);
    }
}
