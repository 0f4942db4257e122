//! The reproduction suite: ten structural checks run at desk scale, each
//! reported as a single pass/fail line.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classify::{
    admissible_indices, arno_split, classify_dual_compat, classify_word, split_uniqueness_check, Classification,
};
use crate::dvr::{dvr_classify, dvr_dual, DvrCatalogObject};
use crate::field::{Field, Fp, DEFAULT_PRIME};
use crate::ksdecomp::{decompose_with, endo_algebra, is_indecomposable, radical_of_endo, Indecomposability};
use crate::linalg::Matrix;
use crate::modrep::{
    direct_sum_all, double_dual_unit, dual, hom_dim, is_isomorphic, materialize_band, materialize_string,
    socle_layer, socle_series, BandParam, IsoResult, ModuleRep,
};
use crate::strings::{band_words, finite_words, parse_word, words_with_tails, Letter, PeriodicWord, StringWord};
use crate::DEFAULT_MC_BUDGET;

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({}; {:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.detail,
            self.seconds
        )
    }
}

pub const TITLES: [&str; 10] = [
    "string duality M(C)^v = M(C^-)",
    "double-dual unit is an isomorphism",
    "socle filtration of the injective hull",
    "endomorphism rings of C_i",
    "Krull-Schmidt recovery",
    "duality swaps chain conditions",
    "noetherian-by-artinian splitting",
    "band modules",
    "complete DVR catalog",
    "parser robustness",
];

fn field() -> Fp {
    Fp::new(DEFAULT_PRIME).expect("default prime")
}

/// `x^i Y^i`, the i-th truncation of the injective hull.
pub fn c_word(i: usize) -> StringWord {
    let mut core = vec![Letter::X; i];
    core.extend(std::iter::repeat(Letter::Y_INV).take(i));
    StringWord::finite(core).expect("x^i Y^i is a string")
}

/// Checks that `witness` is an invertible module map `a -> b`.
pub fn verify_iso_witness<K: Field>(a: &ModuleRep<K>, b: &ModuleRep<K>, witness: &Matrix<K>) -> bool {
    a.intertwines(b, witness) && witness.rank() == a.dim()
}

fn iso_with_witness<K: Field>(a: &ModuleRep<K>, b: &ModuleRep<K>, seed: u64) -> bool {
    match is_isomorphic(a, b, seed, DEFAULT_MC_BUDGET) {
        Ok(IsoResult::Isomorphic { witness }) => verify_iso_witness(a, b, &witness),
        _ => false,
    }
}

/// A named indecomposable from the string and band catalog.
#[derive(Debug, Clone)]
pub struct CatalogPiece {
    pub name: String,
    pub module: ModuleRep<Fp>,
}

/// Random string module with at most `max_vertices` vertices or band module
/// of period at most `max_period` with a Jordan block of size at most `max_jordan`.
pub fn random_piece<R: Rng + ?Sized>(
    rng: &mut R,
    f: &Fp,
    max_vertices: usize,
    max_period: usize,
    max_jordan: usize,
) -> CatalogPiece {
    if rng.gen_bool(0.5) {
        let words = finite_words(max_vertices - 1);
        let w = &words[rng.gen_range(0..words.len())];
        CatalogPiece { name: format!("M({w})"), module: materialize_string(w, f).unwrap() }
    } else {
        let bands = band_words(max_period);
        let b = &bands[rng.gen_range(0..bands.len())];
        let lambda = f.random_nonzero(rng);
        let size = rng.gen_range(1..=max_jordan);
        let v = BandParam::Jordan { eigenvalue: lambda, size };
        CatalogPiece { name: format!("M({b}, J{size}({lambda}))"), module: materialize_band(b, &v, f).unwrap() }
    }
}

/// Direct sum of random catalog pieces in a random basis, of dimension at most `max_dim`.
pub fn random_module<R: Rng + ?Sized>(rng: &mut R, f: &Fp, max_dim: usize) -> ModuleRep<Fp> {
    let mut parts = Vec::new();
    let mut dim = 0;
    loop {
        let p = random_piece(rng, f, 6, 4, 3);
        if dim + p.module.dim() > max_dim {
            if parts.is_empty() {
                continue;
            }
            break;
        }
        dim += p.module.dim();
        parts.push(p.module);
        if rng.gen_bool(0.4) {
            break;
        }
    }
    let m = direct_sum_all(f, &parts).unwrap();
    let p = Matrix::random_invertible(f, m.dim(), rng);
    m.conjugate(&p).unwrap()
}

fn criterion_1() -> (bool, String) {
    let f = field();
    let words = finite_words(8);
    let failures: Vec<String> = words
        .par_iter()
        .filter_map(|w| {
            let m = materialize_string(w, &f).unwrap();
            let target = materialize_string(&w.inverse(), &f).unwrap();
            (!iso_with_witness(&dual(&m), &target, 1)).then(|| w.to_string())
        })
        .collect();
    (failures.is_empty(), format!("{} words, {} failures{}", words.len(), failures.len(), first(&failures)))
}

fn criterion_2(seed: u64) -> (bool, String) {
    let f = field();
    let unit_ok = |m: &ModuleRep<Fp>| {
        let u = double_dual_unit(m);
        m.intertwines(&dual(&dual(m)), &u) && u.rank() == m.dim()
    };
    let words = finite_words(8);
    let bad_words = words.par_iter().filter(|w| !unit_ok(&materialize_string(w, &f).unwrap())).count();
    let bad_random = (0..100u64)
        .into_par_iter()
        .filter(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i + 1).wrapping_mul(0x9e37_79b9));
            !unit_ok(&random_module(&mut rng, &f, 12))
        })
        .count();
    (
        bad_words == 0 && bad_random == 0,
        format!("{} words and 100 random modules, {} failures", words.len(), bad_words + bad_random),
    )
}

fn criterion_3() -> (bool, String) {
    let f = field();
    let mut failures = Vec::new();
    for i in 1..=6 {
        let m = materialize_string(&c_word(i), &f).unwrap();
        let expected: Vec<usize> = (0..=i).map(|j| 2 * j + 1).collect();
        if socle_series(&m) != expected {
            failures.push(format!("series of C_{i}"));
        }
        for j in 1..=i {
            let layer = m.restrict(&socle_layer(&m, j)).unwrap();
            let target = materialize_string(&c_word(j - 1), &f).unwrap();
            if !iso_with_witness(&layer, &target, j as u64) {
                failures.push(format!("soc^{j} C_{i}"));
            }
        }
    }
    (failures.is_empty(), format!("i <= 6, {} failures{}", failures.len(), first(&failures)))
}

fn criterion_4() -> (bool, String) {
    let f = field();
    let mut failures = Vec::new();
    for i in 0..=6 {
        let m = materialize_string(&c_word(i), &f).unwrap();
        if hom_dim(&m, &m).unwrap() != 2 * i + 1 {
            failures.push(format!("dim End C_{i}"));
        }
        let e = endo_algebra(&m).unwrap();
        let table = e.structure_constants();
        let n = e.dim();
        if !(0..n).all(|a| (0..n).all(|b| table[a][b] == table[b][a])) {
            failures.push(format!("End C_{i} not commutative"));
        }
        if radical_of_endo(&e).unwrap().residue_dim() != 1 {
            failures.push(format!("End C_{i} not local"));
        }
    }
    (failures.is_empty(), format!("i <= 6, {} failures{}", failures.len(), first(&failures)))
}

/// Outcome of one Krull-Schmidt trial.
#[derive(Debug, Clone)]
pub struct KsTrial {
    pub pieces: Vec<String>,
    pub recovered: bool,
    pub certification_failure: bool,
}

/// Random sum of 2-4 catalog pieces in a random basis; checks that
/// decomposition recovers the multiset of pieces up to isomorphism.
pub fn ks_trial(seed: u64) -> KsTrial {
    let f = field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(2..=4);
    let pieces: Vec<CatalogPiece> = (0..count).map(|_| random_piece(&mut rng, &f, 6, 4, 3)).collect();
    let names = pieces.iter().map(|p| p.name.clone()).collect();
    let modules: Vec<ModuleRep<Fp>> = pieces.iter().map(|p| p.module.clone()).collect();
    let sum = direct_sum_all(&f, &modules).unwrap();
    let p = Matrix::random_invertible(&f, sum.dim(), &mut rng);
    let m = sum.conjugate(&p).unwrap();

    // expected classes, grouping the input pieces by isomorphism
    let mut classes: Vec<(ModuleRep<Fp>, usize)> = Vec::new();
    'pieces: for piece in modules {
        for (rep, count) in classes.iter_mut() {
            if is_isomorphic(&piece, rep, seed, DEFAULT_MC_BUDGET).unwrap().is_iso() {
                *count += 1;
                continue 'pieces;
            }
        }
        classes.push((piece, 1));
    }

    let result = match decompose_with(&m, seed.wrapping_add(1), DEFAULT_MC_BUDGET) {
        Ok(r) => r,
        Err(crate::ksdecomp::KsError::CertificationFailure { .. }) => {
            return KsTrial { pieces: names, recovered: false, certification_failure: true }
        }
        Err(e) => panic!("decomposition failed: {e}"),
    };
    let blocks: Vec<ModuleRep<Fp>> = result
        .parts
        .iter()
        .flat_map(|part| std::iter::repeat(part.module.clone()).take(part.multiplicity))
        .collect();
    let witness_ok = m.conjugate(&result.witness).ok() == Some(direct_sum_all(&f, &blocks).unwrap());
    let mut matched = vec![false; classes.len()];
    let mut parts_ok = result.parts.len() == classes.len();
    for part in &result.parts {
        let hit = classes.iter().enumerate().find(|(k, (rep, count))| {
            !matched[*k]
                && *count == part.multiplicity
                && is_isomorphic(&part.module, rep, seed, DEFAULT_MC_BUDGET).unwrap().is_iso()
        });
        match hit {
            Some((k, _)) => matched[k] = true,
            None => parts_ok = false,
        }
    }
    KsTrial { pieces: names, recovered: witness_ok && parts_ok, certification_failure: false }
}

fn criterion_5(seed: u64) -> (bool, String) {
    let trials: Vec<KsTrial> = (0..200u64).into_par_iter().map(|i| ks_trial(seed.wrapping_mul(1000).wrapping_add(i))).collect();
    let failed: Vec<&KsTrial> = trials.iter().filter(|t| !t.recovered).collect();
    let cert = trials.iter().filter(|t| t.certification_failure).count();
    (
        failed.is_empty() && cert == 0,
        format!(
            "200 trials, {} not recovered, {} certification failures{}",
            failed.len(),
            cert,
            failed.first().map(|t| format!(", first: {:?}", t.pieces)).unwrap_or_default()
        ),
    )
}

fn criterion_6() -> (bool, String) {
    let words = words_with_tails(6);
    let failures: Vec<String> =
        words.iter().filter(|w| !classify_dual_compat(w).holds()).map(|w| w.to_string()).collect();
    (failures.is_empty(), format!("{} words, {} failures{}", words.len(), failures.len(), first(&failures)))
}

fn criterion_7() -> (bool, String) {
    let mixed: Vec<StringWord> = words_with_tails(6)
        .into_iter()
        .filter(|w| classify_word(w) == Classification::MixedReflexive)
        .collect();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for w in &mixed {
        let s = arno_split(w);
        let pieces_ok = classify_word(&s.sub).is_noetherian()
            && classify_word(&s.quot).is_artinian()
            && s.reassemble(w).map(|r| r.same_string(w)).unwrap_or(false);
        if !pieces_ok {
            failures.push(format!("split {w}"));
        }
        let cuts = admissible_indices(w, w.core().len() + 3);
        for (a, &j1) in cuts.iter().enumerate() {
            for &j2 in &cuts[a..] {
                pairs += 1;
                if !split_uniqueness_check(w, j1, j2).map(|r| r.holds()).unwrap_or(false) {
                    failures.push(format!("cuts {j1},{j2} of {w}"));
                }
            }
        }
    }
    (
        failures.is_empty() && !mixed.is_empty(),
        format!("{} mixed words, {} cut pairs, {} failures{}", mixed.len(), pairs, failures.len(), first(&failures)),
    )
}

fn criterion_8(seed: u64) -> (bool, String) {
    let f = field();
    let bands: Vec<PeriodicWord> = band_words(4).into_iter().filter(|b| b.period() == 2 || b.period() == 4).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(PeriodicWord, u64, usize)> = bands
        .iter()
        .flat_map(|b| (1..=3).map(|size| (b.clone(), size)).collect::<Vec<_>>())
        .map(|(b, size)| (b, f.random_nonzero(&mut rng), size))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(b, lambda, size)| {
            let m = materialize_band(b, &BandParam::Jordan { eigenvalue: *lambda, size: *size }, &f).unwrap();
            let dim_ok = m.dim() == b.period() * size;
            let indec = matches!(
                is_indecomposable(&m, *lambda, DEFAULT_MC_BUDGET),
                Ok(Indecomposability::Indecomposable(c)) if c.is_exact()
            );
            (!(dim_ok && indec)).then(|| format!("{b} J{size}({lambda})"))
        })
        .collect();
    let mut distinct_failures = 0;
    for k in 0..10 {
        let b = &bands[rng.gen_range(0..bands.len())];
        let lambda = f.random_nonzero(&mut rng);
        let mu = loop {
            let mu = f.random_nonzero(&mut rng);
            if mu != lambda {
                break mu;
            }
        };
        let m1 = materialize_band(b, &BandParam::Jordan { eigenvalue: lambda, size: 1 }, &f).unwrap();
        let m2 = materialize_band(b, &BandParam::Jordan { eigenvalue: mu, size: 1 }, &f).unwrap();
        if is_isomorphic(&m1, &m2, seed + k, DEFAULT_MC_BUDGET).unwrap().is_iso() {
            distinct_failures += 1;
        }
    }
    (
        failures.is_empty() && distinct_failures == 0,
        format!(
            "{} bands x 3 sizes certified, {} failures{}; 10 distinct-parameter pairs, {} judged isomorphic",
            bands.len(),
            failures.len(),
            first(&failures),
            distinct_failures
        ),
    )
}

fn criterion_9(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..1000 {
        let o = DvrCatalogObject::random(&mut rng);
        let d = dvr_dual(&o);
        let ok = dvr_dual(&d) == o
            && d.a == o.c
            && d.c == o.a
            && d.b == o.b
            && d.finite == o.finite
            && dvr_classify(&d) == dvr_classify(&o).swap();
        if !ok {
            failures += 1;
        }
    }
    (failures == 0, format!("1000 objects, {failures} failures"))
}

/// Independent validity check for a plain letter string: no relation pair
/// (same case, different letter) and no backtracking (same letter, different case).
pub fn brute_force_valid(s: &str) -> bool {
    let chars: Vec<char> = s.chars().collect();
    if !chars.iter().all(|c| "xyXY".contains(*c)) {
        return false;
    }
    chars.windows(2).all(|p| {
        let same_letter = p[0].eq_ignore_ascii_case(&p[1]);
        let same_case = p[0].is_uppercase() == p[1].is_uppercase();
        same_letter == same_case
    })
}

fn criterion_10(seed: u64) -> (bool, String) {
    let alphabet = ['x', 'y', 'X', 'Y'];
    let mut words = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..6 {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect();
        words.extend(layer.iter().cloned());
    }
    let disagreements: Vec<&String> =
        words.iter().filter(|w| parse_word(w).is_ok() != brute_force_valid(w)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: &[u8] = b"xyXY^inf1() band";
    let mut panics = 0;
    for _ in 0..100_000 {
        let len = rng.gen_range(0..24);
        let bytes: Vec<u8> = (0..len)
            .map(|_| if rng.gen_bool(0.5) { pool[rng.gen_range(0..pool.len())] } else { rng.gen() })
            .collect();
        let text = String::from_utf8_lossy(&bytes).into_owned();
        if catch_unwind(AssertUnwindSafe(|| {
            let _ = parse_word(&text);
            let _ = crate::strings::validate(&text);
        }))
        .is_err()
        {
            panics += 1;
        }
    }
    (
        disagreements.is_empty() && panics == 0,
        format!(
            "{} words vs oracle, {} disagreements{}; 100000 random inputs, {} panics",
            words.len(),
            disagreements.len(),
            disagreements.first().map(|w| format!(", first: {w:?}")).unwrap_or_default(),
            panics
        ),
    )
}

/// `", first: ..."` for a nonempty failure list.
fn first(v: &[String]) -> String {
    v.first().map(|s| format!(", first: {s}")).unwrap_or_default()
}

/// Runs criterion `number` (1-based).
pub fn run_criterion(number: usize, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let (passed, detail) = match number {
        1 => criterion_1(),
        2 => criterion_2(seed),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(seed),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(seed),
        9 => criterion_9(seed),
        10 => criterion_10(seed),
        _ => panic!("no criterion {number}"),
    };
    CriterionReport { number, title: TITLES[number - 1], passed, detail, seconds: start.elapsed().as_secs_f64() }
}

/// All criteria, evaluated concurrently and reported in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=10).into_par_iter().map(|n| run_criterion(n, seed)).collect()
}
