//! Endomorphism algebras and Krull-Schmidt decomposition.
//!
//! A module is split along Fitting decompositions of well-chosen endomorphisms.
//! Indecomposability is certified by showing that `End(M)/rad End(M)` is a
//! field; over a prime field that check is exact (a finite semisimple algebra
//! is a field iff it is commutative and its Frobenius-fixed subalgebra is the
//! prime field).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::Field;
use crate::linalg::{Echelon, Matrix};
use crate::modrep::{hom_basis, is_isomorphic, IsoResult, ModuleError, ModuleRep};
use crate::poly::{self, PolyField, SplitOutcome};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KsError {
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(
        "characteristic {p} is too small for the trace-form radical (need p > {needed}); use a larger prime or Q"
    )]
    CharacteristicTooSmall { p: u64, needed: usize },
    #[error("matrix is not an endomorphism of the module")]
    NotEndomorphism,
    #[error("could not certify a summand of dimension {dim} after {samples} samples")]
    CertificationFailure { dim: usize, samples: usize },
}

/// `End(M)` with a coordinate system.
#[derive(Debug, Clone)]
pub struct EndoAlgebra<K: Field> {
    module: ModuleRep<K>,
    basis: Vec<Matrix<K>>,
    coords: Echelon<K>,
}

fn vectorize<K: Field>(m: &Matrix<K>) -> Vec<K::Elem> {
    m.entries().to_vec()
}

impl<K: Field> EndoAlgebra<K> {
    pub fn module(&self) -> &ModuleRep<K> {
        &self.module
    }
    pub fn basis(&self) -> &[Matrix<K>] {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn field(&self) -> &K {
        self.module.field()
    }

    /// Coordinates of `a` in the basis, or `None` if `a` is not an endomorphism.
    pub fn coordinates(&self, a: &Matrix<K>) -> Option<Vec<K::Elem>> {
        if a.rows() != self.module.dim() || a.cols() != self.module.dim() {
            return None;
        }
        self.coords.dependency(&vectorize(a))
    }

    pub fn element(&self, coeffs: &[K::Elem]) -> Matrix<K> {
        let n = self.module.dim();
        let mut h = Matrix::zeros(self.field(), n, n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            h.add_scaled(c, b);
        }
        h
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix<K> {
        let f = self.field();
        let coeffs: Vec<K::Elem> = (0..self.dim()).map(|_| f.random(rng)).collect();
        self.element(&coeffs)
    }

    /// Structure constants: `table[i][j]` holds the coordinates of `b_i b_j`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<K::Elem>>> {
        self.basis
            .iter()
            .map(|bi| {
                self.basis
                    .iter()
                    .map(|bj| self.coordinates(&bi.mul(bj)).expect("End is closed under composition"))
                    .collect()
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.basis.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis[i].mul(&self.basis[j]) == self.basis[j].mul(&self.basis[i])))
    }
}

pub fn endo_algebra<K: Field>(m: &ModuleRep<K>) -> Result<EndoAlgebra<K>, KsError> {
    let hom = hom_basis(m, m)?;
    let n = m.dim();
    let mut coords = Echelon::new(m.field(), n * n);
    for b in &hom.basis {
        let fresh = coords.insert_tracked(vectorize(b));
        debug_assert!(fresh);
    }
    Ok(EndoAlgebra { module: m.clone(), basis: hom.basis, coords })
}

/// Jacobson radical of an endomorphism algebra, with lifts of a basis of the
/// semisimple quotient.
#[derive(Debug, Clone)]
pub struct Radical<K: Field> {
    pub basis: Vec<Matrix<K>>,
    /// Elements of `End(M)` whose images form a basis of `End/rad`; the
    /// identity comes first.
    pub lifts: Vec<Matrix<K>>,
    // rad basis followed by lifts, for coordinates modulo rad
    adapted: Echelon<K>,
}

impl<K: Field> Radical<K> {
    pub fn residue_dim(&self) -> usize {
        self.lifts.len()
    }

    pub fn contains(&self, a: &Matrix<K>) -> bool {
        self.residue_coordinates(a).is_some_and(|c| c.iter().all(|x| a.field().is_zero(x)))
    }

    /// Coordinates of the image of `a` in `End/rad`, in the basis of lifts.
    pub fn residue_coordinates(&self, a: &Matrix<K>) -> Option<Vec<K::Elem>> {
        let c = self.adapted.dependency(&vectorize(a))?;
        Some(c[self.basis.len()..].to_vec())
    }

    /// Matrix of left multiplication by `a` on `End/rad`.
    pub fn left_multiplication(&self, a: &Matrix<K>) -> Matrix<K> {
        let f = a.field();
        let cols: Vec<Vec<K::Elem>> = self
            .lifts
            .iter()
            .map(|c| self.residue_coordinates(&a.mul(c)).expect("product of endomorphisms"))
            .collect();
        Matrix::from_columns(f, self.lifts.len(), &cols)
    }
}

fn check_characteristic<K: Field>(e: &EndoAlgebra<K>) -> Result<(), KsError> {
    let p = e.field().characteristic();
    let needed = e.dim().max(e.module.dim());
    if p != 0 && p as u128 <= needed as u128 {
        return Err(KsError::CharacteristicTooSmall { p, needed });
    }
    Ok(())
}

/// Radical as the kernel of the trace form `(a, b) -> Tr(ab)`.
///
/// Valid in characteristic zero or when `p` exceeds both `dim End` and `dim M`.
pub fn radical_of_endo<K: Field>(e: &EndoAlgebra<K>) -> Result<Radical<K>, KsError> {
    check_characteristic(e)?;
    let f = e.field();
    let n = e.module.dim();
    let k = e.dim();
    // Tr(B_i B_j) = sum_{r,c} B_i[r,c] B_j[c,r]
    let transposed: Vec<Matrix<K>> = e.basis.iter().map(|b| b.transpose()).collect();
    let gram = Matrix::from_fn(f, k, k, |i, j| {
        let mut acc = f.zero();
        for (a, b) in e.basis[i].entries().iter().zip(transposed[j].entries()) {
            if !f.is_zero(a) && !f.is_zero(b) {
                acc = f.mul_add(a, b, &acc);
            }
        }
        acc
    });
    let basis: Vec<Matrix<K>> = gram.kernel_basis().iter().map(|c| e.element(c)).collect();
    let mut adapted = Echelon::new(f, n * n);
    for b in &basis {
        adapted.insert_tracked(vectorize(b));
    }
    let mut lifts = Vec::new();
    let id = Matrix::identity(f, n);
    for cand in std::iter::once(&id).chain(e.basis.iter()) {
        if adapted.insert_tracked(vectorize(cand)) {
            lifts.push(cand.clone());
        }
    }
    debug_assert_eq!(lifts.len(), gram.rank());
    Ok(Radical { basis, lifts, adapted })
}

/// The Fitting decomposition `M = ker φ^d ⊕ im φ^d`.
#[derive(Debug, Clone)]
pub struct FittingSplit<K: Field> {
    pub kernel: ModuleRep<K>,
    pub image: ModuleRep<K>,
    /// Columns: a basis of `ker φ^d` followed by a basis of `im φ^d`.
    /// Conjugating by it makes both actions block diagonal.
    pub witness: Matrix<K>,
}

/// Splits `m` along `phi`, or returns `None` when `phi` is nilpotent or invertible.
pub fn fitting_split<K: Field>(m: &ModuleRep<K>, phi: &Matrix<K>) -> Result<Option<FittingSplit<K>>, KsError> {
    if !m.intertwines(m, phi) {
        return Err(KsError::NotEndomorphism);
    }
    let power = phi.pow(m.dim() as u64);
    let ker = power.kernel_matrix();
    let im = power.column_space();
    if ker.cols() == 0 || im.cols() == 0 {
        return Ok(None);
    }
    let kernel = m.restrict(&ker)?;
    let image = m.restrict(&im)?;
    Ok(Some(FittingSplit { kernel, image, witness: ker.hstack(&im) }))
}

/// How a local endomorphism ring was recognised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalRoute {
    /// `End/rad` is one-dimensional.
    ResidueDimOne,
    /// `End/rad` is commutative and its Frobenius-fixed part is the prime field.
    FrobeniusFixed,
    /// Some element of `End/rad` has an irreducible minimal polynomial of full degree.
    PrimitiveElement,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    LocalEndo { endo_dim: usize, residue_dim: usize, route: LocalRoute },
    /// No split among `samples` random endomorphisms.
    MonteCarlo { samples: usize, failure_bound: f64 },
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        matches!(self, Certificate::LocalEndo { .. })
    }
}

#[derive(Debug, Clone)]
pub enum Indecomposability<K: Field> {
    Indecomposable(Certificate),
    Decomposable(FittingSplit<K>),
}

/// Splits a monic polynomial into two nonconstant coprime monic factors.
fn coprime_factors<K: PolyField, R: Rng + ?Sized>(
    f: &K,
    m: &[K::Elem],
    rng: &mut R,
) -> Option<(Vec<K::Elem>, Vec<K::Elem>)> {
    let sqf = poly::squarefree_part(f, m);
    let (a, _) = match f.split_squarefree(&sqf, rng) {
        SplitOutcome::Split(a, b) => (a, b),
        _ => return None,
    };
    let deg = poly::degree(f, m)?;
    // the part of m supported on the roots of a
    let g = poly::gcd(f, m, &poly::powmod(f, &a, deg as u64, m));
    let g = if poly::degree(f, &g) == Some(0) { return None } else { g };
    let h = poly::divrem(f, m, &g).0;
    Some((g, poly::monic(f, &h)))
}

/// Tries to split `m` using an endomorphism `phi` whose minimal polynomial
/// has coprime factors.
fn split_with<K: PolyField, R: Rng + ?Sized>(
    m: &ModuleRep<K>,
    phi: &Matrix<K>,
    rng: &mut R,
) -> Result<Option<FittingSplit<K>>, KsError> {
    let f = m.field();
    let mp = phi.min_poly().map_err(ModuleError::from)?;
    if let Some((g, _)) = coprime_factors(f, &mp, rng) {
        let psi = poly::eval_matrix(f, &g, phi);
        if let Some(s) = fitting_split(m, &psi)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

const QUICK_ROUNDS: usize = 2;

/// Decides whether `m` is indecomposable, exhibiting a split when it is not.
pub fn is_indecomposable<K: PolyField>(
    m: &ModuleRep<K>,
    seed: u64,
    budget: usize,
) -> Result<Indecomposability<K>, KsError> {
    let f = m.field().clone();
    if m.dim() == 0 {
        return Err(ModuleError::Shape { dim: 0 }.into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let end = endo_algebra(m)?;
    check_characteristic(&end)?;
    if end.dim() == 1 {
        return Ok(Indecomposability::Indecomposable(Certificate::LocalEndo {
            endo_dim: 1,
            residue_dim: 1,
            route: LocalRoute::ResidueDimOne,
        }));
    }
    // A couple of random endomorphisms split most decomposable modules
    // before the (more expensive) radical is needed.
    for _ in 0..QUICK_ROUNDS {
        let phi = end.random_element(&mut rng);
        if let Some(split) = split_with(m, &phi, &mut rng)? {
            return Ok(Indecomposability::Decomposable(split));
        }
    }
    let rad = radical_of_endo(&end)?;
    let s = rad.residue_dim();
    let local = |route| {
        Ok(Indecomposability::Indecomposable(Certificate::LocalEndo {
            endo_dim: end.dim(),
            residue_dim: s,
            route,
        }))
    };
    if s == 1 {
        return local(LocalRoute::ResidueDimOne);
    }

    // Basis elements are often idempotents of the semisimple part.
    for b in end.basis() {
        if let Some(split) = split_with(m, b, &mut rng)? {
            return Ok(Indecomposability::Decomposable(split));
        }
    }

    let commutative = (0..s).all(|i| {
        (i + 1..s).all(|j| {
            let (a, b) = (&rad.lifts[i], &rad.lifts[j]);
            rad.contains(&a.mul(b).sub(&b.mul(a)))
        })
    });
    let p = f.characteristic();
    if commutative && p != 0 {
        // Frobenius is linear on a commutative algebra of characteristic p;
        // its fixed points form a subalgebra of dimension (#field factors).
        let cols: Vec<Vec<K::Elem>> = rad
            .lifts
            .iter()
            .map(|c| {
                let d = c.pow(p).sub(c);
                rad.residue_coordinates(&d).expect("powers stay in End")
            })
            .collect();
        let frob = Matrix::from_columns(&f, s, &cols);
        let fixed = frob.kernel_basis();
        if fixed.len() == 1 {
            return local(LocalRoute::FrobeniusFixed);
        }
        for v in &fixed {
            let mut phi = Matrix::zeros(&f, m.dim(), m.dim());
            for (c, l) in v.iter().zip(&rad.lifts) {
                phi.add_scaled(c, l);
            }
            if let Some(split) = split_with(m, &phi, &mut rng)? {
                return Ok(Indecomposability::Decomposable(split));
            }
        }
    }

    let rounds = if commutative { budget } else { 4 * budget };
    for _ in 0..rounds {
        let phi = end.random_element(&mut rng);
        if let Some(split) = split_with(m, &phi, &mut rng)? {
            return Ok(Indecomposability::Decomposable(split));
        }
        if commutative {
            let mp = rad.left_multiplication(&phi).min_poly().map_err(ModuleError::from)?;
            if poly::degree(&f, &mp) == Some(s)
                && matches!(f.split_squarefree(&mp, &mut rng), SplitOutcome::Irreducible)
            {
                return local(LocalRoute::PrimitiveElement);
            }
        }
    }
    if !commutative || p != 0 {
        // Over a prime field a noncommutative residue algebra is never a
        // division ring, so failing to split it is a certification failure.
        return Err(KsError::CertificationFailure { dim: m.dim(), samples: rounds });
    }
    let bound = (s as f64 / f.sample_space()).min(1.0).powi(rounds as i32);
    Ok(Indecomposability::Indecomposable(Certificate::MonteCarlo { samples: rounds, failure_bound: bound }))
}

/// One isomorphism class of summands.
#[derive(Debug, Clone)]
pub struct Part<K: Field> {
    pub module: ModuleRep<K>,
    pub multiplicity: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone)]
pub struct DecompositionResult<K: Field> {
    pub parts: Vec<Part<K>>,
    /// Columns embed the summands (parts in order, each repeated by its
    /// multiplicity) into the original module: `W^-1 X W` is block diagonal
    /// with the parts' actions as blocks, and likewise for `Y`.
    pub witness: Matrix<K>,
}

impl<K: Field> DecompositionResult<K> {
    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(|p| p.multiplicity * p.module.dim()).sum()
    }

    pub fn summand_count(&self) -> usize {
        self.parts.iter().map(|p| p.multiplicity).sum()
    }
}

/// Derives independent child seeds (splitmix64 steps).
fn split_seed(seed: u64) -> (u64, u64) {
    fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    let a = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let b = a.wrapping_add(0x9e37_79b9_7f4a_7c15);
    (mix(a), mix(b))
}

/// An indecomposable summand with its embedding into the original module.
struct Leaf<K: Field> {
    module: ModuleRep<K>,
    embedding: Matrix<K>,
    certificate: Certificate,
}

fn split_recursive<K: PolyField>(m: ModuleRep<K>, seed: u64, budget: usize) -> Result<Vec<Leaf<K>>, KsError> {
    let f = m.field().clone();
    let (own, children) = split_seed(seed);
    match is_indecomposable(&m, own, budget)? {
        Indecomposability::Indecomposable(certificate) => {
            let embedding = Matrix::identity(&f, m.dim());
            Ok(vec![Leaf { module: m, embedding, certificate }])
        }
        Indecomposability::Decomposable(split) => {
            let (s1, s2) = split_seed(children);
            let k = split.kernel.dim();
            let (left, right) = rayon::join(
                || split_recursive(split.kernel, s1, budget),
                || split_recursive(split.image, s2, budget),
            );
            let w = &split.witness;
            let mut leaves = Vec::new();
            for mut leaf in left? {
                leaf.embedding = w.col_range(0, k).mul(&leaf.embedding);
                leaves.push(leaf);
            }
            for mut leaf in right? {
                leaf.embedding = w.col_range(k, w.cols()).mul(&leaf.embedding);
                leaves.push(leaf);
            }
            Ok(leaves)
        }
    }
}

/// Krull-Schmidt decomposition with default budget.
pub fn decompose<K: PolyField>(m: &ModuleRep<K>, seed: u64) -> Result<DecompositionResult<K>, KsError> {
    decompose_with(m, seed, crate::DEFAULT_MC_BUDGET)
}

/// Splits `m` into indecomposables and groups isomorphic summands.
pub fn decompose_with<K: PolyField>(
    m: &ModuleRep<K>,
    seed: u64,
    budget: usize,
) -> Result<DecompositionResult<K>, KsError> {
    let f = m.field().clone();
    if m.dim() == 0 {
        return Ok(DecompositionResult { parts: Vec::new(), witness: Matrix::zeros(&f, 0, 0) });
    }
    let (split_seed_value, iso_seed) = split_seed(seed);
    let leaves = split_recursive(m.clone(), split_seed_value, budget)?;
    assert!(leaves.len() <= m.dim(), "more summands than dimensions");

    // (representative, certificate, embeddings of each member rewritten in the representative's basis)
    let mut groups: Vec<(ModuleRep<K>, Certificate, Vec<Matrix<K>>)> = Vec::new();
    'leaves: for leaf in leaves {
        for (rep, _, members) in groups.iter_mut() {
            if rep.dim() != leaf.module.dim() {
                continue;
            }
            if let IsoResult::Isomorphic { witness } = is_isomorphic(&leaf.module, rep, iso_seed, budget)? {
                let inv = witness.inverse().expect("isomorphism witness is invertible");
                members.push(leaf.embedding.mul(&inv));
                continue 'leaves;
            }
        }
        groups.push((leaf.module, leaf.certificate, vec![leaf.embedding]));
    }

    let mut witness = Matrix::zeros(&f, m.dim(), 0);
    let mut parts = Vec::new();
    for (module, certificate, members) in groups {
        for e in &members {
            witness = witness.hstack(e);
        }
        parts.push(Part { module, multiplicity: members.len(), certificate });
    }
    Ok(DecompositionResult { parts, witness })
}
