//! Finite-dimensional modules over the truncations k[x,y]/(xy, x^N, y^N).
//!
//! A [`ModuleRep`] is a pair of commuting-to-zero nilpotent matrices giving the
//! actions of `x` and `y` on column vectors. String and band modules are built
//! from words; Matlis duality on finite-length modules is the transpose.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::Field;
use crate::linalg::{solve_linear, Echelon, LinalgError, Matrix};
use crate::poly;
use crate::strings::{Direction, PeriodicWord, StringWord, Symbol, WordError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuleError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("action matrices must be square of size {dim}")]
    Shape { dim: usize },
    #[error("relation violated: {0} is not zero")]
    Relation(&'static str),
    #[error("the action of {0} is not nilpotent")]
    NotNilpotent(char),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("word {0} is infinite; truncate it first")]
    InfiniteWord(String),
    #[error("invalid band parameter: {0}")]
    BandParam(String),
    #[error("subspace is not closed under the actions of x and y")]
    NotActionClosed,
    #[error("vector of length {got} does not live in a module of dimension {dim}")]
    VectorLength { got: usize, dim: usize },
}

/// A module over k[[x,y]]/(xy) of finite length.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleRep<K: Field> {
    field: K,
    dim: usize,
    x: Matrix<K>,
    y: Matrix<K>,
}

impl<K: Field> ModuleRep<K> {
    /// Checks `xy = yx = 0` and nilpotency of both actions.
    pub fn new(x: Matrix<K>, y: Matrix<K>) -> Result<Self, ModuleError> {
        x.check_same_field(&y)?;
        let dim = x.rows();
        if !x.is_square() || y.rows() != dim || y.cols() != dim {
            return Err(ModuleError::Shape { dim });
        }
        if !x.mul(&y).is_zero() {
            return Err(ModuleError::Relation("xy"));
        }
        if !y.mul(&x).is_zero() {
            return Err(ModuleError::Relation("yx"));
        }
        if !x.is_nilpotent() {
            return Err(ModuleError::NotNilpotent('x'));
        }
        if !y.is_nilpotent() {
            return Err(ModuleError::NotNilpotent('y'));
        }
        Ok(ModuleRep { field: x.field().clone(), dim, x, y })
    }

    pub fn zero(field: &K) -> Self {
        ModuleRep { field: field.clone(), dim: 0, x: Matrix::zeros(field, 0, 0), y: Matrix::zeros(field, 0, 0) }
    }

    /// The simple module k.
    pub fn simple(field: &K) -> Self {
        ModuleRep { field: field.clone(), dim: 1, x: Matrix::zeros(field, 1, 1), y: Matrix::zeros(field, 1, 1) }
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn x(&self) -> &Matrix<K> {
        &self.x
    }
    pub fn y(&self) -> &Matrix<K> {
        &self.y
    }

    pub fn act(&self, s: Symbol) -> &Matrix<K> {
        match s {
            Symbol::X => &self.x,
            Symbol::Y => &self.y,
        }
    }

    pub fn check_same_field(&self, other: &Self) -> Result<(), ModuleError> {
        if self.field != other.field {
            return Err(ModuleError::FieldMismatch(
                self.field.spec().to_string(),
                other.field.spec().to_string(),
            ));
        }
        Ok(())
    }

    /// The module in the basis given by the columns of `p`: actions `p^-1 A p`.
    pub fn conjugate(&self, p: &Matrix<K>) -> Result<Self, ModuleError> {
        let inv = p
            .inverse()
            .ok_or_else(|| LinalgError::DimensionMismatch("basis change is not invertible".into()))?;
        ModuleRep::new(inv.mul(&self.x).mul(p), inv.mul(&self.y).mul(p))
    }

    /// Whether `h` (of shape `other.dim x self.dim`) is a module map `self -> other`.
    pub fn intertwines(&self, other: &Self, h: &Matrix<K>) -> bool {
        h.rows() == other.dim
            && h.cols() == self.dim
            && h.mul(&self.x) == other.x.mul(h)
            && h.mul(&self.y) == other.y.mul(h)
    }

    /// Restriction to an action-invariant subspace spanned by the columns of `basis`
    /// (assumed independent).
    pub fn restrict(&self, basis: &Matrix<K>) -> Result<Self, ModuleError> {
        if basis.cols() == 0 {
            return Ok(Self::zero(&self.field));
        }
        let xs = solve_linear(basis, &self.x.mul(basis))?.ok_or(ModuleError::NotActionClosed)?;
        let ys = solve_linear(basis, &self.y.mul(basis))?.ok_or(ModuleError::NotActionClosed)?;
        ModuleRep::new(xs, ys)
    }
}

/// Builds the string module of a finite word: one basis vector per vertex.
pub fn materialize_string<K: Field>(w: &StringWord, field: &K) -> Result<ModuleRep<K>, ModuleError> {
    let dim = w.vertices().ok_or_else(|| ModuleError::InfiniteWord(w.to_string()))?;
    let mut x = Matrix::zeros(field, dim, dim);
    let mut y = Matrix::zeros(field, dim, dim);
    for (j, letter) in w.core().iter().enumerate() {
        let m = match letter.symbol {
            Symbol::X => &mut x,
            Symbol::Y => &mut y,
        };
        match letter.direction {
            Direction::Direct => m.set(j + 1, j, field.one()),
            Direction::Inverse => m.set(j, j + 1, field.one()),
        }
    }
    ModuleRep::new(x, y)
}

/// Parameter `V` of a band module: an indecomposable k[t, t^-1]-module of finite length.
#[derive(Debug, Clone, PartialEq)]
pub enum BandParam<K: Field> {
    /// `t` acts as a Jordan block with the given nonzero eigenvalue.
    Jordan { eigenvalue: K::Elem, size: usize },
    /// `V = k[t]/(f^power)` for monic `f` with `f(0) != 0` (coefficients low-to-high).
    Companion { poly: Vec<K::Elem>, power: usize },
}

impl<K: Field> BandParam<K> {
    /// Matrix of `t` on `V`.
    pub fn twist(&self, field: &K) -> Result<Matrix<K>, ModuleError> {
        match self {
            BandParam::Jordan { eigenvalue, size } => {
                if field.is_zero(eigenvalue) {
                    return Err(ModuleError::BandParam("eigenvalue must be nonzero".into()));
                }
                if *size == 0 {
                    return Err(ModuleError::BandParam("Jordan block size must be positive".into()));
                }
                Ok(Matrix::from_fn(field, *size, *size, |r, c| {
                    if r == c {
                        eigenvalue.clone()
                    } else if c == r + 1 {
                        field.one()
                    } else {
                        field.zero()
                    }
                }))
            }
            BandParam::Companion { poly: f, power } => {
                let f = poly::trim(field, f.clone());
                let Some(deg) = poly::degree(field, &f) else {
                    return Err(ModuleError::BandParam("zero polynomial".into()));
                };
                if deg == 0 || !field.is_one(&f[deg]) {
                    return Err(ModuleError::BandParam("polynomial must be monic and nonconstant".into()));
                }
                if field.is_zero(&f[0]) {
                    return Err(ModuleError::BandParam("f(0) must be nonzero".into()));
                }
                if *power == 0 {
                    return Err(ModuleError::BandParam("power must be positive".into()));
                }
                let mut g = vec![field.one()];
                for _ in 0..*power {
                    g = poly::mul(field, &g, &f);
                }
                Ok(companion(field, &g))
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            BandParam::Jordan { size, .. } => *size,
            BandParam::Companion { poly: f, power } => (f.len().saturating_sub(1)) * power,
        }
    }
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal).
pub fn companion<K: Field>(field: &K, g: &[K::Elem]) -> Matrix<K> {
    let n = g.len() - 1;
    Matrix::from_fn(field, n, n, |r, c| {
        if c == n - 1 {
            field.neg(&g[r])
        } else if r == c + 1 {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Band module `M(C, V)`.
pub fn materialize_band<K: Field>(pw: &PeriodicWord, v: &BandParam<K>, field: &K) -> Result<ModuleRep<K>, ModuleError> {
    materialize_band_twist(pw, &v.twist(field)?)
}

/// Band module with `t` acting on `V` by the invertible matrix `twist`.
///
/// The wrap-around letter joins vertex `n-1` to vertex `0` of the next period,
/// so it carries `twist` when direct and `twist^-1` when inverse.
pub fn materialize_band_twist<K: Field>(pw: &PeriodicWord, twist: &Matrix<K>) -> Result<ModuleRep<K>, ModuleError> {
    let field = twist.field().clone();
    let m = twist.rows();
    let t_inv = twist
        .inverse()
        .ok_or_else(|| ModuleError::BandParam("t must act invertibly".into()))?;
    let n = pw.period();
    let dim = n * m;
    let id = Matrix::identity(&field, m);
    let mut x = Matrix::zeros(&field, dim, dim);
    let mut y = Matrix::zeros(&field, dim, dim);
    for (j, letter) in pw.cycle().iter().enumerate() {
        let wrap = j == n - 1;
        let (row, col, block) = match (letter.direction, wrap) {
            (Direction::Direct, false) => (j + 1, j, &id),
            (Direction::Inverse, false) => (j, j + 1, &id),
            (Direction::Direct, true) => (0, n - 1, twist),
            (Direction::Inverse, true) => (n - 1, 0, &t_inv),
        };
        let target = match letter.symbol {
            Symbol::X => &mut x,
            Symbol::Y => &mut y,
        };
        for a in 0..m {
            for b in 0..m {
                target.set(row * m + a, col * m + b, block.get(a, b).clone());
            }
        }
    }
    ModuleRep::new(x, y)
}

pub fn direct_sum<K: Field>(a: &ModuleRep<K>, b: &ModuleRep<K>) -> Result<ModuleRep<K>, ModuleError> {
    a.check_same_field(b)?;
    ModuleRep::new(a.x.block_diag(&b.x), a.y.block_diag(&b.y))
}

/// Direct sum of a list of modules (the zero module for an empty list).
pub fn direct_sum_all<K: Field>(field: &K, parts: &[ModuleRep<K>]) -> Result<ModuleRep<K>, ModuleError> {
    parts.iter().try_fold(ModuleRep::zero(field), |acc, p| direct_sum(&acc, p))
}

/// Matlis dual of a finite-length module: the k-dual with transposed actions,
/// written in the dual basis.
pub fn dual<K: Field>(m: &ModuleRep<K>) -> ModuleRep<K> {
    ModuleRep::new(m.x.transpose(), m.y.transpose()).expect("transpose preserves the relations")
}

/// Matrix of the evaluation map `M -> M^vv`, `v |-> (f |-> f(v))`, in the
/// standard basis of `M` and the double-dual basis of `M^vv`.
pub fn double_dual_unit<K: Field>(m: &ModuleRep<K>) -> Matrix<K> {
    let f = &m.field;
    // column i: the functional f_j |-> f_j(e_i) on the dual basis f_j of M^v,
    // expanded in the basis of M^vv dual to (f_j)
    let e = Matrix::identity(f, m.dim);
    let pairing = |j: usize, i: usize| e.get(j, i).clone();
    Matrix::from_fn(f, m.dim, m.dim, |j, i| pairing(j, i))
}

/// A basis of `Hom(source, target)`.
#[derive(Debug, Clone)]
pub struct HomSpace<K: Field> {
    pub source: ModuleRep<K>,
    pub target: ModuleRep<K>,
    pub basis: Vec<Matrix<K>>,
}

impl<K: Field> HomSpace<K> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[K::Elem]) -> Matrix<K> {
        let f = self.source.field();
        let mut h = Matrix::zeros(f, self.target.dim(), self.source.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            h.add_scaled(c, b);
        }
        h
    }
}

/// A monomial `sym^power * g` applied to a chosen top generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Monomial {
    gen: usize,
    sym: Option<Symbol>,
    power: usize,
}

/// Generators, a monomial basis and the defining relations of a module.
///
/// Every element of a module over k[x,y]/(xy) is a combination of monomials
/// `x^a g` and `y^b g` in top generators `g`. Following each chain until it
/// first becomes dependent yields a basis, and the single relation recorded
/// at the end of every chain presents the module.
struct Presentation<K: Field> {
    gens: usize,
    basis: Vec<Monomial>,
    relations: Vec<(Monomial, Vec<K::Elem>)>,
    /// Inverse of the matrix whose columns are the basis monomials.
    basis_inv: Matrix<K>,
    max_power: usize,
}

impl<K: Field> Presentation<K> {
    fn of(m: &ModuleRep<K>) -> Self {
        let f = &m.field;
        let d = m.dim;
        let rad = m.x.hstack(&m.y);
        let mut span = Echelon::new(f, d);
        for c in rad.column_space().columns() {
            span.insert(&c);
        }
        let mut gen_vectors = Vec::new();
        for k in 0..d {
            let mut e = vec![f.zero(); d];
            e[k] = f.one();
            if span.insert(&e) {
                gen_vectors.push(e);
            }
        }

        let mut selected = Echelon::new(f, d);
        let mut basis = Vec::new();
        let mut vectors: Vec<Vec<K::Elem>> = Vec::new();
        let mut pending: Vec<(Monomial, Vec<K::Elem>)> = Vec::new();
        let mut max_power = 0;
        for (g, v) in gen_vectors.iter().enumerate() {
            let fresh = selected.insert(v);
            debug_assert!(fresh, "top generators are independent");
            basis.push(Monomial { gen: g, sym: None, power: 0 });
            vectors.push(v.clone());
        }
        for (g, v) in gen_vectors.iter().enumerate() {
            for sym in [Symbol::X, Symbol::Y] {
                let a = m.act(sym);
                let mut cur = a.mul_vec(v);
                let mut power = 1;
                loop {
                    max_power = max_power.max(power);
                    let mono = Monomial { gen: g, sym: Some(sym), power };
                    if selected.insert(&cur) {
                        basis.push(mono);
                        vectors.push(cur.clone());
                        cur = a.mul_vec(&cur);
                        power += 1;
                    } else {
                        pending.push((mono, cur));
                        break;
                    }
                }
            }
        }
        assert_eq!(basis.len(), d, "monomials must span the module");
        let basis_inv = Matrix::from_columns(f, d, &vectors)
            .inverse()
            .expect("monomial basis is independent");
        let relations = pending
            .into_iter()
            .map(|(mono, v)| (mono, basis_inv.mul_vec(&v)))
            .collect();
        Presentation { gens: gen_vectors.len(), basis, relations, basis_inv, max_power }
    }
}

/// Powers `A^0 .. A^max` of a target action.
fn powers<K: Field>(a: &Matrix<K>, max: usize) -> Vec<Matrix<K>> {
    let mut out = vec![Matrix::identity(a.field(), a.rows())];
    for k in 1..=max {
        let next = out[k - 1].mul(a);
        out.push(next);
    }
    out
}

/// Basis of `Hom_A(src, tgt)`.
///
/// A homomorphism is determined by the images `u_g` of the top generators of
/// `src`; the images must satisfy the presentation relations in `tgt`.
pub fn hom_basis<K: Field>(src: &ModuleRep<K>, tgt: &ModuleRep<K>) -> Result<HomSpace<K>, ModuleError> {
    src.check_same_field(tgt)?;
    let f = &src.field;
    let (d, n) = (src.dim, tgt.dim);
    let empty = HomSpace { source: src.clone(), target: tgt.clone(), basis: Vec::new() };
    if d == 0 || n == 0 {
        return Ok(empty);
    }
    let pres = Presentation::of(src);
    let r = pres.gens;
    let xp = powers(&tgt.x, pres.max_power);
    let yp = powers(&tgt.y, pres.max_power);
    let action = |mono: &Monomial| -> &Matrix<K> {
        match mono.sym {
            None => &xp[0],
            Some(Symbol::X) => &xp[mono.power],
            Some(Symbol::Y) => &yp[mono.power],
        }
    };

    let mut system = Matrix::zeros(f, pres.relations.len() * n, r * n);
    for (ri, (mono, coords)) in pres.relations.iter().enumerate() {
        let row0 = ri * n;
        // + A^q u_g
        add_block(&mut system, row0, mono.gen * n, action(mono), &f.one());
        // - sum c_b A_b u_{g_b}
        for (b, c) in pres.basis.iter().zip(coords) {
            if f.is_zero(c) {
                continue;
            }
            add_block(&mut system, row0, b.gen * n, action(b), &f.neg(c));
        }
    }

    let mut basis = Vec::new();
    for u in system.kernel_basis() {
        let cols: Vec<Vec<K::Elem>> = pres
            .basis
            .iter()
            .map(|b| action(b).mul_vec(&u[b.gen * n..(b.gen + 1) * n]))
            .collect();
        let h = Matrix::from_columns(f, n, &cols).mul(&pres.basis_inv);
        debug_assert!(src.intertwines(tgt, &h));
        basis.push(h);
    }
    Ok(HomSpace { basis, ..empty })
}

fn add_block<K: Field>(m: &mut Matrix<K>, r0: usize, c0: usize, block: &Matrix<K>, scale: &K::Elem) {
    let f = m.field().clone();
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if f.is_zero(v) {
                continue;
            }
            let cur = m.get(r0 + i, c0 + j).clone();
            m.set(r0 + i, c0 + j, f.mul_add(scale, v, &cur));
        }
    }
}

pub fn hom_dim<K: Field>(src: &ModuleRep<K>, tgt: &ModuleRep<K>) -> Result<usize, ModuleError> {
    Ok(hom_basis(src, tgt)?.dim())
}

/// Basis (as columns) of `soc M = ker x ∩ ker y`.
pub fn socle<K: Field>(m: &ModuleRep<K>) -> Matrix<K> {
    m.x.vstack(&m.y).kernel_matrix()
}

/// Basis (as columns) of `rad M = xM + yM`.
pub fn radical<K: Field>(m: &ModuleRep<K>) -> Matrix<K> {
    m.x.hstack(&m.y).column_space()
}

/// Dimension of the top `M / rad M`.
pub fn top_dim<K: Field>(m: &ModuleRep<K>) -> usize {
    m.dim - m.x.hstack(&m.y).rank()
}

/// Rows spanning the annihilator of the column span of `u`.
fn annihilator<K: Field>(u: &Matrix<K>, dim: usize) -> Matrix<K> {
    let f = u.field();
    if u.cols() == 0 {
        return Matrix::identity(f, dim);
    }
    let rows = u.transpose().kernel_basis();
    Matrix::from_fn(f, rows.len(), dim, |r, c| rows[r][c].clone())
}

/// Basis of `soc^i M` for `i >= 0` (`soc^0 = 0`).
pub fn socle_layer<K: Field>(m: &ModuleRep<K>, i: usize) -> Matrix<K> {
    let mut cur = Matrix::zeros(&m.field, m.dim, 0);
    for _ in 0..i {
        let q = annihilator(&cur, m.dim);
        cur = q.mul(&m.x).vstack(&q.mul(&m.y)).kernel_matrix();
    }
    cur
}

/// Dimensions of `soc^1 ⊆ soc^2 ⊆ ...`, ending at the first layer equal to `M`.
pub fn socle_series<K: Field>(m: &ModuleRep<K>) -> Vec<usize> {
    let mut dims = Vec::new();
    let mut cur = Matrix::zeros(&m.field, m.dim, 0);
    while cur.cols() < m.dim {
        let q = annihilator(&cur, m.dim);
        cur = q.mul(&m.x).vstack(&q.mul(&m.y)).kernel_matrix();
        dims.push(cur.cols());
    }
    dims
}

/// Dimensions of `rad^1 ⊇ rad^2 ⊇ ...`, ending at zero.
pub fn radical_series<K: Field>(m: &ModuleRep<K>) -> Vec<usize> {
    let mut dims = Vec::new();
    let mut cur = Matrix::identity(&m.field, m.dim);
    while cur.cols() > 0 {
        cur = m.x.mul(&cur).hstack(&m.y.mul(&cur)).column_space();
        dims.push(cur.cols());
    }
    dims
}

/// Submodule generated by `vectors`, with its inclusion matrix.
pub fn submodule_generated<K: Field>(
    m: &ModuleRep<K>,
    vectors: &[Vec<K::Elem>],
) -> Result<(ModuleRep<K>, Matrix<K>), ModuleError> {
    let mut span = Echelon::new(&m.field, m.dim);
    let mut basis: Vec<Vec<K::Elem>> = Vec::new();
    let mut queue: Vec<Vec<K::Elem>> = Vec::new();
    for v in vectors {
        if v.len() != m.dim {
            return Err(ModuleError::VectorLength { got: v.len(), dim: m.dim });
        }
        queue.push(v.clone());
    }
    while let Some(v) = queue.pop() {
        if span.insert(&v) {
            queue.push(m.x.mul_vec(&v));
            queue.push(m.y.mul_vec(&v));
            basis.push(v);
        }
    }
    let inclusion = Matrix::from_columns(&m.field, m.dim, &basis);
    let sub = m.restrict(&inclusion)?;
    Ok((sub, inclusion))
}

/// Quotient by the submodule whose basis is the columns of `inclusion`.
pub fn quotient<K: Field>(m: &ModuleRep<K>, inclusion: &Matrix<K>) -> Result<ModuleRep<K>, ModuleError> {
    let f = &m.field;
    let k = inclusion.cols();
    if inclusion.rows() != m.dim {
        return Err(ModuleError::VectorLength { got: inclusion.rows(), dim: m.dim });
    }
    if k > 0 {
        // closure check
        m.restrict(inclusion)?;
    }
    let mut span = Echelon::new(f, m.dim);
    let mut cols = inclusion.columns();
    for c in &cols {
        if !span.insert(c) {
            return Err(LinalgError::DimensionMismatch("inclusion columns are dependent".into()).into());
        }
    }
    for i in 0..m.dim {
        let mut e = vec![f.zero(); m.dim];
        e[i] = f.one();
        if span.insert(&e) {
            cols.push(e);
        }
    }
    let p = Matrix::from_columns(f, m.dim, &cols);
    let inv = p.inverse().expect("completed basis");
    let xq = inv.mul(&m.x).mul(&p).block(k, m.dim, k, m.dim);
    let yq = inv.mul(&m.y).mul(&p).block(k, m.dim, k, m.dim);
    ModuleRep::new(xq, yq)
}

/// Why two modules were judged non-isomorphic.
#[derive(Debug, Clone, PartialEq)]
pub enum NonIsoEvidence {
    /// Certain: dimensions, hom dimensions, or an empty or one-dimensional hom
    /// space rule out an invertible map.
    Exact(String),
    /// No invertible map among `samples` random elements of the hom space.
    /// A nonzero determinant polynomial of degree `dim` vanishes at a random
    /// point with probability at most `dim / |sample space|`.
    MonteCarlo { samples: usize, failure_bound: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum IsoResult<K: Field> {
    /// `witness` is an invertible module map from the first module to the second.
    Isomorphic { witness: Matrix<K> },
    NotIsomorphic(NonIsoEvidence),
}

impl<K: Field> IsoResult<K> {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Isomorphic { .. })
    }
}

/// Isomorphism test with a witness for positive answers.
pub fn is_isomorphic<K: Field>(
    a: &ModuleRep<K>,
    b: &ModuleRep<K>,
    seed: u64,
    budget: usize,
) -> Result<IsoResult<K>, ModuleError> {
    a.check_same_field(b)?;
    let f = &a.field;
    if a.dim != b.dim {
        return Ok(IsoResult::NotIsomorphic(NonIsoEvidence::Exact(format!(
            "dimensions differ ({} vs {})",
            a.dim, b.dim
        ))));
    }
    if a.dim == 0 {
        return Ok(IsoResult::Isomorphic { witness: Matrix::zeros(f, 0, 0) });
    }
    if a == b {
        return Ok(IsoResult::Isomorphic { witness: Matrix::identity(f, a.dim) });
    }
    let hab = hom_basis(a, b)?;
    let dba = hom_dim(b, a)?;
    if hab.dim() != dba {
        return Ok(IsoResult::NotIsomorphic(NonIsoEvidence::Exact(format!(
            "hom dimensions differ ({} vs {})",
            hab.dim(),
            dba
        ))));
    }
    match hab.dim() {
        0 => {
            return Ok(IsoResult::NotIsomorphic(NonIsoEvidence::Exact("no nonzero homomorphism".into())));
        }
        1 => {
            let h = hab.basis[0].clone();
            return Ok(if h.rank() == a.dim {
                IsoResult::Isomorphic { witness: h }
            } else {
                IsoResult::NotIsomorphic(NonIsoEvidence::Exact("hom space is spanned by a singular map".into()))
            });
        }
        _ => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let coeffs: Vec<K::Elem> = (0..hab.dim()).map(|_| f.random(&mut rng)).collect();
        let h = hab.combine(&coeffs);
        if h.rank() == a.dim {
            return Ok(IsoResult::Isomorphic { witness: h });
        }
    }
    let bound = (a.dim as f64 / f.sample_space()).min(1.0).powi(budget as i32);
    Ok(IsoResult::NotIsomorphic(NonIsoEvidence::MonteCarlo { samples: budget, failure_bound: bound }))
}
