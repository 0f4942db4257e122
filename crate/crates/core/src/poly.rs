//! Univariate polynomials over a field, coefficients stored low-to-high.
//!
//! Only what the decomposition engine needs: Euclidean arithmetic, evaluation at
//! a matrix, and enough factorisation to split a squarefree polynomial into two
//! coprime factors (complete over GF(p), linear factors only over Q).

use rand::Rng;

use crate::field::{rational_roots, Field, Fp, Rationals};
use crate::linalg::Matrix;

pub type Poly<K> = Vec<<K as Field>::Elem>;

pub fn trim<K: Field>(f: &K, mut a: Poly<K>) -> Poly<K> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<K: Field>(f: &K, a: &[K::Elem]) -> Option<usize> {
    a.iter().rposition(|c| !f.is_zero(c))
}

pub fn add<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub fn sub<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n)
        .map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(f, out)
}

pub fn mul<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(x, y, &out[i + j]);
        }
    }
    trim(f, out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> (Poly<K>, Poly<K>) {
    let b = trim(f, b.to_vec());
    let db = degree(f, &b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).unwrap();
    let mut r = trim(f, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let t = f.mul(&c, bc);
            r[shift + i] = f.sub(&r[shift + i], &t);
        }
        q[shift] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn rem<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    divrem(f, a, b).1
}

pub fn monic<K: Field>(f: &K, a: &[K::Elem]) -> Poly<K> {
    let a = trim(f, a.to_vec());
    match a.last() {
        None => a,
        Some(l) => {
            let inv = f.inv(l).unwrap();
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem]) -> Poly<K> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn derivative<K: Field>(f: &K, a: &[K::Elem]) -> Poly<K> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
        .collect();
    trim(f, out)
}

/// Product of the distinct monic irreducible factors of `a`.
///
/// Uses `a / gcd(a, a')`, which is exact in characteristic zero and whenever
/// `deg a` is below the characteristic.
pub fn squarefree_part<K: Field>(f: &K, a: &[K::Elem]) -> Poly<K> {
    let a = monic(f, a);
    if degree(f, &a).unwrap_or(0) == 0 {
        return a;
    }
    let g = gcd(f, &a, &derivative(f, &a));
    monic(f, &divrem(f, &a, &g).0)
}

pub fn mulmod<K: Field>(f: &K, a: &[K::Elem], b: &[K::Elem], m: &[K::Elem]) -> Poly<K> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<K: Field>(f: &K, a: &[K::Elem], mut e: u64, m: &[K::Elem]) -> Poly<K> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[f.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

/// `p(A)` by Horner's rule.
pub fn eval_matrix<K: Field>(f: &K, p: &[K::Elem], a: &Matrix<K>) -> Matrix<K> {
    let n = a.rows();
    let mut acc = Matrix::zeros(f, n, n);
    let id = Matrix::identity(f, n);
    for c in p.iter().rev() {
        acc = acc.mul(a);
        acc.add_scaled(c, &id);
    }
    acc
}

pub fn eval<K: Field>(f: &K, p: &[K::Elem], x: &K::Elem) -> K::Elem {
    p.iter().rev().fold(f.zero(), |acc, c| f.mul_add(&acc, x, c))
}

/// Result of trying to split a monic squarefree polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum SplitOutcome<K: Field> {
    Irreducible,
    /// Two nonconstant coprime monic factors whose product is the input.
    Split(Poly<K>, Poly<K>),
    /// The field implementation cannot decide.
    Unknown,
}

/// Fields over which squarefree polynomials can be (at least partially) split.
pub trait PolyField: Field {
    fn split_squarefree<R: Rng + ?Sized>(&self, g: &[Self::Elem], rng: &mut R) -> SplitOutcome<Self>
    where
        Self: Sized;
}

impl PolyField for Fp {
    fn split_squarefree<R: Rng + ?Sized>(&self, g: &[u64], rng: &mut R) -> SplitOutcome<Self> {
        let g = monic(self, g);
        let Some(n) = degree(self, &g) else {
            return SplitOutcome::Unknown;
        };
        if n <= 1 {
            return SplitOutcome::Irreducible;
        }
        let ddf = distinct_degree(self, &g);
        if ddf.len() > 1 {
            let (_, first) = &ddf[0];
            let rest = divrem(self, &g, first).0;
            return SplitOutcome::Split(first.clone(), monic(self, &rest));
        }
        let (d, h) = &ddf[0];
        if *d == n {
            return SplitOutcome::Irreducible;
        }
        // all irreducible factors have degree d < n
        match equal_degree_split(self, h, *d, rng) {
            Some(a) => {
                let b = divrem(self, &g, &a).0;
                SplitOutcome::Split(a, monic(self, &b))
            }
            None => SplitOutcome::Unknown,
        }
    }
}

/// Distinct-degree factorisation of a monic squarefree polynomial:
/// pairs `(d, product of all irreducible factors of degree d)`.
pub fn distinct_degree(f: &Fp, g: &[u64]) -> Vec<(usize, Poly<Fp>)> {
    let p = f.p();
    let mut out = Vec::new();
    let mut rest = monic(f, g);
    let x = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while degree(f, &rest).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(f, &h, p, &rest);
        let part = gcd(f, &rest, &sub(f, &h, &x));
        if degree(f, &part).unwrap_or(0) > 0 {
            out.push((d, part.clone()));
            rest = monic(f, &divrem(f, &rest, &part).0);
            h = rem(f, &h, &rest);
        }
    }
    if let Some(dr) = degree(f, &rest) {
        if dr > 0 {
            out.push((dr, rest));
        }
    }
    out
}

/// Cantor-Zassenhaus: a proper monic factor of `h`, whose irreducible factors all
/// have degree `d`. Odd characteristic only.
fn equal_degree_split<R: Rng + ?Sized>(f: &Fp, h: &[u64], d: usize, rng: &mut R) -> Option<Poly<Fp>> {
    let p = f.p();
    if p == 2 {
        return None;
    }
    let n = degree(f, h)?;
    for _ in 0..64 {
        let a: Poly<Fp> = trim(f, (0..n).map(|_| f.random(rng)).collect());
        if degree(f, &a).unwrap_or(0) == 0 {
            continue;
        }
        let g = gcd(f, &a, h);
        if degree(f, &g).unwrap_or(0) > 0 {
            return Some(g);
        }
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        let mut frob = a.clone();
        let mut norm = a.clone();
        for _ in 1..d {
            frob = powmod(f, &frob, p, h);
            norm = mulmod(f, &norm, &frob, h);
        }
        let b = powmod(f, &norm, (p - 1) / 2, h);
        let g = gcd(f, &sub(f, &b, &[1]), h);
        let dg = degree(f, &g).unwrap_or(0);
        if dg > 0 && dg < n {
            return Some(g);
        }
    }
    None
}

impl PolyField for Rationals {
    fn split_squarefree<R: Rng + ?Sized>(
        &self,
        g: &[num_rational::BigRational],
        _rng: &mut R,
    ) -> SplitOutcome<Self> {
        let g = monic(self, g);
        let Some(n) = degree(self, &g) else {
            return SplitOutcome::Unknown;
        };
        if n <= 1 {
            return SplitOutcome::Irreducible;
        }
        let roots = rational_roots(&g);
        if let Some(r) = roots.first() {
            let lin = vec![self.neg(r), self.one()];
            let rest = divrem(self, &g, &lin).0;
            return SplitOutcome::Split(lin, monic(self, &rest));
        }
        // no linear factor: irreducible in degree 2 and 3
        if n <= 3 {
            SplitOutcome::Irreducible
        } else {
            SplitOutcome::Unknown
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn euclid() {
        let f = Fp::new(7).unwrap();
        // (t+1)(t+2) and (t+1)(t+3)
        let a = mul(&f, &[1, 1], &[2, 1]);
        let b = mul(&f, &[1, 1], &[3, 1]);
        assert_eq!(gcd(&f, &a, &b), vec![1, 1]);
        let (q, r) = divrem(&f, &a, &[1, 1]);
        assert_eq!(q, vec![2, 1]);
        assert!(r.is_empty());
    }

    #[test]
    fn squarefree() {
        let f = Fp::new(32003).unwrap();
        let a = mul(&f, &mul(&f, &[1, 1], &[1, 1]), &[5, 1]);
        assert_eq!(squarefree_part(&f, &a), mul(&f, &[1, 1], &[5, 1]));
    }

    #[test]
    fn split_over_fp() {
        let f = Fp::new(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // t^2 + 1 is irreducible mod 32003 since 32003 = 3 mod 4
        assert_eq!(f.split_squarefree(&[1, 0, 1], &mut rng), SplitOutcome::Irreducible);
        // (t^2+1)(t^2+1+t)... product of two quadratics with the same degree
        let q1 = vec![1, 0, 1];
        let q2 = vec![3, 0, 1];
        let prod = mul(&f, &q1, &q2);
        match f.split_squarefree(&prod, &mut rng) {
            SplitOutcome::Split(a, b) => {
                assert_eq!(mul(&f, &a, &b), prod);
                assert_eq!(degree(&f, &a), Some(2));
            }
            other => panic!("expected split, got {other:?}"),
        }
        let mixed = mul(&f, &q1, &[4, 1]);
        assert!(matches!(f.split_squarefree(&mixed, &mut rng), SplitOutcome::Split(..)));
    }

    #[test]
    fn matrix_evaluation() {
        let f = Fp::new(5).unwrap();
        let c = Matrix::from_i64_rows(&f, &[vec![0, 4], vec![1, 0]]);
        // c^2 = -1: t^2 + 1 annihilates
        assert!(eval_matrix(&f, &[1, 0, 1], &c).is_zero());
    }
}
