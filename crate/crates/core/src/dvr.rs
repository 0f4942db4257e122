//! Reflexive modules over a complete discrete valuation ring `A` with fraction
//! field `Q` and injective hull `E` of the residue field.
//!
//! Every such module is `A^a ⊕ Q^b ⊕ E^c ⊕ A/m^{d_1} ⊕ ... ⊕ A/m^{d_r}`, written
//! `A^a + Q^b + E^c + [d_1,...,d_r]`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::Classification;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DvrCatalogObject {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    /// Lengths of the cyclic torsion summands, kept sorted.
    pub finite: Vec<u64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DvrError {
    #[error("cannot parse catalog term {0:?}")]
    BadTerm(String),
    #[error("summand {0} appears twice")]
    Repeated(char),
    #[error("torsion summands A/m^d need d >= 1")]
    ZeroLength,
}

impl DvrCatalogObject {
    pub fn new(a: u64, b: u64, c: u64, mut finite: Vec<u64>) -> Result<Self, DvrError> {
        if finite.contains(&0) {
            return Err(DvrError::ZeroLength);
        }
        finite.sort_unstable();
        Ok(DvrCatalogObject { a, b, c, finite })
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let count = rng.gen_range(0..5);
        let finite = (0..count).map(|_| rng.gen_range(1..10)).collect();
        DvrCatalogObject::new(rng.gen_range(0..4), rng.gen_range(0..4), rng.gen_range(0..4), finite).unwrap()
    }
}

/// `A^∨ = E`, `E^∨ = A`, `Q^∨ = Q`, and finite-length summands are self-dual.
pub fn dvr_dual(o: &DvrCatalogObject) -> DvrCatalogObject {
    DvrCatalogObject { a: o.c, b: o.b, c: o.a, finite: o.finite.clone() }
}

pub fn dvr_classify(o: &DvrCatalogObject) -> Classification {
    match (o.a, o.b, o.c) {
        (0, 0, 0) => Classification::FiniteLength,
        (_, 0, 0) => Classification::Noetherian,
        (0, 0, _) => Classification::Artinian,
        _ => Classification::MixedReflexive,
    }
}

pub fn dvr_add(o1: &DvrCatalogObject, o2: &DvrCatalogObject) -> DvrCatalogObject {
    let mut finite = o1.finite.clone();
    finite.extend_from_slice(&o2.finite);
    finite.sort_unstable();
    DvrCatalogObject { a: o1.a + o2.a, b: o1.b + o2.b, c: o1.c + o2.c, finite }
}

impl fmt::Display for DvrCatalogObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.finite.iter().map(|d| d.to_string()).collect();
        write!(f, "A^{} + Q^{} + E^{} + [{}]", self.a, self.b, self.c, ds.join(","))
    }
}

/// Accepts the display form; terms may appear in any order and missing terms
/// count as zero.
impl FromStr for DvrCatalogObject {
    type Err = DvrError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (mut a, mut b, mut c, mut finite) = (None, None, None, None);
        if compact.is_empty() {
            return Err(DvrError::BadTerm(String::new()));
        }
        for term in compact.split('+') {
            let bad = || DvrError::BadTerm(term.to_string());
            if let Some(inner) = term.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                if finite.is_some() {
                    return Err(DvrError::Repeated('['));
                }
                let ds: Result<Vec<u64>, _> =
                    if inner.is_empty() { Ok(Vec::new()) } else { inner.split(',').map(str::parse).collect() };
                finite = Some(ds.map_err(|_| bad())?);
                continue;
            }
            let mut chars = term.chars();
            let name = chars.next().ok_or_else(bad)?;
            let rest = chars.as_str();
            let n: u64 = match rest.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| bad())?,
                None if rest.is_empty() => 1,
                None => return Err(bad()),
            };
            let slot = match name {
                'A' => &mut a,
                'Q' => &mut b,
                'E' => &mut c,
                _ => return Err(bad()),
            };
            if slot.replace(n).is_some() {
                return Err(DvrError::Repeated(name));
            }
        }
        DvrCatalogObject::new(a.unwrap_or(0), b.unwrap_or(0), c.unwrap_or(0), finite.unwrap_or_default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> DvrCatalogObject {
        s.parse().unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dvr_dual(&o("A^1 + Q^0 + E^0 + []")), o("A^0 + Q^0 + E^1 + []"));
        assert_eq!(dvr_dual(&o("Q")), o("Q"));
        assert_eq!(dvr_classify(&o("[2,5]")), Classification::FiniteLength);
        assert_eq!(dvr_classify(&o("A^2 + [1]")), Classification::Noetherian);
        assert_eq!(dvr_classify(&o("E^2")), Classification::Artinian);
        assert_eq!(dvr_classify(&o("A + E")), Classification::MixedReflexive);
        assert_eq!(dvr_classify(&o("Q")), Classification::MixedReflexive);
    }

    #[test]
    fn text_round_trip() {
        let x = o("A^2 + Q^1 + E^0 + [5,2,2]");
        assert_eq!(x.to_string(), "A^2 + Q^1 + E^0 + [2,2,5]");
        assert_eq!(o(&x.to_string()), x);
        assert_eq!(o("E + A^3"), DvrCatalogObject::new(3, 0, 1, vec![]).unwrap());
        assert!(matches!("A + A".parse::<DvrCatalogObject>(), Err(DvrError::Repeated('A'))));
        assert!(matches!("B^2".parse::<DvrCatalogObject>(), Err(DvrError::BadTerm(_))));
        assert_eq!("[0]".parse::<DvrCatalogObject>(), Err(DvrError::ZeroLength));
    }

    #[test]
    fn addition() {
        let z = DvrCatalogObject::default();
        let x = o("A + [3]");
        let y = o("E^2 + [1]");
        assert_eq!(dvr_add(&x, &z), x);
        assert_eq!(dvr_add(&x, &y), dvr_add(&y, &x));
        assert_eq!(dvr_add(&x, &y), o("A + E^2 + [1,3]"));
    }
}
