//! Chain conditions of string modules read off from tail orientation, and the
//! noetherian-submodule / artinian-quotient splitting of mixed strings.
//!
//! Tail table:
//!
//! | tail  | direct letter | inverse letter |
//! |-------|---------------|----------------|
//! | left  | artinian      | noetherian     |
//! | right | noetherian    | artinian       |
//!
//! So `x^inf Y^inf` (the injective hull of k) is artinian and `X^inf y^inf`
//! (the ring itself) is noetherian.

use std::fmt;

use thiserror::Error;

use crate::field::Field;
use crate::modrep::{is_isomorphic, materialize_string, quotient, submodule_generated, ModuleError, ModuleRep};
use crate::strings::{Direction, Letter, StringWord, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    FiniteLength,
    Artinian,
    Noetherian,
    MixedReflexive,
}

impl Classification {
    /// Exchanges artinian and noetherian; duality acts this way.
    pub fn swap(self) -> Self {
        match self {
            Classification::Artinian => Classification::Noetherian,
            Classification::Noetherian => Classification::Artinian,
            other => other,
        }
    }

    pub fn is_noetherian(self) -> bool {
        matches!(self, Classification::FiniteLength | Classification::Noetherian)
    }

    pub fn is_artinian(self) -> bool {
        matches!(self, Classification::FiniteLength | Classification::Artinian)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::FiniteLength => "finite-length",
            Classification::Artinian => "artinian",
            Classification::Noetherian => "noetherian",
            Classification::MixedReflexive => "mixed-reflexive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailType {
    Artinian,
    Noetherian,
}

pub fn left_tail_type(l: Letter) -> TailType {
    match l.direction {
        Direction::Direct => TailType::Artinian,
        Direction::Inverse => TailType::Noetherian,
    }
}

pub fn right_tail_type(r: Letter) -> TailType {
    match r.direction {
        Direction::Direct => TailType::Noetherian,
        Direction::Inverse => TailType::Artinian,
    }
}

pub fn classify_word(w: &StringWord) -> Classification {
    let types: Vec<TailType> = w
        .left_tail()
        .map(left_tail_type)
        .into_iter()
        .chain(w.right_tail().map(right_tail_type))
        .collect();
    if types.is_empty() {
        Classification::FiniteLength
    } else if types.iter().all(|&t| t == TailType::Artinian) {
        Classification::Artinian
    } else if types.iter().all(|&t| t == TailType::Noetherian) {
        Classification::Noetherian
    } else {
        Classification::MixedReflexive
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("index {index} is not an admissible split point of {word}")]
    Inadmissible { word: String, index: i64 },
    #[error("split index {index} lies outside the depth-{depth} window")]
    OutsideWindow { index: i64, depth: usize },
}

/// `0 -> M(sub) -> M(w) -> M(quot) -> 0` with `sub` noetherian and `quot` artinian.
///
/// When `split_index` is `None` the split is trivial and the empty word on
/// the missing side stands for the zero module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub sub: StringWord,
    pub quot: StringWord,
    pub split_index: Option<i64>,
}

impl SplitResult {
    /// Rebuilds the word from the two pieces.
    pub fn reassemble(&self, w: &StringWord) -> Result<StringWord, WordError> {
        let Some(j) = self.split_index else {
            return Ok(if self.sub == StringWord::trivial() { self.quot.clone() } else { self.sub.clone() });
        };
        let letter = w.letter_at(j).ok_or(WordError::IndexOutOfRange { index: j })?;
        if sub_is_left(w) {
            StringWord::concat(&self.sub, letter, &self.quot)
        } else {
            StringWord::concat(&self.quot, letter, &self.sub)
        }
    }
}

/// For a mixed word, whether the noetherian tail is on the left.
fn sub_is_left(w: &StringWord) -> bool {
    w.left_tail().is_some_and(|l| left_tail_type(l) == TailType::Noetherian)
}

/// Whether cutting at letter `j` makes the noetherian side a submodule: the
/// cut arrow must point from the quotient side into it.
pub fn is_admissible(w: &StringWord, j: i64) -> bool {
    if classify_word(w) != Classification::MixedReflexive {
        return false;
    }
    let Some(letter) = w.letter_at(j) else { return false };
    // left piece is a submodule iff the arrow points left (inverse letter)
    if sub_is_left(w) {
        letter.direction == Direction::Inverse
    } else {
        letter.direction == Direction::Direct
    }
}

/// Admissible split indices `j` with `|j| <= radius`, in tie-break order.
pub fn admissible_indices(w: &StringWord, radius: usize) -> Vec<i64> {
    let r = radius as i64;
    let mut out: Vec<i64> = (-r..=r).filter(|&j| is_admissible(w, j)).collect();
    out.sort_by_key(|&j| (j.abs(), j < 0));
    out
}

/// Splits a word at the admissible letter closest to the start of the core,
/// preferring the non-negative index on ties.
pub fn arno_split(w: &StringWord) -> SplitResult {
    match classify_word(w) {
        Classification::Artinian => {
            SplitResult { sub: StringWord::trivial(), quot: w.clone(), split_index: None }
        }
        Classification::Noetherian | Classification::FiniteLength => {
            SplitResult { sub: w.clone(), quot: StringWord::trivial(), split_index: None }
        }
        Classification::MixedReflexive => {
            // both tails carry the admissible direction, so index -1 or
            // core.len() always qualifies
            let j = admissible_indices(w, w.core().len() + 1)[0];
            split_at(w, j).expect("admissible index")
        }
    }
}

/// Split at a given admissible index.
pub fn split_at(w: &StringWord, j: i64) -> Result<SplitResult, ClassifyError> {
    if !is_admissible(w, j) {
        return Err(ClassifyError::Inadmissible { word: w.to_string(), index: j });
    }
    let (l, _, r) = w.cut(j)?;
    let (sub, quot) = if sub_is_left(w) { (l, r) } else { (r, l) };
    Ok(SplitResult { sub, quot, split_index: Some(j) })
}

/// Comparison of the submodules cut out at two admissible indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessReport {
    pub j1: i64,
    pub j2: i64,
    /// Vertices in the larger sub but not the smaller one.
    pub dim_difference: usize,
    /// The larger sub is the smaller one extended by this finite segment.
    pub segment: StringWord,
    pub nested: bool,
    pub both_noetherian: bool,
}

impl UniquenessReport {
    pub fn holds(&self) -> bool {
        self.nested && self.both_noetherian && self.dim_difference as i64 == (self.j1 - self.j2).abs()
    }
}

pub fn split_uniqueness_check(w: &StringWord, j1: i64, j2: i64) -> Result<UniquenessReport, ClassifyError> {
    let s1 = split_at(w, j1)?;
    let s2 = split_at(w, j2)?;
    let (lo, hi) = (j1.min(j2), j1.max(j2));
    let (s_lo, s_hi) = if j1 <= j2 { (&s1, &s2) } else { (&s2, &s1) };
    // vertices lo+1 ..= hi joined by letters lo+1 .. hi-1
    let letters: Vec<Letter> = (lo + 1..hi).map(|j| w.letter_at(j).expect("inside the word")).collect();
    let dim_difference = if lo == hi { 0 } else { letters.len() + 1 };
    let segment = if lo == hi { StringWord::trivial() } else { StringWord::finite(letters)? };
    let nested = if lo == hi {
        s1 == s2
    } else if sub_is_left(w) {
        // left pieces grow to the right: L_hi = L_lo + letter lo + segment
        let grown = StringWord::concat(&s_lo.sub, w.letter_at(lo).unwrap(), &segment)?;
        grown.same_string(&s_hi.sub)
    } else {
        // right pieces grow to the left: R_lo = segment + letter hi + R_hi
        let grown = StringWord::concat(&segment, w.letter_at(hi).unwrap(), &s_hi.sub)?;
        grown.same_string(&s_lo.sub)
    };
    let both_noetherian = classify_word(&s1.sub).is_noetherian() && classify_word(&s2.sub).is_noetherian();
    Ok(UniquenessReport { j1, j2, dim_difference, segment, nested, both_noetherian })
}

/// Whether classifying the inverse word swaps artinian and noetherian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCompatReport {
    pub word: Classification,
    pub inverse: Classification,
}

impl DualCompatReport {
    pub fn holds(&self) -> bool {
        self.inverse == self.word.swap()
    }
}

pub fn classify_dual_compat(w: &StringWord) -> DualCompatReport {
    DualCompatReport { word: classify_word(w), inverse: classify_word(&w.inverse()) }
}

/// Finite window check of a split: in the depth-`depth` truncation of `w`,
/// the vertices of `sub` span a submodule, the quotient is the string module
/// on the remaining vertices, and both differ from the truncated pieces by at
/// most one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub depth: usize,
    pub window_dim: usize,
    pub sub_dim: usize,
    pub quot_dim: usize,
    pub sub_closed: bool,
    pub quotient_matches: bool,
    pub sub_boundary: usize,
    pub quot_boundary: usize,
}

impl WindowReport {
    pub fn holds(&self) -> bool {
        self.sub_closed
            && self.quotient_matches
            && self.sub_dim + self.quot_dim == self.window_dim
            && self.sub_boundary <= 1
            && self.quot_boundary <= 1
    }
}

pub fn window_consistency<K: Field>(
    w: &StringWord,
    split: &SplitResult,
    depth: usize,
    field: &K,
) -> Result<WindowReport, ClassifyError> {
    let Some(j) = split.split_index else {
        return Err(ClassifyError::Inadmissible { word: w.to_string(), index: 0 });
    };
    let t = w.truncate(depth);
    let shift = if w.left_tail().is_some() { depth as i64 } else { 0 };
    let jt = j + shift;
    if jt < 0 || jt >= t.core().len() as i64 {
        return Err(ClassifyError::OutsideWindow { index: j, depth });
    }
    let jt = jt as usize;
    let m: ModuleRep<K> = materialize_string(&t, field)?;
    let n = m.dim();
    let sub_vertices: Vec<usize> = if sub_is_left(w) { (0..=jt).collect() } else { (jt + 1..n).collect() };
    let gens: Vec<Vec<K::Elem>> = sub_vertices
        .iter()
        .map(|&v| {
            let mut e = vec![field.zero(); n];
            e[v] = field.one();
            e
        })
        .collect();
    let (sub, inclusion) = submodule_generated(&m, &gens)?;
    let sub_closed = sub.dim() == sub_vertices.len();
    let q = quotient(&m, &inclusion)?;
    let (tl, _, tr) = t.cut(jt as i64)?;
    let quot_window = if sub_is_left(w) { tr } else { tl };
    let expected = materialize_string(&quot_window, field)?;
    let quotient_matches = is_isomorphic(&q, &expected, 0, crate::DEFAULT_MC_BUDGET)?.is_iso();
    let sub_full = split.sub.truncate(depth).vertices().unwrap_or(0);
    let quot_full = split.quot.truncate(depth).vertices().unwrap_or(0);
    Ok(WindowReport {
        depth,
        window_dim: n,
        sub_dim: sub.dim(),
        quot_dim: q.dim(),
        sub_closed,
        quotient_matches,
        sub_boundary: sub_full.abs_diff(sub.dim()),
        quot_boundary: quot_full.abs_diff(q.dim()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::strings::{parse_word, words_with_tails};

    fn w(s: &str) -> StringWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_word(&w("x^inf Y^inf")), Classification::Artinian);
        assert_eq!(classify_word(&w("X^inf y^inf")), Classification::Noetherian);
        assert_eq!(classify_word(&w("X^inf y X^inf")), Classification::MixedReflexive);
        assert_eq!(classify_word(&w("xY")), Classification::FiniteLength);
        assert_eq!(classify_word(&w("1 x^inf")), Classification::Noetherian);
        assert_eq!(Classification::Artinian.to_string(), "artinian");
    }

    #[test]
    fn split_examples() {
        let mixed = w("X^inf y X^inf");
        let s = arno_split(&mixed);
        assert_eq!(s.split_index, Some(1));
        assert_eq!(s.sub, w("X^inf y"));
        assert_eq!(s.quot, w("1 X^inf"));
        assert!(s.reassemble(&mixed).unwrap().same_string(&mixed));
        assert_eq!(classify_word(&s.sub), Classification::Noetherian);
        assert_eq!(classify_word(&s.quot), Classification::Artinian);

        let e = w("x^inf Y^inf");
        let s = arno_split(&e);
        assert_eq!((s.sub.clone(), s.quot.clone(), s.split_index), (StringWord::trivial(), e.clone(), None));
        let a = w("X^inf y^inf");
        assert_eq!(arno_split(&a).sub, a);
        assert!(arno_split(&a).quot == StringWord::trivial());
    }

    #[test]
    fn uniqueness_examples() {
        let mixed = w("X^inf y X^inf");
        let r = split_uniqueness_check(&mixed, 1, 4).unwrap();
        assert_eq!(r.dim_difference, 3);
        assert!(r.holds());
        let same = split_uniqueness_check(&mixed, 2, 2).unwrap();
        assert_eq!(same.dim_difference, 0);
        assert!(same.holds());
        let across = split_uniqueness_check(&mixed, -2, 3).unwrap();
        assert_eq!(across.dim_difference, 5);
        assert!(across.holds());
        assert!(matches!(
            split_uniqueness_check(&mixed, 0, 1),
            Err(ClassifyError::Inadmissible { index: 0, .. })
        ));
    }

    #[test]
    fn dual_swaps_on_all_small_words() {
        for word in words_with_tails(3) {
            assert!(classify_dual_compat(&word).holds(), "{word}");
        }
        let r = classify_dual_compat(&w("x^inf Y^inf"));
        assert_eq!((r.word, r.inverse), (Classification::Artinian, Classification::Noetherian));
    }

    #[test]
    fn windows() {
        let f = Fp::new(32003).unwrap();
        for text in ["X^inf y X^inf", "y^inf X y^inf", "Y^inf x Y^inf", "X^inf yy Xy X^inf"] {
            let word = w(text);
            if classify_word(&word) != Classification::MixedReflexive {
                continue;
            }
            let s = arno_split(&word);
            for d in 2..=6 {
                let r = window_consistency(&word, &s, d, &f).unwrap();
                assert!(r.holds(), "{text} depth {d}: {r:?}");
            }
        }
    }
}
