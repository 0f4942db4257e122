//! Strings and bands for the algebra k[[x,y]]/(xy).
//!
//! A string is a word in the letters `x`, `y` and their formal inverses `X`, `Y`.
//! Infinite stabilising strings are stored as a finite core with optional
//! constant tails repeated forever to the left or right.
//!
//! Letter `j` of a word joins vertex `j` to vertex `j + 1`. Core letters have
//! indices `0..core.len()`, right-tail letters continue upwards from
//! `core.len()`, and left-tail letters are numbered `-1, -2, ...` moving left.
//! A direct letter is an arrow from vertex `j` to `j + 1`; an inverse letter
//! points from `j + 1` back to `j`.
//!
//! Concrete syntax (whitespace ignored):
//!
//! ```text
//! WORD   := TAIL? CORE TAIL? | "band(" LETTER* ")"
//! TAIL   := LETTER "^inf"
//! CORE   := LETTER* | "1"
//! LETTER := "x" | "y" | "X" | "Y"
//! ```
//!
//! A lone tail is read as a left tail; `1` spells an explicit empty core, so a
//! word with only a right tail is written `1 X^inf`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Direct,
    Inverse,
}

/// One letter of a string. The derived order is `x < y < X < Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub direction: Direction,
    pub symbol: Symbol,
}

impl Letter {
    pub const X: Letter = Letter { direction: Direction::Direct, symbol: Symbol::X };
    pub const Y: Letter = Letter { direction: Direction::Direct, symbol: Symbol::Y };
    pub const X_INV: Letter = Letter { direction: Direction::Inverse, symbol: Symbol::X };
    pub const Y_INV: Letter = Letter { direction: Direction::Inverse, symbol: Symbol::Y };
    pub const ALL: [Letter; 4] = [Letter::X, Letter::Y, Letter::X_INV, Letter::Y_INV];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            'X' => Some(Letter::X_INV),
            'Y' => Some(Letter::Y_INV),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match (self.direction, self.symbol) {
            (Direction::Direct, Symbol::X) => 'x',
            (Direction::Direct, Symbol::Y) => 'y',
            (Direction::Inverse, Symbol::X) => 'X',
            (Direction::Inverse, Symbol::Y) => 'Y',
        }
    }

    pub fn inverse(self) -> Letter {
        let direction = match self.direction {
            Direction::Direct => Direction::Inverse,
            Direction::Inverse => Direction::Direct,
        };
        Letter { direction, symbol: self.symbol }
    }

    pub fn is_direct(self) -> bool {
        self.direction == Direction::Direct
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `xy`, `yx`, `XY`, `YX`: a zero relation of the algebra.
    Relation,
    /// `xX`, `Xx`, `yY`, `Yy`: an arrow immediately followed by its inverse.
    Backtrack,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairKind::Relation => write!(f, "forbidden pair"),
            PairKind::Backtrack => write!(f, "backtracking pair"),
        }
    }
}

/// Why the adjacent pair `(a, b)` may not occur, if it may not.
pub fn pair_violation(a: Letter, b: Letter) -> Option<PairKind> {
    match (a.symbol == b.symbol, a.direction == b.direction) {
        (false, true) => Some(PairKind::Relation),
        (true, false) => Some(PairKind::Backtrack),
        _ => None,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{kind} ({left},{right}) at letter {index}")]
    Forbidden { index: i64, left: Letter, right: Letter, kind: PairKind },
    #[error("band word is not primitive: it is a power of a word of period {period}")]
    NotPrimitive { period: usize },
    #[error("band word contains no {}-letter", match .0 { Symbol::X => "x", Symbol::Y => "y" })]
    MissingSymbol(Symbol),
    #[error("band word must have at least two letters")]
    TooShort,
    #[error("letter index {index} out of range")]
    IndexOutOfRange { index: i64 },
    #[error("letter index {index} lies inside an infinite tail")]
    IndexInTail { index: i64 },
    #[error("pieces cannot be concatenated: {0}")]
    BadConcat(String),
}

/// A finite or stabilising string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWord {
    left: Option<Letter>,
    core: Vec<Letter>,
    right: Option<Letter>,
}

impl StringWord {
    pub fn new(left: Option<Letter>, core: Vec<Letter>, right: Option<Letter>) -> Result<Self, WordError> {
        let w = StringWord { left, core, right };
        w.check()?;
        Ok(w)
    }

    pub fn finite(core: Vec<Letter>) -> Result<Self, WordError> {
        Self::new(None, core, None)
    }

    /// The one-vertex string.
    pub fn trivial() -> Self {
        StringWord { left: None, core: Vec::new(), right: None }
    }

    fn check(&self) -> Result<(), WordError> {
        let mut seq: Vec<(i64, Letter)> = Vec::with_capacity(self.core.len() + 2);
        if let Some(l) = self.left {
            seq.push((-1, l));
        }
        seq.extend(self.core.iter().enumerate().map(|(i, &c)| (i as i64, c)));
        if let Some(r) = self.right {
            seq.push((self.core.len() as i64, r));
        }
        for win in seq.windows(2) {
            let ((i, a), (_, b)) = (win[0], win[1]);
            if let Some(kind) = pair_violation(a, b) {
                return Err(WordError::Forbidden { index: i, left: a, right: b, kind });
            }
        }
        Ok(())
    }

    pub fn left_tail(&self) -> Option<Letter> {
        self.left
    }
    pub fn right_tail(&self) -> Option<Letter> {
        self.right
    }
    pub fn core(&self) -> &[Letter] {
        &self.core
    }

    pub fn is_finite(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }

    /// Number of vertices, for finite words.
    pub fn vertices(&self) -> Option<usize> {
        self.is_finite().then(|| self.core.len() + 1)
    }

    /// Letter at index `j` in the numbering described in the module docs.
    pub fn letter_at(&self, j: i64) -> Option<Letter> {
        let n = self.core.len() as i64;
        if j < 0 {
            self.left
        } else if j < n {
            Some(self.core[j as usize])
        } else {
            self.right
        }
    }

    /// `C^-`: every letter inverted, order kept.
    pub fn inverse(&self) -> Self {
        StringWord {
            left: self.left.map(Letter::inverse),
            core: self.core.iter().map(|l| l.inverse()).collect(),
            right: self.right.map(Letter::inverse),
        }
    }

    /// The same diagram read backwards; names an isomorphic module.
    pub fn reverse_inverse(&self) -> Self {
        StringWord {
            left: self.right.map(Letter::inverse),
            core: self.core.iter().rev().map(|l| l.inverse()).collect(),
            right: self.left.map(Letter::inverse),
        }
    }

    fn order_key(&self) -> (Option<Letter>, Option<Letter>, &[Letter]) {
        (self.left, self.right, &self.core)
    }

    /// Lexicographic minimum of the word and its reverse inverse
    /// (tails before core, `x < y < X < Y`).
    pub fn canonical(&self) -> Self {
        let ri = self.reverse_inverse();
        if ri.order_key() < self.order_key() {
            ri
        } else {
            self.clone()
        }
    }

    /// Absorbs core letters adjacent to an equal tail letter into the tail.
    /// Two words name the same infinite string iff their normal forms agree.
    pub fn normalized(&self) -> Self {
        let mut core = self.core.as_slice();
        if let Some(l) = self.left {
            while core.first() == Some(&l) {
                core = &core[1..];
            }
        }
        if let Some(r) = self.right {
            while core.last() == Some(&r) {
                core = &core[..core.len() - 1];
            }
        }
        StringWord { left: self.left, core: core.to_vec(), right: self.right }
    }

    pub fn same_string(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Replaces each tail by `depth` copies of its letter.
    pub fn truncate(&self, depth: usize) -> Self {
        let mut core = Vec::with_capacity(self.core.len() + 2 * depth);
        if let Some(l) = self.left {
            core.extend(std::iter::repeat(l).take(depth));
        }
        core.extend_from_slice(&self.core);
        if let Some(r) = self.right {
            core.extend(std::iter::repeat(r).take(depth));
        }
        StringWord { left: None, core, right: None }
    }

    /// Removes letter `j` (any index, tails included): returns the piece on
    /// vertices `<= j`, the removed letter, and the piece on vertices `> j`.
    pub fn cut(&self, j: i64) -> Result<(StringWord, Letter, StringWord), WordError> {
        let n = self.core.len() as i64;
        let letter = self.letter_at(j).ok_or(WordError::IndexOutOfRange { index: j })?;
        let (l, r) = if j < 0 {
            let k = (-j - 1) as usize;
            let mut rc = vec![letter; k];
            rc.extend_from_slice(&self.core);
            (
                StringWord { left: self.left, core: Vec::new(), right: None },
                StringWord { left: None, core: rc, right: self.right },
            )
        } else if j < n {
            let j = j as usize;
            (
                StringWord { left: self.left, core: self.core[..j].to_vec(), right: None },
                StringWord { left: None, core: self.core[j + 1..].to_vec(), right: self.right },
            )
        } else {
            let mut lc = self.core.clone();
            lc.extend(std::iter::repeat(letter).take((j - n) as usize));
            (
                StringWord { left: self.left, core: lc, right: None },
                StringWord { left: None, core: Vec::new(), right: self.right },
            )
        };
        Ok((l, letter, r))
    }

    /// Joins `left`, a connecting letter and `right` into one word.
    pub fn concat(left: &StringWord, connector: Letter, right: &StringWord) -> Result<StringWord, WordError> {
        if left.right.is_some() || right.left.is_some() {
            return Err(WordError::BadConcat("an inner end is infinite".into()));
        }
        let mut core = left.core.clone();
        core.push(connector);
        core.extend_from_slice(&right.core);
        StringWord::new(left.left, core, right.right)
    }

    /// Splits at core letter `j` into the submodule and quotient pieces of the
    /// short exact sequence `0 -> M(sub) -> M(w) -> M(quot) -> 0`.
    pub fn concat_split(&self, j: usize) -> Result<ConcatSplit, WordError> {
        let idx = j as i64;
        if j >= self.core.len() {
            return Err(if self.right.is_some() {
                WordError::IndexInTail { index: idx }
            } else {
                WordError::IndexOutOfRange { index: idx }
            });
        }
        let (l, connector, r) = self.cut(idx)?;
        // the arrow points into the submodule piece
        Ok(if connector.is_direct() {
            ConcatSplit { sub: r, quot: l, connector, orientation: Orientation::DirectConnector }
        } else {
            ConcatSplit { sub: l, quot: r, connector, orientation: Orientation::InverseConnector }
        })
    }

    pub fn spelling(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for StringWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let Some(l) = self.left {
            parts.push(format!("{l}^inf"));
        }
        if !self.core.is_empty() {
            parts.push(self.core.iter().map(|l| l.to_char()).collect());
        } else if self.left.is_none() && self.right.is_some() {
            parts.push("1".into());
        }
        if let Some(r) = self.right {
            parts.push(format!("{r}^inf"));
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for StringWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Inverse connecting letter: the left piece is the submodule.
    InverseConnector,
    /// Direct connecting letter: the right piece is the submodule.
    DirectConnector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatSplit {
    pub sub: StringWord,
    pub quot: StringWord,
    pub connector: Letter,
    pub orientation: Orientation,
}

/// A primitive cyclic word naming a family of band modules.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicWord {
    cycle: Vec<Letter>,
}

impl PeriodicWord {
    pub fn new(cycle: Vec<Letter>) -> Result<Self, WordError> {
        let n = cycle.len();
        if n == 0 {
            return Err(WordError::TooShort);
        }
        for i in 0..n {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            if let Some(kind) = pair_violation(a, b) {
                return Err(WordError::Forbidden { index: i as i64, left: a, right: b, kind });
            }
        }
        for sym in [Symbol::X, Symbol::Y] {
            if !cycle.iter().any(|l| l.symbol == sym) {
                return Err(WordError::MissingSymbol(sym));
            }
        }
        if n < 2 {
            return Err(WordError::TooShort);
        }
        if let Some(period) = (1..n).find(|&d| n % d == 0 && (0..n).all(|i| cycle[i] == cycle[i % d])) {
            return Err(WordError::NotPrimitive { period });
        }
        Ok(PeriodicWord { cycle })
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn period(&self) -> usize {
        self.cycle.len()
    }

    pub fn inverse(&self) -> Self {
        PeriodicWord { cycle: self.cycle.iter().map(|l| l.inverse()).collect() }
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut cycle = self.cycle.clone();
        cycle.rotate_left(k % self.cycle.len());
        PeriodicWord { cycle }
    }
}

impl fmt::Display for PeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.cycle.iter().map(|l| l.to_char()).collect();
        write!(f, "band({s})")
    }
}

impl FromStr for PeriodicWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_band(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Letter(Letter),
    Tail(Letter),
    One,
}

/// Non-whitespace characters with their byte offsets.
fn significant(text: &str) -> Vec<(usize, char)> {
    text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect()
}

fn syntax(pos: usize, message: impl Into<String>) -> WordError {
    WordError::Syntax { pos, message: message.into() }
}

fn tokenize(chars: &[(usize, char)]) -> Result<Vec<(usize, Token)>, WordError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if let Some(l) = Letter::from_char(c) {
            let is_tail = chars.len() >= i + 5 && chars[i + 1..i + 5].iter().map(|&(_, c)| c).eq("^inf".chars());
            if is_tail {
                out.push((pos, Token::Tail(l)));
                i += 5;
            } else {
                out.push((pos, Token::Letter(l)));
                i += 1;
            }
        } else if c == '1' {
            out.push((pos, Token::One));
            i += 1;
        } else if c == '^' {
            return Err(syntax(pos, "'^' must follow a letter and read '^inf'"));
        } else {
            return Err(syntax(pos, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Parses a finite or stabilising string.
pub fn parse_word(text: &str) -> Result<StringWord, WordError> {
    let chars = significant(text);
    if chars.len() >= 5 && chars[..5].iter().map(|&(_, c)| c).eq("band(".chars()) {
        return Err(syntax(chars[0].0, "band word where a string was expected"));
    }
    let tokens = tokenize(&chars)?;
    let mut left = None;
    let mut right = None;
    let mut core = Vec::new();
    let mut saw_one: Option<usize> = None;
    let last = tokens.len().saturating_sub(1);
    for (k, &(pos, tok)) in tokens.iter().enumerate() {
        match tok {
            Token::Tail(l) if k == 0 => left = Some(l),
            Token::Tail(l) if k == last => right = Some(l),
            Token::Tail(_) => return Err(syntax(pos, "an infinite tail may only start or end a word")),
            Token::One => {
                if saw_one.is_some() || !core.is_empty() {
                    return Err(syntax(pos, "'1' must be the entire core"));
                }
                saw_one = Some(pos);
            }
            Token::Letter(l) => {
                if let Some(p) = saw_one {
                    return Err(syntax(p, "'1' must be the entire core"));
                }
                core.push(l);
            }
        }
    }
    StringWord::new(left, core, right)
}

/// Parses `band(...)`.
pub fn parse_band(text: &str) -> Result<PeriodicWord, WordError> {
    let chars = significant(text);
    let head: String = chars.iter().take(5).map(|&(_, c)| c).collect();
    if head != "band(" {
        let pos = chars.first().map_or(0, |&(p, _)| p);
        return Err(syntax(pos, "a band is written band(...)"));
    }
    let Some(&(_, ')')) = chars.last() else {
        return Err(syntax(text.len(), "missing ')'"));
    };
    let mut cycle = Vec::new();
    for &(pos, c) in &chars[5..chars.len() - 1] {
        match Letter::from_char(c) {
            Some(l) => cycle.push(l),
            None => return Err(syntax(pos, format!("unexpected character {c:?} in band"))),
        }
    }
    PeriodicWord::new(cycle)
}

/// Ok, or the reason the text is not a valid word. Accepts strings and bands.
pub fn validate(text: &str) -> Result<(), WordError> {
    let chars = significant(text);
    if chars.len() >= 5 && chars[..5].iter().map(|&(_, c)| c).eq("band(".chars()) {
        parse_band(text).map(|_| ())
    } else {
        parse_word(text).map(|_| ())
    }
}

/// All valid finite words with at most `max_len` letters.
pub fn finite_words(max_len: usize) -> Vec<StringWord> {
    let mut out = vec![StringWord::trivial()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in Letter::ALL {
                if w.last().is_some_and(|&a| pair_violation(a, l).is_some()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|c| StringWord { left: None, core: c.clone(), right: None }));
        layer = next;
    }
    out
}

/// All valid words with core length at most `max_core` and every combination
/// of absent or present tails.
pub fn words_with_tails(max_core: usize) -> Vec<StringWord> {
    let tails: Vec<Option<Letter>> = std::iter::once(None).chain(Letter::ALL.iter().copied().map(Some)).collect();
    let mut out = Vec::new();
    for w in finite_words(max_core) {
        for &l in &tails {
            for &r in &tails {
                if let Ok(v) = StringWord::new(l, w.core.clone(), r) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// All valid primitive band words of period at most `max_period`.
pub fn band_words(max_period: usize) -> Vec<PeriodicWord> {
    let mut out = Vec::new();
    for w in finite_words(max_period) {
        if let Ok(b) = PeriodicWord::new(w.core.clone()) {
            out.push(b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> StringWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let c1 = w("xY");
        assert_eq!(c1.core(), &[Letter::X, Letter::Y_INV]);
        assert!(c1.is_finite());
        assert_eq!(w(""), StringWord::trivial());
        let cinf = w("x^inf Y^inf");
        assert_eq!(cinf.left_tail(), Some(Letter::X));
        assert!(cinf.core().is_empty());
        assert_eq!(cinf.right_tail(), Some(Letter::Y_INV));
        assert_eq!(w("X^inf").left_tail(), Some(Letter::X_INV));
        assert_eq!(w("1 X^inf").right_tail(), Some(Letter::X_INV));
        assert_eq!(w(" x Y x ").to_string(), "xYx");
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            validate("xy"),
            Err(WordError::Forbidden { index: 0, left: Letter::X, right: Letter::Y, kind: PairKind::Relation })
        ));
        assert!(matches!(
            validate("xX"),
            Err(WordError::Forbidden { kind: PairKind::Backtrack, .. })
        ));
        assert!(validate("xYx").is_ok());
        assert!(matches!(validate("xz"), Err(WordError::Syntax { pos: 1, .. })));
        assert!(matches!(validate("x Y^inf x"), Err(WordError::Syntax { .. })));
        assert!(matches!(validate("x^in"), Err(WordError::Syntax { .. })));
        // tail/core junction
        assert!(matches!(
            validate("x^inf y"),
            Err(WordError::Forbidden { index: -1, kind: PairKind::Relation, .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("xY").inverse().to_string(), "Xy");
        assert_eq!(w("").inverse(), StringWord::trivial());
        assert_eq!(w("x^inf Y^inf").inverse().to_string(), "X^inf y^inf");
    }

    #[test]
    fn reverse_inverse_and_canon() {
        assert_eq!(w("xY").reverse_inverse().to_string(), "yX");
        assert_eq!(w("xY").canonical().to_string(), "xY");
        assert_eq!(w("yX").canonical().to_string(), "xY");
        assert_eq!(w("").canonical(), StringWord::trivial());
        // the mirror image of D_inf swaps the roles of x and y
        let d = w("X^inf y^inf");
        assert_eq!(d.reverse_inverse().to_string(), "Y^inf x^inf");
        assert_eq!(d.canonical(), d.reverse_inverse().canonical());
    }

    #[test]
    fn concat_split_examples() {
        let s = w("xY").concat_split(1).unwrap();
        assert_eq!((s.sub.to_string().as_str(), s.quot.to_string().as_str()), ("x", ""));
        assert_eq!(s.orientation, Orientation::InverseConnector);
        let s = w("xY").concat_split(0).unwrap();
        assert_eq!((s.sub.to_string().as_str(), s.quot.to_string().as_str()), ("Y", ""));
        assert_eq!(s.orientation, Orientation::DirectConnector);
        let s = w("X^inf y X^inf").concat_split(0).unwrap();
        assert_eq!(s.sub.to_string(), "1 X^inf");
        assert_eq!(s.quot.to_string(), "X^inf");
        assert!(matches!(w("xY").concat_split(2), Err(WordError::IndexOutOfRange { .. })));
        assert!(matches!(w("x Y^inf").concat_split(1), Err(WordError::IndexInTail { .. })));
    }

    #[test]
    fn truncation() {
        assert_eq!(w("x^inf Y^inf").truncate(3).to_string(), "xxxYYY");
        assert_eq!(w("xY").truncate(7).to_string(), "xY");
        assert_eq!(w("X^inf y^inf").truncate(2), w("xxYY").inverse());
    }

    #[test]
    fn bands() {
        let b = parse_band("band(xY)").unwrap();
        assert_eq!(b.period(), 2);
        assert_eq!(b.to_string(), "band(xY)");
        assert_eq!(parse_band("band(xYxY)"), Err(WordError::NotPrimitive { period: 2 }));
        assert_eq!(parse_band("band(xx)"), Err(WordError::MissingSymbol(Symbol::Y)));
        assert!(matches!(parse_band("band(xy)"), Err(WordError::Forbidden { .. })));
        // wrap-around pair Y,X is a relation
        assert!(matches!(parse_band("band(XxY)"), Err(WordError::Forbidden { .. })));
        assert!(parse_band("band(xxY)").is_ok());
        assert!(matches!(parse_band("band(xY"), Err(WordError::Syntax { .. })));
    }

    #[test]
    fn cut_in_tails_reconcatenates() {
        let word = w("X^inf y X^inf");
        for j in -4..6 {
            let (l, c, r) = word.cut(j).unwrap();
            let back = StringWord::concat(&l, c, &r).unwrap();
            assert!(back.same_string(&word), "cut at {j}");
        }
    }

    #[test]
    fn enumeration_sizes() {
        // 1 + 4 + 8 + 16: each letter after the first has two admissible successors
        assert_eq!(finite_words(3).len(), 29);
        assert!(words_with_tails(2).iter().all(|v| StringWord::new(v.left, v.core.clone(), v.right).is_ok()));
    }
}
