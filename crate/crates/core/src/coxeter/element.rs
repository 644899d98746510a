use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::linalg::Matrix;
use crate::arith::AlgebraicNumber;
use crate::error::{CoxError, Result};

/// A word over the generators. Letters are stored 0-based and shown 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(vec![])
    }

    /// From 1-based letters, e.g. `[1, 2, 3]`.
    pub fn from_one_based(letters: &[usize]) -> Self {
        assert!(letters.iter().all(|&l| l >= 1), "letters are 1-based");
        Self(letters.iter().map(|l| l - 1).collect())
    }

    /// Parses `12321`, `1 2 3 2 1` or `1,2,3`; `e` or the empty string is the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Self::empty());
        }
        let tokens: Vec<&str> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect()
        } else {
            text.char_indices().map(|(i, c)| &text[i..i + c.len_utf8()]).collect()
        };
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let l: usize = tok.parse().map_err(|_| CoxError::Parse(format!("bad letter `{tok}` in word `{text}`")))?;
            if l == 0 || l > rank {
                return Err(CoxError::LetterOutOfRange { letter: l, rank });
            }
            letters.push(l - 1);
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|l| l + 1).collect()
    }

    /// `s_1 ... s_k r s_k ... s_1` for `self = s_1 ... s_k r`.
    pub fn palindromic_extension(&self) -> Self {
        let mut out = self.0.clone();
        if let Some((_, head)) = self.0.split_last() {
            out.extend(head.iter().rev());
        }
        Self(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        if self.0.iter().all(|&l| l < 9) {
            for l in &self.0 {
                write!(f, "{}", l + 1)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// An element of `W`, held as its exact matrix and inverse. Equality is matrix equality.
#[derive(Clone)]
pub struct GroupElement {
    pub(crate) matrix: Matrix,
    pub(crate) inverse: Matrix,
    pub(crate) length: usize,
    pub(crate) word: OnceLock<Word>,
    pub(crate) rows: ReflectionRows,
}

impl GroupElement {
    pub(crate) fn from_parts(
        rows: &ReflectionRows,
        matrix: Matrix,
        inverse: Matrix,
        length: usize,
        word: Option<Word>,
    ) -> Self {
        let cell = OnceLock::new();
        if let Some(w) = word {
            let _ = cell.set(w);
        }
        Self { matrix, inverse, length, word: cell, rows: rows.clone() }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// The ShortLex normal form: the lexicographically first reduced word.
    pub fn word(&self) -> &Word {
        self.word.get_or_init(|| shortlex(&self.rows, &self.matrix, &self.inverse))
    }

    pub fn inverse(&self) -> Self {
        Self::from_parts(&self.rows, self.inverse.clone(), self.matrix.clone(), self.length, None)
    }

    /// `s` is a left descent iff `w^{-1}(alpha_s)` is negative.
    pub fn has_left_descent(&self, s: usize) -> bool {
        self.inverse.column_sign(s) < 0
    }

    /// `s` is a right descent iff `w(alpha_s)` is negative.
    pub fn has_right_descent(&self, s: usize) -> bool {
        self.matrix.column_sign(s) < 0
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.matrix.size()).filter(|&s| self.has_left_descent(s)).collect()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.matrix.size()).filter(|&s| self.has_right_descent(s)).collect()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({})", self.word())
    }
}

/// Rows of the simple reflection matrices: `rows[s]` is row `s` of `sigma_s`, the only row
/// that differs from the identity.
pub(crate) type ReflectionRows = Arc<Vec<Vec<AlgebraicNumber>>>;

/// Strips the smallest left descent until the identity is reached.
pub(crate) fn shortlex(rows: &ReflectionRows, matrix: &Matrix, inverse: &Matrix) -> Word {
    let (mut m, mut inv) = (matrix.clone(), inverse.clone());
    let n = m.size();
    let mut word = Word::empty();
    while let Some(s) = (0..n).find(|&s| inv.column_sign(s) < 0) {
        word.push(s);
        m.mul_left_row_op(s, &rows[s]);
        inv.mul_right_row_op(s, &rows[s]);
    }
    word
}
