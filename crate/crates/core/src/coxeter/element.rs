use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::group::Group;
use super::matrix;
use super::word::{GeneratorId, Word};
use crate::error::Result;

/// A group element, stored as its matrix in the geometric representation.
///
/// The inverse matrix and the lexicographically least reduced words of the
/// element and of its inverse are computed at construction, so length,
/// descents, inversion and normal forms never touch arithmetic again.
/// Equality and hashing use the matrix only.
#[derive(Clone)]
pub struct Element {
    group: Group,
    mat: Box<[i64]>,
    inv: Box<[i64]>,
    word: Word,
    inv_word: Word,
}

/// Strips the smallest right descent of `m` until the identity is reached.
/// The stripped letters spell the lex-least reduced word of `m^{-1}`.
fn strip_word(group: &Group, m: &[i64]) -> Result<Word> {
    let n = group.rank();
    let mut v = m.to_vec();
    let mut word = Word::empty();
    while let Some(c) = matrix::first_negative_column(n, &v) {
        word.push(GeneratorId::from_zero_based(c));
        matrix::right_mul_gen(n, group.cartan_flat(), &mut v, c)?;
    }
    Ok(word)
}

impl Element {
    pub(crate) fn from_raw(
        group: Group,
        mat: Vec<i64>,
        inv: Vec<i64>,
        word: Word,
        inv_word: Word,
    ) -> Self {
        Element {
            group,
            mat: mat.into_boxed_slice(),
            inv: inv.into_boxed_slice(),
            word,
            inv_word,
        }
    }

    pub(crate) fn from_matrices(group: Group, mat: Vec<i64>, inv: Vec<i64>) -> Result<Self> {
        let word = strip_word(&group, &inv)?;
        let inv_word = strip_word(&group, &mat)?;
        debug_assert_eq!(word.len(), inv_word.len());
        Ok(Element::from_raw(group, mat, inv, word, inv_word))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Row-major matrix; column `c` holds the coordinates of `w(alpha_c)`.
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The lexicographically smallest reduced word.
    pub fn canonical_word(&self) -> &Word {
        &self.word
    }

    pub fn multiply(&self, other: &Element) -> Result<Element> {
        self.group.check_same(&other.group)?;
        if other.length() <= 2 {
            return other
                .word
                .iter()
                .try_fold(self.clone(), |acc, s| acc.mul_gen_right(s));
        }
        let n = self.group.rank();
        let mat = matrix::product(n, &self.mat, &other.mat)?;
        let inv = matrix::product(n, &other.inv, &self.inv)?;
        Element::from_matrices(self.group.clone(), mat, inv)
    }

    pub fn inverse(&self) -> Element {
        Element {
            group: self.group.clone(),
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            word: self.inv_word.clone(),
            inv_word: self.word.clone(),
        }
    }

    /// `self * s`.
    pub fn mul_gen_right(&self, s: GeneratorId) -> Result<Element> {
        let n = self.group.rank();
        let i = s.check(n)?.idx0();
        let mut mat = self.mat.to_vec();
        let mut inv = self.inv.to_vec();
        matrix::right_mul_gen(n, self.group.cartan_flat(), &mut mat, i)?;
        matrix::left_mul_gen(n, self.group.cartan_flat(), &mut inv, i)?;
        Element::from_matrices(self.group.clone(), mat, inv)
    }

    /// `s * self`.
    pub fn mul_gen_left(&self, s: GeneratorId) -> Result<Element> {
        Ok(self.inverse().mul_gen_right(s)?.inverse())
    }

    /// `|ws| = |w| - 1`, tested as `w(alpha_s) < 0`.
    pub fn has_right_descent(&self, s: GeneratorId) -> bool {
        let n = self.group.rank();
        s.idx0() < n && matrix::column_is_negative(n, &self.mat, s.idx0())
    }

    /// `|sw| = |w| - 1`, tested as `w^{-1}(alpha_s) < 0`.
    pub fn has_left_descent(&self, s: GeneratorId) -> bool {
        let n = self.group.rank();
        s.idx0() < n && matrix::column_is_negative(n, &self.inv, s.idx0())
    }

    /// Left descents in increasing order.
    pub fn left_descents(&self) -> Vec<GeneratorId> {
        self.group
            .generators()
            .filter(|&s| self.has_left_descent(s))
            .collect()
    }

    pub fn right_descents(&self) -> Vec<GeneratorId> {
        self.group
            .generators()
            .filter(|&s| self.has_right_descent(s))
            .collect()
    }

    /// Every reduced word, in lexicographic order. Exponential in the length.
    pub fn reduced_words(&self) -> Result<Vec<Word>> {
        if self.is_identity() {
            return Ok(vec![Word::empty()]);
        }
        let mut out = Vec::new();
        for s in self.left_descents() {
            for tail in self.mul_gen_left(s)?.reduced_words()? {
                let mut w = Word::new(vec![s]);
                for t in tail.iter() {
                    w.push(t);
                }
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Whether the image of every simple root is all-nonnegative or all-nonpositive.
    pub fn roots_sign_coherent(&self) -> bool {
        let n = self.group.rank();
        (0..n).all(|c| matrix::column_is_sign_coherent(n, &self.mat, c))
    }

    /// Canonical word as a string (digits for rank <= 9).
    pub fn word_string(&self) -> String {
        self.word.format(self.group.rank())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat && self.group.same_as(&other.group)
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

/// Orders by length, then canonical word.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| {
                if self.group.same_as(&other.group) {
                    Ordering::Equal
                } else {
                    self.group.cartan_flat().cmp(other.group.cartan_flat())
                }
            })
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "Element(e)")
        } else {
            write!(f, "Element({})", self.word_string())
        }
    }
}
