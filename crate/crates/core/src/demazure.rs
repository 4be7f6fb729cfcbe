//! The Demazure product `w • w'`, the monoid structure on `W` coming from the
//! nil-Hecke algebra, and the initial/final segment relations.

use crate::coxeter::{Element, GeneratorId};
use crate::error::Result;

/// Folds `letters` into `acc` from the left, appending only ascents.
pub fn demazure_fold<I>(acc: &Element, letters: I) -> Result<Element>
where
    I: IntoIterator<Item = GeneratorId>,
{
    let mut acc = acc.clone();
    for s in letters {
        if !acc.has_right_descent(s) {
            acc = acc.mul_gen_right(s)?;
        }
    }
    Ok(acc)
}

/// `w • w2`, folding the canonical word of `w2` onto `w`.
pub fn demazure_product(w: &Element, w2: &Element) -> Result<Element> {
    w.group().check_same(w2.group())?;
    demazure_fold(w, w2.canonical_word().iter())
}

/// The mirror construction: prepends the letters of `w` onto `w2` from the
/// right, keeping only left ascents. Agrees with [`demazure_product`].
pub fn demazure_product_from_left(w: &Element, w2: &Element) -> Result<Element> {
    w.group().check_same(w2.group())?;
    let mut acc = w2.clone();
    for s in w.canonical_word().iter().rev() {
        if !acc.has_left_descent(s) {
            acc = acc.mul_gen_left(s)?;
        }
    }
    Ok(acc)
}

/// `|w1| + |w1^{-1} w2| = |w2|`.
pub fn is_initial_segment(w1: &Element, w2: &Element) -> Result<bool> {
    w1.group().check_same(w2.group())?;
    if w1.length() > w2.length() {
        return Ok(false);
    }
    let rest = w1.inverse().multiply(w2)?;
    Ok(w1.length() + rest.length() == w2.length())
}

/// `w1^{-1}` is an initial segment of `w2^{-1}`.
pub fn is_final_segment(w1: &Element, w2: &Element) -> Result<bool> {
    is_initial_segment(&w1.inverse(), &w2.inverse())
}
