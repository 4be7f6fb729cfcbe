//! The Iwahori-Hecke algebra `H` over `Z[u]` and its module `M` with basis
//! `a_x` indexed by twisted involutions, at generic `u`.
//!
//! Everything here is computed by iterated generator actions only, so that
//! specializing `u = 0` gives an independent check on the nil-Hecke
//! structures in [`crate::demazure`] and [`crate::involutions`].

mod poly;

use std::collections::BTreeMap;

use serde::Serialize;

pub use poly::UPoly;

use crate::coxeter::{Element, GeneratorId, Star};
use crate::error::{Error, Result};
use crate::involutions::{Sign, TwistedInvolution};

fn u_pow(k: usize) -> UPoly {
    UPoly::monomial(k)
}

fn poly(coeffs: &[i64]) -> UPoly {
    UPoly::from_coeffs(coeffs.to_vec())
}

fn accumulate(terms: &mut BTreeMap<Element, UPoly>, key: Element, p: UPoly) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    match terms.remove(&key) {
        Some(old) => {
            let sum = old.checked_add(&p)?;
            if !sum.is_zero() {
                terms.insert(key, sum);
            }
        }
        None => {
            terms.insert(key, p);
        }
    }
    Ok(())
}

/// An element of `H`: a finitely supported map `W -> Z[u]` in the `T_w` basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HVec {
    terms: BTreeMap<Element, UPoly>,
}

impl HVec {
    pub fn zero() -> Self {
        HVec::default()
    }

    /// `T_w`.
    pub fn basis(w: Element) -> Self {
        HVec {
            terms: BTreeMap::from([(w, UPoly::one())]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (length, canonical word) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Element, &UPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Element) -> UPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Element, p: UPoly) -> Result<()> {
        accumulate(&mut self.terms, w, p)
    }

    /// Evaluates every coefficient at `u = 0`.
    pub fn specialize_u0(&self) -> BTreeMap<Element, i64> {
        self.terms
            .iter()
            .map(|(w, p)| (w.clone(), p.at_zero()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }
}

/// An element of `M`: a finitely supported map `I_* -> Z[u]` in the `a_x` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MVec {
    star: Star,
    terms: BTreeMap<Element, UPoly>,
}

/// Golden-file entry: `{"word": ..., "poly": [c0, c1, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MTerm {
    pub word: String,
    pub poly: Vec<i64>,
}

impl MVec {
    pub fn zero(star: &Star) -> Self {
        MVec {
            star: star.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `a_x`.
    pub fn basis(x: &TwistedInvolution) -> Self {
        MVec {
            star: x.star().clone(),
            terms: BTreeMap::from([(x.element().clone(), UPoly::one())]),
        }
    }

    pub fn star(&self) -> &Star {
        &self.star
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &UPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x: &Element) -> UPoly {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, x: &TwistedInvolution, p: UPoly) -> Result<()> {
        if x.star() != &self.star {
            return Err(Error::StarMismatch);
        }
        accumulate(&mut self.terms, x.element().clone(), p)
    }

    pub fn checked_add(&self, other: &MVec) -> Result<MVec> {
        if self.star != other.star {
            return Err(Error::StarMismatch);
        }
        let mut out = self.clone();
        for (x, p) in &other.terms {
            accumulate(&mut out.terms, x.clone(), p.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &UPoly) -> Result<MVec> {
        let mut out = MVec::zero(&self.star);
        for (x, p) in &self.terms {
            accumulate(&mut out.terms, x.clone(), p.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `u = 0`.
    pub fn specialize_u0(&self) -> BTreeMap<Element, i64> {
        self.terms
            .iter()
            .map(|(x, p)| (x.clone(), p.at_zero()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    /// Sorted by (length, canonical word).
    pub fn golden_terms(&self) -> Vec<MTerm> {
        self.terms
            .iter()
            .map(|(x, p)| MTerm {
                word: x.word_string(),
                poly: p.coeffs().to_vec(),
            })
            .collect()
    }

    pub fn to_golden_json(&self) -> String {
        serde_json::to_string_pretty(&self.golden_terms()).expect("MTerm serializes")
    }
}

/// Left multiplication by `T_s` in `H`:
/// `T_s T_w = T_{sw}` on ascents, `u^2 T_{sw} + (u^2 - 1) T_w` on descents.
pub fn h_mul_ts(s: GeneratorId, v: &HVec) -> Result<HVec> {
    let mut out = HVec::zero();
    for (w, p) in &v.terms {
        s.check(w.group().rank())?;
        let sw = w.mul_gen_left(s)?;
        if w.has_left_descent(s) {
            accumulate(&mut out.terms, sw, p.checked_mul(&u_pow(2))?)?;
            accumulate(
                &mut out.terms,
                w.clone(),
                p.checked_mul(&poly(&[-1, 0, 1]))?,
            )?;
        } else {
            accumulate(&mut out.terms, sw, p.clone())?;
        }
    }
    Ok(out)
}

/// `T_w * v` in `H`, applying `T_s` along the canonical word of `w`, rightmost first.
pub fn h_mul_tw(w: &Element, v: &HVec) -> Result<HVec> {
    w.canonical_word()
        .iter()
        .rev()
        .try_fold(v.clone(), |acc, s| h_mul_ts(s, &acc))
}

/// `T_s` on `M`, the four-case rule:
///
/// | case                     | `T_s a_x`                              |
/// |--------------------------|----------------------------------------|
/// | `sx = xs*`, ascent       | `u a_x + (u+1) a_{sx}`                 |
/// | `sx = xs*`, descent      | `(u^2-u-1) a_x + (u^2-u) a_{sx}`       |
/// | `sx != xs*`, ascent      | `a_{sxs*}`                             |
/// | `sx != xs*`, descent     | `(u^2-1) a_x + u^2 a_{sxs*}`           |
pub fn m_act_ts(s: GeneratorId, v: &MVec) -> Result<MVec> {
    let star = &v.star;
    let mut out = MVec::zero(star);
    for (x, p) in &v.terms {
        s.check(x.group().rank())?;
        let sx = x.mul_gen_left(s)?;
        let xs = x.mul_gen_right(star.image(s))?;
        let descent = x.has_left_descent(s);
        let mut push = |key: Element, c: UPoly| -> Result<()> {
            accumulate(&mut out.terms, key, p.checked_mul(&c)?)
        };
        match (sx == xs, descent) {
            (true, false) => {
                push(x.clone(), poly(&[0, 1]))?;
                push(sx, poly(&[1, 1]))?;
            }
            (true, true) => {
                push(x.clone(), poly(&[-1, -1, 1]))?;
                push(sx, poly(&[0, -1, 1]))?;
            }
            (false, false) => {
                push(sx.mul_gen_right(star.image(s))?, UPoly::one())?;
            }
            (false, true) => {
                push(x.clone(), poly(&[-1, 0, 1]))?;
                push(sx.mul_gen_right(star.image(s))?, u_pow(2))?;
            }
        }
    }
    Ok(out)
}

/// `T_w v`, iterating [`m_act_ts`] along the canonical word of `w`, rightmost first.
pub fn m_act_tw(w: &Element, v: &MVec) -> Result<MVec> {
    w.canonical_word()
        .iter()
        .rev()
        .try_fold(v.clone(), |acc, s| m_act_ts(s, &acc))
}

/// `m_act_tw` along an arbitrary word, reduced or not.
pub fn m_act_word<I>(letters: I, v: &MVec) -> Result<MVec>
where
    I: IntoIterator<Item = GeneratorId>,
    I::IntoIter: DoubleEndedIterator,
{
    letters
        .into_iter()
        .rev()
        .try_fold(v.clone(), |acc, s| m_act_ts(s, &acc))
}

/// `T_w T_{w2}` in `H` at `u = 0`, which must be a single signed basis
/// monomial. Computed at generic `u` and then specialized.
pub fn nil_product(w: &Element, w2: &Element) -> Result<(Sign, Element)> {
    w.group().check_same(w2.group())?;
    let product = h_mul_tw(w, &HVec::basis(w2.clone()))?.specialize_u0();
    let mut iter = product.into_iter();
    match (iter.next(), iter.next()) {
        (Some((elem, 1)), None) => Ok((Sign::Plus, elem)),
        (Some((elem, -1)), None) => Ok((Sign::Minus, elem)),
        _ => Err(Error::Invariant(format!(
            "T_{w} T_{w2} at u = 0 is not a signed basis element"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{Group, Word};

    fn ti(g: &Group, st: &Star, w: &str) -> TwistedInvolution {
        TwistedInvolution::new(g.element(w).unwrap(), st.clone()).unwrap()
    }

    #[test]
    fn hecke_relations() {
        let a2 = Group::preset("A2").unwrap();
        let s1 = GeneratorId::new(1);
        let e = HVec::basis(a2.identity());
        let t1 = h_mul_ts(s1, &e).unwrap();
        assert_eq!(t1, HVec::basis(a2.element("1").unwrap()));
        let t1t1 = h_mul_ts(s1, &t1).unwrap();
        assert_eq!(t1t1.coefficient(&a2.identity()).coeffs(), &[0, 0, 1]);
        assert_eq!(
            t1t1.coefficient(&a2.element("1").unwrap()).coeffs(),
            &[-1, 0, 1]
        );
        assert!(h_mul_ts(s1, &HVec::zero()).unwrap().is_zero());
    }

    #[test]
    fn module_cases() {
        let a2 = Group::preset("A2").unwrap();
        let id = Star::identity(2);
        let s1 = GeneratorId::new(1);
        let v = m_act_ts(s1, &MVec::basis(&ti(&a2, &id, ""))).unwrap();
        assert_eq!(v.coefficient(&a2.identity()).coeffs(), &[0, 1]);
        assert_eq!(v.coefficient(&a2.element("1").unwrap()).coeffs(), &[1, 1]);
        assert_eq!(
            v.specialize_u0(),
            BTreeMap::from([(a2.element("1").unwrap(), 1)])
        );

        let v = m_act_ts(s1, &MVec::basis(&ti(&a2, &id, "1"))).unwrap();
        assert_eq!(
            v.coefficient(&a2.element("1").unwrap()).coeffs(),
            &[-1, -1, 1]
        );
        assert_eq!(v.coefficient(&a2.identity()).coeffs(), &[0, -1, 1]);
        assert_eq!(
            v.specialize_u0(),
            BTreeMap::from([(a2.element("1").unwrap(), -1)])
        );

        let sw = Star::minus_w0(&a2).unwrap();
        let v = m_act_ts(s1, &MVec::basis(&ti(&a2, &sw, ""))).unwrap();
        assert_eq!(v, MVec::basis(&ti(&a2, &sw, "12")));
    }

    #[test]
    fn specialize_hvec() {
        let a2 = Group::preset("A2").unwrap();
        let e = HVec::basis(a2.identity());
        assert_eq!(e.specialize_u0(), BTreeMap::from([(a2.identity(), 1)]));
    }

    #[test]
    fn nil_products() {
        let a2 = Group::preset("A2").unwrap();
        let el = |w: &str| a2.element(w).unwrap();
        assert_eq!(
            nil_product(&el("12"), &el("")).unwrap(),
            (Sign::Plus, el("12"))
        );
        assert_eq!(
            nil_product(&el("12"), &el("21")).unwrap(),
            (Sign::Minus, el("121"))
        );
        assert_eq!(
            nil_product(&el("1"), &el("1")).unwrap(),
            (Sign::Minus, el("1"))
        );
    }

    #[test]
    fn braid_on_identity() {
        let a2 = Group::preset("A2").unwrap();
        let id = Star::identity(2);
        let e = MVec::basis(&ti(&a2, &id, ""));
        let lhs = m_act_word(Word::from_indices([1, 2, 1]).iter().collect::<Vec<_>>(), &e).unwrap();
        let rhs = m_act_word(Word::from_indices([2, 1, 2]).iter().collect::<Vec<_>>(), &e).unwrap();
        assert_eq!(lhs, rhs);
    }
}
