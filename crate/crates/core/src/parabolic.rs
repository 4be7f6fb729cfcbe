//! Parabolic subgroups `W_J`, the sets `^JW`, `W^{J*}`, double-coset
//! representatives and the restricted map `^J pi : ^JW -> I_* ∩ ^JW^{J*}`.

use crate::coxeter::{Element, GeneratorId, Group, Star};
use crate::demazure::demazure_product;
use crate::error::{Error, Result};
use crate::involutions::{find_preimages, is_twisted_involution, pi, TwistedInvolution};

/// Default length cap when searching for `w_J`.
pub const DEFAULT_CAP: usize = 512;

/// Longest element of `W_J`; fails with [`Error::ParabolicNotFinite`] past `cap`.
pub fn longest_element(group: &Group, j: &[GeneratorId], cap: usize) -> Result<Element> {
    group.longest_element(j, cap)
}

/// A subset `J` with finite `W_J`, together with a star and the data derived
/// from both.
#[derive(Debug, Clone)]
pub struct ParabolicContext {
    group: Group,
    j: Vec<GeneratorId>,
    j_star: Vec<GeneratorId>,
    star: Star,
    w_j: Element,
    w_j_star: Element,
}

impl ParabolicContext {
    pub fn new(group: &Group, j: &[GeneratorId], star: &Star, cap: usize) -> Result<Self> {
        star.check_rank(group)?;
        let mut j: Vec<GeneratorId> = j
            .iter()
            .map(|s| s.check(group.rank()))
            .collect::<Result<_>>()?;
        j.sort();
        j.dedup();
        let mut j_star: Vec<GeneratorId> = j.iter().map(|&s| star.image(s)).collect();
        j_star.sort();
        let w_j = longest_element(group, &j, cap)?;
        let w_j_star = longest_element(group, &j_star, cap)?;
        if w_j.left_descents() != j {
            return Err(Error::Invariant("w_J has left descents outside J".into()));
        }
        if w_j.length() != w_j_star.length() {
            return Err(Error::Invariant("|w_J| differs from |w_J*|".into()));
        }
        Ok(ParabolicContext {
            group: group.clone(),
            j,
            j_star,
            star: star.clone(),
            w_j,
            w_j_star,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn j(&self) -> &[GeneratorId] {
        &self.j
    }

    pub fn j_star(&self) -> &[GeneratorId] {
        &self.j_star
    }

    pub fn star(&self) -> &Star {
        &self.star
    }

    pub fn w_j(&self) -> &Element {
        &self.w_j
    }

    pub fn w_j_star(&self) -> &Element {
        &self.w_j_star
    }

    /// `|w| = |w_J| + |w_J w|`, i.e. every `s` in `J` is a left descent.
    pub fn is_in_jw(&self, w: &Element) -> bool {
        self.j.iter().all(|&s| w.has_left_descent(s))
    }

    /// `|w| = |w_{J*}| + |w w_{J*}|`.
    pub fn is_in_wj_star(&self, w: &Element) -> bool {
        self.j_star.iter().all(|&s| w.has_right_descent(s))
    }

    pub fn is_in_jwj_star(&self, w: &Element) -> bool {
        self.is_in_jw(w) && self.is_in_wj_star(w)
    }

    /// Minimal-length element of `W_J x W_{J*}`: strip left descents in `J`
    /// (smallest first), then right descents in `J*`, until none remain.
    pub fn min_double_coset_rep(&self, x: &Element) -> Result<Element> {
        self.group.check_same(x.group())?;
        let mut z = x.clone();
        loop {
            if let Some(&s) = self.j.iter().find(|&&s| z.has_left_descent(s)) {
                z = z.mul_gen_left(s)?;
            } else if let Some(&s) = self.j_star.iter().find(|&&s| z.has_right_descent(s)) {
                z = z.mul_gen_right(s)?;
            } else {
                return Ok(z);
            }
        }
    }

    /// `w_J • z • w_{J*}`, the maximal-length element of `W_J z W_{J*}`.
    pub fn max_double_coset_rep(&self, z: &Element) -> Result<Element> {
        demazure_product(&self.w_j, &demazure_product(z, &self.w_j_star)?)
    }

    /// `pi(w)` for `w` in `^JW`; the image is checked to lie in `I_* ∩ ^JW^{J*}`.
    pub fn jpi(&self, w: &Element) -> Result<TwistedInvolution> {
        self.group.check_same(w.group())?;
        if !self.is_in_jw(w) {
            return Err(Error::Precondition(format!("`{w}` is not in ^JW")));
        }
        let x = pi(w, &self.star)?;
        if !self.is_in_jwj_star(x.element()) || !is_twisted_involution(x.element(), &self.star)? {
            return Err(Error::Invariant(format!(
                "^J pi({w}) = {} left I_* ∩ ^JW^J*",
                x.element()
            )));
        }
        Ok(x)
    }

    /// A preimage of `x` under `^J pi`, built as `w_J • e` where `pi(e)` is the
    /// minimal double-coset representative of `x`. `e` is searched up to `max_len`.
    pub fn jpi_preimage(&self, x: &TwistedInvolution, max_len: usize) -> Result<Element> {
        if x.star() != &self.star {
            return Err(Error::Precondition(
                "star differs from the context star".into(),
            ));
        }
        if !self.is_in_jwj_star(x.element()) {
            return Err(Error::Precondition(format!(
                "`{}` is not in ^JW^J*",
                x.element()
            )));
        }
        let z = self.min_double_coset_rep(x.element())?;
        let z = TwistedInvolution::new(z, self.star.clone())
            .map_err(|_| Error::Invariant("minimal double-coset representative left I_*".into()))?;
        let e = find_preimages(&z, max_len)?
            .into_iter()
            .next()
            .ok_or(Error::PreimageNotFound { max_len })?;
        let w = demazure_product(&self.w_j, &e)?;
        let image = self.jpi(&w)?;
        if image.element() != x.element() {
            return Err(Error::Invariant(format!(
                "^J pi({w}) = {} instead of {}",
                image.element(),
                x.element()
            )));
        }
        Ok(w)
    }
}
