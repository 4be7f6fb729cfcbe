//! Translations in an irreducible affine Weyl group, the distinguished star,
//! the bijections `t <-> [t]` and `t <-> w_J t`, the induced map
//! `pi' : T -> T_dom`, and the closed-form tables for affine `A_1` and `A_2`.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::coxeter::presets::{self, AFFINE_PREFIX};
use crate::coxeter::{Element, GeneratorId, Group, Star, Word};
use crate::error::{Error, Result};
use crate::parabolic::{ParabolicContext, DEFAULT_CAP};

/// An affine Weyl group with `J` = the finite nodes, the projection onto the
/// finite Weyl group, and the star that is `-w0` on `J` and fixes the affine node.
#[derive(Debug, Clone)]
pub struct AffineContext {
    finite_name: String,
    group: Group,
    finite: Group,
    /// `proj[i]` is the image of `s_{i+1}` in the finite group.
    proj: Vec<Element>,
    parabolic: ParabolicContext,
}

impl AffineContext {
    /// Builds the context for `affine:<finite_preset>` and verifies that the
    /// star satisfies `w* = w_J w w_J` on `W_J` and `t* = w_J t^{-1} w_J`
    /// on translations.
    pub fn new(finite_preset: &str) -> Result<Self> {
        let finite_preset = finite_preset
            .strip_prefix(AFFINE_PREFIX)
            .unwrap_or(finite_preset);
        let finite_cartan = presets::finite_cartan(finite_preset)
            .ok_or_else(|| Error::UnknownPreset(finite_preset.to_string()))?;
        let finite = Group::preset(finite_preset)?;
        let group = Group::preset(&format!("{AFFINE_PREFIX}{finite_preset}"))?;
        let n = finite.rank();

        let theta = presets::highest_root(&finite_cartan);
        let w = finite.from_word(&Word::from_indices(theta.word.iter().map(|a| a + 1)))?;
        let s_theta = w
            .multiply(&finite.generator(GeneratorId::from_zero_based(theta.base))?)?
            .multiply(&w.inverse())?;
        let mut proj: Vec<Element> = finite
            .generators()
            .map(|s| finite.generator(s))
            .collect::<Result<_>>()?;
        proj.push(s_theta);

        let mut perm = Star::minus_w0(&finite)?.perm();
        perm.push(n + 1);
        let star = Star::from_perm(&group, &perm)?;
        let j: Vec<GeneratorId> = finite.generators().collect();
        let parabolic = ParabolicContext::new(&group, &j, &star, DEFAULT_CAP)?;

        let ctx = AffineContext {
            finite_name: finite_preset.to_string(),
            group,
            finite,
            proj,
            parabolic,
        };
        ctx.verify_projection()?;
        ctx.verify_star()?;
        Ok(ctx)
    }

    /// `proj` must respect `s^2 = 1` and every finite braid relation.
    fn verify_projection(&self) -> Result<()> {
        for i in self.group.generators() {
            for j in self.group.generators() {
                let Some(m) = self.group.coxeter_m(i, j) else {
                    continue;
                };
                let pair = self.proj[i.idx0()].multiply(&self.proj[j.idx0()])?;
                let mut acc = self.finite.identity();
                for _ in 0..m {
                    acc = acc.multiply(&pair)?;
                }
                if !acc.is_identity() {
                    return Err(Error::Invariant(format!(
                        "projection violates (s{i} s{j})^{m} = 1"
                    )));
                }
            }
        }
        Ok(())
    }

    fn verify_star(&self) -> Result<()> {
        let w_j = self.w_j();
        let star = self.star();
        for &s in self.j() {
            let gen = self.group.generator(s)?;
            if star.apply(&gen)? != w_j.multiply(&gen)?.multiply(w_j)? {
                return Err(Error::Invariant(format!("s{s}* differs from w_J s{s} w_J")));
            }
        }
        for t in self.translation_generators()? {
            if !self.is_translation(&t)? {
                return Err(Error::Invariant(format!("`{t}` is not a translation")));
            }
            if star.apply(&t)? != w_j.multiply(&t.inverse())?.multiply(w_j)? {
                return Err(Error::Invariant(format!(
                    "t* differs from w_J t^-1 w_J at {t}"
                )));
            }
        }
        Ok(())
    }

    /// `s_0 s_theta` and its conjugates under `W_J`; they generate `T`.
    pub fn translation_generators(&self) -> Result<Vec<Element>> {
        let affine = GeneratorId::new(self.group.rank());
        let t0 = self
            .group
            .generator(affine)?
            .multiply(&self.lift(&self.proj[affine.idx0()])?)?;
        let mut seen = HashSet::from([t0.clone()]);
        let mut queue = VecDeque::from([t0]);
        let mut out = Vec::new();
        while let Some(t) = queue.pop_front() {
            for &s in self.j() {
                let c = t.mul_gen_left(s)?.mul_gen_right(s)?;
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
            out.push(t);
        }
        out.sort();
        Ok(out)
    }

    pub fn finite_name(&self) -> &str {
        &self.finite_name
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn finite_group(&self) -> &Group {
        &self.finite
    }

    pub fn j(&self) -> &[GeneratorId] {
        self.parabolic.j()
    }

    pub fn star(&self) -> &Star {
        self.parabolic.star()
    }

    pub fn w_j(&self) -> &Element {
        self.parabolic.w_j()
    }

    pub fn parabolic(&self) -> &ParabolicContext {
        &self.parabolic
    }

    /// Image of a generator in the finite Weyl group.
    pub fn proj(&self, s: GeneratorId) -> Result<&Element> {
        s.check(self.group.rank())?;
        Ok(&self.proj[s.idx0()])
    }

    /// The element of `W_J` with the same word as a finite-group element.
    pub fn lift(&self, u: &Element) -> Result<Element> {
        self.finite.check_same(u.group())?;
        self.group.from_word(u.canonical_word())
    }

    /// Image of `w` in the finite Weyl group; translations form its kernel.
    pub fn linear_part(&self, w: &Element) -> Result<Element> {
        self.group.check_same(w.group())?;
        w.canonical_word()
            .iter()
            .try_fold(self.finite.identity(), |acc, s| {
                acc.multiply(&self.proj[s.idx0()])
            })
    }

    pub fn is_translation(&self, w: &Element) -> Result<bool> {
        Ok(self.linear_part(w)?.is_identity())
    }

    /// Translation with `|w_J t| = |w_J| + |t|`.
    pub fn is_dominant_translation(&self, w: &Element) -> Result<bool> {
        Ok(self.is_translation(w)?
            && self.w_j().multiply(w)?.length() == self.w_j().length() + w.length())
    }

    /// `[t]`: the element of `W_J t` lying in `^JW`.
    pub fn coset_rep(&self, t: &Element) -> Result<Element> {
        if !self.is_translation(t)? {
            return Err(Error::Precondition(format!("`{t}` is not a translation")));
        }
        let mut v = t.clone();
        while let Some(&s) = self.j().iter().find(|&&s| !v.has_left_descent(s)) {
            v = v.mul_gen_left(s)?;
        }
        Ok(v)
    }

    /// The unique translation in `W_J v`.
    pub fn translation_of(&self, v: &Element) -> Result<Element> {
        let u = self.lift(&self.linear_part(v)?)?;
        let t = u.inverse().multiply(v)?;
        debug_assert!(self.is_translation(&t)?);
        Ok(t)
    }

    /// `pi'(t)`: `^J pi` transported through `t -> [t]` and `t' -> w_J t'`.
    pub fn pi_prime(&self, t: &Element) -> Result<Element> {
        let v = self.coset_rep(t)?;
        let y = self.parabolic.jpi(&v)?;
        let image = self.w_j().multiply(y.element())?;
        if !self.is_dominant_translation(&image)? {
            return Err(Error::Invariant(format!(
                "pi'({t}) = {image} is not dominant"
            )));
        }
        Ok(image)
    }

    /// Named generators of `T_dom` for affine `A_1` and `A_2`.
    pub fn translation_basis(&self) -> Option<TranslationBasis> {
        let words: &[(&str, &str)] = match self.finite_name.as_str() {
            "A1" => &[("A", "21")],
            "A2" => &[("A", "3121"), ("B", "321321"), ("C", "312312")],
            _ => return None,
        };
        let generators = words
            .iter()
            .map(|&(name, w)| Ok((name.to_string(), self.group.element(w)?)))
            .collect::<Result<_>>()
            .ok()?;
        Some(TranslationBasis { generators })
    }

    /// Some exponent tuple with `t = A^m B^n C^p` (or `A^m`), all exponents
    /// at most `bound`. Not unique in affine `A_2`, where `A^3 = BC`.
    pub fn factor_translation(&self, t: &Element, bound: u32) -> Result<Vec<u32>> {
        let basis = self.translation_basis().ok_or_else(|| {
            Error::Precondition(format!("no translation basis for {}", self.finite_name))
        })?;
        let powers: Vec<Vec<Element>> = basis
            .generators
            .iter()
            .map(|(_, b)| {
                let mut p = vec![self.group.identity()];
                for k in 0..bound as usize {
                    let next = p[k].multiply(b)?;
                    p.push(next);
                }
                Ok(p)
            })
            .collect::<Result<_>>()?;
        let k = powers.len();
        let mut exps = vec![0u32; k];
        loop {
            let mut prod = self.group.identity();
            for (i, &e) in exps.iter().enumerate() {
                prod = prod.multiply(&powers[i][e as usize])?;
            }
            if &prod == t {
                return Ok(exps);
            }
            // Odometer over [0, bound]^k.
            let mut i = k;
            loop {
                if i == 0 {
                    return Err(Error::NoFactorization { bound });
                }
                i -= 1;
                if exps[i] < bound {
                    exps[i] += 1;
                    break;
                }
                exps[i] = 0;
            }
        }
    }

    /// `A^m B^n C^p` for the given exponents.
    pub fn basis_power(&self, exponents: &[u32]) -> Result<Element> {
        let basis = self.translation_basis().ok_or_else(|| {
            Error::Precondition(format!("no translation basis for {}", self.finite_name))
        })?;
        if exponents.len() != basis.generators.len() {
            return Err(Error::Precondition(format!(
                "expected {} exponents, found {}",
                basis.generators.len(),
                exponents.len()
            )));
        }
        let mut acc = self.group.identity();
        for ((_, b), &e) in basis.generators.iter().zip(exponents) {
            for _ in 0..e {
                acc = acc.multiply(b)?;
            }
        }
        Ok(acc)
    }
}

/// Named dominant translations generating `T_dom` as a monoid.
#[derive(Debug, Clone)]
pub struct TranslationBasis {
    pub generators: Vec<(String, Element)>,
}

/// One coset family of `^JW`: `w_J t suffix`, and how `^J pi` acts on it.
struct CosetForm {
    suffix: &'static str,
    /// Expected exponents are `2 * input + shift`.
    shift: &'static [u32],
}

const A1_FORMS: &[CosetForm] = &[
    CosetForm {
        suffix: "",
        shift: &[0],
    },
    CosetForm {
        suffix: "2",
        shift: &[1],
    },
];

const A2_FORMS: &[CosetForm] = &[
    CosetForm {
        suffix: "",
        shift: &[0, 0, 0],
    },
    CosetForm {
        suffix: "3",
        shift: &[1, 0, 0],
    },
    CosetForm {
        suffix: "31",
        shift: &[0, 0, 1],
    },
    CosetForm {
        suffix: "32",
        shift: &[0, 1, 0],
    },
    CosetForm {
        suffix: "312",
        shift: &[2, 0, 0],
    },
    CosetForm {
        suffix: "321",
        shift: &[2, 0, 0],
    },
];

/// A row of the `^J pi` table for affine `A_1` / `A_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Symbolic form such as `121t31`.
    pub form: String,
    pub exponents: Vec<u32>,
    pub input: String,
    pub jpi: String,
    pub expected: String,
    pub expected_exponents: Vec<u32>,
    pub matches: bool,
}

/// Computes `^J pi(w_J t suffix)` for every `t = A^m (B^n C^p)` with
/// exponents up to `max_exponent`, next to the closed-form prediction
/// `w_J A^{2m + .} B^{2n + .} C^{2p + .}`. Comparison is by element equality.
pub fn affine_table(ctx: &AffineContext, max_exponent: u32) -> Result<Vec<TableRow>> {
    let (forms, prefix) = match ctx.finite_name() {
        "A1" => (A1_FORMS, "1"),
        "A2" => (A2_FORMS, "121"),
        other => {
            return Err(Error::Precondition(format!(
                "no closed-form table for affine {other}"
            )))
        }
    };
    let k = forms[0].shift.len();
    let total = (max_exponent as usize + 1).pow(k as u32);
    let mut rows = Vec::with_capacity(total * forms.len());
    for idx in 0..total {
        // Lexicographic order over [0, max_exponent]^k.
        let mut exps = vec![0u32; k];
        let mut rest = idx;
        for slot in exps.iter_mut().rev() {
            *slot = (rest % (max_exponent as usize + 1)) as u32;
            rest /= max_exponent as usize + 1;
        }
        let t = ctx.basis_power(&exps)?;
        for form in forms {
            let suffix = ctx.group().element(form.suffix)?;
            let input = ctx.w_j().multiply(&t)?.multiply(&suffix)?;
            let image = ctx.parabolic().jpi(&input)?;
            let expected_exponents: Vec<u32> = exps
                .iter()
                .zip(form.shift)
                .map(|(e, s)| 2 * e + s)
                .collect();
            let expected = ctx.w_j().multiply(&ctx.basis_power(&expected_exponents)?)?;
            rows.push(TableRow {
                form: format!("{prefix}t{}", form.suffix),
                exponents: exps.clone(),
                input: input.word_string(),
                jpi: image.element().word_string(),
                expected: expected.word_string(),
                expected_exponents,
                matches: image.element() == &expected,
            });
        }
    }
    Ok(rows)
}
