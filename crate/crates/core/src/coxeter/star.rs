use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::element::Element;
use super::group::Group;
use super::word::{GeneratorId, Word};
use crate::error::{Error, Result};

/// Length cap used when `minus-w0` needs the longest element.
const W0_CAP: usize = 512;

/// How to build a [`Star`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarKind {
    Identity,
    /// `s_i -> w0 s_i w0`; finite groups only.
    MinusW0,
    /// 1-based images: `perm[i - 1] = sigma(i)`.
    Perm(Vec<usize>),
}

/// Grammar: `id` | `minus-w0` | `perm:1-2,3-3` | `swap:1-2`.
///
/// In the pair forms every listed pair `a-b` sends `a` to `b` and `b` to `a`;
/// unlisted generators are fixed. The rank is resolved by [`Star::build`].
impl FromStr for StarKind {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "id" | "identity" => return Ok(StarKind::Identity),
            "minus-w0" => return Ok(StarKind::MinusW0),
            _ => {}
        }
        let pairs = text
            .strip_prefix("perm:")
            .or_else(|| text.strip_prefix("swap:"))
            .ok_or_else(|| Error::InvalidStar(format!("unrecognized star `{text}`")))?;
        let mut images: Vec<(usize, usize)> = Vec::new();
        for pair in pairs.split(',').filter(|p| !p.trim().is_empty()) {
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| Error::InvalidStar(format!("expected `a-b`, found `{pair}`")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Error::InvalidStar(format!("bad generator `{t}`")))
            };
            images.push((parse(a)?, parse(b)?));
        }
        let max = images.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let mut perm: Vec<usize> = (1..=max).collect();
        let mut assigned = vec![false; max + 1];
        for (a, b) in images {
            for (from, to) in [(a, b), (b, a)] {
                if assigned[from] && perm[from - 1] != to {
                    return Err(Error::InvalidStar(format!(
                        "generator {from} assigned twice"
                    )));
                }
                assigned[from] = true;
                perm[from - 1] = to;
            }
        }
        Ok(StarKind::Perm(perm))
    }
}

/// An involutive automorphism of the Coxeter diagram, extended to the group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Star {
    /// 0-based images.
    perm: Arc<[u16]>,
}

impl Star {
    pub fn identity(rank: usize) -> Star {
        Star {
            perm: (0..rank).map(|i| i as u16).collect(),
        }
    }

    pub fn build(group: &Group, kind: &StarKind) -> Result<Star> {
        match kind {
            StarKind::Identity => Ok(Star::identity(group.rank())),
            StarKind::MinusW0 => Star::minus_w0(group),
            StarKind::Perm(images) => {
                // Short permutation lists fix the remaining generators.
                let mut full: Vec<usize> = (1..=group.rank()).collect();
                if images.len() > full.len() {
                    return Err(Error::InvalidStar(format!(
                        "permutation of length {} for rank {}",
                        images.len(),
                        group.rank()
                    )));
                }
                full[..images.len()].copy_from_slice(images);
                Star::from_perm(group, &full)
            }
        }
    }

    /// Validates that `perm` (1-based) is an involutive diagram automorphism.
    pub fn from_perm(group: &Group, perm: &[usize]) -> Result<Star> {
        let n = group.rank();
        if perm.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        if let Some(&bad) = perm.iter().find(|&&p| p == 0 || p > n) {
            return Err(Error::InvalidStar(format!(
                "image {bad} out of range 1..={n}"
            )));
        }
        for i in 0..n {
            if perm[perm[i] - 1] != i + 1 {
                return Err(Error::InvalidStar(
                    "permutation is not an involution".into(),
                ));
            }
        }
        for i in group.generators() {
            for j in group.generators() {
                let (si, sj) = (
                    GeneratorId::new(perm[i.idx0()]),
                    GeneratorId::new(perm[j.idx0()]),
                );
                if group.coxeter_m(si, sj) != group.coxeter_m(i, j) {
                    return Err(Error::InvalidStar(format!(
                        "permutation does not preserve m({i},{j})"
                    )));
                }
            }
        }
        Ok(Star {
            perm: perm.iter().map(|&p| (p - 1) as u16).collect(),
        })
    }

    /// `s_i -> w0 s_i w0`.
    pub fn minus_w0(group: &Group) -> Result<Star> {
        let all: Vec<GeneratorId> = group.generators().collect();
        let w0 = group.longest_element(&all, W0_CAP).map_err(|e| match e {
            Error::ParabolicNotFinite { .. } => {
                Error::InvalidStar("minus-w0 requires a finite group".into())
            }
            other => other,
        })?;
        let mut perm = Vec::with_capacity(all.len());
        for &s in &all {
            let conj = w0.multiply(&group.generator(s)?)?.multiply(&w0)?;
            let image = conj.canonical_word().letters();
            if image.len() != 1 {
                return Err(Error::Invariant(format!("w0 s{s} w0 is not a generator")));
            }
            perm.push(image[0].index());
        }
        Star::from_perm(group, &perm)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(i, &p)| usize::from(p) == i)
    }

    pub fn image(&self, s: GeneratorId) -> GeneratorId {
        GeneratorId::from_zero_based(usize::from(self.perm[s.idx0()]))
    }

    /// 1-based images.
    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| usize::from(p) + 1).collect()
    }

    pub fn apply_word(&self, word: &Word) -> Word {
        word.iter().map(|s| self.image(s)).collect()
    }

    /// `w -> w*`, applied letterwise to the canonical word.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.check_rank(a.group())?;
        if self.is_identity() {
            return Ok(a.clone());
        }
        a.group().from_word(&self.apply_word(a.canonical_word()))
    }

    pub(crate) fn check_rank(&self, group: &Group) -> Result<()> {
        if self.rank() != group.rank() {
            Err(Error::RankMismatch {
                expected: group.rank(),
                found: self.rank(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Star{:?}", self.perm())
    }
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        let pairs: Vec<String> = self
            .perm()
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| format!("{}-{}", i + 1, p))
            .collect();
        write!(f, "perm:{}", pairs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_w0() {
        let a2 = Group::preset("A2").unwrap();
        assert_eq!(Star::minus_w0(&a2).unwrap().perm(), vec![2, 1]);
        let a1 = Group::preset("A1").unwrap();
        assert!(Star::minus_w0(&a1).unwrap().is_identity());
        let a3 = Group::preset("A3").unwrap();
        assert_eq!(Star::minus_w0(&a3).unwrap().perm(), vec![3, 2, 1]);
        let b3 = Group::preset("B3").unwrap();
        assert!(Star::minus_w0(&b3).unwrap().is_identity());
        let aff = Group::preset("affine:A2").unwrap();
        assert!(matches!(Star::minus_w0(&aff), Err(Error::InvalidStar(_))));
    }

    #[test]
    fn explicit_perm() {
        let aff = Group::preset("affine:A2").unwrap();
        let st = Star::build(&aff, &"perm:1-2,3-3".parse().unwrap()).unwrap();
        assert_eq!(st.perm(), vec![2, 1, 3]);
        assert_eq!(
            st.apply(&aff.element("1213").unwrap()).unwrap(),
            aff.element("2123").unwrap()
        );
        assert_eq!(st.to_string(), "perm:1-2,3-3");
        let swap = Star::build(&aff, &"swap:1-2".parse().unwrap()).unwrap();
        assert_eq!(swap, st);
    }

    #[test]
    fn rejects_bad_perms() {
        let a3 = Group::preset("A3").unwrap();
        assert!(matches!(
            Star::from_perm(&a3, &[2, 1, 3]),
            Err(Error::InvalidStar(_))
        ));
        assert!(matches!(
            Star::from_perm(&a3, &[2, 3, 1]),
            Err(Error::InvalidStar(_))
        ));
        assert!(matches!(
            Star::from_perm(&a3, &[1, 2]),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(
            "swap:1".parse::<StarKind>(),
            Err(Error::InvalidStar(_))
        ));
        assert!(matches!(
            "perm:1-2,1-3".parse::<StarKind>(),
            Err(Error::InvalidStar(_))
        ));
        assert!(matches!(
            "bogus".parse::<StarKind>(),
            Err(Error::InvalidStar(_))
        ));
    }

    #[test]
    fn apply_star_basics() {
        let a2 = Group::preset("A2").unwrap();
        let st = Star::from_perm(&a2, &[2, 1]).unwrap();
        assert!(st.apply(&a2.identity()).unwrap().is_identity());
        assert_eq!(
            st.apply(&a2.element("121").unwrap()).unwrap(),
            a2.element("121").unwrap()
        );
        let b2 = Group::preset("B2").unwrap();
        assert!(matches!(
            st.apply(&Group::preset("A3").unwrap().identity()),
            Err(Error::RankMismatch { .. })
        ));
        // The swap of B2 preserves m = 4 though not the Cartan matrix.
        let swap = Star::from_perm(&b2, &[2, 1]).unwrap();
        let w = b2.element("12").unwrap();
        assert_eq!(swap.apply(&w).unwrap(), b2.element("21").unwrap());
    }
}
