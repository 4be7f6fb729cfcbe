use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::element::Element;
use super::matrix;
use super::presets;
use super::word::{GeneratorId, Word};
use crate::error::{Error, Result};

/// JSON form of a group: `{"rank": n, "cartan": [[...]], "name": optional}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

struct GroupData {
    rank: usize,
    cartan: Vec<i64>,
    /// `None` encodes `m = infinity`.
    coxeter_m: Vec<Option<u32>>,
    name: Option<String>,
}

/// A crystallographic Coxeter system given by a generalized Cartan matrix.
///
/// Cheap to clone; all clones share the same data.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// A registered preset such as `"A2"`, `"B3"` or `"affine:A2"`.
    pub fn preset(name: &str) -> Result<Group> {
        let cartan = presets::preset_cartan(name)?;
        Group::from_cartan(cartan, Some(name.to_string()))
    }

    pub fn from_cartan(rows: Vec<Vec<i64>>, name: Option<String>) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if n > usize::from(u16::MAX) {
            return Err(Error::InvalidCartan("rank too large".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidCartan(format!(
                "row {} has length {}, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        let mut coxeter_m = vec![Some(1); n * n];
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "C[{0}][{0}] must be 2",
                    i + 1
                )));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (rows[i][j], rows[j][i]);
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal C[{}][{}] = {a} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (b == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "C[{}][{}] and C[{}][{}] must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                coxeter_m[i * n + j] = match prod {
                    0 => Some(2),
                    1 => Some(3),
                    2 => Some(4),
                    3 => Some(6),
                    _ => None,
                };
            }
        }
        Ok(Group(Arc::new(GroupData {
            rank: n,
            cartan: rows.into_iter().flatten().collect(),
            coxeter_m,
            name,
        })))
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Group> {
        if spec.cartan.len() != spec.rank {
            return Err(Error::GroupSpec(format!(
                "rank {} does not match {} Cartan rows",
                spec.rank,
                spec.cartan.len()
            )));
        }
        Group::from_cartan(spec.cartan.clone(), spec.name.clone())
    }

    /// Parses the JSON group spec. Non-integer entries are rejected.
    pub fn from_json(text: &str) -> Result<Group> {
        let spec: GroupSpec =
            serde_json::from_str(text).map_err(|e| Error::GroupSpec(e.to_string()))?;
        Group::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GroupSpec {
        let n = self.rank();
        GroupSpec {
            rank: n,
            cartan: self.0.cartan.chunks(n).map(<[i64]>::to_vec).collect(),
            name: self.0.name.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    /// `C[i][j]` for 1-based generators.
    pub fn cartan(&self, i: GeneratorId, j: GeneratorId) -> i64 {
        self.0.cartan[i.idx0() * self.rank() + j.idx0()]
    }

    pub(crate) fn cartan_flat(&self) -> &[i64] {
        &self.0.cartan
    }

    /// Order of `s_i s_j`; `None` when infinite.
    pub fn coxeter_m(&self, i: GeneratorId, j: GeneratorId) -> Option<u32> {
        self.0.coxeter_m[i.idx0() * self.rank() + j.idx0()]
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (1..=self.rank()).map(GeneratorId::new)
    }

    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.cartan == other.0.cartan
    }

    pub(crate) fn check_same(&self, other: &Group) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn identity(&self) -> Element {
        let id = matrix::identity(self.rank());
        Element::from_raw(self.clone(), id.clone(), id, Word::empty(), Word::empty())
    }

    pub fn generator(&self, s: GeneratorId) -> Result<Element> {
        self.identity().mul_gen_right(s)
    }

    /// Product of generator matrices; the empty word gives the identity.
    pub fn from_word(&self, word: &Word) -> Result<Element> {
        let n = self.rank();
        let mut mat = matrix::identity(n);
        let mut inv = matrix::identity(n);
        for s in word.iter() {
            let i = s.check(n)?.idx0();
            matrix::right_mul_gen(n, self.cartan_flat(), &mut mat, i)?;
            matrix::left_mul_gen(n, self.cartan_flat(), &mut inv, i)?;
        }
        Element::from_matrices(self.clone(), mat, inv)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, self.rank())
    }

    /// Parses a word and builds its element.
    pub fn element(&self, text: &str) -> Result<Element> {
        self.from_word(&self.parse_word(text)?)
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.format(self.rank())
    }

    /// All elements of length at most `max_len`, ordered by (length, canonical word).
    ///
    /// Cost is the size of the ball, which grows exponentially for hyperbolic
    /// types and polynomially for affine ones.
    pub fn elements_up_to(&self, max_len: usize) -> Result<Vec<Element>> {
        let mut all = vec![self.identity()];
        let mut level = vec![self.identity()];
        for _ in 0..max_len {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for w in &level {
                for s in self.generators() {
                    if w.has_right_descent(s) {
                        continue;
                    }
                    let ws = w.mul_gen_right(s)?;
                    if seen.insert(ws.clone()) {
                        next.push(ws);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            all.extend(next.iter().cloned());
            level = next;
        }
        Ok(all)
    }

    /// Longest element of the parabolic subgroup generated by `subset`.
    ///
    /// Ascends by the smallest available generator of `subset` until every one
    /// is a right descent. Fails once the length exceeds `cap`.
    pub fn longest_element(&self, subset: &[GeneratorId], cap: usize) -> Result<Element> {
        for s in subset {
            s.check(self.rank())?;
        }
        let mut sorted = subset.to_vec();
        sorted.sort();
        let mut w = self.identity();
        while let Some(&s) = sorted.iter().find(|&&s| !w.has_right_descent(s)) {
            if w.length() >= cap {
                return Err(Error::ParabolicNotFinite { cap });
            }
            w = w.mul_gen_right(s)?;
        }
        Ok(w)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.name {
            Some(name) => write!(f, "Group({name})"),
            None => write!(f, "Group(rank {})", self.0.rank),
        }
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Group {}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> GeneratorId {
        GeneratorId::new(i)
    }

    #[test]
    fn coxeter_matrix_from_cartan() {
        let a2 = Group::preset("A2").unwrap();
        assert_eq!(a2.coxeter_m(g(1), g(2)), Some(3));
        let b2 = Group::preset("B2").unwrap();
        assert_eq!(b2.coxeter_m(g(1), g(2)), Some(4));
        let g2 = Group::preset("G2").unwrap();
        assert_eq!(g2.coxeter_m(g(2), g(1)), Some(6));
        let aff_a1 = Group::preset("affine:A1").unwrap();
        assert_eq!(aff_a1.rank(), 2);
        assert_eq!(aff_a1.coxeter_m(g(1), g(2)), None);
        let aff_a2 = Group::preset("affine:A2").unwrap();
        assert_eq!(aff_a2.rank(), 3);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(aff_a2.coxeter_m(g(i), g(j)), Some(3));
        }
        assert_eq!(a2.coxeter_m(g(1), g(1)), Some(1));
    }

    #[test]
    fn all_presets_build() {
        for name in presets::FINITE_PRESETS {
            Group::preset(name).unwrap();
            Group::preset(&format!("affine:{name}")).unwrap();
        }
    }

    #[test]
    fn invalid_cartan_rejected() {
        let bad_diag = vec![vec![1, -1], vec![-1, 2]];
        assert!(matches!(
            Group::from_cartan(bad_diag, None),
            Err(Error::InvalidCartan(_))
        ));
        let positive = vec![vec![2, 1], vec![-1, 2]];
        assert!(matches!(
            Group::from_cartan(positive, None),
            Err(Error::InvalidCartan(_))
        ));
        let asym_zero = vec![vec![2, 0], vec![-1, 2]];
        assert!(matches!(
            Group::from_cartan(asym_zero, None),
            Err(Error::InvalidCartan(_))
        ));
        let ragged = vec![vec![2, -1], vec![-1]];
        assert!(matches!(
            Group::from_cartan(ragged, None),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(Group::preset("A9"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn json_spec() {
        let g =
            Group::from_json(r#"{"rank": 2, "cartan": [[2,-1],[-3,2]], "name": "G2'"}"#).unwrap();
        assert_eq!(
            g.coxeter_m(GeneratorId::new(1), GeneratorId::new(2)),
            Some(6)
        );
        assert_eq!(g.name(), Some("G2'"));
        let back = Group::from_spec(&g.to_spec()).unwrap();
        assert_eq!(back, g);
        assert!(matches!(
            Group::from_json(r#"{"rank": 2, "cartan": [[2,-1.5],[-1,2]]}"#),
            Err(Error::GroupSpec(_))
        ));
        assert!(matches!(
            Group::from_json(r#"{"rank": 3, "cartan": [[2,-1],[-1,2]]}"#),
            Err(Error::GroupSpec(_))
        ));
    }

    #[test]
    fn ball_sizes() {
        let a3 = Group::preset("A3").unwrap();
        assert_eq!(a3.elements_up_to(20).unwrap().len(), 24);
        let b3 = Group::preset("B3").unwrap();
        assert_eq!(b3.elements_up_to(20).unwrap().len(), 48);
        let f4 = Group::preset("F4").unwrap();
        assert_eq!(
            f4.longest_element(&f4.generators().collect::<Vec<_>>(), 100)
                .unwrap()
                .length(),
            24
        );
        // affine A1: two elements of every positive length.
        let aff = Group::preset("affine:A1").unwrap();
        assert_eq!(aff.elements_up_to(5).unwrap().len(), 11);
    }

    #[test]
    fn longest_element_cap() {
        let aff = Group::preset("affine:A2").unwrap();
        let all: Vec<_> = aff.generators().collect();
        assert_eq!(
            aff.longest_element(&all, 30),
            Err(Error::ParabolicNotFinite { cap: 30 })
        );
        assert_eq!(aff.longest_element(&[], 30).unwrap(), aff.identity());
    }
}
