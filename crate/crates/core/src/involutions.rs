//! Twisted involutions `I_* = {w : w* = w^{-1}}`, the invariants `phi` and
//! `||x||`, the nil-Hecke module action on `M_0` in its recursive and closed
//! forms, and the map `pi(w) = w • (w*)^{-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Mul, Neg};

use serde::Serialize;

use crate::coxeter::{Element, GeneratorId, Group, Star};
use crate::demazure::demazure_product;
use crate::error::{Error, Result};

/// `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_parity(exponent: usize) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// An element `x` with `x* = x^{-1}` for its ambient star.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwistedInvolution {
    x: Element,
    star: Star,
}

impl TwistedInvolution {
    pub fn new(x: Element, star: Star) -> Result<Self> {
        if is_twisted_involution(&x, &star)? {
            Ok(TwistedInvolution { x, star })
        } else {
            Err(Error::NotTwistedInvolution(x.word_string()))
        }
    }

    /// For results that lie in `I_*` by construction.
    pub(crate) fn new_unchecked(x: Element, star: Star) -> Self {
        debug_assert!(is_twisted_involution(&x, &star).unwrap_or(false));
        TwistedInvolution { x, star }
    }

    pub fn identity(group: &Group, star: &Star) -> Result<Self> {
        star.check_rank(group)?;
        Ok(TwistedInvolution {
            x: group.identity(),
            star: star.clone(),
        })
    }

    pub fn element(&self) -> &Element {
        &self.x
    }

    pub fn into_element(self) -> Element {
        self.x
    }

    pub fn star(&self) -> &Star {
        &self.star
    }

    pub fn length(&self) -> usize {
        self.x.length()
    }
}

impl fmt::Debug for TwistedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedInvolution({:?}, {:?})", self.x, self.star)
    }
}

/// The image `±a_x` of a basis vector of `M_0` under a monomial action.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedInvolution {
    pub sign: Sign,
    pub x: TwistedInvolution,
}

impl SignedInvolution {
    pub fn positive(x: TwistedInvolution) -> Self {
        SignedInvolution {
            sign: Sign::Plus,
            x,
        }
    }
}

pub fn is_twisted_involution(a: &Element, st: &Star) -> Result<bool> {
    Ok(st.apply(a)? == a.inverse())
}

/// Memoized values of `phi`, bound to one star.
#[derive(Debug, Clone)]
pub struct PhiCache {
    star: Star,
    memo: HashMap<Element, u32>,
}

impl PhiCache {
    pub fn new(star: &Star) -> Self {
        PhiCache {
            star: star.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn star(&self) -> &Star {
        &self.star
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// One step of the `phi` recursion through the left descent `s` of `x`:
/// returns the smaller twisted involution and the increment (1 when
/// `sx = xs*`, else 0 and the step goes to `sxs*`).
fn descend(x: &Element, star: &Star, s: GeneratorId) -> Result<(Element, u32)> {
    let sx = x.mul_gen_left(s)?;
    let xs = x.mul_gen_right(star.image(s))?;
    if sx == xs {
        Ok((sx, 1))
    } else {
        Ok((sx.mul_gen_right(star.image(s))?, 0))
    }
}

/// `phi(x)`, recursing through the smallest left descent.
pub fn phi(x: &TwistedInvolution, cache: &mut PhiCache) -> Result<u32> {
    if cache.star != x.star {
        return Err(Error::StarMismatch);
    }
    phi_element(&x.x, cache)
}

fn phi_element(x: &Element, cache: &mut PhiCache) -> Result<u32> {
    if x.is_identity() {
        return Ok(0);
    }
    if let Some(&v) = cache.memo.get(x) {
        return Ok(v);
    }
    let s = x.left_descents()[0];
    let (smaller, inc) = descend(x, &cache.star.clone(), s)?;
    let v = phi_element(&smaller, cache)? + inc;
    cache.memo.insert(x.clone(), v);
    Ok(v)
}

/// `phi(x)` computed by taking the first recursion step through the given
/// left descent `s` (smaller values come from the cache).
pub fn phi_via(x: &TwistedInvolution, s: GeneratorId, cache: &mut PhiCache) -> Result<u32> {
    if cache.star != x.star {
        return Err(Error::StarMismatch);
    }
    if !x.x.has_left_descent(s) {
        return Err(Error::Precondition(format!(
            "s{s} is not a left descent of {}",
            x.x
        )));
    }
    let (smaller, inc) = descend(&x.x, &x.star, s)?;
    Ok(phi_element(&smaller, cache)? + inc)
}

/// `||x|| = (|x| + phi(x)) / 2`.
pub fn norm(x: &TwistedInvolution, cache: &mut PhiCache) -> Result<u32> {
    let total = x.length() as u32 + phi(x, cache)?;
    if !total.is_multiple_of(2) {
        return Err(Error::Invariant(format!(
            "|x| and phi(x) differ in parity at {}",
            x.x
        )));
    }
    Ok(total / 2)
}

/// `T_s` on `±a_x` in `M_0`:
/// ascent with `sx = xs*` gives `a_{sx}`, other ascents give `a_{sxs*}`,
/// descents give `-a_x`.
pub fn act_ts(s: GeneratorId, v: &SignedInvolution) -> Result<SignedInvolution> {
    let x = v.x.element();
    let star = v.x.star();
    s.check(x.group().rank())?;
    if x.has_left_descent(s) {
        return Ok(SignedInvolution {
            sign: -v.sign,
            x: v.x.clone(),
        });
    }
    let sx = x.mul_gen_left(s)?;
    let xs = x.mul_gen_right(star.image(s))?;
    let target = if sx == xs {
        sx
    } else {
        sx.mul_gen_right(star.image(s))?
    };
    Ok(SignedInvolution {
        sign: v.sign,
        x: TwistedInvolution::new_unchecked(target, star.clone()),
    })
}

/// `T_w a_x` by applying `T_s` along the canonical word, rightmost letter first.
pub fn act_tw_iterative(w: &Element, x: &TwistedInvolution) -> Result<SignedInvolution> {
    w.group().check_same(x.element().group())?;
    let mut v = SignedInvolution::positive(x.clone());
    for s in w.canonical_word().iter().rev() {
        v = act_ts(s, &v)?;
    }
    Ok(v)
}

/// `T_w a_x = (-1)^{|w| + ||x|| + ||y||} a_y` with `y = w • x • (w*)^{-1}`.
pub fn act_tw_closed(
    w: &Element,
    x: &TwistedInvolution,
    cache: &mut PhiCache,
) -> Result<SignedInvolution> {
    w.group().check_same(x.element().group())?;
    let w_star_inv = x.star().apply(w)?.inverse();
    let target = demazure_product(&demazure_product(w, x.element())?, &w_star_inv)?;
    let target = TwistedInvolution::new_unchecked(target, x.star().clone());
    let exponent = w.length() + norm(x, cache)? as usize + norm(&target, cache)? as usize;
    Ok(SignedInvolution {
        sign: Sign::from_parity(exponent),
        x: target,
    })
}

/// `pi(w) = w • (w*)^{-1}`.
pub fn pi(w: &Element, st: &Star) -> Result<TwistedInvolution> {
    let w_star_inv = st.apply(w)?.inverse();
    let image = demazure_product(w, &w_star_inv)?;
    Ok(TwistedInvolution::new_unchecked(image, st.clone()))
}

/// Which ascent rule produced an edge of the involution graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AscentKind {
    /// `sx = xs*`: `x -> sx`, `phi` grows by one.
    Commuting,
    /// `sx != xs*`: `x -> sxs*`, `phi` unchanged.
    Twisting,
}

impl AscentKind {
    pub fn label(self) -> &'static str {
        match self {
            AscentKind::Commuting => "sx",
            AscentKind::Twisting => "sxs*",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionRecord {
    pub x: TwistedInvolution,
    pub phi: u32,
}

impl InvolutionRecord {
    pub fn norm(&self) -> u32 {
        (self.x.length() as u32 + self.phi) / 2
    }

    pub fn json_line(&self) -> InvolutionLine {
        InvolutionLine {
            word: self.x.element().word_string(),
            len: self.x.length(),
            phi: self.phi,
            norm: self.norm(),
        }
    }
}

/// Serialized form: `{"word": "...", "len": k, "phi": f, "norm": n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionLine {
    pub word: String,
    pub len: usize,
    pub phi: u32,
    pub norm: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionEdge {
    pub from: usize,
    pub to: usize,
    pub generator: GeneratorId,
    pub kind: AscentKind,
}

/// `I_*` up to a length bound with the ascent edges between its members.
#[derive(Debug, Clone)]
pub struct InvolutionGraph {
    pub nodes: Vec<InvolutionRecord>,
    pub edges: Vec<InvolutionEdge>,
}

/// Builds the ascent graph of `I_*` breadth-first from the identity.
///
/// Nodes are ordered by (length, canonical word); `phi` is read off the edges
/// and checked for consistency whenever a node is reached twice.
pub fn involution_graph(group: &Group, st: &Star, max_len: usize) -> Result<InvolutionGraph> {
    st.check_rank(group)?;
    // Buckets by length: an ascent raises length by one or two.
    let mut phis: HashMap<Element, u32> = HashMap::new();
    let mut buckets: BTreeMap<usize, Vec<Element>> = BTreeMap::new();
    let mut raw_edges = Vec::new();
    phis.insert(group.identity(), 0);
    buckets.entry(0).or_default().push(group.identity());
    let mut level = 0;
    while let Some(bucket) = buckets.remove(&level) {
        for x in bucket {
            let phi_x = phis[&x];
            for s in group.generators() {
                if x.has_left_descent(s) {
                    continue;
                }
                let sx = x.mul_gen_left(s)?;
                let xs = x.mul_gen_right(st.image(s))?;
                let (y, kind, phi_y) = if sx == xs {
                    (sx, AscentKind::Commuting, phi_x + 1)
                } else {
                    (sx.mul_gen_right(st.image(s))?, AscentKind::Twisting, phi_x)
                };
                if y.length() > max_len {
                    continue;
                }
                match phis.get(&y) {
                    Some(&known) if known != phi_y => {
                        return Err(Error::Invariant(format!(
                            "phi({y}) reached as {known} and {phi_y}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        phis.insert(y.clone(), phi_y);
                        buckets.entry(y.length()).or_default().push(y.clone());
                    }
                }
                raw_edges.push((x.clone(), y, s, kind));
            }
        }
        level = match buckets.keys().next() {
            Some(&k) => k,
            None => break,
        };
    }
    let mut elements: Vec<Element> = phis.keys().cloned().collect();
    elements.sort();
    let index: HashMap<&Element, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut edges: Vec<InvolutionEdge> = raw_edges
        .iter()
        .map(|(x, y, s, kind)| InvolutionEdge {
            from: index[x],
            to: index[y],
            generator: *s,
            kind: *kind,
        })
        .collect();
    edges.sort_by_key(|e| (e.from, e.generator));
    let nodes = elements
        .iter()
        .map(|e| InvolutionRecord {
            phi: phis[e],
            x: TwistedInvolution::new_unchecked(e.clone(), st.clone()),
        })
        .collect();
    Ok(InvolutionGraph { nodes, edges })
}

/// All `x` in `I_*` with `|x| <= max_len`, with `phi`, sorted by (length, word).
pub fn enumerate_involutions(
    group: &Group,
    st: &Star,
    max_len: usize,
) -> Result<Vec<InvolutionRecord>> {
    Ok(involution_graph(group, st, max_len)?.nodes)
}

/// All `w` with `|w| <= max_len` and `pi(w) = x`, by plain breadth-first
/// search over `W`. Cost is the size of the length ball.
pub fn find_preimages(x: &TwistedInvolution, max_len: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for w in x.element().group().elements_up_to(max_len)? {
        if pi(&w, x.star())?.element() == x.element() {
            out.push(w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(name: &str, swap: bool) -> (Group, Star) {
        let g = Group::preset(name).unwrap();
        let st = if swap {
            Star::minus_w0(&g).unwrap()
        } else {
            Star::identity(g.rank())
        };
        (g, st)
    }

    fn ti(g: &Group, st: &Star, w: &str) -> TwistedInvolution {
        TwistedInvolution::new(g.element(w).unwrap(), st.clone()).unwrap()
    }

    fn gen(i: usize) -> GeneratorId {
        GeneratorId::new(i)
    }

    #[test]
    fn membership() {
        let (g, id) = setup("A2", false);
        let (_, sw) = setup("A2", true);
        assert!(is_twisted_involution(&g.element("121").unwrap(), &id).unwrap());
        assert!(is_twisted_involution(&g.element("12").unwrap(), &sw).unwrap());
        assert!(!is_twisted_involution(&g.element("1").unwrap(), &sw).unwrap());
        assert!(matches!(
            TwistedInvolution::new(g.element("1").unwrap(), sw),
            Err(Error::NotTwistedInvolution(_))
        ));
    }

    #[test]
    fn phi_and_norm_values() {
        let (g, id) = setup("A2", false);
        let mut cache = PhiCache::new(&id);
        assert_eq!(phi(&ti(&g, &id, ""), &mut cache).unwrap(), 0);
        assert_eq!(phi(&ti(&g, &id, "121"), &mut cache).unwrap(), 1);
        assert_eq!(norm(&ti(&g, &id, "121"), &mut cache).unwrap(), 2);
        assert_eq!(norm(&ti(&g, &id, ""), &mut cache).unwrap(), 0);
        let (_, sw) = setup("A2", true);
        let mut cache = PhiCache::new(&sw);
        assert_eq!(phi(&ti(&g, &sw, "12"), &mut cache).unwrap(), 0);
        assert_eq!(norm(&ti(&g, &sw, "12"), &mut cache).unwrap(), 1);
        assert_eq!(phi(&ti(&g, &id, "1"), &mut cache), Err(Error::StarMismatch));
    }

    #[test]
    fn single_generator_action() {
        let (g, id) = setup("A2", false);
        let e = SignedInvolution::positive(ti(&g, &id, ""));
        let r = act_ts(gen(1), &e).unwrap();
        assert_eq!(
            (r.sign, r.x.element().word_string()),
            (Sign::Plus, "1".to_string())
        );
        let r2 = act_ts(gen(1), &r).unwrap();
        assert_eq!(
            (r2.sign, r2.x.element().word_string()),
            (Sign::Minus, "1".to_string())
        );
        let (_, sw) = setup("A2", true);
        let e = SignedInvolution::positive(ti(&g, &sw, ""));
        let r = act_ts(gen(1), &e).unwrap();
        assert_eq!(
            (r.sign, r.x.element().word_string()),
            (Sign::Plus, "12".to_string())
        );
        assert!(matches!(
            act_ts(gen(3), &e),
            Err(Error::GeneratorOutOfRange { .. })
        ));
    }

    #[test]
    fn word_actions() {
        let (g, id) = setup("A2", false);
        let mut cache = PhiCache::new(&id);
        let e = ti(&g, &id, "");
        let w0 = ti(&g, &id, "121");
        let it = act_tw_iterative(&g.identity(), &w0).unwrap();
        assert_eq!(it, SignedInvolution::positive(w0.clone()));
        let it = act_tw_iterative(&g.element("12").unwrap(), &e).unwrap();
        assert_eq!(it, SignedInvolution::positive(w0.clone()));
        let it = act_tw_iterative(&g.element("121").unwrap(), &w0).unwrap();
        assert_eq!(it.sign, Sign::Minus);
        assert_eq!(it.x, w0);
        let cl = act_tw_closed(&g.element("12").unwrap(), &e, &mut cache).unwrap();
        assert_eq!(cl, SignedInvolution::positive(w0.clone()));
        assert_eq!(
            act_tw_closed(&g.identity(), &w0, &mut cache).unwrap(),
            SignedInvolution::positive(w0)
        );
        let (_, sw) = setup("A2", true);
        let mut cache = PhiCache::new(&sw);
        let cl = act_tw_closed(&g.element("1").unwrap(), &ti(&g, &sw, ""), &mut cache).unwrap();
        assert_eq!(cl, SignedInvolution::positive(ti(&g, &sw, "12")));
    }

    #[test]
    fn pi_values() {
        let (g, id) = setup("A2", false);
        assert!(pi(&g.identity(), &id).unwrap().element().is_identity());
        assert_eq!(
            pi(&g.element("12").unwrap(), &id)
                .unwrap()
                .element()
                .word_string(),
            "121"
        );
        assert_eq!(
            pi(&g.element("21").unwrap(), &id)
                .unwrap()
                .element()
                .word_string(),
            "121"
        );
    }

    #[test]
    fn enumeration() {
        let (g, id) = setup("A2", false);
        let recs = enumerate_involutions(&g, &id, 3).unwrap();
        let got: Vec<(String, u32)> = recs
            .iter()
            .map(|r| (r.x.element().word_string(), r.phi))
            .collect();
        assert_eq!(
            got,
            vec![
                ("".into(), 0),
                ("1".into(), 1),
                ("2".into(), 1),
                ("121".into(), 1)
            ]
        );
        let (_, sw) = setup("A2", true);
        let words: Vec<String> = enumerate_involutions(&g, &sw, 3)
            .unwrap()
            .iter()
            .map(|r| r.x.element().word_string())
            .collect();
        assert_eq!(words, vec!["", "12", "21", "121"]);
        let (a3, id3) = setup("A3", false);
        assert_eq!(enumerate_involutions(&a3, &id3, 6).unwrap().len(), 10);
        assert_eq!(enumerate_involutions(&a3, &id3, 0).unwrap().len(), 1);
    }

    #[test]
    fn preimages() {
        let (g, id) = setup("A2", false);
        assert_eq!(
            find_preimages(&ti(&g, &id, ""), 0).unwrap(),
            vec![g.identity()]
        );
        let pre = find_preimages(&ti(&g, &id, "121"), 3).unwrap();
        assert!(pre.contains(&g.element("12").unwrap()));
        assert!(pre.contains(&g.element("21").unwrap()));
        assert_eq!(
            find_preimages(&ti(&g, &id, "1"), 1).unwrap(),
            vec![g.element("1").unwrap()]
        );
    }
}
