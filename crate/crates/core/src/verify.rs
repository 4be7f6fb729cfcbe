//! Named property suites checked exhaustively at fixed bounds, with a
//! machine-readable report.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{affine_table, AffineContext};
use crate::coxeter::{Element, GeneratorId, Group, Star, StarKind, Word};
use crate::demazure::{
    demazure_fold, demazure_product, demazure_product_from_left, is_final_segment,
    is_initial_segment,
};
use crate::error::{Error, Result};
use crate::hecke::{m_act_ts, m_act_tw, m_act_word, nil_product, MVec, UPoly};
use crate::involutions::{
    act_tw_closed, act_tw_iterative, enumerate_involutions, is_twisted_involution, phi, phi_via,
    pi, PhiCache, Sign, SignedInvolution, TwistedInvolution,
};
use crate::parabolic::{ParabolicContext, DEFAULT_CAP};

/// Suite names accepted by [`run_suite`], besides `all`.
pub const SUITES: &[&str] = &[
    "coxeter",
    "monoid",
    "star",
    "phi",
    "closed-form",
    "oracle-u0",
    "nil-sign",
    "surjectivity",
    "parabolic",
    "affine",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Replaces every length bound of the selected suites.
    pub max_len: Option<usize>,
    /// Seed for the sampled checks.
    pub seed: u64,
    /// Number of sampled pairs or triples in the sampled checks.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_len: None,
            seed: 0,
            samples: 1000,
        }
    }
}

impl VerifyOptions {
    fn bound(&self, default: usize) -> usize {
        self.max_len.unwrap_or(default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("Report serializes")
    }
}

/// Counts cases and keeps the first failure of one named check.
pub struct Tally {
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(detail());
        }
    }

    fn fail(&mut self, detail: String) {
        self.failures += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(detail);
        }
    }
}

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn new() -> Self {
        Runner { checks: Vec::new() }
    }

    /// Runs one check. An error aborts the check and counts as a failure.
    fn check(&mut self, name: impl Into<String>, body: impl FnOnce(&mut Tally) -> Result<()>) {
        let mut tally = Tally::new();
        if let Err(e) = body(&mut tally) {
            tally.cases += 1;
            tally.fail(format!("error: {e}"));
        }
        self.checks.push(CheckResult {
            name: name.into(),
            cases: tally.cases,
            failures: tally.failures,
            first_failure: tally.first_failure,
        });
    }

    fn finish(self, suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            passed: self.checks.iter().all(CheckResult::passed),
            checks: self.checks,
        }
    }
}

/// Runs a suite by name; `all` runs every suite and prefixes check names.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<Report> {
    if name == "all" {
        let mut checks = Vec::new();
        for suite in SUITES {
            for mut c in run_suite(suite, opts)?.checks {
                c.name = format!("{suite}/{}", c.name);
                checks.push(c);
            }
        }
        return Ok(Report {
            suite: "all".into(),
            passed: checks.iter().all(CheckResult::passed),
            checks,
        });
    }
    let mut r = Runner::new();
    match name {
        "coxeter" => coxeter_suite(&mut r, opts),
        "monoid" => monoid_suite(&mut r, opts),
        "star" => star_suite(&mut r, opts),
        "phi" => phi_suite(&mut r, opts),
        "closed-form" => closed_form_suite(&mut r, opts),
        "oracle-u0" => oracle_suite(&mut r, opts),
        "nil-sign" => nil_sign_suite(&mut r, opts),
        "surjectivity" => surjectivity_suite(&mut r, opts),
        "parabolic" => parabolic_suite(&mut r, opts),
        "affine" => affine_suite(&mut r, opts),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(r.finish(name))
}

fn group(name: &str) -> Result<Group> {
    Group::preset(name)
}

fn star(g: &Group, spec: &str) -> Result<Star> {
    Star::build(g, &spec.parse::<StarKind>()?)
}

/// Every involutive diagram automorphism of `g`.
pub fn all_stars(g: &Group) -> Vec<Star> {
    fn perms(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                perms(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut all = Vec::new();
    perms(&mut Vec::new(), g.rank(), &mut all);
    all.iter()
        .filter_map(|p| Star::from_perm(g, p).ok())
        .collect()
}

fn involutions(g: &Group, st: &Star, max_len: usize) -> Result<Vec<TwistedInvolution>> {
    Ok(enumerate_involutions(g, st, max_len)?
        .into_iter()
        .map(|r| r.x)
        .collect())
}

/// Elements of `g` grouped by canonical word, brute force over all words.
fn brute_force_lengths(g: &Group, max_len: usize) -> Result<HashMap<Element, usize>> {
    let mut best: HashMap<Element, usize> = HashMap::new();
    let mut frontier = vec![(g.identity(), 0usize)];
    best.insert(g.identity(), 0);
    for len in 1..=max_len {
        let mut next = Vec::new();
        for (w, _) in &frontier {
            for s in g.generators() {
                let v = w.mul_gen_right(s)?;
                best.entry(v.clone()).or_insert(len);
                next.push((v, len));
            }
        }
        frontier = next;
    }
    Ok(best)
}

fn coxeter_suite(r: &mut Runner, o: &VerifyOptions) {
    for name in ["A2", "B2"] {
        let l = o.bound(6);
        r.check(
            format!("length equals brute-force word length {name} |a|<={l}"),
            |t| {
                let g = group(name)?;
                let brute = brute_force_lengths(&g, l)?;
                for (w, &len) in &brute {
                    t.expect(w.length() == len, || {
                        format!("{w}: {} vs {len}", w.length())
                    });
                }
                Ok(())
            },
        );
        r.check(
            format!("descents match length change {name} |a|<={l}"),
            |t| {
                let g = group(name)?;
                for a in g.elements_up_to(l)? {
                    for s in g.generators() {
                        let sa = a.mul_gen_left(s)?;
                        let down = sa.length() + 1 == a.length();
                        let up = sa.length() == a.length() + 1;
                        t.expect(up != down && down == a.has_left_descent(s), || {
                            format!("{a}, s{s}")
                        });
                        let as_ = a.mul_gen_right(s)?;
                        let down = as_.length() + 1 == a.length();
                        t.expect(down == a.has_right_descent(s), || {
                            format!("{a}, s{s} right")
                        });
                    }
                }
                Ok(())
            },
        );
    }
    for name in ["A2", "B2", "G2", "affine:A2"] {
        let l = o.bound(8);
        r.check(format!("root sign coherence {name} |a|<={l}"), |t| {
            for a in group(name)?.elements_up_to(l)? {
                t.expect(a.roots_sign_coherent(), || a.to_string());
            }
            Ok(())
        });
    }
    for name in ["A3", "B2", "G2", "affine:A1", "affine:A2"] {
        let l = o.bound(4);
        r.check(
            format!("length subadditive with parity {name} |a|,|b|<={l}"),
            |t| {
                let els = group(name)?.elements_up_to(l)?;
                for a in &els {
                    for b in &els {
                        let ab = a.multiply(b)?.length();
                        let sum = a.length() + b.length();
                        t.expect(ab <= sum && (sum - ab) % 2 == 0, || format!("{a} * {b}"));
                    }
                }
                Ok(())
            },
        );
        r.check(
            format!("canonical word is a normal form {name} |a|<={}", 2 * l),
            |t| {
                let g = group(name)?;
                for a in g.elements_up_to(2 * l)? {
                    let again = g.from_word(a.canonical_word())?;
                    t.expect(
                        again == a && again.canonical_word() == a.canonical_word(),
                        || a.to_string(),
                    );
                }
                Ok(())
            },
        );
    }
}

fn monoid_suite(r: &mut Runner, o: &VerifyOptions) {
    for name in ["A2", "B2"] {
        let l = o.bound(4);
        r.check(format!("associativity {name} |a|,|b|,|c|<={l}"), |t| {
            let els = group(name)?.elements_up_to(l)?;
            for a in &els {
                for b in &els {
                    let ab = demazure_product(a, b)?;
                    for c in &els {
                        let lhs = demazure_product(&ab, c)?;
                        let rhs = demazure_product(a, &demazure_product(b, c)?)?;
                        t.expect(lhs == rhs, || format!("({a}.{b}).{c}"));
                    }
                }
            }
            Ok(())
        });
        r.check(format!("inverse law {name} |w|,|w'|<={l}"), |t| {
            let els = group(name)?.elements_up_to(l)?;
            for a in &els {
                for b in &els {
                    let lhs = demazure_product(a, b)?.inverse();
                    let rhs = demazure_product(&b.inverse(), &a.inverse())?;
                    t.expect(lhs == rhs, || format!("{a}, {b}"));
                }
            }
            Ok(())
        });
        r.check(
            format!("star law, every star of {name} |w|,|w'|<={l}"),
            |t| {
                let g = group(name)?;
                let els = g.elements_up_to(l)?;
                for st in all_stars(&g) {
                    for a in &els {
                        for b in &els {
                            let lhs = st.apply(&demazure_product(a, b)?)?;
                            let rhs = demazure_product(&st.apply(a)?, &st.apply(b)?)?;
                            t.expect(lhs == rhs, || format!("{st}: {a}, {b}"));
                        }
                    }
                }
                Ok(())
            },
        );
        r.check(
            format!("initial and final segments {name} |w|,|w'|<={l}"),
            |t| {
                let els = group(name)?.elements_up_to(l)?;
                for a in &els {
                    for b in &els {
                        let p = demazure_product(a, b)?;
                        t.expect(
                            is_initial_segment(a, &p)? && is_final_segment(b, &p)?,
                            || format!("{a}, {b}"),
                        );
                    }
                }
                Ok(())
            },
        );
        let lr = o.bound(5);
        r.check(
            format!("reduced-word independence {name} |w2|<={lr}"),
            |t| {
                let els = group(name)?.elements_up_to(lr)?;
                for w2 in &els {
                    let words = w2.reduced_words()?;
                    for w in &els {
                        let expected = demazure_product(w, w2)?;
                        for word in &words {
                            let got = demazure_fold(w, word.iter())?;
                            t.expect(got == expected, || format!("{w} . {word:?}"));
                        }
                    }
                }
                Ok(())
            },
        );
    }
    let la = o.bound(6);
    r.check(
        format!("sampled associativity and laws affine:A2 |a|,|b|,|c|<={la}"),
        |t| {
            let g = group("affine:A2")?;
            let els = g.elements_up_to(la)?;
            let stars = all_stars(&g);
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            for _ in 0..o.samples {
                let (a, b, c) = (
                    pick(&els, &mut rng),
                    pick(&els, &mut rng),
                    pick(&els, &mut rng),
                );
                let ab = demazure_product(a, b)?;
                let lhs = demazure_product(&ab, c)?;
                let rhs = demazure_product(a, &demazure_product(b, c)?)?;
                t.expect(lhs == rhs, || format!("({a}.{b}).{c}"));
                let inv = demazure_product(&b.inverse(), &a.inverse())?;
                t.expect(ab.inverse() == inv, || format!("inverse law {a}, {b}"));
                for st in &stars {
                    let rhs = demazure_product(&st.apply(a)?, &st.apply(b)?)?;
                    t.expect(st.apply(&ab)? == rhs, || format!("star law {st}: {a}, {b}"));
                }
                t.expect(
                    is_initial_segment(a, &ab)? && is_final_segment(b, &ab)?,
                    || format!("segments {a}, {b}"),
                );
            }
            Ok(())
        },
    );
    for name in ["A3", "B3", "G2", "affine:A2"] {
        r.check(format!("s.s = s {name}"), |t| {
            let g = group(name)?;
            for s in g.generators() {
                let e = g.generator(s)?;
                t.expect(demazure_product(&e, &e)? == e, || format!("s{s}"));
            }
            Ok(())
        });
        let l = o.bound(3);
        r.check(
            format!("left and right folds agree {name} |w|,|w'|<={l}"),
            |t| {
                let els = group(name)?.elements_up_to(l)?;
                for a in &els {
                    for b in &els {
                        let lhs = demazure_product(a, b)?;
                        let rhs = demazure_product_from_left(a, b)?;
                        t.expect(lhs == rhs, || format!("{a}, {b}"));
                    }
                }
                Ok(())
            },
        );
    }
}

fn pick<'a>(els: &'a [Element], rng: &mut ChaCha8Rng) -> &'a Element {
    els.choose(rng).expect("nonempty element list")
}

fn star_suite(r: &mut Runner, o: &VerifyOptions) {
    for name in ["A2", "A3", "B2", "G2", "affine:A1", "affine:A2"] {
        let l = o.bound(4);
        r.check(
            format!("star preserves length and products {name} |a|,|b|<={l}"),
            |t| {
                let g = group(name)?;
                let els = g.elements_up_to(l)?;
                for st in all_stars(&g) {
                    for a in &els {
                        let sa = st.apply(a)?;
                        t.expect(sa.length() == a.length(), || format!("{st}: |{a}*|"));
                        t.expect(&st.apply(&sa)? == a, || format!("{st}: {a}** != {a}"));
                        for b in &els {
                            let lhs = st.apply(&a.multiply(b)?)?;
                            let rhs = sa.multiply(&st.apply(b)?)?;
                            t.expect(lhs == rhs, || format!("{st}: ({a}{b})*"));
                        }
                    }
                }
                Ok(())
            },
        );
    }
    for name in ["A2", "A3", "A4", "B3", "D4", "G2", "F4"] {
        r.check(format!("minus-w0 is conjugation by w0 {name}"), |t| {
            let g = group(name)?;
            let all: Vec<GeneratorId> = g.generators().collect();
            let w0 = g.longest_element(&all, DEFAULT_CAP)?;
            let st = star(&g, "minus-w0")?;
            for s in g.generators() {
                let conj = w0.multiply(&g.generator(s)?)?.multiply(&w0)?;
                t.expect(conj == g.generator(st.image(s))?, || format!("s{s}"));
            }
            Ok(())
        });
    }
}

fn finite_star_cases() -> Vec<(&'static str, &'static str)> {
    let mut v = Vec::new();
    for name in ["A2", "A3", "B2", "B3"] {
        v.push((name, "id"));
        v.push((name, "minus-w0"));
    }
    v
}

fn phi_suite(r: &mut Runner, o: &VerifyOptions) {
    let l = o.bound(8);
    for (name, st_spec) in finite_star_cases() {
        r.check(
            format!("|x| = phi(x) mod 2 {name} {st_spec} |x|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let mut cache = PhiCache::new(&st);
                for x in involutions(&g, &st, l)? {
                    let f = phi(&x, &mut cache)? as usize;
                    t.expect(f % 2 == x.length() % 2, || {
                        format!("{}: phi = {f}", x.element())
                    });
                }
                Ok(())
            },
        );
        r.check(
            format!("phi independent of descent {name} {st_spec} |x|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let mut cache = PhiCache::new(&st);
                for x in involutions(&g, &st, l)? {
                    let f = phi(&x, &mut cache)?;
                    for s in x.element().left_descents() {
                        let via = phi_via(&x, s, &mut cache)?;
                        t.expect(via == f, || {
                            format!("{}: via s{s} {via} vs {f}", x.element())
                        });
                    }
                }
                Ok(())
            },
        );
        r.check(
            format!("recursive phi matches graph labels {name} {st_spec} |x|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let mut cache = PhiCache::new(&st);
                for rec in enumerate_involutions(&g, &st, l)? {
                    let f = phi(&rec.x, &mut cache)?;
                    t.expect(f == rec.phi, || {
                        format!("{}: {f} vs {}", rec.x.element(), rec.phi)
                    });
                }
                Ok(())
            },
        );
    }
}

fn signed_eq(a: &SignedInvolution, b: &SignedInvolution) -> bool {
    a.sign == b.sign && a.x.element() == b.x.element()
}

fn closed_form_cases(o: &VerifyOptions) -> Vec<(&'static str, &'static str, usize, usize)> {
    let (w, x) = (o.bound(6), o.bound(6));
    vec![
        ("A3", "id", w, x),
        ("A3", "minus-w0", w, x),
        ("B3", "id", w, x),
        ("G2", "id", w, x),
        ("affine:A2", "perm:1-2", o.bound(5), x),
    ]
}

fn closed_form_suite(r: &mut Runner, o: &VerifyOptions) {
    for (name, st_spec, lw, lx) in closed_form_cases(o) {
        r.check(
            format!("closed form = iterative {name} {st_spec} |w|<={lw} |x|<={lx}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let mut cache = PhiCache::new(&st);
                let ws = g.elements_up_to(lw)?;
                for x in involutions(&g, &st, lx)? {
                    for w in &ws {
                        let a = act_tw_iterative(w, &x)?;
                        let b = act_tw_closed(w, &x, &mut cache)?;
                        t.expect(signed_eq(&a, &b), || {
                            format!("w = {w}, x = {}", x.element())
                        });
                    }
                }
                Ok(())
            },
        );
        r.check(format!("pi lands in I_* {name} {st_spec} |w|<={lw}"), |t| {
            let g = group(name)?;
            let st = star(&g, st_spec)?;
            for w in g.elements_up_to(lw)? {
                let y = pi(&w, &st)?;
                t.expect(is_twisted_involution(y.element(), &st)?, || w.to_string());
            }
            Ok(())
        });
    }
    for (name, st_spec) in [("A3", "id"), ("A3", "minus-w0"), ("B3", "id")] {
        let l = o.bound(3);
        r.check(
            format!("action compatible with reduced products {name} {st_spec} |w1|,|w2|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let ws = g.elements_up_to(l)?;
                for x in involutions(&g, &st, l)? {
                    for w1 in &ws {
                        for w2 in &ws {
                            let w = w1.multiply(w2)?;
                            if w.length() != w1.length() + w2.length() {
                                continue;
                            }
                            let inner = act_tw_iterative(w2, &x)?;
                            let outer = act_tw_iterative(w1, &inner.x)?;
                            let composed = SignedInvolution {
                                sign: inner.sign * outer.sign,
                                x: outer.x,
                            };
                            let direct = act_tw_iterative(&w, &x)?;
                            t.expect(signed_eq(&composed, &direct), || {
                                format!("{w1} * {w2} on {}", x.element())
                            });
                        }
                    }
                }
                Ok(())
            },
        );
    }
}

fn oracle_cases(o: &VerifyOptions) -> Vec<(&'static str, &'static str, usize, usize)> {
    let (w, x) = (o.bound(5), o.bound(5));
    vec![
        ("A2", "id", w, x),
        ("A2", "minus-w0", w, x),
        ("B2", "id", w, x),
        ("B2", "perm:1-2", w, x),
        ("affine:A2", "perm:1-2", o.bound(4), x),
    ]
}

fn m_sum(a: &MVec, b: &MVec) -> Result<MVec> {
    a.checked_add(b)
}

fn oracle_suite(r: &mut Runner, o: &VerifyOptions) {
    for (name, st_spec, lw, lx) in oracle_cases(o) {
        r.check(
            format!("u=0 specialization = M0 action {name} {st_spec} |w|<={lw} |x|<={lx}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let mut cache = PhiCache::new(&st);
                let ws = g.elements_up_to(lw)?;
                for x in involutions(&g, &st, lx)? {
                    for w in &ws {
                        let generic = m_act_tw(w, &MVec::basis(&x))?.specialize_u0();
                        let iter = act_tw_iterative(w, &x)?;
                        let closed = act_tw_closed(w, &x, &mut cache)?;
                        let expected: BTreeMap<Element, i64> =
                            [(iter.x.element().clone(), iter.sign.to_i64())]
                                .into_iter()
                                .collect();
                        t.expect(generic == expected && signed_eq(&iter, &closed), || {
                            format!("w = {w}, x = {}", x.element())
                        });
                    }
                }
                Ok(())
            },
        );
    }
    let l = o.bound(6);
    for (name, st_spec) in [
        ("A2", "id"),
        ("A2", "minus-w0"),
        ("B2", "id"),
        ("B2", "perm:1-2"),
    ] {
        r.check(
            format!("quadratic relation on M {name} {st_spec} |x|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let u2 = UPoly::monomial(2);
                let u2m1 = UPoly::from_coeffs(vec![-1, 0, 1]);
                for x in involutions(&g, &st, l)? {
                    let ax = MVec::basis(&x);
                    for s in g.generators() {
                        let once = m_act_ts(s, &ax)?;
                        let twice = m_act_ts(s, &once)?;
                        let rhs = m_sum(&ax.scale(&u2)?, &once.scale(&u2m1)?)?;
                        t.expect(twice == rhs, || format!("s{s} on {}", x.element()));
                    }
                }
                Ok(())
            },
        );
    }
    for (name, st_spec) in [
        ("A2", "id"),
        ("A2", "minus-w0"),
        ("B2", "id"),
        ("B2", "perm:1-2"),
        ("G2", "id"),
    ] {
        r.check(
            format!("braid relations on M {name} {st_spec} |x|<={l}"),
            |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                for x in involutions(&g, &st, l)? {
                    let ax = MVec::basis(&x);
                    for s in g.generators() {
                        for s2 in g.generators().filter(|&s2| s2 > s) {
                            let Some(m) = g.coxeter_m(s, s2) else {
                                continue;
                            };
                            let alt = |a: GeneratorId, b: GeneratorId| -> Word {
                                (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect()
                            };
                            let lhs = m_act_word(alt(s, s2).iter(), &ax)?;
                            let rhs = m_act_word(alt(s2, s).iter(), &ax)?;
                            t.expect(lhs == rhs, || format!("s{s}, s{s2} on {}", x.element()));
                        }
                    }
                }
                Ok(())
            },
        );
    }
}

fn nil_sign_expect(t: &mut Tally, a: &Element, b: &Element) -> Result<()> {
    let (sign, prod) = nil_product(a, b)?;
    let dem = demazure_product(a, b)?;
    let expected = Sign::from_parity(a.length() + b.length() + dem.length());
    t.expect(sign == expected && prod == dem, || {
        format!("{a}, {b}: {sign} {prod}")
    });
    Ok(())
}

fn nil_sign_suite(r: &mut Runner, o: &VerifyOptions) {
    r.check("nil-Hecke sign law B2, all pairs", |t| {
        let g = group("B2")?;
        let els = g.elements_up_to(4)?;
        for a in &els {
            for b in &els {
                nil_sign_expect(t, a, b)?;
            }
        }
        Ok(())
    });
    let l = o.bound(8);
    r.check(
        format!(
            "nil-Hecke sign law affine:A2, {} seeded pairs |w|,|w'|<={l}",
            o.samples
        ),
        |t| {
            let els = group("affine:A2")?.elements_up_to(l)?;
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
            for _ in 0..o.samples {
                let (a, b) = (pick(&els, &mut rng), pick(&els, &mut rng));
                nil_sign_expect(t, a, b)?;
            }
            Ok(())
        },
    );
}

fn surjectivity_suite(r: &mut Runner, o: &VerifyOptions) {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "G2"] {
        for st_spec in ["id", "minus-w0"] {
            r.check(format!("pi(W) = I_* {name} {st_spec}"), |t| {
                let g = group(name)?;
                let st = star(&g, st_spec)?;
                let all: Vec<GeneratorId> = g.generators().collect();
                let top = g.longest_element(&all, DEFAULT_CAP)?.length();
                let image: HashSet<Element> = g
                    .elements_up_to(top)?
                    .iter()
                    .map(|w| pi(w, &st).map(TwistedInvolution::into_element))
                    .collect::<Result<_>>()?;
                let inv: HashSet<Element> = involutions(&g, &st, top)?
                    .into_iter()
                    .map(TwistedInvolution::into_element)
                    .collect();
                t.expect(image == inv, || {
                    format!("|pi(W)| = {}, |I_*| = {}", image.len(), inv.len())
                });
                Ok(())
            });
        }
    }
    let l = o.bound(8);
    for finite in ["A1", "A2"] {
        r.check(
            format!("jpi_preimage on I_* ∩ ^JW^J* affine:{finite} |x|<={l}"),
            |t| {
                let ctx = AffineContext::new(finite)?;
                preimage_check(t, ctx.parabolic(), l)
            },
        );
    }
}

fn preimage_check(t: &mut Tally, p: &ParabolicContext, l: usize) -> Result<()> {
    for x in involutions(p.group(), p.star(), l)? {
        if !p.is_in_jwj_star(x.element()) {
            continue;
        }
        let got = p.jpi_preimage(&x, x.length()).and_then(|w| {
            let back = p.jpi(&w)?;
            Ok(back.element() == x.element())
        });
        match got {
            Ok(ok) => t.expect(ok, || x.element().to_string()),
            Err(e) => t.expect(false, || format!("{}: {e}", x.element())),
        }
    }
    Ok(())
}

/// All terminal elements reachable from `x` by stripping left descents in
/// `J` or right descents in `J*` in any order.
fn all_strip_results(p: &ParabolicContext, x: &Element) -> Result<HashSet<Element>> {
    let mut seen: HashSet<Element> = HashSet::new();
    let mut terminal = HashSet::new();
    let mut stack = vec![x.clone()];
    while let Some(z) = stack.pop() {
        if !seen.insert(z.clone()) {
            continue;
        }
        let mut moves = Vec::new();
        for &s in p.j() {
            if z.has_left_descent(s) {
                moves.push(z.mul_gen_left(s)?);
            }
        }
        for &s in p.j_star() {
            if z.has_right_descent(s) {
                moves.push(z.mul_gen_right(s)?);
            }
        }
        if moves.is_empty() {
            terminal.insert(z);
        } else {
            stack.extend(moves);
        }
    }
    Ok(terminal)
}

fn parabolic_contexts() -> Result<Vec<(String, ParabolicContext)>> {
    let mut out = Vec::new();
    for finite in ["A1", "A2"] {
        let ctx = AffineContext::new(finite)?;
        out.push((format!("affine:{finite}"), ctx.parabolic().clone()));
    }
    for (name, st_spec) in [("A3", "id"), ("A3", "minus-w0"), ("B3", "id")] {
        let g = group(name)?;
        let st = star(&g, st_spec)?;
        let j = [GeneratorId::new(1), GeneratorId::new(2)];
        out.push((
            format!("{name} {st_spec} J=12"),
            ParabolicContext::new(&g, &j, &st, DEFAULT_CAP)?,
        ));
    }
    Ok(out)
}

fn parabolic_suite(r: &mut Runner, o: &VerifyOptions) {
    let contexts = match parabolic_contexts() {
        Ok(c) => c,
        Err(e) => {
            r.check("parabolic contexts", |_| Err(e));
            return;
        }
    };
    let l = o.bound(8);
    for (label, p) in &contexts {
        r.check(format!("jpi well defined {label} |w|<={l}"), |t| {
            for w in p.group().elements_up_to(l)? {
                if !p.is_in_jw(&w) {
                    continue;
                }
                let ok = match p.jpi(&w) {
                    Ok(x) => {
                        p.is_in_jwj_star(x.element())
                            && is_twisted_involution(x.element(), p.star())?
                    }
                    Err(_) => false,
                };
                t.expect(ok, || w.to_string());
            }
            Ok(())
        });
        r.check(format!("jpi_preimage round trip {label} |x|<={l}"), |t| {
            preimage_check(t, p, l)
        });
        let lm = o.bound(6);
        r.check(
            format!("minimal double-coset rep order independent {label} |x|<={lm}"),
            |t| {
                for x in p.group().elements_up_to(lm)? {
                    let ends = all_strip_results(p, &x)?;
                    let rep = p.min_double_coset_rep(&x)?;
                    t.expect(ends.len() == 1 && ends.contains(&rep), || {
                        format!("{x}: {} terminal elements", ends.len())
                    });
                }
                Ok(())
            },
        );
    }
    let l10 = o.bound(10);
    for (label, p) in contexts.iter().take(2) {
        r.check(format!("^JW^J inside I_* {label} |w|<={l10}"), |t| {
            for w in p.group().elements_up_to(l10)? {
                if p.is_in_jwj_star(&w) {
                    t.expect(is_twisted_involution(&w, p.star())?, || w.to_string());
                }
            }
            Ok(())
        });
    }
}

fn dominant_translations(ctx: &AffineContext, max_len: usize) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for w in ctx.group().elements_up_to(max_len)? {
        if ctx.is_dominant_translation(&w)? {
            out.push(w);
        }
    }
    Ok(out)
}

fn affine_suite(r: &mut Runner, o: &VerifyOptions) {
    for finite in ["A1", "A2"] {
        let ctx = match AffineContext::new(finite) {
            Ok(c) => c,
            Err(e) => {
                r.check(format!("context affine:{finite}"), |_| Err(e));
                continue;
            }
        };
        let w_j = ctx.w_j().clone();
        let l16 = o.bound(16);
        r.check(
            format!("|w_J t w_J| = |t| and w_J t = (w_J t w_J).w_J affine:{finite} |t|<={l16}"),
            |t| {
                for tr in dominant_translations(&ctx, l16)? {
                    let wtw = w_j.multiply(&tr)?.multiply(&w_j)?;
                    t.expect(wtw.length() == tr.length(), || format!("|w_J {tr} w_J|"));
                    let lhs = w_j.multiply(&tr)?;
                    t.expect(lhs == demazure_product(&wtw, &w_j)?, || format!("w_J {tr}"));
                }
                Ok(())
            },
        );
        let l12 = o.bound(12);
        r.check(
            format!("dominant translations multiply additively affine:{finite} |t|,|t'|<={l12}"),
            |t| {
                let doms = dominant_translations(&ctx, l12)?;
                for a in &doms {
                    for b in &doms {
                        let ab = a.multiply(b)?;
                        t.expect(
                            ctx.is_dominant_translation(&ab)?
                                && ab.length() == a.length() + b.length()
                                && demazure_product(a, b)? == ab,
                            || format!("{a}, {b}"),
                        );
                    }
                }
                Ok(())
            },
        );
        r.check(format!("pi'(t) = t^2 affine:{finite} |t|<={l16}"), |t| {
            for tr in dominant_translations(&ctx, l16)? {
                let sq = tr.multiply(&tr)?;
                t.expect(ctx.pi_prime(&tr)? == sq, || tr.to_string());
            }
            Ok(())
        });
        let l14 = o.bound(14);
        r.check(
            format!("w_J T_dom = ^JW^J affine:{finite} length<={l14}"),
            |t| {
                let lhs: HashSet<Element> = dominant_translations(&ctx, l14)?
                    .iter()
                    .map(|tr| w_j.multiply(tr))
                    .collect::<Result<HashSet<_>>>()?
                    .into_iter()
                    .filter(|v| v.length() <= l14)
                    .collect();
                let rhs: HashSet<Element> = ctx
                    .group()
                    .elements_up_to(l14)?
                    .into_iter()
                    .filter(|w| ctx.parabolic().is_in_jwj_star(w))
                    .collect();
                t.expect(lhs == rhs, || {
                    format!("{} vs {} elements", lhs.len(), rhs.len())
                });
                Ok(())
            },
        );
        r.check(
            format!("t -> [t] bijective onto ^JW affine:{finite} length<={l12}"),
            |t| {
                let mut images: HashMap<Element, Element> = HashMap::new();
                for w in ctx.group().elements_up_to(l12)? {
                    if ctx.is_translation(&w)? {
                        let rep = ctx.coset_rep(&w)?;
                        t.expect(ctx.parabolic().is_in_jw(&rep), || {
                            format!("[{w}] not in ^JW")
                        });
                        if let Some(prev) = images.insert(rep.clone(), w.clone()) {
                            t.expect(false, || format!("[{prev}] = [{w}]"));
                        }
                    }
                    if ctx.parabolic().is_in_jw(&w) {
                        let tr = ctx.translation_of(&w)?;
                        t.expect(ctx.coset_rep(&tr)? == w, || {
                            format!("{w} not of the form [t]")
                        });
                    }
                }
                Ok(())
            },
        );
    }
    r.check("table affine:A1 m<=8", |t| table_check(t, "A1", 8));
    r.check("table affine:A2 m,n,p<=2", |t| table_check(t, "A2", 2));
    r.check("jpi(121t321) = jpi(121t312) affine:A2", |t| {
        let ctx = AffineContext::new("A2")?;
        let p = ctx.parabolic();
        let g = ctx.group();
        let a = p.jpi(&g.element("121321")?)?;
        let b = p.jpi(&g.element("121312")?)?;
        t.expect(a == b, || format!("{} vs {}", a.element(), b.element()));
        Ok(())
    });
}

fn table_check(t: &mut Tally, finite: &str, max_exponent: u32) -> Result<()> {
    let ctx = AffineContext::new(finite)?;
    for row in affine_table(&ctx, max_exponent)? {
        t.expect(row.matches, || {
            format!(
                "{} {:?}: {} vs {}",
                row.form, row.exponents, row.jpi, row.expected
            )
        });
    }
    Ok(())
}
