//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::time::Instant;

use nilhecke_core::demazure::demazure_product;
use nilhecke_core::hecke::m_act_tw;
use nilhecke_core::involutions::is_twisted_involution;
use nilhecke_core::{
    act_tw_closed, act_tw_iterative, enumerate_involutions, nil_product, pi, run_suite,
    AffineContext, Element, GeneratorId, Group, MVec, PhiCache, Sign, Star, StarKind,
    TwistedInvolution, VerifyOptions,
};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn star(g: &Group, spec: &str) -> Result<Star, String> {
    Star::build(g, &spec.parse::<StarKind>().map_err(err)?).map_err(err)
}

fn pow(word: &str, k: u32) -> String {
    word.repeat(k as usize)
}

/// 1. Affine A1: ^Jpi(1 A^m) = 1 A^{2m} and ^Jpi(1 A^m 2) = 1 A^{2m+1}, m = 0..8.
fn criterion_1() -> Outcome {
    let ctx = AffineContext::new("A1").map_err(err)?;
    let g = ctx.group();
    let p = ctx.parabolic();
    let mut cases = 0;
    for m in 0..=8 {
        for (suffix, extra) in [("", 0), ("2", 1)] {
            let input = g
                .element(&format!("1{}{suffix}", pow("21", m)))
                .map_err(err)?;
            let expected = g
                .element(&format!("1{}", pow("21", 2 * m + extra)))
                .map_err(err)?;
            let got = p.jpi(&input).map_err(err)?;
            if got.element() != &expected {
                return Err(format!("m = {m}, suffix `{suffix}`: got {}", got.element()));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} rows"))
}

/// 2. Affine A2: all six coset forms for m, n, p in {0, 1, 2}, plus the
///    non-injectivity identity.
fn criterion_2() -> Outcome {
    let ctx = AffineContext::new("A2").map_err(err)?;
    let g = ctx.group();
    let p = ctx.parabolic();
    let (a, b, c) = ("3121", "321321", "312312");
    let forms: [(&str, [u32; 3]); 6] = [
        ("", [0, 0, 0]),
        ("3", [1, 0, 0]),
        ("31", [0, 0, 1]),
        ("32", [0, 1, 0]),
        ("321", [2, 0, 0]),
        ("312", [2, 0, 0]),
    ];
    let mut cases = 0;
    for m in 0..=2 {
        for n in 0..=2 {
            for q in 0..=2 {
                let t = format!("{}{}{}", pow(a, m), pow(b, n), pow(c, q));
                for (suffix, [da, db, dc]) in forms {
                    let input = g.element(&format!("121{t}{suffix}")).map_err(err)?;
                    let expected = g
                        .element(&format!(
                            "121{}{}{}",
                            pow(a, 2 * m + da),
                            pow(b, 2 * n + db),
                            pow(c, 2 * q + dc)
                        ))
                        .map_err(err)?;
                    let got = p.jpi(&input).map_err(err)?;
                    if got.element() != &expected {
                        return Err(format!(
                            "121t{suffix} at ({m},{n},{q}): got {}",
                            got.element()
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    let x = p.jpi(&g.element("121321").map_err(err)?).map_err(err)?;
    let y = p.jpi(&g.element("121312").map_err(err)?).map_err(err)?;
    if x != y || g.element("121321").map_err(err)? == g.element("121312").map_err(err)? {
        return Err("non-injectivity witness failed".into());
    }
    Ok(format!("{cases} rows, non-injectivity witness holds"))
}

/// 3. pi'(t) = t^2 for every dominant translation with |t| <= 16.
fn criterion_3() -> Outcome {
    let mut summary = Vec::new();
    for finite in ["A1", "A2"] {
        let ctx = AffineContext::new(finite).map_err(err)?;
        let mut count = 0;
        for t in ctx.group().elements_up_to(16).map_err(err)? {
            if !ctx.is_dominant_translation(&t).map_err(err)? {
                continue;
            }
            let sq = t.multiply(&t).map_err(err)?;
            let got = ctx.pi_prime(&t).map_err(err)?;
            if got != sq {
                return Err(format!("affine {finite}: pi'({t}) = {got}"));
            }
            count += 1;
        }
        if count < 2 {
            return Err(format!(
                "affine {finite}: only {count} dominant translations found"
            ));
        }
        summary.push(format!("affine {finite}: {count} translations"));
    }
    Ok(summary.join(", "))
}

fn involutions(g: &Group, st: &Star, max_len: usize) -> Result<Vec<TwistedInvolution>, String> {
    Ok(enumerate_involutions(g, st, max_len)
        .map_err(err)?
        .into_iter()
        .map(|r| r.x)
        .collect())
}

/// 4. Closed form of the M0 action equals the iterative action.
fn criterion_4() -> Outcome {
    let cases = [
        ("A3", "id", 6),
        ("A3", "minus-w0", 6),
        ("B3", "id", 6),
        ("G2", "id", 6),
        ("affine:A2", "perm:1-2", 5),
    ];
    let mut total = 0;
    for (name, st_spec, lw) in cases {
        let g = Group::preset(name).map_err(err)?;
        let st = star(&g, st_spec)?;
        let mut cache = PhiCache::new(&st);
        let ws = g.elements_up_to(lw).map_err(err)?;
        for x in involutions(&g, &st, 6)? {
            for w in &ws {
                let a = act_tw_iterative(w, &x).map_err(err)?;
                let b = act_tw_closed(w, &x, &mut cache).map_err(err)?;
                if a.sign != b.sign || a.x.element() != b.x.element() {
                    return Err(format!("{name} {st_spec}: w = {w}, x = {}", x.element()));
                }
                total += 1;
            }
        }
    }
    Ok(format!("{total} pairs"))
}

/// 5. Generic-u module action specialized at u = 0 equals the M0 action.
fn criterion_5() -> Outcome {
    let cases = [
        ("A2", "id", 5),
        ("A2", "minus-w0", 5),
        ("B2", "id", 5),
        ("B2", "perm:1-2", 5),
        ("affine:A2", "perm:1-2", 4),
    ];
    let mut total = 0;
    for (name, st_spec, lw) in cases {
        let g = Group::preset(name).map_err(err)?;
        let st = star(&g, st_spec)?;
        let ws = g.elements_up_to(lw).map_err(err)?;
        for x in involutions(&g, &st, 5)? {
            for w in &ws {
                let generic = m_act_tw(w, &MVec::basis(&x)).map_err(err)?.specialize_u0();
                let m0 = act_tw_iterative(w, &x).map_err(err)?;
                let expected: BTreeMap<Element, i64> = [(m0.x.element().clone(), m0.sign.to_i64())]
                    .into_iter()
                    .collect();
                if generic != expected {
                    return Err(format!("{name} {st_spec}: w = {w}, x = {}", x.element()));
                }
                total += 1;
            }
        }
    }
    Ok(format!("{total} pairs"))
}

fn sign_law(a: &Element, b: &Element) -> Result<(), String> {
    let (sign, prod) = nil_product(a, b).map_err(err)?;
    let dem = demazure_product(a, b).map_err(err)?;
    let expected = Sign::from_parity(a.length() + b.length() + dem.length());
    if sign != expected || prod != dem {
        return Err(format!(
            "T_{a} T_{b} = {sign} T_{prod}, expected {expected} T_{dem}"
        ));
    }
    Ok(())
}

/// 6. Nil-Hecke sign law: all 64 pairs in B2 and 1000 seeded affine A2 pairs.
fn criterion_6() -> Outcome {
    let b2 = Group::preset("B2").map_err(err)?;
    let els = b2.elements_up_to(4).map_err(err)?;
    if els.len() != 8 {
        return Err(format!("B2 has {} elements", els.len()));
    }
    let mut pairs = 0;
    for a in &els {
        for b in &els {
            sign_law(a, b)?;
            pairs += 1;
        }
    }
    let aff = Group::preset("affine:A2").map_err(err)?;
    let ball = aff.elements_up_to(8).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let a = ball.choose(&mut rng).expect("nonempty");
        let b = ball.choose(&mut rng).expect("nonempty");
        sign_law(a, b)?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

/// 7. pi(W) = I_* for small finite groups; jpi_preimage succeeds on
///    I_* ∩ ^JW^J* up to length 8 in affine A1 and A2.
fn criterion_7() -> Outcome {
    let mut groups = 0;
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "G2"] {
        let g = Group::preset(name).map_err(err)?;
        let all: Vec<GeneratorId> = g.generators().collect();
        let top = g.longest_element(&all, 512).map_err(err)?.length();
        let ws = g.elements_up_to(top).map_err(err)?;
        for st_spec in ["id", "minus-w0"] {
            let st = star(&g, st_spec)?;
            let mut image = HashSet::new();
            for w in &ws {
                image.insert(pi(w, &st).map_err(err)?.into_element());
            }
            let inv: HashSet<Element> = involutions(&g, &st, top)?
                .into_iter()
                .map(TwistedInvolution::into_element)
                .collect();
            let brute: HashSet<Element> = ws
                .iter()
                .filter(|w| is_twisted_involution(w, &st).unwrap_or(false))
                .cloned()
                .collect();
            if image != inv || inv != brute {
                return Err(format!(
                    "{name} {st_spec}: |pi(W)| = {}, |I_*| = {}, brute force {}",
                    image.len(),
                    inv.len(),
                    brute.len()
                ));
            }
            groups += 1;
        }
    }
    let mut preimages = 0;
    for finite in ["A1", "A2"] {
        let ctx = AffineContext::new(finite).map_err(err)?;
        let p = ctx.parabolic();
        for x in involutions(ctx.group(), ctx.star(), 8)? {
            if !p.is_in_jwj_star(x.element()) {
                continue;
            }
            let w = p
                .jpi_preimage(&x, x.length())
                .map_err(|e| format!("affine {finite}, x = {}: {e}", x.element()))?;
            if p.jpi(&w).map_err(err)?.element() != x.element() {
                return Err(format!("affine {finite}: jpi({w}) != {}", x.element()));
            }
            preimages += 1;
        }
    }
    Ok(format!("{groups} group/star pairs, {preimages} preimages"))
}

/// 8. Property suites at their default bounds.
fn criterion_8() -> Outcome {
    let opts = VerifyOptions::default();
    let mut checks = 0;
    for suite in [
        "coxeter",
        "monoid",
        "star",
        "phi",
        "oracle-u0",
        "parabolic",
        "affine",
    ] {
        let report = run_suite(suite, &opts).map_err(err)?;
        if let Some(c) = report.checks.iter().find(|c| !c.passed()) {
            return Err(format!(
                "{suite}/{}: {}",
                c.name,
                c.first_failure.as_deref().unwrap_or("failed")
            ));
        }
        checks += report.checks.len();
    }
    Ok(format!("{checks} checks"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("affine A1 table, m = 0..8", criterion_1),
        ("affine A2 table, m,n,p in 0..2, six forms", criterion_2),
        ("pi'(t) = t^2 for dominant |t| <= 16", criterion_3),
        ("closed form = iterative M0 action", criterion_4),
        ("u -> 0 oracle", criterion_5),
        ("nil-Hecke sign law", criterion_6),
        ("surjectivity of pi and ^J pi", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
