//! Benchmark fixtures.

use nilhecke_core::{enumerate_involutions, Element, Group, Star, TwistedInvolution};

/// The length ball of a preset.
pub fn ball(group: &str, max_len: usize) -> Vec<Element> {
    Group::preset(group)
        .and_then(|g| g.elements_up_to(max_len))
        .expect("preset ball")
}

/// Twisted involutions of a preset up to `max_len`, for the given star.
pub fn involutions(group: &str, star: &str, max_len: usize) -> Vec<TwistedInvolution> {
    let g = Group::preset(group).expect("preset");
    let st = Star::build(&g, &star.parse().expect("star grammar")).expect("star");
    enumerate_involutions(&g, &st, max_len)
        .expect("enumeration")
        .into_iter()
        .map(|r| r.x)
        .collect()
}

/// Deterministic pairs drawn from `els` by a fixed stride.
pub fn pairs(els: &[Element], count: usize) -> Vec<(Element, Element)> {
    let n = els.len();
    (0..count)
        .map(|k| (els[(7 * k + 3) % n].clone(), els[(13 * k + 5) % n].clone()))
        .collect()
}
