use nilhecke_core::hecke::m_act_tw;
use nilhecke_core::{Group, MVec, Star, StarKind, TwistedInvolution};
use serde_json::Value;

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap()
}

fn act_on_identity(group: &str, star: &str, w: &str) -> Value {
    let g = Group::preset(group).unwrap();
    let st = Star::build(&g, &star.parse::<StarKind>().unwrap()).unwrap();
    let e = TwistedInvolution::identity(&g, &st).unwrap();
    let v = m_act_tw(&g.element(w).unwrap(), &MVec::basis(&e)).unwrap();
    serde_json::from_str(&v.to_golden_json()).unwrap()
}

#[test]
fn a2_identity_star() {
    assert_eq!(
        act_on_identity("A2", "id", "12"),
        golden("m_act_a2_id_12.json")
    );
}

#[test]
fn a2_swap_star() {
    assert_eq!(
        act_on_identity("A2", "swap:1-2", "21"),
        golden("m_act_a2_swap_21.json")
    );
}

#[test]
fn golden_output_is_byte_stable() {
    let a = act_on_identity("B2", "perm:1-2", "2121");
    let b = act_on_identity("B2", "perm:1-2", "1212");
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}
