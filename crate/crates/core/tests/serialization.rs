use mckay_core::mckay::mckay_quiver;
use mckay_core::quiver::{
    build_gamma, export_dot, from_json, parse_quiver_dsl, serialize_dsl, to_json,
};
use mckay_core::WeightVector;
use proptest::prelude::*;

fn arb_weights() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(1i64..=5, 2..=4)
        .prop_filter_map("gcd one", |raw| WeightVector::new(&raw).ok())
}

proptest! {
    #[test]
    fn dsl_and_json_round_trip(w in arb_weights()) {
        let g = build_gamma(&w);
        let back = parse_quiver_dsl(&serialize_dsl(&g)).unwrap();
        prop_assert!(back.same_structure(&g));
        prop_assert_eq!(from_json(&to_json(&g).unwrap()).unwrap(), g.clone());
        // arrow labels survive the text format
        prop_assert!(back.quiver.arrows().iter().zip(g.quiver.arrows()).all(|(a, b)| a.var == b.var && a.base == b.base));
    }
}

#[test]
fn dot_golden_gamma_111() {
    let g = build_gamma(&WeightVector::new(&[1, 1, 1]).unwrap());
    let expected = "digraph quiver {
    rankdir=LR;
    \"rho1\" [label=\"ρ1\"];
    \"rho2\" [label=\"ρ2\"];
    \"rho1\" -> \"rho2\" [label=\"x_{1,1}\"];
    \"rho1\" -> \"rho2\" [label=\"x_{2,1}\"];
    \"rho1\" -> \"rho2\" [label=\"x_{3,1}\"];
}
";
    assert_eq!(export_dot(&g.quiver), expected);
}

#[test]
fn dot_mckay_11() {
    let dot = export_dot(&mckay_quiver(&WeightVector::new(&[1, 1]).unwrap()));
    assert_eq!(dot.matches(" -> ").count(), 4);
    assert_eq!(dot.matches("[label=\"ρ").count(), 2);
    assert!(dot.contains("\"rho1\" -> \"rho0\" [label=\"x_{2,1}\"];"));
}

#[test]
fn dsl_golden_gamma_112() {
    let g = build_gamma(&WeightVector::new(&[1, 1, 2]).unwrap());
    let expected = "# Γ(1,1,2)
vertices: rho1 rho2 rho3
arrow x_1_1: rho1 -> rho2
arrow x_2_1: rho1 -> rho2
arrow x_3_1: rho1 -> rho3
arrow x_1_2: rho2 -> rho3
arrow x_2_2: rho2 -> rho3
relation: x_1_1 x_2_2 = x_2_1 x_1_2
";
    assert_eq!(serialize_dsl(&g), expected);
}

#[test]
fn hand_written_dsl() {
    let text = "# Kronecker quiver with a loop-free tail
vertices: a b c
arrow f: a -> b   # first
arrow g: a -> b
arrow h: b -> c
relation: f h = g h
";
    let q = parse_quiver_dsl(text).unwrap();
    assert_eq!(q.quiver.arrows().len(), 3);
    assert_eq!(q.relations.len(), 1);
    let again = parse_quiver_dsl(&serialize_dsl(&q)).unwrap();
    assert_eq!(again, q);
}
