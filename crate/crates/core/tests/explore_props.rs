mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use thompson_core::explore::{closure_suite, enumerate_elements, stab_suite, Params};
use thompson_core::expr::{evaluate, Expr};
use thompson_core::trees::TreeDiagram;

#[test]
fn reports_are_deterministic() {
    let p = Params {
        max_leaves: 5,
        max_depth: 8,
    };
    assert_eq!(closure_suite(p).to_json(), closure_suite(p).to_json());
    assert_eq!(stab_suite(p).to_json(), stab_suite(p).to_json());
}

#[test]
fn enumeration_has_no_duplicates() {
    let elems = enumerate_elements(6);
    let set: HashSet<&TreeDiagram> = elems.iter().collect();
    assert_eq!(set.len(), elems.len());
    assert!(elems
        .windows(2)
        .all(|w| w[0].leaf_count() <= w[1].leaf_count()));
}

fn expr_source() -> impl Strategy<Value = String> {
    let atom = prop_oneof![
        (0u32..4).prop_map(|n| format!("x{n}")),
        (0u32..4).prop_map(|n| format!("w{n}")),
        Just("id".to_string()),
    ];
    atom.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), -2i64..=2).prop_map(|(e, k)| format!("({e})^{k}")),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(|v| v.join(" * ")),
            prop::collection::vec(inner.clone(), 2..=3).prop_map(|v| v.join(" ")),
            (
                prop::sample::select(vec!["inv", "flip", "phiR", "phiL"]),
                inner
            )
                .prop_map(|(f, e)| format!("{f}({e})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn enumeration_is_exhaustive(d in common::element(4)) {
        prop_assume!(d.leaf_count() <= 6);
        prop_assert!(enumerate_elements(6).contains(&d));
    }

    #[test]
    fn expressions_round_trip(src in expr_source()) {
        let e: Expr = src.parse().unwrap();
        let printed = e.to_string();
        let again: Expr = printed.parse().unwrap();
        prop_assert_eq!(again.eval().unwrap(), e.eval().unwrap());
        prop_assert_eq!(evaluate(&printed).unwrap(), evaluate(&src).unwrap());
    }

    #[test]
    fn normal_forms_parse_back(d in common::element(6)) {
        prop_assert_eq!(evaluate(&d.normal_form().to_string()).unwrap(), d);
    }
}
