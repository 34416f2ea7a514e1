mod common;

use std::collections::HashSet;

use itertools::Itertools;
use proptest::prelude::*;
use thompson_core::explore::enumerate_elements;
use thompson_core::plmap::to_pl;
use thompson_core::trees::{enumerate_trees, TreeDiagram};

#[test]
fn reduction_is_idempotent() {
    for n in 1..=8 {
        let trees = enumerate_trees(n);
        for (t, b) in trees.iter().cartesian_product(&trees) {
            let d = TreeDiagram::unreduced(t.clone(), b.clone()).unwrap();
            let r = d.reduce();
            assert!(r.is_reduced());
            assert_eq!(r.reduce(), r);
        }
    }
}

#[test]
fn presentation_relations() {
    for (k, n) in (0..=5u32).tuple_combinations() {
        let (xk, xn) = (TreeDiagram::generator(k), TreeDiagram::generator(n));
        assert_eq!(
            xn.multiply(&xk),
            xk.multiply(&TreeDiagram::generator(n + 1)),
            "k={k} n={n}"
        );
    }
}

#[test]
fn normal_forms_are_unique_and_rebuild() {
    let elems = enumerate_elements(7);
    let mut seen = HashSet::new();
    for d in &elems {
        let nf = d.normal_form();
        assert!(nf.is_normal(), "{d}: {nf}");
        assert_eq!(TreeDiagram::from_word(&nf.to_word()), *d, "{nf}");
        assert!(seen.insert(nf.to_string()), "duplicate normal form {nf}");
    }
}

#[test]
fn catalan_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).len()).collect();
    let mut catalan = vec![1usize];
    for n in 1..8 {
        catalan.push((0..n).map(|i| catalan[i] * catalan[n - 1 - i]).sum());
    }
    assert_eq!(counts, catalan);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative(
        a in common::element(6),
        b in common::element(6),
        c in common::element(6),
    ) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn equality_matches_the_pl_map(w1 in common::word(5), w2 in common::word(5)) {
        let (a, b) = (TreeDiagram::from_word(&w1), TreeDiagram::from_word(&w2));
        prop_assert_eq!(a == b, to_pl(&a) == to_pl(&b));
        let via_inverse = TreeDiagram::from_word(&w1.concat(&w2.inverse()));
        prop_assert_eq!(a == b, via_inverse.is_identity());
    }

    #[test]
    fn inverse_cancels(a in common::element(8)) {
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn display_round_trips(a in common::element(8)) {
        prop_assert_eq!(a.to_string().parse::<TreeDiagram>().unwrap(), a);
    }
}
