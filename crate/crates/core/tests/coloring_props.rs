mod common;

use proptest::prelude::*;
use thompson_core::coloring::{
    member_e, member_e_even, member_f, member_h, omega, omega_tilde, Color,
};
use thompson_core::explore::{
    check_no_fixed_dyadics, check_oracle_agreement, check_root_colors, enumerate_elements,
};
use thompson_core::plmap::{pi_ab, BinaryWord};
use thompson_core::subgroup_tools::{flip, phi_l, phi_r};
use thompson_core::trees::TreeDiagram;

fn w(parts: &[&[u8]]) -> BinaryWord {
    BinaryWord::from_digits(parts.concat())
}

#[test]
fn oracles_agree_to_seven_leaves() {
    let r = check_oracle_agreement(7);
    assert!(r.all_passed(), "{}", r.summary());
}

#[test]
fn flip_and_shift_characterisations() {
    for d in enumerate_elements(6) {
        assert_eq!(member_e(&d), member_e(&flip(&d)), "{d}");
        assert_eq!(member_f(&d), member_f(&flip(&d)), "{d}");
        assert_eq!(member_f(&d), member_e(&phi_r(&d)), "{d}");
        assert_eq!(member_f(&d), member_e(&phi_l(&d)), "{d}");
    }
}

#[test]
fn root_colors_follow_parity() {
    let r = check_root_colors(7);
    assert!(r.all_passed(), "{}", r.summary());
    for d in enumerate_elements(7).iter().filter(|d| member_e(d)) {
        let (a, b) = pi_ab(d);
        assert_eq!(a.rem_euclid(2), b.rem_euclid(2), "{d}");
        assert!(member_h(d));
    }
}

#[test]
fn even_part_has_index_two() {
    let x0inv = TreeDiagram::generator(0).inverse();
    for d in enumerate_elements(7).iter().filter(|d| member_e(d)) {
        assert!(member_e_even(d) ^ member_e_even(&x0inv.multiply(d)), "{d}");
    }
}

#[test]
fn odd_members_fix_no_dyadic() {
    let r = check_no_fixed_dyadics(6);
    assert!(r.all_passed(), "{}", r.summary());
}

#[test]
fn alternating_tables() {
    for n in 1..=30usize {
        let (e10, e01) = match n % 3 {
            1 => (1, 2),
            2 => (0, 1),
            _ => (2, 0),
        };
        assert_eq!(
            omega_tilde(&w(&[&[1, 0].repeat(n)])).value(),
            e10,
            "(10)^{n}"
        );
        assert_eq!(
            omega_tilde(&w(&[&[0, 1].repeat(n)])).value(),
            e01,
            "(01)^{n}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn prefix_laws(a in common::digits(16)) {
        let tail = w(&[&a]);
        prop_assert_eq!(omega_tilde(&w(&[&[0], &a])), omega(&tail));
        prop_assert_eq!(omega_tilde(&w(&[&[1], &a])), Color::ONE - omega(&tail));
        prop_assert_eq!(omega_tilde(&w(&[&[1], &a])), omega(&w(&[&[1, 0, 1], &a])));
        prop_assert_eq!(omega_tilde(&w(&[&a, &[0]])), omega_tilde(&tail));
    }

    #[test]
    fn pair_deletion(a in common::digits(8), b in common::digits(8)) {
        let ab = w(&[&a, &b]);
        prop_assert_eq!(omega_tilde(&w(&[&a, &[0, 0], &b])), omega_tilde(&ab));
        prop_assert_eq!(omega_tilde(&w(&[&a, &[1, 1], &b])), omega_tilde(&ab));
    }

    #[test]
    fn pair_deletion_after_a_digit(c in 0u8..2, a in common::digits(8), b in common::digits(8)) {
        let a = [&[c][..], &a].concat();
        let ab = w(&[&a, &b]);
        prop_assert_eq!(omega_tilde(&w(&[&a, &[0, 0], &b])), omega_tilde(&ab));
        prop_assert_eq!(omega_tilde(&w(&[&a, &[1, 1], &b])), omega_tilde(&ab));
    }

    #[test]
    fn omega_ignores_pairs_anywhere(a in common::digits(8), b in common::digits(8)) {
        let ab = w(&[&a, &b]);
        prop_assert_eq!(omega(&w(&[&a, &[0, 0], &b])), omega(&ab));
        prop_assert_eq!(omega(&w(&[&a, &[1, 1], &b])), omega(&ab));
    }
}
