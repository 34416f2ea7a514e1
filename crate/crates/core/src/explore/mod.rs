//! Exhaustive checks over small diagrams, dyadic orbit searches and the
//! verification suites built from them.
//!
//! Work over enumerated elements fans out with rayon; results are collected in
//! enumeration order, so reports do not depend on scheduling.

mod checks;
mod report;

pub use checks::{
    check_closed, check_conjugation, check_decomposition, check_no_fixed_dyadics,
    check_oracle_agreement, check_orbit_coverage, check_parity_proposition,
    check_positive_elements, check_root_colors, check_stab_equivalence, dyadics_of_length,
    dyadics_up_to, enumerate_elements, orbit_bfs, positive_elements, split_points, stab_separators,
    stab_witness, stab_witnesses, transitivity_table, verify_transitivity_table, Subgroup,
    TableRow,
};
pub use report::{Claim, Params, Status, VerificationReport};

use crate::coloring::{member_e, member_e_even, member_f};
use crate::plmap::pi_ab;
use crate::subgroup_tools::{gamma, phi_l, phi_r, w_generators, F4Element};
use crate::trees::TreeDiagram;

pub const SUITES: [&str; 3] = ["paper", "closure", "stab"];

/// Fixed values: slopes of the generators, memberships, Ren's map.
fn fixed_claims() -> VerificationReport {
    let mut r = VerificationReport::new("paper", Params::default());
    let w = w_generators();
    let x0 = TreeDiagram::generator(0);
    let x1 = TreeDiagram::generator(1);

    r.push(Claim::check(
        "pi.w0",
        "π(w_0) = (2,-2)",
        pi_ab(&w[0]) == (2, -2),
    ));
    for (i, wi) in w.iter().enumerate().skip(1) {
        r.push(Claim::check(
            format!("pi.w{i}"),
            format!("π(w_{i}) = (0,-2)"),
            pi_ab(wi) == (0, -2),
        ));
    }
    r.push(Claim::check(
        "pi.x0_inverse",
        "π(x_0^{-1}) = (-1,1)",
        pi_ab(&x0.inverse()) == (-1, 1),
    ));

    r.push(Claim::check("member.E.x0", "x_0 ∈ E", member_e(&x0)));
    r.push(Claim::check(
        "member.E.shifted_w",
        "φ_L(w_i), φ_R(w_i) ∈ E",
        w.iter().all(|g| member_e(&phi_r(g)) && member_e(&phi_l(g))),
    ));
    r.push(Claim::check(
        "member.Eeven.x0_squared",
        "x_0^2 ∈ E_even",
        member_e_even(&x0.pow(2)),
    ));
    r.push(Claim::check(
        "member.Eeven.shifted_w",
        "φ_R(w_i) ∈ E_even",
        w.iter().all(|g| member_e_even(&phi_r(g))),
    ));
    r.push(Claim::check(
        "member.F3col.w",
        "w_i ∈ F3col",
        w.iter().all(member_f),
    ));
    r.push(Claim::check(
        "member.F3col.x0",
        "x_0 ∉ F3col",
        !member_f(&x0),
    ));
    r.push(Claim::check(
        "member.E.x1_squared",
        "x_1^2 ∉ E",
        !member_e(&x1.pow(2)),
    ));

    r.push(Claim::check(
        "gamma.y_to_w",
        "γ(y_i) = w_i",
        (0..4).all(|i| gamma(&F4Element::generator(i)) == w[i as usize]),
    ));
    r
}

pub fn paper_suite(params: Params) -> VerificationReport {
    let mut r = VerificationReport::new("paper", params);
    r.extend(verify_transitivity_table());
    r.extend(fixed_claims());
    r.extend(check_positive_elements(8));
    r.extend(check_oracle_agreement(params.max_leaves));
    r.extend(check_parity_proposition(params.max_leaves));
    r.extend(check_root_colors(params.max_leaves));
    r.extend(check_decomposition(params.max_leaves));
    r.extend(check_conjugation());
    r.extend(stab_separators(params.max_depth));
    r.extend(check_orbit_coverage(6, 20, 10));
    r.push(
        Claim::new(
            "enumerate.count",
            "reduced diagrams enumerated",
            Status::Witness,
        )
        .with_witness(enumerate_elements(params.max_leaves).len().to_string()),
    );
    r
}

pub fn closure_suite(params: Params) -> VerificationReport {
    let mut r = VerificationReport::new("closure", params);
    for sub in [Subgroup::E, Subgroup::EEven, Subgroup::F] {
        r.extend(check_closed(sub, params.max_leaves));
    }
    r.extend(check_no_fixed_dyadics(params.max_leaves));
    r
}

pub fn stab_suite(params: Params) -> VerificationReport {
    let mut r = VerificationReport::new("stab", params);
    r.extend(check_stab_equivalence(params.max_leaves, params.max_depth));
    r
}

pub fn run_suite(name: &str, params: Params) -> Option<VerificationReport> {
    match name {
        "paper" => Some(paper_suite(params)),
        "closure" => Some(closure_suite(params)),
        "stab" => Some(stab_suite(params)),
        _ => None,
    }
}
