use serde::{Deserialize, Serialize};

use super::{omega, omega_tilde, plane_coloring, strip_coloring};
use crate::plmap::pi_ab;
use crate::trees::TreeDiagram;

/// Strip-colorability: the forced strip colorings of both trees agree on every gap.
pub fn member_f_by_coloring(d: &TreeDiagram) -> bool {
    strip_coloring(d.top()) == strip_coloring(d.bottom())
}

/// `ω(u_i) = ω(v_i)` for every matched leaf pair.
pub fn member_f_by_weights(d: &TreeDiagram) -> bool {
    d.leaf_pairs().iter().all(|(u, v)| omega(u) == omega(v))
}

/// Membership in the 3-colorable subgroup.
pub fn member_f(d: &TreeDiagram) -> bool {
    let r = member_f_by_coloring(d);
    debug_assert_eq!(r, member_f_by_weights(d));
    r
}

pub fn member_e_by_coloring(d: &TreeDiagram) -> bool {
    plane_coloring(d).is_some()
}

/// The bottom weights equal the top weights, or their negatives.
pub fn member_e_by_weights(d: &TreeDiagram) -> bool {
    let pairs = d.leaf_pairs();
    pairs.iter().all(|(u, v)| omega_tilde(u) == omega_tilde(v))
        || pairs.iter().all(|(u, v)| omega_tilde(u) == -omega_tilde(v))
}

/// Membership in the planar 3-colorable subgroup.
pub fn member_e(d: &TreeDiagram) -> bool {
    let r = member_e_by_coloring(d);
    debug_assert_eq!(r, member_e_by_weights(d));
    r
}

pub fn member_e_even_by_coloring(d: &TreeDiagram) -> bool {
    member_k(d, 2, 2) && member_e_by_coloring(d)
}

/// `ω̃_+(i) = ω̃_-(i)` at every leaf, inside `K_(2,2)`.
pub fn member_e_even_by_weights(d: &TreeDiagram) -> bool {
    member_k(d, 2, 2)
        && d.leaf_pairs()
            .iter()
            .all(|(u, v)| omega_tilde(u) == omega_tilde(v))
}

/// Membership in the even part `ℰ ∩ K_(2,2)`.
pub fn member_e_even(d: &TreeDiagram) -> bool {
    let r = member_e_even_by_coloring(d);
    debug_assert_eq!(r, member_e_even_by_weights(d));
    r
}

/// Membership in the rectangular subgroup `K_(a,b)`.
pub fn member_k(d: &TreeDiagram, a: i64, b: i64) -> bool {
    assert!(a > 0 && b > 0);
    let (p, q) = pi_ab(d);
    p.rem_euclid(a) == 0 && q.rem_euclid(b) == 0
}

/// The index-2 subgroup where both endpoint slope exponents have the same parity.
pub fn member_h(d: &TreeDiagram) -> bool {
    let (p, q) = pi_ab(d);
    p.rem_euclid(2) == q.rem_euclid(2)
}

/// Matched leaves have digit sums of equal parity.
pub fn member_oriented(d: &TreeDiagram) -> bool {
    d.leaf_pairs()
        .iter()
        .all(|(u, v)| u.ones() % 2 == v.ones() % 2)
}

/// The element is plane- or strip-colorable; these generate `⟨ℰ, 𝓕⟩`.
pub fn member_smallstrip(d: &TreeDiagram) -> bool {
    member_e(d) || member_f(d)
}

/// Every membership predicate evaluated on one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Memberships {
    #[serde(rename = "F3col")]
    pub f3col: bool,
    #[serde(rename = "E")]
    pub e: bool,
    #[serde(rename = "Eeven")]
    pub e_even: bool,
    #[serde(rename = "H")]
    pub h: bool,
    #[serde(rename = "K22")]
    pub k22: bool,
    pub oriented: bool,
    pub smallstrip: bool,
}

impl Memberships {
    pub fn of(d: &TreeDiagram) -> Self {
        Memberships {
            f3col: member_f(d),
            e: member_e(d),
            e_even: member_e_even(d),
            h: member_h(d),
            k22: member_k(d, 2, 2),
            oriented: member_oriented(d),
            smallstrip: member_smallstrip(d),
        }
    }

    /// Looks a predicate up by its report name.
    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "F3col" => self.f3col,
            "E" => self.e,
            "Eeven" => self.e_even,
            "H" => self.h,
            "K22" => self.k22,
            "oriented" => self.oriented,
            "smallstrip" => self.smallstrip,
            _ => return None,
        })
    }

    pub const NAMES: [&'static str; 7] =
        ["F3col", "E", "Eeven", "H", "K22", "oriented", "smallstrip"];
}

/// The JSON membership report of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub element: String,
    pub leaf_count: usize,
    pub pi: [i64; 2],
    pub member: Memberships,
}

impl MembershipReport {
    pub fn new(element: impl Into<String>, d: &TreeDiagram) -> Self {
        let (a, b) = pi_ab(d);
        MembershipReport {
            element: element.into(),
            leaf_count: d.leaf_count(),
            pi: [a, b],
            member: Memberships::of(d),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u32) -> TreeDiagram {
        TreeDiagram::generator(n)
    }

    #[test]
    fn generator_memberships() {
        assert!(member_e(&x(0)));
        assert!(!member_f(&x(0)));
        assert!(!member_e_even(&x(0)));
        assert!(member_e_even(&x(0).pow(2)));
        assert!(!member_e(&x(1).pow(2)));
        assert!(member_k(&x(1).pow(2), 2, 2));
        assert!(!member_k(&x(0), 2, 2));
        assert!(member_h(&x(0)));
        assert!(!member_h(&x(1)));
        assert!(!member_oriented(&x(0)));
        assert!(member_oriented(&x(0).multiply(&x(1))));
        assert!(member_smallstrip(&x(0)));
        assert!(!member_smallstrip(&x(1)));
    }

    #[test]
    fn report_field_names() {
        let r = MembershipReport::new("x1^2", &x(1).pow(2));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["pi"], serde_json::json!([0, -2]));
        assert_eq!(v["member"]["E"], false);
        assert_eq!(v["member"]["K22"], true);
        let keys: Vec<&String> = v["member"].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 7);
        for name in Memberships::NAMES {
            assert!(r.member.get(name).is_some());
        }
    }

    #[test]
    fn identity_is_in_everything() {
        let e = TreeDiagram::identity();
        assert!(member_f(&e) && member_e(&e) && member_e_even(&e) && member_h(&e));
        assert!(member_oriented(&e) && member_smallstrip(&e));
        for a in 1..=4 {
            for b in 1..=4 {
                assert!(member_k(&e, a, b));
            }
        }
    }
}
