//! Morphisms and generator families: flip, shifts, the generators of the
//! 3-colorable subgroups, Ren's map from `F_4`, the isomorphisms `α` and `θ`,
//! and the factorisation of members of `ℰ`.

mod decompose;
mod f4;
mod isos;
mod shifts;

use thiserror::Error;

pub use decompose::{decompose_e, unshift_r, Decomposition};
pub use f4::{gamma, ren_phi, F4Element, QuaternaryTree};
pub use isos::{alpha_iso, theta_iso};
pub use shifts::{e_generators, flip, phi_l, phi_r, w_generators, w_words};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("{0} is not a member")]
    NotAMember(String),
    #[error("{0} is not in the image of the right shift")]
    NotInShiftImage(String),
}
