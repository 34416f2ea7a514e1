//! Weights, forced face colorings and the membership oracles built on them.
//!
//! Two colorings are in play. In the plane picture the root stem is removed, the
//! face around the top root gets 0 and the face under it 1; the color left of the
//! leaf with word `α` is then `ω̃(α)`. In the strip picture the stem splits the
//! outside into a left face 0 and a right face 1; the color left of `α` is `ω(α)`.

mod classes;
mod color;
mod faces;
mod membership;
mod weights;

pub use classes::{classify_dyadic, DyadicClass, SLabel};
pub use color::Color;
pub use faces::{forced_coloring, plane_coloring, strip_coloring, DiagramColoring, FaceColoring};
pub use membership::{
    member_e, member_e_by_coloring, member_e_by_weights, member_e_even, member_e_even_by_coloring,
    member_e_even_by_weights, member_f, member_f_by_coloring, member_f_by_weights, member_h,
    member_k, member_oriented, member_smallstrip, MembershipReport, Memberships,
};
pub use weights::{omega, omega_tilde};
