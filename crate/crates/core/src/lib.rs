//! Tree-pair diagrams for Thompson's group F, the weight and face-coloring
//! machinery of its 3-colorable subgroups, and exhaustive verification tools.

pub mod coloring;
pub mod explore;
pub mod expr;
pub mod plmap;
pub mod subgroup_tools;
pub mod trees;
