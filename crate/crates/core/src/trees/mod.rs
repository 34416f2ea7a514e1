//! Elements of Thompson's group F as reduced tree-pair diagrams.
//!
//! Products follow the left-to-right convention `(f·g)(t) = g(f(t))`: the word
//! `x0 x1` applies `x_0` first. Most software composes the other way round.

mod diagram;
mod normal_form;
mod tree;
mod word;

use thiserror::Error;

pub use diagram::TreeDiagram;
pub use normal_form::NormalForm;
pub use tree::{enumerate_trees, BinaryTree};
pub use word::{GeneratorWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("malformed diagram: top has {top} leaves, bottom has {bottom}")]
    MalformedDiagram { top: usize, bottom: usize },
    #[error("tree syntax error: {0}")]
    Syntax(String),
    #[error("leaf words do not form a tree: {0}")]
    NotAPrefixCode(String),
}
