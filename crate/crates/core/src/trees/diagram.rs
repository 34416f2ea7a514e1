use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use super::{BinaryTree, GeneratorWord, NormalForm, TreeError};
use crate::plmap::BinaryWord;

/// An element of F as a pair of trees with equal leaf counts.
///
/// Leaf `i` of `top` is matched with leaf `i` of `bottom`; the element maps the
/// standard dyadic interval of the top leaf linearly onto that of the bottom leaf.
/// Every constructor except [`TreeDiagram::unreduced`] returns the reduced
/// representative, so structural equality is equality in F.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeDiagram {
    top: BinaryTree,
    bottom: BinaryTree,
}

impl TreeDiagram {
    /// The reduced diagram of the pair.
    pub fn new(top: BinaryTree, bottom: BinaryTree) -> Result<Self, TreeError> {
        Ok(Self::unreduced(top, bottom)?.reduce())
    }

    /// The pair as given, which may contain opposing carets.
    pub fn unreduced(top: BinaryTree, bottom: BinaryTree) -> Result<Self, TreeError> {
        let (a, b) = (top.leaf_count(), bottom.leaf_count());
        if a != b {
            return Err(TreeError::MalformedDiagram { top: a, bottom: b });
        }
        Ok(TreeDiagram { top, bottom })
    }

    pub fn identity() -> Self {
        TreeDiagram {
            top: BinaryTree::Leaf,
            bottom: BinaryTree::Leaf,
        }
    }

    /// `x_n`: the right shift applied `n` times to `x_0`.
    pub fn generator(n: u32) -> Self {
        let mut top = BinaryTree::caret(BinaryTree::simple_caret(), BinaryTree::Leaf);
        let mut bottom = BinaryTree::caret(BinaryTree::Leaf, BinaryTree::simple_caret());
        for _ in 0..n {
            top = BinaryTree::caret(BinaryTree::Leaf, top);
            bottom = BinaryTree::caret(BinaryTree::Leaf, bottom);
        }
        TreeDiagram { top, bottom }
    }

    pub fn top(&self) -> &BinaryTree {
        &self.top
    }

    pub fn bottom(&self) -> &BinaryTree {
        &self.bottom
    }

    pub fn leaf_count(&self) -> usize {
        self.top.leaf_count()
    }

    pub fn is_identity(&self) -> bool {
        self.reduce() == TreeDiagram::identity()
    }

    /// Matched `(top word, bottom word)` pairs, left to right.
    pub fn leaf_pairs(&self) -> Vec<(BinaryWord, BinaryWord)> {
        self.top
            .leaf_words()
            .into_iter()
            .zip(self.bottom.leaf_words())
            .collect()
    }

    /// True when no index carries a leaf caret in both trees.
    pub fn is_reduced(&self) -> bool {
        let bottom = self.bottom.leaf_caret_positions();
        !self
            .top
            .leaf_caret_positions()
            .iter()
            .any(|p| bottom.binary_search(p).is_ok())
    }

    /// Cancels opposing carets until none remain.
    pub fn reduce(&self) -> TreeDiagram {
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        loop {
            let b = bottom.leaf_caret_positions();
            let common: Vec<usize> = top
                .leaf_caret_positions()
                .into_iter()
                .filter(|p| b.binary_search(p).is_ok())
                .collect();
            if common.is_empty() {
                return TreeDiagram { top, bottom };
            }
            top = top.collapse_leaf_carets(&common);
            bottom = bottom.collapse_leaf_carets(&common);
        }
    }

    /// Re-expresses the element with top tree `finer`, which must refine `self.top`.
    pub fn expand_top(&self, finer: &BinaryTree) -> TreeDiagram {
        let subs = self.top.leaf_subtrees_in(finer);
        TreeDiagram {
            top: self.top.graft(&subs),
            bottom: self.bottom.graft(&subs),
        }
    }

    /// Re-expresses the element with bottom tree `finer`, which must refine `self.bottom`.
    pub fn expand_bottom(&self, finer: &BinaryTree) -> TreeDiagram {
        let subs = self.bottom.leaf_subtrees_in(finer);
        TreeDiagram {
            top: self.top.graft(&subs),
            bottom: self.bottom.graft(&subs),
        }
    }

    /// The product `self · other`, i.e. `t ↦ other(self(t))`: apply `self` first.
    pub fn multiply(&self, other: &TreeDiagram) -> TreeDiagram {
        Self::multiply_raw(self, other).reduce()
    }

    /// Product without the final reduction.
    pub fn multiply_raw(a: &TreeDiagram, b: &TreeDiagram) -> TreeDiagram {
        let common = a.bottom.union(&b.top);
        let left = a.expand_bottom(&common);
        let right = b.expand_top(&common);
        TreeDiagram {
            top: left.top,
            bottom: right.bottom,
        }
    }

    pub fn inverse(&self) -> TreeDiagram {
        TreeDiagram {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    pub fn pow(&self, exponent: i64) -> TreeDiagram {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = TreeDiagram::identity();
        let mut sq = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.multiply(&sq);
            }
        }
        acc
    }

    /// Product of the word's letters, left to right.
    pub fn from_word(word: &GeneratorWord) -> TreeDiagram {
        word.letters()
            .iter()
            .fold(TreeDiagram::identity(), |acc, l| {
                acc.multiply(&TreeDiagram::generator(l.index).pow(l.exponent as i64))
            })
    }

    /// `x_0^{e_0} x_1^{e_1} ⋯`, built without multiplying.
    pub fn positive(exps: &[u32]) -> TreeDiagram {
        let top = BinaryTree::from_leaf_exponents(exps);
        let bottom = BinaryTree::right_vine(top.leaf_count());
        TreeDiagram::new(top, bottom).expect("equal leaf counts")
    }

    pub fn normal_form(&self) -> NormalForm {
        let d = self.reduce();
        NormalForm::from_exponents(d.top.leaf_exponents(), d.bottom.leaf_exponents())
    }
}

impl Mul for &TreeDiagram {
    type Output = TreeDiagram;

    fn mul(self, rhs: &TreeDiagram) -> TreeDiagram {
        self.multiply(rhs)
    }
}

/// `T "|" T` with the top tree first.
impl fmt::Display for TreeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}

impl FromStr for TreeDiagram {
    type Err = TreeError;

    /// Parses `T|T` and reduces the result.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (top, bottom) = s
            .split_once('|')
            .ok_or_else(|| TreeError::Syntax("expected 'top|bottom'".into()))?;
        TreeDiagram::new(top.parse()?, bottom.parse()?)
    }
}
