use std::fmt;

use crate::trees::{BinaryTree, TreeDiagram};

/// A rooted planar tree whose internal vertices all have four children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuaternaryTree {
    Leaf,
    Node(Box<[QuaternaryTree; 4]>),
}

use QuaternaryTree::{Leaf, Node};

impl QuaternaryTree {
    pub fn node(
        a: QuaternaryTree,
        b: QuaternaryTree,
        c: QuaternaryTree,
        d: QuaternaryTree,
    ) -> Self {
        Node(Box::new([a, b, c, d]))
    }

    pub fn simple_node() -> Self {
        Self::node(Leaf, Leaf, Leaf, Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Leaf => 1,
            Node(ch) => ch.iter().map(|c| c.leaf_count()).sum(),
        }
    }

    /// The smallest common refinement of two trees.
    pub fn union(&self, other: &QuaternaryTree) -> QuaternaryTree {
        match (self, other) {
            (Leaf, t) | (t, Leaf) => t.clone(),
            (Node(a), Node(b)) => Node(Box::new(std::array::from_fn(|i| a[i].union(&b[i])))),
        }
    }

    /// The subtrees of `finer` hanging below each leaf of `self`.
    fn leaf_subtrees_in(&self, finer: &QuaternaryTree, out: &mut Vec<QuaternaryTree>) {
        match (self, finer) {
            (Leaf, t) => out.push(t.clone()),
            (Node(a), Node(b)) => {
                for i in 0..4 {
                    a[i].leaf_subtrees_in(&b[i], out);
                }
            }
            (Node(_), Leaf) => panic!("tree is not a refinement"),
        }
    }

    fn graft_from(&self, subs: &mut std::slice::Iter<'_, QuaternaryTree>) -> QuaternaryTree {
        match self {
            Leaf => subs.next().expect("one subtree per leaf").clone(),
            Node(ch) => Node(Box::new(std::array::from_fn(|i| ch[i].graft_from(subs)))),
        }
    }

    /// Replaces leaf `i` by `subs[i]`.
    pub fn graft(&self, subs: &[QuaternaryTree]) -> QuaternaryTree {
        assert_eq!(subs.len(), self.leaf_count());
        self.graft_from(&mut subs.iter())
    }

    /// Leftmost leaf index of every node whose children are all leaves.
    fn leaf_node_positions(&self, offset: usize, out: &mut Vec<usize>) {
        if let Node(ch) = self {
            if ch.iter().all(|c| *c == Leaf) {
                out.push(offset);
                return;
            }
            let mut o = offset;
            for c in ch.iter() {
                c.leaf_node_positions(o, out);
                o += c.leaf_count();
            }
        }
    }

    fn positions(&self) -> Vec<usize> {
        let mut v = Vec::new();
        self.leaf_node_positions(0, &mut v);
        v
    }

    fn collapse(&self, offset: usize, positions: &[usize]) -> QuaternaryTree {
        match self {
            Leaf => Leaf,
            Node(ch) => {
                if ch.iter().all(|c| *c == Leaf) && positions.binary_search(&offset).is_ok() {
                    return Leaf;
                }
                let mut o = offset;
                Node(Box::new(std::array::from_fn(|i| {
                    let t = ch[i].collapse(o, positions);
                    o += ch[i].leaf_count();
                    t
                })))
            }
        }
    }

    /// Ren's map: every node becomes the complete binary tree with four leaves.
    pub fn to_binary(&self) -> BinaryTree {
        match self {
            Leaf => BinaryTree::Leaf,
            Node(ch) => BinaryTree::caret(
                BinaryTree::caret(ch[0].to_binary(), ch[1].to_binary()),
                BinaryTree::caret(ch[2].to_binary(), ch[3].to_binary()),
            ),
        }
    }
}

impl fmt::Display for QuaternaryTree {
    /// `.` for a leaf, `(abcd)` for a node.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => write!(f, "."),
            Node(ch) => {
                write!(f, "(")?;
                for c in ch.iter() {
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An element of the Brown–Thompson group `F_4` as a reduced pair of 4-ary trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F4Element {
    top: QuaternaryTree,
    bottom: QuaternaryTree,
}

impl F4Element {
    /// Reduced element of a pair; panics on unequal leaf counts.
    pub fn new(top: QuaternaryTree, bottom: QuaternaryTree) -> Self {
        assert_eq!(
            top.leaf_count(),
            bottom.leaf_count(),
            "malformed 4-ary diagram"
        );
        F4Element { top, bottom }.reduce()
    }

    pub fn identity() -> Self {
        F4Element {
            top: Leaf,
            bottom: Leaf,
        }
    }

    pub fn top(&self) -> &QuaternaryTree {
        &self.top
    }

    pub fn bottom(&self) -> &QuaternaryTree {
        &self.bottom
    }

    fn reduce(self) -> Self {
        let (mut top, mut bottom) = (self.top, self.bottom);
        loop {
            let b = bottom.positions();
            let common: Vec<usize> = top
                .positions()
                .into_iter()
                .filter(|p| b.binary_search(p).is_ok())
                .collect();
            if common.is_empty() {
                return F4Element { top, bottom };
            }
            top = top.collapse(0, &common);
            bottom = bottom.collapse(0, &common);
        }
    }

    /// `y_n`: the first three are drawn directly, the rest are right shifts of earlier ones.
    pub fn generator(n: u32) -> Self {
        let right = QuaternaryTree::node(Leaf, Leaf, Leaf, QuaternaryTree::simple_node());
        let top = match n % 3 {
            0 => QuaternaryTree::node(QuaternaryTree::simple_node(), Leaf, Leaf, Leaf),
            1 => QuaternaryTree::node(Leaf, QuaternaryTree::simple_node(), Leaf, Leaf),
            _ => QuaternaryTree::node(Leaf, Leaf, QuaternaryTree::simple_node(), Leaf),
        };
        let (mut top, mut bottom) = (top, right);
        for _ in 0..n / 3 {
            top = QuaternaryTree::node(Leaf, Leaf, Leaf, top);
            bottom = QuaternaryTree::node(Leaf, Leaf, Leaf, bottom);
        }
        F4Element { top, bottom }
    }

    /// `self` first, then `other`.
    pub fn multiply(&self, other: &F4Element) -> F4Element {
        let common = self.bottom.union(&other.top);
        let mut left = Vec::new();
        self.bottom.leaf_subtrees_in(&common, &mut left);
        let mut right = Vec::new();
        other.top.leaf_subtrees_in(&common, &mut right);
        F4Element {
            top: self.top.graft(&left),
            bottom: other.bottom.graft(&right),
        }
        .reduce()
    }

    pub fn inverse(&self) -> F4Element {
        F4Element {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
        }
    }

    pub fn pow(&self, exponent: i64) -> F4Element {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        (0..exponent.unsigned_abs()).fold(F4Element::identity(), |acc, _| acc.multiply(&base))
    }

    /// Product of `y_index^exponent` factors, left to right.
    pub fn from_word(letters: &[(u32, i64)]) -> F4Element {
        letters.iter().fold(F4Element::identity(), |acc, &(i, e)| {
            acc.multiply(&F4Element::generator(i).pow(e))
        })
    }
}

impl fmt::Display for F4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}

/// Ren's map on trees.
pub fn ren_phi(t: &QuaternaryTree) -> BinaryTree {
    t.to_binary()
}

/// The isomorphism `F_4 → 𝓕`: apply Ren's map to both trees and reduce.
pub fn gamma(e: &F4Element) -> TreeDiagram {
    TreeDiagram::new(ren_phi(e.top()), ren_phi(e.bottom()))
        .expect("Ren's map preserves leaf counts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup_tools::w_generators;

    fn y(n: u32) -> F4Element {
        F4Element::generator(n)
    }

    #[test]
    fn gamma_of_y_is_w() {
        let w = w_generators();
        for i in 0..4 {
            assert_eq!(gamma(&y(i)), w[i as usize], "y{i}");
        }
        assert_eq!(gamma(&F4Element::identity()), TreeDiagram::identity());
    }

    #[test]
    fn brown_thompson_relations() {
        for n in 1..6 {
            for l in 0..n {
                assert_eq!(
                    y(n).multiply(&y(l)),
                    y(l).multiply(&y(n + 3)),
                    "n={n} l={l}"
                );
            }
        }
    }

    #[test]
    fn ren_map_on_a_node() {
        assert_eq!(ren_phi(&Leaf), BinaryTree::Leaf);
        assert_eq!(
            ren_phi(&QuaternaryTree::simple_node()),
            BinaryTree::complete(2)
        );
    }

    #[test]
    fn inverse_cancels() {
        let g = F4Element::from_word(&[(0, 2), (3, -1), (1, 1)]);
        assert_eq!(g.multiply(&g.inverse()), F4Element::identity());
        assert_eq!(
            gamma(&g).multiply(&gamma(&g.inverse())),
            TreeDiagram::identity()
        );
    }
}
