use std::fmt;
use std::str::FromStr;

use super::TreeError;
use crate::plmap::BinaryWord;

/// A rooted planar binary tree.
///
/// The derived ordering compares `Leaf < Caret` and then children left to
/// right, which is a preorder structural key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Caret(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn caret(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Caret(Box::new(left), Box::new(right))
    }

    /// The single caret with two leaves.
    pub fn simple_caret() -> Self {
        BinaryTree::caret(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    /// Complete tree in which every leaf sits at `depth`.
    pub fn complete(depth: usize) -> Self {
        if depth == 0 {
            BinaryTree::Leaf
        } else {
            let sub = BinaryTree::complete(depth - 1);
            BinaryTree::caret(sub.clone(), sub)
        }
    }

    /// Right vine with `leaves` leaves: every caret hangs off the right spine.
    pub fn right_vine(leaves: usize) -> Self {
        assert!(leaves >= 1);
        (1..leaves).fold(BinaryTree::Leaf, |t, _| {
            BinaryTree::caret(BinaryTree::Leaf, t)
        })
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Caret(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn caret_count(&self) -> usize {
        self.leaf_count() - 1
    }

    /// Root-to-leaf paths, left to right.
    pub fn leaf_words(&self) -> Vec<BinaryWord> {
        let mut out = Vec::with_capacity(self.leaf_count());
        let mut path = Vec::new();
        self.collect_leaf_words(&mut path, &mut out);
        out
    }

    fn collect_leaf_words(&self, path: &mut Vec<u8>, out: &mut Vec<BinaryWord>) {
        match self {
            BinaryTree::Leaf => out.push(BinaryWord::from_digits(path.iter().copied())),
            BinaryTree::Caret(l, r) => {
                path.push(0);
                l.collect_leaf_words(path, out);
                path.pop();
                path.push(1);
                r.collect_leaf_words(path, out);
                path.pop();
            }
        }
    }

    /// Depth of the leftmost leaf.
    pub fn left_depth(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Caret(l, _) => 1 + l.left_depth(),
        }
    }

    /// Depth of the rightmost leaf.
    pub fn right_depth(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Caret(_, r) => 1 + r.right_depth(),
        }
    }

    /// Reflection about the vertical axis.
    pub fn mirror(&self) -> Self {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Caret(l, r) => BinaryTree::caret(r.mirror(), l.mirror()),
        }
    }

    pub fn subtree_at(&self, word: &BinaryWord) -> Option<&BinaryTree> {
        let mut node = self;
        for &d in word.digits() {
            match node {
                BinaryTree::Leaf => return None,
                BinaryTree::Caret(l, r) => node = if d == 0 { l } else { r },
            }
        }
        Some(node)
    }

    /// Smallest common refinement: the union of both caret sets.
    pub fn union(&self, other: &BinaryTree) -> BinaryTree {
        match (self, other) {
            (BinaryTree::Leaf, t) | (t, BinaryTree::Leaf) => t.clone(),
            (BinaryTree::Caret(a, b), BinaryTree::Caret(c, d)) => {
                BinaryTree::caret(a.union(c), b.union(d))
            }
        }
    }

    /// For a refinement `finer` of `self`, the subtree of `finer` hanging at each leaf of `self`.
    ///
    /// Panics if `finer` does not contain every caret of `self`.
    pub fn leaf_subtrees_in(&self, finer: &BinaryTree) -> Vec<BinaryTree> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaf_subtrees(finer, &mut out);
        out
    }

    fn collect_leaf_subtrees(&self, finer: &BinaryTree, out: &mut Vec<BinaryTree>) {
        match (self, finer) {
            (BinaryTree::Leaf, t) => out.push(t.clone()),
            (BinaryTree::Caret(a, b), BinaryTree::Caret(c, d)) => {
                a.collect_leaf_subtrees(c, out);
                b.collect_leaf_subtrees(d, out);
            }
            (BinaryTree::Caret(..), BinaryTree::Leaf) => {
                panic!("leaf_subtrees_in: argument is not a refinement")
            }
        }
    }

    /// Replaces leaf `i` by `subs[i]`, left to right.
    pub fn graft(&self, subs: &[BinaryTree]) -> BinaryTree {
        assert_eq!(subs.len(), self.leaf_count(), "one subtree per leaf");
        let mut it = subs.iter();
        self.graft_from(&mut it)
    }

    fn graft_from<'a>(&self, it: &mut impl Iterator<Item = &'a BinaryTree>) -> BinaryTree {
        match self {
            BinaryTree::Leaf => it.next().expect("enough subtrees").clone(),
            BinaryTree::Caret(l, r) => {
                let l = l.graft_from(it);
                let r = r.graft_from(it);
                BinaryTree::caret(l, r)
            }
        }
    }

    /// Indices `i` such that leaves `i` and `i + 1` are the two children of one caret.
    pub fn leaf_caret_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaf_carets(&mut 0, &mut out);
        out
    }

    fn collect_leaf_carets(&self, next: &mut usize, out: &mut Vec<usize>) {
        match self {
            BinaryTree::Leaf => *next += 1,
            BinaryTree::Caret(l, r) => {
                if l.is_leaf() && r.is_leaf() {
                    out.push(*next);
                    *next += 2;
                } else {
                    l.collect_leaf_carets(next, out);
                    r.collect_leaf_carets(next, out);
                }
            }
        }
    }

    /// Collapses the leaf carets starting at the given (sorted) leaf indices.
    pub(crate) fn collapse_leaf_carets(&self, positions: &[usize]) -> BinaryTree {
        self.collapse_from(&mut 0, positions)
    }

    fn collapse_from(&self, next: &mut usize, positions: &[usize]) -> BinaryTree {
        match self {
            BinaryTree::Leaf => {
                *next += 1;
                BinaryTree::Leaf
            }
            BinaryTree::Caret(l, r) => {
                if l.is_leaf() && r.is_leaf() && positions.binary_search(next).is_ok() {
                    *next += 2;
                    return BinaryTree::Leaf;
                }
                let l = l.collapse_from(next, positions);
                let r = r.collapse_from(next, positions);
                BinaryTree::caret(l, r)
            }
        }
    }

    /// Rebuilds a tree from its leaf words, which must form a complete prefix code
    /// listed left to right.
    pub fn from_leaf_words(words: &[BinaryWord]) -> Result<BinaryTree, TreeError> {
        fn build(words: &[BinaryWord], depth: usize) -> Result<BinaryTree, TreeError> {
            match words {
                [] => Err(TreeError::NotAPrefixCode("missing subtree".into())),
                [w] if w.len() == depth => Ok(BinaryTree::Leaf),
                _ => {
                    if words.iter().any(|w| w.len() <= depth) {
                        return Err(TreeError::NotAPrefixCode(
                            "a leaf word is a prefix of another".into(),
                        ));
                    }
                    let split = words.partition_point(|w| w.digits()[depth] == 0);
                    if words[split..].iter().any(|w| w.digits()[depth] == 0) {
                        return Err(TreeError::NotAPrefixCode("words out of order".into()));
                    }
                    Ok(BinaryTree::caret(
                        build(&words[..split], depth + 1)?,
                        build(&words[split..], depth + 1)?,
                    ))
                }
            }
        }
        build(words, 0)
    }

    /// Per-leaf exponents of the standard normal form: leaf `k` counts the carets whose
    /// leftmost leaf is `k` and which do not lie on the right spine.
    pub fn leaf_exponents(&self) -> Vec<u32> {
        let mut exps = vec![0; self.leaf_count()];
        self.collect_exponents(0, true, &mut exps);
        exps
    }

    /// The tree with the given [`leaf_exponents`](Self::leaf_exponents) and the
    /// shortest right spine; missing trailing exponents are zero.
    pub fn from_leaf_exponents(exps: &[u32]) -> BinaryTree {
        fn left_path(k: u32, pos: &mut usize, exps: &[u32]) -> BinaryTree {
            if k == 0 {
                *pos += 1;
                return BinaryTree::Leaf;
            }
            let l = left_path(k - 1, pos, exps);
            let r = left_path(exps.get(*pos).copied().unwrap_or(0), pos, exps);
            BinaryTree::caret(l, r)
        }
        fn spine(pos: &mut usize, exps: &[u32]) -> BinaryTree {
            if exps.iter().skip(*pos).all(|&e| e == 0) {
                return BinaryTree::Leaf;
            }
            let l = left_path(exps[*pos], pos, exps);
            BinaryTree::caret(l, spine(pos, exps))
        }
        spine(&mut 0, exps)
    }

    fn collect_exponents(&self, offset: usize, on_right_spine: bool, exps: &mut [u32]) {
        if let BinaryTree::Caret(l, r) = self {
            if !on_right_spine {
                exps[offset] += 1;
            }
            l.collect_exponents(offset, false, exps);
            r.collect_exponents(offset + l.leaf_count(), on_right_spine, exps);
        }
    }

    fn parse_at(chars: &[u8], pos: &mut usize) -> Result<BinaryTree, TreeError> {
        match chars.get(*pos) {
            Some(b'.') => {
                *pos += 1;
                Ok(BinaryTree::Leaf)
            }
            Some(b'(') => {
                *pos += 1;
                let l = BinaryTree::parse_at(chars, pos)?;
                let r = BinaryTree::parse_at(chars, pos)?;
                if chars.get(*pos) != Some(&b')') {
                    return Err(TreeError::Syntax(format!("expected ')' at {}", *pos)));
                }
                *pos += 1;
                Ok(BinaryTree::caret(l, r))
            }
            Some(&c) => Err(TreeError::Syntax(format!(
                "unexpected '{}' at {}",
                c as char, *pos
            ))),
            None => Err(TreeError::Syntax("unexpected end of tree".into())),
        }
    }
}

/// `T ::= "." | "(" T T ")"`
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Caret(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = BinaryTree::parse_at(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(TreeError::Syntax(format!("trailing input at {pos}")));
        }
        Ok(t)
    }
}

/// All trees with `n` leaves, each once, in structural order. There are Catalan(n - 1).
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    assert!(n >= 1, "a tree has at least one leaf");
    let mut by_size: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
    for size in 2..=n {
        let mut trees = Vec::new();
        for left in 1..size {
            for l in &by_size[left] {
                for r in &by_size[size - left] {
                    trees.push(BinaryTree::caret(l.clone(), r.clone()));
                }
            }
        }
        trees.sort();
        by_size.push(trees);
    }
    by_size.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    fn words(tree: &BinaryTree) -> Vec<String> {
        tree.leaf_words().iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn leaf_words_of_small_trees() {
        assert_eq!(words(&BinaryTree::Leaf), vec!["ε"]);
        assert_eq!(words(&t("((..).)")), vec!["00", "01", "1"]);
        assert_eq!(words(&t("(.(..))")), vec!["0", "10", "11"]);
    }

    #[test]
    fn leaf_words_round_trip() {
        for n in 1..=7 {
            for tree in enumerate_trees(n) {
                let ws = tree.leaf_words();
                assert_eq!(ws.len(), n);
                assert!(ws.windows(2).all(|p| p[0] < p[1]));
                assert_eq!(BinaryTree::from_leaf_words(&ws).unwrap(), tree);
            }
        }
    }

    #[test]
    fn from_leaf_words_rejects_non_codes() {
        let bad: Vec<BinaryWord> = ["0", "01"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(BinaryTree::from_leaf_words(&bad).is_err());
        let missing: Vec<BinaryWord> = ["00", "1"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(BinaryTree::from_leaf_words(&missing).is_err());
    }

    #[test]
    fn catalan_counts() {
        // C(n-1) from the recurrence C(m+1) = sum C(i) C(m-i)
        let mut catalan = vec![1u64];
        for m in 0..9 {
            let next = (0..=m).map(|i| catalan[i] * catalan[m - i]).sum();
            catalan.push(next);
        }
        for n in 1..=9 {
            assert_eq!(enumerate_trees(n).len() as u64, catalan[n - 1], "n = {n}");
        }
        assert_eq!(enumerate_trees(4).len(), 5);
        assert_eq!(enumerate_trees(8).len(), 429);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let trees = enumerate_trees(7);
        let set: std::collections::HashSet<_> = trees.iter().collect();
        assert_eq!(set.len(), trees.len());
    }

    #[test]
    fn grammar_round_trip() {
        for s in [".", "(..)", "((..).)", "(.((..)(..)))"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("(..".parse::<BinaryTree>().is_err());
        assert!("(...)".parse::<BinaryTree>().is_err());
        assert!("x".parse::<BinaryTree>().is_err());
    }

    #[test]
    fn union_and_graft() {
        let a = t("((..).)");
        let b = t("(.(..))");
        let u = a.union(&b);
        assert_eq!(u, t("((..)(..))"));
        let subs = a.leaf_subtrees_in(&u);
        assert_eq!(a.graft(&subs), u);
    }

    #[test]
    fn leaf_carets() {
        assert_eq!(t("((..)(..))").leaf_caret_positions(), vec![0, 2]);
        assert_eq!(t("(.(..))").leaf_caret_positions(), vec![1]);
        assert_eq!(t("((..)(..))").collapse_leaf_carets(&[2]), t("((..).)"));
    }

    #[test]
    fn exponents_skip_right_spine() {
        assert_eq!(t("((..).)").leaf_exponents(), vec![1, 0, 0]);
        assert_eq!(t("(.(..))").leaf_exponents(), vec![0, 0, 0]);
        assert_eq!(t("(((..).).)").leaf_exponents(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn exponents_round_trip() {
        for n in 1..=7 {
            for tree in enumerate_trees(n) {
                let back = BinaryTree::from_leaf_exponents(&tree.leaf_exponents());
                assert_eq!(
                    back.leaf_exponents()[..],
                    tree.leaf_exponents()[..back.leaf_count()]
                );
                assert!(back.leaf_count() <= tree.leaf_count());
            }
        }
        assert_eq!(BinaryTree::from_leaf_exponents(&[1]), t("((..).)"));
        assert_eq!(BinaryTree::from_leaf_exponents(&[]), BinaryTree::Leaf);
    }
}
