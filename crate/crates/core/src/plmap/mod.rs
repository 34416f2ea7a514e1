//! Piecewise-linear semantics of diagrams, all in exact dyadic arithmetic.

mod dyadic;
mod map;

use thiserror::Error;

use crate::trees::{BinaryTree, TreeDiagram};

pub use dyadic::{BinaryWord, Dyadic, MAX_EXP};
pub use map::{FixedSet, PLMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("malformed dyadic '{0}'")]
    MalformedDyadic(String),
    #[error("word '{0}' does not select a leaf")]
    UnresolvableWord(String),
    #[error("{point} is not fixed (maps to {image})")]
    NotFixed { point: Dyadic, image: Dyadic },
    #[error("not an element of F: {0}")]
    NotInF(String),
    #[error("{0} is not an interior dyadic")]
    Boundary(Dyadic),
}

/// The homeomorphism of a diagram: top leaf intervals map onto bottom leaf intervals.
pub fn to_pl(d: &TreeDiagram) -> PLMap {
    let ends = |t: &BinaryTree| {
        let mut v: Vec<Dyadic> = t.leaf_words().iter().map(BinaryWord::to_dyadic).collect();
        v.push(Dyadic::ONE);
        v
    };
    PLMap::new(ends(d.top()), ends(d.bottom())).expect("diagram maps are in F")
}

/// Rebuilds the reduced diagram of a map by subdividing standard dyadic intervals.
pub fn from_pl(m: &PLMap) -> TreeDiagram {
    let mut images = Vec::new();
    let top = subdivide(m, &BinaryWord::empty(), &mut images);
    let bottom = BinaryTree::from_leaf_words(&images).expect("images of a subdivision tile [0,1]");
    TreeDiagram::new(top, bottom).expect("leaf counts agree by construction")
}

fn interval_end(w: &BinaryWord) -> Dyadic {
    let e = w.len() as u32;
    let left = w.to_dyadic();
    Dyadic::from_scaled(left.scaled(e) + 1, e)
}

/// The word of a standard dyadic interval `[a, b]`, if it is one.
fn standard_word(a: Dyadic, b: Dyadic) -> Option<BinaryWord> {
    let e = a.exponent().max(b.exponent());
    let len = b.scaled(e) - a.scaled(e);
    if len <= 0 || len & (len - 1) != 0 {
        return None;
    }
    let k = e - len.trailing_zeros();
    if a.exponent() > k {
        return None;
    }
    Some(a.word_of_length(k as usize))
}

fn subdivide(m: &PLMap, w: &BinaryWord, images: &mut Vec<BinaryWord>) -> BinaryTree {
    let (a, b) = (w.to_dyadic(), interval_end(w));
    let linear = !m.breakpoints().iter().any(|&x| a < x && x < b);
    if linear {
        if let Some(img) = standard_word(m.evaluate(a), m.evaluate(b)) {
            images.push(img);
            return BinaryTree::Leaf;
        }
    }
    let left = subdivide(m, &w.child(0), images);
    let right = subdivide(m, &w.child(1), images);
    BinaryTree::caret(left, right)
}

/// The digit action: the prefix `u_i` of `w` is replaced by the matched bottom word `v_i`.
///
/// A word that stops at an internal vertex of the top tree is padded with zeros,
/// which leaves its dyadic value unchanged. The empty word cannot be resolved
/// unless the top tree is a single leaf.
pub fn act_digits(d: &TreeDiagram, w: &BinaryWord) -> Result<BinaryWord, PlError> {
    if w.is_empty() && !d.top().is_leaf() {
        return Err(PlError::UnresolvableWord(w.to_string()));
    }
    let mut node = d.top();
    let mut index = 0usize;
    let mut depth = 0usize;
    while let BinaryTree::Caret(l, r) = node {
        let digit = w.digits().get(depth).copied().unwrap_or(0);
        if digit == 0 {
            node = l;
        } else {
            index += l.leaf_count();
            node = r;
        }
        depth += 1;
    }
    let suffix = BinaryWord::from_digits(w.digits().iter().skip(depth).copied());
    let bottom = d.bottom().leaf_words();
    Ok(bottom[index].concat(&suffix))
}

/// `(log2 f'(0), log2 f'(1))`, read from the outer leaf depths.
pub fn pi_ab(d: &TreeDiagram) -> (i64, i64) {
    let (t, b) = (d.top(), d.bottom());
    (
        t.left_depth() as i64 - b.left_depth() as i64,
        t.right_depth() as i64 - b.right_depth() as i64,
    )
}

/// Fixed intervals and isolated interior dyadic fixed points.
pub fn fixed_dyadics(d: &TreeDiagram) -> FixedSet {
    to_pl(d).fixed_set()
}

/// Splits `d` at a fixed interior dyadic into the part acting on `[0, α]` and the
/// part acting on `[α, 1]`; their product is `d`.
pub fn components_at(
    d: &TreeDiagram,
    alpha: Dyadic,
) -> Result<(TreeDiagram, TreeDiagram), PlError> {
    if !alpha.is_interior() {
        return Err(PlError::Boundary(alpha));
    }
    let m = to_pl(d);
    let image = m.evaluate(alpha);
    if image != alpha {
        return Err(PlError::NotFixed {
            point: alpha,
            image,
        });
    }
    Ok((from_pl(&m.left_part(alpha)), from_pl(&m.right_part(alpha))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn x(n: u32) -> TreeDiagram {
        TreeDiagram::generator(n)
    }

    #[test]
    fn x0_pieces() {
        assert_eq!(
            to_pl(&x(0)).to_string(),
            "[0,1/4]->[0,1/2] [1/4,1/2]->[1/2,3/4] [1/2,1]->[3/4,1]"
        );
        assert!(to_pl(&TreeDiagram::identity()).is_identity());
    }

    #[test]
    fn digit_action_examples() {
        assert_eq!(act_digits(&x(0), &bw("11")).unwrap(), bw("111"));
        let x0m2 = x(0).pow(-2);
        assert_eq!(act_digits(&x0m2, &bw("101")).unwrap(), bw("0011"));
        assert!(matches!(
            act_digits(&x(0), &BinaryWord::empty()),
            Err(PlError::UnresolvableWord(_))
        ));
        assert_eq!(
            act_digits(&TreeDiagram::identity(), &BinaryWord::empty()).unwrap(),
            BinaryWord::empty()
        );
        // stops at the internal vertex 0 of the top tree of x_0
        assert_eq!(act_digits(&x(0), &bw("0")).unwrap(), bw("0"));
    }

    #[test]
    fn endpoint_slopes() {
        assert_eq!(pi_ab(&x(0)), (1, -1));
        for n in 1..=4 {
            assert_eq!(pi_ab(&x(n)), (0, -1));
        }
        assert_eq!(pi_ab(&x(0).inverse()), (-1, 1));
    }

    #[test]
    fn round_trip_generators() {
        for n in 0..4 {
            assert_eq!(from_pl(&to_pl(&x(n))), x(n));
        }
        assert_eq!(from_pl(&PLMap::identity()), TreeDiagram::identity());
    }

    #[test]
    fn x0_has_no_interior_fixed_points() {
        assert_eq!(fixed_dyadics(&x(0)), FixedSet::default());
        let fs = fixed_dyadics(&x(1));
        assert_eq!(fs.intervals, vec![(Dyadic::ZERO, Dyadic::HALF)]);
    }

    #[test]
    fn components_errors() {
        assert!(matches!(
            components_at(&x(0), Dyadic::HALF),
            Err(PlError::NotFixed { .. })
        ));
        assert!(matches!(
            components_at(&x(0), Dyadic::ONE),
            Err(PlError::Boundary(_))
        ));
        let (a, b) = components_at(&x(1), dy(".1")).unwrap();
        assert_eq!(a, TreeDiagram::identity());
        assert_eq!(b, x(1));
    }
}
