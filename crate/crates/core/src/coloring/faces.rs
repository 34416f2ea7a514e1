use super::Color;
use crate::trees::{BinaryTree, TreeDiagram};

/// Face colors of one tree, read along the leaf line.
///
/// `gaps[i]` is the color of the face to the left of leaf `i`; `gaps[n]` is the face
/// right of the last leaf. `outer` is the root-adjacent face on the far side of the
/// leaves (above a top tree, below a bottom tree) and `inner` the face under the
/// root caret.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    pub outer: Color,
    pub inner: Color,
    pub gaps: Vec<Color>,
}

/// Left and right neighbors of every leaf under the rule that a caret with faces
/// `(l, r)` beside it hands `(l, b)` and `(b, r)` to its children, `b` the third color.
fn propagate(t: &BinaryTree, left: Color, right: Color, gaps: &mut Vec<Color>) {
    match t {
        BinaryTree::Leaf => gaps.push(left),
        BinaryTree::Caret(l, r) => {
            let b = Color::third(left, right);
            propagate(l, left, b, gaps);
            propagate(r, b, right, gaps);
        }
    }
}

/// The unique coloring of the plane partition of `t` with the root stem removed:
/// the face around the root gets `outer`, the face under the root caret `inner`.
pub fn forced_coloring(t: &BinaryTree, outer: Color, inner: Color) -> FaceColoring {
    assert_ne!(outer, inner, "root colors must differ");
    let mut gaps = Vec::with_capacity(t.leaf_count() + 1);
    match t {
        BinaryTree::Leaf => gaps.push(outer),
        BinaryTree::Caret(l, r) => {
            propagate(l, outer, inner, &mut gaps);
            propagate(r, inner, outer, &mut gaps);
        }
    }
    gaps.push(outer);
    FaceColoring { outer, inner, gaps }
}

/// Gap colors in the strip picture: the root stem separates a left face colored
/// 0 from a right face colored 1, so the face under the root is 2.
pub fn strip_coloring(t: &BinaryTree) -> Vec<Color> {
    let mut gaps = Vec::with_capacity(t.leaf_count() + 1);
    propagate(t, Color::ZERO, Color::ONE, &mut gaps);
    gaps.push(Color::ONE);
    gaps
}

/// A proper coloring of the whole plane partition of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramColoring {
    pub top: FaceColoring,
    pub bottom: FaceColoring,
}

/// Fixes the top tree at outer 0, inner 1 and tries all six root colorings of the
/// bottom tree; the unbounded face is shared, so it must carry the same color.
pub fn plane_coloring(d: &TreeDiagram) -> Option<DiagramColoring> {
    let top = forced_coloring(d.top(), Color::ZERO, Color::ONE);
    for outer in Color::ALL {
        for inner in Color::ALL {
            if outer == inner {
                continue;
            }
            let bottom = forced_coloring(d.bottom(), outer, inner);
            if outer == top.outer && bottom.gaps == top.gaps {
                return Some(DiagramColoring { top, bottom });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u8]) -> Vec<Color> {
        v.iter().map(|&x| Color::new(x as i64)).collect()
    }

    #[test]
    fn x0_top_coloring() {
        let x0 = TreeDiagram::generator(0);
        assert_eq!(
            forced_coloring(x0.top(), Color::ZERO, Color::ONE).gaps,
            c(&[0, 2, 1, 0])
        );
        let col = plane_coloring(&x0).unwrap();
        assert_eq!(
            (col.bottom.outer, col.bottom.inner),
            (Color::ZERO, Color::TWO)
        );
    }

    #[test]
    fn leaf_coloring() {
        assert_eq!(
            forced_coloring(&BinaryTree::Leaf, Color::ZERO, Color::ONE).gaps,
            c(&[0, 0])
        );
        assert_eq!(strip_coloring(&BinaryTree::Leaf), c(&[0, 1]));
        assert!(plane_coloring(&TreeDiagram::identity()).is_some());
    }

    #[test]
    fn strip_of_a_caret() {
        assert_eq!(strip_coloring(&BinaryTree::simple_caret()), c(&[0, 2, 1]));
    }
}
