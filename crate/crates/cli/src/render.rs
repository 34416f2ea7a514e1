use std::fmt::Write;

use thompson_core::coloring::{forced_coloring, plane_coloring, Color, FaceColoring};
use thompson_core::trees::{BinaryTree, TreeDiagram};

/// The identity is drawn as a single caret over a single caret.
fn drawable(d: &TreeDiagram) -> TreeDiagram {
    if d.is_identity() {
        let c = BinaryTree::simple_caret();
        TreeDiagram::unreduced(c.clone(), c).expect("equal leaf counts")
    } else {
        d.clone()
    }
}

/// Gap colors from both sides: equal when the diagram is plane-colorable.
fn face_colors(d: &TreeDiagram) -> (FaceColoring, FaceColoring, bool) {
    match plane_coloring(d) {
        Some(c) => (c.top, c.bottom, true),
        None => (
            forced_coloring(d.top(), Color::ZERO, Color::ONE),
            forced_coloring(d.bottom(), Color::ZERO, Color::TWO),
            false,
        ),
    }
}

fn face_label(top: Color, bottom: Color) -> String {
    if top == bottom {
        top.to_string()
    } else {
        format!("{top}/{bottom}")
    }
}

fn node_id(prefix: char, word: &str) -> String {
    if word.is_empty() {
        format!("{prefix}root")
    } else {
        format!("{prefix}{word}")
    }
}

/// Internal vertices and edges of one tree, leaves named `l0, l1, …`.
fn tree_edges(t: &BinaryTree, prefix: char, up: bool, out: &mut String) {
    fn go(
        t: &BinaryTree,
        prefix: char,
        up: bool,
        word: &mut String,
        leaf: &mut usize,
        out: &mut String,
    ) -> String {
        match t {
            BinaryTree::Leaf => {
                let id = format!("l{leaf}");
                *leaf += 1;
                id
            }
            BinaryTree::Caret(l, r) => {
                let id = node_id(prefix, word);
                writeln!(out, "  {id} [shape=point];").unwrap();
                for (digit, child) in [('0', l), ('1', r)] {
                    word.push(digit);
                    let c = go(child, prefix, up, word, leaf, out);
                    word.pop();
                    if up {
                        writeln!(out, "  {id} -> {c};").unwrap();
                    } else {
                        writeln!(out, "  {c} -> {id};").unwrap();
                    }
                }
                id
            }
        }
    }
    go(t, prefix, up, &mut String::new(), &mut 0, out);
}

/// Graphviz source: top tree above, bottom tree below, leaves shared, and one
/// cluster per face labeled with its color.
pub fn to_dot(d: &TreeDiagram) -> String {
    let d = drawable(d);
    let (top, bottom, colorable) = face_colors(&d);
    let n = d.leaf_count();
    let mut s = String::from("digraph diagram {\n  rankdir=TB;\n");
    writeln!(
        s,
        "  label=\"top roots: outer {}, inner {}\";",
        top.outer, top.inner
    )
    .unwrap();
    if !colorable {
        s.push_str("  comment=\"not plane 3-colorable\";\n");
    }
    tree_edges(d.top(), 't', true, &mut s);
    s.push_str("  { rank=same;");
    for i in 0..n {
        write!(s, " l{i}").unwrap();
    }
    s.push_str(" }\n");
    for i in 0..n {
        writeln!(s, "  l{i} [shape=circle, label=\"{i}\"];").unwrap();
    }
    tree_edges(d.bottom(), 'b', false, &mut s);
    for i in 1..n {
        let label = face_label(top.gaps[i], bottom.gaps[i]);
        writeln!(s, "  subgraph cluster_face{i} {{").unwrap();
        writeln!(s, "    label=\"{label}\";").unwrap();
        writeln!(s, "    f{i} [shape=plaintext, label=\"{label}\"];").unwrap();
        s.push_str("  }\n");
    }
    let outer = face_label(top.gaps[0], bottom.gaps[0]);
    s.push_str("  subgraph cluster_outer {\n");
    writeln!(s, "    label=\"{outer}\";").unwrap();
    writeln!(s, "    fouter [shape=plaintext, label=\"{outer}\"];").unwrap();
    s.push_str("  }\n}\n");
    s
}

/// Leaf line with the face colors between leaves, plus both trees and leaf words.
pub fn to_ascii(d: &TreeDiagram) -> String {
    let d = drawable(d);
    let (top, bottom, colorable) = face_colors(&d);
    let mut s = String::new();
    writeln!(
        s,
        "top    {}   roots: outer {}, inner {}",
        d.top(),
        top.outer,
        top.inner
    )
    .unwrap();
    writeln!(
        s,
        "bottom {}   roots: outer {}, inner {}",
        d.bottom(),
        bottom.outer,
        bottom.inner
    )
    .unwrap();
    s.push_str("faces ");
    for (i, (a, b)) in top.gaps.iter().zip(&bottom.gaps).enumerate() {
        if i > 0 {
            write!(s, " ({})", i - 1).unwrap();
        }
        write!(s, " [{}]", face_label(*a, *b)).unwrap();
    }
    s.push('\n');
    if !colorable {
        s.push_str("not plane 3-colorable\n");
    }
    for (i, (t, b)) in d.leaf_pairs().iter().enumerate() {
        writeln!(s, "  leaf {i:<3} {:<12} {}", t.to_string(), b).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x0_faces() {
        let dot = to_dot(&TreeDiagram::generator(0));
        assert!(dot.contains("cluster_face1 {\n    label=\"2\""));
        assert!(dot.contains("cluster_face2 {\n    label=\"1\""));
        assert!(dot.contains("cluster_outer {\n    label=\"0\""));
    }

    #[test]
    fn identity_has_two_leaves() {
        let dot = to_dot(&TreeDiagram::identity());
        assert!(dot.contains("l1 [shape=circle"));
        assert!(!dot.contains("l2"));
    }

    #[test]
    fn noncolorable_faces_show_both_sides() {
        let a = to_ascii(&TreeDiagram::generator(1));
        assert!(a.contains("not plane 3-colorable"));
        assert!(a.contains('/'));
    }
}
