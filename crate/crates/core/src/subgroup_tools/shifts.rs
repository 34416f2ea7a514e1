use crate::trees::{BinaryTree, GeneratorWord, TreeDiagram};

fn diagram(top: BinaryTree, bottom: BinaryTree) -> TreeDiagram {
    TreeDiagram::new(top, bottom).expect("leaf counts are preserved")
}

/// The flip automorphism `σ`: mirror both trees, i.e. conjugate by `t ↦ 1 - t`.
pub fn flip(d: &TreeDiagram) -> TreeDiagram {
    diagram(d.top().mirror(), d.bottom().mirror())
}

/// Right shift `φ_R`: `d` acts on `[1/2, 1]` and fixes `[0, 1/2]`.
pub fn phi_r(d: &TreeDiagram) -> TreeDiagram {
    diagram(
        BinaryTree::caret(BinaryTree::Leaf, d.top().clone()),
        BinaryTree::caret(BinaryTree::Leaf, d.bottom().clone()),
    )
}

/// Left shift `φ_L`: `d` acts on `[0, 1/2]` and fixes `[1/2, 1]`.
pub fn phi_l(d: &TreeDiagram) -> TreeDiagram {
    diagram(
        BinaryTree::caret(d.top().clone(), BinaryTree::Leaf),
        BinaryTree::caret(d.bottom().clone(), BinaryTree::Leaf),
    )
}

/// The words of `w_0, …, w_3`.
pub fn w_words() -> [GeneratorWord; 4] {
    [
        GeneratorWord::from_pairs(&[(0, 2), (1, 1), (2, -1)]),
        GeneratorWord::from_pairs(&[(0, 1), (1, 2), (0, -1)]),
        GeneratorWord::from_pairs(&[(1, 2), (3, 1), (2, -1)]),
        GeneratorWord::from_pairs(&[(2, 2), (3, 1), (4, -1)]),
    ]
}

/// Generators `w_0, …, w_3` of the 3-colorable subgroup.
pub fn w_generators() -> [TreeDiagram; 4] {
    w_words().map(|w| TreeDiagram::from_word(&w))
}

/// `{x_0, φ_R(w_i)}`, or `{x_0^2, φ_R(w_i)}` for the even part.
pub fn e_generators(even: bool) -> Vec<TreeDiagram> {
    let x0 = TreeDiagram::generator(0);
    let first = if even { x0.pow(2) } else { x0 };
    std::iter::once(first)
        .chain(w_generators().iter().map(phi_r))
        .collect()
}
