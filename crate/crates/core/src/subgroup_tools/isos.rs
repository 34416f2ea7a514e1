use crate::trees::{GeneratorWord, TreeDiagram};

fn substitute(w: &GeneratorWord, images: &[TreeDiagram; 2]) -> TreeDiagram {
    w.in_two_generators()
        .letters()
        .iter()
        .fold(TreeDiagram::identity(), |acc, l| {
            acc.multiply(&images[l.index as usize].pow(l.exponent as i64))
        })
}

fn word(pairs: &[(u32, i32)]) -> TreeDiagram {
    TreeDiagram::from_word(&GeneratorWord::from_pairs(pairs))
}

/// `α: x_0 ↦ x_0 x_1 x_0^{-3}`, `x_1 ↦ x_0 x_1^2 x_0^{-3}`, an isomorphism onto `K_(2,1)`.
pub fn alpha_iso(w: &GeneratorWord) -> TreeDiagram {
    let images = [
        word(&[(0, 1), (1, 1), (0, -3)]),
        word(&[(0, 1), (1, 2), (0, -3)]),
    ];
    substitute(w, &images)
}

/// `θ: x_0 ↦ x_0 x_1 x_0^{-3} x_1^{-1}`, `x_1 ↦ x_0 x_1^2 x_0^{-3}`, an isomorphism onto `K_(2,2)`.
pub fn theta_iso(w: &GeneratorWord) -> TreeDiagram {
    let images = [
        word(&[(0, 1), (1, 1), (0, -3), (1, -1)]),
        word(&[(0, 1), (1, 2), (0, -3)]),
    ];
    substitute(w, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::member_k;

    #[test]
    fn images_of_generators() {
        let x0 = GeneratorWord::from_pairs(&[(0, 1)]);
        let x1 = GeneratorWord::from_pairs(&[(1, 1)]);
        assert_eq!(alpha_iso(&x0), word(&[(0, 1), (1, 1), (0, -3)]));
        assert_eq!(theta_iso(&x1), word(&[(0, 1), (1, 2), (0, -3)]));
        assert!(member_k(&alpha_iso(&x1), 2, 1));
        assert!(member_k(&theta_iso(&x0), 2, 2));
    }

    #[test]
    fn relators_map_to_identity() {
        // x_2 x_1 = x_1 x_3 and x_3 x_1 = x_1 x_4 as relators
        for (n, k) in [(2, 1), (3, 1), (2, 0), (3, 0)] {
            let r = GeneratorWord::from_pairs(&[(n, 1), (k, 1), (n + 1, -1), (k, -1)]);
            assert_eq!(TreeDiagram::from_word(&r), TreeDiagram::identity());
            assert!(alpha_iso(&r).is_identity());
            assert!(theta_iso(&r).is_identity());
        }
    }
}
