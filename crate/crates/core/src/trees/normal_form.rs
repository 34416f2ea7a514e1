use std::fmt;

use super::{GeneratorWord, Letter};

/// The unique word `x_0^{a_0} ··· x_n^{a_n} x_n^{-b_n} ··· x_0^{-b_0}` of an element.
///
/// Both exponent vectors have the same length `n + 1`, trimmed so that `a_n` or
/// `b_n` is non-zero; the identity has empty vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    positive: Vec<u32>,
    negative: Vec<u32>,
}

impl NormalForm {
    pub(crate) fn from_exponents(mut positive: Vec<u32>, mut negative: Vec<u32>) -> Self {
        let len = positive.len().max(negative.len());
        positive.resize(len, 0);
        negative.resize(len, 0);
        while positive.last() == Some(&0) && negative.last() == Some(&0) {
            positive.pop();
            negative.pop();
        }
        NormalForm { positive, negative }
    }

    pub fn positive(&self) -> &[u32] {
        &self.positive
    }

    pub fn negative(&self) -> &[u32] {
        &self.negative
    }

    /// `a_i`, zero past the end.
    pub fn a(&self, i: usize) -> u32 {
        self.positive.get(i).copied().unwrap_or(0)
    }

    /// `b_i`, zero past the end.
    pub fn b(&self, i: usize) -> u32 {
        self.negative.get(i).copied().unwrap_or(0)
    }

    /// Checks the normality conditions: exactly one of `a_n, b_n` is non-zero, and
    /// whenever `a_i` and `b_i` are both non-zero, so is `a_{i+1}` or `b_{i+1}`.
    pub fn is_normal(&self) -> bool {
        let n = self.positive.len();
        if n == 0 {
            return true;
        }
        let last_ok = (self.positive[n - 1] != 0) != (self.negative[n - 1] != 0);
        last_ok
            && (0..n).all(|i| {
                self.positive[i] == 0
                    || self.negative[i] == 0
                    || self.a(i + 1) != 0
                    || self.b(i + 1) != 0
            })
    }

    pub fn to_word(&self) -> GeneratorWord {
        let pos = self
            .positive
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| Letter {
                index: i as u32,
                exponent: e as i32,
            });
        let neg = self
            .negative
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| Letter {
                index: i as u32,
                exponent: -(e as i32),
            });
        GeneratorWord(pos.chain(neg).collect())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use crate::trees::TreeDiagram;

    use super::*;

    #[test]
    fn generator_normal_forms() {
        let nf = TreeDiagram::generator(1).normal_form();
        assert_eq!(nf.positive(), &[0, 1]);
        assert_eq!(nf.negative(), &[0, 0]);
        assert!(TreeDiagram::identity().normal_form().positive().is_empty());
        assert_eq!(TreeDiagram::identity().normal_form().to_string(), "id");
    }

    #[test]
    fn w0_normal_form() {
        let w = GeneratorWord::from_pairs(&[(0, 2), (1, 1), (2, -1)]);
        let nf = TreeDiagram::from_word(&w).normal_form();
        assert_eq!((nf.a(0), nf.a(1), nf.a(2)), (2, 1, 0));
        assert_eq!((nf.b(0), nf.b(1), nf.b(2)), (0, 0, 1));
        assert_eq!(nf.to_string(), "x0^2 x1 x2^-1");
        assert!(nf.is_normal());
    }

    #[test]
    fn non_normal_word_is_rewritten() {
        // x_0 x_2 x_2^{-1} x_0^{-1} freely cancels
        let w = GeneratorWord::from_pairs(&[(0, 1), (2, 1), (2, -1), (0, -1)]);
        assert_eq!(TreeDiagram::from_word(&w).normal_form().to_string(), "id");
        let w = GeneratorWord::from_pairs(&[(1, 1), (0, -1)]);
        let nf = TreeDiagram::from_word(&w).normal_form();
        assert!(nf.is_normal());
        assert_eq!(
            TreeDiagram::from_word(&nf.to_word()),
            TreeDiagram::from_word(&w)
        );
    }
}
