use std::fmt;

/// One factor `x_index^exponent` of a word in the infinite generating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: u32,
    pub exponent: i32,
}

/// A word in `x_0, x_1, ...`, read left to right. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn identity() -> Self {
        GeneratorWord(Vec::new())
    }

    pub fn from_pairs(pairs: &[(u32, i32)]) -> Self {
        GeneratorWord(
            pairs
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|&(index, exponent)| Letter { index, exponent })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.0.iter().map(|l| l.index).max()
    }

    pub fn inverse(&self) -> Self {
        GeneratorWord(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    index: l.index,
                    exponent: -l.exponent,
                })
                .collect(),
        )
    }

    pub fn concat(&self, other: &GeneratorWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GeneratorWord(v)
    }

    /// Rewrites every `x_n` with `n >= 2` as `x_0^{-(n-1)} x_1 x_0^{n-1}`.
    pub fn in_two_generators(&self) -> GeneratorWord {
        let mut out = Vec::new();
        for l in &self.0 {
            if l.index <= 1 {
                out.push(*l);
            } else {
                let k = l.index as i32 - 1;
                out.push(Letter {
                    index: 0,
                    exponent: -k,
                });
                out.push(Letter {
                    index: 1,
                    exponent: l.exponent,
                });
                out.push(Letter {
                    index: 0,
                    exponent: k,
                });
            }
        }
        GeneratorWord(out)
    }
}

impl fmt::Display for GeneratorWord {
    /// `x0^2 x1 x2^-1`; the empty word prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.exponent == 1 {
                write!(f, "x{}", l.index)?;
            } else {
                write!(f, "x{}^{}", l.index, l.exponent)?;
            }
        }
        Ok(())
    }
}
