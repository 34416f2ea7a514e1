//! Binary words and dyadic rationals of the unit interval.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::PlError;

/// Largest binary exponent a [`Dyadic`] may carry.
///
/// Scaled numerators are handled as `i128`, so a value of 1 at this exponent
/// still fits with room for a sign bit and a few guard bits.
pub const MAX_EXP: u32 = 120;

/// A finite word over `{0, 1}`; `0` is a left edge, `1` a right edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Panics if any digit is not 0 or 1.
    pub fn from_digits(digits: impl IntoIterator<Item = u8>) -> Self {
        let v: Vec<u8> = digits.into_iter().collect();
        assert!(v.iter().all(|&d| d <= 1), "binary digits must be 0 or 1");
        BinaryWord(v)
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, digit: u8) {
        assert!(digit <= 1);
        self.0.push(digit);
    }

    pub fn child(&self, digit: u8) -> Self {
        let mut w = self.clone();
        w.push(digit);
        w
    }

    pub fn concat(&self, other: &BinaryWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BinaryWord(v)
    }

    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn suffix_after(&self, prefix: &BinaryWord) -> Option<BinaryWord> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|s| BinaryWord(s.to_vec()))
    }

    /// Drops trailing zeros; the result ends in 1 or is empty.
    pub fn trimmed(&self) -> Self {
        let end = self.0.iter().rposition(|&d| d == 1).map_or(0, |i| i + 1);
        BinaryWord(self.0[..end].to_vec())
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&d| d == 1).count()
    }

    /// Value of `.a_1 a_2 ... a_n`.
    pub fn to_dyadic(&self) -> Dyadic {
        let t = self.trimmed();
        let n = t.len() as u32;
        assert!(n <= MAX_EXP, "binary word longer than {MAX_EXP} digits");
        let num = t.0.iter().fold(0u128, |acc, &d| (acc << 1) | d as u128);
        Dyadic::new(num, n)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = PlError;

    /// Accepts a bare digit string, optionally prefixed by `.`; `ε` or `""` is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let body = s.strip_prefix('.').unwrap_or(s);
        if body == "ε" {
            return Ok(BinaryWord::empty());
        }
        body.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(PlError::MalformedDyadic(s.to_string())),
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(BinaryWord)
    }
}

/// A dyadic rational `num / 2^exp` in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: u128,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    /// Panics if the value lies outside `[0, 1]` or `exp > MAX_EXP`.
    pub fn new(num: u128, exp: u32) -> Self {
        assert!(exp <= MAX_EXP, "dyadic exponent {exp} exceeds {MAX_EXP}");
        assert!(num <= 1u128 << exp, "dyadic {num}/2^{exp} is not in [0, 1]");
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().min(self.exp);
        self.num >>= tz;
        self.exp -= tz;
    }

    /// Builds a dyadic from a signed numerator at scale `2^exp`; the value must be in `[0, 1]`.
    pub(crate) fn from_scaled(num: i128, exp: u32) -> Self {
        assert!(num >= 0, "negative dyadic value");
        let mut n = num as u128;
        let mut e = exp;
        while e > MAX_EXP {
            assert!(n & 1 == 0, "dyadic precision exceeds 2^-{MAX_EXP}");
            n >>= 1;
            e -= 1;
        }
        Dyadic::new(n, e)
    }

    pub fn numerator(&self) -> u128 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    /// Numerator at the (finer) scale `2^exp`.
    pub(crate) fn scaled(&self, exp: u32) -> i128 {
        assert!(exp >= self.exp && exp <= MAX_EXP);
        (self.num << (exp - self.exp)) as i128
    }

    pub fn is_interior(&self) -> bool {
        self.num != 0 && *self != Dyadic::ONE
    }

    /// Canonical expansion: the binary word ending in 1 with `ρ(word) = self`.
    /// Returns `None` for 1, which has no finite expansion below 1.
    pub fn to_word(&self) -> Option<BinaryWord> {
        if *self == Dyadic::ONE {
            return None;
        }
        Some(self.word_of_length(self.exp as usize))
    }

    /// The binary expansion padded to exactly `len` digits; requires `len >= exponent`
    /// and a value below 1.
    pub fn word_of_length(&self, len: usize) -> BinaryWord {
        assert!(len >= self.exp as usize && *self != Dyadic::ONE);
        let shifted = self.num << (len as u32 - self.exp);
        BinaryWord((0..len).rev().map(|i| ((shifted >> i) & 1) as u8).collect())
    }

    pub fn one_minus(&self) -> Dyadic {
        let e = self.exp;
        Dyadic::new((1u128 << e) - self.num, e)
    }

    /// `11/16`; the endpoints print as `0` and `1`.
    pub fn to_fraction_string(&self) -> String {
        if self.exp == 0 {
            return self.num.to_string();
        }
        format!("{}/{}", self.num, 1u128 << self.exp)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    /// Binary-dot form (`.1011`); the endpoints print as `0` and `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_word() {
            None => write!(f, "1"),
            Some(w) if w.is_empty() => write!(f, "0"),
            Some(w) => {
                write!(f, ".")?;
                for d in w.digits() {
                    write!(f, "{d}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Dyadic {
    type Err = PlError;

    /// Accepts `.1011`, `11/16` (power-of-two denominator), `0` and `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PlError::MalformedDyadic(s.to_string());
        let t = s.trim();
        match t {
            "0" => return Ok(Dyadic::ZERO),
            "1" => return Ok(Dyadic::ONE),
            _ => {}
        }
        if let Some((n, d)) = t.split_once('/') {
            let num: u128 = n.trim().parse().map_err(|_| bad())?;
            let den: u128 = d.trim().parse().map_err(|_| bad())?;
            if den == 0 || !den.is_power_of_two() || num > den {
                return Err(bad());
            }
            let exp = den.trailing_zeros();
            if exp > MAX_EXP {
                return Err(bad());
            }
            return Ok(Dyadic::new(num, exp));
        }
        let body = t.strip_prefix('.').ok_or_else(bad)?;
        if body.is_empty() || body.len() > MAX_EXP as usize {
            return Err(bad());
        }
        let word: BinaryWord = body.parse().map_err(|_| bad())?;
        Ok(word.to_dyadic())
    }
}
