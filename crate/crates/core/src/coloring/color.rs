use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A residue in `Z_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub struct Color(u8);

impl Color {
    pub const ZERO: Color = Color(0);
    pub const ONE: Color = Color(1);
    pub const TWO: Color = Color(2);
    pub const ALL: [Color; 3] = [Color(0), Color(1), Color(2)];

    pub fn new(v: i64) -> Self {
        Color(v.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The unique color different from two distinct colors.
    pub fn third(a: Color, b: Color) -> Color {
        debug_assert_ne!(a, b);
        -(a + b)
    }
}

impl Add for Color {
    type Output = Color;
    fn add(self, rhs: Color) -> Color {
        Color((self.0 + rhs.0) % 3)
    }
}

impl Sub for Color {
    type Output = Color;
    fn sub(self, rhs: Color) -> Color {
        Color((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for Color {
    type Output = Color;
    fn neg(self) -> Color {
        Color((3 - self.0) % 3)
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.0
    }
}

impl TryFrom<u8> for Color {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, String> {
        if v < 3 {
            Ok(Color(v))
        } else {
            Err(format!("{v} is not a residue mod 3"))
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_3() {
        assert_eq!(Color::new(-1), Color::TWO);
        assert_eq!(Color::new(7), Color::ONE);
        assert_eq!(Color::TWO + Color::TWO, Color::ONE);
        assert_eq!(Color::ZERO - Color::ONE, Color::TWO);
        assert_eq!(-Color::ONE, Color::TWO);
        assert_eq!(-Color::ZERO, Color::ZERO);
        for a in Color::ALL {
            for b in Color::ALL {
                if a != b {
                    let c = Color::third(a, b);
                    assert!(c != a && c != b);
                }
            }
        }
    }

    #[test]
    fn serde_as_number() {
        assert_eq!(serde_json::to_string(&Color::TWO).unwrap(), "2");
        assert_eq!(serde_json::from_str::<Color>("1").unwrap(), Color::ONE);
        assert!(serde_json::from_str::<Color>("3").is_err());
    }
}
