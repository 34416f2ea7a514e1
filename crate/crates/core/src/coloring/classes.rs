use std::fmt;

use serde::Serialize;

use super::{omega, omega_tilde, Color};
use crate::plmap::{Dyadic, PlError};

/// Weights and expansion length of an interior dyadic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyadicClass {
    pub omega: Color,
    pub omega_tilde: Color,
    /// Length of the expansion ending in 1.
    pub length: usize,
    pub in_lower_half: bool,
    pub in_upper_half: bool,
}

/// `S_{i,h}` (even length) or `S'_{i,h}` (odd length); `h = 1` for `[0, 1/2]`, `2` for `[1/2, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SLabel {
    pub primed: bool,
    pub index: u8,
    pub half: u8,
}

impl SLabel {
    pub fn new(primed: bool, index: u8, half: u8) -> Self {
        SLabel {
            primed,
            index,
            half,
        }
    }
}

impl fmt::Display for SLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S{}_{{{},{}}}",
            if self.primed { "'" } else { "" },
            self.index,
            self.half
        )
    }
}

impl DyadicClass {
    pub fn even_length(&self) -> bool {
        self.length.is_multiple_of(2)
    }

    /// The `Z_i` containing the point.
    pub fn z_index(&self) -> Color {
        self.omega_tilde
    }

    /// Every half-interval class containing the point; `.1` lies in both halves.
    pub fn labels(&self) -> Vec<SLabel> {
        let primed = !self.even_length();
        let i = self.omega.value();
        let mut v = Vec::new();
        if self.in_lower_half {
            v.push(SLabel::new(primed, i, 1));
        }
        if self.in_upper_half {
            v.push(SLabel::new(primed, i, 2));
        }
        v
    }
}

pub fn classify_dyadic(t: Dyadic) -> Result<DyadicClass, PlError> {
    let w = t
        .to_word()
        .filter(|w| !w.is_empty())
        .ok_or(PlError::Boundary(t))?;
    Ok(DyadicClass {
        omega: omega(&w),
        omega_tilde: omega_tilde(&w),
        length: w.len(),
        in_lower_half: t <= Dyadic::HALF,
        in_upper_half: t >= Dyadic::HALF,
    })
}
