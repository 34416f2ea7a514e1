use super::Color;
use crate::plmap::BinaryWord;

/// `ω(a_1…a_n) = Σ (-1)^j a_j mod 3`, with `j` counted from 1.
pub fn omega(w: &BinaryWord) -> Color {
    let s: i64 = w
        .digits()
        .iter()
        .enumerate()
        .map(|(j, &a)| if j % 2 == 0 { -(a as i64) } else { a as i64 })
        .sum();
    Color::new(s)
}

/// `ω̃(ε) = 0`, `ω̃(0α) = ω(α)`, `ω̃(1α) = 1 - ω(α)`.
pub fn omega_tilde(w: &BinaryWord) -> Color {
    match w.digits().split_first() {
        None => Color::ZERO,
        Some((&first, rest)) => {
            let tail = omega(&BinaryWord::from_digits(rest.iter().copied()));
            if first == 0 {
                tail
            } else {
                Color::ONE - tail
            }
        }
    }
}
