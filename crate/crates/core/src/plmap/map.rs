use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Dyadic, PlError};

/// A piecewise-linear homeomorphism of `[0, 1]` with dyadic breakpoints and
/// power-of-two slopes, stored with the minimal set of breakpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLMap {
    breaks: Vec<Dyadic>,
    values: Vec<Dyadic>,
    slopes: Vec<i32>,
}

/// Fixed-point set of a map inside the open interval `(0, 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixedSet {
    /// Maximal closed intervals on which the map is the identity.
    pub intervals: Vec<(Dyadic, Dyadic)>,
    /// Isolated fixed points that are dyadic and interior.
    pub points: Vec<Dyadic>,
}

/// `log2(num / den)` if the ratio of two positive integers is a power of two.
fn log2_ratio(num: i128, den: i128) -> Option<i32> {
    let (tn, td) = (num.trailing_zeros(), den.trailing_zeros());
    if num >> tn != den >> td {
        return None;
    }
    Some(tn as i32 - td as i32)
}

fn common_exp(ds: &[Dyadic]) -> u32 {
    ds.iter().map(|d| d.exponent()).max().unwrap_or(0)
}

impl PLMap {
    /// Validates the graph `(breaks[i], values[i])` and merges collinear pieces.
    pub fn new(breaks: Vec<Dyadic>, values: Vec<Dyadic>) -> Result<Self, PlError> {
        let n = breaks.len();
        let bad = |why: &str| Err(PlError::NotInF(why.to_string()));
        if n < 2 || values.len() != n {
            return bad("need matching breakpoint and value lists of length at least 2");
        }
        if breaks[0] != Dyadic::ZERO || values[0] != Dyadic::ZERO {
            return bad("map must send 0 to 0");
        }
        if breaks[n - 1] != Dyadic::ONE || values[n - 1] != Dyadic::ONE {
            return bad("map must send 1 to 1");
        }
        let mut slopes = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let e = common_exp(&[breaks[i], breaks[i + 1], values[i], values[i + 1]]);
            let dx = breaks[i + 1].scaled(e) - breaks[i].scaled(e);
            let dy = values[i + 1].scaled(e) - values[i].scaled(e);
            if dx <= 0 || dy <= 0 {
                return bad("breakpoints and values must be strictly increasing");
            }
            match log2_ratio(dy, dx) {
                Some(k) => slopes.push(k),
                None => return bad("slope is not a power of two"),
            }
        }
        Ok(Self::merged(breaks, values, slopes))
    }

    fn merged(breaks: Vec<Dyadic>, values: Vec<Dyadic>, slopes: Vec<i32>) -> Self {
        let mut b = vec![breaks[0]];
        let mut v = vec![values[0]];
        let mut s: Vec<i32> = Vec::new();
        for i in 0..slopes.len() {
            if s.last() == Some(&slopes[i]) {
                *b.last_mut().unwrap() = breaks[i + 1];
                *v.last_mut().unwrap() = values[i + 1];
            } else {
                s.push(slopes[i]);
                b.push(breaks[i + 1]);
                v.push(values[i + 1]);
            }
        }
        PLMap {
            breaks: b,
            values: v,
            slopes: s,
        }
    }

    pub fn identity() -> Self {
        PLMap {
            breaks: vec![Dyadic::ZERO, Dyadic::ONE],
            values: vec![Dyadic::ZERO, Dyadic::ONE],
            slopes: vec![0],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.slopes == [0]
    }

    pub fn breakpoints(&self) -> &[Dyadic] {
        &self.breaks
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    /// `log2` of the slope of each piece.
    pub fn log_slopes(&self) -> &[i32] {
        &self.slopes
    }

    fn piece_of(&self, t: Dyadic) -> usize {
        // last piece whose left end is <= t
        let idx = self.breaks.partition_point(|b| *b <= t);
        idx.saturating_sub(1).min(self.slopes.len() - 1)
    }

    pub fn evaluate(&self, t: Dyadic) -> Dyadic {
        let i = self.piece_of(t);
        let (x, y, k) = (self.breaks[i], self.values[i], self.slopes[i]);
        let e = common_exp(&[t, x, y]);
        let d = t.scaled(e) - x.scaled(e);
        if k >= 0 {
            Dyadic::from_scaled(y.scaled(e) + (d << k), e)
        } else {
            let s = (-k) as u32;
            Dyadic::from_scaled((y.scaled(e) << s) + d, e + s)
        }
    }

    pub fn inverse(&self) -> PLMap {
        PLMap {
            breaks: self.values.clone(),
            values: self.breaks.clone(),
            slopes: self.slopes.iter().map(|k| -k).collect(),
        }
    }

    /// `self` followed by `other`: `t ↦ other(self(t))`.
    pub fn then(&self, other: &PLMap) -> PLMap {
        let inv = self.inverse();
        let mut pts: Vec<Dyadic> = self.breaks.clone();
        pts.extend(other.breaks.iter().map(|&b| inv.evaluate(b)));
        pts.sort();
        pts.dedup();
        let vals: Vec<Dyadic> = pts
            .iter()
            .map(|&p| other.evaluate(self.evaluate(p)))
            .collect();
        PLMap::new(pts, vals).expect("composition of maps in F stays in F")
    }

    /// The map equal to `self` on `[0, a]` and the identity on `[a, 1]`; requires `self(a) = a`.
    pub(crate) fn left_part(&self, a: Dyadic) -> PLMap {
        let mut b: Vec<Dyadic> = self.breaks.iter().copied().filter(|&x| x < a).collect();
        b.push(a);
        b.push(Dyadic::ONE);
        let v = b
            .iter()
            .map(|&x| if x <= a { self.evaluate(x) } else { x })
            .collect();
        PLMap::new(b, v).expect("restriction of a map in F stays in F")
    }

    /// The identity on `[0, a]` and `self` on `[a, 1]`; requires `self(a) = a`.
    pub(crate) fn right_part(&self, a: Dyadic) -> PLMap {
        let mut b = vec![Dyadic::ZERO, a];
        b.extend(self.breaks.iter().copied().filter(|&x| x > a));
        let v = b
            .iter()
            .map(|&x| if x >= a { self.evaluate(x) } else { x })
            .collect();
        PLMap::new(b, v).expect("restriction of a map in F stays in F")
    }

    /// Solves `f(t) = t` exactly on every piece.
    pub fn fixed_set(&self) -> FixedSet {
        let mut out = FixedSet::default();
        for i in 0..self.slopes.len() {
            let (x0, x1, y0) = (self.breaks[i], self.breaks[i + 1], self.values[i]);
            let k = self.slopes[i];
            if k == 0 {
                if x0 == y0 {
                    out.intervals.push((x0, x1));
                }
                continue;
            }
            if let Some(t) = solve_piece(x0, y0, k) {
                if t >= x0 && t <= x1 && t.is_interior() {
                    out.points.push(t);
                }
            }
        }
        out.points.sort();
        out.points.dedup();
        let ivs = out.intervals.clone();
        out.points
            .retain(|p| !ivs.iter().any(|(a, b)| a <= p && p <= b));
        out
    }
}

/// The solution of `y0 + 2^k (t - x0) = t` when it is a dyadic rational.
fn solve_piece(x0: Dyadic, y0: Dyadic, k: i32) -> Option<Dyadic> {
    let e = x0.exponent().max(y0.exponent());
    let x = BigInt::from(x0.scaled(e));
    let y = BigInt::from(y0.scaled(e));
    let one = BigInt::one();
    let scale = &one << e;
    let (num, den) = if k > 0 {
        let s = &one << k as u32;
        (y - &s * x, (one - s) * scale)
    } else {
        let s = &one << (-k) as u32;
        (&s * y - x, (s - one) * scale)
    };
    let g = num.gcd(&den);
    let (mut num, mut den) = (num / &g, den / &g);
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    if num.is_negative() || den.is_zero() {
        return None;
    }
    let bits = den.bits();
    if den != (BigInt::one() << (bits - 1)) {
        return None;
    }
    let exp = (bits - 1) as u32;
    if exp > super::MAX_EXP {
        return None;
    }
    let n: u128 = num.try_into().ok()?;
    if n > 1u128 << exp {
        return None;
    }
    Some(Dyadic::new(n, exp))
}

impl fmt::Display for PLMap {
    /// `[x0,x1]->[y0,y1] ...`, one entry per linear piece.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.slopes.len() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(
                f,
                "[{},{}]->[{},{}]",
                self.breaks[i].to_fraction_string(),
                self.breaks[i + 1].to_fraction_string(),
                self.values[i].to_fraction_string(),
                self.values[i + 1].to_fraction_string()
            )?;
        }
        Ok(())
    }
}
