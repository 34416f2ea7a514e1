//! Element expressions such as `x0^2 * x1 * inv(w0)` or `gamma(y0 y1)`.
//!
//! ```text
//! expr := term ("*"? term)*
//! term := atom ("^" int)?
//! atom := "x" nat | "w" nat | "y" nat | "id" | "(" expr ")" | func "(" expr ")" | T "|" T
//! func := inv | flip | phiR | phiL | alpha | theta | gamma
//! ```
//!
//! Juxtaposition multiplies like `*`, so normal forms printed as `x0^2 x1 x2^-1`
//! parse back. `y` atoms denote generators of `F_4` and are only valid inside `gamma`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::subgroup_tools::{
    alpha_iso, flip, gamma, phi_l, phi_r, theta_iso, w_generators, F4Element,
};
use crate::trees::{BinaryTree, TreeDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown atom '{0}'")]
    UnknownAtom(String),
    #[error("'{0}' is only valid inside gamma(...)")]
    OutsideGamma(String),
    #[error("'{0}' is not valid inside gamma(...)")]
    InsideGamma(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Inv,
    Flip,
    PhiR,
    PhiL,
    Alpha,
    Theta,
    Gamma,
}

impl Func {
    const ALL: [(Func, &'static str); 7] = [
        (Func::Inv, "inv"),
        (Func::Flip, "flip"),
        (Func::PhiR, "phiR"),
        (Func::PhiL, "phiL"),
        (Func::Alpha, "alpha"),
        (Func::Theta, "theta"),
        (Func::Gamma, "gamma"),
    ];

    fn name(self) -> &'static str {
        Func::ALL.iter().find(|(f, _)| *f == self).unwrap().1
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.iter().find(|(_, n)| *n == s).map(|(f, _)| *f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Id,
    X(u32),
    W(u32),
    Y(u32),
    Literal(TreeDiagram),
    Pow(Box<Expr>, i64),
    Product(Vec<Expr>),
    Apply(Func, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Id => write!(f, "id"),
            Expr::X(n) => write!(f, "x{n}"),
            Expr::W(n) => write!(f, "w{n}"),
            Expr::Y(n) => write!(f, "y{n}"),
            Expr::Literal(d) => write!(f, "{d}"),
            Expr::Pow(e, k) => match **e {
                Expr::Product(_) | Expr::Pow(..) | Expr::Literal(_) => write!(f, "({e})^{k}"),
                _ => write!(f, "{e}^{k}"),
            },
            Expr::Product(v) => {
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    match e {
                        Expr::Product(_) => write!(f, "({e})")?,
                        _ => write!(f, "{e}")?,
                    }
                }
                Ok(())
            }
            Expr::Apply(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut terms = vec![self.term()?];
        loop {
            // juxtaposition multiplies like `*`
            let next = self.eat('*')
                || matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '.');
            if !next {
                break;
            }
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Product(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let atom = self.atom()?;
        if self.eat('^') {
            let k = self.int()?;
            return Ok(Expr::Pow(Box::new(atom), k));
        }
        Ok(atom)
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek_raw(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer exponent")
        })
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// A tree-pair literal `T|T`, or `None` after restoring the position.
    fn literal(&mut self) -> Option<TreeDiagram> {
        let start = self.pos;
        let tree = |p: &mut Self| -> Option<BinaryTree> {
            p.skip_ws();
            let s = p.pos;
            let mut depth = 0u32;
            loop {
                p.skip_ws();
                match p.peek_raw()? {
                    '.' => p.pos += 1,
                    '(' => {
                        depth += 1;
                        p.pos += 1;
                        continue;
                    }
                    ')' if depth > 0 => {
                        depth -= 1;
                        p.pos += 1;
                    }
                    _ => return None,
                }
                if depth == 0 {
                    break;
                }
            }
            p.src[s..p.pos].parse().ok()
        };
        let result = (|| {
            let top = tree(self)?;
            if !self.eat('|') {
                return None;
            }
            let bottom = tree(self)?;
            TreeDiagram::new(top, bottom).ok()
        })();
        if result.is_none() {
            self.pos = start;
        }
        result
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some('(') | Some('.') => {
                if let Some(d) = self.literal() {
                    return Ok(Expr::Literal(d));
                }
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let w = self.word();
                if w == "id" {
                    return Ok(Expr::Id);
                }
                if let Some(func) = Func::from_name(w) {
                    self.expect('(')?;
                    let e = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::Apply(func, Box::new(e)));
                }
                let (head, digits) = w.split_at(1);
                let n: Option<u32> =
                    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                        digits.parse().ok()
                    } else {
                        None
                    };
                match (head, n) {
                    ("x", Some(n)) => Ok(Expr::X(n)),
                    ("w", Some(n)) if n < 4 => Ok(Expr::W(n)),
                    ("y", Some(n)) => Ok(Expr::Y(n)),
                    _ => {
                        self.pos = start;
                        Err(ExprError::UnknownAtom(w.to_string()))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl FromStr for Expr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

impl Expr {
    /// Evaluates to a reduced diagram.
    pub fn eval(&self) -> Result<TreeDiagram, ExprError> {
        Ok(match self {
            Expr::Id => TreeDiagram::identity(),
            Expr::X(n) => TreeDiagram::generator(*n),
            Expr::W(n) => w_generators()[*n as usize].clone(),
            Expr::Y(n) => return Err(ExprError::OutsideGamma(format!("y{n}"))),
            Expr::Literal(d) => d.clone(),
            Expr::Pow(e, k) => e.eval()?.pow(*k),
            Expr::Product(v) => {
                let mut acc = TreeDiagram::identity();
                for e in v {
                    acc = acc.multiply(&e.eval()?);
                }
                acc
            }
            Expr::Apply(func, e) => match func {
                Func::Gamma => gamma(&e.eval_f4()?),
                Func::Inv => e.eval()?.inverse(),
                Func::Flip => flip(&e.eval()?),
                Func::PhiR => phi_r(&e.eval()?),
                Func::PhiL => phi_l(&e.eval()?),
                Func::Alpha => alpha_iso(&e.eval()?.normal_form().to_word()),
                Func::Theta => theta_iso(&e.eval()?.normal_form().to_word()),
            },
        })
    }

    /// Evaluates inside `gamma(...)`, where the atoms are generators of `F_4`.
    pub fn eval_f4(&self) -> Result<F4Element, ExprError> {
        Ok(match self {
            Expr::Id => F4Element::identity(),
            Expr::Y(n) => F4Element::generator(*n),
            Expr::Pow(e, k) => e.eval_f4()?.pow(*k),
            Expr::Product(v) => {
                let mut acc = F4Element::identity();
                for e in v {
                    acc = acc.multiply(&e.eval_f4()?);
                }
                acc
            }
            Expr::Apply(Func::Inv, e) => e.eval_f4()?.inverse(),
            other => return Err(ExprError::InsideGamma(other.to_string())),
        })
    }
}

/// Parses and evaluates in one step.
pub fn evaluate(src: &str) -> Result<TreeDiagram, ExprError> {
    src.parse::<Expr>()?.eval()
}
