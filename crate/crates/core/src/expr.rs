//! Lattice expressions such as `U + U(3) + E6 + E8` or `(A2 + A2)(3)`.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := primary ('^' int)?
//! primary := 'U' ('(' int ')')?
//!          | ('A' | 'D' | 'E') (int | '(' int ')')
//!          | 'diag' '(' int (',' int)* ')'
//!          | 'gram' '[' row (',' row)* ']'      row := '[' int (',' int)* ']'
//!          | '(' expr ')' ('(' int ')')*
//! ```
//!
//! Root lattice atoms are negative definite. Whitespace is ignored between tokens.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::lattice::standard::{u, Ade};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatExpr {
    /// `U(n)`; `n = 1` is the hyperbolic plane.
    U(BigInt),
    Root(Ade),
    Diag(Vec<BigInt>),
    Gram(Vec<Vec<BigInt>>),
    Sum(Box<LatExpr>, Box<LatExpr>),
    Rescale(Box<LatExpr>, BigInt),
    Power(Box<LatExpr>, usize),
}

impl LatExpr {
    pub fn to_lattice(&self) -> Result<Lattice> {
        Ok(match self {
            LatExpr::U(n) if n == &BigInt::from(1) => u(),
            LatExpr::U(n) => u().rescale(n)?,
            LatExpr::Root(ade) => ade.lattice().negate(),
            LatExpr::Diag(d) => Lattice::new(IntMatrix::diagonal(d))?,
            LatExpr::Gram(rows) => Lattice::new(IntMatrix::from_big_rows(rows.clone(), rows.len()))?,
            LatExpr::Sum(a, b) => a.to_lattice()?.direct_sum(&b.to_lattice()?),
            LatExpr::Rescale(a, n) => a.to_lattice()?.rescale(n)?,
            LatExpr::Power(a, k) => {
                let l = a.to_lattice()?;
                Lattice::direct_sum_all(std::iter::repeat(&l).take(*k))
            }
        })
    }
}

fn join(f: &mut fmt::Formatter<'_>, v: &[BigInt]) -> fmt::Result {
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for LatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatExpr::U(n) if n == &BigInt::from(1) => f.write_str("U"),
            LatExpr::U(n) => write!(f, "U({n})"),
            LatExpr::Root(ade) => write!(f, "{ade}"),
            LatExpr::Diag(d) => {
                f.write_str("diag(")?;
                join(f, d)?;
                f.write_str(")")
            }
            LatExpr::Gram(rows) => {
                f.write_str("gram[")?;
                for (i, r) in rows.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    join(f, r)?;
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
            LatExpr::Sum(a, b) => {
                write!(f, "{a} + ")?;
                match **b {
                    LatExpr::Sum(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            LatExpr::Rescale(a, n) => write!(f, "({a})({n})"),
            LatExpr::Power(a, k) => match **a {
                LatExpr::Sum(..) => write!(f, "({a})^{k}"),
                _ => write!(f, "{a}^{k}"),
            },
        }
    }
}

impl FromStr for LatExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<LatExpr> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }

    fn small(&mut self) -> Result<(usize, usize)> {
        self.ws();
        let at = self.pos;
        let n = self.int()?;
        let n = n.to_usize().ok_or(Error::Parse {
            offset: at,
            message: "expected a small non-negative integer".into(),
        })?;
        Ok((n, at))
    }

    fn expr(&mut self) -> Result<LatExpr> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let rhs = self.term()?;
            acc = LatExpr::Sum(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LatExpr> {
        let p = self.primary()?;
        if self.eat(b'^') {
            let (k, at) = self.small()?;
            if k == 0 {
                return Err(Error::Parse {
                    offset: at,
                    message: "repetition count must be positive".into(),
                });
            }
            return Ok(LatExpr::Power(Box::new(p), k));
        }
        Ok(p)
    }

    fn index(&mut self) -> Result<(usize, usize)> {
        if self.eat(b'(') {
            let r = self.small()?;
            self.expect(b')')?;
            Ok(r)
        } else {
            self.small()
        }
    }

    fn int_list(&mut self, close: u8) -> Result<Vec<BigInt>> {
        let mut v = vec![self.int()?];
        while self.eat(b',') {
            v.push(self.int()?);
        }
        self.expect(close)?;
        Ok(v)
    }

    fn primary(&mut self) -> Result<LatExpr> {
        let start = {
            self.ws();
            self.pos
        };
        if self.keyword("diag") {
            self.expect(b'(')?;
            return Ok(LatExpr::Diag(self.int_list(b')')?));
        }
        if self.keyword("gram") {
            self.expect(b'[')?;
            let mut rows = Vec::new();
            loop {
                self.expect(b'[')?;
                rows.push(self.int_list(b']')?);
                if !self.eat(b',') {
                    break;
                }
            }
            self.expect(b']')?;
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(Error::Parse {
                    offset: start,
                    message: "Gram matrix must be square".into(),
                });
            }
            return Ok(LatExpr::Gram(rows));
        }
        match self.peek() {
            Some(b'U') => {
                self.pos += 1;
                if self.eat(b'(') {
                    let at = self.pos;
                    let n = self.int()?;
                    self.expect(b')')?;
                    if n.is_zero() {
                        return Err(Error::Parse {
                            offset: at,
                            message: "U(0) is degenerate".into(),
                        });
                    }
                    return Ok(LatExpr::U(n));
                }
                Ok(LatExpr::U(BigInt::from(1)))
            }
            Some(c @ (b'A' | b'D' | b'E')) => {
                self.pos += 1;
                let (n, at) = self.index()?;
                let ade = match c {
                    b'A' => Ade::A(n),
                    b'D' => Ade::D(n),
                    _ => Ade::E(n),
                };
                let bad = |m: &str| Error::Parse {
                    offset: at,
                    message: m.into(),
                };
                match ade {
                    Ade::A(0) => Err(bad("A(n) needs n >= 1")),
                    Ade::D(n) if n < 4 => Err(bad("D(n) needs n >= 4")),
                    Ade::E(n) if !(6..=8).contains(&n) => Err(bad("E(n) needs n in {6, 7, 8}")),
                    _ => Ok(LatExpr::Root(ade)),
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let mut e = self.expr()?;
                self.expect(b')')?;
                while self.eat(b'(') {
                    let at = self.pos;
                    let n = self.int()?;
                    self.expect(b')')?;
                    if n.is_zero() {
                        return Err(Error::Parse {
                            offset: at,
                            message: "rescaling by zero".into(),
                        });
                    }
                    e = LatExpr::Rescale(Box::new(e), n);
                }
                Ok(e)
            }
            Some(_) => Err(self.err("expected a lattice atom")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset(s: &str) -> usize {
        match parse(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s:?} parsed to {other:?}"),
        }
    }

    #[test]
    fn family_expression() {
        let e = parse("U + U(3) + E6 + E8").unwrap();
        let l = e.to_lattice().unwrap();
        assert_eq!(l.rank(), 18);
        assert_eq!(l.signature().unwrap(), (2, 16));
        assert_eq!(e.to_string(), "U + U(3) + E6 + E8");
    }

    #[test]
    fn gram_and_rescale() {
        let g = parse("gram[[0,3],[3,0]]").unwrap().to_lattice().unwrap();
        assert_eq!(g.gram(), parse("(U)(3)").unwrap().to_lattice().unwrap().gram());
        assert_eq!(g.gram(), parse("U(3)").unwrap().to_lattice().unwrap().gram());
    }

    #[test]
    fn left_associative() {
        let e = parse("A2+A2+A2").unwrap();
        assert!(matches!(&e, LatExpr::Sum(a, _) if matches!(**a, LatExpr::Sum(..))));
        assert_eq!(parse("A2^3").unwrap().to_lattice().unwrap(), e.to_lattice().unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(offset("E9"), 1);
        assert_eq!(offset("U + D(3)"), 6);
        assert_eq!(offset("U + "), 4);
        assert_eq!(offset("U U"), 2);
        assert_eq!(offset("gram[[1,2],[3]]"), 0);
    }

    #[test]
    fn big_integers() {
        let e = parse("diag(123456789012345678901234567890, -1)").unwrap();
        assert_eq!(e.to_lattice().unwrap().rank(), 2);
    }
}
