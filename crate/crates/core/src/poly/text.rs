//! Text form: `8*x[0,1]*x[2,2] - 8*x[1,1]*x[1,2] + 1/2*y0^2`.
//!
//! Terms are printed leading term first. The parser also accepts the Unicode
//! minus sign and whitespace anywhere between tokens.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, VarId};
use crate::error::Error;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), Error> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            other => Err(self.error(&format!("expected `{want}`, found {other:?}"))),
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn digits(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn small(&mut self) -> Result<u32, Error> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.error("integer too large"))
    }

    fn number(&mut self) -> Result<Rational, Error> {
        let num: BigInt = self.digits()?.parse().expect("ascii digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            let den: BigInt = self.digits()?.parse().expect("ascii digits");
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn exponent(&mut self) -> Result<u32, Error> {
        if self.peek() == Some('^') {
            self.pos += 1;
            self.small()
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self, coeff: &mut Rational, vars: &mut Vec<(VarId, u32)>) -> Result<(), Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff *= self.number()?;
                Ok(())
            }
            Some('x') => {
                self.pos += 1;
                self.expect('[')?;
                let i = self.small()?;
                self.expect(',')?;
                let j = self.small()?;
                self.expect(']')?;
                if j == 0 {
                    return Err(self.error("summand index is 1-based"));
                }
                let e = self.exponent()?;
                vars.push((VarId::x(i, j), e));
                Ok(())
            }
            Some('y') => {
                self.pos += 1;
                let a = match self.bump() {
                    Some('0') => 0,
                    Some('1') => 1,
                    _ => return Err(self.error("expected y0 or y1")),
                };
                let e = self.exponent()?;
                vars.push((VarId::Aux(a), e));
                Ok(())
            }
            other => Err(self.error(&format!("unexpected {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), Error> {
        let mut coeff = Rational::one();
        let mut vars = Vec::new();
        self.factor(&mut coeff, &mut vars)?;
        while self.peek() == Some('*') {
            self.pos += 1;
            self.factor(&mut coeff, &mut vars)?;
        }
        Ok((Monomial::from_factors(vars), coeff))
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor::new(s);
        let mut terms = Vec::new();
        let mut negative = cur.sign().unwrap_or(false);
        loop {
            let (m, c) = cur.term()?;
            terms.push((m, if negative { -c } else { c }));
            if cur.peek().is_none() {
                break;
            }
            negative = cur.sign().ok_or_else(|| cur.error("expected `+` or `-`"))?;
        }
        Ok(Polynomial::from_terms(terms))
    }
}

/// Parses `num`, `-num`, `num/den` (Unicode minus accepted).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let mut cur = Cursor::new(s);
    let negative = cur.sign().unwrap_or_default();
    let value = cur.number()?;
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    Ok(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, rational};

    #[test]
    fn prints_leading_term_first() {
        let f = &(&Polynomial::x(0, 1) * &Polynomial::x(2, 1)) - &Polynomial::x(1, 1).pow(2).scale(&rational(1, 2));
        assert_eq!(f.to_string(), "x[0,1]*x[2,1] - 1/2*x[1,1]^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(integer(-3)).to_string(), "-3");
        assert_eq!((-&Polynomial::var(VarId::Y1)).to_string(), "-y1");
    }

    #[test]
    fn parses_variants() {
        let f: Polynomial = "x[0,1]*x[2,1] - 1/2*x[1,1]^2".parse().unwrap();
        let g: Polynomial = " \u{2212}1/2 * x[1,1]^2+x[2,1]*x[0,1] ".parse().unwrap();
        assert_eq!(f, g);
        let z: Polynomial = "0".parse().unwrap();
        assert!(z.is_zero());
        let h: Polynomial = "2*y0*3*y0 - 6*y0^2 + 1".parse().unwrap();
        assert_eq!(h, Polynomial::one());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x[0]", "x[0,0]", "y2", "3 x[0,1]", "1/0", "x[0,1] +"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-8").unwrap(), integer(-8));
        assert_eq!(parse_rational("\u{2212}8").unwrap(), integer(-8));
        assert_eq!(parse_rational("6/4").unwrap(), rational(3, 2));
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("a").is_err());
    }
}
