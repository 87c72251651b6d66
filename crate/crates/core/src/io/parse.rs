//! Parser for polynomial expressions such as `3 x z - 3 z^2 + 1/2 x^2`.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := coeff ('*'? factor)* | factor ('*'? factor)*
//! coeff  := digits ('/' digits)?
//! factor := ('x' | 'z') ('^' digits)?
//! ```
//!
//! Whitespace is insignificant; juxtaposition multiplies.

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::Rational;
use crate::bipoly::{BiPoly, MonomialKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected `{found}` at position {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent must be a positive integer at position {pos}")]
    BadExponent { pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Unexpected { pos, .. }
            | ParseError::UnexpectedEnd { pos }
            | ParseError::UnknownVariable { pos, .. }
            | ParseError::BadExponent { pos }
            | ParseError::ZeroDenominator { pos } => *pos,
        }
    }
}

/// Parses `text` into a polynomial, combining like terms.
pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.expr()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(found) => ParseError::Unexpected {
                found,
                pos: self.pos,
            },
            None => ParseError::UnexpectedEnd { pos: self.pos },
        }
    }

    /// Consumes an optional sign; returns true for `-`.
    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek()? {
            '+' => {
                self.pos += 1;
                Some(false)
            }
            '-' => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (key, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((key, c));
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            negative = self.sign().ok_or_else(|| self.unexpected())?;
        }
        Ok(BiPoly::from_terms(terms))
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Some(s.parse().expect("ascii digits"))
    }

    fn coeff(&mut self) -> Result<Option<Rational>, ParseError> {
        self.skip_ws();
        let Some(numer) = self.digits() else {
            return Ok(None);
        };
        let save = self.pos;
        self.skip_ws();
        if self.peek() != Some('/') {
            self.pos = save;
            return Ok(Some(Rational::from(numer)));
        }
        self.pos += 1;
        self.skip_ws();
        let denom_pos = self.pos;
        let denom = self.digits().ok_or_else(|| self.unexpected())?;
        Rational::new(numer, denom)
            .map(Some)
            .map_err(|_| ParseError::ZeroDenominator { pos: denom_pos })
    }

    fn identifier(&mut self) -> Option<(String, usize)> {
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some((self.chars[start..self.pos].iter().collect(), start))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let pos = self.pos;
        let digits = self.digits().ok_or_else(|| self.unexpected())?;
        match u32::try_from(digits) {
            Ok(e) if e > 0 => Ok(e),
            _ => Err(ParseError::BadExponent { pos }),
        }
    }

    /// Parses `('*'? factor)*` after an optional coefficient.
    fn term(&mut self) -> Result<(MonomialKey, Rational), ParseError> {
        let coeff = self.coeff()?;
        let mut key = MonomialKey::ONE;
        let mut factors = 0;
        loop {
            self.skip_ws();
            let save = self.pos;
            let starred = self.peek() == Some('*');
            if starred {
                self.pos += 1;
                self.skip_ws();
            }
            match self.identifier() {
                Some((name, pos)) => {
                    let e = self.exponent()?;
                    match name.as_str() {
                        "x" => key.dx += e,
                        "z" => key.dz += e,
                        _ => return Err(ParseError::UnknownVariable { name, pos }),
                    }
                    factors += 1;
                }
                None if starred => return Err(self.unexpected()),
                None => {
                    self.pos = save;
                    break;
                }
            }
        }
        if coeff.is_none() && factors == 0 {
            return Err(self.unexpected());
        }
        Ok((key, coeff.unwrap_or_else(Rational::one)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: i64, dx: u32, dz: u32) -> (MonomialKey, Rational) {
        (MonomialKey::new(dx, dz), Rational::from(c))
    }

    #[test]
    fn paper_style_expression() {
        let p = parse_poly("3 x z - 3 z^2 + 3 x z^2 - 2 z^3").unwrap();
        assert_eq!(
            p,
            BiPoly::from_terms([t(3, 1, 1), t(-3, 0, 2), t(3, 1, 2), t(-2, 0, 3)])
        );
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_poly("0").unwrap().is_zero());
        assert!(parse_poly("  3 x - 3x ").unwrap().is_zero());
        assert_eq!(
            parse_poly("-7").unwrap(),
            BiPoly::constant(Rational::from(-7))
        );
    }

    #[test]
    fn rationals_and_stars() {
        let half = Rational::new(1, 2).unwrap();
        let p = parse_poly("1/2 z^2 + 1/2 z").unwrap();
        assert_eq!(
            p,
            BiPoly::from_terms([
                (MonomialKey::new(0, 2), half.clone()),
                (MonomialKey::new(0, 1), half.clone())
            ])
        );
        assert_eq!(parse_poly("1 / 2*z^2+1/2*z").unwrap(), p);
        assert_eq!(parse_poly("x*x*z").unwrap(), parse_poly("x^2 z").unwrap());
        assert_eq!(
            parse_poly("-x + z").unwrap(),
            BiPoly::from_terms([t(-1, 1, 0), t(1, 0, 1)])
        );
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_poly("3 x y"),
            Err(ParseError::UnknownVariable {
                name: "y".into(),
                pos: 4
            })
        );
        assert!(matches!(
            parse_poly("xz"),
            Err(ParseError::UnknownVariable { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(parse_poly(""), Err(ParseError::UnexpectedEnd { pos: 0 }));
        assert_eq!(
            parse_poly("3 x +"),
            Err(ParseError::UnexpectedEnd { pos: 5 })
        );
        assert_eq!(
            parse_poly("3 x 4"),
            Err(ParseError::Unexpected { found: '4', pos: 4 })
        );
        assert_eq!(parse_poly("x^0"), Err(ParseError::BadExponent { pos: 2 }));
        assert_eq!(parse_poly("x^"), Err(ParseError::UnexpectedEnd { pos: 2 }));
        assert_eq!(
            parse_poly("1/0 x"),
            Err(ParseError::ZeroDenominator { pos: 2 })
        );
        assert_eq!(
            parse_poly("3 * + x"),
            Err(ParseError::Unexpected { found: '+', pos: 4 })
        );
        assert_eq!(
            parse_poly("x ++ z"),
            Err(ParseError::Unexpected { found: '+', pos: 3 })
        );
        assert_eq!(
            parse_poly("2.5 x"),
            Err(ParseError::Unexpected { found: '.', pos: 1 })
        );
    }
}
