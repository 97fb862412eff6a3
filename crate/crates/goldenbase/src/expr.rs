//! Parser for the small linear-combination expression language used by
//! the `combine` command.
//!
//! Grammar:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := [rational '*'] call
//! call     := name '(' argument ')' | bare-name
//! rational := ['-'] integer ['/' positive-integer]
//! ```
//!
//! Parameterized families (`logF`, `logL`, `atanF`, `atanL`, `atan12`,
//! `atan2L`) take an integer argument; `zero` takes a relation name
//! such as `thm4.1` or `len2`; `logAlpha`, `log2`, `log5` and
//! `logSqrt5` appear bare and resolve to their registry defaults.

use crate::exactfield::Rational;
use num::bigint::BigInt;
use num::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown name {name:?} at offset {offset}")]
    UnknownName { offset: usize, name: String },
}

/// A parsed linear combination of catalog entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExpr {
    /// (coefficient, registry entry name) pairs, in source order.
    pub terms: Vec<(Rational, String)>,
}

/// Families that require a parenthesized integer parameter.
const PARAM_FAMILIES: [&str; 6] = ["logF", "logL", "atanF", "atanL", "atan12", "atan2L"];

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax { offset: self.pos, message: message.into() }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {:?}", c as char)))
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn parse_ident(&mut self) -> Result<(usize, String), ExprError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a name"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok((start, text.to_string()))
    }

    /// A zero-relation argument: letters, digits and dots.
    fn parse_relation_arg(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'.') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a zero-relation name"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }

    fn parse_term(&mut self) -> Result<(Rational, String), ExprError> {
        self.skip_ws();
        // optional rational coefficient followed by '*'
        let mut coeff = Rational::one();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.parse_integer()?;
            self.skip_ws();
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.parse_integer()?;
                if d == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(numer, denom);
            self.expect(b'*')?;
        }
        let (name_offset, name) = self.parse_ident()?;
        let entry = if PARAM_FAMILIES.contains(&name.as_str()) {
            self.expect(b'(')?;
            let arg = self.parse_integer()?;
            self.expect(b')')?;
            format!("{}/{}", name, arg)
        } else if name == "zero" {
            self.expect(b'(')?;
            let arg = self.parse_relation_arg()?;
            self.expect(b')')?;
            format!("zero/{}", arg)
        } else {
            match name.as_str() {
                "logAlpha" => "logAlpha/v1".to_string(),
                "log2" => "log2/alt".to_string(),
                "log5" => "log5/alt".to_string(),
                "logSqrt5" => "logSqrt5".to_string(),
                _ => {
                    return Err(ExprError::UnknownName { offset: name_offset, name })
                }
            }
        };
        Ok((coeff, entry))
    }
}

/// Parses a linear-combination expression into coefficient/name pairs.
pub fn parse_expr(text: &str) -> Result<LinearExpr, ExprError> {
    let mut p = Parser::new(text);
    let mut terms = Vec::new();
    let mut negate = false;
    p.skip_ws();
    if p.peek() == Some(b'-') {
        negate = true;
        p.pos += 1;
    } else if p.peek() == Some(b'+') {
        p.pos += 1;
    }
    loop {
        let (coeff, name) = p.parse_term()?;
        terms.push((if negate { -coeff } else { coeff }, name));
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                negate = false;
                p.pos += 1;
            }
            Some(b'-') => {
                negate = true;
                p.pos += 1;
            }
            Some(_) => return Err(p.err("expected '+', '-' or end of input")),
        }
    }
    Ok(LinearExpr { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_linear_combination() {
        let e = parse_expr("2*logF(3) - logL(3)").unwrap();
        assert_eq!(
            e.terms,
            vec![(rat(2, 1), "logF/3".into()), (rat(-1, 1), "logL/3".into())]
        );
    }

    #[test]
    fn parses_single_term() {
        let e = parse_expr("logF(1)").unwrap();
        assert_eq!(e.terms, vec![(rat(1, 1), "logF/1".into())]);
    }

    #[test]
    fn parses_rational_coefficients_and_bare_names() {
        let e = parse_expr("1/2*log2 + 3*logAlpha - log5").unwrap();
        assert_eq!(
            e.terms,
            vec![
                (rat(1, 2), "log2/alt".into()),
                (rat(3, 1), "logAlpha/v1".into()),
                (rat(-1, 1), "log5/alt".into()),
            ]
        );
    }

    #[test]
    fn parses_zero_relation() {
        let e = parse_expr("zero(thm4.1) + zero(len2)").unwrap();
        assert_eq!(
            e.terms,
            vec![(rat(1, 1), "zero/thm4.1".into()), (rat(1, 1), "zero/len2".into())]
        );
    }

    #[test]
    fn leading_sign() {
        let e = parse_expr("-2*atan2L(3) + atan12(1)").unwrap();
        assert_eq!(
            e.terms,
            vec![(rat(-2, 1), "atan2L/3".into()), (rat(1, 1), "atan12/1".into())]
        );
    }

    #[test]
    fn syntax_error_offsets() {
        let err = parse_expr("2*logF(3").unwrap_err();
        assert_eq!(err, ExprError::Syntax { offset: 8, message: "expected ')'".into() });
        let err = parse_expr("2*bogus(3)").unwrap_err();
        assert!(matches!(err, ExprError::UnknownName { offset: 2, .. }));
        assert!(parse_expr("").is_err());
        assert!(parse_expr("1/0*logF(3)").is_err());
        assert!(parse_expr("logF(3) logL(2)").is_err());
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_expr("  2 * logF( 3 )-logL(3)").unwrap(),
            parse_expr("2*logF(3) - logL(3)").unwrap()
        );
    }
}
