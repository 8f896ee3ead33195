//! Element literal parser: a small recursive-descent expression grammar
//! evaluated directly in the target ring.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := primary ('^' UINT)?
//! primary := INT | 'x' | 'y' | 'p' | '(' expr (',' expr)? ')'
//! ```

use num_bigint::BigInt;

use super::{Element, RingHandle};
use crate::error::{parse_err, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(char),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(Token, String)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n = text.parse::<BigInt>().map_err(|_| parse_err(&text, "bad integer"))?;
            out.push((Token::Num(n), text));
        } else if matches!(c, 'x' | 'y' | 'p') {
            out.push((Token::Var(c), c.to_string()));
            i += 1;
        } else if "+-*/^(),".contains(c) {
            out.push((Token::Sym(c), c.to_string()));
            i += 1;
        } else {
            return Err(parse_err(c.to_string(), "unexpected character in element literal"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, String)>,
    pos: usize,
    ring: &'a RingHandle,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn text(&self) -> String {
        self.tokens
            .get(self.pos)
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| "<end>".into())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.ring.add(&acc, &rhs)?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.ring.sub(&acc, &rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Num(_)) | Some(Token::Var(_)) | Some(Token::Sym('('))
        )
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = self.ring.mul(&acc, &rhs)?;
            } else if self.eat('/') {
                let token = self.text();
                let rhs = self.unary()?;
                let inv = self
                    .ring
                    .inverse(&rhs)
                    .map_err(|_| parse_err(token, format!("divisor {rhs} is not a unit of {}", self.ring)))?;
                acc = self.ring.mul(&acc, &inv)?;
            } else if self.starts_primary() {
                let rhs = self.power()?;
                acc = self.ring.mul(&acc, &rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Element> {
        if self.eat('-') {
            let v = self.unary()?;
            return self.ring.neg(&v);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element> {
        let base = self.primary()?;
        if self.eat('^') {
            let token = self.text();
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e = u32::try_from(&n).map_err(|_| parse_err(token, "exponent too large"))?;
                    self.ring.pow(&base, e)
                }
                _ => Err(parse_err(token, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Element> {
        let token = self.text();
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.from_int(&n))
            }
            Some(Token::Var(v)) => {
                self.pos += 1;
                match (v, self.ring) {
                    ('x', RingHandle::MonLoc) => Ok(Element::poly(Poly::x())),
                    ('y', RingHandle::MonLoc) => Ok(Element::poly(Poly::y())),
                    ('p', RingHandle::IntLoc(p)) => Ok(self.ring.from_int(&BigInt::from(*p))),
                    _ => Err(parse_err(token, format!("variable not available in {}", self.ring))),
                }
            }
            Some(Token::Sym('(')) => {
                self.pos += 1;
                let ring = self.ring;
                let first = match ring {
                    RingHandle::Prod(l, r) if self.is_pair_ahead() => {
                        self.ring = l;
                        let a = self.expr();
                        self.ring = ring;
                        let a = a?;
                        if !self.eat(',') {
                            return Err(parse_err(self.text(), "expected `,` in pair"));
                        }
                        self.ring = r;
                        let b = self.expr();
                        self.ring = ring;
                        Element::pair(a, b?)
                    }
                    _ => self.expr()?,
                };
                if !self.eat(')') {
                    return Err(parse_err(self.text(), "expected `)`"));
                }
                Ok(first)
            }
            _ => Err(parse_err(token, "expected a number, variable or `(`")),
        }
    }

    // Scans forward for a top-level comma before the matching `)`.
    fn is_pair_ahead(&self) -> bool {
        let mut depth = 0usize;
        for (t, _) in &self.tokens[self.pos..] {
            match t {
                Token::Sym('(') => depth += 1,
                Token::Sym(')') if depth == 0 => return false,
                Token::Sym(')') => depth -= 1,
                Token::Sym(',') if depth == 0 => return true,
                _ => {}
            }
        }
        false
    }
}

pub(super) fn parse_element(ring: &RingHandle, s: &str) -> Result<Element> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(parse_err(s, "empty element literal"));
    }
    let mut parser = Parser { tokens, pos: 0, ring };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parse_err(parser.text(), "trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> RingHandle {
        s.parse().unwrap()
    }

    #[test]
    fn parses_per_backend() {
        assert_eq!(ring("Z/12").parse_element("17").unwrap(), Element::Residue(5));
        assert_eq!(ring("Z/12").parse_element("-1").unwrap(), Element::Residue(11));
        assert_eq!(
            ring("Z/4xZ/9").parse_element("(3,8)").unwrap(),
            Element::pair(Element::Residue(3), Element::Residue(8))
        );
        assert_eq!(
            ring("ZxZ").parse_element("(13, -2)").unwrap(),
            Element::pair(Element::int(13), Element::int(-2))
        );
        let loc = ring("Zloc:5");
        assert_eq!(loc.parse_element("p^2").unwrap(), loc.from_i64(25));
        assert_eq!(loc.parse_element("10/3").unwrap(), loc.rational(10.into(), 3.into()).unwrap());
        assert!(loc.parse_element("1/5").is_err());
    }

    #[test]
    fn polynomial_literals() {
        let kxy = RingHandle::MonLoc;
        let a = kxy.parse_element("xy/(1+y)").unwrap();
        let b = kxy.parse_element("x*y/(y + 1)").unwrap();
        assert_eq!(a, b);
        let Element::Fraction(num, den) = &a else { panic!() };
        assert_eq!(num.to_string(), "x*y");
        assert_eq!(den.to_string(), "y + 1");
        assert_eq!(a.to_string(), "x*y/(y + 1)");
        let c = kxy.parse_element("2x^2 - 3*x*y + y^3").unwrap();
        assert_eq!(c.to_string(), "y^3 + 2*x^2 - 3*x*y");
        assert!(kxy.parse_element("1/x").is_err());
        assert_eq!(kxy.parse_element("x/2").unwrap().to_string(), "x/2");
    }

    #[test]
    fn display_round_trips() {
        let kxy = RingHandle::MonLoc;
        for lit in ["x", "x^2 + x*y", "x*y/(y + 1)", "(x - y)/(1 - x)", "-x/3", "0", "7"] {
            let e = kxy.parse_element(lit).unwrap();
            let again = kxy.parse_element(&e.to_string()).unwrap();
            assert_eq!(e, again, "{lit} -> {e}");
        }
    }

    #[test]
    fn errors_name_the_offending_token() {
        let err = ring("Z").parse_element("3 + q").unwrap_err();
        assert!(err.to_string().contains("`q`"), "{err}");
        let err = ring("Z").parse_element("x").unwrap_err();
        assert!(err.to_string().contains("`x`"), "{err}");
        assert!(ring("Z").parse_element("(1").is_err());
        assert!(ring("Z").parse_element("").is_err());
    }
}
