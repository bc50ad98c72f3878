//! Text form of polynomials: `+ - * ^`, integer and rational literals
//! (`3`, `3/4`), parentheses, and variables drawn from an explicit table.
//! No implicit multiplication — `x y` and `2x` are errors, `x*y` and `2*x`
//! are not. Errors carry the byte offset of the offending token.

use super::poly::Poly;
use super::vartable::VarTable;
use super::MultiPolyError;
use crate::exact_arith::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> MultiPolyError {
    MultiPolyError::Parse { position, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, MultiPolyError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => { i += 1; Tok::Plus }
            '-' => { i += 1; Tok::Minus }
            '*' => { i += 1; Tok::Star }
            '^' => { i += 1; Tok::Caret }
            '(' => { i += 1; Tok::LParen }
            ')' => { i += 1; Tok::RParen }
            _ if c.is_ascii_digit() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let numer = BigInt::from_str(&src[i..j]).expect("digits");
                // a '/' directly after the digits continues a rational literal
                if j < bytes.len() && bytes[j] == b'/' {
                    let dstart = j + 1;
                    let mut k = dstart;
                    while k < bytes.len() && bytes[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == dstart {
                        return Err(err(j, "expected digits after `/` in rational literal"));
                    }
                    let denom = BigInt::from_str(&src[dstart..k]).expect("digits");
                    if denom.is_zero() {
                        return Err(err(dstart, "zero denominator in rational literal"));
                    }
                    i = k;
                    Tok::Num(Rational::new(numer, denom))
                } else {
                    i = j;
                    Tok::Num(Rational::from_integer(numer))
                }
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len()
                    && ((bytes[j] as char).is_ascii_alphanumeric() || bytes[j] == b'_')
                {
                    j += 1;
                }
                let name = src[i..j].to_string();
                i = j;
                Tok::Ident(name)
            }
            other => return Err(err(i, format!("unexpected character {other:?}"))),
        };
        toks.push((start, tok));
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Poly, MultiPolyError> {
        let mut negate_first = false;
        if matches!(self.peek(), Some((_, Tok::Minus))) {
            self.bump();
            negate_first = true;
        }
        let first = self.term()?;
        let mut acc = if negate_first { first.neg() } else { first };
        loop {
            match self.peek() {
                Some((_, Tok::Plus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                Some((_, Tok::Minus)) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, MultiPolyError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.bump();
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, MultiPolyError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some((_, Tok::Num(r))) if r.denom().is_one() && !r.numer().is_negative() => {
                    let e = r
                        .numer()
                        .to_u32()
                        .ok_or_else(|| err(at, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(err(at, "expected a nonnegative integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, MultiPolyError> {
        let at = self.here();
        match self.bump() {
            Some((_, Tok::Num(r))) => Ok(Poly::constant(self.vars, r)),
            Some((p, Tok::Ident(name))) => match self.vars.index(&name) {
                Some(i) => Poly::var(self.vars, i),
                None => Err(err(p, format!("unknown identifier {name:?}"))),
            },
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    Some((p, _)) => Err(err(p, "expected `)`")),
                    None => Err(err(self.end, "expected `)` before end of input")),
                }
            }
            Some((p, t)) => Err(err(p, format!("unexpected token {t:?}"))),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

/// Parse an expression over the given variables.
pub fn parse_poly(src: &str, vars: &Arc<VarTable>) -> Result<Poly, MultiPolyError> {
    let toks = lex(src)?;
    let mut parser = Parser { toks, pos: 0, end: src.len(), vars };
    let poly = parser.expr()?;
    match parser.peek() {
        None => Ok(poly),
        Some((p, Tok::Ident(_) | Tok::Num(_) | Tok::LParen)) => Err(err(
            *p,
            "unexpected start of a new factor (implicit multiplication is not supported; use `*`)",
        )),
        Some((p, t)) => Err(err(*p, format!("unexpected token {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational;
    use crate::multipoly::{Monomial, MonomialOrder};
    use proptest::prelude::*;

    fn xy() -> Arc<VarTable> {
        VarTable::new(["x", "y"]).unwrap()
    }

    fn pos_of(e: MultiPolyError) -> usize {
        match e {
            MultiPolyError::Parse { position, .. } => position,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn basic_expressions() {
        let v = xy();
        let p = parse_poly("x^2 - y", &v).unwrap();
        assert_eq!(p.to_string(), "x^2 - y");
        let q = parse_poly("2*x*y + 3/4", &v).unwrap();
        assert_eq!(q.coeff(&Monomial::from_exps(vec![1, 1])), rational(2, 1));
        assert_eq!(q.coeff(&Monomial::from_exps(vec![0, 0])), rational(3, 4));
        let r = parse_poly("(x + y)^2", &v).unwrap();
        assert_eq!(r, parse_poly("x^2 + 2*x*y + y^2", &v).unwrap());
        assert_eq!(parse_poly("-x + -0", &v).is_err(), true); // `- -` is not accepted
        assert_eq!(parse_poly("-(x - y)", &v).unwrap(), parse_poly("y - x", &v).unwrap());
        assert_eq!(parse_poly("0", &v).unwrap(), Poly::zero(&v));
    }

    #[test]
    fn truncated_input_reports_the_byte_after_the_end() {
        assert_eq!(pos_of(parse_poly("x + ", &xy()).unwrap_err()), 4);
        assert_eq!(pos_of(parse_poly("", &xy()).unwrap_err()), 0);
        assert_eq!(pos_of(parse_poly("(x + y", &xy()).unwrap_err()), 6);
    }

    #[test]
    fn juxtaposition_is_not_multiplication() {
        // `yy` is a single unknown identifier, not y*y
        let e = parse_poly("x + yy", &xy()).unwrap_err();
        assert_eq!(pos_of(e.clone()), 4);
        assert!(e.to_string().contains("unknown identifier"));
        // two known tokens side by side are rejected too
        let e = parse_poly("x y", &xy()).unwrap_err();
        assert_eq!(pos_of(e.clone()), 2);
        assert!(e.to_string().contains("implicit multiplication"));
        assert!(parse_poly("2 x", &xy()).is_err());
    }

    #[test]
    fn bad_literals() {
        assert!(parse_poly("3/0", &xy()).is_err());
        assert!(parse_poly("3/", &xy()).is_err());
        assert!(parse_poly("x^y", &xy()).is_err());
        assert!(parse_poly("x^(2)", &xy()).is_err());
        assert!(parse_poly("x ^ 1/2", &xy()).is_err());
        assert!(parse_poly("x?", &xy()).is_err());
    }

    prop_compose! {
        fn arb_poly()(terms in proptest::collection::vec(
            (proptest::collection::vec(0u32..5, 2), -6i64..7, 1i64..4), 0..7)) -> Poly {
            Poly::from_terms(
                &xy(),
                terms.into_iter().map(|(e, n, d)| (Monomial::from_exps(e), rational(n, d))),
            ).unwrap()
        }
    }

    proptest! {
        // Printing in any order parses back to the same polynomial.
        #[test]
        fn display_parse_round_trip(p in arb_poly()) {
            for order in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
                let text = p.to_string_with(order);
                let back = parse_poly(&text, p.vars()).unwrap();
                prop_assert_eq!(&back, &p, "text {:?}", text);
            }
        }
    }
}
