//! Ring construction expressions.
//!
//! ```text
//! ring := term ("x" term)*
//! term := "Z" INT | "M" INT "(" ring ")" | "T" INT "(" ring ")" | "(" ring ")"
//! ```
//!
//! Whitespace between tokens is ignored and `x` associates to the left.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// Integers modulo `n`.
    Zmod(u64),
    /// Full `k × k` matrices over a base ring.
    Matrix(usize, Box<RingExpr>),
    /// Upper-triangular `k × k` matrices over a base ring.
    UpperTri(usize, Box<RingExpr>),
    /// Direct product, left-major.
    Product(Box<RingExpr>, Box<RingExpr>),
}

impl RingExpr {
    pub fn zmod(n: u64) -> Self {
        RingExpr::Zmod(n)
    }

    pub fn matrix(k: usize, base: RingExpr) -> Self {
        RingExpr::Matrix(k, Box::new(base))
    }

    pub fn upper_tri(k: usize, base: RingExpr) -> Self {
        RingExpr::UpperTri(k, Box::new(base))
    }

    pub fn product(left: RingExpr, right: RingExpr) -> Self {
        RingExpr::Product(Box::new(left), Box::new(right))
    }

    /// Number of elements, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        match self {
            RingExpr::Zmod(n) => *n as u128,
            RingExpr::Matrix(k, base) => sat_pow(base.cardinality(), k * k),
            RingExpr::UpperTri(k, base) => sat_pow(base.cardinality(), k * (k + 1) / 2),
            RingExpr::Product(l, r) => l.cardinality().saturating_mul(r.cardinality()),
        }
    }

    /// Rejects descriptors whose cardinality exceeds `cap`.
    pub fn check_cap(&self, cap: u64) -> Result<u64> {
        let c = self.cardinality();
        if c > cap as u128 {
            Err(Error::CardinalityCap {
                cardinality: c,
                cap,
            })
        } else {
            Ok(c as u64)
        }
    }
}

fn sat_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z{n}"),
            RingExpr::Matrix(k, b) => write!(f, "M{k}({b})"),
            RingExpr::UpperTri(k, b) => write!(f, "T{k}({b})"),
            RingExpr::Product(l, r) => match **r {
                RingExpr::Product(..) => write!(f, "{l} x ({r})"),
                _ => write!(f, "{l} x {r}"),
            },
        }
    }
}

impl std::str::FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring_expr(s)
    }
}

/// Parses a ring expression. Errors carry the byte offset of the offending token.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let expr = p.ring()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(expr)
}

/// Parses and checks the cardinality against `cap`.
pub fn parse_ring_expr_capped(text: &str, cap: u64) -> Result<RingExpr> {
    let expr = parse_ring_expr(text)?;
    expr.check_cap(cap)?;
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(Error::syntax(
                self.pos,
                format!("expected '{}', found '{}'", c as char, got as char),
            )),
            None => Err(Error::syntax(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn ring(&mut self) -> Result<RingExpr> {
        let mut left = self.term()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.term()?;
            left = RingExpr::product(left, right);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<RingExpr> {
        let start = self.pos;
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                Ok(RingExpr::Zmod(self.positive_int()?))
            }
            Some(c @ (b'M' | b'T')) => {
                self.pos += 1;
                let k = usize::try_from(self.positive_int()?)
                    .map_err(|_| Error::syntax(start, "dimension too large"))?;
                self.expect(b'(')?;
                let base = self.ring()?;
                self.expect(b')')?;
                Ok(if c == b'M' {
                    RingExpr::matrix(k, base)
                } else {
                    RingExpr::upper_tri(k, base)
                })
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.ring()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) => Err(Error::syntax(
                self.pos,
                format!("expected 'Z', 'M', 'T' or '(', found '{}'", c as char),
            )),
            None => Err(Error::syntax(self.pos, "unexpected end of input")),
        }
    }

    fn positive_int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start, "expected a positive integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
        match digits.parse::<u64>() {
            Ok(0) => Err(Error::syntax(start, "size must be at least 1")),
            Ok(v) => Ok(v),
            Err(_) => Err(Error::syntax(start, "integer too large")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn base_case() {
        assert_eq!(parse_ring_expr("Z5").unwrap(), RingExpr::Zmod(5));
    }

    #[test]
    fn matrix_cardinality() {
        let e = parse_ring_expr("M2(Z2)").unwrap();
        assert_eq!(e, RingExpr::matrix(2, RingExpr::Zmod(2)));
        assert_eq!(e.cardinality(), 16);
    }

    #[test]
    fn product_of_triangular() {
        let e = parse_ring_expr("T2(Z3) x Z4").unwrap();
        assert_eq!(
            e,
            RingExpr::product(RingExpr::upper_tri(2, RingExpr::Zmod(3)), RingExpr::Zmod(4))
        );
        assert_eq!(e.cardinality(), 108);
    }

    #[test]
    fn product_is_left_associative() {
        let e = parse_ring_expr("Z2xZ3 x Z5").unwrap();
        let want = RingExpr::product(
            RingExpr::product(RingExpr::Zmod(2), RingExpr::Zmod(3)),
            RingExpr::Zmod(5),
        );
        assert_eq!(e, want);
        assert_eq!(e.to_string(), "Z2 x Z3 x Z5");
    }

    #[test]
    fn right_nested_product_prints_parens() {
        let e = parse_ring_expr("Z2 x (Z3 x Z5)").unwrap();
        assert_eq!(e.to_string(), "Z2 x (Z3 x Z5)");
        assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn syntax_errors_report_offsets() {
        match parse_ring_expr("M2(Z2") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        match parse_ring_expr("Z0") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_ring_expr("Z5 y") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_ring_expr("").is_err());
    }

    #[test]
    fn cap_error_carries_cardinality() {
        match parse_ring_expr_capped("M3(Z2)", 256) {
            Err(Error::CardinalityCap { cardinality, cap }) => {
                assert_eq!(cardinality, 512);
                assert_eq!(cap, 256);
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_ring_expr("M9(Z100)").unwrap().cardinality() == u128::MAX);
    }

    fn arb_expr() -> impl Strategy<Value = RingExpr> {
        let leaf = (1u64..50).prop_map(RingExpr::Zmod);
        leaf.prop_recursive(4, 16, 2, |inner| {
            prop_oneof![
                (1usize..4, inner.clone()).prop_map(|(k, b)| RingExpr::matrix(k, b)),
                (1usize..4, inner.clone()).prop_map(|(k, b)| RingExpr::upper_tri(k, b)),
                (inner.clone(), inner).prop_map(|(l, r)| RingExpr::product(l, r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn printer_round_trips(e in arb_expr()) {
            prop_assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
    }
}
