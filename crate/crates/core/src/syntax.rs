//! Bracketed literal syntax shared by ring elements and rational matrices.
//!
//! ```text
//! value := ATOM | "[" value ("," value)* "]" | "(" value ("," value)* ")"
//! ATOM  := ["+"|"-"] DIGITS ["/" DIGITS]
//! ```

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Atom { text: String, offset: usize },
    List { items: Vec<Literal>, offset: usize },
    Tuple { items: Vec<Literal>, offset: usize },
}

impl Literal {
    pub fn offset(&self) -> usize {
        match self {
            Literal::Atom { offset, .. }
            | Literal::List { offset, .. }
            | Literal::Tuple { offset, .. } => *offset,
        }
    }
}

pub fn parse_literal(text: &str) -> Result<Literal> {
    let mut p = LitParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.value()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(v)
}

struct LitParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl LitParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn value(&mut self) -> Result<Literal> {
        self.skip_ws();
        let offset = self.pos;
        match self.src.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let items = self.seq(b']')?;
                Ok(Literal::List { items, offset })
            }
            Some(b'(') => {
                self.pos += 1;
                let items = self.seq(b')')?;
                Ok(Literal::Tuple { items, offset })
            }
            Some(c) if c.is_ascii_digit() || *c == b'-' || *c == b'+' => self.atom(),
            Some(c) => Err(Error::syntax(
                offset,
                format!("unexpected '{}'", *c as char),
            )),
            None => Err(Error::syntax(offset, "unexpected end of input")),
        }
    }

    fn seq(&mut self, close: u8) -> Result<Vec<Literal>> {
        let mut items = vec![self.value()?];
        loop {
            self.skip_ws();
            match self.src.get(self.pos) {
                Some(b',') => {
                    self.pos += 1;
                    items.push(self.value()?);
                }
                Some(c) if *c == close => {
                    self.pos += 1;
                    return Ok(items);
                }
                _ => {
                    return Err(Error::syntax(
                        self.pos,
                        format!("expected ',' or '{}'", close as char),
                    ))
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Literal> {
        let offset = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        self.digits()?;
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            self.digits()?;
        }
        let text = String::from_utf8_lossy(&self.src[offset..self.pos]).into_owned();
        Ok(Literal::Atom { text, offset })
    }

    fn digits(&mut self) -> Result<()> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            Err(Error::syntax(start, "expected digits"))
        } else {
            Ok(())
        }
    }
}
