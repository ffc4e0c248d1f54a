//! Structural arithmetic over canonical codes.
//!
//! Encoding is mixed-radix over the construction tree:
//! `Z(n)` stores the residue itself; `M`/`T` store entries row-major with the
//! first stored entry as the most significant digit in base `|base|`
//! (`T` stores only the entries on or above the diagonal); a product stores
//! `left * |right| + right`. The zero element always encodes as 0.

use crate::error::{Error, Result};
use crate::syntax::Literal;

use super::expr::RingExpr;

#[derive(Debug, Clone)]
pub(crate) enum Node {
    Zmod(u32),
    Square {
        k: usize,
        upper_only: bool,
        base: Box<Node>,
        base_card: u32,
        /// Maps (i, j) to its digit slot, `None` below the diagonal of a triangular ring.
        slots: Vec<Option<usize>>,
        len: usize,
    },
    Product {
        left: Box<Node>,
        right: Box<Node>,
        right_card: u32,
    },
}

impl Node {
    pub(crate) fn build(expr: &RingExpr) -> Node {
        match expr {
            RingExpr::Zmod(n) => Node::Zmod(*n as u32),
            RingExpr::Matrix(k, b) | RingExpr::UpperTri(k, b) => {
                let upper_only = matches!(expr, RingExpr::UpperTri(..));
                let k = *k;
                let mut slots = vec![None; k * k];
                let mut len = 0;
                for i in 0..k {
                    for j in 0..k {
                        if !upper_only || i <= j {
                            slots[i * k + j] = Some(len);
                            len += 1;
                        }
                    }
                }
                Node::Square {
                    k,
                    upper_only,
                    base_card: b.cardinality() as u32,
                    base: Box::new(Node::build(b)),
                    slots,
                    len,
                }
            }
            RingExpr::Product(l, r) => Node::Product {
                left: Box::new(Node::build(l)),
                right: Box::new(Node::build(r)),
                right_card: r.cardinality() as u32,
            },
        }
    }

    pub(crate) fn one(&self) -> u32 {
        match self {
            Node::Zmod(n) => 1 % n,
            Node::Square { k, base, .. } => {
                let one = base.one();
                let digits = (0..*k * *k)
                    .map(|idx| if idx / k == idx % k { one } else { 0 })
                    .collect::<Vec<_>>();
                self.encode_full(&digits)
            }
            Node::Product {
                left,
                right,
                right_card,
            } => left.one() * right_card + right.one(),
        }
    }

    /// Full `k*k` entry vector (zeros below the diagonal for triangular rings).
    fn decode_full(&self, mut code: u32) -> Vec<u32> {
        let Node::Square {
            k,
            base_card,
            slots,
            len,
            ..
        } = self
        else {
            unreachable!("decode_full on a non-matrix node")
        };
        let mut digits = vec![0u32; *len];
        for d in digits.iter_mut().rev() {
            *d = code % base_card;
            code /= base_card;
        }
        (0..k * k)
            .map(|idx| slots[idx].map_or(0, |s| digits[s]))
            .collect()
    }

    fn encode_full(&self, entries: &[u32]) -> u32 {
        let Node::Square {
            base_card, slots, ..
        } = self
        else {
            unreachable!("encode_full on a non-matrix node")
        };
        let mut code = 0u32;
        for (idx, slot) in slots.iter().enumerate() {
            if slot.is_some() {
                code = code * base_card + entries[idx];
            }
        }
        code
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Node::Zmod(n) => ((a as u64 + b as u64) % *n as u64) as u32,
            Node::Square { base, .. } => {
                let (x, y) = (self.decode_full(a), self.decode_full(b));
                let sum: Vec<u32> = x.iter().zip(&y).map(|(&p, &q)| base.add(p, q)).collect();
                self.encode_full(&sum)
            }
            Node::Product {
                left,
                right,
                right_card,
            } => {
                let (al, ar) = (a / right_card, a % right_card);
                let (bl, br) = (b / right_card, b % right_card);
                left.add(al, bl) * right_card + right.add(ar, br)
            }
        }
    }

    pub(crate) fn neg(&self, a: u32) -> u32 {
        match self {
            Node::Zmod(n) => (n - a) % n,
            Node::Square { base, .. } => {
                let x: Vec<u32> = self.decode_full(a).iter().map(|&p| base.neg(p)).collect();
                self.encode_full(&x)
            }
            Node::Product {
                left,
                right,
                right_card,
            } => left.neg(a / right_card) * right_card + right.neg(a % right_card),
        }
    }

    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Node::Zmod(n) => ((a as u64 * b as u64) % *n as u64) as u32,
            Node::Square {
                k,
                upper_only,
                base,
                ..
            } => {
                let k = *k;
                let (x, y) = (self.decode_full(a), self.decode_full(b));
                let mut out = vec![0u32; k * k];
                for i in 0..k {
                    for j in 0..k {
                        if *upper_only && i > j {
                            continue;
                        }
                        let mut acc = 0u32;
                        for t in 0..k {
                            let p = base.mul(x[i * k + t], y[t * k + j]);
                            acc = base.add(acc, p);
                        }
                        out[i * k + j] = acc;
                    }
                }
                self.encode_full(&out)
            }
            Node::Product {
                left,
                right,
                right_card,
            } => {
                let (al, ar) = (a / right_card, a % right_card);
                let (bl, br) = (b / right_card, b % right_card);
                left.mul(al, bl) * right_card + right.mul(ar, br)
            }
        }
    }

    pub(crate) fn format(&self, code: u32, out: &mut String) {
        match self {
            Node::Zmod(_) => out.push_str(&code.to_string()),
            Node::Square { k, base, .. } => {
                let entries = self.decode_full(code);
                out.push('[');
                for i in 0..*k {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('[');
                    for j in 0..*k {
                        if j > 0 {
                            out.push(',');
                        }
                        base.format(entries[i * k + j], out);
                    }
                    out.push(']');
                }
                out.push(']');
            }
            Node::Product {
                left,
                right,
                right_card,
            } => {
                out.push('(');
                left.format(code / right_card, out);
                out.push(',');
                right.format(code % right_card, out);
                out.push(')');
            }
        }
    }

    pub(crate) fn code_of_literal(&self, lit: &Literal) -> Result<u32> {
        match (self, lit) {
            (Node::Zmod(n), Literal::Atom { text, offset }) => {
                let v: u64 = text.parse().map_err(|_| {
                    Error::syntax(
                        *offset,
                        format!("expected a residue in 0..{n}, found '{text}'"),
                    )
                })?;
                if v >= *n as u64 {
                    return Err(Error::OutOfRange {
                        value: text.clone(),
                        message: format!("residues of Z{n} lie in 0..{n}"),
                    });
                }
                Ok(v as u32)
            }
            (
                Node::Square {
                    k,
                    upper_only,
                    base,
                    ..
                },
                Literal::List { items, offset },
            ) => {
                let k = *k;
                if items.len() != k {
                    return Err(Error::syntax(*offset, format!("expected {k} rows")));
                }
                let mut entries = vec![0u32; k * k];
                for (i, row) in items.iter().enumerate() {
                    let Literal::List {
                        items: cells,
                        offset,
                    } = row
                    else {
                        return Err(Error::syntax(row.offset(), "expected a row '[...]'"));
                    };
                    if cells.len() != k {
                        return Err(Error::syntax(*offset, format!("expected {k} entries")));
                    }
                    for (j, cell) in cells.iter().enumerate() {
                        let v = base.code_of_literal(cell)?;
                        if *upper_only && i > j && v != 0 {
                            return Err(Error::OutOfRange {
                                value: format!("entry ({i},{j})"),
                                message: "entries below the diagonal must be zero".into(),
                            });
                        }
                        entries[i * k + j] = v;
                    }
                }
                Ok(self.encode_full(&entries))
            }
            (
                Node::Product {
                    left,
                    right,
                    right_card,
                },
                Literal::Tuple { items, offset },
            ) => {
                if items.len() != 2 {
                    return Err(Error::syntax(*offset, "expected a pair '(left,right)'"));
                }
                Ok(left.code_of_literal(&items[0])? * right_card
                    + right.code_of_literal(&items[1])?)
            }
            (Node::Zmod(_), other) => Err(Error::syntax(other.offset(), "expected an integer")),
            (Node::Square { .. }, other) => Err(Error::syntax(
                other.offset(),
                "expected a matrix '[[...],...]'",
            )),
            (Node::Product { .. }, other) => Err(Error::syntax(
                other.offset(),
                "expected a pair '(left,right)'",
            )),
        }
    }
}
