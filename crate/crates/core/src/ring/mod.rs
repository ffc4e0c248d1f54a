//! Enumerable finite rings with exact arithmetic over canonical codes.

mod expr;
mod node;
mod orbit;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

pub use expr::{parse_ring_expr, parse_ring_expr_capped, RingExpr};
pub use orbit::PowerOrbit;

use crate::error::{Error, Result};
use crate::structure::StructuralSets;
use crate::syntax::parse_literal;
use node::Node;

pub const DEFAULT_CAP: u64 = 65_536;
pub const DEFAULT_TABLE_THRESHOLD: u64 = 1024;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingOptions {
    /// Largest cardinality accepted by [`FiniteRing::build`].
    pub cap: u64,
    /// Cayley tables are built iff the cardinality is at most this.
    pub table_threshold: u64,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions {
            cap: DEFAULT_CAP,
            table_threshold: DEFAULT_TABLE_THRESHOLD,
        }
    }
}

/// A ring-scoped value: the canonical code of an element plus the identity of its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring: u64,
    code: u32,
}

impl Element {
    pub fn code(self) -> u32 {
        self.code
    }

    pub fn index(self) -> usize {
        self.code as usize
    }

    pub fn ring_id(self) -> u64 {
        self.ring
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Neg,
    Mul,
    Sub,
}

#[derive(Debug, Clone)]
pub(crate) enum Backend {
    Tree(Node),
    /// Cosets of an ideal, represented by their smallest parent code.
    Quotient {
        parent: Box<Backend>,
        reps: Vec<u32>,
        class_of: Vec<u32>,
    },
}

impl Backend {
    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Backend::Tree(n) => n.add(a, b),
            Backend::Quotient {
                parent,
                reps,
                class_of,
            } => class_of[parent.add(reps[a as usize], reps[b as usize]) as usize],
        }
    }

    fn neg(&self, a: u32) -> u32 {
        match self {
            Backend::Tree(n) => n.neg(a),
            Backend::Quotient {
                parent,
                reps,
                class_of,
            } => class_of[parent.neg(reps[a as usize]) as usize],
        }
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Backend::Tree(n) => n.mul(a, b),
            Backend::Quotient {
                parent,
                reps,
                class_of,
            } => class_of[parent.mul(reps[a as usize], reps[b as usize]) as usize],
        }
    }

    fn one(&self) -> u32 {
        match self {
            Backend::Tree(n) => n.one(),
            Backend::Quotient {
                parent, class_of, ..
            } => class_of[parent.one() as usize],
        }
    }

    fn format(&self, code: u32, out: &mut String) {
        match self {
            Backend::Tree(n) => n.format(code, out),
            Backend::Quotient { parent, reps, .. } => parent.format(reps[code as usize], out),
        }
    }

    fn parse(&self, text: &str) -> Result<u32> {
        match self {
            Backend::Tree(n) => n.code_of_literal(&parse_literal(text)?),
            Backend::Quotient {
                parent, class_of, ..
            } => Ok(class_of[parent.parse(text)? as usize]),
        }
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// An immutable finite ring. Structural sets are computed lazily, at most once.
pub struct FiniteRing {
    id: u64,
    label: String,
    descriptor: Option<RingExpr>,
    card: u32,
    one: u32,
    backend: Backend,
    tables: Option<Tables>,
    pub(crate) structure: OnceLock<StructuralSets>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("cardinality", &self.card)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from a descriptor, honouring the cap and table threshold.
    pub fn build(expr: &RingExpr, opts: RingOptions) -> Result<FiniteRing> {
        let card = expr.check_cap(opts.cap.min(u32::MAX as u64))?;
        let backend = Backend::Tree(Node::build(expr));
        Ok(Self::assemble(
            expr.to_string(),
            Some(expr.clone()),
            card as u32,
            backend,
            opts.table_threshold,
        ))
    }

    /// Parses and builds with default options.
    pub fn parse(text: &str) -> Result<FiniteRing> {
        Self::parse_with(text, RingOptions::default())
    }

    pub fn parse_with(text: &str, opts: RingOptions) -> Result<FiniteRing> {
        let expr = parse_ring_expr(text)?;
        Self::build(&expr, opts)
    }

    pub(crate) fn quotient_of(
        parent: &FiniteRing,
        reps: Vec<u32>,
        class_of: Vec<u32>,
        label: String,
    ) -> FiniteRing {
        let card = reps.len() as u32;
        let backend = Backend::Quotient {
            parent: Box::new(parent.backend.clone()),
            reps,
            class_of,
        };
        Self::assemble(label, None, card, backend, DEFAULT_TABLE_THRESHOLD)
    }

    fn assemble(
        label: String,
        descriptor: Option<RingExpr>,
        card: u32,
        backend: Backend,
        threshold: u64,
    ) -> FiniteRing {
        let tables = (card as u64 <= threshold).then(|| {
            let n = card as usize;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..card {
                for b in 0..card {
                    add.push(backend.add(a, b));
                    mul.push(backend.mul(a, b));
                }
            }
            let neg = (0..card).map(|a| backend.neg(a)).collect();
            Tables { add, mul, neg }
        });
        FiniteRing {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            one: backend.one(),
            label,
            descriptor,
            card,
            backend,
            tables,
            structure: OnceLock::new(),
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    /// Canonical name: the printed descriptor, or a derived label for quotients.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn descriptor(&self) -> Option<&RingExpr> {
        self.descriptor.as_ref()
    }

    pub fn cardinality(&self) -> usize {
        self.card as usize
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn zero(&self) -> Element {
        self.wrap(0)
    }

    pub fn one(&self) -> Element {
        self.wrap(self.one)
    }

    pub fn element(&self, code: u32) -> Element {
        assert!(
            code < self.card,
            "code {code} out of range for {}",
            self.label
        );
        self.wrap(code)
    }

    pub fn try_element(&self, code: u32) -> Option<Element> {
        (code < self.card).then(|| self.wrap(code))
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.card).map(move |c| self.wrap(c))
    }

    pub fn contains(&self, x: Element) -> bool {
        x.ring == self.id
    }

    fn wrap(&self, code: u32) -> Element {
        Element {
            ring: self.id,
            code,
        }
    }

    #[inline]
    pub(crate) fn code_of(&self, x: Element) -> u32 {
        assert!(
            x.ring == self.id,
            "element from ring #{} used in {} (#{})",
            x.ring,
            self.label,
            self.id
        );
        x.code
    }

    #[inline]
    pub(crate) fn add_code(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[a as usize * self.card as usize + b as usize],
            None => self.backend.add(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_code(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.card as usize + b as usize],
            None => self.backend.mul(a, b),
        }
    }

    #[inline]
    pub(crate) fn neg_code(&self, a: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.backend.neg(a),
        }
    }

    /// Arithmetic computed from the construction tree, bypassing any Cayley table.
    pub fn structural(&self, op: ArithOp, x: Element, y: Element) -> Element {
        let (a, b) = (self.code_of(x), self.code_of(y));
        self.wrap(match op {
            ArithOp::Add => self.backend.add(a, b),
            ArithOp::Mul => self.backend.mul(a, b),
            ArithOp::Neg => self.backend.neg(a),
            ArithOp::Sub => self.backend.add(a, self.backend.neg(b)),
        })
    }

    pub fn add(&self, x: Element, y: Element) -> Element {
        self.wrap(self.add_code(self.code_of(x), self.code_of(y)))
    }

    pub fn neg(&self, x: Element) -> Element {
        self.wrap(self.neg_code(self.code_of(x)))
    }

    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.wrap(self.add_code(self.code_of(x), self.neg_code(self.code_of(y))))
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.wrap(self.mul_code(self.code_of(x), self.code_of(y)))
    }

    /// Left-to-right product of any number of factors; empty product is one.
    pub fn product(&self, factors: &[Element]) -> Element {
        factors.iter().fold(self.one(), |acc, &f| self.mul(acc, f))
    }

    /// Checked arithmetic: rejects foreign elements instead of panicking.
    pub fn ring_arith(&self, op: ArithOp, x: Element, y: Option<Element>) -> Result<Element> {
        if !self.contains(x) || y.is_some_and(|y| !self.contains(y)) {
            return Err(Error::ForeignElement);
        }
        let need = |y: Option<Element>| {
            y.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")))
        };
        Ok(match op {
            ArithOp::Add => self.add(x, need(y)?),
            ArithOp::Sub => self.sub(x, need(y)?),
            ArithOp::Mul => self.mul(x, need(y)?),
            ArithOp::Neg => self.neg(x),
        })
    }

    /// `a^n` by repeated squaring; `a^0` is one.
    pub fn pow(&self, a: Element, mut n: u64) -> Element {
        let mut base = self.code_of(a);
        let mut acc = self.one;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            n >>= 1;
        }
        self.wrap(acc)
    }

    pub fn power_orbit(&self, a: Element) -> PowerOrbit {
        PowerOrbit::compute(self, a)
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.backend.parse(text).map(|c| self.wrap(c))
    }

    pub fn format_element(&self, x: Element) -> String {
        let mut s = String::new();
        self.backend.format(self.code_of(x), &mut s);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s).unwrap()
    }

    #[test]
    fn trivial_ring() {
        let r = ring("Z1");
        assert_eq!(r.cardinality(), 1);
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn zmod5_basics() {
        let r = ring("Z5");
        assert_eq!(r.cardinality(), 5);
        assert_eq!(r.one().code(), 1);
        assert_eq!(r.mul(r.element(2), r.element(3)), r.element(1));
    }

    #[test]
    fn matrix_ring_identity_and_product() {
        let r = ring("M2(Z2)");
        assert_eq!(r.cardinality(), 16);
        assert_eq!(r.format_element(r.one()), "[[1,0],[0,1]]");
        let a = r.parse_element("[[1,1],[0,1]]").unwrap();
        assert_eq!(r.format_element(r.mul(a, a)), "[[1,0],[0,1]]");
    }

    #[test]
    fn product_ring_componentwise() {
        let r = ring("Z4 x Z2");
        let x = r.parse_element("(3,1)").unwrap();
        let y = r.parse_element("(1,1)").unwrap();
        assert_eq!(r.format_element(r.add(x, y)), "(0,0)");
        assert_eq!(r.add(x, y), r.zero());
    }

    #[test]
    fn encoding_is_row_major_most_significant_first() {
        let r = ring("M2(Z2)");
        assert_eq!(r.parse_element("[[1,0],[0,0]]").unwrap().code(), 8);
        assert_eq!(r.parse_element("[[0,0],[0,1]]").unwrap().code(), 1);
        assert_eq!(r.one().code(), 9);
        let t = ring("T2(Z3)");
        assert_eq!(t.parse_element("[[0,0],[0,1]]").unwrap().code(), 1);
        assert_eq!(t.parse_element("[[1,0],[0,0]]").unwrap().code(), 9);
        let p = ring("Z4 x Z3");
        assert_eq!(p.parse_element("(1,2)").unwrap().code(), 5);
    }

    #[test]
    fn powers() {
        let z5 = ring("Z5");
        assert_eq!(z5.pow(z5.element(2), 4), z5.one());
        assert_eq!(z5.pow(z5.element(3), 0), z5.one());
        let z4 = ring("Z4");
        assert_eq!(z4.pow(z4.element(2), 2), z4.zero());
    }

    #[test]
    fn pow_matches_naive_product() {
        let r = ring("M2(Z3)");
        for a in r.elements().step_by(7) {
            let mut naive = r.one();
            for n in 0..12u64 {
                assert_eq!(r.pow(a, n), naive);
                naive = r.mul(naive, a);
            }
        }
    }

    #[test]
    fn element_errors() {
        let z5 = ring("Z5");
        assert!(matches!(
            z5.parse_element("5"),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(z5.parse_element("[1]"), Err(Error::Syntax { .. })));
        let t = ring("T2(Z2)");
        assert!(matches!(
            t.parse_element("[[1,0],[1,1]]"),
            Err(Error::OutOfRange { .. })
        ));
        let m = ring("M2(Z2)");
        assert!(matches!(
            m.parse_element("[[1,0]]"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            m.parse_element("[[1,0],[0,2]]"),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn checked_arith_rejects_foreign_elements() {
        let a = ring("Z5");
        let b = ring("Z5");
        assert_eq!(
            a.ring_arith(ArithOp::Add, a.one(), Some(b.one())),
            Err(Error::ForeignElement)
        );
        assert_eq!(
            a.ring_arith(ArithOp::Sub, a.one(), Some(a.one())),
            Ok(a.zero())
        );
        assert_eq!(a.ring_arith(ArithOp::Neg, a.one(), None), Ok(a.element(4)));
        assert!(a.ring_arith(ArithOp::Mul, a.one(), None).is_err());
    }

    #[test]
    #[should_panic(expected = "used in")]
    fn unchecked_arith_panics_on_foreign_elements() {
        let a = ring("Z3");
        let b = ring("Z3");
        let _ = a.mul(a.one(), b.one());
    }

    #[test]
    fn tables_only_below_threshold() {
        assert!(ring("M2(Z5)").has_tables()); // 625
        assert!(!ring("M2(Z7)").has_tables()); // 2401
        let opts = RingOptions {
            table_threshold: 0,
            ..Default::default()
        };
        assert!(!FiniteRing::parse_with("Z5", opts).unwrap().has_tables());
    }

    #[test]
    fn cap_rejects_large_rings() {
        let e = FiniteRing::parse("M3(Z4)").unwrap_err();
        assert_eq!(
            e,
            Error::CardinalityCap {
                cardinality: 262_144,
                cap: DEFAULT_CAP
            }
        );
        let opts = RingOptions {
            cap: 300_000,
            ..Default::default()
        };
        assert_eq!(
            FiniteRing::parse_with("M3(Z4)", opts)
                .unwrap()
                .cardinality(),
            262_144
        );
    }

    #[test]
    fn nested_matrix_base() {
        let r = ring("M2(M2(Z2))");
        assert_eq!(r.cardinality(), 65_536);
        let x = r
            .parse_element("[[[[0,1],[0,0]],[[0,0],[0,0]]],[[[0,0],[0,0]],[[1,0],[0,1]]]]")
            .unwrap();
        assert_eq!(r.parse_element(&r.format_element(x)).unwrap(), x);
        assert_eq!(r.mul(r.one(), x), x);
    }
}
