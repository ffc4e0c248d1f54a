use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::syntax::{parse_literal, Literal};

/// A square matrix of exact rationals, row-major.
///
/// `BigRational` keeps every entry reduced with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    k: usize,
    entries: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Mul,
    Pow(u64),
    Inverse,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RationalMatrix {
    pub fn zero(k: usize) -> Self {
        RationalMatrix {
            k,
            entries: vec![BigRational::zero(); k * k],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zero(k);
        for i in 0..k {
            m.entries[i * k + i] = BigRational::one();
        }
        m
    }

    pub fn from_entries(k: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), k * k, "expected {k}x{k} entries");
        RationalMatrix { k, entries }
    }

    /// Integer matrix from rows; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), k, "matrix must be square");
            entries.extend(row.iter().map(|&v| rat(v)));
        }
        RationalMatrix { k, entries }
    }

    pub fn diag(values: &[i64]) -> Self {
        let mut m = Self::zero(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = rat(v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.k + j] = value;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.k)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalMatrix {
            k: self.k,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.k);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Gauss–Jordan inverse; the result is checked against `A·A⁻¹ = I`.
    pub fn inverse(&self) -> Result<Self> {
        let k = self.k;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(k).entries;
        for col in 0..k {
            let pivot = (col..k)
                .find(|&r| !a[r * k + col].is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..k {
                    a.swap(pivot * k + j, col * k + j);
                    inv.swap(pivot * k + j, col * k + j);
                }
            }
            let p = a[col * k + col].clone();
            for j in 0..k {
                a[col * k + j] /= &p;
                inv[col * k + j] /= &p;
            }
            for r in 0..k {
                if r == col || a[r * k + col].is_zero() {
                    continue;
                }
                let f = a[r * k + col].clone();
                for j in 0..k {
                    let (s, t) = (&a[col * k + j] * &f, &inv[col * k + j] * &f);
                    a[r * k + j] -= s;
                    inv[r * k + j] -= t;
                }
            }
        }
        let inv = RationalMatrix { k, entries: inv };
        if !(self * &inv).is_identity() {
            return Err(Error::Falsified(
                "Gauss-Jordan inverse fails A*inv(A) = I".into(),
            ));
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Parses `[[p/q,...],...]`; the `/q` part is optional.
    pub fn parse(text: &str) -> Result<Self> {
        let lit = parse_literal(text)?;
        let Literal::List {
            items: rows,
            offset,
        } = lit
        else {
            return Err(Error::syntax(
                lit.offset(),
                "expected a matrix '[[...],...]'",
            ));
        };
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for row in &rows {
            let Literal::List {
                items,
                offset: roff,
            } = row
            else {
                return Err(Error::syntax(row.offset(), "expected a row '[...]'"));
            };
            if items.len() != k {
                return Err(Error::syntax(
                    *roff,
                    format!("expected {k} entries (square matrix)"),
                ));
            }
            for cell in items {
                let Literal::Atom { text, offset } = cell else {
                    return Err(Error::syntax(cell.offset(), "expected a rational entry"));
                };
                entries.push(parse_rational(text, *offset)?);
            }
        }
        if k == 0 {
            return Err(Error::syntax(offset, "empty matrix"));
        }
        Ok(RationalMatrix { k, entries })
    }
}

fn parse_rational(text: &str, offset: usize) -> Result<BigRational> {
    let bad = || Error::syntax(offset, format!("invalid rational '{text}'"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::syntax(offset, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.k {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.k {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for RationalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.k, rhs.k, "dimension mismatch");
        RationalMatrix {
            k: self.k,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.k, rhs.k, "dimension mismatch");
        RationalMatrix {
            k: self.k,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            k: self.k,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.k, rhs.k, "dimension mismatch");
        let k = self.k;
        let mut out = RationalMatrix::zero(k);
        for i in 0..k {
            for t in 0..k {
                let a = &self.entries[i * k + t];
                if a.is_zero() {
                    continue;
                }
                for j in 0..k {
                    let b = &rhs.entries[t * k + j];
                    if !b.is_zero() {
                        out.entries[i * k + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Checked arithmetic entry point.
pub fn mat_arith(
    op: MatOp,
    a: &RationalMatrix,
    b: Option<&RationalMatrix>,
) -> Result<RationalMatrix> {
    let other = || {
        let b = b.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")))?;
        if b.k != a.k {
            return Err(Error::DimensionMismatch(a.k, b.k));
        }
        Ok(b)
    };
    match op {
        MatOp::Add => Ok(a + other()?),
        MatOp::Mul => Ok(a * other()?),
        MatOp::Pow(n) => Ok(a.pow(n)),
        MatOp::Inverse => a.inverse(),
    }
}

/// Largest absolute numerator or denominator, for sizing diagnostics.
pub fn height(m: &RationalMatrix) -> BigInt {
    m.entries
        .iter()
        .flat_map(|x| [x.numer().abs(), x.denom().clone()])
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_square_is_zero() {
        let n = RationalMatrix::from_ints(&[[0, 1], [0, 0]]);
        assert!(n.pow(2).is_zero());
    }

    #[test]
    fn rotation_inverse() {
        let r = RationalMatrix::from_ints(&[[0, -1], [1, 0]]);
        let inv = mat_arith(MatOp::Inverse, &r, None).unwrap();
        assert_eq!(inv, RationalMatrix::from_ints(&[[0, 1], [-1, 0]]));
        assert!((&r * &inv).is_identity());
    }

    #[test]
    fn identity_power() {
        assert!(RationalMatrix::identity(3).pow(100).is_identity());
    }

    #[test]
    fn singular_and_mismatch_errors() {
        let s = RationalMatrix::from_ints(&[[1, 2], [2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        let i3 = RationalMatrix::identity(3);
        assert_eq!(
            mat_arith(MatOp::Add, &s, Some(&i3)),
            Err(Error::DimensionMismatch(2, 3))
        );
        assert!(mat_arith(MatOp::Mul, &s, None).is_err());
    }

    #[test]
    fn literal_round_trip_and_normalization() {
        let m = RationalMatrix::parse("[[2/4, -3], [0, 6/-1]]");
        assert!(m.is_err(), "denominator must be unsigned digits");
        let m = RationalMatrix::parse("[[2/4, -3], [0, +7/21]]").unwrap();
        assert_eq!(m.to_string(), "[[1/2,-3],[0,1/3]]");
        assert_eq!(RationalMatrix::parse(&m.to_string()).unwrap(), m);
        assert!(matches!(
            RationalMatrix::parse("[[1,2],[3]]"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            RationalMatrix::parse("[[1/0]]"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            RationalMatrix::parse("5"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let m = RationalMatrix::parse("[[1/2,1],[3,-2/3]]").unwrap();
        let inv = m.inverse().unwrap();
        assert!((&inv * &m).is_identity());
    }
}
