use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rational::{format_rational, rat, RationalMatrix};

/// Dense polynomial over ℚ, coefficients from the constant term up, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolynomialExact {
    coeffs: Vec<BigRational>,
}

impl PolynomialExact {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialExact { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        PolynomialExact { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `t^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = BigRational::one();
        PolynomialExact { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
        }
    }

    /// Multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Extended Euclid: `(g, u, v)` with `u·self + v·other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match r0.leading().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = BigRational::one() / l;
                let c = PolynomialExact::new(vec![inv]);
                (r0.mul(&c), s0.mul(&c), t0.mul(&c))
            }
        }
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, a: &RationalMatrix) -> RationalMatrix {
        let k = a.dim();
        let mut acc = RationalMatrix::zero(k);
        let id = RationalMatrix::identity(k);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &id.scale(c);
        }
        acc
    }
}

impl std::fmt::Display for PolynomialExact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = format_rational(c);
            match i {
                0 => write!(f, "{cs}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{cs}*t")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{cs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn division_identity() {
        let a = PolynomialExact::from_ints(&[-1, 0, 0, 1]); // t^3 - 1
        let b = PolynomialExact::from_ints(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, PolynomialExact::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn bezout_for_coprime_pair() {
        let ts = PolynomialExact::monomial(2);
        let g = PolynomialExact::from_ints(&[-3, 1]);
        let (d, u, v) = ts.ext_gcd(&g);
        assert_eq!(d, PolynomialExact::one());
        assert_eq!(u.mul(&ts).add(&v.mul(&g)), PolynomialExact::one());
    }

    #[test]
    fn display() {
        assert_eq!(
            PolynomialExact::from_ints(&[1, 0, 1]).to_string(),
            "t^2 + 1"
        );
        assert_eq!(PolynomialExact::from_ints(&[-1, 1]).to_string(), "t + -1");
    }

    proptest! {
        #[test]
        fn ext_gcd_is_a_bezout_identity(
            a in prop::collection::vec(-5i64..5, 1..5),
            b in prop::collection::vec(-5i64..5, 1..5),
        ) {
            let (a, b) = (PolynomialExact::from_ints(&a), PolynomialExact::from_ints(&b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (g, u, v) = a.ext_gcd(&b);
            prop_assert_eq!(u.mul(&a).add(&v.mul(&b)), g.clone());
            prop_assert!(a.div_rem(&g).1.is_zero());
            prop_assert!(b.div_rem(&g).1.is_zero());
        }

        #[test]
        fn div_rem_reconstructs(
            a in prop::collection::vec(-5i64..5, 0..6),
            b in prop::collection::vec(-5i64..5, 1..4),
        ) {
            let (a, b) = (PolynomialExact::from_ints(&a), PolynomialExact::from_ints(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }
    }
}
