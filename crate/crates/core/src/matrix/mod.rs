//! Exact rational matrices: the backend where generalized Zhou
//! invertibility genuinely fails for some elements.
//!
//! Over `M_k(ℚ)` the Jacobson radical is zero, so `√J = N` is the set of
//! nilpotent matrices. `A − A^(n+1)` is nilpotent iff every eigenvalue is
//! `0` or an `n`-th root of unity; a root of unity of order `m` can be an
//! eigenvalue of a rational `k × k` matrix only if `φ(m) ≤ k`, which makes
//! [`period_bound`] a conclusive search limit for `n`.

mod poly;
mod rational;

pub use poly::PolynomialExact;
pub use rational::{format_rational, height, mat_arith, rat, MatOp, RationalMatrix};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Smallest `m ≥ 1` with `A^m = 0`, if `A` is nilpotent.
pub fn is_nilpotent_matrix(a: &RationalMatrix) -> Option<u32> {
    let mut p = a.clone();
    for m in 1..=a.dim().max(1) as u32 {
        if p.is_zero() {
            return Some(m);
        }
        p = &p * a;
    }
    None
}

/// Monic annihilating polynomial of least degree.
///
/// Finds the first power `A^d` lying in the span of `I, A, …, A^(d−1)`; the
/// lower powers are linearly independent, so no proper divisor annihilates.
pub fn minimal_polynomial(a: &RationalMatrix) -> PolynomialExact {
    let k = a.dim();
    let mut powers = vec![RationalMatrix::identity(k)];
    loop {
        let next = &powers[powers.len() - 1] * a;
        if let Some(c) = solve_in_span(&powers, &next) {
            let d = powers.len();
            let mut coeffs: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(rat(1));
            debug_assert_eq!(coeffs.len(), d + 1);
            let m = PolynomialExact::new(coeffs);
            assert!(
                m.eval_matrix(a).is_zero(),
                "minimal polynomial must annihilate"
            );
            return m;
        }
        powers.push(next);
    }
}

/// Coefficients `c` with `Σ c_i basis_i = target`, if they exist.
fn solve_in_span(basis: &[RationalMatrix], target: &RationalMatrix) -> Option<Vec<BigRational>> {
    let cols = basis.len();
    let rows = target.entries().len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b.entries()[r].clone()).collect();
            row.push(target.entries()[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let lead = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= &lead;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= y * &f;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][cols].clone();
    }
    Some(sol)
}

fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `lcm{m ≥ 1 : φ(m) ≤ k}`.
pub fn period_bound(k: usize) -> u64 {
    assert!(k >= 1, "dimension must be positive");
    let k = k as u64;
    // φ(m) ≥ √(m/2), so every m with φ(m) ≤ k is at most 2k².
    (1..=2 * k * k + 2)
        .filter(|&m| euler_phi(m) <= k)
        .fold(1, |acc, m| acc.lcm(&m))
}

/// Smallest `n ∈ [1, bound]` with `A − A^(n+1)` nilpotent.
pub fn decide_gzhou_matrix_bounded(a: &RationalMatrix, bound: u64) -> Option<u64> {
    let mut next = a * a;
    for n in 1..=bound {
        if is_nilpotent_matrix(&(a - &next)).is_some() {
            return Some(n);
        }
        next = &next * a;
    }
    None
}

/// [`decide_gzhou_matrix_bounded`] at [`period_bound`]; `None` is conclusive.
pub fn decide_gzhou_matrix(a: &RationalMatrix) -> Option<u64> {
    decide_gzhou_matrix_bounded(a, period_bound(a.dim()))
}

/// Projection onto the generalized null space of `A`, along the invertible part.
///
/// With minimal polynomial `t^s·g(t)`, `g(0) ≠ 0`, and Bézout cofactors
/// `u·t^s + v·g = 1`, the projection is `v(A)·g(A)`. Checked: `e² = e`,
/// `eA = Ae`, `A + e` invertible.
pub fn spectral_idempotent_at_zero(a: &RationalMatrix) -> Result<RationalMatrix> {
    let k = a.dim();
    let m = minimal_polynomial(a);
    let s = m.zero_root_multiplicity();
    let e = if s == 0 {
        RationalMatrix::zero(k)
    } else {
        let ts = PolynomialExact::monomial(s);
        let (g, rem) = m.div_rem(&ts);
        debug_assert!(rem.is_zero());
        let (d, _u, v) = ts.ext_gcd(&g);
        if d != PolynomialExact::one() {
            return Err(Error::Falsified(format!("t^{s} and {g} are not coprime")));
        }
        v.mul(&g).eval_matrix(a)
    };
    if &e * &e != e {
        return Err(Error::Falsified(format!(
            "spectral idempotent {e} is not idempotent"
        )));
    }
    if &e * a != a * &e {
        return Err(Error::Falsified(format!(
            "spectral idempotent {e} does not commute with {a}"
        )));
    }
    if !(a + &e).is_invertible() {
        return Err(Error::Falsified(format!("A + e is singular for A = {a}")));
    }
    Ok(e)
}

/// Drazin inverse `(A + e)^(-1)·(I − e)`, with `e` the spectral idempotent at zero.
///
/// Checked: `x = xAx`, `Ax = xA`, `A − A²x` nilpotent.
pub fn drazin_matrix(a: &RationalMatrix) -> Result<RationalMatrix> {
    let k = a.dim();
    let e = spectral_idempotent_at_zero(a)?;
    let x = &(a + &e).inverse()? * &(&RationalMatrix::identity(k) - &e);
    let checks = [
        (&(&x * a) * &x == x, "x = xAx"),
        (a * &x == &x * a, "Ax = xA"),
        (
            is_nilpotent_matrix(&(a - &(&(a * a) * &x))).is_some(),
            "A - A^2 x nilpotent",
        ),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::Falsified(format!(
            "Drazin candidate for {a} fails {what}"
        )));
    }
    Ok(x)
}

/// A generalized Zhou inverse of a rational matrix with its smallest exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixCertificate {
    #[serde(serialize_with = "ser_display")]
    pub inverse: RationalMatrix,
    pub n: u64,
}

fn ser_display<S: serde::Serializer>(
    m: &RationalMatrix,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(m)
}

pub fn gzhou_matrix(a: &RationalMatrix) -> Result<Option<MatrixCertificate>> {
    gzhou_matrix_bounded(a, period_bound(a.dim()))
}

pub fn gzhou_matrix_bounded(a: &RationalMatrix, bound: u64) -> Result<Option<MatrixCertificate>> {
    let Some(n) = decide_gzhou_matrix_bounded(a, bound) else {
        return Ok(None);
    };
    let x = drazin_matrix(a)?;
    let residual = &a.pow(n) - &(a * &x);
    if is_nilpotent_matrix(&residual).is_none() {
        return Err(Error::Falsified(format!(
            "A^{n} - Ax is not nilpotent for A = {a}"
        )));
    }
    Ok(Some(MatrixCertificate { inverse: x, n }))
}

/// Smallest `n ≥ 1` with `A^n = A^(n+1)·X`; at most `k + 1` for a Drazin inverse `X`.
pub fn drazin_index(a: &RationalMatrix, x: &RationalMatrix) -> Option<u64> {
    let mut an = a.clone();
    for n in 1..=a.dim() as u64 + 1 {
        let next = &an * a;
        if an == &next * x {
            return Some(n);
        }
        an = next;
    }
    None
}

/// Replays every condition of a matrix certificate.
pub fn replay_matrix_certificate(
    a: &RationalMatrix,
    cert: &MatrixCertificate,
) -> Vec<(&'static str, bool)> {
    let x = &cert.inverse;
    let ax = a * x;
    vec![
        ("xAx = x", &ax * x == *x),
        ("Ax = xA", ax == x * a),
        ("n >= 1", cert.n >= 1),
        (
            "A^n - Ax nilpotent",
            is_nilpotent_matrix(&(&a.pow(cert.n) - &ax)).is_some(),
        ),
        ("(Ax)^2 = Ax", &ax * &ax == ax),
    ]
}

/// A seeded test matrix of dimension `k` with entries in `[-3, 3]`.
///
/// Draws alternate between uniformly random entries (almost never
/// invertible in the generalized Zhou sense), signed permutations (periodic,
/// so always invertible) and strictly upper triangular matrices (nilpotent).
pub fn sample_matrix<R: Rng>(rng: &mut R, k: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zero(k);
    match rng.random_range(0..3) {
        0 => {
            for i in 0..k {
                for j in 0..k {
                    m.set(i, j, rat(rng.random_range(-3..=3)));
                }
            }
        }
        1 => {
            let mut perm: Vec<usize> = (0..k).collect();
            for i in (1..k).rev() {
                perm.swap(i, rng.random_range(0..=i));
            }
            for (i, &j) in perm.iter().enumerate() {
                let v = [-1, 0, 1][rng.random_range(0..3)];
                m.set(i, j, rat(v));
            }
        }
        _ => {
            for i in 0..k {
                for j in i + 1..k {
                    m.set(i, j, rat(rng.random_range(-3..=3)));
                }
            }
        }
    }
    m
}
