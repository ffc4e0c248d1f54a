//! Drazin, p-Drazin, Zhou and generalized Zhou inverses over finite rings.
//!
//! Every inverse comes back as an [`InverseCertificate`] carrying the
//! inverse `b`, the exponent `n`, the idempotent `p = ab` and the residual
//! `w` together with its nilpotency and `√J` exponents, so that
//! [`verify_certificate`] can replay every defining condition with ring
//! arithmetic alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{map_indices, Execution};
use crate::ring::{Element, FiniteRing};
use crate::structure::{
    in_jacobson, in_sqrt_jacobson, is_unit, nilpotency_index, unit_inverse, Commutant, Radical,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InverseKind {
    Drazin,
    #[serde(rename = "pdrazin")]
    PDrazin,
    Zhou,
    #[serde(rename = "gzhou")]
    GZhou,
}

impl InverseKind {
    pub const ALL: [InverseKind; 4] = [
        InverseKind::Drazin,
        InverseKind::PDrazin,
        InverseKind::Zhou,
        InverseKind::GZhou,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseKind::Drazin => "drazin",
            InverseKind::PDrazin => "pdrazin",
            InverseKind::Zhou => "zhou",
            InverseKind::GZhou => "gzhou",
        }
    }

    /// Human-readable defining residual condition.
    pub fn residual_condition(self) -> &'static str {
        match self {
            InverseKind::Drazin => "a^n = a^(n+1)b",
            InverseKind::PDrazin => "a - a^2 b ∈ √J(R)",
            InverseKind::Zhou => "a^n - ab ∈ N(R)",
            InverseKind::GZhou => "a^n - ab ∈ √J(R)",
        }
    }
}

impl fmt::Display for InverseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InverseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InverseKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown inverse kind '{s}'")))
    }
}

/// Exponents certifying that the residual `w` is small.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessExponents {
    /// Smallest `m` with `w^m = 0`.
    pub nilpotent: Option<u32>,
    /// Smallest `m` with `w^m ∈ J(R)`.
    #[serde(rename = "sqrtJ")]
    pub sqrt_j: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InverseCertificate {
    pub kind: InverseKind,
    pub a: Element,
    pub b: Element,
    /// The exponent of the residual condition; `None` for p-Drazin, which has none.
    pub n: Option<u32>,
    /// `p = ab`.
    pub p: Element,
    /// The residual: `a^n - a^(n+1)b` (Drazin), `a - a²b` (p-Drazin), `a^n - ab` (Zhou kinds).
    pub w: Element,
    pub witness: WitnessExponents,
}

impl InverseCertificate {
    /// Builds a certificate for a candidate `b`; nothing is checked here.
    pub fn assemble(
        r: &FiniteRing,
        kind: InverseKind,
        a: Element,
        b: Element,
        n: Option<u32>,
    ) -> Self {
        let p = r.mul(a, b);
        let w = residual(r, kind, a, b, n.unwrap_or(1));
        InverseCertificate {
            kind,
            a,
            b,
            n,
            p,
            w,
            witness: WitnessExponents {
                nilpotent: nilpotency_index(r, w),
                sqrt_j: in_sqrt_jacobson(r, w),
            },
        }
    }

    /// The complementary idempotent `e = 1 - p`.
    pub fn e(&self, r: &FiniteRing) -> Element {
        r.sub(r.one(), self.p)
    }

    pub fn to_report(&self, r: &FiniteRing) -> CertificateReport {
        let v = verify_certificate(r, self);
        CertificateReport {
            kind: self.kind,
            a: r.format_element(self.a),
            b: r.format_element(self.b),
            n: self.n,
            p: r.format_element(self.p),
            e: r.format_element(self.e(r)),
            w: r.format_element(self.w),
            witness_exponents: self.witness,
            checks: v
                .checks
                .iter()
                .map(|c| (c.name.to_string(), c.passed))
                .collect(),
        }
    }
}

/// Serializable view of a certificate.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub kind: InverseKind,
    pub a: String,
    pub b: String,
    pub n: Option<u32>,
    pub p: String,
    pub e: String,
    pub w: String,
    pub witness_exponents: WitnessExponents,
    pub checks: std::collections::BTreeMap<String, bool>,
}

fn residual(r: &FiniteRing, kind: InverseKind, a: Element, b: Element, n: u32) -> Element {
    let an = r.pow(a, n as u64);
    match kind {
        InverseKind::Drazin => r.sub(an, r.mul(r.mul(an, a), b)),
        InverseKind::PDrazin => r.sub(a, r.mul(r.mul(a, a), b)),
        InverseKind::Zhou | InverseKind::GZhou => r.sub(an, r.mul(a, b)),
    }
}

fn residual_holds(r: &FiniteRing, kind: InverseKind, w: Element) -> bool {
    match kind {
        InverseKind::Drazin => w == r.zero(),
        InverseKind::PDrazin | InverseKind::GZhou => in_sqrt_jacobson(r, w).is_some(),
        InverseKind::Zhou => nilpotency_index(r, w).is_some(),
    }
}

/// Every `b` satisfying the definition of `kind`, each with its smallest `n ∈ [1, bound]`.
///
/// Candidates range over `comm(a)` for Drazin and `comm²(a)` otherwise.
pub fn inverse_candidates(
    r: &FiniteRing,
    a: Element,
    kind: InverseKind,
    bound: u32,
) -> Vec<(Element, Option<u32>)> {
    let comm = Commutant::of(r, a);
    let pool = match kind {
        InverseKind::Drazin => comm.comm(),
        _ => comm.comm2(),
    };
    let mut found = Vec::new();
    for &b in pool {
        if r.mul(r.mul(b, a), b) != b || r.mul(a, b) != r.mul(b, a) {
            continue;
        }
        if kind == InverseKind::PDrazin {
            if residual_holds(r, kind, residual(r, kind, a, b, 1)) {
                found.push((b, None));
            }
            continue;
        }
        if let Some(n) = (1..=bound).find(|&n| residual_holds(r, kind, residual(r, kind, a, b, n)))
        {
            found.push((b, Some(n)));
        }
    }
    found
}

/// Definitional search over all candidates with `n ∈ [1, k+l]`.
///
/// More than one solution is a [`Error::UniquenessViolation`].
pub fn inverse_bruteforce(
    r: &FiniteRing,
    a: Element,
    kind: InverseKind,
) -> Result<Option<InverseCertificate>> {
    let bound = r.power_orbit(a).search_bound();
    inverse_bruteforce_bounded(r, a, kind, bound)
}

pub fn inverse_bruteforce_bounded(
    r: &FiniteRing,
    a: Element,
    kind: InverseKind,
    bound: u32,
) -> Result<Option<InverseCertificate>> {
    let found = inverse_candidates(r, a, kind, bound);
    match found.as_slice() {
        [] => Ok(None),
        [(b, n)] => Ok(Some(InverseCertificate::assemble(r, kind, a, *b, *n))),
        many => Err(Error::UniquenessViolation {
            a: r.format_element(a),
            candidates: many.iter().map(|(b, _)| r.format_element(*b)).collect(),
        }),
    }
}

/// Certificate for a given candidate `b` with the smallest `n ∈ [1, k+l]`, if `b` qualifies.
pub fn certify(
    r: &FiniteRing,
    kind: InverseKind,
    a: Element,
    b: Element,
) -> Option<InverseCertificate> {
    let n = match kind {
        InverseKind::PDrazin => None,
        _ => {
            let bound = r.power_orbit(a).search_bound();
            Some((1..=bound).find(|&n| residual_holds(r, kind, residual(r, kind, a, b, n)))?)
        }
    };
    let cert = InverseCertificate::assemble(r, kind, a, b, n);
    verify_certificate(r, &cert).ok.then_some(cert)
}

/// The constructive generalized Zhou inverse.
///
/// `p = a^m` with `m` the least multiple of the period that reaches the
/// index; then `n = m` and the inverse is `a^(n-1)·(a^n + 1 - p)^(-1)·p`.
pub fn gzhou_constructive(r: &FiniteRing, a: Element) -> Result<InverseCertificate> {
    let orbit = r.power_orbit(a);
    let m = orbit.idempotent_exponent();
    let p = orbit.power(m as u64);
    let an = p;
    let u = r.sub(r.add(an, r.one()), p);
    let core = r.mul(unit_inverse(r, u)?, p);
    let b = r.mul(r.pow(a, m as u64 - 1), core);
    let cert = InverseCertificate::assemble(r, InverseKind::GZhou, a, b, Some(m));
    let v = verify_certificate(r, &cert);
    if !v.ok || cert.p != p {
        return Err(Error::Falsified(format!(
            "constructive inverse of {} fails: {:?}",
            r.format_element(a),
            v.failures()
        )));
    }
    Ok(cert)
}

/// Smallest `n ∈ [1, k+l]` with `a - a^(n+1)` in the chosen set.
pub fn characterization_n(r: &FiniteRing, a: Element, radical: Radical) -> Option<u32> {
    let orbit = r.power_orbit(a);
    (1..=orbit.search_bound()).find(|&n| radical.contains(r, r.sub(a, orbit.power(n as u64 + 1))))
}

/// Which factor the binomial partial sum uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BinomialFactor {
    /// `(1 - a^n)^i`, the factor forced by expanding `(a^n + (1 - a^n))^(2m)`.
    Corrected,
    /// `(a - a^n)^i`, as literally printed.
    Literal,
}

/// `c·1` for an integer `c`, by double-and-add.
pub(crate) fn integer_multiple(r: &FiniteRing, mut c: u64, x: Element) -> Element {
    let mut acc = r.zero();
    let mut base = x;
    while c > 0 {
        if c & 1 == 1 {
            acc = r.add(acc, base);
        }
        base = r.add(base, base);
        c >>= 1;
    }
    acc
}

/// Additive order of one.
pub fn characteristic(r: &FiniteRing) -> u64 {
    let mut x = r.one();
    let mut c = 1;
    while x != r.zero() {
        x = r.add(x, r.one());
        c += 1;
    }
    c
}

/// Row `top` of Pascal's triangle, reduced mod `ch`.
pub(crate) fn pascal_row(ch: u64, top: usize) -> Vec<u64> {
    let mut row = vec![1 % ch; 1];
    for _ in 0..top {
        let mut next = vec![1 % ch; row.len() + 1];
        for i in 1..row.len() {
            next[i] = (row[i - 1] + row[i]) % ch;
        }
        row = next;
    }
    row
}

/// `Σ_{i=0}^{m} C(2m, i)·(a^n)^(2m-i)·f^i` with `f` chosen by `factor`.
pub fn binomial_partial_sum(
    r: &FiniteRing,
    a: Element,
    n: u32,
    m: u32,
    factor: BinomialFactor,
) -> Element {
    let ch = characteristic(r);
    let an = r.pow(a, n as u64);
    let f = match factor {
        BinomialFactor::Corrected => r.sub(r.one(), an),
        BinomialFactor::Literal => r.sub(a, an),
    };
    let top = 2 * m as usize;
    let row = pascal_row(ch, top);
    (0..=m as usize).fold(r.zero(), |acc, i| {
        let term = r.mul(r.pow(an, (top - i) as u64), r.pow(f, i as u64));
        r.add(acc, integer_multiple(r, row[i], term))
    })
}

/// Lifts `e` with `e² - e ∈ J(R)` to an idempotent by `e ← 3e² - 2e³`.
pub fn lift_idempotent(r: &FiniteRing, e: Element) -> Result<Element> {
    let mut x = e;
    for _ in 0..64 {
        let x2 = r.mul(x, x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = r.mul(x2, x);
        let three = integer_multiple(r, 3, x2);
        let two = integer_multiple(r, 2, x3);
        x = r.sub(three, two);
    }
    Err(Error::Falsified(format!(
        "idempotent lifting from {} did not converge",
        r.format_element(e)
    )))
}

/// Full transcript of the binomial lifting route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialLift {
    pub n: u32,
    /// Smallest `m` with `(a - a^(n+1))^m ∈ J(R)`.
    pub m: u32,
    pub e: Element,
    pub f: Element,
    /// Whether the literally printed factor also gives `e² - e ∈ J(R)`.
    pub literal_factor_ok: bool,
}

pub fn binomial_lift(r: &FiniteRing, a: Element) -> Result<BinomialLift> {
    let n = characterization_n(r, a, Radical::SqrtJ).ok_or_else(|| {
        Error::Precondition(format!(
            "a - a^(n+1) ∉ √J(R) for a = {}",
            r.format_element(a)
        ))
    })?;
    let x = r.sub(a, r.pow(a, n as u64 + 1));
    let m = in_sqrt_jacobson(r, x).expect("characterization_n checked membership");
    let almost = |e: Element| in_jacobson(r, r.sub(r.mul(e, e), e));
    let e = binomial_partial_sum(r, a, n, m, BinomialFactor::Corrected);
    if !almost(e) {
        return Err(Error::Falsified(format!(
            "e² - e ∉ J(R) for the binomial sum at a = {}",
            r.format_element(a)
        )));
    }
    let f = lift_idempotent(r, e)?;
    if !in_jacobson(r, r.sub(f, e)) {
        return Err(Error::Falsified(
            "lifted idempotent is not congruent to e mod J(R)".into(),
        ));
    }
    let literal = binomial_partial_sum(r, a, n, m, BinomialFactor::Literal);
    Ok(BinomialLift {
        n,
        m,
        e,
        f,
        literal_factor_ok: almost(literal),
    })
}

/// The idempotent reached by the binomial route.
pub fn lift_idempotent_binomial(r: &FiniteRing, a: Element) -> Result<Element> {
    binomial_lift(r, a).map(|l| l.f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub failure: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.failure)
            .collect()
    }
}

/// Replays every condition a certificate claims.
pub fn verify_certificate(r: &FiniteRing, cert: &InverseCertificate) -> Verification {
    let (a, b) = (cert.a, cert.b);
    let comm = Commutant::of(r, a);
    let ab = r.mul(a, b);
    let needs_n = cert.kind != InverseKind::PDrazin;
    let n = cert.n.unwrap_or(1);
    let w = residual(r, cert.kind, a, b, n);
    let mut checks = vec![
        ("bab = b", "bab ≠ b", r.mul(r.mul(b, a), b) == b),
        ("ab = ba", "ab ≠ ba", ab == r.mul(b, a)),
        ("b ∈ comm(a)", "b ∉ comm(a)", comm.in_comm(b)),
        ("b ∈ comm²(a)", "b ∉ comm²(a)", comm.in_comm2(b)),
        ("p = ab", "p ≠ ab", cert.p == ab),
        ("p² = p", "p² ≠ p", r.mul(cert.p, cert.p) == cert.p),
        (
            "n ≥ 1",
            "n missing or zero",
            !needs_n || cert.n.is_some_and(|n| n >= 1),
        ),
        ("w = residual", "w does not match the residual", cert.w == w),
    ];
    let residual_ok = residual_holds(r, cert.kind, w);
    checks.push(match cert.kind {
        InverseKind::Drazin => ("a^n = a^(n+1)b", "a^n ≠ a^(n+1)b", residual_ok),
        InverseKind::PDrazin => ("a - a²b ∈ √J(R)", "a - a²b ∉ √J(R)", residual_ok),
        InverseKind::Zhou => ("a^n - ab ∈ N(R)", "a^n - ab ∉ N(R)", residual_ok),
        InverseKind::GZhou => ("a^n - ab ∈ √J(R)", "a^n - ab ∉ √J(R)", residual_ok),
    });
    let witness_ok = cert.witness.nilpotent == nilpotency_index(r, cert.w)
        && cert.witness.sqrt_j == in_sqrt_jacobson(r, cert.w);
    checks.push((
        "witness exponents",
        "witness exponents do not match w",
        witness_ok,
    ));
    let checks: Vec<Check> = checks
        .into_iter()
        .map(|(name, failure, passed)| Check {
            name,
            failure,
            passed,
        })
        .collect();
    Verification {
        ok: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Generalized Zhou inverse of every element, by construction.
#[derive(Debug, Clone)]
pub struct InverseTable {
    inverse: Vec<u32>,
}

impl InverseTable {
    pub fn build(r: &FiniteRing, exec: Execution) -> Result<InverseTable> {
        let inverse = map_indices(exec, r.cardinality(), |i| {
            gzhou_constructive(r, r.element(i as u32)).map(|c| c.b.code())
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        Ok(InverseTable { inverse })
    }

    pub fn get(&self, r: &FiniteRing, a: Element) -> Element {
        r.element(self.inverse[a.index()])
    }
}

/// One row of `classify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub a: String,
    pub drazin: Option<String>,
    pub pdrazin: Option<String>,
    pub zhou: Option<String>,
    pub gzhou: Option<String>,
    /// Generalized Zhou inverse by construction.
    pub constructive: String,
    /// Smallest exponent of the generalized Zhou certificate.
    pub n: Option<u32>,
    pub p: Option<String>,
    pub unit: bool,
    pub nilpotent: bool,
    #[serde(rename = "J")]
    pub in_j: bool,
    #[serde(rename = "sqrtJ")]
    pub in_sqrt_j: bool,
    pub idempotent: bool,
}

/// Every inverse of every element, plus membership flags.
pub fn classify(r: &FiniteRing, exec: Execution) -> Result<Vec<ClassRow>> {
    map_indices(exec, r.cardinality(), |i| {
        let a = r.element(i as u32);
        let mut inv: [Option<InverseCertificate>; 4] = [None; 4];
        for (slot, kind) in inv.iter_mut().zip(InverseKind::ALL) {
            *slot = inverse_bruteforce(r, a, kind)?;
        }
        let fmt = |c: &Option<InverseCertificate>| c.map(|c| r.format_element(c.b));
        let constructive = gzhou_constructive(r, a)?;
        Ok(ClassRow {
            a: r.format_element(a),
            drazin: fmt(&inv[0]),
            pdrazin: fmt(&inv[1]),
            zhou: fmt(&inv[2]),
            gzhou: fmt(&inv[3]),
            constructive: r.format_element(constructive.b),
            n: inv[3].and_then(|c| c.n),
            p: inv[3].map(|c| r.format_element(c.p)),
            unit: is_unit(r, a),
            nilpotent: nilpotency_index(r, a).is_some(),
            in_j: in_jacobson(r, a),
            in_sqrt_j: in_sqrt_jacobson(r, a).is_some(),
            idempotent: r.mul(a, a) == a,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        FiniteRing::parse(s).unwrap()
    }

    #[test]
    fn z5_gzhou_is_a_cubed() {
        let r = ring("Z5");
        let a = r.element(2);
        let c = inverse_bruteforce(&r, a, InverseKind::GZhou)
            .unwrap()
            .unwrap();
        assert_eq!(c.b, r.element(3));
        assert_eq!(c.n, Some(4));
        assert_eq!(c.p, r.one());
        assert_eq!(c.w, r.zero());
        for a in r.elements() {
            let c = inverse_bruteforce(&r, a, InverseKind::GZhou)
                .unwrap()
                .unwrap();
            assert_eq!(c.b, r.pow(a, 3));
        }
    }

    #[test]
    fn small_bruteforce_examples() {
        let z4 = ring("Z4");
        let c = inverse_bruteforce(&z4, z4.element(2), InverseKind::Zhou)
            .unwrap()
            .unwrap();
        // 2 is itself nilpotent, so the smallest exponent is already 1
        assert_eq!((c.b, c.n), (z4.zero(), Some(1)));
        let w2 =
            InverseCertificate::assemble(&z4, InverseKind::Zhou, z4.element(2), z4.zero(), Some(2));
        assert_eq!(w2.w, z4.zero());
        assert!(verify_certificate(&z4, &w2).ok);

        let z6 = ring("Z6");
        let c = inverse_bruteforce(&z6, z6.element(2), InverseKind::GZhou)
            .unwrap()
            .unwrap();
        assert_eq!(
            (c.b, c.n, c.p, c.w),
            (z6.element(2), Some(2), z6.element(4), z6.zero())
        );

        for s in ["Z1", "Z7", "M2(Z2)", "T2(Z2)"] {
            let r = ring(s);
            for kind in InverseKind::ALL {
                let c = inverse_bruteforce(&r, r.one(), kind).unwrap().unwrap();
                assert_eq!(c.b, r.one(), "{s} {kind}");
                if kind != InverseKind::PDrazin {
                    assert_eq!(c.n, Some(1));
                }
            }
        }
    }

    #[test]
    fn constructive_examples() {
        let z5 = ring("Z5");
        let c = gzhou_constructive(&z5, z5.element(2)).unwrap();
        assert_eq!((c.b, c.n, c.p), (z5.element(3), Some(4), z5.one()));
        let z4 = ring("Z4");
        let c = gzhou_constructive(&z4, z4.element(2)).unwrap();
        assert_eq!((c.b, c.n, c.p), (z4.zero(), Some(2), z4.zero()));
        let z9 = ring("Z9");
        let c = gzhou_constructive(&z9, z9.zero()).unwrap();
        assert_eq!((c.b, c.p), (z9.zero(), z9.zero()));
    }

    #[test]
    fn characterization_examples() {
        let z5 = ring("Z5");
        assert_eq!(
            characterization_n(&z5, z5.element(2), Radical::Nil),
            Some(4)
        );
        let z6 = ring("Z6");
        assert_eq!(
            characterization_n(&z6, z6.element(2), Radical::Nil),
            Some(2)
        );
        assert_eq!(characterization_n(&z6, z6.one(), Radical::SqrtJ), Some(1));
    }

    #[test]
    fn binomial_lift_examples() {
        let z5 = ring("Z5");
        assert_eq!(
            lift_idempotent_binomial(&z5, z5.element(2)).unwrap(),
            z5.one()
        );
        let z4 = ring("Z4");
        assert_eq!(
            lift_idempotent_binomial(&z4, z4.element(2)).unwrap(),
            z4.zero()
        );
        let m = ring("M2(Z2)");
        let e = m.parse_element("[[1,1],[0,0]]").unwrap();
        assert_eq!(lift_idempotent_binomial(&m, e).unwrap(), e);
    }

    #[test]
    fn lifting_converges_from_near_idempotents() {
        // Z8: 5 is 1 + 4 with 4 ∈ J; 5² - 5 = 20 ≡ 4 ∈ J
        let z8 = ring("Z8");
        assert_eq!(lift_idempotent(&z8, z8.element(5)).unwrap(), z8.one());
        assert_eq!(lift_idempotent(&z8, z8.element(4)).unwrap(), z8.zero());
    }

    #[test]
    fn tampered_certificate_fails() {
        let r = ring("Z5");
        let mut c = inverse_bruteforce(&r, r.element(2), InverseKind::GZhou)
            .unwrap()
            .unwrap();
        assert!(verify_certificate(&r, &c).ok);
        c.b = r.add(c.b, r.one());
        let v = verify_certificate(&r, &c);
        assert!(!v.ok);
        assert!(v.failures().contains(&"bab ≠ b"));
    }

    #[test]
    fn trivial_ring_certificates() {
        let r = ring("Z1");
        for kind in InverseKind::ALL {
            let c = inverse_bruteforce(&r, r.zero(), kind).unwrap().unwrap();
            assert_eq!(c.b, r.zero());
            assert!(verify_certificate(&r, &c).ok);
        }
        assert!(verify_certificate(&r, &gzhou_constructive(&r, r.zero()).unwrap()).ok);
    }

    #[test]
    fn kinds_parse_and_print() {
        for k in InverseKind::ALL {
            assert_eq!(k.name().parse::<InverseKind>().unwrap(), k);
        }
        assert!("moore-penrose".parse::<InverseKind>().is_err());
    }

    #[test]
    fn classify_z4() {
        let r = ring("Z4");
        let rows = classify(&r, Execution::Sequential).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[2].gzhou.as_deref(), Some("0"));
        assert!(rows[2].nilpotent);
        let trivial = classify(&ring("Z1"), Execution::Sequential).unwrap();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].gzhou.as_deref(), Some("0"));
    }

    #[test]
    fn smallest_n_is_deterministic() {
        let r = ring("T2(Z3)");
        for a in r.elements() {
            let x = inverse_bruteforce(&r, a, InverseKind::GZhou).unwrap();
            let y = inverse_bruteforce(&r, a, InverseKind::GZhou).unwrap();
            assert_eq!(x, y);
        }
    }
}
