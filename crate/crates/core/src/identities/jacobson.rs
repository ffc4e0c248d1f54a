//! Jacobson's lemma: `1 - ac` invertible in the generalized Zhou sense
//! implies `1 - bd` is.
//!
//! The checked identity is
//! `(1 - bd)(1 - bd)^z = 1 - b·α^π·(1 - α^π·α)^(-1)·d` with `α = 1 - ac` and
//! `α^π = 1 - α·α^z`. The closed formula printed for `(1 - bd)^z` is
//! ambiguous, so several readings are evaluated against the true inverse
//! and the agreement counts go into the report notes.

use serde::Serialize;

use crate::error::Result;
use crate::inverses::{certify, InverseKind};
use crate::ring::Element;
use crate::structure::unit_inverse;

use super::{
    cline_quadruples, ensure, ClineQuadruple, Mode, SweepContext, SweepReport, Theorem,
    POWER_EXPONENTS,
};

/// Candidate readings of the printed closed formula for `(1 - bd)^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum JacobsonReading {
    /// `1 + b[1 - α^z - α^π(1 - α^π α)^(-1)]d`
    LiteralAlphaPi,
    /// `1 + b[1 - α^z - (1+ac)^π(1 - α^π α)^(-1)]d`
    LiteralOnePlusAcPi,
    /// `1 + b[1 - α^z - (1+ac)^π((1 - α^π)α)^(-1)]d`
    LiteralNestedInverse,
    /// `1 + b[α^z - α^π(1 - α^π α)^(-1)]d`
    SignCorrected,
    /// `1 + b[α^z - (1+ac)^π(1 - α^π α)^(-1)]d`
    SignCorrectedOnePlusAcPi,
    /// `1 + b·α^z·d`
    Plain,
}

impl JacobsonReading {
    pub const ALL: [JacobsonReading; 6] = [
        JacobsonReading::LiteralAlphaPi,
        JacobsonReading::LiteralOnePlusAcPi,
        JacobsonReading::LiteralNestedInverse,
        JacobsonReading::SignCorrected,
        JacobsonReading::SignCorrectedOnePlusAcPi,
        JacobsonReading::Plain,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            JacobsonReading::LiteralAlphaPi => "1 + b[1 - α^z - α^π(1 - α^π α)^-1]d",
            JacobsonReading::LiteralOnePlusAcPi => "1 + b[1 - α^z - (1+ac)^π(1 - α^π α)^-1]d",
            JacobsonReading::LiteralNestedInverse => "1 + b[1 - α^z - (1+ac)^π((1 - α^π)α)^-1]d",
            JacobsonReading::SignCorrected => "1 + b[α^z - α^π(1 - α^π α)^-1]d",
            JacobsonReading::SignCorrectedOnePlusAcPi => "1 + b[α^z - (1+ac)^π(1 - α^π α)^-1]d",
            JacobsonReading::Plain => "1 + b α^z d",
        }
    }
}

/// Per-quadruple evaluation of every reading: `Some(true)` when it equals
/// `(1 - bd)^z`, `None` when it needs the inverse of a non-unit.
pub fn jacobson_readings(
    ctx: &SweepContext<'_>,
    q: &ClineQuadruple,
) -> Vec<(JacobsonReading, Option<bool>)> {
    let r = ctx.ring;
    let one = r.one();
    let ac = r.mul(q.a, q.c);
    let alpha = r.sub(one, ac);
    let az = ctx.gz(alpha);
    let api = r.sub(one, r.mul(alpha, az));
    let gamma = r.add(one, ac);
    let gpi = r.sub(one, r.mul(gamma, ctx.gz(gamma)));
    let u_inv = unit_inverse(r, r.sub(one, r.mul(api, alpha))).ok();
    let w_inv = unit_inverse(r, r.mul(r.sub(one, api), alpha)).ok();
    let target = ctx.gz(r.sub(one, r.mul(q.b, q.d)));
    let wrap = |inner: Element| r.add(one, r.product(&[q.b, inner, q.d]));
    JacobsonReading::ALL
        .into_iter()
        .map(|reading| {
            let value = match reading {
                JacobsonReading::LiteralAlphaPi => {
                    u_inv.map(|ui| wrap(r.sub(r.sub(one, az), r.mul(api, ui))))
                }
                JacobsonReading::LiteralOnePlusAcPi => {
                    u_inv.map(|ui| wrap(r.sub(r.sub(one, az), r.mul(gpi, ui))))
                }
                JacobsonReading::LiteralNestedInverse => {
                    w_inv.map(|wi| wrap(r.sub(r.sub(one, az), r.mul(gpi, wi))))
                }
                JacobsonReading::SignCorrected => u_inv.map(|ui| wrap(r.sub(az, r.mul(api, ui)))),
                JacobsonReading::SignCorrectedOnePlusAcPi => {
                    u_inv.map(|ui| wrap(r.sub(az, r.mul(gpi, ui))))
                }
                JacobsonReading::Plain => Some(wrap(az)),
            };
            (reading, value.map(|v| v == target))
        })
        .collect()
}

pub fn verify_jacobson(
    ctx: &SweepContext<'_>,
    q: &ClineQuadruple,
) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let one = r.one();
    let tag = || q.describe(r);
    ensure(q.holds(r), || format!("hypothesis fails: {}", tag()))?;
    let alpha = r.sub(one, r.mul(q.a, q.c));
    let beta = r.sub(one, r.mul(q.b, q.d));
    let az = ctx.gz(alpha);
    let bz = ctx.gz(beta);
    ensure(certify(r, InverseKind::GZhou, alpha, az).is_some(), || {
        format!("1-ac lacks an inverse; {}", tag())
    })?;
    ensure(certify(r, InverseKind::GZhou, beta, bz).is_some(), || {
        format!("1-bd lacks an inverse; {}", tag())
    })?;
    let api = r.sub(one, r.mul(alpha, az));
    let u = r.sub(one, r.mul(api, alpha));
    let u_inv = unit_inverse(r, u)
        .map_err(|_| format!("1 - α^π α = {} is not a unit; {}", ctx.fmt(u), tag()))?;
    let lhs = r.mul(beta, bz);
    let rhs = r.sub(one, r.product(&[q.b, api, u_inv, q.d]));
    ensure(lhs == rhs, || {
        format!(
            "(1-bd)(1-bd)^z = {} but 1 - bα^π(1-α^πα)^-1 d = {}; {}",
            ctx.fmt(lhs),
            ctx.fmt(rhs),
            tag()
        )
    })
}

/// `(1-ab)^k` and `(1-ba)^k` are both invertible; replays
/// `b(1-ab)^m = (1-ba)^m b` for `m ≤ k`, the rewriting
/// `(1-ab)^k = 1 - a·S·b` with `S = Σ_{i<k} (1-ba)^i`, and the proof
/// identity on the quadruple `(a, Sb, Sb, a)`.
pub fn verify_jacobson_power(
    ctx: &SweepContext<'_>,
    a: Element,
    b: Element,
    k: u32,
) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let one = r.one();
    let tag = || format!("a={}, b={}, k={k}", ctx.fmt(a), ctx.fmt(b));
    let one_ab = r.sub(one, r.mul(a, b));
    let one_ba = r.sub(one, r.mul(b, a));
    let lhs = r.pow(one_ab, k as u64);
    let rhs = r.pow(one_ba, k as u64);
    ensure(
        certify(r, InverseKind::GZhou, lhs, ctx.gz(lhs)).is_some(),
        || format!("(1-ab)^k lacks an inverse; {}", tag()),
    )?;
    ensure(
        certify(r, InverseKind::GZhou, rhs, ctx.gz(rhs)).is_some(),
        || format!("(1-ba)^k lacks an inverse; {}", tag()),
    )?;
    for m in 1..=k as u64 {
        let left = r.mul(b, r.pow(one_ab, m));
        let right = r.mul(r.pow(one_ba, m), b);
        ensure(left == right, || {
            format!("b(1-ab)^{m} ≠ (1-ba)^{m} b; {}", tag())
        })?;
    }
    let s = (0..k as u64).fold(r.zero(), |acc, i| r.add(acc, r.pow(one_ba, i)));
    ensure(lhs == r.sub(one, r.product(&[a, s, b])), || {
        format!("(1-ab)^k ≠ 1 - aSb; {}", tag())
    })?;
    ensure(rhs == r.sub(one, r.product(&[b, a, s])), || {
        format!("(1-ba)^k ≠ 1 - baS; {}", tag())
    })?;
    let sb = r.mul(s, b);
    verify_jacobson(ctx, &ClineQuadruple::canonical(a, sb))
}

pub(crate) fn sweep_jacobson(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let quads = cline_quadruples(ctx.ring, mode, ctx.exec);
    let mut report = ctx.run_cases(Theorem::Jacobson, mode, &quads, |q| verify_jacobson(ctx, q));
    let evaluations =
        crate::exec::map_indices(ctx.exec, quads.len(), |i| jacobson_readings(ctx, &quads[i]));
    for (idx, reading) in JacobsonReading::ALL.iter().enumerate() {
        let (mut matched, mut undefined) = (0u64, 0u64);
        for ev in &evaluations {
            match ev[idx].1 {
                Some(true) => matched += 1,
                None => undefined += 1,
                Some(false) => {}
            }
        }
        report.notes.push(format!(
            "closed-formula reading {:?} [{}]: matches (1-bd)^z on {matched}/{} quadruples, undefined on {undefined}",
            reading,
            reading.formula(),
            quads.len()
        ));
    }
    Ok(report)
}

pub(crate) fn sweep_jacobson_power(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let cases: Vec<(Element, Element, u32)> = ctx
        .pair_population(mode)
        .into_iter()
        .flat_map(|(a, b)| POWER_EXPONENTS.map(|k| (a, b, k)))
        .collect();
    Ok(
        ctx.run_cases(Theorem::JacobsonPower, mode, &cases, |&(a, b, k)| {
            verify_jacobson_power(ctx, a, b, k)
        }),
    )
}
