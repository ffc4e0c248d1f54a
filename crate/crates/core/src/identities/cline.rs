//! Cline's formula: `ac` invertible in the generalized Zhou sense implies
//! `bd` is, with `(bd)^z = b((ac)^z)²d`.

use crate::error::Result;
use crate::inverses::{certify, InverseKind};
use crate::ring::Element;

use super::{
    cline_quadruples, ensure, ClineQuadruple, Mode, SweepContext, SweepReport, Theorem,
    POWER_EXPONENTS,
};

/// Checks the witness formula exactly, plus the proof identity
/// `(bd)^n - (bd)e = b[(ac)^(n-1) - x]d` at the exponent of `(ac)^z`.
pub fn verify_cline(ctx: &SweepContext<'_>, q: &ClineQuadruple) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let ctx_line = || q.describe(r);
    ensure(q.holds(r), || format!("hypothesis fails: {}", ctx_line()))?;
    let ac = r.mul(a, c);
    let bd = r.mul(b, d);
    let x = ctx.gz(ac);
    let ac_cert = certify(r, InverseKind::GZhou, ac, x).ok_or_else(|| {
        format!(
            "(ac)^z = {} fails its certificate; {}",
            ctx.fmt(x),
            ctx_line()
        )
    })?;
    let e = r.product(&[b, x, x, d]);
    ensure(certify(r, InverseKind::GZhou, bd, e).is_some(), || {
        format!(
            "b((ac)^z)^2 d = {} is not a generalized Zhou inverse of bd = {}; {}",
            ctx.fmt(e),
            ctx.fmt(bd),
            ctx_line()
        )
    })?;
    ensure(ctx.gz(bd) == e, || {
        format!(
            "(bd)^z = {} but b((ac)^z)^2 d = {}; {}",
            ctx.fmt(ctx.gz(bd)),
            ctx.fmt(e),
            ctx_line()
        )
    })?;
    let n = ac_cert.n.expect("generalized Zhou certificates carry n") as u64;
    let lhs = r.sub(r.pow(bd, n), r.mul(bd, e));
    let rhs = r.product(&[b, r.sub(r.pow(ac, n - 1), x), d]);
    ensure(lhs == rhs, || {
        format!(
            "(bd)^n - (bd)e = {} but b[(ac)^(n-1) - x]d = {} at n={n}; {}",
            ctx.fmt(lhs),
            ctx.fmt(rhs),
            ctx_line()
        )
    })
}

/// `(ab)^k` and `(ba)^k` are both invertible, and the witness transfers
/// through `x = a`, `y = b(ab)^(k-1)`: `((ba)^k)^z = y·(((ab)^k)^z)²·x`.
pub fn verify_cline_power(
    ctx: &SweepContext<'_>,
    a: Element,
    b: Element,
    k: u32,
) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let ab_k = r.pow(r.mul(a, b), k as u64);
    let ba_k = r.pow(r.mul(b, a), k as u64);
    let tag = || format!("a={}, b={}, k={k}", ctx.fmt(a), ctx.fmt(b));
    ensure(
        certify(r, InverseKind::GZhou, ab_k, ctx.gz(ab_k)).is_some(),
        || format!("(ab)^k lacks an inverse; {}", tag()),
    )?;
    ensure(
        certify(r, InverseKind::GZhou, ba_k, ctx.gz(ba_k)).is_some(),
        || format!("(ba)^k lacks an inverse; {}", tag()),
    )?;
    let y = r.mul(b, r.pow(r.mul(a, b), k as u64 - 1));
    ensure(r.mul(a, y) == ab_k && r.mul(y, a) == ba_k, || {
        format!("factorization (ab)^k = a·b(ab)^(k-1) fails; {}", tag())
    })?;
    let z = ctx.gz(ab_k);
    let want = r.product(&[y, z, z, a]);
    ensure(ctx.gz(ba_k) == want, || {
        format!(
            "((ba)^k)^z = {} but y((ab)^k)^z)^2 x = {}; {}",
            ctx.fmt(ctx.gz(ba_k)),
            ctx.fmt(want),
            tag()
        )
    })
}

pub(crate) fn sweep_cline(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let quads = cline_quadruples(ctx.ring, mode, ctx.exec);
    let canonical = quads.iter().filter(|q| q.is_canonical()).count();
    let mut report = ctx.run_cases(Theorem::Cline, mode, &quads, |q| verify_cline(ctx, q));
    report.notes.push(format!(
        "{canonical} canonical (x,y,y,x) quadruples, {} non-canonical",
        quads.len() - canonical
    ));
    Ok(report)
}

pub(crate) fn sweep_cline_power(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let cases: Vec<(Element, Element, u32)> = ctx
        .pair_population(mode)
        .into_iter()
        .flat_map(|(a, b)| POWER_EXPONENTS.map(|k| (a, b, k)))
        .collect();
    Ok(
        ctx.run_cases(Theorem::ClinePower, mode, &cases, |&(a, b, k)| {
            verify_cline_power(ctx, a, b, k)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Execution;
    use crate::ring::FiniteRing;

    #[test]
    fn z6_example() {
        let r = FiniteRing::parse("Z6").unwrap();
        let ctx = SweepContext::new(&r, Execution::Sequential).unwrap();
        let q = ClineQuadruple::canonical(r.element(2), r.element(3));
        assert_eq!(ctx.gz(r.element(0)), r.zero());
        verify_cline(&ctx, &q).unwrap();
        let ones = ClineQuadruple::canonical(r.one(), r.one());
        verify_cline(&ctx, &ones).unwrap();
    }

    #[test]
    fn m2z2_nilpotent_pair() {
        let r = FiniteRing::parse("M2(Z2)").unwrap();
        let ctx = SweepContext::new(&r, Execution::Sequential).unwrap();
        let x = r.parse_element("[[0,1],[0,0]]").unwrap();
        let y = r.parse_element("[[0,0],[1,0]]").unwrap();
        let xy = r.mul(x, y);
        assert_eq!(r.mul(xy, xy), xy);
        verify_cline(&ctx, &ClineQuadruple::canonical(x, y)).unwrap();
        for k in 1..=3 {
            verify_cline_power(&ctx, x, y, k).unwrap();
        }
    }

    #[test]
    fn power_with_units() {
        let r = FiniteRing::parse("Z6").unwrap();
        let ctx = SweepContext::new(&r, Execution::Sequential).unwrap();
        verify_cline_power(&ctx, r.element(2), r.element(3), 1).unwrap();
        verify_cline_power(&ctx, r.one(), r.one(), 3).unwrap();
    }

    #[test]
    fn wrong_witness_is_reported() {
        let r = FiniteRing::parse("Z5").unwrap();
        let ctx = SweepContext::new(&r, Execution::Sequential).unwrap();
        let bogus = ClineQuadruple {
            a: r.one(),
            b: r.one(),
            c: r.zero(),
            d: r.one(),
        };
        assert!(verify_cline(&ctx, &bogus)
            .unwrap_err()
            .contains("hypothesis"));
    }
}
