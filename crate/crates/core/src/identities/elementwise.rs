//! Per-element statements: the equivalent characterizations, uniqueness,
//! collapse of the four inverses, the two idempotent routes, reduction
//! modulo the radical and the structural lemmas.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::exec::map_indices;
use crate::inverses::{
    binomial_lift, certify, characterization_n, gzhou_constructive, inverse_bruteforce,
    inverse_candidates, InverseKind,
};
use crate::ring::{Element, FiniteRing};
use crate::structure::{
    idempotents, in_sqrt_jacobson, nilpotency_index, quotient_by_radical, radical_is_ideal,
    unit_inverse, Commutant, Radical,
};

use super::{ensure, Mode, SweepContext, SweepReport, Theorem};

fn fmt_list(r: &FiniteRing, xs: impl IntoIterator<Item = Element>) -> String {
    let items: Vec<String> = xs.into_iter().map(|x| r.format_element(x)).collect();
    format!("[{}]", items.join(", "))
}

/// Names of the characterizations compared by [`sweep_equivalences`].
pub const CHARACTERIZATIONS: [&str; 8] = [
    "generalized Zhou inverse exists",
    "idempotent p in comm2(a) with a^n - p in sqrtJ",
    "x in comm2(a), x = xax, a - a^(n+2)x in sqrtJ",
    "idempotent p in comm(a) with a^n - p in N",
    "a - a^(n+1) in sqrtJ",
    "a - a^(n+1) in N",
    "Zhou inverse exists",
    "idempotent p in comm2(a) with a^n - p in N",
];

/// Every characterization of generalized Zhou (and Zhou) invertibility,
/// each evaluated by its own scan.
pub fn characterization_verdicts(r: &FiniteRing, a: Element) -> Result<[bool; 8]> {
    let orbit = r.power_orbit(a);
    let bound = orbit.search_bound();
    let comm = Commutant::of(r, a);
    let idem = idempotents(r);
    let powers: Vec<Element> = (1..=bound as u64 + 2).map(|n| orbit.power(n)).collect();
    let power = |n: u32| powers[n as usize - 1];
    let sqrt_j = |x: Element| Radical::SqrtJ.contains(r, x);
    let nil = |x: Element| Radical::Nil.contains(r, x);
    let idem_scan = |in_set: &dyn Fn(Element) -> bool, radical: &dyn Fn(Element) -> bool| {
        idem.iter()
            .filter(|&&p| in_set(p))
            .any(|&p| (1..=bound).any(|n| radical(r.sub(power(n), p))))
    };
    let third = comm.comm2().iter().any(|&x| {
        r.product(&[x, a, x]) == x && (1..=bound).any(|n| sqrt_j(r.sub(a, r.mul(power(n + 2), x))))
    });
    Ok([
        inverse_bruteforce(r, a, InverseKind::GZhou)?.is_some(),
        idem_scan(&|p| comm.in_comm2(p), &sqrt_j),
        third,
        idem_scan(&|p| comm.in_comm(p), &nil),
        characterization_n(r, a, Radical::SqrtJ).is_some(),
        characterization_n(r, a, Radical::Nil).is_some(),
        inverse_bruteforce(r, a, InverseKind::Zhou)?.is_some(),
        idem_scan(&|p| comm.in_comm2(p), &nil),
    ])
}

fn check_equivalences(ctx: &SweepContext<'_>, a: Element) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let verdicts = characterization_verdicts(r, a).map_err(|e| format!("a={}: {e}", ctx.fmt(a)))?;
    ensure(verdicts.iter().all(|&v| v == verdicts[0]), || {
        let listing: Vec<String> = CHARACTERIZATIONS
            .iter()
            .zip(verdicts)
            .map(|(name, v)| format!("{name}: {v}"))
            .collect();
        format!(
            "a={}: verdicts disagree ({})",
            ctx.fmt(a),
            listing.join("; ")
        )
    })?;
    let b = ctx.gz(a);
    let Some(cert) = certify(r, InverseKind::GZhou, a, b) else {
        return ensure(!verdicts[0], || {
            format!("a={}: table inverse fails its certificate", ctx.fmt(a))
        });
    };
    ensure(certify(r, InverseKind::PDrazin, a, b).is_some(), || {
        format!(
            "a={}: generalized Zhou inverse {} is not a p-Drazin inverse",
            ctx.fmt(a),
            ctx.fmt(b)
        )
    })?;
    let n = cert.n.expect("generalized Zhou certificates carry n") as u64;
    let x = r.sub(a, r.mul(r.pow(a, n + 2), b));
    ensure(in_sqrt_jacobson(r, x).is_some(), || {
        format!(
            "a={}: a - a^(n+2)b = {} ∉ √J at n={n}",
            ctx.fmt(a),
            ctx.fmt(x)
        )
    })
}

/// All characterizations agree elementwise, the generalized Zhou inverse is
/// a p-Drazin inverse, and `a - a^(n+2)b ∈ √J(R)` at the certificate's `n`.
pub fn sweep_equivalences(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let elements = ctx.element_population(mode);
    let mut report = ctx.run_cases(Theorem::Equiv, mode, &elements, |&a| {
        check_equivalences(ctx, a)
    });
    report.notes.push(format!(
        "{} characterizations compared per element",
        CHARACTERIZATIONS.len()
    ));
    Ok(report)
}

/// Distinct idempotents `p ∈ comm²(a)` with `a^n - p` in `radical` for some `n ∈ [1, k+l]`.
pub fn spectral_idempotents(r: &FiniteRing, a: Element, radical: Radical) -> Vec<Element> {
    let orbit = r.power_orbit(a);
    let comm = Commutant::of(r, a);
    let found: BTreeSet<Element> = idempotents(r)
        .into_iter()
        .filter(|&p| comm.in_comm2(p))
        .filter(|&p| {
            (1..=orbit.search_bound()).any(|n| radical.contains(r, r.sub(orbit.power(n as u64), p)))
        })
        .collect();
    found.into_iter().collect()
}

fn check_uniqueness(ctx: &SweepContext<'_>, a: Element) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let bound = r.power_orbit(a).search_bound();
    for kind in [InverseKind::GZhou, InverseKind::Zhou] {
        let found = inverse_candidates(r, a, kind, bound);
        ensure(found.len() == 1, || {
            format!(
                "a={}: {} {kind} inverses {}",
                ctx.fmt(a),
                found.len(),
                fmt_list(r, found.iter().map(|f| f.0))
            )
        })?;
    }
    let p = r.mul(a, ctx.gz(a));
    for radical in [Radical::SqrtJ, Radical::Nil] {
        let ps = spectral_idempotents(r, a, radical);
        ensure(ps == [p], || {
            // with two idempotents the proof's c = (1-p)(a^n+p)^(-1) makes the contradiction concrete
            let an = r.pow(a, bound as u64);
            let c = unit_inverse(r, r.add(an, p))
                .map(|u| ctx.fmt(r.mul(r.sub(r.one(), p), u)))
                .unwrap_or_else(|_| "undefined".into());
            format!(
                "a={}: idempotents {} for {radical:?}, expected [{}]; c = (1-p)(a^n+p)^-1 = {c}",
                ctx.fmt(a),
                fmt_list(r, ps.iter().copied()),
                ctx.fmt(p)
            )
        })?;
    }
    Ok(())
}

/// Exactly one inverse and one spectral idempotent per element.
pub fn uniqueness_sweep(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let elements = ctx.element_population(mode);
    Ok(ctx.run_cases(Theorem::Unique, mode, &elements, |&a| {
        check_uniqueness(ctx, a)
    }))
}

/// `a` has a generalized Zhou inverse in `R` iff its image has a Zhou
/// inverse in `R/J(R)`, and the image of the inverse is that inverse.
pub fn verify_radical_reduction(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let r = ctx.ring;
    let quotient = quotient_by_radical(r);
    let q = &quotient.ring;
    let zhou_in_q = map_indices(ctx.exec, q.cardinality(), |i| {
        inverse_bruteforce(q, q.element(i as u32), InverseKind::Zhou)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let elements = ctx.element_population(mode);
    let mut report = ctx.run_cases(Theorem::Reduction, mode, &elements, |&a| {
        let above = certify(r, InverseKind::GZhou, a, ctx.gz(a));
        let image = quotient.project(a);
        let below = zhou_in_q[image.index()];
        ensure(above.is_some() == below.is_some(), || {
            format!(
                "a={}: inverse in R exists = {}, Zhou inverse of {} in {} exists = {}",
                ctx.fmt(a),
                above.is_some(),
                q.format_element(image),
                q.label(),
                below.is_some()
            )
        })?;
        let (Some(above), Some(below)) = (above, below) else {
            return Ok(());
        };
        let projected = quotient.project(above.b);
        ensure(projected == below.b, || {
            format!(
                "a={}: image of the inverse is {} but the Zhou inverse of the image is {}",
                ctx.fmt(a),
                q.format_element(projected),
                q.format_element(below.b)
            )
        })?;
        ensure(quotient.project(above.p) == below.p, || {
            format!("a={}: spectral idempotents differ mod J", ctx.fmt(a))
        })
    });
    report
        .notes
        .push(format!("R/J(R) has {} elements", q.cardinality()));
    Ok(report)
}

/// Drazin, p-Drazin, Zhou and generalized Zhou inverses coincide, and the
/// constructive inverse equals the brute-force one.
pub fn sweep_collapse(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let r = ctx.ring;
    let elements = ctx.element_population(mode);
    Ok(ctx.run_cases(Theorem::Collapse, mode, &elements, |&a| {
        let mut values = Vec::new();
        for kind in InverseKind::ALL {
            let cert =
                inverse_bruteforce(r, a, kind).map_err(|e| format!("a={}: {e}", ctx.fmt(a)))?;
            let cert = cert.ok_or_else(|| format!("a={}: no {kind} inverse", ctx.fmt(a)))?;
            values.push((kind, cert.b));
        }
        let constructive =
            gzhou_constructive(r, a).map_err(|e| format!("a={}: {e}", ctx.fmt(a)))?;
        ensure(values.iter().all(|&(_, b)| b == constructive.b), || {
            let listing: Vec<String> = values
                .iter()
                .map(|(k, b)| format!("{k}={}", ctx.fmt(*b)))
                .collect();
            format!(
                "a={}: {}, constructive={}",
                ctx.fmt(a),
                listing.join(", "),
                ctx.fmt(constructive.b)
            )
        })
    }))
}

/// The binomial lifting route reaches the same idempotent as the power orbit.
pub fn sweep_lifting(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let r = ctx.ring;
    let elements = ctx.element_population(mode);
    let lifts = map_indices(ctx.exec, elements.len(), |i| {
        binomial_lift(r, elements[i]).ok()
    });
    let mut report = ctx.run_cases(Theorem::Lift, mode, &elements, |&a| {
        let lift = binomial_lift(r, a).map_err(|e| format!("a={}: {e}", ctx.fmt(a)))?;
        let p = gzhou_constructive(r, a)
            .map_err(|e| format!("a={}: {e}", ctx.fmt(a)))?
            .p;
        ensure(lift.f == p, || {
            format!(
                "a={}: binomial route gives e={} -> f={} (n={}, m={}), power orbit gives p={}",
                ctx.fmt(a),
                ctx.fmt(lift.e),
                ctx.fmt(lift.f),
                lift.n,
                lift.m,
                ctx.fmt(p)
            )
        })
    });
    let literal_ok = lifts
        .iter()
        .flatten()
        .filter(|l| l.literal_factor_ok)
        .count();
    report.notes.push(format!(
        "literal (a - a^n)^i factor gives e² - e ∈ J on {literal_ok}/{} elements",
        elements.len()
    ));
    Ok(report)
}

fn check_structure(
    ctx: &SweepContext<'_>,
    a: Element,
    idem: &[Element],
) -> std::result::Result<(), String> {
    let r = ctx.ring;
    let in_sqrt = |x: Element| in_sqrt_jacobson(r, x).is_some();
    let a_sqrt = in_sqrt(a);
    ensure(a_sqrt == nilpotency_index(r, a).is_some(), || {
        format!(
            "a={}: in √J = {a_sqrt} but nilpotent = {}",
            ctx.fmt(a),
            !a_sqrt
        )
    })?;
    if !a_sqrt {
        return Ok(());
    }
    for &e in idem {
        if r.mul(a, e) == r.mul(e, a) {
            let ae = r.mul(a, e);
            ensure(in_sqrt(ae), || {
                format!("a={}, e={}: ae ∉ √J", ctx.fmt(a), ctx.fmt(e))
            })?;
        }
    }
    for b in r.elements() {
        if r.mul(a, b) != r.mul(b, a) {
            continue;
        }
        ensure(in_sqrt(r.mul(a, b)) && in_sqrt(r.mul(b, a)), || {
            format!(
                "a={}, b={}: commuting product with a ∈ √J leaves √J",
                ctx.fmt(a),
                ctx.fmt(b)
            )
        })?;
        if in_sqrt(b) {
            ensure(in_sqrt(r.add(a, b)), || {
                format!("a={}, b={}: a + b ∉ √J", ctx.fmt(a), ctx.fmt(b))
            })?;
        }
    }
    Ok(())
}

/// `√J(R) = N(R)`, `J(R)` is an ideal, and commuting closure of `√J(R)`
/// under idempotent multiples, products and sums.
pub fn sweep_structure(ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
    let r = ctx.ring;
    let idem = idempotents(r);
    let mut cases: Vec<Option<Element>> = vec![None];
    cases.extend(ctx.element_population(mode).into_iter().map(Some));
    Ok(
        ctx.run_cases(Theorem::Structure, mode, &cases, |case| match *case {
            None => ensure(radical_is_ideal(r, ctx.exec), || {
                format!("J({}) is not an ideal", r.label())
            }),
            Some(a) => check_structure(ctx, a, &idem),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Execution;

    fn sweep(s: &str, t: Theorem) -> SweepReport {
        let r = FiniteRing::parse(s).unwrap();
        let ctx = SweepContext::new(&r, Execution::Parallel).unwrap();
        t.run(&ctx, Mode::Exhaustive).unwrap()
    }

    #[test]
    fn small_rings_pass_every_elementwise_sweep() {
        for s in ["Z1", "Z5", "Z12", "T2(Z2)", "M2(Z2)"] {
            for t in [
                Theorem::Equiv,
                Theorem::Unique,
                Theorem::Reduction,
                Theorem::Collapse,
                Theorem::Lift,
                Theorem::Structure,
            ] {
                let rep = sweep(s, t);
                assert!(rep.ok(), "{s} {t}: {:?}", rep.counterexamples);
            }
        }
    }

    #[test]
    fn verdicts_true_on_z12() {
        let r = FiniteRing::parse("Z12").unwrap();
        for a in r.elements() {
            assert_eq!(characterization_verdicts(&r, a).unwrap(), [true; 8]);
        }
    }

    #[test]
    fn spectral_idempotent_examples() {
        let z5 = FiniteRing::parse("Z5").unwrap();
        assert_eq!(
            spectral_idempotents(&z5, z5.element(2), Radical::SqrtJ),
            vec![z5.one()]
        );
        let z4 = FiniteRing::parse("Z4").unwrap();
        assert_eq!(
            spectral_idempotents(&z4, z4.element(2), Radical::SqrtJ),
            vec![z4.zero()]
        );
        assert_eq!(
            spectral_idempotents(&z4, z4.one(), Radical::Nil),
            vec![z4.one()]
        );
    }
}
