//! The desk suite: every sweep over a fixed list of small rings, plus the
//! worked examples and a seeded batch of rational matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{map_indices, Execution};
use crate::identities::{Mode, SweepContext, SweepReport, Theorem};
use crate::inverses::{classify, gzhou_constructive};
use crate::matrix::{
    decide_gzhou_matrix_bounded, gzhou_matrix, period_bound, replay_matrix_certificate,
    sample_matrix, RationalMatrix,
};
use crate::ring::FiniteRing;
use crate::structure::{jacobson_radical, nilpotents};

pub const DESK_SUITE: [&str; 15] = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "M2(Z2)", "T2(Z2)",
    "T2(Z3)", "Z4 x Z2",
];
pub const MATRIX_SAMPLES: usize = 500;
pub const MATRIX_SEED: u64 = 0x5eed;

/// A named yes/no check with a short explanation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub rings: Vec<String>,
    pub sweeps: Vec<SweepReport>,
    pub checks: Vec<Check>,
    pub passes: u64,
    pub fails: u64,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.fails == 0
    }

    /// Sets every `duration_ms` to zero, for byte-stable output.
    pub fn strip_timing(&mut self) {
        for s in &mut self.sweeps {
            s.duration_ms = 0;
        }
    }
}

pub fn run_suite(name: &str, exec: Execution) -> Result<SuiteReport> {
    match name {
        "desk" => run_desk_suite(exec),
        other => Err(Error::Precondition(format!("unknown suite '{other}'"))),
    }
}

pub fn run_desk_suite(exec: Execution) -> Result<SuiteReport> {
    let mut sweeps = Vec::new();
    for text in DESK_SUITE {
        let ring = FiniteRing::parse(text)?;
        let ctx = SweepContext::new(&ring, exec)?;
        for theorem in Theorem::ALL {
            sweeps.push(theorem.run(&ctx, Mode::Exhaustive)?);
        }
    }
    let mut checks = example_checks(exec)?;
    checks.push(matrix_sample_check(MATRIX_SAMPLES, MATRIX_SEED, exec));
    let fails =
        sweeps.iter().filter(|s| !s.ok()).count() + checks.iter().filter(|c| !c.passed).count();
    let total = sweeps.len() + checks.len();
    Ok(SuiteReport {
        suite: "desk".into(),
        rings: DESK_SUITE.iter().map(|s| s.to_string()).collect(),
        sweeps,
        checks,
        passes: (total - fails) as u64,
        fails: fails as u64,
    })
}

/// The worked examples: inverses in `Z5` and over `ℚ`, and two radicals.
pub fn example_checks(exec: Execution) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let z5 = FiniteRing::parse("Z5")?;
    let rows = classify(&z5, exec)?;
    let cube_ok = z5.elements().zip(&rows).all(|(a, row)| {
        let cube = z5.format_element(z5.pow(a, 3));
        row.gzhou.as_deref() == Some(cube.as_str()) && row.constructive == cube
    });
    out.push(Check::new(
        "Z5: every a has generalized Zhou inverse a^3",
        cube_ok,
        "brute force and construction",
    ));

    let two = RationalMatrix::from_ints(&[[2]]);
    let bound = period_bound(1);
    let none = gzhou_matrix(&two)?.is_none();
    out.push(Check::new(
        "Q1: [[2]] has no generalized Zhou inverse",
        none,
        format!("conclusive bound n <= {bound}"),
    ));

    let jordan = RationalMatrix::from_ints(&[[0, 1], [0, 0]]);
    let jordan_ok = gzhou_matrix(&jordan)?.is_some_and(|c| c.inverse.is_zero());
    out.push(Check::new(
        "Q2: nilpotent Jordan block has inverse 0",
        jordan_ok,
        "",
    ));

    let rotation = RationalMatrix::from_ints(&[[0, -1], [1, 0]]);
    let expected = RationalMatrix::from_ints(&[[0, 1], [-1, 0]]);
    let rot = gzhou_matrix(&rotation)?;
    let rot_ok = rot
        .as_ref()
        .is_some_and(|c| c.inverse == expected && c.n == 4);
    out.push(Check::new(
        "Q2: rotation [[0,-1],[1,0]] has inverse [[0,1],[-1,0]] with n = 4",
        rot_ok,
        rot.map(|c| format!("got {} with n = {}", c.inverse, c.n))
            .unwrap_or_else(|| "got none".into()),
    ));

    let z12 = FiniteRing::parse("Z12")?;
    let j: Vec<String> = jacobson_radical(&z12)
        .into_iter()
        .map(|x| z12.format_element(x))
        .collect();
    out.push(Check::new(
        "J(Z12) = {0, 6}",
        j == ["0", "6"],
        format!("{j:?}"),
    ));

    let z8 = FiniteRing::parse("Z8")?;
    let n: Vec<String> = nilpotents(&z8)
        .into_iter()
        .map(|(x, _)| z8.format_element(x))
        .collect();
    out.push(Check::new(
        "N(Z8) = {0, 2, 4, 6}",
        n == ["0", "2", "4", "6"],
        format!("{n:?}"),
    ));

    let constructive_ok = DESK_SUITE.iter().all(|s| {
        let r = FiniteRing::parse(s).expect("suite rings parse");
        let ok = r.elements().all(|a| gzhou_constructive(&r, a).is_ok());
        ok
    });
    out.push(Check::new(
        "constructive inverse verifies on every suite element",
        constructive_ok,
        "",
    ));
    Ok(out)
}

/// Seeded random matrices of dimension 1 to 3: every certificate replays,
/// and the search at the φ-bound agrees with a scan ten times longer.
pub fn matrix_sample_check(count: usize, seed: u64, exec: Execution) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<RationalMatrix> = (0..count)
        .map(|_| {
            let k = rng.random_range(1..=3);
            sample_matrix(&mut rng, k)
        })
        .collect();
    let outcomes = map_indices(exec, count, |i| {
        let a = &samples[i];
        let bound = period_bound(a.dim());
        if decide_gzhou_matrix_bounded(a, bound) != decide_gzhou_matrix_bounded(a, 10 * bound) {
            return Err(format!("#{i} {a}: bound {bound} disagrees with 10x scan"));
        }
        match gzhou_matrix(a) {
            Ok(Some(cert)) => {
                let bad: Vec<&str> = replay_matrix_certificate(a, &cert)
                    .into_iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(name, _)| name)
                    .collect();
                if bad.is_empty() {
                    Ok(true)
                } else {
                    Err(format!("#{i} {a}: {bad:?}"))
                }
            }
            Ok(None) => Ok(false),
            Err(e) => Err(format!("#{i} {a}: {e}")),
        }
    });
    let found = outcomes.iter().filter(|o| matches!(o, Ok(true))).count();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
    let detail = if failures.is_empty() {
        format!("{found}/{count} invertible, all certificates replayed, seed {seed}")
    } else {
        failures.join("; ")
    };
    Check::new(
        format!("{count} seeded rational matrices"),
        failures.is_empty(),
        detail,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_pass() {
        for c in example_checks(Execution::Parallel).unwrap() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn matrix_sample_is_seeded() {
        let a = matrix_sample_check(40, 3, Execution::Parallel);
        assert!(a.passed, "{}", a.detail);
        assert_eq!(a, matrix_sample_check(40, 3, Execution::Sequential));
    }
}
