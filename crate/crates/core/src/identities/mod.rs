//! Theorem sweeps over whole rings or sampled witness tuples.
//!
//! Each sweep turns a statement into a list of cases in canonical order,
//! evaluates them (in parallel when enabled) and merges the outcomes in
//! that same order, so a report depends only on the ring, the mode and the
//! seed. A failing case keeps a transcript of every value involved.

mod cline;
mod elementwise;
mod jacobson;
mod zhou;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{flat_map_indices, map_indices, Execution};
use crate::inverses::InverseTable;
use crate::ring::{Element, FiniteRing};

pub use cline::{verify_cline, verify_cline_power};
pub use elementwise::{
    characterization_verdicts, spectral_idempotents, sweep_collapse, sweep_equivalences,
    sweep_lifting, sweep_structure, uniqueness_sweep, verify_radical_reduction, CHARACTERIZATIONS,
};
pub use jacobson::{jacobson_readings, verify_jacobson, verify_jacobson_power, JacobsonReading};
pub use zhou::{verify_zhou_cline, verify_zhou_jacobson};

/// Largest ring for which every quadruple is enumerated.
pub const EXHAUSTIVE_QUADRUPLE_LIMIT: usize = 32;
/// Largest ring for which every canonical pair is enumerated.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 100;
/// Exponents used by the power corollaries.
pub const POWER_EXPONENTS: [u32; 3] = [1, 2, 3];
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Cline,
    ClinePower,
    Jacobson,
    JacobsonPower,
    ZhouCline,
    ZhouJacobson,
    Equiv,
    Unique,
    Reduction,
    Collapse,
    Lift,
    Structure,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::Structure,
        Theorem::Equiv,
        Theorem::Unique,
        Theorem::Collapse,
        Theorem::Lift,
        Theorem::Cline,
        Theorem::ClinePower,
        Theorem::Jacobson,
        Theorem::JacobsonPower,
        Theorem::ZhouCline,
        Theorem::ZhouJacobson,
        Theorem::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Cline => "cline",
            Theorem::ClinePower => "cline-power",
            Theorem::Jacobson => "jacobson",
            Theorem::JacobsonPower => "jacobson-power",
            Theorem::ZhouCline => "zhou-cline",
            Theorem::ZhouJacobson => "zhou-jacobson",
            Theorem::Equiv => "equiv",
            Theorem::Unique => "unique",
            Theorem::Reduction => "reduction",
            Theorem::Collapse => "collapse",
            Theorem::Lift => "lift",
            Theorem::Structure => "structure",
        }
    }

    /// Runs this sweep over `ctx.ring`.
    pub fn run(self, ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
        let mut report = self.dispatch(ctx, mode)?;
        if let Some(note) = self.fallback_note(ctx.ring.cardinality(), mode) {
            report.notes.push(note);
        }
        Ok(report)
    }

    /// Explains when an exhaustive request was served by seeded draws.
    fn fallback_note(self, n: usize, mode: Mode) -> Option<String> {
        if mode != Mode::Exhaustive {
            return None;
        }
        let quadruples = matches!(
            self,
            Theorem::Cline | Theorem::Jacobson | Theorem::ZhouCline | Theorem::ZhouJacobson
        );
        let pairs = matches!(self, Theorem::ClinePower | Theorem::JacobsonPower);
        if quadruples && n > EXHAUSTIVE_QUADRUPLE_LIMIT {
            Some(format!(
                "{n} elements exceeds the exhaustive quadruple limit of {EXHAUSTIVE_QUADRUPLE_LIMIT}; non-canonical quadruples drawn with seed {DEFAULT_SEED}"
            ))
        } else if pairs && n > EXHAUSTIVE_PAIR_LIMIT {
            Some(format!(
                "{n} elements exceeds the exhaustive pair limit of {EXHAUSTIVE_PAIR_LIMIT}; pairs drawn with seed {DEFAULT_SEED}"
            ))
        } else {
            None
        }
    }

    fn dispatch(self, ctx: &SweepContext<'_>, mode: Mode) -> Result<SweepReport> {
        match self {
            Theorem::Cline => cline::sweep_cline(ctx, mode),
            Theorem::ClinePower => cline::sweep_cline_power(ctx, mode),
            Theorem::Jacobson => jacobson::sweep_jacobson(ctx, mode),
            Theorem::JacobsonPower => jacobson::sweep_jacobson_power(ctx, mode),
            Theorem::ZhouCline => zhou::sweep_zhou_cline(ctx, mode),
            Theorem::ZhouJacobson => zhou::sweep_zhou_jacobson(ctx, mode),
            Theorem::Equiv => sweep_equivalences(ctx, mode),
            Theorem::Unique => uniqueness_sweep(ctx, mode),
            Theorem::Reduction => verify_radical_reduction(ctx, mode),
            Theorem::Collapse => sweep_collapse(ctx, mode),
            Theorem::Lift => sweep_lifting(ctx, mode),
            Theorem::Structure => sweep_structure(ctx, mode),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem '{s}'")))
    }
}

/// Population selection for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every case, up to the per-theorem size limits.
    Exhaustive,
    /// `samples` seeded draws.
    Sampled { samples: usize, seed: u64 },
}

impl Mode {
    pub fn seed(self) -> Option<u64> {
        match self {
            Mode::Exhaustive => None,
            Mode::Sampled { seed, .. } => Some(seed),
        }
    }

    fn label(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled { .. } => "sampled",
        }
    }
}

/// Outcome of one theorem over one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: String,
    pub ring: String,
    pub mode: String,
    pub population: u64,
    pub passes: u64,
    pub fails: u64,
    pub counterexamples: Vec<String>,
    pub duration_ms: u64,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.fails == 0
    }
}

/// Most transcripts kept per report; the fail count stays exact.
pub const MAX_TRANSCRIPTS: usize = 50;

/// A ring together with its precomputed generalized Zhou inverses.
pub struct SweepContext<'r> {
    pub ring: &'r FiniteRing,
    pub table: InverseTable,
    pub exec: Execution,
}

impl<'r> SweepContext<'r> {
    pub fn new(ring: &'r FiniteRing, exec: Execution) -> Result<Self> {
        Ok(SweepContext {
            table: InverseTable::build(ring, exec)?,
            ring,
            exec,
        })
    }

    /// Generalized Zhou inverse from the table.
    pub fn gz(&self, a: Element) -> Element {
        self.table.get(self.ring, a)
    }

    pub(crate) fn fmt(&self, x: Element) -> String {
        self.ring.format_element(x)
    }

    pub(crate) fn rng(&self, seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Elements to visit in per-element sweeps.
    pub(crate) fn element_population(&self, mode: Mode) -> Vec<Element> {
        let r = self.ring;
        match mode {
            Mode::Exhaustive => r.elements().collect(),
            Mode::Sampled { samples, seed } => {
                let mut rng = self.rng(seed);
                (0..samples)
                    .map(|_| r.element(rng.random_range(0..r.cardinality() as u32)))
                    .collect()
            }
        }
    }

    /// Pairs for the two-element statements.
    pub(crate) fn pair_population(&self, mode: Mode) -> Vec<(Element, Element)> {
        let r = self.ring;
        let n = r.cardinality();
        match mode {
            Mode::Exhaustive if n <= EXHAUSTIVE_PAIR_LIMIT => r
                .elements()
                .flat_map(|x| r.elements().map(move |y| (x, y)))
                .collect(),
            Mode::Exhaustive => self.pair_population(Mode::Sampled {
                samples: EXHAUSTIVE_PAIR_LIMIT * EXHAUSTIVE_PAIR_LIMIT,
                seed: DEFAULT_SEED,
            }),
            Mode::Sampled { samples, seed } => {
                let mut rng = self.rng(seed);
                (0..samples)
                    .map(|_| {
                        let x = rng.random_range(0..n as u32);
                        let y = rng.random_range(0..n as u32);
                        (r.element(x), r.element(y))
                    })
                    .collect()
            }
        }
    }

    /// Runs `check` on each case and assembles the report.
    pub(crate) fn run_cases<T, F>(
        &self,
        theorem: Theorem,
        mode: Mode,
        cases: &[T],
        check: F,
    ) -> SweepReport
    where
        T: Sync,
        F: Fn(&T) -> std::result::Result<(), String> + Sync + Send,
    {
        let start = Instant::now();
        let outcomes = map_indices(self.exec, cases.len(), |i| check(&cases[i]));
        let fails: Vec<String> = outcomes.into_iter().filter_map(|o| o.err()).collect();
        SweepReport {
            theorem: theorem.name().into(),
            ring: self.ring.label().into(),
            mode: mode.label().into(),
            population: cases.len() as u64,
            passes: (cases.len() - fails.len()) as u64,
            fails: fails.len() as u64,
            counterexamples: fails.into_iter().take(MAX_TRANSCRIPTS).collect(),
            duration_ms: start.elapsed().as_millis() as u64,
            seed: mode.seed(),
            notes: Vec::new(),
        }
    }
}

/// Turns a condition into a case outcome with a transcript on failure.
pub(crate) fn ensure(
    cond: bool,
    transcript: impl FnOnce() -> String,
) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(transcript())
    }
}

/// Four elements with `bdb = bac` and `dbd = acd`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClineQuadruple {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub d: Element,
}

impl ClineQuadruple {
    pub fn new(r: &FiniteRing, a: Element, b: Element, c: Element, d: Element) -> Result<Self> {
        let q = ClineQuadruple { a, b, c, d };
        if q.holds(r) {
            Ok(q)
        } else {
            Err(Error::Hypothesis(q.describe(r)))
        }
    }

    /// `(x, y, y, x)`, for which `ac = xy` and `bd = yx`.
    pub fn canonical(x: Element, y: Element) -> Self {
        ClineQuadruple {
            a: x,
            b: y,
            c: y,
            d: x,
        }
    }

    pub fn holds(&self, r: &FiniteRing) -> bool {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        r.product(&[b, d, b]) == r.product(&[b, a, c])
            && r.product(&[d, b, d]) == r.product(&[a, c, d])
    }

    pub fn is_canonical(&self) -> bool {
        self.a == self.d && self.b == self.c
    }

    pub fn describe(&self, r: &FiniteRing) -> String {
        format!(
            "a={}, b={}, c={}, d={}",
            r.format_element(self.a),
            r.format_element(self.b),
            r.format_element(self.c),
            r.format_element(self.d)
        )
    }
}

/// Every quadruple satisfying the hypothesis, in canonical order.
///
/// The conditions depend on `(a, c)` only through `t = ac`, so each
/// `(b, d)` is tested once per value of `t`.
pub fn all_cline_quadruples(r: &FiniteRing, exec: Execution) -> Vec<ClineQuadruple> {
    let n = r.cardinality();
    let by_product: Vec<Vec<(Element, Element)>> = {
        let mut v = vec![Vec::new(); n];
        for a in r.elements() {
            for c in r.elements() {
                v[r.mul(a, c).index()].push((a, c));
            }
        }
        v
    };
    let mut quads = flat_map_indices(exec, n * n, |i| {
        let (b, d) = (r.element((i / n) as u32), r.element((i % n) as u32));
        let bdb = r.product(&[b, d, b]);
        let dbd = r.product(&[d, b, d]);
        let mut out = Vec::new();
        for (t, pairs) in by_product.iter().enumerate() {
            let t = r.element(t as u32);
            if pairs.is_empty() || r.mul(b, t) != bdb || r.mul(t, d) != dbd {
                continue;
            }
            out.extend(pairs.iter().map(|&(a, c)| ClineQuadruple { a, b, c, d }));
        }
        out
    });
    quads.sort_unstable_by_key(|q| (q.a, q.b, q.c, q.d));
    quads
}

/// Quadruples for a sweep.
///
/// Exhaustive mode on rings with at most [`EXHAUSTIVE_QUADRUPLE_LIMIT`]
/// elements enumerates everything. Otherwise the canonical family is drawn
/// from pairs (all of them when `|R|² ≤ budget`) and non-canonical
/// quadruples come from seeded draws of `(a, b, d)` followed by a scan
/// over `c`.
pub fn cline_quadruples(r: &FiniteRing, mode: Mode, exec: Execution) -> Vec<ClineQuadruple> {
    let n = r.cardinality();
    if mode == Mode::Exhaustive && n <= EXHAUSTIVE_QUADRUPLE_LIMIT {
        return all_cline_quadruples(r, exec);
    }
    let (budget, seed) = match mode {
        Mode::Exhaustive => (EXHAUSTIVE_PAIR_LIMIT * EXHAUSTIVE_PAIR_LIMIT, DEFAULT_SEED),
        Mode::Sampled { samples, seed } => (samples, seed),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut quads: Vec<ClineQuadruple> = if n * n <= budget {
        r.elements()
            .flat_map(|x| r.elements().map(move |y| ClineQuadruple::canonical(x, y)))
            .collect()
    } else {
        (0..budget)
            .map(|_| {
                let x = r.element(rng.random_range(0..n as u32));
                let y = r.element(rng.random_range(0..n as u32));
                ClineQuadruple::canonical(x, y)
            })
            .collect()
    };
    let draws: Vec<[u32; 3]> = (0..budget)
        .map(|_| std::array::from_fn(|_| rng.random_range(0..n as u32)))
        .collect();
    quads.extend(flat_map_indices(exec, draws.len(), |i| {
        let [a, b, d] = draws[i].map(|c| r.element(c));
        r.elements()
            .map(|c| ClineQuadruple { a, b, c, d })
            .filter(|q| !q.is_canonical() && q.holds(r))
            .collect()
    }));
    quads
}
