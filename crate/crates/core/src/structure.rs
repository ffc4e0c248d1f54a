//! Structural subsets of a finite ring: units, nilpotents, the Jacobson
//! radical `J(R)`, its root `√J(R)`, idempotents, commutants and the
//! quotient `R/J(R)`.
//!
//! `J(R)` is computed by quasi-regularity: `x ∈ J(R)` iff `1 - rx` is a unit
//! for every `r`. `√J(R)` is computed from power orbits against that set, and
//! `N(R)` from power orbits against zero, so the finite-ring identity
//! `√J(R) = N(R)` is a genuine cross-check.

use crate::error::{Error, Result};
use crate::exec::{all_indices, map_indices, Execution};
use crate::ring::{Element, FiniteRing};

/// Per-element structural data, cached on the ring.
#[derive(Debug, Clone)]
pub struct StructuralSets {
    unit_inverse: Vec<Option<u32>>,
    nil_index: Vec<Option<u32>>,
    in_radical: Vec<bool>,
    sqrt_j_witness: Vec<Option<u32>>,
    idempotent: Vec<bool>,
}

impl StructuralSets {
    fn compute(r: &FiniteRing, exec: Execution) -> StructuralSets {
        let n = r.cardinality();
        let one = r.one();
        let unit_inverse = map_indices(exec, n, |i| {
            let x = r.element(i as u32);
            let orbit = r.power_orbit(x);
            if orbit.index != 1 || orbit.power(orbit.period as u64) != one {
                return None;
            }
            // x^l = 1, so x^(l-1) is a right inverse; promote to two-sided by checking.
            let b = r.pow(x, orbit.period as u64 - 1);
            (r.mul(x, b) == one && r.mul(b, x) == one).then_some(b.code())
        });
        let nil_index = map_indices(exec, n, |i| {
            let orbit = r.power_orbit(r.element(i as u32));
            orbit
                .orbit
                .iter()
                .position(|e| e.code() == 0)
                .map(|p| p as u32 + 1)
        });
        let in_radical = map_indices(exec, n, |i| {
            let x = r.element(i as u32);
            r.elements()
                .all(|y| unit_inverse[r.sub(one, r.mul(y, x)).index()].is_some())
        });
        let sqrt_j_witness = map_indices(exec, n, |i| {
            let orbit = r.power_orbit(r.element(i as u32));
            orbit
                .orbit
                .iter()
                .position(|e| in_radical[e.index()])
                .map(|p| p as u32 + 1)
        });
        let idempotent = map_indices(exec, n, |i| {
            let x = r.element(i as u32);
            r.mul(x, x) == x
        });
        StructuralSets {
            unit_inverse,
            nil_index,
            in_radical,
            sqrt_j_witness,
            idempotent,
        }
    }
}

/// Structural sets of `r`, computed on first use.
pub fn structural_sets(r: &FiniteRing) -> &StructuralSets {
    r.structure
        .get_or_init(|| StructuralSets::compute(r, Execution::Parallel))
}

fn collect(r: &FiniteRing, keep: impl Fn(usize) -> bool) -> Vec<Element> {
    r.elements().filter(|e| keep(e.index())).collect()
}

pub fn units(r: &FiniteRing) -> Vec<Element> {
    let s = structural_sets(r);
    collect(r, |i| s.unit_inverse[i].is_some())
}

pub fn is_unit(r: &FiniteRing, x: Element) -> bool {
    structural_sets(r).unit_inverse[r.code_of(x) as usize].is_some()
}

pub fn unit_inverse(r: &FiniteRing, x: Element) -> Result<Element> {
    structural_sets(r).unit_inverse[r.code_of(x) as usize]
        .map(|c| r.element(c))
        .ok_or_else(|| Error::NotAUnit(r.format_element(x)))
}

/// Units by the definitional scan: a one-sided inverse, then checked on both sides.
pub fn units_by_scan(r: &FiniteRing) -> Vec<(Element, Element)> {
    let one = r.one();
    r.elements()
        .filter_map(|x| {
            let b = r.elements().find(|&y| r.mul(x, y) == one)?;
            (r.mul(b, x) == one).then_some((x, b))
        })
        .collect()
}

/// Nilpotent elements with their nilpotency index (smallest `m ≥ 1` with `x^m = 0`).
pub fn nilpotents(r: &FiniteRing) -> Vec<(Element, u32)> {
    let s = structural_sets(r);
    r.elements()
        .filter_map(|e| s.nil_index[e.index()].map(|m| (e, m)))
        .collect()
}

pub fn nilpotency_index(r: &FiniteRing, x: Element) -> Option<u32> {
    structural_sets(r).nil_index[r.code_of(x) as usize]
}

pub fn jacobson_radical(r: &FiniteRing) -> Vec<Element> {
    let s = structural_sets(r);
    collect(r, |i| s.in_radical[i])
}

pub fn in_jacobson(r: &FiniteRing, x: Element) -> bool {
    structural_sets(r).in_radical[r.code_of(x) as usize]
}

pub fn sqrt_jacobson(r: &FiniteRing) -> Vec<Element> {
    let s = structural_sets(r);
    collect(r, |i| s.sqrt_j_witness[i].is_some())
}

/// Smallest `m ≥ 1` with `x^m ∈ J(R)`, if any.
pub fn in_sqrt_jacobson(r: &FiniteRing, x: Element) -> Option<u32> {
    structural_sets(r).sqrt_j_witness[r.code_of(x) as usize]
}

pub fn idempotents(r: &FiniteRing) -> Vec<Element> {
    let s = structural_sets(r);
    collect(r, |i| s.idempotent[i])
}

pub fn is_idempotent(r: &FiniteRing, x: Element) -> bool {
    structural_sets(r).idempotent[r.code_of(x) as usize]
}

/// Which "small" set a residual is required to fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Radical {
    /// Nilpotent elements `N(R)`.
    #[serde(rename = "N")]
    Nil,
    /// `√J(R)`.
    #[serde(rename = "sqrtJ")]
    SqrtJ,
}

impl Radical {
    /// Witness exponent if `x` lies in the set.
    pub fn witness(self, r: &FiniteRing, x: Element) -> Option<u32> {
        match self {
            Radical::Nil => nilpotency_index(r, x),
            Radical::SqrtJ => in_sqrt_jacobson(r, x),
        }
    }

    pub fn contains(self, r: &FiniteRing, x: Element) -> bool {
        self.witness(r, x).is_some()
    }
}

/// `comm(a)` and `comm²(a)` with O(1) membership.
#[derive(Debug, Clone)]
pub struct Commutant {
    pub center: Element,
    comm: Vec<Element>,
    comm2: Vec<Element>,
    in_comm: Vec<bool>,
    in_comm2: Vec<bool>,
}

impl Commutant {
    pub fn of(r: &FiniteRing, a: Element) -> Commutant {
        let in_comm: Vec<bool> = r.elements().map(|x| r.mul(x, a) == r.mul(a, x)).collect();
        let comm: Vec<Element> = collect(r, |i| in_comm[i]);
        let in_comm2: Vec<bool> = r
            .elements()
            .map(|x| in_comm[x.index()] && comm.iter().all(|&y| r.mul(x, y) == r.mul(y, x)))
            .collect();
        let comm2 = collect(r, |i| in_comm2[i]);
        Commutant {
            center: a,
            comm,
            comm2,
            in_comm,
            in_comm2,
        }
    }

    pub fn comm(&self) -> &[Element] {
        &self.comm
    }

    pub fn comm2(&self) -> &[Element] {
        &self.comm2
    }

    pub fn in_comm(&self, x: Element) -> bool {
        self.in_comm[x.index()]
    }

    pub fn in_comm2(&self, x: Element) -> bool {
        self.in_comm2[x.index()]
    }
}

pub fn commutant(r: &FiniteRing, a: Element) -> Vec<Element> {
    r.elements()
        .filter(|&x| r.mul(x, a) == r.mul(a, x))
        .collect()
}

pub fn double_commutant(r: &FiniteRing, a: Element) -> Vec<Element> {
    Commutant::of(r, a).comm2
}

/// `R/J(R)` with the canonical projection.
#[derive(Debug)]
pub struct RadicalQuotient {
    pub ring: FiniteRing,
    parent_id: u64,
    class_of: Vec<u32>,
}

impl RadicalQuotient {
    pub fn project(&self, x: Element) -> Element {
        assert_eq!(
            x.ring_id(),
            self.parent_id,
            "projection of a foreign element"
        );
        self.ring.element(self.class_of[x.index()])
    }
}

/// Cosets of `J(R)`, each represented by its smallest canonical code.
pub fn quotient_by_radical(r: &FiniteRing) -> RadicalQuotient {
    let radical = jacobson_radical(r);
    let rep_of: Vec<u32> = r
        .elements()
        .map(|x| {
            radical
                .iter()
                .map(|&j| r.add(x, j).code())
                .min()
                .expect("0 is in J(R)")
        })
        .collect();
    let mut reps = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let class_of: Vec<u32> = rep_of
        .iter()
        .map(|c| reps.binary_search(c).expect("representative listed") as u32)
        .collect();
    let label = format!("{}/J", r.label());
    let ring = FiniteRing::quotient_of(r, reps, class_of.clone(), label);
    RadicalQuotient {
        ring,
        parent_id: r.id(),
        class_of,
    }
}

/// `J(R)` is closed under addition and two-sided multiplication.
pub fn radical_is_ideal(r: &FiniteRing, exec: Execution) -> bool {
    let j = jacobson_radical(r);
    all_indices(exec, j.len(), |i| {
        let x = j[i];
        j.iter().all(|&y| in_jacobson(r, r.add(x, y)))
            && r.elements()
                .all(|s| in_jacobson(r, r.mul(s, x)) && in_jacobson(r, r.mul(x, s)))
    })
}
