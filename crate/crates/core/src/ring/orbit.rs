use std::collections::HashMap;

use super::{Element, FiniteRing};

/// The eventually-periodic sequence of positive powers of an element.
///
/// `index` is the smallest `k` with `a^k` on the cycle and `period` the
/// smallest `l` with `a^(k+l) = a^k`; `orbit` holds `a^1, …, a^(k+l-1)`,
/// which are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerOrbit {
    pub base: Element,
    pub index: u32,
    pub period: u32,
    pub orbit: Vec<Element>,
}

impl PowerOrbit {
    pub(crate) fn compute(ring: &FiniteRing, a: Element) -> PowerOrbit {
        let mut seen: HashMap<u32, u32> = HashMap::new();
        let mut orbit = Vec::new();
        let mut x = a;
        let mut exp = 1u32;
        loop {
            if let Some(&first) = seen.get(&x.code()) {
                return PowerOrbit {
                    base: a,
                    index: first,
                    period: exp - first,
                    orbit,
                };
            }
            seen.insert(x.code(), exp);
            orbit.push(x);
            x = ring.mul(x, a);
            exp += 1;
        }
    }

    /// `k + l`: every power condition over `n ≥ 1` is decided by `n ∈ [1, k+l]`.
    pub fn search_bound(&self) -> u32 {
        self.index + self.period
    }

    /// `a^n` for `n ≥ 1`, read off the orbit.
    pub fn power(&self, n: u64) -> Element {
        assert!(n >= 1, "orbit powers start at 1");
        let (k, l) = (self.index as u64, self.period as u64);
        let reduced = if n < k { n } else { k + (n - k) % l };
        self.orbit[reduced as usize - 1]
    }

    /// Smallest multiple of the period that is at least the index; `a^m` is idempotent.
    pub fn idempotent_exponent(&self) -> u32 {
        self.index.div_ceil(self.period) * self.period
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::FiniteRing;

    #[test]
    fn z5_two_has_period_four() {
        let r = FiniteRing::parse("Z5").unwrap();
        let o = r.power_orbit(r.element(2));
        assert_eq!((o.index, o.period), (1, 4));
        let codes: Vec<u32> = o.orbit.iter().map(|e| e.code()).collect();
        assert_eq!(codes, vec![2, 4, 3, 1]);
    }

    #[test]
    fn z4_two_has_index_two() {
        let r = FiniteRing::parse("Z4").unwrap();
        let o = r.power_orbit(r.element(2));
        assert_eq!((o.index, o.period), (2, 1));
        let codes: Vec<u32> = o.orbit.iter().map(|e| e.code()).collect();
        assert_eq!(codes, vec![2, 0]);
    }

    #[test]
    fn one_is_fixed() {
        for s in ["Z1", "Z7", "M2(Z2)", "T2(Z3) x Z2"] {
            let r = FiniteRing::parse(s).unwrap();
            let o = r.power_orbit(r.one());
            assert_eq!((o.index, o.period), (1, 1));
        }
    }

    #[test]
    fn orbit_power_matches_pow() {
        let r = FiniteRing::parse("Z12").unwrap();
        for a in r.elements() {
            let o = r.power_orbit(a);
            for n in 1..40 {
                assert_eq!(o.power(n), r.pow(a, n));
            }
            let m = o.idempotent_exponent() as u64;
            let p = r.pow(a, m);
            assert_eq!(r.mul(p, p), p);
        }
    }
}
