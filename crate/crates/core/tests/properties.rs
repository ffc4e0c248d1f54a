use proptest::prelude::*;
use ringlab::identities::{Mode, SweepContext, Theorem};
use ringlab::inverses::{gzhou_constructive, inverse_bruteforce, verify_certificate, InverseKind};
use ringlab::ring::ArithOp;
use ringlab::{Execution, FiniteRing, RingExpr};

const SMALL: [&str; 10] = [
    "Z1",
    "Z7",
    "Z12",
    "Z16",
    "M2(Z2)",
    "T2(Z3)",
    "Z4 x Z2",
    "Z2 x (Z2 x Z3)",
    "T3(Z2)",
    "M2(Z3)",
];

fn ring(s: &str) -> FiniteRing {
    FiniteRing::parse(s).unwrap()
}

#[test]
fn ring_axioms() {
    for s in SMALL {
        let r = ring(s);
        let (zero, one) = (r.zero(), r.one());
        for x in r.elements() {
            assert_eq!(r.add(x, zero), x, "{s}");
            assert_eq!(r.add(x, r.neg(x)), zero, "{s}");
            assert_eq!(r.mul(x, one), x, "{s}");
            assert_eq!(r.mul(one, x), x, "{s}");
            for y in r.elements() {
                assert_eq!(r.add(x, y), r.add(y, x), "{s}");
            }
        }
    }
}

#[test]
fn m2z2_associative_and_distributive() {
    let r = ring("M2(Z2)");
    for x in r.elements() {
        for y in r.elements() {
            for z in r.elements() {
                assert_eq!(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
                assert_eq!(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
                assert_eq!(r.mul(r.add(x, y), z), r.add(r.mul(x, z), r.mul(y, z)));
            }
        }
    }
}

#[test]
fn cayley_tables_match_structural_arithmetic() {
    for s in [
        "Z12",
        "M2(Z2)",
        "T2(Z3)",
        "Z4 x Z2",
        "M2(Z3)",
        "T2(Z4) x Z2",
    ] {
        let r = ring(s);
        assert!(r.has_tables(), "{s}");
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(r.add(x, y), r.structural(ArithOp::Add, x, y), "{s}");
                assert_eq!(r.mul(x, y), r.structural(ArithOp::Mul, x, y), "{s}");
            }
        }
    }
}

#[test]
fn orbit_closes_at_index_plus_period() {
    for s in [
        "Z12",
        "Z16",
        "M2(Z2)",
        "T2(Z3)",
        "M2(Z3)",
        "T2(Z4) x Z2",
        "M2(Z4)",
    ] {
        let r = ring(s);
        for a in r.elements() {
            let o = r.power_orbit(a);
            let (k, l) = (o.index as u64, o.period as u64);
            assert_eq!(r.pow(a, k + l), r.pow(a, k), "{s}");
            // k is minimal
            if k > 1 {
                assert!(
                    (1..=l).all(|j| r.pow(a, k - 1 + j) != r.pow(a, k - 1)),
                    "{s}"
                );
            }
        }
    }
}

/// Exhaustive on rings up to 256 elements.
#[test]
fn construction_matches_definitional_search() {
    for s in [
        "Z2",
        "Z9",
        "Z16",
        "Z30",
        "M2(Z2)",
        "T2(Z3)",
        "Z4 x Z2",
        "T3(Z2)",
        "M2(Z3)",
        "T2(Z4) x Z2",
        "M2(Z4)",
    ] {
        let r = ring(s);
        assert!(r.cardinality() <= 256);
        for a in r.elements() {
            let built = gzhou_constructive(&r, a).unwrap();
            let found = inverse_bruteforce(&r, a, InverseKind::GZhou)
                .unwrap()
                .unwrap();
            assert_eq!(built.b, found.b, "{s}, a = {}", r.format_element(a));
            assert!(verify_certificate(&r, &found).ok);
        }
    }
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let r = ring("M2(Z2)");
    let seq = SweepContext::new(&r, Execution::Sequential).unwrap();
    let par = SweepContext::new(&r, Execution::Parallel).unwrap();
    for t in Theorem::ALL {
        for mode in [
            Mode::Exhaustive,
            Mode::Sampled {
                samples: 200,
                seed: 11,
            },
        ] {
            let mut a = t.run(&seq, mode).unwrap();
            let mut b = t.run(&par, mode).unwrap();
            a.duration_ms = 0;
            b.duration_ms = 0;
            assert_eq!(a, b, "{t}");
        }
    }
}

fn small_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = (1u64..=12).prop_map(RingExpr::zmod);
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RingExpr::product(a, b)),
            (1usize..=2, inner.clone()).prop_map(|(k, b)| RingExpr::matrix(k, b)),
            (1usize..=2, inner).prop_map(|(k, b)| RingExpr::upper_tri(k, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn element_text_round_trips(expr in small_expr(), seed in any::<u32>()) {
        prop_assume!(expr.cardinality() <= 4096);
        let r = FiniteRing::build(&expr, Default::default()).unwrap();
        prop_assert_eq!(r.cardinality() as u128, expr.cardinality());
        let x = r.element(seed % r.cardinality() as u32);
        prop_assert_eq!(r.parse_element(&r.format_element(x)).unwrap(), x);
    }

    #[test]
    fn zmod_inverse_paths_agree(n in 1u32..=120, a in any::<u32>()) {
        let r = FiniteRing::parse(&format!("Z{n}")).unwrap();
        let a = r.element(a % n);
        let built = gzhou_constructive(&r, a).unwrap();
        let found = inverse_bruteforce(&r, a, InverseKind::GZhou).unwrap().unwrap();
        prop_assert_eq!(built.b, found.b);
        prop_assert_eq!(built.p, found.p);
    }

    #[test]
    fn power_laws(n in 1u32..=60, a in any::<u32>(), i in 0u64..40, j in 0u64..40) {
        let r = FiniteRing::parse(&format!("Z{n}")).unwrap();
        let a = r.element(a % n);
        prop_assert_eq!(r.mul(r.pow(a, i), r.pow(a, j)), r.pow(a, i + j));
    }
}
