//! Randomized property suites for the exact polyhedral kernel.

use exactla::cone::{positive_on_cone, Positivity};
use exactla::vector::{self, dot, QVec, Rat};
use exactla::{cone_membership, positive_envelope, ConeDescription};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn qvec(dim: usize) -> impl Strategy<Value = QVec> {
    proptest::collection::vec(-5i64..=5, dim).prop_map(|v| v.iter().map(|&x| vector::rat(x)).collect())
}

fn gens(dim: usize, max_n: usize) -> impl Strategy<Value = Vec<QVec>> {
    proptest::collection::vec(qvec(dim), 1..=max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // Any generator lying in the span of the positive envelope must
    // itself belong to the envelope.
    #[test]
    fn envelope_allin((dim, generators, coeffs) in (1usize..=5)
        .prop_flat_map(|d| (Just(d), gens(d, 8)))
        .prop_flat_map(|(d, g)| {
            let n = g.len();
            (Just(d), Just(g), proptest::collection::vec(0i64..=4, n))
        }))
    {
        let target: QVec = (0..dim)
            .map(|c| {
                let mut acc = Rat::zero();
                for (x, g) in coeffs.iter().zip(&generators) {
                    acc += vector::rat(*x) * &g[c];
                }
                acc
            })
            .collect();
        let env = positive_envelope(&target, &generators).unwrap();
        let span: Vec<QVec> = env.iter().map(|&i| generators[i].clone()).collect();
        for (i, g) in generators.iter().enumerate() {
            if exactla::span_contains(&span, g) {
                prop_assert!(env.contains(&i), "generator {} in span but not in envelope", i);
            }
        }
    }

    // Envelope output is independent of generator ordering.
    #[test]
    fn envelope_permutation_invariant((dim, generators, coeffs) in (1usize..=4)
        .prop_flat_map(|d| (Just(d), gens(d, 6)))
        .prop_flat_map(|(d, g)| {
            let n = g.len();
            (Just(d), Just(g), proptest::collection::vec(0i64..=3, n))
        }))
    {
        let target: QVec = (0..dim)
            .map(|c| {
                let mut acc = Rat::zero();
                for (x, g) in coeffs.iter().zip(&generators) {
                    acc += vector::rat(*x) * &g[c];
                }
                acc
            })
            .collect();
        let env = positive_envelope(&target, &generators).unwrap();
        let envelope_vectors: Vec<&QVec> = env.iter().map(|&i| &generators[i]).collect();
        // reverse the generator list and recompute
        let rev: Vec<QVec> = generators.iter().rev().cloned().collect();
        let env_rev = positive_envelope(&target, &rev).unwrap();
        let n = generators.len();
        let mut mapped: Vec<usize> = env_rev.iter().map(|&i| n - 1 - i).collect();
        mapped.sort();
        let mapped_vectors: Vec<&QVec> = mapped.iter().map(|&i| &generators[i]).collect();
        prop_assert_eq!(envelope_vectors, mapped_vectors);
    }

    // Membership witnesses reproduce the target exactly.
    #[test]
    fn membership_witness_reproduces((dim, generators, target) in (1usize..=5)
        .prop_flat_map(|d| (Just(d), gens(d, 8), qvec(d))))
    {
        if let Some(w) = cone_membership(&target, &generators).unwrap() {
            let mut acc = vector::zeros(dim);
            for (x, g) in w.iter().zip(&generators) {
                prop_assert!(!x.is_negative());
                for (a, gi) in acc.iter_mut().zip(g) {
                    *a += x * gi;
                }
            }
            prop_assert_eq!(acc, target);
        }
    }

    // Extreme rays satisfy every inequality exactly; random nonnegative
    // combinations of rays are members; points violating an inequality are
    // rejected by membership.
    #[test]
    fn extreme_ray_reconstruction((dim, ineqs, combo, probe) in (2usize..=4)
        .prop_flat_map(|d| (Just(d), gens(d, 6)))
        .prop_flat_map(|(d, i)| {
            (Just(d), Just(i), proptest::collection::vec(0i64..=3, 12), qvec(d))
        }))
    {
        let cone = ConeDescription::new(dim, ineqs.clone());
        let data = cone.rays();
        for r in &data.rays {
            for a in &ineqs {
                prop_assert!(!dot(a, r).is_negative(), "ray violates an inequality");
            }
        }
        for l in &data.lineality {
            for a in &ineqs {
                prop_assert!(dot(a, l).is_zero(), "lineality not annihilated");
            }
        }
        // random nonnegative combination of rays (plus lineality parts)
        let mut x = vector::zeros(dim);
        let mut k = 0;
        for r in data.rays.iter().chain(&data.lineality) {
            let c = vector::rat(combo[k % combo.len()]);
            k += 1;
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi += &c * ri;
            }
        }
        prop_assert!(cone.contains(&x), "combination of rays not a member");
        // probe points violating some inequality are rejected
        if ineqs.iter().any(|a| dot(a, &probe).is_negative()) {
            prop_assert!(!cone.contains(&probe));
        }
        // reconstruction: every LP-feasible probe is a combination of rays
        // and lineality directions
        if cone.contains(&probe) {
            let mut gens_both: Vec<QVec> = data.rays.clone();
            for l in &data.lineality {
                gens_both.push(l.clone());
                gens_both.push(vector::neg(l));
            }
            prop_assert!(
                cone_membership(&probe, &gens_both).unwrap().is_some(),
                "member not reconstructible from rays"
            );
        }
    }

    // positive_on_cone failure always carries a valid witness.
    #[test]
    fn positivity_failure_witness((dim, ineqs, f) in (2usize..=4)
        .prop_flat_map(|d| (Just(d), gens(d, 5), qvec(d))))
    {
        let cone = ConeDescription::new(dim, ineqs);
        if let Positivity::Fails { witness, value } = positive_on_cone(&f, &cone) {
            prop_assert!(!vector::is_zero_vec(&witness));
            prop_assert!(cone.contains(&witness));
            prop_assert!(!value.is_positive());
            prop_assert_eq!(dot(&f, &witness), value);
        }
    }
}
