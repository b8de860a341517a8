//! Property tests for the exact arithmetic layer and the class-function
//! operations: ring laws in `Q(zeta_N)`, conjugation as a ring
//! automorphism, promotion consistency, agreement of the hybrid rational
//! with big-rational arithmetic, and decomposition round trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use kleinian::chartab::{character_of, character_table, decompose, KClass};
use kleinian::exactnum::euler_phi;
use kleinian::matgroup::{Group, GroupSpec};
use kleinian::{Cyclotomic, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

/// A random element of `Q(zeta_N)` for the given conductor.
fn cyclotomic_at(n: u32) -> impl Strategy<Value = Cyclotomic> {
    let phi = euler_phi(n) as usize;
    proptest::collection::vec(small_rational(), phi).prop_map(move |coeffs| {
        let terms: Vec<(u32, Rational)> = coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic::from_terms(n, &terms)
    })
}

/// (a, b, c) sharing one conductor `N <= 40`.
fn same_conductor_triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=40).prop_flat_map(|n| (cyclotomic_at(n), cyclotomic_at(n), cyclotomic_at(n)))
}

proptest! {
    #[test]
    fn distributivity((a, b, c) in same_conductor_triple()) {
        let lhs = &(&a + &b) * &c;
        let rhs = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_is_associative_and_commutative((a, b, c) in same_conductor_triple()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn inverse_is_two_sided((a, _, _) in same_conductor_triple()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&a * &inv, Cyclotomic::one());
        prop_assert_eq!(&inv * &a, Cyclotomic::one());
    }

    #[test]
    fn conjugation_is_a_ring_automorphism((a, b, _) in same_conductor_triple()) {
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn mixed_conductor_arithmetic(
        na in 1u32..=12, nb in 1u32..=12, ka in 0i64..12, kb in 0i64..12,
    ) {
        // zeta_na^ka * zeta_nb^kb = zeta_lcm^(ka*lcm/na + kb*lcm/nb)
        let a = Cyclotomic::root_of_unity(na, ka);
        let b = Cyclotomic::root_of_unity(nb, kb);
        let l = num_integer::lcm(na, nb);
        let expected = Cyclotomic::root_of_unity(
            l,
            ka * (l / na) as i64 + kb * (l / nb) as i64,
        );
        prop_assert_eq!(&a * &b, expected);
    }

    #[test]
    fn roots_of_unity_are_unitary(n in 1u32..=40, k in 0i64..40) {
        let z = Cyclotomic::root_of_unity(n, k);
        prop_assert_eq!(&z * &z.conjugate(), Cyclotomic::one());
    }

    #[test]
    fn promotion_round_trip_for_rationals(r in small_rational(), m in 1u32..=24) {
        let v = Cyclotomic::from_rational(r.clone());
        let promoted = v.promote(m);
        prop_assert!(promoted.is_rational());
        prop_assert_eq!(promoted.to_rational().unwrap(), r);
        prop_assert_eq!(promoted, v);
    }

    #[test]
    fn hybrid_rational_matches_big_rational(
        an in any::<i64>(), ad in 1i64.., bn in any::<i64>(), bd in 1i64..,
    ) {
        let a = Rational::new(an, ad);
        let b = Rational::new(bn, bd);
        let big = |r: &Rational| r.to_big();
        let from_big = |r: BigRational| Rational::from_big(r);
        prop_assert_eq!(&a + &b, from_big(big(&a) + big(&b)));
        prop_assert_eq!(&a - &b, from_big(big(&a) - big(&b)));
        prop_assert_eq!(&a * &b, from_big(big(&a) * big(&b)));
        if !b.is_zero() {
            prop_assert_eq!(&a / &b, from_big(big(&a) / big(&b)));
        }
    }

    #[test]
    fn rational_display_parses_back(an in any::<i64>(), ad in 1i64..) {
        let a = Rational::new(an, ad);
        let parsed: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn cyclotomic_display_parses_back((a, _, _) in same_conductor_triple()) {
        let parsed: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_round_trips_on_integer_vectors(
        seed in proptest::collection::vec(-4i64..=4, 7),
        which in 0usize..3,
    ) {
        let spec = [
            GroupSpec::Cyclic(6),
            GroupSpec::BinaryDihedral(3),
            GroupSpec::BinaryTetrahedral,
        ][which];
        let t = character_table(Group::build(spec).unwrap()).unwrap();
        let mults: Vec<i64> = (0..t.irreps.len()).map(|i| seed[i % seed.len()]).collect();
        let k = KClass(mults);
        let f = character_of(&t, &k).unwrap();
        prop_assert_eq!(decompose(&t, &f).unwrap(), k);
    }
}

#[test]
fn rational_big_boundary() {
    // i64::MIN negation must promote, not wrap.
    let a = Rational::from_int(i64::MIN);
    let neg = -&a;
    assert_eq!(
        neg.to_big(),
        BigRational::from_integer(-BigInt::from(i64::MIN))
    );
    assert_eq!(-&neg, a);
}
