use num_complex::Complex64;
use proptest::prelude::*;

use links_gould::braid::BraidWord;
use links_gould::links_gould::r_lg21_special;
use links_gould::scalar::{
    equal_up_to_unit, normalize_unit, EvalPoint, Evaluate, ExtScalar, LaurentHalf, LaurentHalf2, Ring, Specialization, Terms,
    TermRecord, Unit,
};
use links_gould::tensor::{SparseVector, TensorRep};

fn laurent() -> impl Strategy<Value = LaurentHalf> {
    (-6i64..6, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(lo, c)| LaurentHalf::from_ints(lo, &c))
}

fn laurent2() -> impl Strategy<Value = LaurentHalf2> {
    prop::collection::vec((-4i64..=4, -3i64..=3, -3i64..=3), 0..5)
        .prop_map(|terms| terms.into_iter().fold(LaurentHalf2::zero(), |acc, (k, a, b)| acc.plus(&LaurentHalf2::int_monomial(k, a, b))))
}

fn ext() -> impl Strategy<Value = ExtScalar> {
    (laurent2(), laurent2()).prop_map(|(b, y)| ExtScalar::new(b, y))
}

fn braid() -> impl Strategy<Value = BraidWord> {
    (1usize..6, prop::collection::vec((1usize..6, any::<bool>()), 0..12)).prop_map(|(n, raw)| {
        let word: Vec<i64> = if n == 1 {
            Vec::new()
        } else {
            raw.into_iter().map(|(i, inv)| ((i - 1) % (n - 1) + 1) as i64 * if inv { -1 } else { 1 }).collect()
        };
        BraidWord::from_signed(n, &word).unwrap()
    })
}

fn ring_axioms<R: Ring + PartialEq + std::fmt::Debug>(a: &R, b: &R, c: &R) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.plus(b), b.plus(a));
    prop_assert_eq!(a.times(b), b.times(a));
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
    prop_assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    prop_assert_eq!(a.times(&R::one()), a.clone());
    prop_assert!(a.minus(a).is_zero());
    Ok(())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn ext_ring_axioms(a in ext(), b in ext(), c in ext()) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn specializations_are_morphisms(a in ext(), b in ext()) {
        for rule in [Specialization::T1ToInvT0, Specialization::T1ToOne] {
            prop_assert_eq!(a.times(&b).specialize(rule), a.specialize(rule).times(&b.specialize(rule)));
            prop_assert_eq!(a.plus(&b).specialize(rule), a.specialize(rule).plus(&b.specialize(rule)));
        }
    }

    #[test]
    fn swap_is_involutive_morphism(a in ext(), b in ext()) {
        prop_assert_eq!(a.swap_variables().swap_variables(), a.clone());
        prop_assert_eq!(a.times(&b).swap_variables(), a.swap_variables().times(&b.swap_variables()));
    }

    #[test]
    fn units_are_found_and_inverted(p in laurent(), shift in -8i64..8, neg in any::<bool>()) {
        prop_assume!(!p.is_zero());
        let u = Unit { sign: if neg { -1 } else { 1 }, shift };
        let q = u.apply(&p);
        prop_assert_eq!(equal_up_to_unit(&q, &p), Some(u));
        prop_assert_eq!(equal_up_to_unit(&p, &q), Some(u.inverse()));
        let (n1, _) = normalize_unit(&p);
        let (n2, _) = normalize_unit(&q);
        prop_assert_eq!(n1.clone(), n2);
        prop_assert_eq!(normalize_unit(&n1).1, Unit::ONE);
    }

    #[test]
    fn exact_division_inverts_product(p in laurent(), q in laurent()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).exact_divide(&q).unwrap(), p);
    }

    #[test]
    fn evaluation_is_a_morphism(a in laurent(), b in laurent(), re in 0.3f64..2.0, im in -1.0f64..1.0) {
        let at = EvalPoint::single(Complex64::new(re, im));
        let lhs = (&a * &b).evaluate(&at);
        let rhs = a.evaluate(&at) * b.evaluate(&at);
        prop_assert!((lhs - rhs).norm() <= 1e-8 * (1.0 + lhs.norm()));
    }

    #[test]
    fn term_records_round_trip(a in laurent(), e in ext()) {
        let json = serde_json::to_string(&a.to_records()).unwrap();
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(LaurentHalf::from_records(&back).unwrap(), a);
        let json = serde_json::to_string(&e.to_records()).unwrap();
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(ExtScalar::from_records(&back).unwrap(), e);
    }

    #[test]
    fn braid_text_round_trips(b in braid()) {
        prop_assert_eq!(BraidWord::parse(&b.to_string(), b.strands()).unwrap(), b);
    }

    #[test]
    fn hat_is_an_involutive_homomorphism(a in braid(), extra in prop::collection::vec((1usize..6, any::<bool>()), 0..6)) {
        prop_assert_eq!(a.hat().hat(), a.clone());
        let n = a.strands();
        let word: Vec<i64> = if n == 1 { Vec::new() } else {
            extra.into_iter().map(|(i, inv)| ((i - 1) % (n - 1) + 1) as i64 * if inv { -1 } else { 1 }).collect()
        };
        let b = BraidWord::from_signed(n, &word).unwrap();
        prop_assert_eq!(a.concat(&b).unwrap().hat(), a.hat().concat(&b.hat()).unwrap());
        prop_assert_eq!(a.hat().closure_components(), a.closure_components());
    }

    #[test]
    fn word_times_inverse_is_identity(b in braid(), idx in 0u64..64) {
        prop_assume!(b.strands() <= 3);
        let rep = TensorRep::new(r_lg21_special());
        let n = b.strands();
        let v = SparseVector::basis(4, n, idx % 4u64.pow(n as u32));
        let w = b.concat(&b.inverse()).unwrap();
        prop_assert_eq!(rep.apply_word(&w, &v).unwrap(), v);
    }
}
