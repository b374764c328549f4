use parkgram::algebra::{
    int, rat, Assignment, Monomial, NeutralFunctional, Polynomial, Rational, Var,
};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(-2i64..=3, 3)
        .prop_map(|es| Monomial::from_pairs(VARS.iter().zip(es).map(|(v, e)| (Var::new(v), e))))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), rational()), 0..5).prop_map(Polynomial::from_terms)
}

fn assignment() -> impl Strategy<Value = Assignment> {
    prop::collection::vec(nonzero_rational(), 3)
        .prop_map(|vals| VARS.iter().map(|v| Var::new(v)).zip(vals).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_is_commutative_and_associative(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn additive_inverse(p in polynomial()) {
        prop_assert!((&p + &p.scale(&int(-1))).is_zero());
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(-(-p.clone()), p);
    }

    #[test]
    fn results_stay_canonical(p in polynomial(), q in polynomial(), k in rational(), n in 0u32..4) {
        for r in [&p + &q, &p - &q, &p * &q, p.scale(&k), p.pow(n)] {
            prop_assert!(r.is_canonical());
            for (m, c) in r.terms() {
                prop_assert!(!num_traits::Zero::is_zero(c));
                prop_assert!(m.iter().all(|(_, e)| e != 0));
            }
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in polynomial(), q in polynomial(), s in assignment()) {
        let sp = p.evaluate(&s).unwrap();
        let sq = q.evaluate(&s).unwrap();
        prop_assert_eq!((&p * &q).evaluate(&s).unwrap(), &sp * &sq);
        prop_assert_eq!((&p + &q).evaluate(&s).unwrap(), sp + sq);
    }

    #[test]
    fn partial_substitution_composes(p in polynomial(), s in assignment()) {
        let mut first = s.clone();
        first.remove(&Var::new("z"));
        let staged = p.substitute(&first).unwrap();
        prop_assert_eq!(staged.evaluate(&s).unwrap(), p.evaluate(&s).unwrap());
    }

    #[test]
    fn neutral_hook_matches_plain_evaluation(p in polynomial(), s in assignment()) {
        let hooked = p.eval_with_functional(&s, &NeutralFunctional::default()).unwrap();
        let constant = p.substitute(&s).unwrap().as_constant().unwrap();
        prop_assert_eq!(hooked, constant);
    }

    #[test]
    fn display_parses_back(p in polynomial()) {
        let back: Polynomial = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip(p in polynomial()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn zero_into_negative_power_is_an_error() {
    let p: Polynomial = "x^-2 + 1".parse().unwrap();
    let s: Assignment = [(Var::new("x"), int(0))].into_iter().collect();
    assert!(p.evaluate(&s).is_err());
}
