mod common;

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use weyl_lift::rational::frac;
use weyl_lift::regular::regularity;
use weyl_lift::splitting::{central_two_torsion, splitting_classes, splittings_equivalent, Certificate};
use weyl_lift::torusnorm::{delta_conjugate, multiply};
use weyl_lift::{RootDatum, TwistedWeylElt};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_associative(seed in any::<u64>()) {
        prop_assert_eq!(common::associativity(seed), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn delta_conjugation_is_an_automorphism(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for rd in common::data().into_iter().filter(|rd| rd.delta().is_some()) {
            let (x, y) = (common::random_elt(&rd, &mut rng), common::random_elt(&rd, &mut rng));
            let k = rng.gen_range(1..rd.delta_order());
            let lhs = delta_conjugate(&rd, &multiply(&rd, &x, &y), k);
            let rhs = multiply(&rd, &delta_conjugate(&rd, &x, k), &delta_conjugate(&rd, &y, k));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn regular_orders_are_class_invariants(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        for rd in common::data().into_iter().filter(|rd| rd.rank() <= 4) {
            let x = common::random_twisted(&rd, &mut rng);
            let u = TwistedWeylElt::from(common::random_weyl(&rd, &mut rng));
            let y = x.conjugate_by(&rd, &u);
            prop_assert_eq!(regularity(&rd, &x).regular_orders, regularity(&rd, &y).regular_orders);
        }
    }
}

#[test]
fn sigma_is_multiplicative_on_length_additive_pairs() {
    assert!(common::sigma_multiplicative().unwrap() > 0);
}

#[test]
fn sigma_commutes_with_delta() {
    common::delta_equivariance().unwrap();
}

#[test]
fn odd_order_elements_lift_with_the_same_order() {
    assert!(common::odd_order_construction().unwrap() > 0);
}

fn conjugate(rd: &RootDatum, c: &Certificate, rng: &mut ChaCha8Rng) -> Certificate {
    let mu: Vec<_> = (0..rd.rank()).map(|_| frac(rng.gen_range(0..12), 12)).collect();
    let t = c
        .t
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            let shift = rd.pair_simple(i, &mu);
            let mut v = ti.coords().to_vec();
            v[i] += shift;
            rd.torus_from_cochar(&v)
        })
        .collect();
    Certificate { t }
}

#[test]
fn equivalence_of_splittings_is_an_equivalence_relation() {
    let mut rng = common::rng(7);
    for g in ["PSL(4)", "SO(6)", "SO(8)", "SO(5)", "G2"] {
        let rd = weyl_lift::rootdata::parse_group(g).unwrap();
        let mut certs = splitting_classes(&rd, 4).unwrap();
        let reps = certs.len();
        for i in 0..reps {
            for z in central_two_torsion(&rd) {
                let twisted = Certificate { t: certs[i].t.iter().map(|t| rd.torus_add(t, &z)).collect() };
                if weyl_lift::splitting::verify_certificate(&rd, &twisted).is_ok() {
                    certs.push(twisted);
                }
            }
            for _ in 0..3 {
                let c = conjugate(&rd, &certs[i], &mut rng);
                certs.push(c);
            }
        }
        let eq: Vec<Vec<bool>> = certs
            .iter()
            .map(|a| certs.iter().map(|b| splittings_equivalent(&rd, a, b).unwrap()).collect())
            .collect();
        let m = certs.len();
        for a in 0..m {
            assert!(eq[a][a]);
            for b in 0..m {
                assert_eq!(eq[a][b], eq[b][a]);
                for c in 0..m {
                    assert!(!(eq[a][b] && eq[b][c]) || eq[a][c], "{g}");
                }
            }
        }
        // Distinct representatives stay distinct.
        for a in 0..reps {
            for b in 0..reps {
                assert_eq!(eq[a][b], a == b, "{g}");
            }
        }
    }
}
