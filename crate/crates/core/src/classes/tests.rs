use super::*;
use crate::rootdata::RootDatum;
use crate::torusnorm::{multiply, power, projection_power};
use crate::weyl::to_e_coords;

fn rd(t: &str, iso: &str, delta: &str) -> RootDatum {
    RootDatum::named(t, iso, delta).unwrap()
}

#[test]
fn record_counts() {
    assert_eq!(elliptic_classes(&rd("A4", "sc", "none"), false).unwrap().len(), 1);
    assert_eq!(elliptic_classes(&rd("A5", "sc", "flip"), true).unwrap().len(), 4);
    assert_eq!(elliptic_classes(&rd("C4", "sc", "none"), false).unwrap().len(), 5);
    assert_eq!(elliptic_classes(&rd("D4", "sc", "flip"), false).unwrap().len(), 3);
    assert_eq!(elliptic_classes(&rd("D4", "sc", "flip"), true).unwrap().len(), 2);
    assert_eq!(elliptic_classes(&rd("F4", "sc", "none"), false).unwrap().len(), 9);
    assert_eq!(elliptic_classes(&rd("G2", "sc", "none"), false).unwrap().len(), 3);
    assert_eq!(elliptic_classes(&rd("E7", "sc", "none"), false).unwrap().len(), 12);
    assert_eq!(elliptic_classes(&rd("E8", "sc", "none"), false).unwrap().len(), 8);
    assert_eq!(elliptic_classes(&rd("B3", "sc", "none"), true), Err(Error::NoDelta));
    assert!(matches!(elliptic_classes(&rd("A1xA1", "sc", "none"), false), Err(Error::NotSimple(_))));
}

#[test]
fn classical_orders() {
    for (t, delta, tw) in [("B4", "none", false), ("C4", "none", false), ("D5", "flip", false), ("D5", "flip", true), ("A6", "flip", true)] {
        for r in elliptic_classes(&rd(t, "sc", delta), tw).unwrap() {
            let p = r.partition.clone().unwrap();
            assert_eq!(r.order, 2 * lcm(&p), "{t} {p:?}");
            assert!(r.rep.as_ref().unwrap().is_elliptic(&rd(t, "sc", delta)));
        }
    }
}

#[test]
fn f4_words_against_char_polys() {
    let f4 = rd("F4", "sc", "none");
    for r in elliptic_classes(&f4, false).unwrap() {
        let expected = expected_char_poly(&r.label).unwrap();
        assert_eq!(r.char_poly.as_ref(), Some(&expected), "{}", r.label);
        assert_eq!(r.order, order_of(&expected));
        assert!(length_identity(&f4, r.rep.as_ref().unwrap(), r.order, r.good_data.as_ref().unwrap()), "{}", r.label);
    }
}

#[test]
fn tabulated_orders_match_labels() {
    // Every E7/E8 row whose label determines a characteristic polynomial
    // has the matching order, except the order-12 copy of E6(a2)+A2.
    for t in ["E7", "E8"] {
        for r in elliptic_classes(&rd(t, "sc", "none"), false).unwrap() {
            if let Some(f) = &r.char_poly {
                let ok = order_of(f) == r.order;
                assert_eq!(ok, r.label != "E6(a2)+A2 (o=12)", "{}", r.label);
            }
        }
    }
}

#[test]
fn twisted_e6_row() {
    let e6 = rd("E6", "sc", "flip");
    let recs = elliptic_classes(&e6, true).unwrap();
    let row = recs.iter().find(|r| r.label == "4254234565423456").unwrap();
    assert_eq!(row.order, 6);
    let direct = projection_power(&e6, &sigma(&e6, row.rep.as_ref().unwrap())).1;
    assert_eq!(direct, power_closed_form(&e6, row).unwrap().0);
    assert!(length_identity(&e6, row.rep.as_ref().unwrap(), 6, row.good_data.as_ref().unwrap()));
}

#[test]
fn e6_names() {
    let e6 = rd("E6", "sc", "none");
    let labels: Vec<String> = elliptic_classes(&e6, false).unwrap().into_iter().map(|r| r.label).collect();
    for l in ["E6", "E6(a1)", "E6(a2)", "A5+A1", "3A2"] {
        assert!(labels.contains(&l.to_string()), "{l} in {labels:?}");
    }
    assert_eq!(labels.len(), 5);
}

#[test]
fn spin_example() {
    for n in [4usize, 5, 6] {
        let tw = (n - 1) % 2 == 1;
        let d = rd(&format!("D{n}"), "sc", "flip");
        let mut p = vec![2];
        p.extend(vec![1; n - 2]);
        let recs = elliptic_classes(&d, tw).unwrap();
        let r = find_class(&recs, &partition_label(&p)).unwrap();
        let (value, kind) = power_closed_form(&d, r).unwrap();
        assert_ne!(kind, PowerKind::Trivial);
        let good = bd_good_data(d.simple_type().unwrap(), &p);
        let tau: Vec<Q> = good.iter().fold(vec![Q::from_integer(0.into()); n], |acc, (s, e)| {
            let r = d.rho_check(s);
            acc.iter().zip(&r).map(|(a, b)| a + b * Q::from_integer((*e as i64).into()) / Q::from_integer(2.into())).collect()
        });
        let mut expected: Vec<i64> = vec![n as i64 - 1, n as i64 - 2];
        expected.extend((0..n as i64 - 2).rev().map(|k| 2 * k));
        let std: Vec<Q> = to_e_coords(&d, &tau).unwrap();
        assert_eq!(std, expected.iter().map(|&k| Q::from_integer(k.into())).collect::<Vec<_>>(), "n = {n}");
        assert_eq!(value, d.torus_from_cochar(&tau));
    }
}

#[test]
fn type_c_power_of_two() {
    let ad = rd("C5", "adjoint", "none");
    let recs = elliptic_classes(&ad, false).unwrap();
    let kind = |p: &str| power_closed_form(&ad, find_class(&recs, p).unwrap()).unwrap().1;
    assert_eq!(kind("[4,1]"), PowerKind::Nontrivial);
    assert_eq!(kind("[3,1,1]"), PowerKind::Trivial);
    let ad4 = rd("C4", "adjoint", "none");
    let recs4 = elliptic_classes(&ad4, false).unwrap();
    assert_eq!(power_closed_form(&ad4, find_class(&recs4, "(2,2)").unwrap()).unwrap().1, PowerKind::Trivial);
}

#[test]
fn epsilon() {
    for n in 1..=5 {
        let a = rd(&format!("A{n}"), "sc", "flip");
        let e = epsilon_element(&a).unwrap();
        let sq = multiply(&a, &e, &e);
        assert!(sq.projection().is_identity());
        assert_eq!(sq.t, a.z_g());
        // conjugation by epsilon inverts the torus
        let t = a.torus_from_cochar(&a.fundamental_coweights()[0]);
        let conj = multiply(&a, &multiply(&a, &e, &NormalizerElt::torus(&a, t.clone())), &crate::torusnorm::inverse(&a, &e));
        assert_eq!(conj.t, a.torus_neg(&t));
    }
    assert!(epsilon_element(&rd("B2", "sc", "none")).is_err());
    // (Cox_3-block epsilon)^6 in SL(3)
    let a2 = rd("A2", "sc", "flip");
    let recs = elliptic_classes(&a2, true).unwrap();
    let x = find_class(&recs, "[3]").unwrap().rep.clone().unwrap();
    let p = power(&a2, &sigma(&a2, &x), 6);
    assert!(p.is_identity());
}

#[test]
fn word_files() {
    let text = "# comment\nE7: 1234567\n\n";
    let e7 = rd("E7", "sc", "none");
    let words = parse_word_file(text).unwrap();
    assert_eq!(words, vec![("E7".to_string(), "1234567".to_string())]);
    let mut recs = elliptic_classes(&e7, false).unwrap();
    attach_words(&e7, &mut recs, &words).unwrap();
    assert!(recs[0].rep.is_some());
    let bad = vec![("E7(a1)".to_string(), "1234567".to_string())];
    assert!(matches!(attach_words(&e7, &mut recs, &bad), Err(Error::InvalidWord(_))));
    assert!(parse_word_file("nonsense").is_err());
}
