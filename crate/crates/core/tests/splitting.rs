use weyl_lift::classes::named_isogenies;
use weyl_lift::splitting::{decide, obstruction_report, splits_classification, verify_certificate};

#[test]
fn classification_matches_evidence_up_to_rank_four() {
    let types = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"];
    for t in types {
        for rd in named_isogenies(t, "none").unwrap() {
            let name = rd.group_name();
            let class = splits_classification(&rd, false).unwrap();
            let v = decide(&rd, false, 8).unwrap();
            match class.splits {
                Some(true) => {
                    let c = v.certificate.as_ref().unwrap_or_else(|| panic!("{name}: no certificate"));
                    verify_certificate(&rd, c).unwrap();
                    assert!(obstruction_report(&rd).is_empty(), "{name}");
                }
                Some(false) => assert!(!v.obstructions.is_empty() || class.classification_only, "{name}"),
                None => panic!("{name}: unclassified"),
            }
        }
    }
}
