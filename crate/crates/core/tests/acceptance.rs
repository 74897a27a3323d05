//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero when the set of failures differs from `KNOWN_FAILURES`.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use weyl_lift::classes::{
    coset_lift_order, elliptic_classes, find_class, named_isogenies, verify_table, PowerKind, TableId,
    TableReport,
};
use weyl_lift::regular::{regular_power_witness, regularity, verify_regular_power};
use weyl_lift::rootdata::parse_group;
use weyl_lift::splitting::{
    coxeter_m, decide, splits_classification, splitting_classes, splittings_equivalent, Certificate,
};
use weyl_lift::torusnorm::{involution_square, multiply, power, projection_power, sigma};
use weyl_lift::weyl::{coxeter_element, enumerate, from_e_coords};
use weyl_lift::{RootDatum, TwistedWeylElt};

/// The F4 table lists order 8 for D4 and C3+A1; both classes have order 6.
const KNOWN_FAILURES: &[u32] = &[1];

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn collect(errors: Vec<String>) -> Check {
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

fn table(id: &str, isogenies: Option<&[&str]>) -> Result<TableReport, String> {
    let list: Option<Vec<String>> = isogenies.map(|l| l.iter().map(|s| s.to_string()).collect());
    verify_table(TableId::parse(id).map_err(|e| e.to_string())?, list.as_deref(), None).map_err(|e| e.to_string())
}

fn criterion_1() -> Check {
    let rep = table("F4", None)?;
    let mut errors = Vec::new();
    if rep.rows.len() != 9 {
        errors.push(format!("{} rows", rep.rows.len()));
    }
    for r in &rep.rows {
        let label = &r.record.label;
        if r.record.listed_order != Some(r.record.order) {
            errors.push(format!("{label}: listed order {:?}, o(w) = {}", r.record.listed_order, r.record.order));
        }
        for g in &r.per_isogeny {
            let (trivial, lift) = if label == "A3+~A1" { (false, 8) } else { (true, r.record.order) };
            if g.direct.is_none() || g.sigma_power.is_identity() != trivial || g.lift_order != lift || !g.agree {
                errors.push(format!("{label} in {}: o~ = {}", g.group, g.lift_order));
            }
        }
    }
    collect(errors)
}

fn criterion_2() -> Check {
    let rep = table("E7", Some(&["sc", "adjoint"]))?;
    let exceptions = ["E7(a2)", "A7", "2A3+A1"];
    let mut errors = Vec::new();
    for r in &rep.rows {
        let label = &r.record.label;
        let (sc, ad) = (&r.per_isogeny[0], &r.per_isogeny[1]);
        let expect_sc = if exceptions.contains(&label.as_str()) { PowerKind::Trivial } else { PowerKind::ZG };
        let formula_used = sc.formula.is_some() && ad.formula.is_some();
        let o = r.record.order;
        let sc_lift = if expect_sc == PowerKind::Trivial { o } else { 2 * o };
        if !formula_used || sc.kind != expect_sc || ad.kind != PowerKind::Trivial || sc.lift_order != sc_lift || ad.lift_order != o || !r.mismatches.is_empty() {
            errors.push(format!("{label}: sc {} ad {} {:?}", sc.kind.as_str(), ad.kind.as_str(), r.mismatches));
        }
    }
    ensure(rep.rows.len() == 12, || format!("{} rows", rep.rows.len()))?;
    collect(errors)
}

fn criterion_3() -> Check {
    let mut errors = Vec::new();
    for id in ["E8", "2E6", "E6", "3D4"] {
        let rep = table(id, None)?;
        for r in &rep.rows {
            for g in &r.per_isogeny {
                if !g.sigma_power.is_identity() || !g.agree {
                    errors.push(format!("{id} {} in {}", r.record.label, g.group));
                }
            }
            if !r.mismatches.is_empty() {
                errors.push(format!("{id} {}: {:?}", r.record.label, r.mismatches));
            }
        }
        if id == "2E6" {
            let row = rep.row("4254234565423456").ok_or("2E6 row missing")?;
            for g in &row.per_isogeny {
                if g.direct.is_none() || g.direct != g.formula {
                    errors.push(format!("2E6 word vs formula in {}", g.group));
                }
            }
        }
    }
    collect(errors)
}

fn two_adic(n: usize) -> u32 {
    n.trailing_zeros()
}

fn criterion_4() -> Check {
    let mut errors = Vec::new();
    for n in 2..=8 {
        let rep = table(&format!("C{n}"), Some(&["sc", "adjoint"]))?;
        for r in &rep.rows {
            let p = r.record.partition.as_ref().ok_or("missing partition")?;
            let same = p.iter().all(|&a| two_adic(a) == two_adic(p[0]));
            let (sc, ad) = (&r.per_isogeny[0], &r.per_isogeny[1]);
            let direct_ok = sc.direct.is_some() && ad.direct.is_some();
            let closed_ok = sc.closed_form == sc.direct && ad.closed_form == ad.direct;
            let ad_trivial = ad.direct.as_ref().is_some_and(|t| t.is_identity());
            let sc_trivial = sc.direct.as_ref().is_some_and(|t| t.is_identity());
            if !direct_ok || !closed_ok || ad_trivial != same || sc_trivial {
                errors.push(format!("C{n} {}", r.record.label));
            }
        }
    }
    collect(errors)
}

fn criterion_5() -> Check {
    let mut errors = Vec::new();
    let mut tables: Vec<(String, Vec<&str>)> = Vec::new();
    for n in 2..=8 {
        tables.push((format!("B{n}"), vec!["adjoint"]));
    }
    for n in 3..=8 {
        tables.push((format!("D{n}"), vec!["adjoint", "SO"]));
        tables.push((format!("2D{n}"), vec!["adjoint", "SO"]));
    }
    for (id, isos) in &tables {
        let rep = table(id, Some(isos))?;
        for r in &rep.rows {
            for g in &r.per_isogeny {
                if !g.sigma_power.is_identity() || !g.agree || g.direct.is_none() {
                    errors.push(format!("{id} {} in {}", r.record.label, g.group));
                }
            }
        }
    }
    for n in 3..=8usize {
        let twisted = (n - 1) % 2 == 1;
        let rd = RootDatum::named(&format!("D{n}"), "sc", "flip").map_err(|e| e.to_string())?;
        let recs = elliptic_classes(&rd, twisted).map_err(|e| e.to_string())?;
        let mut p = vec![2usize];
        p.extend(vec![1; n - 2]);
        let label = format!("[{}]", p.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","));
        let rec = find_class(&recs, &label).map_err(|e| e.to_string())?;
        let x = rec.rep.as_ref().ok_or("no representative")?;
        let direct = projection_power(&rd, &sigma(&rd, x)).1;
        let mut expected: Vec<i64> = vec![n as i64 - 1, n as i64 - 2];
        expected.extend((0..n as i64 - 2).rev().map(|k| 2 * k));
        let e: Vec<_> = expected.iter().map(|&k| weyl_lift::rational::q(k)).collect();
        let value = rd.torus_from_cochar(&from_e_coords(&rd, &e).map_err(|e| e.to_string())?);
        if direct != value || direct.is_identity() {
            errors.push(format!("Spin({}) {label}", 2 * n));
        }
    }
    collect(errors)
}

fn criterion_6() -> Check {
    let mut errors = Vec::new();
    for n in 2..=9usize {
        let rd = RootDatum::named(&format!("A{}", n - 1), "sc", "none").map_err(|e| e.to_string())?;
        let cox = TwistedWeylElt::from(coxeter_element(&rd));
        let (o, t) = projection_power(&rd, &sigma(&rd, &cox));
        if o != n as u64 || t != rd.z_g() {
            errors.push(format!("Coxeter in SL({n})"));
        }
    }
    for n in 3..=9usize {
        let rep = table(&format!("2A{}", n - 1), Some(&["sc"]))?;
        let rd = RootDatum::named(&format!("A{}", n - 1), "sc", "flip").map_err(|e| e.to_string())?;
        for r in &rep.rows {
            let g = &r.per_isogeny[0];
            if g.direct.as_ref() != Some(&rd.z_g()) || rd.z_g().is_identity() != (n % 2 == 1) {
                errors.push(format!("SL({n}) twisted {}", r.record.label));
            }
        }
    }
    collect(errors)
}

fn criterion_7() -> Check {
    let mut errors = Vec::new();
    let mut count = 0;
    let data = [
        ("A3", "none"),
        ("B3", "none"),
        ("C3", "none"),
        ("D4", "none"),
        ("G2", "none"),
        ("F4", "none"),
        ("A3", "flip"),
        ("D4", "flip"),
    ];
    for (t, d) in data {
        for iso in ["sc", "adjoint"] {
            let rd = RootDatum::named(t, iso, d).map_err(|e| e.to_string())?;
            for w in enumerate(&rd) {
                let x = TwistedWeylElt::new(&rd, w, rd.delta_order() - 1);
                if !x.is_twisted_involution(&rd).map_err(|e| e.to_string())? {
                    continue;
                }
                count += 1;
                let g = sigma(&rd, &x);
                let sq = multiply(&rd, &g, &g);
                let formula = involution_square(&rd, &x).map_err(|e| e.to_string())?;
                if !(sq.w.is_identity() && sq.j == 0 && sq.t == formula) {
                    errors.push(format!("{t} {iso} {d} {}", x.to_string(&rd)));
                }
            }
        }
    }
    ensure(count > 0, || "no involutions".into())?;
    collect(errors)
}

fn criterion_8() -> Check {
    let mut errors = Vec::new();
    let mut types: Vec<String> = Vec::new();
    for n in 1..=8 {
        types.push(format!("A{n}"));
    }
    for n in 2..=8 {
        types.push(format!("B{n}"));
    }
    for n in 3..=8 {
        types.push(format!("C{n}"));
    }
    for n in 4..=8 {
        types.push(format!("D{n}"));
    }
    types.extend(["G2", "F4", "E6", "E7", "E8"].map(String::from));
    for t in &types {
        let rd = RootDatum::named(t, "sc", "none").map_err(|e| e.to_string())?;
        let cox = TwistedWeylElt::from(coxeter_element(&rd));
        let rep = regularity(&rd, &cox);
        if !rep.z_regular || !verify_regular_power(&rd, &cox, rep.order).unwrap_or(false) {
            errors.push(format!("Coxeter of {t}"));
        }
    }
    let a5 = RootDatum::named("A5", "sc", "flip").map_err(|e| e.to_string())?;
    let x = TwistedWeylElt::parse(&a5, "13524-13524d").map_err(|e| e.to_string())?;
    let rep = regularity(&a5, &x);
    let six = projection_power(&a5, &sigma(&a5, &x));
    if rep.order != 6 || !rep.regular_orders.contains(&3) || six.0 != 6 || !six.1.is_identity() {
        errors.push("2A5 example".into());
    }
    // Every regular class has a member obeying the power law, and in the
    // adjoint group every regular element lifts with its own order.
    let scans = [("A2", "none"), ("A3", "flip"), ("B3", "none"), ("C3", "none"), ("G2", "none"), ("A1xA2", "none")];
    for (t, d) in scans {
        let sc = RootDatum::named(t, "sc", d).map_err(|e| e.to_string())?;
        let ad = RootDatum::named(t, "adjoint", d).map_err(|e| e.to_string())?;
        for w in enumerate(&sc) {
            for j in 0..sc.delta_order() {
                let x = TwistedWeylElt::new(&sc, w.clone(), j);
                let rep = regularity(&sc, &x);
                if rep.regular_orders.is_empty() {
                    continue;
                }
                for &dd in rep.regular_orders.iter().filter(|&&dd| dd > 1) {
                    for rd in [&sc, &ad] {
                        if !matches!(regular_power_witness(rd, &x, dd), Ok(Some(_))) {
                            errors.push(format!("{t} {} d={dd}", x.to_string(rd)));
                        }
                    }
                }
                if coset_lift_order(&ad, &x) != rep.order {
                    errors.push(format!("adjoint {t} {}: o~ != o", x.to_string(&ad)));
                }
            }
        }
    }
    collect(errors)
}

/// Relations checked by multiplying out images of random words, and
/// homomorphism on random pairs, independently of the search.
fn independent_check(rd: &RootDatum, cert: &Certificate) -> bool {
    let g = cert.generators(rd);
    let n = rd.rank();
    for i in 0..n {
        for j in 0..n {
            let prod = multiply(rd, &g[i], &g[j]);
            if !power(rd, &prod, coxeter_m(rd, i, j)).is_identity() {
                return false;
            }
        }
    }
    let mut rng = common::rng(3);
    (0..40).all(|_| {
        let (u, v) = (common::random_weyl(rd, &mut rng), common::random_weyl(rd, &mut rng));
        multiply(rd, &cert.image(rd, &u), &cert.image(rd, &v)) == cert.image(rd, &u.mul(&v))
    })
}

fn criterion_9() -> Check {
    let splits = [
        "PGL(2)", "SO(3)", "SO(5)", "PSp(4)", "SO(7)", "SO(9)", "SO(6)", "SO(8)", "PSO(6)", "PSO(8)", "SL(3)",
        "SL(5)", "SL(4)/mu2", "SO(4)", "PSL(4)", "G2",
    ];
    let no = ["SL(2)", "SL(4)", "SL(6)", "Sp(4)", "Sp(6)", "PSp(6)", "Spin(5)", "Spin(7)", "Spin(8)", "F4"];
    let mut errors = Vec::new();
    for g in splits {
        let rd = parse_group(g).map_err(|e| e.to_string())?;
        // SO(4) is not simple; only the search speaks for it.
        let class_ok = rd.simple_type().is_none() || splits_classification(&rd, false).map_err(|e| e.to_string())?.splits == Some(true);
        let v = decide(&rd, false, 8).map_err(|e| e.to_string())?;
        let cert_ok = v.certificate.as_ref().is_some_and(|c| independent_check(&rd, c));
        if !class_ok || !cert_ok || !v.obstructions.is_empty() {
            errors.push(format!("{g} should split"));
        }
    }
    let psl4 = parse_group("PSL(4)").map_err(|e| e.to_string())?;
    let reps = splitting_classes(&psl4, 8).map_err(|e| e.to_string())?;
    let distinct = reps.len() == 2
        && !splittings_equivalent(&psl4, &reps[0], &reps[1]).unwrap_or(true)
        && reps.iter().all(|c| independent_check(&psl4, c));
    if !distinct {
        errors.push(format!("PSL(4): {} classes of certificates", reps.len()));
    }
    for g in no {
        let rd = parse_group(g).map_err(|e| e.to_string())?;
        let class = splits_classification(&rd, false).map_err(|e| e.to_string())?;
        let v = decide(&rd, false, 8).map_err(|e| e.to_string())?;
        if class.splits != Some(false) || v.obstructions.is_empty() || v.certificate.is_some() {
            errors.push(format!("{g} should not split"));
        }
    }
    // Every named isogeny of rank at most 4 agrees with the classification.
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"] {
        for rd in named_isogenies(t, "none").map_err(|e| e.to_string())? {
            let class = splits_classification(&rd, false).map_err(|e| e.to_string())?;
            let v = decide(&rd, false, 8).map_err(|e| e.to_string())?;
            let ok = match class.splits {
                Some(true) => v.certificate.is_some(),
                Some(false) => !v.obstructions.is_empty() || class.classification_only,
                None => false,
            };
            if !ok {
                errors.push(format!("{} disagrees", rd.group_name()));
            }
        }
    }
    collect(errors)
}

fn criterion_10() -> Check {
    for seed in 0..1000 {
        common::associativity(seed)?;
    }
    common::sigma_multiplicative()?;
    common::delta_equivariance()?;
    common::odd_order_construction()?;
    Ok(())
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 10] = [
        (1, "F4 table reproduction", criterion_1),
        (2, "E7 verdicts", criterion_2),
        (3, "E8, 2E6, E6, 3D4 trivial powers", criterion_3),
        (4, "type C, n <= 8, every partition", criterion_4),
        (5, "types B/D, n <= 8", criterion_5),
        (6, "type A Coxeter and twisted powers", criterion_6),
        (7, "involution law", criterion_7),
        (8, "regularity", criterion_8),
        (9, "splitting", criterion_9),
        (10, "property suites", criterion_10),
    ];
    let mut failed = BTreeSet::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {id:>2} PASS  {name} ({secs:.1}s)"),
            Err(e) => {
                failed.insert(id);
                println!("criterion {id:>2} FAIL  {name} ({secs:.1}s): {e}");
            }
        }
    }
    let known: BTreeSet<u32> = KNOWN_FAILURES.iter().copied().collect();
    if failed != known {
        eprintln!("failing criteria {failed:?}, expected {known:?}");
        std::process::exit(1);
    }
}
