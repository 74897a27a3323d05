use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weyl-lift")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("weyl-lift-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn describe() {
    let f4 = json(&["describe", "F4", "--isogeny", "adjoint"]);
    assert_eq!((f4["roots"].as_u64(), f4["rho_check_in_lattice"].as_bool()), (Some(48), Some(true)));
    assert_eq!(json(&["describe", "E7", "--isogeny", "sc"])["rho_check_in_lattice"], false);
    assert_eq!(json(&["describe", "A2:sc"])["center_order"], 3);
}

#[test]
fn lift_orders() {
    let r = json(&["lift-order", "C3:adjoint", "--class", "[2,1]"]);
    assert_eq!((r["lift_order"].as_u64(), r["exact"].as_bool()), (Some(8), Some(true)));
    assert_eq!(json(&["lift-order", "A1:sc", "--word", "1"])["lift_order"], 4);
    let b3 = json(&["lift-order", "B3:adjoint", "--word", "121"]);
    assert_eq!(b3["lift_order"], b3["weyl_order"]);
    assert!(!run(&["lift-order", "B3:adjoint", "--word", "19"]).status.success());
}

#[test]
fn verify_exit_codes() {
    let f4 = run(&["verify", "F4"]);
    assert_eq!(f4.status.code(), Some(1));
    let text = String::from_utf8(f4.stdout).unwrap();
    assert!(text.contains("A3+~A1") && text.contains("listed order 8, computed order 6"));
    let e7 = json(&["verify", "E7", "--isogeny", "sc"]);
    let trivial: Vec<&str> = e7["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["isogenies"][0]["kind"] == "trivial")
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(trivial, ["E7(a2)", "A7", "2A3+A1"]);
    assert_eq!(run(&["verify", "C6", "--isogeny", "adjoint"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "E8", "--format", "csv"]).stdout, run(&["verify", "E8", "--format", "csv"]).stdout);
}

#[test]
fn word_file() {
    let words = scratch_file("g2.txt", "# G2\nG2: 12\n");
    let out = stdout(&["verify", "G2", "--words", words.to_str().unwrap()]);
    assert!(out.ends_with("pass\n"));
    let bad = scratch_file("g2-bad.txt", "G2: 1\n");
    assert_eq!(run(&["verify", "G2", "--words", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn splitting() {
    let g2 = json(&["splitting", "G2"]);
    assert_eq!((g2["splits"].as_bool(), g2["source"].as_str()), (Some(true), Some("search-certificate")));
    let spin8 = json(&["splitting", "Spin8"]);
    assert_eq!(spin8["splits"], false);
    assert_eq!(spin8["obstructions"][0]["label"], "[2,1,1]");
    assert_eq!(json(&["splitting", "E6"])["classification_only"], true);
    assert_eq!(json(&["splitting", "Sp(6)", "--char2"])["splits"], true);
}

#[test]
fn equivalent_splittings() {
    let classes = json(&["splitting", "PSL(4)", "--classes"]);
    let certs = classes["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 2);
    let a = scratch_file("a.json", &certs[0].to_string());
    let b = scratch_file("b.json", &certs[1].to_string());
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert_eq!(stdout(&["equivalent-splittings", "PSL(4)", a, b]), "not equivalent\n");
    assert_eq!(stdout(&["equivalent-splittings", "PSL(4)", a, a]), "equivalent\n");
    let bogus = scratch_file("bogus.json", r#"{"1": ["0","0","0"], "2": ["0","0","0"], "3": ["0","0","0"]}"#);
    assert_eq!(run(&["equivalent-splittings", "PSL(4)", a, bogus.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn regular() {
    let r = json(&["regular", "2A5", "--word", "13524-13524d"]);
    assert_eq!(r["order"], 6);
    assert_eq!(r["regular_orders"], serde_json::json!([3]));
}

#[test]
fn datum_file_and_errors() {
    let file = scratch_file("b2.json", r#"{"type": "B2", "isogeny": "adjoint"}"#);
    assert_eq!(json(&["describe", file.to_str().unwrap()])["group"], "SO(5)");
    assert_eq!(run(&["describe", "Frob(3)"]).status.code(), Some(2));
    assert!(!run(&["describe", "G2", "--no-such-flag"]).status.success());
    let table = stdout(&["elliptic-table", "Spin(8)", "--twisted"]);
    assert!(table.contains("[2,1,1]"));
}
