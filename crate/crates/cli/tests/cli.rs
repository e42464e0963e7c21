use std::process::{Command, Output};

use serde_json::Value;
use springer_cli::parse::parse_poly;
use springer_cli::render;
use springer_core::Ambient;

fn springer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json", "--quiet"];
    all.extend_from_slice(args);
    let out = springer(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn poly(text: &str, amb: Ambient) -> Value {
    render::polynomial(&parse_poly(text, amb).unwrap())
}

#[test]
fn tableaux_for_two_two() {
    let v = json(&["tableaux", "--alpha", "2,2"]);
    let ts = v["result"]["tableaux"].as_array().unwrap();
    let rows: Vec<String> = ts.iter().map(|t| t["rows"].to_string()).collect();
    assert_eq!(rows, ["[[3,1],[4,2]]", "[[4,1],[3,2]]", "[[2,1],[4,3]]", "[[3,2],[4,1]]", "[[4,2],[3,1]]", "[[4,3],[2,1]]"]);
    let ws: Vec<String> = ts.iter().map(|t| t["w"].to_string()).collect();
    assert_eq!(ws, ["[1,3,2,4]", "[1,4,2,3]", "[1,2,3,4]", "[2,3,1,4]", "[2,4,1,3]", "[3,4,1,2]"]);
    let amb = Ambient::new(4, 2);
    let ps = ["1", "x3 - z1", "x2 - z2", "x1 - z1", "(x1 - z1)*(x3 - z1)", "(x1 - z1)*(x2 - z1)"];
    for (t, p) in ts.iter().zip(ps) {
        assert_eq!(t["P"], poly(p, amb));
    }
    assert_eq!(ts[4]["inversions"].to_string(), "[[1,1],[3,1]]");
    assert_eq!(v["shape"].to_string(), "[2,2]");
}

#[test]
fn matrix_for_two_two() {
    let v = json(&["matrix", "--alpha", "2,2"]);
    let amb = Ambient::new(4, 2);
    let a = "z2 - z1";
    let m = "z1 - z2";
    let q = "(z2 - z1)^2";
    let expected = [
        ["1", "1", "1", "1", "1", "1"],
        ["0", a, a, "0", a, "0"],
        ["0", "0", m, m, m, "0"],
        ["0", "0", "0", a, a, a],
        ["0", "0", "0", "0", q, "0"],
        ["0", "0", "0", "0", "0", q],
    ];
    for (i, row) in expected.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            assert_eq!(v["result"]["matrix"][i][j], poly(e, amb), "entry ({i}, {j})");
        }
    }
}

#[test]
fn expand_worked_example() {
    let amb = Ambient::new(4, 2);
    for method in ["back-sub", "det"] {
        let v = json(&["expand", "--alpha", "2,2", "--poly", "x1+x2+x3-2*z1-z2", "--method", method]);
        let c: Vec<Value> = ["0", "1", "1", "1", "0", "0"].iter().map(|p| poly(p, amb)).collect();
        assert_eq!(v["result"]["coefficients"], Value::Array(c));
        assert_eq!(v["result"]["support"].to_string(), "[2,3,4]");
        assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
    }
    let v = json(&["expand", "--alpha", "2,2", "--poly", "x1+x2+x3-2*z1-z2", "--method", "det"]);
    let d: Vec<Value> = ["0", "z2 - z1", "z1 - z2", "z2 - z1", "0", "0"].iter().map(|p| poly(p, amb)).collect();
    assert_eq!(v["result"]["d"], Value::Array(d));
}

#[test]
fn human_expand_output() {
    let out = springer(&["expand", "--alpha", "2,2", "--poly", "x1 + x2 + x3 - 2*z1 - z2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("f = P2 + P3 + P4"), "{text}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: known typo"));
}

#[test]
fn project_monomial_and_schubert() {
    let v = json(&["project", "--alpha", "3,3", "--poly", "x2*x3*x5"]);
    let x6 = Ambient::x_only(6);
    assert_eq!(v["result"]["projection"], poly("-(x1*x3*x5 + x1*x2*x5 + x1*x2*x3)", x6));
    let idx: Vec<u64> = v["result"]["equivariant"].as_array().unwrap().iter().map(|e| e["index"].as_u64().unwrap()).collect();
    assert_eq!(idx, [11, 12, 14, 15, 17, 18, 20]);
    assert_eq!(v["result"]["P_delta"], poly("(x2-z2)*(x3-z2)*(x5-z2)", Ambient::new(6, 2)));

    let x4 = Ambient::x_only(4);
    let v = json(&["project", "--alpha", "2,2", "--perm", "1,4,2,3"]);
    assert_eq!(v["result"]["projection"], poly("x1*x2", x4));
    let v = json(&["project", "--alpha", "2,2", "--perm", "1,3,4,2"]);
    assert_eq!(v["result"]["projection"], poly("0", x4));
    let v = json(&["project", "--alpha", "2,2", "--perm", "1,2,4,3", "--double"]);
    assert_eq!(v["result"]["image"], poly("x1+x2+x3-2*z1-z2", Ambient::new(4, 2)));
    assert_eq!(v["result"]["support"].to_string(), "[2,3,4]");
}

#[test]
fn walpha_relations_and_positivity() {
    let v = json(&["walpha", "--alpha", "2,2"]);
    let words: Vec<&str> = v["result"]["permutations"].as_array().unwrap().iter().map(|p| p["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["e", "s3", "s2", "s1", "s1s3", "s1s2"]);

    let v = json(&["relations", "--alpha", "2,2", "--degree", "2"]);
    assert_eq!(v["result"]["relations"].to_string(), r#"[["1","0","0","0","0"],["0","1","0","-1","0"],["0","0","0","0","1"]]"#);

    let v = json(&["positivity", "--alpha", "3,1"]);
    assert_eq!(v["result"]["negatives"].as_array().unwrap().len(), 0);
    let v = json(&["positivity", "--alpha", "2,1,1,1"]);
    assert_eq!(v["result"]["negatives"][0]["permutation"].to_string(), "[1,5,4,2,3]");
}

#[test]
fn schubert_polynomials() {
    let v = json(&["schubert", "--perm", "1432"]);
    assert_eq!(v["result"]["polynomial"], poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3", Ambient::x_only(4)));
    assert_eq!(v["result"]["word"], "s3s2s3");
    let v = json(&["schubert", "--perm", "1243", "--double"]);
    assert_eq!(v["result"]["polynomial"], poly("x1 + x2 + x3 - y1 - y2 - y3", Ambient::with_y(4, 4, 0)));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "--quiet", "basis", "--alpha", "2,1,2"][..],
        &["--json", "--quiet", "positivity", "--alpha", "1,2,1,1"][..],
        &["--quiet", "verify", "--suite", "expansion-agreement", "--max-n", "3", "--samples", "20", "--seed", "9"][..],
    ] {
        let a = springer(args);
        let b = springer(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn printed_polynomials_reparse() {
    let v = json(&["basis", "--alpha", "1,2,1"]);
    let amb = Ambient::new(4, 3);
    let out = springer(&["basis", "--alpha", "1,2,1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let printed: Vec<&str> = text.lines().skip(3).map(|l| l.split("  ").filter(|s| !s.is_empty()).last().unwrap().trim()).collect();
    let basis = v["result"]["basis"].as_array().unwrap();
    assert_eq!(printed.len(), basis.len());
    for (p, b) in printed.iter().zip(basis) {
        assert_eq!(poly(p, amb), b["P"]);
    }
}

#[test]
fn verify_runs_and_reports() {
    let out = springer(&["--quiet", "verify", "--all", "--max-n", "3", "--samples", "10"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), springer_core::verify::SUITES.len());
}

#[test]
fn exit_codes() {
    assert_eq!(springer(&["--help"]).status.code(), Some(0));
    assert_eq!(springer(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(springer(&["tableaux"]).status.code(), Some(2));
    assert_eq!(springer(&["expand", "--alpha", "2,2", "--poly", "x1 +"]).status.code(), Some(2));
    assert_eq!(springer(&["expand", "--alpha", "2,2", "--poly", "x5"]).status.code(), Some(2));
    assert_eq!(springer(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(springer(&["project", "--alpha", "2,2", "--perm", "12345"]).status.code(), Some(1));
    assert_eq!(springer(&["project", "--alpha", "2,2", "--poly", "x1", "--perm", "21"]).status.code(), Some(2));
    let out = springer(&["expand", "--alpha", "2,2", "--poly", "x1 + * x2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 5"), "{err}");
}
