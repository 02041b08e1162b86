use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn zagreb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = zagreb(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K1: &str = "1 0\n";
const K2: &str = "2 1\n0 1\n";
const P2: &str = K2;
const P3: &str = "3 2\n0 1\n1 2\n";

#[test]
fn index_json_on_p3() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.edges", P3);
    let out = ok(&["index", "--input", s(&p3), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let indices = &v["indices"];
    for key in ["m1", "m2", "co_m1", "co_m2", "em1", "em2", "hm", "ehm"] {
        assert!(indices[key].is_u64(), "{key} missing");
    }
    assert_eq!(indices["ehm"], 4);
    assert_eq!(indices["m1"], 6);
    assert_eq!(indices["m2"], 4);
    assert_eq!(indices["co_m1"], 2);
    assert_eq!(indices["co_m2"], 1);
    assert!(v["conventions"].is_object());
}

#[test]
fn index_text_and_csv() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.edges", P3);
    let csv = ok(&["index", "--input", s(&p3), "--format", "csv"]);
    assert_eq!(csv, "m1,m2,co_m1,co_m2,em1,em2,hm,ehm\n6,4,2,1,2,1,18,4\n");
    let text = ok(&["index", "--input", s(&p3)]);
    assert!(text.lines().any(|l| l.split_whitespace().eq(["ehm", "4"])));
}

#[test]
fn acene_report_for_three_rings() {
    let out = ok(&["acene", "-n", "3", "--report"]);
    assert!(out.lines().any(|l| l.split_whitespace().eq(["EHM", "772"])));
    assert!(out.contains("{(2,2):4, (2,3):4, (3,3):6, (3,4):8}"));
    assert_eq!(ok(&["acene", "-n", "3"]), out);
}

#[test]
fn acene_formula_and_edges() {
    assert_eq!(ok(&["acene", "-n", "4", "--formula"]), "1112\n");
    let edges = ok(&["acene", "-n", "2", "--edges"]);
    assert_eq!(edges.lines().next(), Some("10 11"));
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "naph.edges", &edges);
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["index", "--input", s(&file), "--format", "json"])).unwrap();
    assert_eq!(v["indices"]["ehm"], 432);
}

#[test]
fn acene_formula_rejects_one_ring() {
    let out = zagreb(&["acene", "-n", "1", "--formula"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.starts_with("error: "), "{err}");
    assert!(!err.contains("panicked"));
    // The graph itself exists for n = 1.
    assert!(ok(&["acene", "-n", "1"]).contains("96"));
}

#[test]
fn tables_one_csv() {
    let out = ok(&["tables", "--which", "1", "--format", "csv"]);
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect();
    assert_eq!(rows.len(), 8);
    let ehm: Vec<&str> = rows.iter().map(|r| r.rsplit(',').next().unwrap()).collect();
    assert_eq!(
        ehm,
        ["432", "772", "1112", "1452", "1792", "2132", "2472", "2812"]
    );
    assert!(out.contains("# erratum row 8: formula printed as C36H22"));
}

#[test]
fn tables_json_parses() {
    for which in ["1", "3", "4"] {
        let v: serde_json::Value =
            serde_json::from_str(&ok(&["tables", "--which", which, "--format", "json"])).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    }
}

#[test]
fn verify_product_k2_k2() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.edges", K2);
    let out = ok(&[
        "verify",
        "--theorem",
        "product",
        "--left",
        s(&k2),
        "--right",
        s(&k2),
    ]);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&row[..4], ["product", "32", "64", "-32"]);

    let json = ok(&[
        "verify",
        "--theorem",
        "product",
        "--left",
        s(&k2),
        "--right",
        s(&k2),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["report"]["closed_form_value"], 32);
    assert_eq!(v["report"]["oracle_value"], 64);
    assert_eq!(v["report"]["difference"], -32);
}

#[test]
fn verify_join_and_acene() {
    let dir = TempDir::new().unwrap();
    let (p2, k1) = (write(&dir, "p2.edges", P2), write(&dir, "k1.edges", K1));
    let out = ok(&[
        "verify",
        "--theorem",
        "join",
        "--left",
        s(&p2),
        "--right",
        s(&k1),
    ]);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&row[..4], ["join", "76", "48", "28"]);

    let out = ok(&["verify", "--theorem", "acene", "-n", "5"]);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(&row[..4], ["acene", "1452", "1452", "0"]);
}

#[test]
fn op_join_and_product() {
    let dir = TempDir::new().unwrap();
    let (k2, p3) = (write(&dir, "k2.edges", K2), write(&dir, "p3.edges", P3));
    let ladder = ok(&["op", "product", "--left", s(&k2), "--right", s(&p3)]);
    assert_eq!(ladder.lines().next(), Some("6 7"));
    let out = dir.path().join("ladder.edges");
    ok(&[
        "op",
        "product",
        "--left",
        s(&k2),
        "--right",
        s(&p3),
        "--output",
        s(&out),
    ]);
    assert_eq!(fs::read_to_string(&out).unwrap(), ladder);
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["index", "--input", s(&out), "--format", "json"])).unwrap();
    assert_eq!(v["indices"]["ehm"], 368);

    let joined = ok(&["op", "join", "--left", s(&k2), "--right", s(&p3)]);
    assert_eq!(joined.lines().next(), Some("5 9"));
}

#[test]
fn predict_uses_fixed_coefficients() {
    let out = ok(&["predict", "--property", "ge", "-n", "10", "--format", "csv"]);
    let value: f64 = out
        .lines()
        .nth(1)
        .unwrap()
        .rsplit(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((value - 1167.27432).abs() < 1e-9);
    assert_eq!(
        ok(&[
            "predict",
            "--property",
            "ge",
            "--ehm",
            "3152",
            "--format",
            "csv"
        ]),
        out
    );
    assert_eq!(zagreb(&["predict", "-n", "1"]).status.code(), Some(1));
}

#[test]
fn fit_plot_is_well_formed_svg() {
    let dir = TempDir::new().unwrap();
    let svg_path = dir.path().join("ge.svg");
    ok(&["fit", "--property", "ge", "--plot", s(&svg_path)]);
    let svg = fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).expect("well-formed XML");
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let count = |tag: &str, class: &str| {
        doc.descendants()
            .filter(|n| n.has_tag_name(tag) && n.attribute("class") == Some(class))
            .count()
    };
    assert_eq!(count("circle", "point"), 8);
    assert_eq!(count("line", "regression"), 1);
}

#[test]
fn fit_on_custom_dataset() {
    let dir = TempDir::new().unwrap();
    let data = write(
        &dir,
        "d.csv",
        "formula,n,hof_kj_mol,ge_kj_mol,eg,eea\nA,2,1,2,3,4\nB,3,2,4,6,8\nC,4,3,6,9,12\n",
    );
    let svg_path = dir.path().join("hof.svg");
    let out = ok(&[
        "fit",
        "--data",
        s(&data),
        "--property",
        "hof",
        "--format",
        "json",
        "--plot",
        s(&svg_path),
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let fitted = &v["fits"][0]["fitted"];
    assert!((fitted["slope"].as_f64().unwrap() - 1.0 / 340.0).abs() < 1e-12);
    let svg = fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(
        doc.descendants()
            .filter(|n| n.has_tag_name("circle"))
            .count(),
        3
    );
}

#[test]
fn domain_errors_exit_one_with_location() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.edges", "3 2\n0 1\n1 1\n");
    let out = zagreb(&["index", "--input", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("line 3"), "{err}");
    assert!(!err.contains("panicked") && !err.contains("backtrace"));
    assert!(out.stdout.is_empty());

    let split = write(&dir, "split.edges", "4 2\n0 1\n2 3\n");
    assert_eq!(
        zagreb(&["index", "--input", s(&split)]).status.code(),
        Some(0)
    );
    let out = zagreb(&["index", "--input", s(&split), "--require-connected"]);
    assert_eq!(out.status.code(), Some(1));

    let data = write(
        &dir,
        "short.csv",
        "formula,n,hof_kj_mol,ge_kj_mol,eg,eea\nA,2,1,2,3,4\n",
    );
    assert_eq!(zagreb(&["fit", "--data", s(&data)]).status.code(), Some(1));
    assert_eq!(
        zagreb(&["index", "--input", "/nonexistent/x"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &[][..],
        &["frobnicate"],
        &["index"],
        &["index", "--input", "x", "--format", "yaml"],
        &["tables", "--which", "2"],
        &["acene"],
        &["fit", "--plot", "x.svg"],
        &["predict", "--property", "mass", "--ehm", "1"],
    ] {
        let out = zagreb(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_zagreb"))
        .args(["index", "--input", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(P3.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(stdout(&out).ends_with("18,4\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.edges", K2);
    let runs: [&[&str]; 6] = [
        &["acene", "-n", "6", "--format", "json"],
        &["tables", "--which", "4", "--format", "csv"],
        &["fit", "--format", "json"],
        &[
            "verify",
            "--theorem",
            "join",
            "--left",
            s(&k2),
            "--right",
            s(&k2),
        ],
        &["predict", "--ehm", "1000"],
        &["dataset"],
    ];
    for args in runs {
        assert_eq!(zagreb(args).stdout, zagreb(args).stdout, "{args:?}");
    }
}

#[test]
fn dataset_subcommand_round_trips_through_fit() {
    let dir = TempDir::new().unwrap();
    let data = write(&dir, "builtin.csv", &ok(&["dataset"]));
    assert_eq!(
        ok(&["fit", "--data", s(&data), "--format", "csv"]),
        ok(&["fit", "--format", "csv"])
    );
}
