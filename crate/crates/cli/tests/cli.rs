use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn coalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalc"))
        .args(args)
        .env_remove("COALC_REPORT")
        .output()
        .expect("run coalc")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = coalc(args);
    let code = out.status.code().unwrap();
    let json = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("no JSON report for {args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr)));
    (code, json)
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn validate_zoo_matrix2() {
    let (code, r) = report(&["validate", "zoo:matrix2"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "valid");
    assert_eq!(r["command"], "validate");
    assert_eq!(r["inputs"][0]["name"], "matrix2");
}

#[test]
fn coder_primitive2_has_dimension_one() {
    let (code, r) = report(&["coder", "zoo:primitive2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["dim"], 1);
    let basis = r["details"]["basis"].as_array().unwrap();
    assert_eq!(basis[0]["entries"], serde_json::json!([[1, 1, "1"]]));
}

#[test]
fn invalid_structure_exits_one_with_violations() {
    let (code, r) = report(&["validate", &fixture("bad_counit.json")]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "invalid");
    let v = r["details"]["violations"].as_array().unwrap();
    assert!(!v.is_empty());
    assert!(v[0]["index"].is_array());
}

#[test]
fn parse_errors_exit_two_with_location() {
    let out = coalc(&["validate", &fixture("out_of_range.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("index out of range"), "{err}");
    assert!(err.contains("$.omega[0]"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["validate"][..], &["validate", "zoo:nonesuch"][..], &["validate", "/no/such/file.json"][..]] {
        assert_eq!(coalc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thm33_refuses_non_cocommutative_input() {
    let out = coalc(&["verify", "thm33", "zoo:matrix2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis violated: coalgebra not cocommutative"));
}

#[test]
fn thm33_holds_on_primitive2() {
    let (code, r) = report(&["verify", "thm33", "zoo:primitive2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["coder_dim"], 1);
    assert_eq!(r["details"]["coder_coords"], serde_json::json!([["0"], ["1"]]));
}

#[test]
fn thm32_reports_every_cofield() {
    let (code, r) = report(&["verify", "thm32", "zoo:matrix2", "--focc-index", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["cofields"].as_array().unwrap().len(), 4);
    let (code, _) = report(&["verify", "thm32", "zoo:primitive2", "--x", "codual:1"]);
    assert_eq!(code, 0);
    assert_eq!(coalc(&["verify", "thm32", "zoo:primitive2", "--x", "codual:7"]).status.code(), Some(2));
}

#[test]
fn probe_primitive2() {
    let (code, r) = report(&["probe", "zoo:primitive2"]);
    assert_eq!(code, 0);
    let d = &r["details"];
    assert_eq!((d["codual_dim"].as_u64(), d["coder_dim"].as_u64(), d["rank"].as_u64()), (Some(2), Some(1), Some(1)));
    assert_eq!(d["summary"], "surjective, not injective");
}

#[test]
fn solver_verbs_report_dimensions() {
    let cases: [(&[&str], u64); 8] = [
        (&["com-space", "zoo:grouplike3", "zoo:grouplike3"], 3),
        (&["com-space", "zoo:primitive2", "zoo:primitive2", "--right"], 2),
        (&["codual", "left", "zoo:matrix2"], 4),
        (&["codual", "right", "zoo:primitive2"], 2),
        (&["prop28", "zoo:grouplike4"], 4),
        (&["focc-solve", "zoo:trivial"], 0),
        (&["focc-solve", "zoo:matrix2"], 3),
        (&["coder", "zoo:grouplike2"], 0),
    ];
    for (args, dim) in cases {
        let (code, r) = report(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(r["details"]["dim"], dim, "{args:?}");
    }
}

#[test]
fn structure_verbs() {
    let (code, r) = report(&["cocommutative", "zoo:matrix2"]);
    assert_eq!(code, 1);
    assert_eq!(r["details"]["violations"][0]["index"], serde_json::json!([0, 1, 2]));
    assert_eq!(report(&["cocommutative", "zoo:primitive2"]).0, 0);
    assert_eq!(report(&["dual-algebra", "zoo:matrix2"]).0, 0);
    assert_eq!(report(&["dimodule-check", "zoo:matrix3"]).0, 0);
    assert_eq!(report(&["quadruple-check", "zoo:primitive2"]).0, 0);
    let (code, r) = report(&["tensor", "zoo:primitive2", "zoo:primitive2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["dim"], 4);
    let (code, r) = report(&["cartan", "zoo:primitive2", "--x", "codual:1"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["is_coderivation"], true);
}

fn write(dir: &Path, name: &str, value: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

#[test]
fn emitted_structures_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let (_, zoo) = report(&["zoo", "emit", "primitive2"]);
    let coalgebra = write(dir.path(), "p2.json", &zoo["details"]["structure"]);
    let coalgebra = coalgebra.to_str().unwrap();
    assert_eq!(report(&["validate", coalgebra]).0, 0);

    let (_, reg) = report(&["regular", coalgebra]);
    let regular = write(dir.path(), "p2-regular.json", &reg["details"]["structure"]);
    let (code, dual) = report(&["dual", regular.to_str().unwrap()]);
    assert_eq!(code, 0);
    let dual = write(dir.path(), "p2-dual.json", &dual["details"]["structure"]);
    assert_eq!(report(&["validate", dual.to_str().unwrap()]).0, 0);

    let (_, solved) = report(&["focc-solve", regular.to_str().unwrap()]);
    let focc = write(dir.path(), "euler.json", &solved["details"]["basis"][0]);
    let (code, r) = report(&["validate", focc.to_str().unwrap()]);
    assert_eq!((code, r["inputs"][0]["kind"].as_str()), (0, Some("focc")));
    assert_eq!(report(&["probe", focc.to_str().unwrap()]).1["details"]["rank"], 1);

    let (_, com) = report(&["com-space", coalgebra, coalgebra]);
    let map = write(dir.path(), "map.json", &com["details"]["basis"][0]);
    let (code, r) = report(&["verify", "thm32", focc.to_str().unwrap(), "--x", map.to_str().unwrap()]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn relative_references_resolve_against_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let (_, zoo) = report(&["zoo", "emit", "grouplike2"]);
    write(dir.path(), "g2.json", &zoo["details"]["structure"]);
    let comodule = serde_json::json!({
        "kind": "comodule",
        "name": "g2 left",
        "side": "left",
        "coalgebra": "g2.json",
        "dim": 1,
        "coaction": [[0, 0, 1, "1"]],
    });
    let path = write(dir.path(), "left.json", &comodule);
    let (code, r) = report(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["inputs"][0]["kind"], "left comodule");
    let (code, r) = report(&["com-space", path.to_str().unwrap(), "zoo:grouplike2"]);
    assert_eq!((code, r["details"]["dim"].as_u64()), (0, Some(1)));
    assert_eq!(coalc(&["com-space", path.to_str().unwrap(), "zoo:grouplike3"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_deterministic() {
    let a = coalc(&["codual", "left", "zoo:matrix2"]);
    let b = coalc(&["codual", "left", "zoo:matrix2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn brief_reports_drop_bases() {
    let out = Command::new(env!("CARGO_BIN_EXE_coalc"))
        .args(["coder", "zoo:primitive2"])
        .env("COALC_REPORT", "brief")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["details"]["dim"], 1);
    assert!(r["details"].get("basis").is_none());
}

#[test]
fn human_rendering() {
    let out = coalc(&["--human", "prop28", "zoo:primitive2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("verdict") && l.ends_with("holds")), "{text}");
    assert!(text.lines().any(|l| l.starts_with("invertible") && l.ends_with("true")), "{text}");
}

#[test]
fn zoo_listing() {
    let (code, r) = report(&["zoo", "list"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = r["details"]["coalgebras"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["trivial", "grouplike2", "grouplike3", "grouplike4", "matrix2", "matrix3", "primitive2"]);
}
