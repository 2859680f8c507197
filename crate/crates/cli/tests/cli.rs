use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorgroup"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn sigma(m: u64) -> u64 {
    (1..=m).filter(|d| m % d == 0).sum()
}

#[test]
fn classify_rectangular_example() {
    let v = json(&["classify", "--ambient", "rect:2", "--gens", "3,0;0,1"]);
    assert_eq!(v["label"], "pmm");
    assert_eq!(v["agreement"], true);
    assert_eq!(v["closed_form"]["label"], "pmm");
    let v = json(&["classify", "--ambient", "rect:2", "--gens", "4,0;1,1"]);
    assert_eq!(v["label"], "p2");
}

#[test]
fn classify_octagonal_has_no_closed_form() {
    let v = json(&[
        "classify",
        "--ambient",
        "oct",
        "--gens",
        "1,0,0,0;0,2,0,0;0,0,1,0;0,0,0,2",
    ]);
    assert_eq!(v["label"], "⟨a²,b⟩ ≅ D4");
    assert_eq!(v["oracle"]["stabilizer"].as_array().unwrap().len(), 8);
    assert!(v["closed_form"].is_null());
    assert!(v["agreement"].is_null());
}

#[test]
fn classify_full_lattice() {
    let v = json(&["classify", "--ambient", "square", "--gens", "1,0;0,1"]);
    assert_eq!(v["label"], "p4m");
    assert_eq!(v["index"], 1);
}

#[test]
fn classify_with_scale_and_perms() {
    let v = json(&[
        "classify",
        "--ambient",
        "square",
        "--gens",
        "3,0;0,1",
        "--scale",
        "g:1,1",
        "--perms",
    ]);
    assert_eq!(v["index"], 6);
    assert_eq!(v["label"], "cmm");
    let perms = v["oracle"]["permutations"].as_object().unwrap();
    assert_eq!(perms.len(), 4);
    assert_eq!(perms["1"], serde_json::json!([0, 1, 2, 3, 4, 5]));
}

#[test]
fn perm_composition_matches_composed_perm() {
    let base = ["perm", "--ambient", "hex", "--gens", "3,1;-1,2"];
    let with = |extra: &[&str]| -> Vec<u64> {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        json(&args)["mapping"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap())
            .collect()
    };
    let g = with(&["--element", "R_120"]);
    let h = with(&["--element", "R_60"]);
    let gh = with(&["--element", "R_120", "--element", "R_60"]);
    let composed: Vec<u64> = h.iter().map(|&j| g[j as usize]).collect();
    assert_eq!(gh, composed);
    assert_eq!(g[0], 0);
}

#[test]
fn translation_moves_color_zero() {
    let v = json(&[
        "perm",
        "--ambient",
        "square",
        "--gens",
        "3,0;0,1",
        "--translate",
        "-1,0",
    ]);
    assert_eq!(v["mapping"], serde_json::json!([2, 0, 1]));
}

#[test]
fn census_totals_are_divisor_sums() {
    let v = json(&["census", "--ambient", "square", "--max-index", "12"]);
    for row in v.as_array().unwrap() {
        let m = row["index"].as_u64().unwrap();
        assert_eq!(row["total"].as_u64().unwrap(), sigma(m));
        let per_label: u64 = row["labels"]
            .as_object()
            .unwrap()
            .values()
            .map(|x| x.as_u64().unwrap())
            .sum();
        assert_eq!(per_label, sigma(m));
    }
    assert!(v[4]["labels"]["p4"].as_u64().unwrap() >= 2);
    assert_eq!(v[0]["labels"], serde_json::json!({"p4m": 1}));
}

#[test]
fn verify_exits_zero() {
    for amb in ["square", "hex"] {
        let v = json(&["verify", "--ambient", amb, "--max-index", "30"]);
        assert_eq!(v["disagreements"], serde_json::json!([]));
    }
    let v = json(&["verify", "--ambient", "square", "--max-index", "1"]);
    assert_eq!(v["cases"], 1);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["classify", "--ambient", "square", "--gens", "1,2;2,4"],
        &["classify", "--ambient", "square", "--gens", "1,x;0,1"],
        &["classify", "--ambient", "square", "--gens", "1,0,0;0,1"],
        &["classify", "--ambient", "rect:1", "--gens", "1,0;0,1"],
        &["perm", "--ambient", "square", "--gens", "3,0;0,1", "--element", "R_i"],
        &["verify", "--ambient", "oct"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn outputs_are_stable_across_runs() {
    let args = ["classify", "--ambient", "hex", "--gens", "3,0;1,1", "--perms"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = [
        "render",
        "--ambient",
        "oct",
        "--gens",
        "1,0,0,0;0,2,0,0;0,0,2,0;0,0,0,1",
        "--radius",
        "4",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn render_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rect.svg");
    let out = run(&[
        "render",
        "--ambient",
        "rect:2",
        "--gens",
        "3,0;0,1",
        "--box",
        "0,0,10,10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 66);
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn patch_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("patch.json");
    let out = run(&["patch", "--radius", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Vec<[i64; 4]> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.len(), 9);
    assert!(v.contains(&[0, 0, 0, 0]));
    assert!(v.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn cosets_listing() {
    let v = json(&["cosets", "--ambient", "square", "--gens", "2,0;0,2"]);
    let coeffs: Vec<Value> = v.as_array().unwrap().iter().map(|c| c["coeffs"].clone()).collect();
    assert_eq!(
        coeffs,
        vec![
            serde_json::json!([0, 0]),
            serde_json::json!([0, 1]),
            serde_json::json!([1, 0]),
            serde_json::json!([1, 1])
        ]
    );
}
