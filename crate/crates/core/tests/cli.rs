//! End-to-end checks of the command line: canonical output, the documented
//! example values, re-verification of emitted tilings, and the exit code
//! contract (0 success, 1 usage, 2 failed verification).

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morsetiles"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("morsetiles-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir.join(name)
}

/// Run an example and return its parsed output document.
fn example(args: &[&str]) -> Value {
    let mut full = vec!["example"];
    full.extend_from_slice(args);
    full.push("--quiet");
    let out = run(&full);
    assert!(
        out.status.success(),
        "example {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = stdout_json(&out);
    assert_eq!(doc["failed_checks"], Value::Array(vec![]), "{args:?}");
    doc
}

fn save(value: &Value, name: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, value.to_string()).expect("write scratch file");
    path
}

#[test]
fn the_octahedron_example_reports_its_vectors_and_reverifies_identically() {
    let doc = example(&["octahedron"]);
    assert_eq!(doc["report"]["h"], serde_json::json!([1, 4, 1, 2]));
    assert_eq!(doc["report"]["c"], serde_json::json!([1, 1, 2]));
    assert_eq!(doc["report"]["valid_shelling"], Value::Bool(true));

    let tiling = save(&doc["tiling"], "oct.json");
    let out = run(&["verify", tiling.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), doc["report"], "verify must reproduce the report");
}

#[test]
fn the_handle_example_has_one_critical_tile_of_its_index() {
    let doc = example(&["handle", "--k", "1", "--n", "2"]);
    assert_eq!(
        doc["report"]["critical_tiles"],
        serde_json::json!([{ "count": 1, "index": 1 }])
    );
}

#[test]
fn the_boundary_simplex_example_counts_one_tile_per_order() {
    let doc = example(&["boundary-simplex", "--n", "3"]);
    assert_eq!(doc["report"]["h"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn the_nonshellable_circle_verifies_as_a_tiling_but_not_as_a_shelling() {
    let doc = example(&["boundary-simplex-nonshellable"]);
    let tiling = save(&doc["tiling"], "fan.json");
    let out = run(&["verify", tiling.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success(), "a valid tiling verifies with exit 0");
    let report = stdout_json(&out);
    assert_eq!(report["valid_partition"], Value::Bool(true));
    assert_eq!(report["valid_closure"], Value::Bool(true));
    assert_eq!(report["valid_shelling"], Value::Bool(false));
}

#[test]
fn multiplying_the_circle_with_itself_gives_the_eighteen_tile_torus() {
    let doc = example(&["boundary-simplex-nonshellable"]);
    let fan = save(&doc["tiling"], "fan-product.json");
    let fan = fan.to_str().unwrap();
    let out = run(&["product", fan, fan, "--h-tiling", "--quiet"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    assert_eq!(doc["report"]["tile_count"], serde_json::json!(18));
    assert_eq!(doc["report"]["euler"], serde_json::json!(0));
    assert_eq!(doc["failed_checks"], Value::Array(vec![]));
}

#[test]
fn multiplying_the_octahedron_with_a_shelled_sphere_multiplies_criticals() {
    let oct = example(&["octahedron"]);
    let oct = save(&oct["tiling"], "oct-product.json");
    let sphere = example(&["boundary-simplex", "--n", "4"]);
    let sphere = save(&sphere["tiling"], "bd4.json");
    let out = run(&[
        "product",
        oct.to_str().unwrap(),
        sphere.to_str().unwrap(),
        "--quiet",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    assert_eq!(doc["report"]["c"], serde_json::json!([1, 1, 2, 1, 1, 2]));
}

#[test]
fn an_unoriented_input_fails_the_product_with_a_witness() {
    let doc = example(&["boundary-simplex-nonshellable"]);
    let mut tiling = doc["tiling"].clone();
    tiling["complex"]
        .as_object_mut()
        .expect("complex object")
        .remove("orientation");
    let path = save(&tiling, "untame.json");
    let path = path.to_str().unwrap();
    let out = run(&["product", path, path, "--quiet"]);
    assert_eq!(out.status.code(), Some(2));
    let witness = stdout_json(&out);
    assert!(
        witness["error"].as_str().unwrap().contains("orientation"),
        "{witness}"
    );
}

#[test]
fn the_sphere_torus_example_reports_exactly_one_matching_formula() {
    let doc = example(&["sphere-torus", "--n", "1", "--m", "1"]);
    assert_eq!(doc["report"]["tile_count"], serde_json::json!(18));
    let formula = &doc["formula_comparison"];
    let plain = formula["matches_formula"].as_bool().unwrap();
    let scaled = formula["matches_scaled"].as_bool().unwrap();
    assert!(plain != scaled, "exactly one candidate matches: {formula}");
}

#[test]
fn staircases_lists_ten_entries_for_two_three() {
    let out = run(&["staircases", "--n", "2", "--m", "3", "--quiet"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc.as_array().map(Vec::len), Some(10));
}

#[test]
fn subdividing_the_triangle_yields_six_oriented_triangles() {
    let path = scratch("triangle.json");
    std::fs::write(&path, r#"{"vertices":[0,1,2],"maximal":[[0,1,2]]}"#).unwrap();
    let out = run(&["subdivide", path.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["maximal"].as_array().map(Vec::len), Some(6));
    assert!(doc["orientation"].is_array(), "subdivision carries its order");
}

#[test]
fn vectors_prints_the_flat_summary() {
    let doc = example(&["capped-cylinder"]);
    let tiling = save(&doc["tiling"], "capped.json");
    let out = run(&["vectors", tiling.to_str().unwrap(), "--quiet"]);
    assert!(out.status.success());
    let flat = stdout_json(&out);
    assert_eq!(flat["h"], serde_json::json!([0, 6, 0, 2]));
    assert_eq!(flat["c"], serde_json::json!([0, 0, 2]));
    assert_eq!(flat["formula_comparison"], Value::Null);
    let keys: Vec<&str> = flat.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "c",
            "critical_tiles",
            "euler",
            "formula_comparison",
            "h",
            "palindromic_c",
            "palindromic_h",
            "pure"
        ]
    );
}

#[test]
fn mixdec_emits_cells_as_json_and_a_drawing_on_request() {
    let out = run(&["mixdec", "--n", "2", "--m", "2", "--quiet"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["cells"].as_array().map(Vec::len), Some(6));
    assert_eq!(doc["weights"], serde_json::json!(["1/3", "1/3", "1/3"]));

    let out = run(&[
        "mixdec", "--n", "2", "--m", "2", "--alpha", "1/2,1/3,1/6", "--svg", "--quiet",
    ]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<?xml"));
    // six cells plus the frame triangle
    assert_eq!(svg.matches("<polygon").count(), 7);
}

#[test]
fn identical_invocations_print_identical_bytes() {
    for args in [
        vec!["example", "octahedron", "--quiet"],
        vec!["example", "sphere-torus", "--n", "1", "--m", "1", "--quiet"],
        vec!["staircases", "--n", "1", "--m", "2", "--quiet"],
        vec!["mixdec", "--n", "2", "--m", "2", "--svg", "--quiet"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn the_out_flag_routes_the_document_to_a_file() {
    let path = scratch("routed.json");
    let out = run(&[
        "example",
        "octahedron",
        "--quiet",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["report"]["h"], serde_json::json!([1, 4, 1, 2]));
}

#[test]
fn usage_errors_exit_one() {
    // parameters out of range
    assert_eq!(run(&["example", "handle", "--k", "3", "--n", "2"]).status.code(), Some(1));
    // dimension guard, and the override that lifts it
    assert_eq!(
        run(&["example", "sphere-torus", "--n", "6", "--m", "3"]).status.code(),
        Some(1)
    );
    // missing file
    assert_eq!(run(&["verify", "/no/such/file.json"]).status.code(), Some(1));
    // unknown subcommand
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    // malformed weights
    assert_eq!(
        run(&["mixdec", "--n", "1", "--m", "2", "--alpha", "1/2,1/3"]).status.code(),
        Some(1)
    );
    // the drawing is plane only
    assert_eq!(
        run(&["mixdec", "--n", "1", "--m", "3", "--svg"]).status.code(),
        Some(1)
    );
}

#[test]
fn help_prints_cleanly() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for sub in ["example", "product", "verify", "vectors", "staircases", "subdivide", "mixdec"] {
        assert!(text.contains(sub), "help lists {sub}");
    }
}

#[test]
fn emitted_documents_feed_back_into_every_consumer() {
    let doc = example(&["octahedron"]);
    // the whole document, not the extracted tiling
    let path = save(&doc, "oct-doc.json");
    let file = path.to_str().unwrap();

    let out = run(&["verify", file, "--quiet"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out), doc["report"]);

    let out = run(&["product", file, file, "--quiet"]);
    assert!(out.status.success());
    let prod = stdout_json(&out);
    // critical counts convolve: (1,1,2) squared
    assert_eq!(prod["report"]["c"], serde_json::json!([1, 2, 5, 4, 4]));

    let out = run(&["subdivide", file, "--quiet"]);
    assert!(out.status.success());

    let out = run(&["vectors", file, "--quiet"]);
    assert!(out.status.success());
}
