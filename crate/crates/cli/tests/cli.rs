use crlie_cli::{
    canonical, emit_report, fixtures, main_with_args, parse_problem, run, to_text, CliError, Command, Format, Overrides,
};
use serde_json::{json, Value};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["crlie"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_problem(name: &str, doc: &Value) -> String {
    let dir = std::env::temp_dir().join(format!("crlie-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, doc.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

fn report(cmd: Command, doc: Value) -> Value {
    run(cmd, parse_problem(&doc.to_string()).unwrap(), Overrides::default()).unwrap()
}

#[test]
fn minimal_valid_file_parses() {
    let p = parse_problem(r#"{"ambient": {"real_form": "compact-sp:2"}, "subalgebra": {"roots": ["2e1"]}}"#).unwrap();
    assert_eq!(p.options.seed, None);
}

#[test]
fn both_sources_error_names_both_fields() {
    let doc = json!({
        "ambient": {"real_form": "compact-sp:2"},
        "subalgebra": {"roots": ["2e1"], "matrices": [["1 0 0 0", "0 0 0 0", "0 0 0 0", "0 0 0 -1"]]}
    });
    let err = parse_problem(&doc.to_string()).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("matrices") && msg.contains("roots"), "{msg}");
    assert_eq!(err.exit_code(), 1);
    let path = write_problem("both.json", &doc);
    let (code, _, stderr) = invoke(&["analyze", &path]);
    assert_eq!(code, 1);
    assert!(stderr.contains("/subalgebra"), "{stderr}");
}

#[test]
fn schema_errors_are_all_listed_with_paths() {
    let doc = json!({"ambient": {"real_form": "su:x"}, "subalgebra": 3, "colour": 1, "options": {"seed": -1}});
    match parse_problem(&doc.to_string()).unwrap_err() {
        CliError::Schema(list) => {
            let joined = list.join("\n");
            for p in ["/ambient/real_form", "/subalgebra", "/colour", "/options/seed"] {
                assert!(joined.contains(p), "{p} missing from {joined}");
            }
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn minimal_orbit_needs_crosses() {
    let doc = json!({"ambient": {"real_form": "su:2,3"}, "subalgebra": "minimal-orbit"});
    assert!(parse_problem(&doc.to_string()).unwrap_err().to_string().contains("/crosses"));
}

#[test]
fn su23_problem_matches_the_corpus_fixture() {
    let doc = json!({"ambient": {"real_form": "su:2,3"}, "subalgebra": "minimal-orbit", "crosses": [1, 3]});
    let fx = fixtures().unwrap().into_iter().find(|f| f.name == "exb").unwrap();
    assert_eq!(fx.problem, doc);
    let p = parse_problem(&doc.to_string()).unwrap();
    assert_eq!(p.crosses, Some(vec![1, 3]));
}

#[test]
fn empty_subalgebra() {
    let r = report(Command::Analyze, json!({"ambient": {"real_form": "compact-sp:2"}, "subalgebra": {"roots": []}}));
    assert_eq!(r["result"]["dims"]["v"], json!(0));
    assert_eq!(r["result"]["dims"]["nr"], json!(0));
    assert_eq!(r["result"]["n_reductive"], json!(true));
}

#[test]
fn isotropic_planes_report_circle_bundle_dims() {
    let doc = json!({"ambient": {"real_form": "su:1,3"}, "subalgebra": "minimal-orbit", "crosses": [2]});
    let path = write_problem("planes.json", &doc);
    let (code, out, _) = invoke(&["analyze", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("\"cr_dim\": 3"), "{out}");
    assert!(out.contains("\"cr_codim\": 1"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let doc = json!({"ambient": {"real_form": "su:2,3"}, "subalgebra": "minimal-orbit", "crosses": [1, 3]});
    let path = write_problem("det.json", &doc);
    let a = invoke(&["--seed", "11", "analyze", &path]);
    let b = invoke(&["--seed", "11", "analyze", &path]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let parsed: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(parsed["seed"], json!(11));
    assert_eq!(parsed["input"], doc);
    // round trip
    assert_eq!(emit_report(&parsed, Format::Json), a.1.as_bytes());
}

#[test]
fn quaternionic_horocycle_regularizes_to_the_expected_levi() {
    let r = report(
        Command::Regularize,
        json!({"ambient": {"real_form": "slH:2"}, "subalgebra": "minimal-orbit", "crosses": [1, 3]}),
    );
    assert_eq!(r["result"]["dims"], json!([5, 7, 7]));
    assert_eq!(r["result"]["q"]["parabolic"]["qr"], json!(["-e1+e2", "e1-e2"]));
    assert_eq!(r["result"]["nr_dims"][0], r["result"]["nr_dims"][1]);
}

#[test]
fn text_format_uses_e_syntax() {
    let doc =
        json!({"ambient": {"root_system": "C2"}, "subalgebra": {"roots": ["2e1", "2e2", "e1+e2"], "toral": "cartan"}});
    let path = write_problem("text.json", &doc);
    let (code, out, _) = invoke(&["--format", "text", "regularize", &path]);
    assert_eq!(code, 0);
    assert!(out.contains("result.q.parabolic.qr: {-e1+e2, e1-e2}"), "{out}");
    let r = report(Command::Regularize, doc);
    assert_eq!(out, to_text(&r));
}

#[test]
fn canonical_sorts_nested_keys() {
    let v = canonical(json!({"b": {"z": 1, "a": [{"y": 0, "x": 1}]}, "a": 2}));
    assert_eq!(v.to_string(), r#"{"a":2,"b":{"a":[{"x":1,"y":0}],"z":1}}"#);
}

#[test]
fn timings_only_on_request() {
    let mut doc = json!({"ambient": {"root_system": "A2"}, "subalgebra": {"roots": ["e1-e2"]}});
    assert!(report(Command::Analyze, doc.clone()).get("timings_ms").is_none());
    doc["options"] = json!({"timings": true});
    assert!(report(Command::Analyze, doc).get("timings_ms").is_some());
}

#[test]
fn par_max_needs_roots() {
    let doc = json!({"ambient": {"real_form": "su:1,3"}, "subalgebra": "minimal-orbit", "crosses": [2]});
    let path = write_problem("parmax.json", &doc);
    let (code, _, err) = invoke(&["par-max", &path]);
    assert_eq!(code, 1);
    assert!(err.contains("par-max"));
}

#[test]
fn so7_containing_the_borel() {
    let doc = json!({
        "ambient": {"root_system": "B3"},
        "subalgebra": {"roots": ["e1-e3", "e2"]},
        "options": {"containing": {"crosses": [1, 2, 3]}}
    });
    let r = report(Command::ParMax, doc);
    let crosses: Vec<Value> =
        r["result"]["parabolics"].as_array().unwrap().iter().map(|p| p["crosses"].clone()).collect();
    assert_eq!(crosses, vec![json!([2]), json!([1, 3])]);
}

#[test]
fn deployment_failure_exits_two() {
    // long-root example in C2: deployment is not generated by nr(v) + L(q)
    let doc = json!({
        "ambient": {"root_system": "C2"},
        "subalgebra": {"roots": ["-2e2"]},
        "options": {"target": {"roots": ["2e1", "-2e1", "-e1-e2", "e1-e2", "-2e2"]}}
    });
    let path = write_problem("gap.json", &doc);
    let (code, _, err) = invoke(&["fibration", &path]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn flags_override_the_file() {
    let doc = json!({"ambient": {"root_system": "A2"}, "subalgebra": {"roots": ["e1-e2"]}, "options": {"seed": 3, "format": "text"}});
    let path = write_problem("override.json", &doc);
    let (_, out, _) = invoke(&["--seed", "9", "analyze", &path]);
    assert!(out.contains("seed: 9"), "{out}");
    let (_, out, _) = invoke(&["--format", "json", "analyze", &path]);
    assert!(out.starts_with('{'));
}

#[test]
fn help_and_bad_flags() {
    assert_eq!(invoke(&["--help"]).0, 0);
    assert_eq!(invoke(&["analyze"]).0, 1);
    assert_eq!(invoke(&["analyze", "/nonexistent/problem.json"]).0, 1);
}

#[test]
fn corpus_passes() {
    let (code, out, _) = invoke(&["--jobs", "4", "corpus"]);
    assert_eq!(code, 0, "{out}");
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["passed"], r["total"]);
}
