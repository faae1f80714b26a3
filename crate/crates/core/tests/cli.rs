use openpack::cli::run_cli;

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("openpack").chain(args.iter().copied());
    let code = run_cli(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn pipe(generate: &[&str], then: &[&str]) -> (i32, String, String) {
    let (code, graph, _) = run(generate, "");
    assert_eq!(code, 0);
    run(then, &graph)
}

#[test]
fn gk2_decided_by_brute_force() {
    let (code, out, _) = pipe(&["gen", "Gk", "2"], &["decide", "--mode", "brute"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("IN_U"));
}

#[test]
fn t3_spectrum_extremes() {
    let (code, out, _) = pipe(&["gen", "T", "3"], &["spectrum", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["packing"]["rho_open_lower"], 2);
    assert_eq!(v["packing"]["rho_open"], 8);
}

#[test]
fn path5_classified_out() {
    let (code, out, _) = pipe(&["gen", "path", "5"], &["classify"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["diagnosis"]["verdict"], "NOT_IN_U");
    assert_eq!(v["diagnosis"]["reasons"][0]["rule"], "R1");
}

#[test]
fn tree_classification_carries_partition() {
    let (_, out, _) = pipe(&["gen", "path", "4"], &["classify"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["diagnosis"]["verdict"], "IN_U");
    assert_eq!(v["partition"]["L"], serde_json::json!([0, 3]));
    assert_eq!(v["partition"]["S2"], serde_json::json!([1, 2]));
}

#[test]
fn json_output_is_stable_for_a_seed() {
    let a = pipe(&["gen", "randtree", "12", "--seed", "5"], &["decide", "--json"]);
    let b = pipe(&["gen", "randtree", "12", "--seed", "5"], &["decide", "--json"]);
    assert_eq!(a, b);
    let c = run(&["gen", "randtree", "12", "--seed", "6"], "");
    let d = run(&["gen", "randtree", "12", "--seed", "5"], "");
    assert_ne!(c.1, d.1);
}

#[test]
fn graph6_round_trip_through_cli() {
    let (_, g6, _) = run(&["gen", "cycle", "7", "--format", "g6"], "");
    let (code, out, _) = run(&["stats", "--format", "g6"], &g6);
    assert_eq!(code, 0);
    assert!(out.contains("order 7") && out.contains("girth 7"), "{out}");
}

#[test]
fn ong_of_even_cycle_lists_two_cycles() {
    let (code, out, _) = pipe(&["gen", "cycle", "10"], &["ong"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("# cycle 5")).count(), 2);
    // the listing itself is a valid edge list
    assert_eq!(openpack::io::parse_edge_list(&out).unwrap().size(), 10);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], "").0, 2);
    assert_eq!(run(&["stats"], "2 1\n0 2\n").0, 2);
    assert_eq!(run(&["gen", "cycle", "2"], "").0, 2);
    assert_eq!(pipe(&["gen", "path", "70"], &["spectrum"]).0, 1);
    assert_eq!(pipe(&["gen", "path", "20"], &["spectrum", "--cap", "10"]).0, 1);
    assert_eq!(run(&["verify", "nope"], "").0, 2);
    assert_eq!(run(&["verify", "paths"], "").0, 0);
    assert_eq!(run(&["--help"], "").0, 0);
}

#[test]
fn embed_reads_the_host_graph() {
    let (code, out, _) = run(&["gen", "embed"], "3 3\n0 1\n1 2\n0 2\n");
    assert_eq!(code, 0);
    let g = openpack::io::parse_edge_list(&out).unwrap();
    assert_eq!(g.order(), 12);
}

#[test]
fn ftree_from_spec_file() {
    let dir = std::env::temp_dir().join(format!("openpack-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.json");
    let spec = r#"{"stars":[
        {"leaves_u":1,"leaves_v":1,"rule":"One","special_u":[0],"special_v":[]},
        {"leaves_u":1,"leaves_v":1,"rule":"One","special_u":[0],"special_v":[]}],
        "links":[[{"star":0,"side":"U","leaf":0},{"star":1,"side":"U","leaf":0}]]}"#;
    std::fs::write(&path, spec).unwrap();
    let (code, out, err) = run(&["gen", "ftree", "--spec", path.to_str().unwrap()], "");
    assert_eq!(code, 0, "{err}");
    let (_, decided, _) = run(&["decide", "--mode", "structural"], &out);
    assert_eq!(decided.lines().next(), Some("IN_U"));
    std::fs::remove_dir_all(dir).unwrap();
}
