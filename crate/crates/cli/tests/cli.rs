use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ramsey_core::arrowing::{find_monochromatic_copy, EdgeColouring};
use ramsey_core::constructions::{good_colouring, BlowupTrace, ConstructionTrace, Theorem8Construction};
use ramsey_core::format::{from_dot, from_graph6_lines, parse_graph, to_dot, to_graph6, to_json};
use ramsey_core::graph::{complete_bipartite, complete_graph, complete_multipartite, cycle, disjoint_union};
use ramsey_core::{Graph, Hypergraph};
use ramsey_oracles as oracle;
use serde_json::Value;
use tempfile::TempDir;

fn ramsey(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .current_dir(dir)
        .env_remove("RAMSEY_OUT_DIR")
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn put(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, format!("{}\n", to_graph6(g))).unwrap();
    p
}

fn report(dir: &Path, name: &str) -> Value {
    serde_json::from_str(&fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).unwrap())
}

fn fixtures() -> TempDir {
    let d = TempDir::new().unwrap();
    put(d.path(), "k2.g6", &complete_graph(2));
    put(d.path(), "k3.g6", &complete_graph(3));
    put(d.path(), "k4.g6", &complete_graph(4));
    put(d.path(), "k5.g6", &complete_graph(5));
    put(d.path(), "k6.g6", &complete_graph(6));
    put(d.path(), "k10.g6", &complete_graph(10));
    put(
        d.path(),
        "k3k2.g6",
        &disjoint_union(&complete_graph(3), &complete_graph(2)),
    );
    put(d.path(), "c5.g6", &cycle(5));
    put(d.path(), "k3_2.g6", &complete_multipartite(3, 2));
    put(d.path(), "k33.g6", &complete_bipartite(3, 3));
    d
}

#[test]
fn params_examples() {
    let d = fixtures();
    for (file, chi, omega, og, a) in [
        ("c5.g6", 3, 2, Value::from(5), 1),
        ("k3_2.g6", 3, 3, Value::from(3), 2),
        ("k33.g6", 2, 2, Value::from("infinite"), 3),
    ] {
        let o = ramsey(d.path(), &["params", file]);
        assert_eq!(code(&o), 0, "{file}");
        let r = report(d.path(), "params-report.json");
        assert_eq!(r["outcome"]["chi"], chi, "{file}");
        assert_eq!(r["outcome"]["omega"], omega, "{file}");
        assert_eq!(r["outcome"]["odd_girth"], og, "{file}");
        assert_eq!(r["outcome"]["a"], a, "{file}");
    }
}

#[test]
fn params_reports_parse_position() {
    let d = fixtures();
    fs::write(d.path().join("bad.g6"), "B!\n").unwrap();
    let o = ramsey(d.path(), &["params", "bad.g6"]);
    assert_eq!(code(&o), 3);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn arrows_exit_codes() {
    let d = fixtures();
    assert_eq!(code(&ramsey(d.path(), &["arrows", "k6.g6", "k3.g6"])), 0);

    assert_eq!(code(&ramsey(d.path(), &["arrows", "k6.g6", "k3k2.g6"])), 1);
    let text = fs::read_to_string(d.path().join("arrows-certificate.json")).unwrap();
    let c = EdgeColouring::from_json(complete_graph(6), &text).unwrap();
    let pattern = disjoint_union(&complete_graph(3), &complete_graph(2));
    assert!(find_monochromatic_copy(&c, &pattern).is_none());
    for colour in 1..=2 {
        assert!(!oracle::has_subgraph(
            &oracle::colour_class(c.graph(), c.colours(), colour),
            &pattern
        ));
    }

    let o = ramsey(d.path(), &["arrows", "k10.g6", "k4.g6", "--budget-nodes", "10"]);
    assert_eq!(code(&o), 2);
    assert_eq!(report(d.path(), "arrows-report.json")["status"], "unknown");
}

#[test]
fn hypergraph_witness_is_verified() {
    let d = fixtures();
    let o = ramsey(
        d.path(),
        &["construct", "hypergraph", "--k", "2", "--n-cap", "3", "--eps", "1/2"],
    );
    assert_eq!(code(&o), 0);
    let h: Hypergraph = serde_json::from_str(&fs::read_to_string(d.path().join("hypergraph.json")).unwrap()).unwrap();
    assert!(oracle::hypergraph_girth(h.n(), h.hyperedges()).is_none_or(|g| g > 3));
    assert!(2 * oracle::hypergraph_independence(h.n(), h.hyperedges()) < h.n());
}

#[test]
fn missing_eps_is_a_usage_error() {
    let d = fixtures();
    let o = ramsey(d.path(), &["construct", "hypergraph", "--k", "2", "--n-cap", "3"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn tower_is_deterministic_and_verifiable() {
    let d = fixtures();
    let args = |out: &str| -> Vec<String> {
        [
            "construct",
            "tower",
            "--m",
            "2",
            "--n-cap",
            "3",
            "--levels",
            "1",
            "--eps",
            "1/2",
            "--seed",
            "7",
            "--out-dir",
            out,
        ]
        .map(String::from)
        .to_vec()
    };
    for out in ["a", "b"] {
        let a: Vec<String> = args(out);
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        assert_eq!(code(&ramsey(d.path(), &a)), 0);
    }
    for name in [
        "tower-trace.json",
        "tower-F0.g6",
        "tower-F1.g6",
        "construct-tower-report.json",
    ] {
        assert_eq!(
            fs::read(d.path().join("a").join(name)).unwrap(),
            fs::read(d.path().join("b").join(name)).unwrap(),
            "{name}"
        );
    }
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["tower-trace.json", "tower-F1.g6"] {
        assert_eq!(
            fs::read_to_string(d.path().join("a").join(name)).unwrap(),
            fs::read_to_string(golden.join(name)).unwrap(),
            "{name} differs from the golden copy"
        );
    }
    assert_eq!(code(&ramsey(d.path(), &["verify", "lemma3", "a/tower-trace.json"])), 0);
    assert_eq!(code(&ramsey(d.path(), &["verify", "lemma5", "a/tower-trace.json"])), 0);
}

#[test]
fn blowup_with_supplied_backing() {
    let d = fixtures();
    let backing = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
    fs::write(d.path().join("h.json"), serde_json::to_string(&backing).unwrap()).unwrap();
    let o = ramsey(
        d.path(),
        &[
            "construct",
            "blowup",
            "k3.g6",
            "--n-cap",
            "3",
            "--eps",
            "1",
            "--backing",
            "h.json",
        ],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let bt: BlowupTrace =
        serde_json::from_str(&fs::read_to_string(d.path().join("blowup-trace.json")).unwrap()).unwrap();
    bt.check().unwrap();
    assert_eq!(bt.result.edge_count(), 6);
    assert!(report(d.path(), "construct-blowup-report.json")["seed"].is_null());
    assert_eq!(code(&ramsey(d.path(), &["verify", "lemma3", "blowup-trace.json"])), 0);
    assert_eq!(code(&ramsey(d.path(), &["verify", "lemma5", "blowup-trace.json"])), 0);
}

#[test]
fn bad_backing_is_rejected() {
    let d = fixtures();
    // two triples sharing two vertices form a circuit of length two
    let backing = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    fs::write(d.path().join("h.json"), serde_json::to_string(&backing).unwrap()).unwrap();
    let o = ramsey(
        d.path(),
        &[
            "construct",
            "blowup",
            "k3.g6",
            "--n-cap",
            "3",
            "--eps",
            "1",
            "--backing",
            "h.json",
        ],
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn claim_on_honest_first_level() {
    let d = fixtures();
    let o = ramsey(
        d.path(),
        &["construct", "tower", "--m", "2", "--n-cap", "2", "--levels", "1"],
    );
    assert_eq!(code(&o), 0);
    let o = ramsey(
        d.path(),
        &["verify", "claim", "tower-trace.json", "--trials", "1000", "--seed", "1"],
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let r = report(d.path(), "verify-claim-report.json");
    assert_eq!(r["outcome"]["witness_total"], 3);
    assert_eq!(r["outcome"]["extraction_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn tower_out_of_budget_is_unknown() {
    let d = fixtures();
    let o = ramsey(
        d.path(),
        &["construct", "tower", "--m", "3", "--n-cap", "6", "--levels", "3"],
    );
    assert_eq!(code(&o), 2);
    let r = report(d.path(), "construct-tower-report.json");
    assert_eq!(r["outcome"]["size_lower_bounds"][1], "135");
}

#[test]
fn theorem8_construct_and_verify() {
    let d = fixtures();
    let o = ramsey(
        d.path(),
        &["construct", "theorem8", "k3.g6", "--n-cap", "6", "--eps", "1"],
    );
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let f: Theorem8Construction =
        serde_json::from_str(&fs::read_to_string(d.path().join("theorem8-trace.json")).unwrap()).unwrap();
    let text = fs::read_to_string(d.path().join("theorem8-colouring.json")).unwrap();
    let c = EdgeColouring::from_json(f.graph.clone(), &text).unwrap();
    let target = complete_multipartite(3, 2);
    for colour in 1..=2 {
        assert!(!oracle::has_subgraph(
            &oracle::colour_class(&f.graph, c.colours(), colour),
            &target
        ));
    }
    assert_eq!(
        code(&ramsey(d.path(), &["verify", "theorem8", "theorem8-trace.json"])),
        0
    );
    assert_eq!(
        code(&ramsey(
            d.path(),
            &["verify", "theorem8", "theorem8-trace.json", "--target", "k3_2.g6"]
        )),
        0
    );
    // K_3 has a = 1, so it is not a valid target
    assert_eq!(
        code(&ramsey(
            d.path(),
            &["verify", "theorem8", "theorem8-trace.json", "--target", "k3.g6"]
        )),
        3
    );
}

#[test]
fn pprofile_pass_and_corrupted() {
    let d = fixtures();
    assert_eq!(
        code(&ramsey(
            d.path(),
            &[
                "construct",
                "tower",
                "--m",
                "2",
                "--n-cap",
                "3",
                "--levels",
                "1",
                "--eps",
                "1/2"
            ]
        )),
        0
    );
    let t: ConstructionTrace =
        serde_json::from_str(&fs::read_to_string(d.path().join("tower-trace.json")).unwrap()).unwrap();
    let good = good_colouring(&t, &[1, 2]).unwrap();
    fs::write(d.path().join("good.json"), good.to_json()).unwrap();
    let o = ramsey(
        d.path(),
        &[
            "verify",
            "pprofile",
            "tower-F1.g6",
            "good.json",
            "--n-cap",
            "3",
            "--bounds",
            "1,2",
        ],
    );
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let bad = EdgeColouring::monochromatic(t.graph.clone(), 2, 1).unwrap();
    fs::write(d.path().join("bad.json"), bad.to_json()).unwrap();
    let o = ramsey(
        d.path(),
        &[
            "verify",
            "pprofile",
            "tower-F1.g6",
            "bad.json",
            "--n-cap",
            "3",
            "--bounds",
            "1,2",
        ],
    );
    assert_eq!(code(&o), 1);
    let v = report(d.path(), "pprofile-violation.json");
    let verts: Vec<usize> = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect();
    let sub = t.graph.induced_subgraph(&verts);
    assert!(verts.len() <= 3 && !oracle::is_k_colourable(&sub, 1));
}

#[test]
fn focus_suite_passes() {
    let d = fixtures();
    for q in ["2", "3"] {
        let o = ramsey(d.path(), &["verify", "focus", "--trials", "300", "--q", q]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
    }
}

#[test]
fn separate_examples() {
    let d = fixtures();
    let o = ramsey(d.path(), &["separate", "k3.g6", "k4.g6", "--n-max", "6"]);
    assert_eq!(code(&o), 0);
    let found = from_graph6_lines(&fs::read_to_string(d.path().join("separate-found.g6")).unwrap()).unwrap();
    assert_eq!(found, vec![complete_graph(6)]);
    assert!(stdout(&o).starts_with(&to_graph6(&complete_graph(6))));

    let o = ramsey(d.path(), &["separate", "k3.g6", "k3.g6", "--n-max", "5"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("proves nothing about Ramsey equivalence"));

    let o = ramsey(d.path(), &["separate", "k2.g6", "k3.g6", "--n-max", "3"]);
    assert_eq!(code(&o), 0);
    let found = from_graph6_lines(&fs::read_to_string(d.path().join("separate-found.g6")).unwrap()).unwrap();
    assert_eq!(found[0], complete_graph(2));
}

#[test]
fn written_graphs_round_trip_in_every_format() {
    let d = fixtures();
    for format in ["g6", "json", "dot"] {
        let out = format!("out-{format}");
        let o = ramsey(
            d.path(),
            &[
                "construct",
                "tower",
                "--m",
                "2",
                "--n-cap",
                "3",
                "--levels",
                "1",
                "--eps",
                "1/2",
                "--format",
                format,
                "--out-dir",
                &out,
            ],
        );
        assert_eq!(code(&o), 0);
        for level in 0..=1 {
            let text = fs::read_to_string(d.path().join(&out).join(format!("tower-F{level}.{format}"))).unwrap();
            let g = parse_graph(&text).unwrap();
            let again = match format {
                "g6" => format!("{}\n", to_graph6(&g)),
                "json" => format!("{}\n", to_json(&g)),
                _ => to_dot(&from_dot(&text).unwrap()),
            };
            assert_eq!(again, text, "{format} level {level}");
        }
    }
}

#[test]
fn written_json_round_trips() {
    let d = fixtures();
    assert_eq!(
        code(&ramsey(
            d.path(),
            &["construct", "theorem8", "k3.g6", "--n-cap", "6", "--eps", "1"]
        )),
        0
    );
    assert_eq!(
        code(&ramsey(
            d.path(),
            &["construct", "hypergraph", "--k", "3", "--n-cap", "2", "--eps", "1"]
        )),
        0
    );
    let read = |name: &str| fs::read_to_string(d.path().join(name)).unwrap();

    let f: Theorem8Construction = serde_json::from_str(&read("theorem8-trace.json")).unwrap();
    assert_eq!(pretty(&f), read("theorem8-trace.json"));
    let h: Hypergraph = serde_json::from_str(&read("hypergraph.json")).unwrap();
    assert_eq!(pretty(&h), read("hypergraph.json"));
    let c = EdgeColouring::from_json(f.graph.clone(), &read("theorem8-colouring.json")).unwrap();
    assert_eq!(format!("{}\n", c.to_json()), read("theorem8-colouring.json"));
    for name in ["construct-theorem8-report.json", "construct-hypergraph-report.json"] {
        let v: Value = serde_json::from_str(&read(name)).unwrap();
        assert_eq!(pretty(&v), read(name));
    }
}

#[test]
fn out_dir_from_environment() {
    let d = fixtures();
    let o = Command::new(env!("CARGO_BIN_EXE_ramsey"))
        .current_dir(d.path())
        .env("RAMSEY_OUT_DIR", "envdir")
        .args(["params", "c5.g6"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(d.path().join("envdir/params-report.json").exists());
}

#[test]
fn usage_errors_and_help() {
    let d = fixtures();
    assert_eq!(code(&ramsey(d.path(), &["bogus"])), 3);
    assert_eq!(code(&ramsey(d.path(), &["params"])), 3);
    assert_eq!(code(&ramsey(d.path(), &["params", "missing.g6"])), 3);
    assert_eq!(code(&ramsey(d.path(), &["--help"])), 0);
    assert_eq!(code(&ramsey(d.path(), &["verify", "lemma5", "k3.g6"])), 3);
}
