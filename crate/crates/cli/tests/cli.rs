use serde_json::Value;
use snarklab::canon::canonical_key;
use snarklab::io::{read_any, write_graph6};
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_snarklab"));
    for (k, _) in std::env::vars() {
        if k.starts_with("SNARKLAB_") {
            c.env_remove(k);
        }
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn construct_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let p = dir.join(name);
    let mut a = vec!["construct"];
    a.extend_from_slice(args);
    a.extend_from_slice(&["--out", p.to_str().unwrap()]);
    let o = run(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p.to_str().unwrap().to_string()
}

fn three_snarks(dir: &Path) -> [String; 3] {
    [
        construct_to(dir, "a.g6", &["petersen"]),
        construct_to(dir, "b.g6", &["H", "1"]),
        construct_to(dir, "c.g6", &["snark44"]),
    ]
}

#[test]
fn analyze_known_snarks() {
    let t = tempfile::tempdir().unwrap();
    let [a, b, c] = three_snarks(t.path());
    let o = run(&["analyze", &a, &b, &c]);
    assert!(o.status.success());
    let rows = json_lines(&o);
    let want = [
        (10, 5, 5, 2, 2, "5"),
        (28, 5, 2, 3, 4, "7"),
        (44, 5, 4, 3, 4, "11"),
    ];
    for (r, (n, girth, zeta, rho, omega, ratio)) in rows.iter().zip(want) {
        assert_eq!(r["order"], n);
        assert_eq!(r["girth"], girth);
        assert_eq!(r["zeta"], zeta);
        assert_eq!(r["resistance"], rho);
        assert_eq!(r["oddness"], omega);
        assert_eq!(r["ratio"], ratio);
    }
    assert_eq!(rows[0]["bounds"]["ratio"], "exempt");
    assert_eq!(rows[1]["bounds"]["ratio"]["holds"], true);
    assert_eq!(rows[2]["bounds"]["ratio"]["bound"], "105/19");
    // no timings unless asked, so reruns are byte-identical
    assert!(rows[0].get("timings").is_none());
    assert_eq!(o.stdout, run(&["analyze", &a, &b, &c]).stdout);
    let timed = json_lines(&run(&["analyze", &a, "--timings"]));
    assert!(timed[0]["timings"]["oddness"].is_number());
}

#[test]
fn analyze_reports_bad_records_and_continues() {
    let t = tempfile::tempdir().unwrap();
    let p = t.path().join("mixed.txt");
    let petersen = write_graph6(&snarklab::constructions::petersen()).unwrap();
    let path_graph =
        write_graph6(&snarklab::MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
    std::fs::write(&p, format!("{petersen}\n!!!\n{path_graph}\n")).unwrap();
    let o = run(&["analyze", p.to_str().unwrap(), "--skip", "rho,omega"]);
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["oddness"], Value::Null);
    assert_eq!(rows[0]["zeta"], 5);
    assert!(rows[1]["error"].is_string());
    assert!(rows[2]["error"].as_str().unwrap().contains("not cubic"));
}

#[test]
fn bridged_graph_has_undefined_oddness() {
    let t = tempfile::tempdir().unwrap();
    let half = [(0, 1), (0, 2), (0, 4), (4, 3), (1, 2), (1, 3), (2, 3)];
    let mut es: Vec<(u32, u32)> = half.to_vec();
    es.extend(half.iter().map(|&(a, b)| (a + 5, b + 5)));
    es.push((4, 9));
    let g = snarklab::MultiGraph::from_edges(10, &es).unwrap();
    let p = t.path().join("b.g6");
    std::fs::write(&p, write_graph6(&g).unwrap()).unwrap();
    let rows = json_lines(&run(&["analyze", p.to_str().unwrap()]));
    assert_eq!(rows[0]["oddness"], "undefined: bridge");
    assert_eq!(rows[0]["edge_connectivity"], 1);
}

#[test]
fn batch_summary_and_resume() {
    let t = tempfile::tempdir().unwrap();
    let d = t.path().join("graphs");
    std::fs::create_dir(&d).unwrap();
    three_snarks(&d);
    let cache = t.path().join("cache.jsonl");
    let c = cache.to_str().unwrap();
    let first = run(&["batch", d.to_str().unwrap(), "--cache", c, "--jobs", "2"]);
    assert!(
        first.status.success(),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    let lines = json_lines(&first);
    assert_eq!(lines.len(), 4);
    let s = &lines[3]["summary"]["zeta_classes"];
    assert_eq!(s["5"]["min_ratio"], "5");
    assert_eq!(s["2"]["min_ratio"], "7");
    assert_eq!(s["4"]["min_ratio"], "11");
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 3);

    let again = bin()
        .args(["batch", d.to_str().unwrap(), "--cache", c, "--resume"])
        .env("RUST_LOG", "info")
        .output()
        .unwrap();
    assert_eq!(again.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("0 records computed"));
    // nothing new was appended
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), 3);

    let fail = run(&["batch", d.to_str().unwrap(), "--expect-oddness", "2"]);
    assert_eq!(fail.status.code(), Some(1));
}

#[test]
fn batch_edge_cases() {
    let t = tempfile::tempdir().unwrap();
    let o = run(&["batch", t.path().to_str().unwrap()]);
    assert!(o.status.success());
    let l = json_lines(&o);
    assert_eq!(l[0]["summary"]["records"], 0);
    let missing = t.path().join("missing");
    assert_eq!(
        run(&["batch", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["analyze", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );
}

#[test]
fn cache_matches_fresh_computation() {
    let t = tempfile::tempdir().unwrap();
    // every 45th catalogue graph: 100 samples across all orders
    let lines: Vec<&str> = snarklab::catalogue::fixture_text()
        .lines()
        .filter(|l| !l.starts_with(">>"))
        .step_by(45)
        .take(100)
        .collect();
    assert_eq!(lines.len(), 100);
    let p = t.path().join("sample.g6");
    std::fs::write(&p, lines.join("\n")).unwrap();
    let p = p.to_str().unwrap();
    let cache = t.path().join("c.jsonl");
    let c = cache.to_str().unwrap();
    let fresh = run(&["analyze", p, "--skip", "rho"]);
    let filled = run(&["analyze", p, "--skip", "rho", "--cache", c]);
    let cached = run(&["analyze", p, "--skip", "rho", "--cache", c]);
    assert!(fresh.status.success());
    assert_eq!(fresh.stdout, filled.stdout);
    assert_eq!(fresh.stdout, cached.stdout);

    // corrupt and torn entries are dropped and recomputed
    let text = std::fs::read_to_string(&cache).unwrap();
    let kept: Vec<&str> = text.lines().skip(5).collect();
    std::fs::write(
        &cache,
        format!("not json\n{}\n{{\"options\":", kept.join("\n")),
    )
    .unwrap();
    let repaired = run(&["analyze", p, "--skip", "rho", "--cache", c]);
    assert!(repaired.status.success());
    assert_eq!(fresh.stdout, repaired.stdout);
    // different options do not share entries
    let other = run(&[
        "analyze",
        p,
        "--skip",
        "rho",
        "--max-zeta",
        "3",
        "--cache",
        c,
    ]);
    assert_ne!(fresh.stdout, other.stdout);
}

#[test]
fn config_precedence() {
    let t = tempfile::tempdir().unwrap();
    let p = construct_to(t.path(), "p.g6", &["petersen"]);
    let cfg = t.path().join("snarklab.conf");
    std::fs::write(&cfg, "max_zeta = 3\nskip = rho,omega\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let zeta = |o: Output| json_lines(&o)[0]["zeta"].clone();
    assert_eq!(zeta(run(&["analyze", &p, "--config", cfg])), ">=4");
    let env = bin()
        .args(["analyze", &p, "--config", cfg])
        .env("SNARKLAB_MAX_ZETA", "4")
        .output()
        .unwrap();
    assert_eq!(zeta(env), ">=5");
    let flag = bin()
        .args(["analyze", &p, "--config", cfg, "--max-zeta", "7"])
        .env("SNARKLAB_MAX_ZETA", "4")
        .output()
        .unwrap();
    assert_eq!(zeta(flag), 5);
    let via_env = bin()
        .args(["analyze", &p])
        .env("SNARKLAB_CONFIG", cfg)
        .output()
        .unwrap();
    assert_eq!(zeta(via_env), ">=4");
    let bad = bin()
        .args(["analyze", &p])
        .env("SNARKLAB_MAX_ZETA", "lots")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

fn graph_in(path: &str) -> snarklab::MultiGraph {
    read_any(&std::fs::read_to_string(path).unwrap())
        .remove(0)
        .graph
        .unwrap()
}

#[test]
fn constructions() {
    let t = tempfile::tempdir().unwrap();
    let m = construct_to(t.path(), "m2.g6", &["M", "2"]);
    assert_eq!(graph_in(&m).order(), 198);
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{m}.json")).unwrap()).unwrap();
    assert_eq!(side[0]["order"], 198);
    assert!(side[0]["trace"]["circuit"].is_array());

    let ring = construct_to(t.path(), "ring.g6", &["ring", "N2", "N1"]);
    let s44 = construct_to(t.path(), "s44.g6", &["snark44"]);
    assert_eq!(graph_in(&ring).order(), 44);
    assert_eq!(
        canonical_key(&graph_in(&ring)),
        canonical_key(&graph_in(&s44))
    );

    let r2 = construct_to(t.path(), "r2.g6", &["R", "2"]);
    assert_eq!(graph_in(&r2).order(), 40);

    let z = construct_to(t.path(), "z.txt", &["Z"]);
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(format!("{z}.json")).unwrap()).unwrap();
    assert_eq!(side[0]["terminals"].as_array().unwrap().len(), 7);

    let multi = run(&["construct", "petersen", "--format", "multi"]);
    assert!(stdout(&multi).starts_with("10 15\n"));

    assert_eq!(run(&["construct", "flower", "4"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "R"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "ring", "K4"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "nonsense"]).status.code(), Some(2));
}

#[test]
fn reductions() {
    let t = tempfile::tempdir().unwrap();
    let p = construct_to(t.path(), "p.g6", &["petersen"]);
    let h = construct_to(t.path(), "h1.g6", &["H", "1"]);
    let o = json_lines(&run(&["reduce", &p, "--rule", "all"]));
    assert_eq!(o[0]["steps"].as_array().unwrap().len(), 0);
    assert_eq!(o[0]["output_order"], 10);
    let o = json_lines(&run(&["reduce", &h, "--rule", "all"]));
    assert_eq!(o[0]["steps"].as_array().unwrap().len(), 0);
    assert_eq!(o[0]["oddness"], 4);

    let tri = snarklab::reductions::expand_vertex(&snarklab::constructions::petersen(), 0).unwrap();
    let tp = t.path().join("tri.g6");
    std::fs::write(&tp, write_graph6(&tri).unwrap()).unwrap();
    let out = t.path().join("reduced.g6");
    let r = run(&[
        "reduce",
        tp.to_str().unwrap(),
        "--rule",
        "girth4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    let o = json_lines(&r);
    assert_eq!(o[0]["steps"][0]["rule"], "short-circuit");
    let reduced = graph_in(out.to_str().unwrap());
    assert_eq!(
        canonical_key(&reduced),
        canonical_key(&snarklab::constructions::petersen())
    );

    let k4 = t.path().join("k4.g6");
    std::fs::write(&k4, "C~\n").unwrap();
    assert_eq!(
        run(&["reduce", k4.to_str().unwrap()]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["reduce", &p, "--rule", "girth9"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "oracles", "--size-cap", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS  9"));
    let o = run(&[
        "verify",
        "properties",
        "--size-cap",
        "10",
        "--format",
        "json",
        "--seed",
        "3",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let l = json_lines(&o);
    assert_eq!(l[0]["criterion"], 8);
    assert_eq!(l[0]["passed"], true);
    assert_eq!(run(&["verify", "nothing"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
