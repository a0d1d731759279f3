use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ggindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggindex"))
        .args(args)
        .env_remove("GGINDEX_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", stderr(o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn index_of_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    // P4 and K5
    let f = write(dir.path(), "g.g6", "Ch\nD~{\n");
    let v = json(&ggindex(&["index", &f]));
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!((records[0]["ngg"].as_f64().unwrap() - 1.6547).abs() < 5e-5);
    assert_eq!(records[1]["gg"].as_f64().unwrap(), 0.0);
    assert_eq!(records[1]["line"], 2);
}

#[test]
fn index_subset_and_splits() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p3.g6", "Bg\n");
    let v = json(&ggindex(&["index", &f, "--which", "ngg", "--splits"]));
    let r = &v["records"][0];
    assert!(r.get("gg").is_none() && r.get("abc").is_none());
    assert_eq!(r["splits"].as_array().unwrap().len(), 2);
    assert_eq!(r["splits"][0]["n_u"], 1);
    assert_eq!(r["splits"][0]["n_v"], 2);
}

#[test]
fn malformed_lines_are_named() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.g6", "Ch\nC!\n");
    let o = ggindex(&["index", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn disconnected_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "two.txt", "4 2\n0 1\n2 3\n");
    let o = ggindex(&["index", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("disconnected"), "{}", stderr(&o));
}

#[test]
fn edge_lists_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "graphs.txt", "# a path and a star\n4 3\n0 1\n1 2\n2 3\n\n4 3\n0 1\n0 2\n0 3\n");
    let v = json(&ggindex(&["index", &f, "--format", "json"]));
    assert_eq!(v["records"].as_array().unwrap().len(), 2);
    assert!((v["records"][1]["ngg"].as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-9);
    assert_eq!(v["records"][1]["line"], 7);

    let mut child = Command::new(env!("CARGO_BIN_EXE_ggindex"))
        .args(["index", "-", "--format", "csv"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"Ch\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let text = stdout(&out);
    assert!(text.starts_with("source,line,n,m,graph6,gg,ngg,abc\n"));
    assert!(text.contains("-,1,4,3,Ch,"));
}

#[test]
fn family_reports_closed_forms() {
    let v = json(&ggindex(&["family", "CH:9"]));
    assert_eq!(v["spec"], "CH:9");
    assert_eq!(v["ngg_closed_exact"], "sqrt(5)");
    assert!((v["ngg_closed"].as_f64().unwrap() - 10.0 / 20f64.sqrt()).abs() < 1e-9);

    let v = json(&ggindex(&["family", "AD:41,3"]));
    assert_eq!(v["n"], 41);
    assert_eq!(v["m"], 40);
    assert!(v.get("ngg_closed").is_none());

    let o = ggindex(&["family", "CP:4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd"));
    assert_eq!(ggindex(&["family", "nonsense"]).status.code(), Some(2));
}

#[test]
fn family_index_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut cases = Vec::new();
    for n in [2usize, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15, 17, 50, 99, 101, 199, 256, 399, 400] {
        let mut specs = vec![format!("P:{n}"), format!("S:{n}"), format!("KB:{},{}", n / 2, n.div_ceil(2))];
        if n >= 4 && n % 2 == 0 {
            specs.push(format!("C:{n}"));
        }
        if n >= 5 && n % 2 == 1 {
            specs.push(format!("CP:{n}"));
            specs.push(format!("CH:{n}"));
        }
        for spec in specs {
            if spec == "KB:1,1" || spec.starts_with("KB:0") {
                continue;
            }
            let file = dir.path().join(format!("{}.g6", spec.replace([':', ','], "_")));
            let v = json(&ggindex(&["family", &spec, "--out", file.to_str().unwrap()]));
            cases.push((spec, file, v["ngg_closed"].clone()));
        }
    }
    let files: Vec<&str> = cases.iter().map(|c| c.1.to_str().unwrap()).collect();
    let mut args = vec!["index", "--which", "ngg"];
    args.extend(files);
    let v = json(&ggindex(&args));
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), cases.len());
    for ((spec, _, closed), rec) in cases.iter().zip(records) {
        // Both sides are rounded to the same 10 significant digits.
        assert_eq!(&rec["ngg"], closed, "{spec}");
    }
}

#[test]
fn enumerate_streams_graph6() {
    let o = ggindex(&["enumerate", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 112);
    assert!(stderr(&o).contains("112"));

    let o = ggindex(&["enumerate", "--n", "7", "--trees"]);
    assert_eq!(stdout(&o).lines().count(), 11);

    let v = json(&ggindex(&["enumerate", "--n", "8", "--bipartite", "--max-degree", "3", "--count-only"]));
    assert!(v["count"].as_u64().unwrap() > 0);
    let v = json(&ggindex(&["enumerate", "--n", "6", "--cyclomatic", "0", "--count-only"]));
    assert_eq!(v["count"], 6);
}

#[test]
fn enumeration_bounds_are_policy() {
    let o = ggindex(&["enumerate", "--n", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-n"), "{}", stderr(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_ggindex"))
        .args(["enumerate", "--n", "6", "--count-only"])
        .env("GGINDEX_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = ggindex(&["enumerate", "--n", "6", "--count-only", "--max-n", "6"]);
    assert!(o.status.success());
}

#[test]
fn verify_claims() {
    let v = json(&ggindex(&["verify", "max-bipartite", "--n", "4..10"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 7);

    let v = json(&ggindex(&["verify", "crossover", "--n", "5..31"]));
    assert_eq!(v["passed"], true);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 14);
    let n15 = rows.iter().find(|r| r["n"] == 15).unwrap();
    assert_eq!(n15["comparison"], "equal");
    assert!(v["notes"][0].as_str().unwrap().contains("n = 15"));

    let v = json(&ggindex(&["verify", "asymptote", "--n", "1000,10000,100000"]));
    let residuals: Vec<f64> = v["rows"].as_array().unwrap().iter().map(|r| r["residual"].as_f64().unwrap()).collect();
    assert!(residuals.windows(2).all(|w| w[1] < w[0] && w[1] > 0.0));
}

#[test]
fn failed_verification_sets_exit_status() {
    let o = ggindex(&["verify", "conjecture2", "--n", "6", "--delta", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["rows"][0]["outcome"], "counterexample found");

    let o = ggindex(&["verify", "conjecture2", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ggindex(&["verify", "crossover", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_identical_across_runs_and_workers() {
    let run = |workers: &str| ggindex(&["verify", "min-bipartite", "--n", "4..10", "--workers", workers]).stdout;
    let one = run("1");
    assert_eq!(one, run("1"));
    assert_eq!(one, run("3"));
    let run = |workers: &str| ggindex(&["enumerate", "--n", "7", "--workers", workers]).stdout;
    assert_eq!(run("1"), run("4"));
}

#[test]
fn text_and_csv_reports() {
    let o = ggindex(&["verify", "trees", "--n", "4..6", "--format", "text"]);
    let text = stdout(&o);
    assert!(text.contains("result: PASS"));
    assert!(text.contains("n=4"));

    let o = ggindex(&["verify", "min-bipartite", "--n", "7", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("n,max_degree,outcome"));
    assert!(lines.next().unwrap().contains(",pass,min,ngg,2.026"));

    let o = ggindex(&["verify", "max-bipartite", "--n", "4", "--timing", "--format", "json"]);
    assert!(json(&o).get("runtime_ms").is_some());
}

#[test]
fn epsilon_and_workers_are_validated() {
    assert_eq!(ggindex(&["verify", "trees", "--epsilon", "0"]).status.code(), Some(2));
    assert_eq!(ggindex(&["verify", "trees", "--workers", "0"]).status.code(), Some(2));
}
