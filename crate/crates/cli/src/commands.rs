use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ggindex::enumerate::Enumerator;
use ggindex::extremal::{
    verify_claim, Claim, Direction, ExtremalCheck, ReportBody, VerificationReport, VerifyOptions,
};
use ggindex::{graph6, indices, Constraints, FamilySpec, Graph, Index};
use serde::Serialize;

use crate::output::{self, opt_sig, sig};
use crate::{parse_orders, Format, Global, InputFormat};

#[derive(Serialize)]
struct SplitRecord {
    u: usize,
    v: usize,
    n_u: usize,
    n_v: usize,
}

#[derive(Serialize)]
struct IndexRecord {
    source: String,
    line: usize,
    n: usize,
    m: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    gg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ngg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abc: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    splits: Option<Vec<SplitRecord>>,
}

#[derive(Serialize)]
struct IndexReport {
    records: Vec<IndexRecord>,
}

fn read_source(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Edge lists start with a line of two integers; graph6 never does.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let tokens: Vec<_> = l.split_whitespace().collect();
            tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok())
        })
}

fn load_graphs(path: &Path, format: InputFormat) -> Result<Vec<(usize, Graph)>> {
    let text = read_source(path)?;
    let edge_list = match format {
        InputFormat::Graph6 => false,
        InputFormat::Edgelist => true,
        InputFormat::Auto => looks_like_edge_list(&text),
    };
    let parsed =
        if edge_list { graph6::read_edge_lists_with_lines(&text) } else { graph6::decode_all_with_lines(&text) };
    parsed
        .into_iter()
        .map(|(line, g)| g.map(|g| (line, g)).map_err(|e| anyhow::anyhow!("{}: {e}", path.display())))
        .collect()
}

pub fn index(g: &Global, files: &[PathBuf], which: &[Index], splits: bool, input: InputFormat) -> Result<bool> {
    let mut records = Vec::new();
    for path in files {
        for (line, graph) in load_graphs(path, input)? {
            let s = indices::edge_splits(&graph);
            let want = |i: Index| which.contains(&i);
            records.push(IndexRecord {
                source: path.display().to_string(),
                line,
                n: graph.order(),
                m: graph.size(),
                graph6: graph6::encode(&graph),
                gg: want(Index::Gg).then(|| indices::gg_from_splits(&s)),
                ngg: want(Index::Ngg).then(|| indices::ngg_from_splits(&s)),
                abc: want(Index::Abc).then(|| indices::abc_index(&graph)),
                splits: splits.then(|| {
                    s.iter().map(|e| SplitRecord { u: e.u, v: e.v, n_u: e.n_u, n_v: e.n_v }).collect()
                }),
            });
        }
    }
    let text = match g.format {
        Format::Json => output::json(&IndexReport { records })?,
        Format::Csv if splits => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .flat_map(|r| {
                    r.splits.iter().flatten().map(move |e| {
                        vec![
                            r.source.clone(),
                            r.line.to_string(),
                            e.u.to_string(),
                            e.v.to_string(),
                            e.n_u.to_string(),
                            e.n_v.to_string(),
                        ]
                    })
                })
                .collect();
            output::csv(&["source", "line", "u", "v", "n_u", "n_v"], &rows)?
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.source.clone(),
                        r.line.to_string(),
                        r.n.to_string(),
                        r.m.to_string(),
                        r.graph6.clone(),
                        opt_sig(r.gg),
                        opt_sig(r.ngg),
                        opt_sig(r.abc),
                    ]
                })
                .collect();
            output::csv(&["source", "line", "n", "m", "graph6", "gg", "ngg", "abc"], &rows)?
        }
        Format::Text => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&format!("{}:{} {} n={} m={}", r.source, r.line, r.graph6, r.n, r.m));
                for (name, v) in [("gg", r.gg), ("ngg", r.ngg), ("abc", r.abc)] {
                    if let Some(v) = v {
                        out.push_str(&format!(" {name}={v:.4}"));
                    }
                }
                out.push('\n');
                for e in r.splits.iter().flatten() {
                    out.push_str(&format!("  {}-{} n_u={} n_v={}\n", e.u, e.v, e.n_u, e.n_v));
                }
            }
            out
        }
    };
    output::emit(g.out.as_deref(), &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct FamilyReport {
    spec: FamilySpec,
    n: usize,
    m: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    ngg_closed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ngg_closed_exact: Option<String>,
    gg: f64,
    ngg: f64,
    abc: f64,
}

pub fn family(g: &Global, spec: &str) -> Result<bool> {
    let spec: FamilySpec = spec.parse()?;
    let graph = spec.build()?;
    let values = indices::index_values(&graph);
    let report = FamilyReport {
        spec,
        n: graph.order(),
        m: graph.size(),
        graph6: graph6::encode(&graph),
        ngg_closed: spec.ngg_closed().ok(),
        ngg_closed_exact: spec.ngg_closed_exact().ok().map(|e| e.to_string()),
        gg: values.gg,
        ngg: values.ngg,
        abc: values.abc,
    };
    if let Some(path) = &g.out {
        output::emit(Some(path), &format!("{}\n", report.graph6))?;
    }
    let text = match g.format {
        Format::Json => output::json(&report)?,
        Format::Csv => output::csv(
            &["spec", "n", "m", "graph6", "ngg_closed", "ngg_closed_exact", "gg", "ngg", "abc"],
            &[vec![
                report.spec.to_string(),
                report.n.to_string(),
                report.m.to_string(),
                report.graph6.clone(),
                opt_sig(report.ngg_closed),
                report.ngg_closed_exact.clone().unwrap_or_default(),
                sig(report.gg),
                sig(report.ngg),
                sig(report.abc),
            ]],
        )?,
        Format::Text => {
            let mut out = format!("{} n={} m={}\n{}\n", report.spec, report.n, report.m, report.graph6);
            if let (Some(v), Some(e)) = (report.ngg_closed, &report.ngg_closed_exact) {
                out.push_str(&format!("ngg (closed form) = {v:.4} = {e}\n"));
            }
            out.push_str(&format!("gg={:.4} ngg={:.4} abc={:.4}\n", report.gg, report.ngg, report.abc));
            out
        }
    };
    output::emit(None, &text)?;
    Ok(true)
}

#[derive(Serialize)]
struct CountReport {
    constraints: Constraints,
    description: String,
    count: u64,
}

pub fn enumerate(g: &Global, constraints: Constraints, count_only: bool) -> Result<bool> {
    let description = constraints.describe();
    let e = Enumerator::new(constraints.clone(), &g.bounds())?.with_execution(g.execution());
    if count_only {
        let report = CountReport { constraints, description, count: e.count() };
        let text = match g.format {
            Format::Json => output::json(&report)?,
            Format::Csv => output::csv(&["description", "count"], &[vec![report.description, report.count.to_string()]])?,
            Format::Text => format!("{}: {}\n", report.description, report.count),
        };
        output::emit(g.out.as_deref(), &text)?;
    } else {
        let stream = e.collect();
        output::emit(g.out.as_deref(), &stream.to_graph6_lines())?;
        eprintln!("{}: {} graphs", description, stream.len());
    }
    Ok(true)
}

fn default_orders(claim: Claim) -> Vec<usize> {
    match claim {
        Claim::MaxBipartite | Claim::MinBipartite => (4..=10).collect(),
        Claim::Trees => (4..=12).collect(),
        Claim::Crossover => (5..=99).step_by(2).collect(),
        Claim::Asymptote => vec![100, 1_000, 10_000, 100_000, 1_000_000],
        Claim::Conjecture1 | Claim::Conjecture2 => (6..=10).collect(),
        Claim::Conjecture3 => (6..=12).collect(),
    }
}

pub fn verify(g: &Global, claim: Claim, orders: Option<&str>, delta: Option<usize>) -> Result<bool> {
    let ns = match orders {
        Some(text) => parse_orders(text, claim == Claim::Crossover)?,
        None => default_orders(claim),
    };
    let opts = VerifyOptions { bounds: g.bounds(), epsilon: g.epsilon, exec: g.execution(), timing: g.timing };
    let report = verify_claim(claim, &ns, delta, &opts)?;
    let text = match g.format {
        Format::Json => output::json(&report)?,
        Format::Csv => report_csv(&report)?,
        Format::Text => report.to_text(),
    };
    output::emit(g.out.as_deref(), &text)?;
    if !report.passed {
        eprintln!("{}: verification failed", claim.id());
    }
    Ok(report.passed)
}

fn witnesses(row: &ExtremalCheck) -> String {
    row.result.witnesses.iter().map(|w| w.graph6.as_str()).collect::<Vec<_>>().join(" ")
}

fn report_csv(report: &VerificationReport) -> Result<String> {
    match &report.body {
        ReportBody::Extremal(rows) => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.max_degree.map(|d| d.to_string()).unwrap_or_default(),
                        serde_json::to_value(r.outcome).map(|v| v.as_str().unwrap_or("").to_string()).unwrap_or_default(),
                        match r.result.objective.direction {
                            Direction::Min => "min".into(),
                            Direction::Max => "max".into(),
                        },
                        r.result.objective.index.name().into(),
                        sig(r.result.value),
                        witnesses(r),
                        r.predicted.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                        r.result.total_classes.to_string(),
                        opt_sig(r.result.runner_up),
                    ]
                })
                .collect();
            output::csv(
                &["n", "max_degree", "outcome", "direction", "index", "value", "witnesses", "predicted", "total_classes", "runner_up"],
                &rows,
            )
        }
        ReportBody::Crossover(rows) => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let label = |c| serde_json::to_value(c).map(|v| v.as_str().unwrap_or("").to_string()).unwrap_or_default();
                    vec![
                        r.n.to_string(),
                        r.k.to_string(),
                        sig(r.ngg_pendant),
                        sig(r.ngg_hook),
                        r.exact_difference.clone(),
                        label(r.comparison),
                        label(r.predicted),
                        r.agrees.to_string(),
                    ]
                })
                .collect();
            output::csv(
                &["n", "k", "ngg_pendant", "ngg_hook", "exact_difference", "comparison", "predicted", "agrees"],
                &rows,
            )
        }
        ReportBody::Asymptotic(rows) => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.n.to_string(), sig(r.ngg), sig(r.residual), sig(r.gg), sig(r.gg_ratio)])
                .collect();
            output::csv(&["n", "ngg", "residual", "gg", "gg_ratio"], &rows)
        }
    }
}
