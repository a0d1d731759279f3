mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ggindex::extremal::Claim;
use ggindex::{Bounds, Execution, Index};

/// GG, NGG and ABC indices, graph families, isomorph-free enumeration and
/// exhaustive extremal checks.
#[derive(Parser, Debug)]
#[command(name = "ggindex", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Absolute tie tolerance for extremal scans.
    #[arg(long, default_value_t = 1e-9, value_parser = positive_f64, global = true)]
    pub epsilon: f64,
    /// Worker threads (1 runs everything sequentially).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    pub workers: Option<u32>,
    /// Enumeration bound applied to every graph class.
    #[arg(long, env = "GGINDEX_MAX_N", global = true)]
    pub max_n: Option<usize>,
    /// Output path (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock runtime in verification reports.
    #[arg(long, global = true)]
    pub timing: bool,
}

impl Global {
    pub fn bounds(&self) -> Bounds {
        self.max_n.map_or_else(Bounds::default, Bounds::uniform)
    }

    pub fn execution(&self) -> Execution {
        match self.workers {
            Some(1) => Execution::Sequential,
            _ => Execution::default(),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index values of every graph in one or more files (`-` reads stdin).
    Index {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Indices to report.
        #[arg(long, value_delimiter = ',', default_values_t = Index::ALL)]
        which: Vec<Index>,
        /// Include per-edge splits.
        #[arg(long)]
        splits: bool,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        input_format: InputFormat,
    },
    /// Build a family member, e.g. `P:10`, `KB:3,4`, `CH:9`, `AD:41,3`.
    Family { spec: String },
    /// Isomorph-free enumeration of connected graphs as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        trees: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        cyclomatic: Option<usize>,
        /// Report only the number of classes.
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustively check a claim over a range of orders.
    Verify {
        claim: Claim,
        /// Orders, e.g. `4..10`, `5,7,9` or `100,1000`.
        #[arg(long)]
        n: Option<String>,
        /// Maximum degree for the conjecture probes.
        #[arg(long)]
        delta: Option<usize>,
    },
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be a positive number, got {s}"))
    }
}

/// Parses `a..b`, `a..=b` (both inclusive) and comma lists of either.
pub fn parse_orders(text: &str, odd_only: bool) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().with_context(|| format!("bad range start in `{part}`"))?;
            let b: usize = b.trim().trim_start_matches('=').parse().with_context(|| format!("bad range end in `{part}`"))?;
            if a > b {
                bail!("empty range `{part}`");
            }
            out.extend((a..=b).filter(|n| !odd_only || n % 2 == 1));
        } else {
            out.push(part.parse().with_context(|| format!("bad order `{part}`"))?);
        }
    }
    if out.is_empty() {
        bail!("no orders given");
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let ok = match cli.command {
        Command::Index { files, which, splits, input_format } => {
            commands::index(g, &files, &which, splits, input_format)?
        }
        Command::Family { spec } => commands::family(g, &spec)?,
        Command::Enumerate { n, bipartite, trees, max_degree, cyclomatic, count_only } => {
            let mut c = if trees { ggindex::Constraints::trees(n) } else { ggindex::Constraints::connected(n) };
            if bipartite {
                c = c.bipartite();
            }
            if let Some(d) = max_degree {
                c = c.with_max_degree(d);
            }
            if let Some(r) = cyclomatic {
                c = c.with_cyclomatic(r);
            }
            commands::enumerate(g, c, count_only)?
        }
        Command::Verify { claim, n, delta } => commands::verify(g, claim, n.as_deref(), delta)?,
    };
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.workers.unwrap_or(0) as usize)
        .build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(cli)),
        Err(e) => Err(e.into()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_lists() {
        assert_eq!(parse_orders("4..7", false).unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(parse_orders("4..=6,9", false).unwrap(), vec![4, 5, 6, 9]);
        assert_eq!(parse_orders("5..11", true).unwrap(), vec![5, 7, 9, 11]);
        assert_eq!(parse_orders("1000, 10000", false).unwrap(), vec![1000, 10000]);
        assert!(parse_orders("9..4", false).is_err());
        assert!(parse_orders("x", false).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
