//! Parametric graph families and their closed-form NGG values.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::FamilyError;
use crate::exact::SurdSum;
use crate::graph::Graph;
use crate::indices::neumaier_sum;

/// A family instance, written `P:n`, `C:n`, `K:n`, `KB:a,b`, `S:n`,
/// `CP:n`, `CH:n`, `TH:a,b,c` or `AD:n,d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// `C'_n`: even cycle `C_{n-1}` plus a pendant vertex.
    CyclePendant(usize),
    /// `C''_n`: cycle with a hook, realized as `Θ(n-3, 2, 2)`.
    CycleHook(usize),
    Theta(usize, usize, usize),
    /// `T_{n,d}`: breadth-first filled almost dendrimer.
    AlmostDendrimer(usize, usize),
}

fn param_err(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Parameter { family, reason: reason.into() }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
            FamilySpec::Star(n) => star(n),
            FamilySpec::CyclePendant(n) => cycle_pendant(n),
            FamilySpec::CycleHook(n) => cycle_hook(n),
            FamilySpec::Theta(a, b, c) => theta(a, b, c),
            FamilySpec::AlmostDendrimer(n, d) => almost_dendrimer(n, d),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::CyclePendant(n)
            | FamilySpec::CycleHook(n)
            | FamilySpec::AlmostDendrimer(n, _) => n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Theta(a, b, c) => a + b + c - 1,
        }
    }

    /// Closed-form NGG, where one is known.
    pub fn ngg_closed(&self) -> Result<f64, FamilyError> {
        self.check()?;
        match *self {
            FamilySpec::Path(n) => Ok(path_ngg(n)),
            FamilySpec::Cycle(n) if n % 2 == 0 => Ok(2.0),
            FamilySpec::CompleteBipartite(a, b) => Ok(((a * b) as f64).sqrt()),
            FamilySpec::Star(n) => Ok(((n - 1) as f64).sqrt()),
            FamilySpec::CyclePendant(n) => {
                let k = ((n - 1) / 2) as f64;
                Ok(1.0 / (2.0 * k).sqrt() + 2.0 * k / (k * (k + 1.0)).sqrt())
            }
            FamilySpec::CycleHook(n) => {
                let k = ((n - 1) / 2) as f64;
                Ok((2.0 * k + 2.0) / (k * (k + 1.0)).sqrt())
            }
            _ => Err(FamilyError::NoClosedForm(self.to_string())),
        }
    }

    /// Closed-form NGG as an exact surd sum (same coverage as
    /// [`ngg_closed`](Self::ngg_closed)).
    pub fn ngg_closed_exact(&self) -> Result<SurdSum, FamilyError> {
        self.check()?;
        let mut s = SurdSum::zero();
        match *self {
            FamilySpec::Path(n) => {
                for i in 1..n {
                    s.add_sqrt_ratio(1, (i * (n - i)) as u64, 1);
                }
            }
            FamilySpec::Cycle(n) if n % 2 == 0 => s = SurdSum::term(2, 1, 1),
            FamilySpec::CompleteBipartite(a, b) => s.add_sqrt_ratio((a * b) as u64, 1, 1),
            FamilySpec::Star(n) => s.add_sqrt_ratio((n - 1) as u64, 1, 1),
            FamilySpec::CyclePendant(n) => {
                let k = ((n - 1) / 2) as u64;
                s.add_sqrt_ratio(1, 2 * k, 1);
                s.add_sqrt_ratio(1, k * (k + 1), 2 * k as i64);
            }
            FamilySpec::CycleHook(n) => {
                let k = ((n - 1) / 2) as u64;
                s.add_sqrt_ratio(1, k * (k + 1), 2 * k as i64 + 2);
            }
            _ => return Err(FamilyError::NoClosedForm(self.to_string())),
        }
        Ok(s)
    }

    /// Validates parameters without building the graph.
    pub fn check(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::Path(n) if n < 2 => Err(param_err("path", "need n >= 2")),
            FamilySpec::Cycle(n) if n < 3 => Err(param_err("cycle", "need n >= 3")),
            FamilySpec::Complete(n) if n < 2 => Err(param_err("complete graph", "need n >= 2")),
            FamilySpec::Star(n) if n < 2 => Err(param_err("star", "need n >= 2")),
            FamilySpec::CompleteBipartite(a, b) if a < 1 || b < 1 => {
                Err(param_err("complete bipartite graph", "need a, b >= 1"))
            }
            FamilySpec::CyclePendant(n) if n < 5 || n % 2 == 0 => {
                Err(param_err("cycle with a pendant edge", format!("need odd n >= 5, got {n}")))
            }
            FamilySpec::CycleHook(n) if n < 5 || n % 2 == 0 => {
                Err(param_err("cycle with a hook", format!("need odd n >= 5, got {n}")))
            }
            FamilySpec::Theta(a, b, c) => check_theta(a, b, c),
            FamilySpec::AlmostDendrimer(n, d) if n < 2 || d < 2 => {
                Err(param_err("almost dendrimer", "need n >= 2 and d >= 2"))
            }
            _ => Ok(()),
        }
    }
}

fn check_theta(a: usize, b: usize, c: usize) -> Result<(), FamilyError> {
    if !(a >= b && b >= c && c >= 1) {
        return Err(param_err("theta graph", format!("need a >= b >= c >= 1, got ({a},{b},{c})")));
    }
    if b == 1 {
        return Err(param_err("theta graph", "at most one path may have length 1"));
    }
    Ok(())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P:{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "KB:{a},{b}"),
            FamilySpec::Star(n) => write!(f, "S:{n}"),
            FamilySpec::CyclePendant(n) => write!(f, "CP:{n}"),
            FamilySpec::CycleHook(n) => write!(f, "CH:{n}"),
            FamilySpec::Theta(a, b, c) => write!(f, "TH:{a},{b},{c}"),
            FamilySpec::AlmostDendrimer(n, d) => write!(f, "AD:{n},{d}"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let syntax = || FamilyError::Syntax(text.to_string());
        let (kind, args) = text.trim().split_once(':').ok_or_else(syntax)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| syntax())?;
        let spec = match (kind.trim().to_ascii_uppercase().as_str(), nums.as_slice()) {
            ("P", &[n]) => FamilySpec::Path(n),
            ("C", &[n]) => FamilySpec::Cycle(n),
            ("K", &[n]) => FamilySpec::Complete(n),
            ("KB", &[a, b]) => FamilySpec::CompleteBipartite(a, b),
            ("S", &[n]) => FamilySpec::Star(n),
            ("CP", &[n]) => FamilySpec::CyclePendant(n),
            ("CH", &[n]) => FamilySpec::CycleHook(n),
            ("TH", &[a, b, c]) => FamilySpec::Theta(a, b, c),
            ("AD", &[n, d]) => FamilySpec::AlmostDendrimer(n, d),
            _ => return Err(syntax()),
        };
        Ok(spec)
    }
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Path(n).check()?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Cycle(n).check()?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Complete(n).check()?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Parts `{0..a}` and `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    FamilySpec::CompleteBipartite(a, b).check()?;
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Ok(Graph::new(a + b, &edges)?)
}

/// Center 0.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::Star(n).check()?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Cycle on `0..n-1` with vertex `n-1` hanging off vertex 0.
pub fn cycle_pendant(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::CyclePendant(n).check()?;
    let c = n - 1;
    let mut edges: Vec<_> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    edges.push((0, n - 1));
    Ok(Graph::new(n, &edges)?)
}

pub fn cycle_hook(n: usize) -> Result<Graph, FamilyError> {
    FamilySpec::CycleHook(n).check()?;
    theta(n - 3, 2, 2)
}

/// Hubs 0 and 1 joined by internally disjoint paths of lengths `a`, `b`, `c`.
pub fn theta(a: usize, b: usize, c: usize) -> Result<Graph, FamilyError> {
    check_theta(a, b, c)?;
    let n = a + b + c - 1;
    let mut edges = Vec::with_capacity(a + b + c);
    let mut next = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::new(n, &edges)?)
}

/// Breadth-first filled tree: the root takes up to `d` children, every
/// later vertex up to `d - 1`, parents filled to capacity in order.
pub fn almost_dendrimer(n: usize, d: usize) -> Result<Graph, FamilyError> {
    FamilySpec::AlmostDendrimer(n, d).check()?;
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    let mut parent = 0;
    while next < n {
        let cap = if parent == 0 { d } else { d - 1 };
        for _ in 0..cap {
            if next == n {
                break;
            }
            edges.push((parent, next));
            next += 1;
        }
        parent += 1;
    }
    Ok(Graph::new(n, &edges)?)
}

/// `sum_{i=1}^{n-1} 1 / sqrt(i (n - i))`, compensated for long paths.
pub fn path_ngg(n: usize) -> f64 {
    let nf = n as f64;
    let terms = (1..n).map(|i| {
        let x = i as f64;
        1.0 / (x * (nf - x)).sqrt()
    });
    if n >= crate::indices::COMPENSATED_THRESHOLD {
        neumaier_sum(terms)
    } else {
        terms.sum()
    }
}

/// Limit of the path NGG as the order grows.
pub fn path_ngg_limit() -> f64 {
    std::f64::consts::PI
}
