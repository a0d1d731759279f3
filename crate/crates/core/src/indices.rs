//! Per-edge closer-vertex counts and the GG, NGG and ABC indices.

use serde::Serialize;

use crate::exact::SurdSum;
use crate::exec::{self, Execution};
use crate::graph::{DistanceMatrix, Graph};

/// Edge count from which summation switches to compensated accumulation.
pub const COMPENSATED_THRESHOLD: usize = 10_000;

/// Default relative tolerance for the bipartite GG/NGG relation.
pub const DEFAULT_RELATION_TOLERANCE: f64 = 1e-12;

/// For edge `uv`: `n_u` vertices strictly closer to `u`, `n_v` strictly
/// closer to `v`. Equidistant vertices count for neither side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSplit {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
}

impl EdgeSplit {
    pub fn gg_term(&self) -> f64 {
        let (a, b) = (self.n_u as f64, self.n_v as f64);
        ((a + b - 2.0) / (a * b)).sqrt()
    }

    pub fn ngg_term(&self) -> f64 {
        1.0 / ((self.n_u as f64) * (self.n_v as f64)).sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IndexValues {
    pub gg: f64,
    pub ngg: f64,
    pub abc: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Index {
    Gg,
    Ngg,
    Abc,
}

impl Index {
    pub const ALL: [Index; 3] = [Index::Gg, Index::Ngg, Index::Abc];

    pub fn name(self) -> &'static str {
        match self {
            Index::Gg => "gg",
            Index::Ngg => "ngg",
            Index::Abc => "abc",
        }
    }

    pub fn evaluate(self, g: &Graph) -> f64 {
        match self {
            Index::Gg => gg_index(g),
            Index::Ngg => ngg_index(g),
            Index::Abc => abc_index(g),
        }
    }

    /// The index as an exact sum of rational multiples of square roots.
    pub fn exact(self, g: &Graph) -> SurdSum {
        match self {
            Index::Gg => {
                let mut s = SurdSum::zero();
                for e in edge_splits(g) {
                    let (a, b) = (e.n_u as u64, e.n_v as u64);
                    s.add_sqrt_ratio(a + b - 2, a * b, 1);
                }
                s
            }
            Index::Ngg => {
                let mut s = SurdSum::zero();
                for e in edge_splits(g) {
                    s.add_sqrt_ratio(1, (e.n_u * e.n_v) as u64, 1);
                }
                s
            }
            Index::Abc => {
                let mut s = SurdSum::zero();
                for &(u, v) in g.edges() {
                    let (a, b) = (g.degree(u) as u64, g.degree(v) as u64);
                    s.add_sqrt_ratio(a + b - 2, a * b, 1);
                }
                s
            }
        }
    }
}

impl std::fmt::Display for Index {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Index {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gg" => Ok(Index::Gg),
            "ngg" => Ok(Index::Ngg),
            "abc" => Ok(Index::Abc),
            other => Err(format!("unknown index `{other}` (expected gg, ngg or abc)")),
        }
    }
}

pub fn edge_splits(g: &Graph) -> Vec<EdgeSplit> {
    let exec = Execution::for_order(g.order());
    edge_splits_with(g, &DistanceMatrix::compute(g, exec), exec)
}

pub fn edge_splits_with(g: &Graph, dist: &DistanceMatrix, exec: Execution) -> Vec<EdgeSplit> {
    exec::map_slice(exec, g.edges(), |&(u, v)| {
        let (du, dv) = (dist.row(u), dist.row(v));
        let mut n_u = 0;
        let mut n_v = 0;
        for (a, b) in du.iter().zip(dv) {
            if a < b {
                n_u += 1;
            } else if b < a {
                n_v += 1;
            }
        }
        EdgeSplit { u, v, n_u, n_v }
    })
}

/// Sums in edge order; compensated (Neumaier) once the term count
/// reaches [`COMPENSATED_THRESHOLD`].
pub fn sum_terms(terms: &[f64]) -> f64 {
    if terms.len() < COMPENSATED_THRESHOLD {
        terms.iter().sum()
    } else {
        neumaier_sum(terms.iter().copied())
    }
}

pub fn neumaier_sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

pub fn gg_from_splits(splits: &[EdgeSplit]) -> f64 {
    let terms: Vec<f64> = splits.iter().map(EdgeSplit::gg_term).collect();
    sum_terms(&terms)
}

pub fn ngg_from_splits(splits: &[EdgeSplit]) -> f64 {
    let terms: Vec<f64> = splits.iter().map(EdgeSplit::ngg_term).collect();
    sum_terms(&terms)
}

pub fn gg_index(g: &Graph) -> f64 {
    gg_from_splits(&edge_splits(g))
}

pub fn ngg_index(g: &Graph) -> f64 {
    ngg_from_splits(&edge_splits(g))
}

pub fn abc_index(g: &Graph) -> f64 {
    let terms: Vec<f64> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.degree(u) as f64, g.degree(v) as f64);
            ((a + b - 2.0) / (a * b)).sqrt()
        })
        .collect();
    sum_terms(&terms)
}

/// All three indices from a single distance computation.
pub fn index_values(g: &Graph) -> IndexValues {
    let splits = edge_splits(g);
    IndexValues { gg: gg_from_splits(&splits), ngg: ngg_from_splits(&splits), abc: abc_index(g) }
}

/// Outcome of checking `GG = NGG * sqrt(n - 2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelationCheck {
    /// Bipartite input: whether the relation holds within the tolerance.
    Bipartite { holds: bool, gg: f64, scaled_ngg: f64 },
    /// Non-bipartite input: how many edges leave some vertex unassigned
    /// (`n_u + n_v < n`).
    NonBipartite { short_edges: usize, edges: usize },
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        matches!(self, RelationCheck::Bipartite { holds: true, .. })
    }
}

pub fn check_bipartite_relation(g: &Graph, rel_tol: f64) -> RelationCheck {
    let splits = edge_splits(g);
    if g.is_bipartite() {
        let gg = gg_from_splits(&splits);
        let scaled_ngg = ngg_from_splits(&splits) * ((g.order() as f64 - 2.0).max(0.0)).sqrt();
        let holds = (gg - scaled_ngg).abs() <= rel_tol * gg.abs().max(f64::MIN_POSITIVE);
        RelationCheck::Bipartite { holds: holds || gg == scaled_ngg, gg, scaled_ngg }
    } else {
        let n = g.order();
        let short_edges = splits.iter().filter(|e| e.n_u + e.n_v < n).count();
        RelationCheck::NonBipartite { short_edges, edges: splits.len() }
    }
}
