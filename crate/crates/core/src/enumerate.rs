//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! Each class on `k + 1` vertices is produced from exactly one parent
//! class on `k` vertices: the graph left after deleting its canonical
//! deletion vertex. The deletion vertex is chosen among non-cut vertices
//! (so every intermediate graph is connected) by a cheap invariant, with
//! ties broken by canonical position. A child is kept only when the
//! vertex just added lies in the automorphism orbit of that canonical
//! deletion vertex; equivalent children of the same parent are merged by
//! canonical form.
//!
//! Every constraint is hereditary along this deletion order: induced
//! subgraphs of bipartite graphs are bipartite, deleting a vertex never
//! raises a degree, and deleting a non-cut vertex of degree `d` lowers
//! the cyclomatic number by `d - 1`.

use serde::{Deserialize, Serialize};

use crate::canon::{self, CanonicalForm, Labeling};
use crate::error::EnumerationError;
use crate::exec::Execution;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraints {
    pub n: usize,
    #[serde(default)]
    pub bipartite_only: bool,
    #[serde(default)]
    pub max_degree: Option<usize>,
    #[serde(default)]
    pub trees_only: bool,
    #[serde(default)]
    pub cyclomatic: Option<usize>,
}

impl Constraints {
    pub fn connected(n: usize) -> Self {
        Constraints { n, bipartite_only: false, max_degree: None, trees_only: false, cyclomatic: None }
    }

    pub fn trees(n: usize) -> Self {
        Constraints { trees_only: true, ..Constraints::connected(n) }
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite_only = true;
        self
    }

    pub fn with_max_degree(mut self, delta: usize) -> Self {
        self.max_degree = Some(delta);
        self
    }

    pub fn with_cyclomatic(mut self, r: usize) -> Self {
        self.cyclomatic = Some(r);
        self
    }

    pub fn validate(&self) -> Result<(), EnumerationError> {
        let bad = |m: &str| Err(EnumerationError::Constraints(m.to_string()));
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if self.n > crate::graph::MAX_BITSET_ORDER {
            return bad("enumeration supports at most 64 vertices");
        }
        if self.max_degree == Some(0) {
            return bad("max degree must be at least 1");
        }
        if self.trees_only && self.cyclomatic.is_some_and(|r| r != 0) {
            return bad("trees have cyclomatic number 0");
        }
        Ok(())
    }

    /// Upper bound on the cyclomatic number of any graph in the class.
    fn cyclomatic_cap(&self) -> Option<usize> {
        if self.trees_only {
            Some(0)
        } else {
            self.cyclomatic
        }
    }

    /// Does a connected graph satisfy every constraint?
    pub fn admits(&self, g: &Graph) -> bool {
        g.order() == self.n
            && (!self.bipartite_only || g.is_bipartite())
            && self.max_degree.is_none_or(|d| g.max_degree() <= d)
            && self.cyclomatic_cap().is_none_or(|r| g.cyclomatic_number() == r)
    }

    pub fn describe(&self) -> String {
        let mut parts = vec![format!("n = {}", self.n)];
        if self.trees_only {
            parts.push("trees".into());
        }
        if self.bipartite_only {
            parts.push("bipartite".into());
        }
        if let Some(d) = self.max_degree {
            parts.push(format!("max degree <= {d}"));
        }
        if let Some(r) = self.cyclomatic {
            parts.push(format!("cyclomatic number {r}"));
        }
        parts.join(", ")
    }
}

/// Feasibility bounds on `n`, per constraint class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub general: usize,
    pub bipartite: usize,
    pub trees: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { general: 10, bipartite: 11, trees: 14 }
    }
}

impl Bounds {
    /// One bound for every class.
    pub fn uniform(n: usize) -> Self {
        Bounds { general: n, bipartite: n, trees: n }
    }

    pub fn bound_for(&self, c: &Constraints) -> (usize, &'static str) {
        if c.trees_only || c.cyclomatic == Some(0) {
            (self.trees, "trees")
        } else if c.bipartite_only {
            (self.bipartite, "bipartite graphs")
        } else {
            (self.general, "connected graphs")
        }
    }

    pub fn check(&self, c: &Constraints) -> Result<(), EnumerationError> {
        c.validate()?;
        let (bound, class) = self.bound_for(c);
        if c.n > bound {
            return Err(EnumerationError::TooLarge { n: c.n, bound, class });
        }
        Ok(())
    }
}

/// One emitted isomorphism class, canonically labeled.
#[derive(Clone, Debug)]
pub struct Member {
    rows: Vec<u64>,
    graph: Graph,
}

impl Member {
    fn new(rows: Vec<u64>) -> Self {
        let graph = Graph::from_bit_rows(&rows).expect("generated graphs are connected");
        Member { rows, graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// The member is its own canonical representative, so this is just
    /// its graph6 string.
    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm::from_canonical_rows(&self.rows)
    }
}

/// Isomorph-free classes in canonical-form order.
#[derive(Clone, Debug, Default)]
pub struct GraphStream {
    classes: Vec<(CanonicalForm, Graph)>,
}

impl GraphStream {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(CanonicalForm, Graph)> {
        self.classes.iter()
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.classes.iter().map(|(f, _)| f)
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.classes.iter().map(|(_, g)| g)
    }

    /// One graph6 line per class.
    pub fn to_graph6_lines(&self) -> String {
        let mut out = String::new();
        for form in self.forms() {
            out.push_str(form.as_str());
            out.push('\n');
        }
        out
    }
}

impl IntoIterator for GraphStream {
    type Item = (CanonicalForm, Graph);
    type IntoIter = std::vec::IntoIter<(CanonicalForm, Graph)>;

    fn into_iter(self) -> Self::IntoIter {
        self.classes.into_iter()
    }
}

/// A configured generator. The search tree is explored depth-first; with
/// parallel execution the children of every node are processed by rayon
/// and partial results are reduced in child order.
#[derive(Clone, Debug)]
pub struct Enumerator {
    constraints: Constraints,
    exec: Execution,
}

impl Enumerator {
    pub fn new(constraints: Constraints, bounds: &Bounds) -> Result<Self, EnumerationError> {
        bounds.check(&constraints)?;
        Ok(Enumerator { constraints, exec: Execution::default() })
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    pub fn constraints(&self) -> &Constraints {
        &self.constraints
    }

    /// Folds every class through `fold`, combining partial results with
    /// the associative `reduce`.
    pub fn fold<T, I, F, R>(&self, identity: I, fold: F, reduce: R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, &Member) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        self.walk(&[0], identity(), &identity, &fold, &reduce)
    }

    fn walk<T, I, F, R>(&self, node: &[u64], acc: T, identity: &I, fold: &F, reduce: &R) -> T
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, &Member) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        if node.len() == self.constraints.n {
            return if self.final_ok(node) { fold(acc, &Member::new(node.to_vec())) } else { acc };
        }
        let children = self.children(node);
        #[cfg(feature = "parallel")]
        if self.exec.is_parallel() && children.len() > 1 {
            use rayon::prelude::*;
            let sub = children
                .par_iter()
                .fold(identity, |a, c| self.walk(c, a, identity, fold, reduce))
                .reduce(identity, reduce);
            return reduce(acc, sub);
        }
        children.iter().fold(acc, |a, c| self.walk(c, a, identity, fold, reduce))
    }

    pub fn count(&self) -> u64 {
        self.fold(|| 0u64, |acc, _| acc + 1, |a, b| a + b)
    }

    pub fn collect(&self) -> GraphStream {
        let mut classes = self.fold(
            Vec::new,
            |mut acc, m| {
                acc.push((m.canonical_form(), m.graph().clone()));
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        classes.sort_by(|a, b| a.0.cmp(&b.0));
        GraphStream { classes }
    }

    fn final_ok(&self, rows: &[u64]) -> bool {
        match self.constraints.cyclomatic_cap() {
            Some(r) => cyclomatic(rows) == r,
            None => true,
        }
    }

    /// Accepted, canonically labeled, pairwise non-isomorphic children.
    fn children(&self, parent: &[u64]) -> Vec<Vec<u64>> {
        let c = &self.constraints;
        let k = parent.len();
        let full = crate::graph::mask_upto(k);

        let mut allowed = full;
        let mut max_size = k;
        if let Some(delta) = c.max_degree {
            max_size = max_size.min(delta);
            for (v, row) in parent.iter().enumerate() {
                if row.count_ones() as usize >= delta {
                    allowed &= !(1 << v);
                }
            }
        }
        let mut exact_size = None;
        if let Some(cap) = c.cyclomatic_cap() {
            let r = cyclomatic(parent);
            if r > cap {
                return Vec::new();
            }
            max_size = max_size.min(cap - r + 1);
            if k + 1 == c.n {
                exact_size = Some(cap - r + 1);
            }
        }
        let pools: Vec<u64> = if c.bipartite_only {
            match two_coloring(parent) {
                Some(side) => vec![allowed & side, allowed & !side & full],
                None => return Vec::new(),
            }
        } else {
            vec![allowed]
        };

        let mut out = Vec::new();
        for pool in pools {
            let mut s = pool;
            while s != 0 {
                let size = s.count_ones() as usize;
                if size <= max_size && exact_size.is_none_or(|e| e == size) {
                    let mut child = parent.to_vec();
                    child.push(s);
                    let mut bits = s;
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        child[v] |= 1 << k;
                    }
                    if let Some(rows) = accept(&child) {
                        out.push(rows);
                    }
                }
                s = (s - 1) & pool;
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Canonical rows of `child` if its last vertex is a canonical deletion
/// vertex, `None` otherwise.
fn accept(child: &[u64]) -> Option<Vec<u64>> {
    let n = child.len();
    let v = n - 1;
    let score = |x: usize| deletion_score(child, x);
    let sv = score(v);

    let mut ties = 1u64 << v;
    for x in 0..v {
        let sx = score(x);
        if sx < sv && !is_cut_vertex(child, x) {
            return None;
        }
        if sx == sv && !is_cut_vertex(child, x) {
            ties |= 1 << x;
        }
    }
    let unit = canon::unit_partition(n);
    let labeling = canon::canonical_labeling(child, &unit);
    if ties.count_ones() == 1 {
        return Some(labeling.rows);
    }
    let w = canonical_choice(&labeling, ties);
    if w == v || labeling.known_equivalent(v, w) || same_orbit(child, v, w) {
        Some(labeling.rows)
    } else {
        None
    }
}

/// Smaller is preferred: low degree first, then high neighbor-degree sum.
fn deletion_score(rows: &[u64], x: usize) -> u32 {
    let deg = rows[x].count_ones();
    let mut nbr_sum = 0;
    let mut bits = rows[x];
    while bits != 0 {
        let y = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        nbr_sum += rows[y].count_ones();
    }
    deg * 8192 + (8191 - nbr_sum)
}

/// Among `candidates`, the vertex at the highest canonical position.
fn canonical_choice(labeling: &Labeling, candidates: u64) -> usize {
    labeling
        .lab
        .iter()
        .rev()
        .map(|&x| x as usize)
        .find(|&x| candidates >> x & 1 == 1)
        .expect("candidates are vertices")
}

/// Exact orbit test: individualize each vertex and compare canonical forms.
fn same_orbit(rows: &[u64], a: usize, b: usize) -> bool {
    let full = crate::graph::mask_upto(rows.len());
    let colored = |x: usize| canon::canonical_labeling(rows, &[full & !(1 << x), 1 << x]).rows;
    colored(a) == colored(b)
}

fn is_cut_vertex(rows: &[u64], x: usize) -> bool {
    let n = rows.len();
    let rest = crate::graph::mask_upto(n) & !(1 << x);
    if rest == 0 {
        return false;
    }
    let start = rest.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut bits = frontier;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= rows[y];
        }
        next &= rest & !seen;
        seen |= next;
        frontier = next;
    }
    seen != rest
}

fn cyclomatic(rows: &[u64]) -> usize {
    let twice_m: u32 = rows.iter().map(|r| r.count_ones()).sum();
    (twice_m / 2) as usize + 1 - rows.len()
}

/// Vertex set of one color class of a connected graph, if bipartite.
fn two_coloring(rows: &[u64]) -> Option<u64> {
    let n = rows.len();
    let all = crate::graph::mask_upto(n);
    let mut side = 1u64;
    let mut other = 0u64;
    let mut frontier = 1u64;
    let mut on_side = true;
    while frontier != 0 {
        let mut next = 0;
        let mut bits = frontier;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= rows[y];
        }
        let (same, opposite) = if on_side { (side, other) } else { (other, side) };
        if next & same != 0 {
            return None;
        }
        let fresh = next & !opposite & all;
        if on_side {
            other |= fresh;
        } else {
            side |= fresh;
        }
        frontier = fresh;
        on_side = !on_side;
    }
    Some(side)
}

pub fn enumerate_connected(
    c: Constraints,
    bounds: &Bounds,
    exec: Execution,
) -> Result<GraphStream, EnumerationError> {
    Ok(Enumerator::new(c, bounds)?.with_execution(exec).collect())
}

pub fn enumerate_trees(n: usize, bounds: &Bounds, exec: Execution) -> Result<GraphStream, EnumerationError> {
    enumerate_connected(Constraints::trees(n), bounds, exec)
}

pub fn count_classes(c: Constraints, bounds: &Bounds, exec: Execution) -> Result<u64, EnumerationError> {
    Ok(Enumerator::new(c, bounds)?.with_execution(exec).count())
}
