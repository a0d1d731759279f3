//! Canonical labeling by partition refinement plus a backtracking search
//! over individualizations, with pruning by discovered automorphisms.
//!
//! The canonical graph is the lexicographically largest adjacency
//! certificate among the leaves of the search tree. Pruning only ever
//! skips subtrees that are images of explored subtrees under a verified
//! automorphism, so the result is exact.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;
use crate::graph::{Graph, MAX_BITSET_ORDER};
use crate::graph6;

/// Isomorphism-class key: the graph6 encoding of the canonically
/// relabeled graph. Byte order is a total order; graphs of smaller order
/// sort first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Box<[u8]>);

impl CanonicalForm {
    pub(crate) fn from_canonical_rows(rows: &[u64]) -> Self {
        CanonicalForm(graph6::encode_rows(rows).into_bytes().into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The graph6 string of the canonical representative.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 output is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("canonical forms are valid connected graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Graph {
    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        let rows = self
            .bit_rows()
            .ok_or(GraphError::TooLargeForBitset(self.order()))?;
        let labeling = canonical_labeling(&rows, &unit_partition(rows.len()));
        Ok(CanonicalForm::from_canonical_rows(&labeling.rows))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.order() != other.order() || self.size() != other.size() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

/// Result of a canonical search over bit-set rows.
#[derive(Clone, Debug)]
pub(crate) struct Labeling {
    /// `lab[i]` is the original vertex placed at canonical position `i`.
    pub lab: Vec<u8>,
    /// Canonically relabeled adjacency rows.
    pub rows: Vec<u64>,
    /// Automorphisms found along the way, as vertex maps.
    pub generators: Vec<Vec<u8>>,
}

impl Labeling {
    /// Whether the discovered automorphisms already prove `a` and `b`
    /// equivalent. A `false` answer is inconclusive.
    pub fn known_equivalent(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let n = self.lab.len();
        let mut uf = UnionFind::new(n);
        for g in &self.generators {
            for (x, &y) in g.iter().enumerate() {
                uf.union(x, y as usize);
            }
        }
        uf.find(a) == uf.find(b)
    }
}

pub(crate) fn unit_partition(n: usize) -> Vec<u64> {
    if n == 0 {
        Vec::new()
    } else {
        vec![crate::graph::mask_upto(n)]
    }
}

/// Canonical labeling of the graph given by `rows`, respecting the
/// ordered vertex coloring `cells` (each cell a bit set; the cells must
/// partition the vertex set).
pub(crate) fn canonical_labeling(rows: &[u64], cells: &[u64]) -> Labeling {
    let n = rows.len();
    assert!(n <= MAX_BITSET_ORDER, "canonical labeling supports at most 64 vertices");
    if n == 0 {
        return Labeling { lab: Vec::new(), rows: Vec::new(), generators: Vec::new() };
    }
    let mut search = Search {
        rows,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        path: Vec::with_capacity(n),
    };
    search.node(cells.to_vec());
    let best = search.best.expect("search always reaches a leaf");
    Labeling { lab: best.lab, rows: best.cert, generators: search.generators }
}

/// Splits cells by neighbor counts into each splitter cell until the
/// ordered partition is equitable. Sub-cells are ordered by count, so the
/// outcome depends only on the graph structure and the input order.
pub(crate) fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(MAX_BITSET_ORDER);
    while s < cells.len() {
        let splitter = cells[s];
        let mut out: Vec<u64> = Vec::with_capacity(rows.len());
        let mut split = false;
        for &cell in cells.iter() {
            if cell & cell.wrapping_sub(1) == 0 {
                out.push(cell);
                continue;
            }
            groups.clear();
            let mut bits = cell;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let k = (rows[x] & splitter).count_ones();
                match groups.iter_mut().find(|(key, _)| *key == k) {
                    Some((_, set)) => *set |= 1 << x,
                    None => groups.push((k, 1 << x)),
                }
            }
            if groups.len() == 1 {
                out.push(cell);
            } else {
                groups.sort_unstable_by_key(|&(k, _)| k);
                out.extend(groups.iter().map(|&(_, set)| set));
                split = true;
            }
        }
        if split {
            *cells = out;
            s = 0;
        } else {
            s += 1;
        }
    }
}

struct Leaf {
    lab: Vec<u8>,
    cert: Vec<u64>,
    path: Vec<u8>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<u8>>,
    path: Vec<u8>,
}

impl Search<'_> {
    /// Returns `Some(level)` to unwind to the node at depth `level`.
    fn node(&mut self, mut cells: Vec<u64>) -> Option<usize> {
        refine(self.rows, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let level = self.path.len();
        let (target, target_cell) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(_, c)| c.count_ones())
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored = 0u64;
        let mut bits = target_cell;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if explored != 0 && self.pruned(w, explored) {
                continue;
            }
            explored |= 1 << w;

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << w);
            child.push(target_cell & !(1 << w));
            child.extend_from_slice(&cells[target + 1..]);

            self.path.push(w as u8);
            let jump = self.node(child);
            self.path.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    /// Is `w` in the orbit of an explored child under the automorphisms
    /// found so far that fix the current path pointwise?
    fn pruned(&self, w: usize, explored: u64) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for g in &self.generators {
            if self.path.iter().all(|&p| g[p as usize] == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    uf.union(x, y as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(w);
        let mut bits = explored;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if uf.find(x) == root {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; MAX_BITSET_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut bits = self.rows[v as usize];
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    row |= 1 << pos[x];
                }
                row
            })
            .collect();

        let Some(first) = &self.first else {
            let leaf = Leaf { lab, cert, path: self.path.clone() };
            self.best = Some(Leaf { lab: leaf.lab.clone(), cert: leaf.cert.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = automorphism(&first.lab, &lab);
            let to = common_prefix(&first.path, &self.path);
            self.generators.push(gamma);
            return Some(to);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            Ordering::Greater => {
                self.best = Some(Leaf { lab, cert, path: self.path.clone() });
                None
            }
            Ordering::Equal => {
                let gamma = automorphism(&best.lab, &lab);
                let to = common_prefix(&best.path, &self.path);
                self.generators.push(gamma);
                Some(to)
            }
            Ordering::Less => None,
        }
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn automorphism(from: &[u8], to: &[u8]) -> Vec<u8> {
    let mut gamma = vec![0u8; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a as usize] = b;
    }
    gamma
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        graph(n, &edges)
    }

    #[test]
    fn relabeled_path_has_same_key() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let relabeled = graph(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(p4.canonical_form().unwrap(), relabeled.canonical_form().unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let s4 = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_ne!(p4.canonical_form().unwrap(), s4.canonical_form().unwrap());
    }

    #[test]
    fn canonical_representative_is_a_fixed_point() {
        let g = graph(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (0, 1)]);
        let form = g.canonical_form().unwrap();
        let rep = form.to_graph();
        assert_eq!(crate::graph6::encode(&rep), form.as_str());
        assert_eq!(rep.canonical_form().unwrap(), form);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        // K_20 has 20! labelings; pruning keeps the search polynomial.
        let k = complete(20);
        let form = k.canonical_form().unwrap();
        assert_eq!(form.to_graph().size(), 190);
    }

    #[test]
    fn generators_are_automorphisms() {
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = graph(6, &c6);
        let rows = g.bit_rows().unwrap();
        let labeling = canonical_labeling(&rows, &unit_partition(6));
        assert!(!labeling.generators.is_empty());
        for gamma in &labeling.generators {
            for &(u, v) in g.edges() {
                assert!(g.has_edge(gamma[u] as usize, gamma[v] as usize));
            }
        }
        assert!(labeling.known_equivalent(0, 3));
    }

    #[test]
    fn colored_search_separates_inequivalent_vertices() {
        // Path 0-1-2-3: individualizing an end vs an inner vertex differ.
        let rows = graph(4, &[(0, 1), (1, 2), (2, 3)]).bit_rows().unwrap();
        let colored = |v: usize| {
            let l = canonical_labeling(&rows, &[0b1111 & !(1 << v), 1 << v]);
            l.rows
        };
        assert_eq!(colored(0), colored(3));
        assert_eq!(colored(1), colored(2));
        assert_ne!(colored(0), colored(1));
    }
}
