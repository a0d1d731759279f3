//! Immutable simple connected graphs and the distance data derived from them.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::exec::{self, Execution};

/// Largest order for which per-vertex bit-set adjacency is available.
pub const MAX_BITSET_ORDER: usize = 64;

/// A simple, undirected, connected graph on vertices `0..n`.
///
/// Edges are stored with the smaller endpoint first and sorted, so two
/// graphs built from the same edge set serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, deduplicating repeated edges.
    ///
    /// Self-loops, out-of-range endpoints, an empty vertex set and
    /// disconnected inputs are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { n, edges, adj };
        let reached = g.reachable_from(0);
        if reached < n {
            return Err(GraphError::Disconnected { reached, n });
        }
        Ok(g)
    }

    /// Builds a graph from bit-set rows (`rows[i]` has bit `j` set iff `ij` is an edge).
    pub fn from_bit_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_BITSET_ORDER {
            return Err(GraphError::TooLargeForBitset(n));
        }
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            let mut higher = row & !mask_upto(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                if v >= n || rows[v] >> u & 1 == 0 {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                edges.push((u, v));
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
        }
        Graph::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Cyclomatic number `m - n + 1` (the graph is always connected).
    pub fn cyclomatic_number(&self) -> usize {
        self.size() + 1 - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n
    }

    /// Adjacency as one bit set per vertex, available for `n <= 64`.
    pub fn bit_rows(&self) -> Option<Vec<u64>> {
        if self.n > MAX_BITSET_ORDER {
            return None;
        }
        let mut rows = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Some(rows)
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation);
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// Two-coloring when the graph has no odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        color[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &w in &self.adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Breadth-first distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self, Execution::for_order(self.n))
    }

    fn reachable_from(&self, source: usize) -> usize {
        self.bfs(source).iter().filter(|&&d| d != u32::MAX).count()
    }
}

pub(crate) fn mask_upto(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// All-pairs shortest-path lengths, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// One BFS per source vertex; rows are computed in parallel when allowed.
    pub fn compute(g: &Graph, exec: Execution) -> Self {
        let n = g.order();
        let rows: Vec<Vec<u32>> = exec::map_range(exec, n, |s| g.bfs(s));
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            data.extend_from_slice(&row);
        }
        DistanceMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}
