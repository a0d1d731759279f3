//! Independent reference implementations used by the integration and
//! acceptance tests. Deliberately naive.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ggindex::{CanonicalForm, Graph};

/// NGG of P_n for n = 4, 6, ..., 30, rounded to four decimals.
pub const PATH_NGG_TABLE: [(usize, f64); 14] = [
    (4, 1.6547),
    (6, 1.9349),
    (8, 2.0997),
    (10, 2.2114),
    (12, 2.2934),
    (14, 2.3570),
    (16, 2.4081),
    (18, 2.4504),
    (20, 2.4862),
    (22, 2.5169),
    (24, 2.5436),
    (26, 2.5672),
    (28, 2.5882),
    (30, 2.6071),
];

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

pub fn connected_by_union_find(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parts = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            parts -= 1;
        }
    }
    parts == 1
}

/// Every connected labeled graph on `n` vertices, deduplicated by
/// canonical form.
pub fn brute_force_classes(n: usize) -> BTreeMap<CanonicalForm, Graph> {
    let all = pairs(n);
    let mut out = BTreeMap::new();
    if n == 1 {
        let g = Graph::new(1, &[]).unwrap();
        out.insert(g.canonical_form().unwrap(), g);
        return out;
    }
    let mut edges = Vec::with_capacity(all.len());
    for mask in 0u64..(1u64 << all.len()) {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        edges.clear();
        edges.extend(all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
        if !connected_by_union_find(n, &edges) {
            continue;
        }
        let g = Graph::new(n, &edges).unwrap();
        out.entry(g.canonical_form().unwrap()).or_insert(g);
    }
    out
}

/// Tries all 2^n colorings.
pub fn bipartite_by_coloring(g: &Graph) -> bool {
    let n = g.order();
    (0u32..(1 << n)).any(|c| g.edges().iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)))
}

/// Smallest number of edges whose removal leaves a forest.
pub fn cyclomatic_by_deletion(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    for k in 0..=m {
        let found = subsets(m, k).into_iter().any(|removed| {
            let kept: Vec<_> = (0..m).filter(|i| !removed.contains(i)).map(|i| edges[i]).collect();
            is_forest(g.order(), &kept)
        });
        if found {
            return k;
        }
    }
    unreachable!()
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// All-pairs distances by min-plus relaxation.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// `(n_u, n_v)` per edge straight from the definition.
pub fn naive_splits(g: &Graph) -> Vec<(usize, usize)> {
    let d = floyd_warshall(g);
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let nu = (0..g.order()).filter(|&w| d[w][u] < d[w][v]).count();
            let nv = (0..g.order()).filter(|&w| d[w][v] < d[w][u]).count();
            (nu, nv)
        })
        .collect()
}

pub fn naive_gg(g: &Graph) -> f64 {
    naive_splits(g)
        .into_iter()
        .map(|(a, b)| (((a + b - 2) as f64) / ((a * b) as f64)).sqrt())
        .sum()
}

pub fn naive_ngg(g: &Graph) -> f64 {
    naive_splits(g).into_iter().map(|(a, b)| 1.0 / ((a * b) as f64).sqrt()).sum()
}

/// Checks every permutation of the vertex set.
pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let maps = |p: &[usize]| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]));
    if maps(&perm) {
        return true;
    }
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if maps(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> =
        adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Parenthesis code of a free tree: the smaller rooted code over its centers.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    if n <= 2 {
        return rooted_code(&adj, 0, usize::MAX);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in &adj[leaf] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(&adj, c, usize::MAX)).min().unwrap()
}

/// Isomorphism classes of labeled trees on `n` vertices via Prüfer codes.
pub fn prufer_tree_codes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    if n <= 2 {
        let edges: Vec<_> = if n == 2 { vec![(0, 1)] } else { vec![] };
        out.insert(tree_code(n, &edges));
        return out;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        out.insert(tree_code(n, &prufer_decode(&seq, n)));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    out
}
