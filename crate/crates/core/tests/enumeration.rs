mod common;

use std::collections::BTreeSet;

use ggindex::enumerate::{count_classes, enumerate_connected, enumerate_trees, Bounds, Constraints, Enumerator};
use ggindex::{CanonicalForm, EnumerationError, Execution, Graph};

fn forms(c: Constraints) -> BTreeSet<CanonicalForm> {
    enumerate_connected(c, &Bounds::default(), Execution::Sequential).unwrap().forms().cloned().collect()
}

#[test]
fn cyclomatic_classes_match_brute_force() {
    for n in 3..=6 {
        let brute = common::brute_force_classes(n);
        let max_r = n * (n - 1) / 2 - (n - 1);
        for r in 0..=max_r {
            let expected: BTreeSet<_> = brute
                .iter()
                .filter(|(_, g)| common::cyclomatic_by_deletion(g) == r)
                .map(|(f, _)| f.clone())
                .collect();
            assert_eq!(forms(Constraints::connected(n).with_cyclomatic(r)), expected, "n = {n}, r = {r}");
        }
    }
}

#[test]
fn combined_constraints_match_brute_force() {
    let n = 7;
    let brute = common::brute_force_classes(n);
    let expected: BTreeSet<_> = brute
        .iter()
        .filter(|(_, g)| common::bipartite_by_coloring(g) && g.max_degree() <= 3)
        .map(|(f, _)| f.clone())
        .collect();
    assert_eq!(forms(Constraints::connected(n).bipartite().with_max_degree(3)), expected);

    let expected: BTreeSet<_> = brute
        .iter()
        .filter(|(_, g)| g.size() == n - 1 && g.max_degree() <= 2)
        .map(|(f, _)| f.clone())
        .collect();
    assert_eq!(expected.len(), 1);
    assert_eq!(forms(Constraints::trees(n).with_max_degree(2)), expected);
}

#[test]
fn trees_match_prufer_classes() {
    for n in 1..=9 {
        let expected = common::prufer_tree_codes(n);
        let got: BTreeSet<String> = enumerate_trees(n, &Bounds::default(), Execution::Sequential)
            .unwrap()
            .graphs()
            .map(|g| common::tree_code(n, g.edges()))
            .collect();
        assert_eq!(got, expected, "n = {n}");
        let stream = enumerate_trees(n, &Bounds::default(), Execution::Sequential).unwrap();
        assert_eq!(stream.len(), expected.len(), "duplicate trees at n = {n}");
    }
}

#[test]
#[ignore = "10^8 Prüfer sequences; run with --ignored"]
fn trees_match_prufer_classes_ten() {
    let expected = common::prufer_tree_codes(10);
    assert_eq!(expected.len(), 106);
    let got: BTreeSet<String> = enumerate_trees(10, &Bounds::default(), Execution::default())
        .unwrap()
        .graphs()
        .map(|g| common::tree_code(10, g.edges()))
        .collect();
    assert_eq!(got, expected);
}

#[test]
fn known_class_counts() {
    let b = Bounds::default();
    let count = |c: Constraints| count_classes(c, &b, Execution::default()).unwrap();
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &k) in connected.iter().enumerate() {
        assert_eq!(count(Constraints::connected(i + 1)), k, "connected n = {}", i + 1);
    }
    let bipartite = [1, 1, 1, 3, 5, 17, 44, 182, 730, 4032];
    for (i, &k) in bipartite.iter().enumerate() {
        assert_eq!(count(Constraints::connected(i + 1).bipartite()), k, "bipartite n = {}", i + 1);
    }
    let trees = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
    for (i, &k) in trees.iter().enumerate() {
        assert_eq!(count(Constraints::trees(i + 1)), k, "trees n = {}", i + 1);
    }
}

#[test]
fn output_is_isomorph_free_and_valid() {
    let stream = enumerate_connected(Constraints::connected(6), &Bounds::default(), Execution::default()).unwrap();
    let graphs: Vec<&Graph> = stream.graphs().collect();
    for (i, a) in graphs.iter().enumerate() {
        assert_eq!(a.order(), 6);
        for b in &graphs[i + 1..] {
            assert!(!common::isomorphic_by_permutation(a, b));
        }
    }
}

#[test]
fn bounds_are_enforced() {
    let b = Bounds::default();
    assert!(matches!(
        Enumerator::new(Constraints::connected(11), &b),
        Err(EnumerationError::TooLarge { n: 11, bound: 10, .. })
    ));
    assert!(Enumerator::new(Constraints::connected(11).bipartite(), &b).is_ok());
    assert!(Enumerator::new(Constraints::trees(15), &b).is_err());
    assert!(Enumerator::new(Constraints::connected(11), &Bounds::uniform(11)).is_ok());
}

#[test]
fn parallel_and_sequential_agree() {
    for c in [Constraints::connected(7), Constraints::connected(9).bipartite(), Constraints::trees(12)] {
        let b = Bounds::default();
        let seq = enumerate_connected(c.clone(), &b, Execution::Sequential).unwrap();
        let par = enumerate_connected(c, &b, Execution::Parallel).unwrap();
        assert_eq!(seq.to_graph6_lines(), par.to_graph6_lines());
    }
}
