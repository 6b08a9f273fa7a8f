mod common;

use comaximal::graph::{embedding_is_valid, extract_witness, is_planar, verify_witness};
use comaximal::Graph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::numbered(n, edges).unwrap()
        })
    })
}

/// Dense random graphs around the planarity threshold.
fn dense_strategy() -> impl Strategy<Value = Graph> {
    (6usize..=9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        proptest::collection::vec(0u8..10, pairs.len()).prop_map(move |roll| {
            let edges = pairs
                .iter()
                .zip(roll)
                .filter(|(_, r)| *r < 6)
                .map(|(&e, _)| e);
            Graph::numbered(n, edges).unwrap()
        })
    })
}

fn check(g: &Graph) -> Result<(), TestCaseError> {
    let result = is_planar(g, true);
    prop_assert_eq!(result.is_planar(), common::oracle_planar(g));
    match &result.embedding {
        Some(rotation) => prop_assert!(embedding_is_valid(g, rotation)),
        None => {
            let w = result
                .witness
                .as_ref()
                .expect("small nonplanar graphs carry a witness");
            prop_assert!(verify_witness(g, w));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_graphs_match_subdivision_search(g in graph_strategy(8)) {
        check(&g)?;
    }

    #[test]
    fn dense_graphs_match_subdivision_search(g in dense_strategy()) {
        check(&g)?;
    }
}

#[test]
fn oracle_sanity() {
    assert!(!common::oracle_planar(&Graph::complete(5)));
    assert!(!common::oracle_planar(&Graph::complete_bipartite(3, 3)));
    assert!(common::oracle_planar(&Graph::complete(4)));
    assert!(common::oracle_planar(&Graph::complete_bipartite(2, 6)));
}

#[test]
fn petersen_graph() {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    let g = Graph::numbered(10, outer.chain(spokes).chain(inner)).unwrap();
    assert!(!common::oracle_planar(&g));
    let w = extract_witness(&g).unwrap();
    assert!(verify_witness(&g, &w));
}

#[test]
fn tampered_witnesses_are_rejected() {
    let g = Graph::complete_bipartite(3, 4);
    let mut w = extract_witness(&g).unwrap();
    assert!(verify_witness(&g, &w));
    w.paths[0].reverse();
    assert!(verify_witness(&g, &w));
    w.paths[0] = w.paths[1].clone();
    assert!(!verify_witness(&g, &w));
    let mut w = extract_witness(&g).unwrap();
    w.branch_vertices.swap(0, 3);
    assert!(!verify_witness(&g, &w));
}
