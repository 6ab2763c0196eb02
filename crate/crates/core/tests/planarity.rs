mod common;

use common::{random_graphs, random_graphs_dense};
use ect_core::graph::CATALOG;
use ect_core::planarity::minor::find_minor;
use ect_core::planarity::{
    trace_faces, validate_embedding, validate_minor, Witness, ORACLE_MAX_VERTICES,
};
use ect_core::{
    euler_bound_check, generate_random_planar, has_k5_or_k33_minor, is_planar, named_graph,
    planarity_oracle_small, Graph, MinorSearch, MinorTarget,
};

#[test]
fn wagner_consistency_catalog_and_random() {
    let mut graphs: Vec<Graph> = CATALOG
        .iter()
        .map(|n| named_graph(n).unwrap())
        .filter(|g| g.n() <= ORACLE_MAX_VERTICES)
        .collect();
    graphs.extend(random_graphs(300, 1, 8, 8));
    graphs.extend(random_graphs_dense(300, 6, 8, (0.35, 0.8), 9));
    let mut planar = 0;
    for g in &graphs {
        let v = is_planar(g);
        v.validate(g).unwrap();
        assert_eq!(v.planar, planarity_oracle_small(g).unwrap(), "{g:?}");
        if !euler_bound_check(g) {
            assert!(!v.planar);
        }
        planar += v.planar as usize;
    }
    // both sides of the boundary are exercised
    assert!(
        planar > 100 && graphs.len() - planar > 100,
        "{planar}/{}",
        graphs.len()
    );
}

#[test]
fn oracle_refuses_large_graphs() {
    assert!(planarity_oracle_small(&Graph::cycle(11).unwrap()).is_err());
}

#[test]
fn pinned_verdicts() {
    let k5 = named_graph("K5").unwrap();
    let v = is_planar(&k5);
    let Witness::Minor(w) = &v.witness else {
        panic!("K5 planar?")
    };
    assert_eq!(w.target, MinorTarget::K5);
    assert!(w.branch_sets.iter().all(|b| b.len() == 1));

    let k33 = named_graph("K3,3").unwrap();
    let Witness::Minor(w) = is_planar(&k33).witness else {
        panic!()
    };
    assert_eq!(w.target, MinorTarget::K33);
    validate_minor(&k33, &w).unwrap();

    assert!(is_planar(&named_graph("K4").unwrap()).planar);
    assert!(is_planar(&named_graph("C8").unwrap()).planar);
    assert!(is_planar(&named_graph("split-K5").unwrap()).planar);
    assert!(planarity_oracle_small(&named_graph("split-K5").unwrap()).unwrap());
}

#[test]
fn minor_search_examples() {
    let k5 = named_graph("K5").unwrap();
    let MinorSearch::Found(w) = has_k5_or_k33_minor(&k5, None) else {
        panic!()
    };
    assert_eq!(w.branch_sets, (0..5).map(|i| vec![i]).collect::<Vec<_>>());

    for n in 1..=12 {
        let tree = Graph::from_edges(n, (1..n).map(|i| (i / 2, i))).unwrap();
        assert_eq!(has_k5_or_k33_minor(&tree, None), MinorSearch::None);
    }

    let p = named_graph("petersen").unwrap();
    let found = find_minor(&p, MinorTarget::K5, None);
    let w = found.witness().expect("petersen has a K5 minor");
    validate_minor(&p, w).unwrap();
    assert_eq!(w.branch_sets.len(), 5);
}

#[test]
fn minor_budget_is_inconclusive_not_none() {
    let p = named_graph("petersen").unwrap();
    assert!(matches!(
        has_k5_or_k33_minor(&p, Some(5)),
        MinorSearch::Inconclusive { .. }
    ));
    let p8 = named_graph("P8").unwrap();
    // too few edges: answered without search
    assert_eq!(has_k5_or_k33_minor(&p8, Some(0)), MinorSearch::None);
}

#[test]
fn witnesses_on_larger_graphs() {
    for n in [20, 40, 64] {
        let g = generate_random_planar(n, n as u64).unwrap();
        let v = is_planar(&g);
        assert!(v.planar);
        let Witness::Embedding(e) = &v.witness else {
            panic!()
        };
        validate_embedding(&g, e).unwrap();
        assert_eq!(trace_faces(&g, e).unwrap().len(), 2 * n - 4);

        // one extra edge across a maximal planar graph breaks planarity
        let (u, w) = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .find(|&(u, w)| !g.has_edge(u, w))
            .unwrap();
        let mut edges = g.edges();
        edges.push((u, w));
        let h = Graph::from_edges(n, edges).unwrap();
        let v = is_planar(&h);
        assert!(!v.planar);
        v.validate(&h).unwrap();
    }
    let k = Graph::complete(30).unwrap();
    is_planar(&k).validate(&k).unwrap();
}

#[test]
fn planarity_is_hereditary() {
    for seed in 0..120u64 {
        let n = 4 + (seed as usize % 12);
        let g = generate_random_planar(n, seed).unwrap();
        for (u, v) in g.edges() {
            assert!(is_planar(&g.without_edge(u, v)).planar);
        }
        for v in 0..n {
            let h = g.without_vertex(v);
            let verdict = is_planar(&h);
            assert!(verdict.planar);
            verdict.validate(&h).unwrap();
        }
    }
}
