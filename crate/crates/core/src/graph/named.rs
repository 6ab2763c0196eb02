//! Catalog of fixed graphs addressable by name.
//!
//! | name        | vertices | edges                                           |
//! |-------------|----------|-------------------------------------------------|
//! | `K1`..`K8`  | n        | all pairs                                       |
//! | `C3`..`C12` | n        | `{i, i+1 mod n}`                                |
//! | `P2`..`P12` | n        | `{i, i+1}` for `i < n-1`                        |
//! | `K3,3`      | 6        | `{0,1,2} x {3,4,5}`                             |
//! | `petersen`  | 10       | outer `{i, i+1 mod 5}`, spokes `{i, i+5}`, inner `{5+i, 5+(i+2 mod 5)}` |
//! | `split-K5`  | 6        | K4 on `0..4`, `4 ~ {0,1}`, `5 ~ {2,3}`          |

use super::Graph;
use crate::error::{Error, Result};

/// Every accepted name, in display order.
pub const CATALOG: &[&str] = &[
    "K1", "K2", "K3", "K4", "K5", "K6", "K7", "K8", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
    "C10", "C11", "C12", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11", "P12",
    "K3,3", "petersen", "split-K5",
];

/// The 6-vertex planar graph obtained from K5 by splitting one vertex into
/// the non-adjacent pair `(4, 5)`. Identifying that pair gives back K5.
pub fn split_k5() -> (Graph, (usize, usize)) {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            edges.push((a, b));
        }
    }
    edges.extend([(4, 0), (4, 1), (5, 2), (5, 3)]);
    (Graph::from_edges(6, edges).expect("static graph"), (4, 5))
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("static graph")
}

fn sized(name: &str, prefix: char, lo: usize, hi: usize) -> Option<usize> {
    let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (lo..=hi).contains(&n).then_some(n)
}

pub fn named_graph(name: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName {
        name: name.to_string(),
        catalog: CATALOG.join(", "),
    };
    // reject spellings like "K05" that parse but are not catalog entries
    if !CATALOG.contains(&name) {
        return Err(unknown());
    }
    match name {
        "K3,3" => Graph::complete_bipartite(3, 3),
        "petersen" => Ok(petersen()),
        "split-K5" => Ok(split_k5().0),
        _ => {
            if let Some(n) = sized(name, 'K', 1, 8) {
                Graph::complete(n)
            } else if let Some(n) = sized(name, 'C', 3, 12) {
                Graph::cycle(n)
            } else if let Some(n) = sized(name, 'P', 2, 12) {
                Graph::path(n)
            } else {
                Err(unknown())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let k5 = named_graph("K5").unwrap();
        assert_eq!((k5.n(), k5.edge_count()), (5, 10));
        let k33 = named_graph("K3,3").unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));
        let c6 = named_graph("C6").unwrap();
        assert_eq!((c6.n(), c6.edge_count()), (6, 6));
        let p = named_graph("petersen").unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let s = named_graph("split-K5").unwrap();
        assert_eq!((s.n(), s.edge_count()), (6, 10));
        assert_eq!(named_graph("P2").unwrap().edges(), vec![(0, 1)]);
    }

    #[test]
    fn every_catalog_entry_resolves() {
        for name in CATALOG {
            named_graph(name).unwrap();
        }
    }

    #[test]
    fn unknown_lists_catalog() {
        for bad in ["K9", "C2", "P1", "K05", "foo", ""] {
            let err = named_graph(bad).unwrap_err();
            assert!(err.to_string().contains("petersen"), "{err}");
        }
    }

    #[test]
    fn split_k5_identifies_to_k5() {
        let (g, (u, v)) = split_k5();
        assert!(!g.has_edge(u, v));
        let h = g.identify_vertices(u, v).unwrap();
        assert_eq!(h, Graph::complete(5).unwrap());
    }
}
