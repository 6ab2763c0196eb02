//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is kept as one [`VertexSet`] per vertex so neighborhood
//! unions, intersections and adjacency tests are single word operations.
//! Values are immutable once built; every transformation returns a new
//! graph.

mod dimacs;
mod generate;
mod named;

pub use dimacs::{parse_dimacs, parse_graph, write_dimacs};
pub use generate::{
    generate_planar, generate_random_planar, random_gnp, subsample_edges, GeneratorMode,
};
pub use named::{named_graph, split_k5, CATALOG};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Wire form: `{"n": int, "edges": [[u, v], ...]}`, 0-based, edges sorted.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            m: 0,
        })
    }

    /// Builds a simple graph. Repeated pairs and both orientations collapse
    /// to one edge; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::contract(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Argument(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff every pair of distinct vertices is adjacent. Vacuously true
    /// for graphs with fewer than two vertices.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// True iff no two members of `set` are adjacent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True iff the subgraph induced by `set` is connected (and non-empty).
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(s) => self.reach(s, set) == set,
        }
    }

    /// Connected components, each as a vertex set, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let c = self.reach(s, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
            g.m -= 1;
        }
        g
    }

    /// Deletes `v`; vertices above it shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `keep`, relabeled so `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len()).expect("subgraph of a valid graph");
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Identifies the non-adjacent pair `u`, `v` into one vertex whose
    /// neighborhood is the union of theirs.
    ///
    /// The merged vertex takes slot `min(u, v)`; vertices above `max(u, v)`
    /// shift down by one, everything else keeps its index.
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::contract(format!(
                "vertex pair ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::contract(format!(
                "cannot identify vertex {u} with itself"
            )));
        }
        if self.has_edge(u, v) {
            return Err(Error::contract(format!(
                "vertices {u} and {v} are adjacent; identifying them would create a loop"
            )));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Graph::empty(n - 1)?;
        for (a, b) in self.edges() {
            g.insert_edge(relabel(a), relabel(b));
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(2, [(1, 1)]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(Graph::empty(65), Err(Error::TooLarge(65))));
    }

    #[test]
    fn is_complete_cases() {
        assert!(Graph::complete(4).unwrap().is_complete());
        assert!(!Graph::path(3).unwrap().is_complete());
        assert!(Graph::empty(1).unwrap().is_complete());
        assert!(Graph::empty(0).unwrap().is_complete());
    }

    #[test]
    fn identify_path_ends() {
        let g = Graph::path(3).unwrap().identify_vertices(0, 2).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn identify_c4_opposite() {
        let g = Graph::cycle(4).unwrap().identify_vertices(0, 2).unwrap();
        assert_eq!(g.n(), 3);
        // old 3 shifts to 2
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn identify_relabels_deterministically() {
        // 0-1, 2-4, 3-4 ; identify 1 and 3 -> merged at 1, 4 -> 3
        let g = Graph::from_edges(5, [(0, 1), (2, 4), (3, 4)]).unwrap();
        let h = g.identify_vertices(3, 1).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 3), (2, 3)]);
    }

    #[test]
    fn identify_errors() {
        let g = Graph::path(3).unwrap();
        assert!(matches!(g.identify_vertices(0, 1), Err(Error::Contract(_))));
        assert!(matches!(g.identify_vertices(1, 1), Err(Error::Contract(_))));
        assert!(matches!(g.identify_vertices(0, 5), Err(Error::Contract(_))));
    }

    #[test]
    fn json_form() {
        let g = Graph::from_edges(3, [(2, 1), (0, 1)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let comps: Vec<Vec<usize>> = g.components().iter().map(|c| c.iter().collect()).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_connected_within(g.vertices()));
        assert!(g.is_connected_within(VertexSet::singleton(2)));
    }

    #[test]
    fn without_vertex_shifts() {
        let g = Graph::cycle(4).unwrap().without_vertex(1);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
    }
}
