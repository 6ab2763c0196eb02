//! Color-class partitions and the quotient obtained by contracting every
//! class to one vertex.
//!
//! A proper coloring splits the vertices into independent classes. Keeping
//! the base graph and attaching that partition gives an [`Ecg`]; contracting
//! each class and keeping a single edge between any two adjacent classes
//! gives a [`QuotientGraph`]. For a coloring with the minimum number of
//! colors the quotient is always complete, since two non-adjacent classes
//! could be merged into one color.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::coloring::{monochromatic_edge, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Disjoint non-empty vertex sets covering `0..n`, each sorted, ordered by
/// least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    sets: Vec<VertexSet>,
    #[serde(skip)]
    n: usize,
}

impl Partition {
    /// Validates and canonicalizes `classes` as a partition of `0..n`.
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut covered = VertexSet::EMPTY;
        let mut sets = Vec::with_capacity(classes.len());
        for class in &classes {
            if class.is_empty() {
                return Err(Error::contract("partition contains an empty class"));
            }
            let mut set = VertexSet::EMPTY;
            for &v in class {
                if v >= n {
                    return Err(Error::contract(format!(
                        "class member {v} out of range for {n} vertices"
                    )));
                }
                if covered.contains(v) {
                    return Err(Error::contract(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
                covered.insert(v);
                set.insert(v);
            }
            sets.push(set);
        }
        if covered != VertexSet::full(n) {
            let missing = VertexSet::full(n).difference(covered).first().unwrap();
            return Err(Error::contract(format!("vertex {missing} is in no class")));
        }
        sets.sort_by_key(|s| s.first());
        Ok(Partition::from_sets(n, sets))
    }

    fn from_sets(n: usize, sets: Vec<VertexSet>) -> Self {
        let classes = sets.iter().map(|s| s.iter().collect()).collect();
        Partition { classes, sets, n }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Color `i` for the members of class `i`.
    pub fn to_coloring(&self) -> Coloring {
        let mut colors = vec![0; self.n];
        for (i, set) in self.sets.iter().enumerate() {
            for v in *set {
                colors[v] = i;
            }
        }
        Coloring::new(colors).expect("classes are non-empty")
    }
}

/// A graph together with a grouping of its vertices into independent classes.
/// The base edges are untouched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ecg {
    pub base: Graph,
    pub partition: Partition,
}

/// One vertex per class; vertex `i` stands for `classes[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub classes: Vec<Vec<usize>>,
}

/// The color classes of a proper coloring, canonically ordered.
pub fn color_classes(g: &Graph, c: &Coloring) -> Result<Partition> {
    if let Some((u, v)) = monochromatic_edge(g, c)? {
        return Err(Error::contract(format!(
            "coloring is not proper: edge ({u}, {v}) has both ends colored {}",
            c.color(u)
        )));
    }
    let mut sets = c.class_sets();
    sets.sort_by_key(|s| s.first());
    Ok(Partition::from_sets(g.n(), sets))
}

pub fn build_ecg(g: &Graph, c: &Coloring) -> Result<Ecg> {
    Ok(Ecg {
        base: g.clone(),
        partition: color_classes(g, c)?,
    })
}

/// Contracts every class of `p` to a single vertex, joining two classes
/// once iff some base edge runs between them.
pub fn apply_ect(g: &Graph, p: &Partition) -> Result<QuotientGraph> {
    if p.vertex_count() != g.n() {
        return Err(Error::contract(format!(
            "partition covers {} vertices but the graph has {}",
            p.vertex_count(),
            g.n()
        )));
    }
    let sets = p.sets();
    let reach: Vec<VertexSet> = sets
        .iter()
        .map(|s| {
            s.iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
        })
        .collect();
    for (i, (s, r)) in sets.iter().zip(&reach).enumerate() {
        if r.intersects(*s) {
            return Err(Error::contract(format!(
                "class {i} {:?} is not independent; contracting it would create a loop",
                p.classes()[i]
            )));
        }
    }
    let mut graph = Graph::empty(sets.len())?;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if reach[i].intersects(sets[j]) {
                graph.insert_edge(i, j);
            }
        }
    }
    Ok(QuotientGraph {
        graph,
        classes: p.classes().to_vec(),
    })
}

impl Ecg {
    pub fn quotient(&self) -> QuotientGraph {
        apply_ect(&self.base, &self.partition).expect("ECG classes are independent")
    }
}

pub fn is_quotient_complete(q: &QuotientGraph) -> bool {
    q.graph.is_complete()
}

/// Merges pairs of classes with no edge between them, lowest index pair
/// first, until the quotient is complete. Each merge drops one color.
///
/// The fixed point is not necessarily a minimum coloring: C6 colored
/// `{0,3} {1,4} {2,5}` already has a complete quotient with three colors.
pub fn reduce_coloring(g: &Graph, c: &Coloring) -> Result<Coloring> {
    let mut partition = color_classes(g, c)?;
    loop {
        let q = apply_ect(g, &partition)?;
        let n = q.graph.n();
        let pair = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !q.graph.has_edge(i, j));
        let Some((i, j)) = pair else {
            return Ok(partition.to_coloring());
        };
        let mut sets = partition.sets().to_vec();
        let merged = sets[i].union(sets[j]);
        sets[i] = merged;
        sets.remove(j);
        sets.sort_by_key(|s| s.first());
        partition = Partition::from_sets(g.n(), sets);
    }
}
