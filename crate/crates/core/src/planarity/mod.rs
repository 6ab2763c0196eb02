//! Planarity verdicts that carry a checkable witness either way.
//!
//! A planar verdict carries a rotation system (cyclic neighbor order at each
//! vertex) whose traced faces satisfy Euler's formula. A non-planar verdict
//! carries K5 or K3,3 branch sets. Both are validated by [`validate_embedding`]
//! and [`validate_minor`], which share no code with the searchers.
//!
//! The exhaustive branch-set search in [`minor`] is an independent route to
//! the same answer (a graph is planar iff it has no K5 or K3,3 minor) and is
//! used to cross-check [`is_planar`] on small graphs.

mod embed;
mod kuratowski;
pub mod minor;

use serde::{Deserialize, Serialize};

pub use minor::{has_k5_or_k33_minor, planarity_oracle_small, MinorSearch, ORACLE_MAX_VERTICES};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Cyclic neighbor order around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinorTarget {
    K5,
    K33,
}

impl MinorTarget {
    pub fn branch_count(self) -> usize {
        match self {
            MinorTarget::K5 => 5,
            MinorTarget::K33 => 6,
        }
    }

    /// Whether branch sets `i` and `j` must be joined by an edge. For K3,3
    /// sets `0..3` form one side and `3..6` the other.
    pub fn requires(self, i: usize, j: usize) -> bool {
        match self {
            MinorTarget::K5 => i != j,
            MinorTarget::K33 => (i < 3) != (j < 3),
        }
    }
}

/// Disjoint connected vertex sets that contract to the target graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub target: MinorTarget,
    pub branch_sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Embedding(Embedding),
    Minor(MinorWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub witness: Witness,
}

impl PlanarityVerdict {
    /// Re-checks the witness against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match (&self.witness, self.planar) {
            (Witness::Embedding(e), true) => validate_embedding(g, e),
            (Witness::Minor(m), false) => validate_minor(g, m),
            _ => Err(Error::Witness("verdict and witness kind disagree".into())),
        }
    }
}

/// Necessary condition for planarity: `n < 3` or `|E| <= 3n - 6`.
pub fn euler_bound_check(g: &Graph) -> bool {
    let n = g.n();
    n < 3 || g.edge_count() <= 3 * n - 6
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    match embed::embed(g) {
        Some(rotation) => PlanarityVerdict {
            planar: true,
            witness: Witness::Embedding(Embedding { rotation }),
        },
        None => PlanarityVerdict {
            planar: false,
            witness: Witness::Minor(kuratowski::extract(g)),
        },
    }
}

/// Faces traced from a rotation system: the dart `u -> v` is followed by
/// `v -> w`, where `w` comes right after `u` in the rotation at `v`.
pub fn trace_faces(g: &Graph, e: &Embedding) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if e.rotation.len() != n {
        return Err(Error::Witness(format!(
            "rotation has {} entries for {n} vertices",
            e.rotation.len()
        )));
    }
    let mut pos = vec![[usize::MAX; MAX_VERTICES]; n];
    for (v, rot) in e.rotation.iter().enumerate() {
        let mut seen = VertexSet::EMPTY;
        for (i, &w) in rot.iter().enumerate() {
            if w >= n || !g.has_edge(v, w) || seen.contains(w) {
                return Err(Error::Witness(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
            seen.insert(w);
            pos[v][w] = i;
        }
        if seen != g.neighbors(v) {
            return Err(Error::Witness(format!("rotation at {v} misses a neighbor")));
        }
    }
    let mut used = vec![VertexSet::EMPTY; n];
    let mut faces = Vec::new();
    for (u, v) in g.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
        if used[u].contains(v) {
            continue;
        }
        let mut face = Vec::new();
        let (mut a, mut b) = (u, v);
        while !used[a].contains(b) {
            used[a].insert(b);
            face.push(a);
            let rot = &e.rotation[b];
            let next = rot[(pos[b][a] + 1) % rot.len()];
            a = b;
            b = next;
        }
        faces.push(face);
    }
    Ok(faces)
}

/// Checks that `e` is a rotation system of `g` with `V - E + F = 2` on every
/// connected component that has an edge.
pub fn validate_embedding(g: &Graph, e: &Embedding) -> Result<()> {
    let faces = trace_faces(g, e)?;
    for comp in g.components() {
        let v = comp.len() as i64;
        if v == 1 {
            continue;
        }
        let edges: i64 = comp.iter().map(|x| g.degree(x) as i64).sum::<i64>() / 2;
        let f = faces.iter().filter(|f| comp.contains(f[0])).count() as i64;
        if v - edges + f != 2 {
            return Err(Error::Witness(format!(
                "component at vertex {} has V - E + F = {} - {} + {} != 2",
                comp.first().unwrap(),
                v,
                edges,
                f
            )));
        }
    }
    Ok(())
}

/// Checks the branch-set conditions of `w` against `g`.
pub fn validate_minor(g: &Graph, w: &MinorWitness) -> Result<()> {
    let bad = |msg: String| Err(Error::Witness(msg));
    let k = w.target.branch_count();
    if w.branch_sets.len() != k {
        return bad(format!(
            "{:?} needs {k} branch sets, got {}",
            w.target,
            w.branch_sets.len()
        ));
    }
    let mut sets = Vec::with_capacity(k);
    let mut all = VertexSet::EMPTY;
    for (i, bs) in w.branch_sets.iter().enumerate() {
        let mut s = VertexSet::EMPTY;
        for &v in bs {
            if v >= g.n() {
                return bad(format!("branch set {i} has out-of-range vertex {v}"));
            }
            if all.contains(v) {
                return bad(format!("vertex {v} is in two branch sets"));
            }
            all.insert(v);
            s.insert(v);
        }
        if !g.is_connected_within(s) {
            return bad(format!("branch set {i} {bs:?} is empty or disconnected"));
        }
        sets.push(s);
    }
    for i in 0..k {
        let around = sets[i]
            .iter()
            .fold(VertexSet::EMPTY, |a, v| a.union(g.neighbors(v)));
        for j in i + 1..k {
            if w.target.requires(i, j) && !around.intersects(sets[j]) {
                return bad(format!("no edge between branch sets {i} and {j}"));
            }
        }
    }
    Ok(())
}
