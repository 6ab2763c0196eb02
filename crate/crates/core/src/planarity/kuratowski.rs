//! Kuratowski subgraph extraction for non-planar graphs.
//!
//! Deleting every edge whose removal keeps the graph non-planar leaves an
//! edge-minimal non-planar subgraph, which is a subdivision of K5 or K3,3.
//! Its branch vertices (degree >= 3) plus the interiors of the subdivided
//! paths give the branch sets of the minor.

use super::{embed, MinorTarget, MinorWitness};
use crate::bitset::VertexSet;
use crate::graph::Graph;

pub(super) fn extract(g: &Graph) -> MinorWitness {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let trial = h.without_edge(u, v);
        if embed::embed(&trial).is_none() {
            h = trial;
        }
    }
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let target = match branch.len() {
        5 => MinorTarget::K5,
        6 => MinorTarget::K33,
        k => unreachable!("edge-minimal non-planar graph with {k} branch vertices"),
    };
    let branch_mask: VertexSet = branch.iter().copied().collect();

    let index = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    let mut sets: Vec<Vec<usize>> = branch.iter().map(|&b| vec![b]).collect();
    let mut joined = vec![VertexSet::EMPTY; branch.len()];
    for (bi, &b) in branch.iter().enumerate() {
        for first in h.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            let mut interior = Vec::new();
            while !branch_mask.contains(cur) {
                interior.push(cur);
                let next = h
                    .neighbors(cur)
                    .difference(VertexSet::singleton(prev))
                    .first()
                    .unwrap();
                prev = cur;
                cur = next;
            }
            let ci = index(cur);
            joined[bi].insert(ci);
            if b < cur {
                sets[bi].extend(interior);
            }
        }
    }

    if target == MinorTarget::K33 {
        // side of the lowest branch vertex: itself plus the two branch
        // vertices it is not joined to
        let side: Vec<usize> = (0..6)
            .filter(|&i| i == 0 || !joined[0].contains(i))
            .collect();
        let other: Vec<usize> = (0..6).filter(|i| !side.contains(i)).collect();
        debug_assert_eq!(side.len(), 3);
        let mut ordered = Vec::with_capacity(6);
        for i in side.into_iter().chain(other) {
            ordered.push(std::mem::take(&mut sets[i]));
        }
        sets = ordered;
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    MinorWitness {
        target,
        branch_sets: sets,
    }
}
