//! Exhaustive K5 / K3,3 minor search by branch-set assignment.
//!
//! Vertices are visited in ascending index order and either dropped or
//! placed into a branch-set slot. Slots are opened in order (for K3,3 each
//! side opens in order and side A opens first), so each unordered model is
//! generated once. A partial assignment is abandoned when a slot can no
//! longer become connected using undecided vertices, when two slots that
//! must touch can no longer do so, or when too few vertices remain to open
//! the remaining slots.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{MinorTarget, MinorWitness};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The oracle refuses graphs larger than this.
pub const ORACLE_MAX_VERTICES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorWitness),
    /// The search space was exhausted without finding a minor.
    None,
    /// The node budget ran out first; nothing is known.
    Inconclusive {
        explored: u64,
    },
}

/// A found minor serializes as its witness; otherwise
/// `{"result": "none"}` or `{"result": "inconclusive", "explored": N}`.
impl Serialize for MinorSearch {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinorSearch::Found(w) => w.serialize(ser),
            MinorSearch::None => {
                let mut m = ser.serialize_map(Some(1))?;
                m.serialize_entry("result", "none")?;
                m.end()
            }
            MinorSearch::Inconclusive { explored } => {
                let mut m = ser.serialize_map(Some(2))?;
                m.serialize_entry("result", "inconclusive")?;
                m.serialize_entry("explored", explored)?;
                m.end()
            }
        }
    }
}

impl MinorSearch {
    pub fn witness(&self) -> Option<&MinorWitness> {
        match self {
            MinorSearch::Found(w) => Some(w),
            _ => None,
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    target: MinorTarget,
    slots: Vec<VertexSet>,
    budget: Option<u64>,
    explored: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn slot_count(&self) -> usize {
        self.target.branch_count()
    }

    /// Slots a new branch set may be opened in, given which are open.
    fn openable(&self) -> [Option<usize>; 2] {
        let open = |i: usize| !self.slots[i].is_empty();
        match self.target {
            MinorTarget::K5 => [(0..5).find(|&i| !open(i)), None],
            MinorTarget::K33 => {
                let a = (0..3).find(|&i| !open(i));
                let b = if open(0) {
                    (3..6).find(|&i| !open(i))
                } else {
                    None
                };
                [a, b]
            }
        }
    }

    fn feasible(&self, future: VertexSet) -> bool {
        let k = self.slot_count();
        let unopened = self.slots.iter().filter(|s| s.is_empty()).count();
        if unopened > future.len() {
            return false;
        }
        let mut grow = [VertexSet::EMPTY; 6];
        for i in 0..k {
            let s = self.slots[i];
            if s.is_empty() {
                grow[i] = future;
                continue;
            }
            let r = self.g.reach(s.first().unwrap(), s.union(future));
            if !s.is_subset(r) {
                return false;
            }
            grow[i] = r;
        }
        for i in 0..k {
            if self.slots[i].is_empty() {
                continue;
            }
            let around = grow[i]
                .iter()
                .fold(grow[i], |a, v| a.union(self.g.neighbors(v)));
            for j in i + 1..k {
                if self.target.requires(i, j)
                    && !self.slots[j].is_empty()
                    && !around.intersects(grow[j])
                {
                    return false;
                }
            }
        }
        true
    }

    fn complete(&self) -> bool {
        let k = self.slot_count();
        if self
            .slots
            .iter()
            .any(|s| s.is_empty() || !self.g.is_connected_within(*s))
        {
            return false;
        }
        for i in 0..k {
            let around = self.slots[i]
                .iter()
                .fold(VertexSet::EMPTY, |a, v| a.union(self.g.neighbors(v)));
            for j in i + 1..k {
                if self.target.requires(i, j) && !around.intersects(self.slots[j]) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, v: usize) -> Outcome {
        self.explored += 1;
        if self.budget.is_some_and(|b| self.explored > b) {
            return Outcome::OutOfBudget;
        }
        let n = self.g.n();
        if v == n {
            return if self.complete() {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        let future = VertexSet::full(n).difference(VertexSet::full(v + 1));
        let mut choices: Vec<Option<usize>> = (0..self.slot_count())
            .filter(|&i| !self.slots[i].is_empty())
            .map(Some)
            .collect();
        choices.extend(self.openable().into_iter().flatten().map(Some));
        choices.push(None);
        for choice in choices {
            if let Some(i) = choice {
                self.slots[i].insert(v);
            }
            if self.feasible(future) {
                match self.run(v + 1) {
                    Outcome::Exhausted => {}
                    done => return done,
                }
            }
            if let Some(i) = choice {
                self.slots[i].remove(v);
            }
        }
        Outcome::Exhausted
    }
}

/// Searches for one target minor. `budget` caps the number of search nodes.
pub fn find_minor(g: &Graph, target: MinorTarget, budget: Option<u64>) -> MinorSearch {
    search_counted(g, target, budget).0
}

fn search_counted(g: &Graph, target: MinorTarget, budget: Option<u64>) -> (MinorSearch, u64) {
    let (min_n, min_m) = match target {
        MinorTarget::K5 => (5, 10),
        MinorTarget::K33 => (6, 9),
    };
    if g.n() < min_n || g.edge_count() < min_m {
        return (MinorSearch::None, 0);
    }
    let mut s = Search {
        g,
        target,
        slots: vec![VertexSet::EMPTY; target.branch_count()],
        budget,
        explored: 0,
    };
    let result = match s.run(0) {
        Outcome::Found => MinorSearch::Found(MinorWitness {
            target,
            branch_sets: s.slots.iter().map(|x| x.iter().collect()).collect(),
        }),
        Outcome::Exhausted => MinorSearch::None,
        Outcome::OutOfBudget => MinorSearch::Inconclusive {
            explored: s.explored,
        },
    };
    (result, s.explored)
}

/// Looks for a K5 minor, then a K3,3 minor, sharing one node budget.
pub fn has_k5_or_k33_minor(g: &Graph, budget: Option<u64>) -> MinorSearch {
    let (k5, used) = search_counted(g, MinorTarget::K5, budget);
    if !matches!(k5, MinorSearch::None) {
        return k5;
    }
    let remaining = budget.map(|b| b - used);
    match search_counted(g, MinorTarget::K33, remaining).0 {
        MinorSearch::Inconclusive { explored } => MinorSearch::Inconclusive {
            explored: explored + used,
        },
        other => other,
    }
}

/// Planarity by Wagner's criterion: true iff no K5 or K3,3 minor exists.
/// Refuses graphs with more than [`ORACLE_MAX_VERTICES`] vertices.
pub fn planarity_oracle_small(g: &Graph) -> Result<bool> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::Argument(format!(
            "minor oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    match has_k5_or_k33_minor(g, None) {
        MinorSearch::Found(_) => Ok(false),
        MinorSearch::None => Ok(true),
        MinorSearch::Inconclusive { .. } => unreachable!("unbounded search"),
    }
}
