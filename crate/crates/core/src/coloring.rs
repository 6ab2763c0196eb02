//! Proper colorings, exact chromatic number and enumeration of minimum
//! colorings.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total vertex → color map whose colors are exactly `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ColoringJson", try_from = "ColoringJson")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: usize,
    colors: Vec<usize>,
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson {
            k: c.k,
            colors: c.colors,
        }
    }
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Self> {
        let c = Coloring::new(j.colors)?;
        if c.k != j.k {
            return Err(Error::contract(format!(
                "declared k = {} but colors use {}",
                j.k, c.k
            )));
        }
        Ok(c)
    }
}

impl Coloring {
    /// Validates contiguity: every color in `0..k` must be used, where `k`
    /// is one more than the largest color.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().max().map_or(0, |&m| m + 1);
        let mut seen = vec![false; k];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(gap) = seen.iter().position(|&s| !s) {
            return Err(Error::contract(format!(
                "colors are not contiguous: color {gap} unused below {k}"
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels colors by order of first appearance over ascending vertices.
    /// Any labels are accepted; the result is always contiguous.
    pub fn canonical(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: map.len(),
        }
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Vertex set of each color, indexed by color.
    pub fn class_sets(&self) -> Vec<VertexSet> {
        let mut sets = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            sets[c].insert(v);
        }
        sets
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::contract(format!(
            "coloring covers {} vertices but the graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// First edge (in sorted order) whose endpoints share a color.
pub fn monochromatic_edge(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    check_total(g, c)?;
    Ok(g.edges()
        .into_iter()
        .find(|&(u, v)| c.color(u) == c.color(v)))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(monochromatic_edge(g, c)?.is_none())
}

/// First-fit coloring along `order`: each vertex takes the least color not
/// already used by a colored neighbor.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.n();
    let mut seen = VertexSet::EMPTY;
    for &v in order {
        if v >= n || seen.contains(v) {
            return Err(Error::contract(format!(
                "order {order:?} is not a permutation of 0..{n}"
            )));
        }
        seen.insert(v);
    }
    if order.len() != n {
        return Err(Error::contract(format!(
            "order {order:?} is not a permutation of 0..{n}"
        )));
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order {
        let mut taken = 0u64;
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                taken |= 1 << colors[w];
            }
        }
        colors[v] = (!taken).trailing_zeros() as usize;
    }
    Coloring::new(colors)
}

/// Largest clique found by greedy extension from every start vertex.
pub fn greedy_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for v in 0..g.n() {
        let mut clique = VertexSet::singleton(v);
        let mut cand = g.neighbors(v);
        while !cand.is_empty() {
            let u = cand
                .iter()
                .max_by_key(|&u| {
                    (
                        g.neighbors(u).intersection(cand).len(),
                        std::cmp::Reverse(u),
                    )
                })
                .unwrap();
            clique.insert(u);
            cand = cand.intersection(g.neighbors(u));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

const UNCOLORED: usize = usize::MAX;

/// DSATUR branch and bound state for one search.
struct Dsatur<'g> {
    g: &'g Graph,
    colors: Vec<usize>,
    /// Colors present among each vertex's colored neighbors.
    saturation: Vec<u64>,
    uncolored: VertexSet,
    lower: usize,
    best_k: usize,
    best: Vec<usize>,
}

impl Dsatur<'_> {
    /// Highest saturation, then highest degree, then lowest index.
    fn pick(&self) -> usize {
        let mut pick = usize::MAX;
        let mut key = (0u32, 0usize);
        for v in self.uncolored {
            let k = (self.saturation[v].count_ones(), self.g.degree(v));
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        pick
    }

    fn search(&mut self, used: usize) {
        if self.uncolored.is_empty() {
            if used < self.best_k {
                self.best_k = used;
                self.best.clone_from(&self.colors);
            }
            return;
        }
        let v = self.pick();
        // a leaf must use at most best_k - 1 colors
        let top = used.min(self.best_k.saturating_sub(2));
        let neighbors = self.g.neighbors(v).intersection(self.uncolored);
        let mut saved = [0u64; crate::graph::MAX_VERTICES];
        for c in 0..=top {
            if self.saturation[v] >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            self.uncolored.remove(v);
            for w in neighbors {
                saved[w] = self.saturation[w];
                self.saturation[w] |= 1 << c;
            }
            self.search(used.max(c + 1));
            for w in neighbors {
                self.saturation[w] = saved[w];
            }
            self.uncolored.insert(v);
            self.colors[v] = UNCOLORED;
            if self.best_k <= self.lower {
                return;
            }
        }
    }
}

/// Exact chromatic number with a witness coloring using exactly that many
/// colors. The empty graph returns `(0, empty coloring)`.
///
/// DSATUR branch and bound seeded with a largest-first greedy upper bound
/// and a greedy clique lower bound. A new color is only ever introduced as
/// `max used + 1`, so the first branched vertex is fixed to color 0.
pub fn chromatic_number_exact(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::canonical(&[]));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let greedy = greedy_color(g, &order).expect("order is a permutation");
    let lower = greedy_clique(g).len();
    if greedy.k() == lower {
        return (greedy.k(), Coloring::canonical(greedy.colors()));
    }
    let mut solver = Dsatur {
        g,
        colors: vec![UNCOLORED; n],
        saturation: vec![0; n],
        uncolored: g.vertices(),
        lower,
        best_k: greedy.k(),
        best: greedy.colors().to_vec(),
    };
    solver.search(0);
    let witness = Coloring::canonical(&solver.best);
    debug_assert_eq!(witness.k(), solver.best_k);
    (solver.best_k, witness)
}

/// Distinct proper colorings with exactly `χ(g)` colors, one per partition
/// of the vertices into color classes.
///
/// Each coloring is canonical: class `i` is the class whose least vertex is
/// `i`-th smallest among class minima. Output follows lexicographic order
/// of the color vectors and stops after `limit` entries.
pub fn enumerate_minimal_colorings(g: &Graph, limit: usize) -> Result<Vec<Coloring>> {
    if limit == 0 {
        return Err(Error::Argument("limit must be at least 1".into()));
    }
    let (k, _) = chromatic_number_exact(g);
    Ok(enumerate_colorings_with(g, k, limit))
}

/// All canonical proper colorings using exactly `k` colors, up to `limit`.
pub fn enumerate_colorings_with(g: &Graph, k: usize, limit: usize) -> Vec<Coloring> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Coloring::canonical(&[]));
        }
        return out;
    }
    let mut colors = vec![UNCOLORED; n];
    let mut class = vec![VertexSet::EMPTY; k];
    enumerate_rec(g, k, limit, 0, 0, &mut colors, &mut class, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    g: &Graph,
    k: usize,
    limit: usize,
    v: usize,
    used: usize,
    colors: &mut [usize],
    class: &mut [VertexSet],
    out: &mut Vec<Coloring>,
) {
    let n = g.n();
    if v == n {
        if used == k {
            out.push(Coloring {
                colors: colors.to_vec(),
                k,
            });
        }
        return;
    }
    if n - v < k - used {
        return;
    }
    for c in 0..=used.min(k - 1) {
        if g.neighbors(v).intersects(class[c]) {
            continue;
        }
        colors[v] = c;
        class[c].insert(v);
        enumerate_rec(g, k, limit, v + 1, used.max(c + 1), colors, class, out);
        class[c].remove(v);
        if out.len() >= limit {
            return;
        }
    }
    colors[v] = UNCOLORED;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn col(c: &[usize]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn proper_cases() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_proper(&c4, &col(&[0, 1, 0, 1])).unwrap());
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_proper(&k3, &col(&[0, 1, 0])).unwrap());
        assert_eq!(
            monochromatic_edge(&k3, &col(&[0, 1, 0])).unwrap(),
            Some((0, 2))
        );
        assert!(is_proper(&Graph::empty(1).unwrap(), &col(&[0])).unwrap());
        assert!(matches!(
            is_proper(&k3, &col(&[0, 1])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn contiguity_enforced() {
        assert!(Coloring::new(vec![0, 2]).is_err());
        assert_eq!(Coloring::new(vec![]).unwrap().k(), 0);
        assert_eq!(Coloring::canonical(&[7, 3, 7, 9]).colors(), &[0, 1, 0, 2]);
    }

    #[test]
    fn json_form() {
        let c = col(&[0, 1, 0]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"k":2,"colors":[0,1,0]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(r#"{"k":3,"colors":[0,1,0]}"#).is_err());
        assert!(serde_json::from_str::<Coloring>(r#"{"k":2,"colors":[0,2]}"#).is_err());
    }

    #[test]
    fn greedy_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            greedy_color(&c4, &[0, 1, 2, 3]).unwrap().colors(),
            &[0, 1, 0, 1]
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(greedy_color(&k4, &[2, 0, 3, 1]).unwrap().k(), 4);
        let c5 = Graph::cycle(5).unwrap();
        let c = greedy_color(&c5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((c.colors(), c.k()), (&[0, 1, 0, 1, 2][..], 3));
    }

    #[test]
    fn greedy_rejects_bad_order() {
        let c4 = Graph::cycle(4).unwrap();
        for bad in [
            &[0, 1, 2][..],
            &[0, 1, 2, 2],
            &[0, 1, 2, 4],
            &[0, 1, 2, 3, 0],
        ] {
            assert!(
                matches!(greedy_color(&c4, bad), Err(Error::Contract(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn exact_small() {
        assert_eq!(chromatic_number_exact(&Graph::cycle(5).unwrap()).0, 3);
        assert_eq!(chromatic_number_exact(&Graph::complete(4).unwrap()).0, 4);
        assert_eq!(
            chromatic_number_exact(&named_graph("petersen").unwrap()).0,
            3
        );
        let (k, w) = chromatic_number_exact(&Graph::empty(0).unwrap());
        assert_eq!((k, w.len()), (0, 0));
        assert_eq!(chromatic_number_exact(&Graph::empty(3).unwrap()).0, 1);
    }

    #[test]
    fn enumerate_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            enumerate_minimal_colorings(&k3, 10).unwrap(),
            vec![col(&[0, 1, 2])]
        );
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            enumerate_minimal_colorings(&c4, 10).unwrap(),
            vec![col(&[0, 1, 0, 1])]
        );
        let c5 = Graph::cycle(5).unwrap();
        let all = enumerate_minimal_colorings(&c5, 100).unwrap();
        assert_eq!(all.len(), 5);
        let first_two = enumerate_minimal_colorings(&c5, 2).unwrap();
        assert_eq!(&all[..2], &first_two[..]);
        assert!(enumerate_minimal_colorings(&c5, 0).is_err());
    }
}
