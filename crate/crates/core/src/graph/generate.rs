//! Seeded random instance generation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneratorMode {
    /// Incremental triangulation; always `3n - 6` edges.
    Maximal,
    /// A maximal planar graph with each edge then kept with probability `1 - p`.
    Subsample { p: f64 },
}

/// Random maximal planar graph on `n >= 3` vertices.
///
/// Starts from the triangle `0 1 2`; vertex `i` is dropped into a uniformly
/// chosen face of the current triangulation and joined to its three corners.
/// The outer face is one of the candidates.
pub fn generate_random_planar(n: usize, seed: u64) -> Result<Graph> {
    generate_planar(n, seed, GeneratorMode::Maximal)
}

pub fn generate_planar(n: usize, seed: u64, mode: GeneratorMode) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "planar generator needs n >= 3, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    g.insert_edge(0, 1);
    g.insert_edge(1, 2);
    g.insert_edge(0, 2);
    // both sides of the starting triangle
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        for w in [a, b, c] {
            g.insert_edge(v, w);
        }
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    match mode {
        GeneratorMode::Maximal => Ok(g),
        GeneratorMode::Subsample { p } => subsample_edges(&g, p, &mut rng),
    }
}

/// Deletes each edge independently with probability `p`.
pub fn subsample_edges<R: Rng>(g: &Graph, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Argument(format!(
            "deletion probability {p} not in [0, 1]"
        )));
    }
    let kept: Vec<_> = g.edges().into_iter().filter(|_| !rng.gen_bool(p)).collect();
    Graph::from_edges(g.n(), kept)
}

/// Erdős–Rényi `G(n, p)` with vertex labels shuffled.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Argument(format!(
            "edge probability {p} not in [0, 1]"
        )));
    }
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(labels[u], labels[v]);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_base_case() {
        for seed in [0, 1, 99] {
            assert_eq!(
                generate_random_planar(3, seed).unwrap(),
                Graph::complete(3).unwrap()
            );
        }
    }

    #[test]
    fn four_vertices() {
        let g = generate_random_planar(4, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 6));
    }

    #[test]
    fn euler_tight_edge_count() {
        for n in 3..=50 {
            for seed in 0..4 {
                assert_eq!(
                    generate_random_planar(n, seed).unwrap().edge_count(),
                    3 * n - 6
                );
            }
        }
    }

    #[test]
    fn reproducible() {
        let a = generate_random_planar(30, 5).unwrap();
        let b = generate_random_planar(30, 5).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = generate_random_planar(30, 6).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn subsample_keeps_subset() {
        let full = generate_random_planar(20, 3).unwrap();
        let sparse = generate_planar(20, 3, GeneratorMode::Subsample { p: 0.5 }).unwrap();
        assert!(sparse.edge_count() < full.edge_count());
        for (u, v) in sparse.edges() {
            assert!(full.has_edge(u, v));
        }
        assert!(generate_planar(20, 3, GeneratorMode::Subsample { p: 1.5 }).is_err());
    }

    #[test]
    fn too_small() {
        assert!(matches!(
            generate_random_planar(2, 0),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn gnp_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(random_gnp(6, 0.0, &mut rng).unwrap().edge_count(), 0);
        assert!(random_gnp(6, 1.0, &mut rng).unwrap().is_complete());
    }
}
