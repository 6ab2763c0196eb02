//! Test-only oracles. Nothing here calls into the solver, enumerator or
//! planarity code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ect_core::graph::random_gnp;
use ect_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Calls `f` on every map `0..n -> 0..k`.
pub fn for_each_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut a = vec![0usize; n];
    loop {
        if !f(&a) {
            return;
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

pub fn proper(g: &Graph, a: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| a[u] != a[v])
}

/// Smallest k for which some map of the k^n assignments is proper.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut found = false;
        for_each_assignment(n, k, |a| {
            found = proper(g, a);
            !found
        });
        if found {
            return k;
        }
    }
    unreachable!()
}

/// Partition of the vertices induced by an assignment, as sorted classes.
pub fn partition_of(a: &[usize]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    for (v, &c) in a.iter().enumerate() {
        match labels.iter().position(|&l| l == c) {
            Some(i) => classes[i].push(v),
            None => {
                labels.push(c);
                classes.push(vec![v]);
            }
        }
    }
    classes.sort();
    classes
}

/// Every distinct partition arising from a proper coloring that uses
/// exactly `k` colors.
pub fn brute_partitions(g: &Graph, k: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let mut out = BTreeSet::new();
    for_each_assignment(g.n(), k, |a| {
        if proper(g, a) && a.iter().collect::<BTreeSet<_>>().len() == k {
            out.insert(partition_of(a));
        }
        true
    });
    out
}

/// Deterministic G(n, p) sample with `n` in `lo..=hi` and p in [0.1, 0.9).
pub fn random_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    random_graphs_dense(count, lo, hi, (0.1, 0.9), seed)
}

/// As [`random_graphs`] with p drawn from `p_range`.
pub fn random_graphs_dense(
    count: usize,
    lo: usize,
    hi: usize,
    p_range: (f64, f64),
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(p_range.0..p_range.1);
            random_gnp(n, p, &mut rng).unwrap()
        })
        .collect()
}
