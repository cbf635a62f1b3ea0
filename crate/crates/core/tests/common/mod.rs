#![allow(dead_code)]

use covertool::graph::check_cm_vwc_labeling;
use covertool::{cover_ideal, whisker, Caps, Graph, MonomialIdeal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn j(g: &Graph) -> MonomialIdeal {
    cover_ideal(g, &Caps::default()).unwrap().ideal
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every base graph on `n` vertices, one per edge subset.
pub fn all_bases(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

pub fn all_whiskers(n_max: usize) -> Vec<Graph> {
    (1..=n_max).flat_map(all_bases).map(|b| whisker(&b)).collect()
}

/// Erdos-Renyi base graph with edge probability 1/2.
pub fn random_base(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_whiskers(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count).map(|_| whisker(&random_base(n, &mut r))).collect()
}

/// Labeled graph with `x_i y_i` edges and, for `i < j`, independently no
/// edge, `x_i x_j` or `x_i y_j`; redrawn until the labeling check passes.
pub fn random_cmvwc(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, n + i)).collect();
        for i in 0..n {
            for k in i + 1..n {
                match rng.gen_range(0..3) {
                    0 => {}
                    1 => edges.push((i, k)),
                    _ => edges.push((i, n + k)),
                }
            }
        }
        let g = Graph::labeled(n, &edges).unwrap();
        if check_cm_vwc_labeling(&g).unwrap().passed {
            return g;
        }
    }
}

/// `count` labeled CM-VWC graphs with `n` drawn from `1..=n_max`.
pub fn random_cmvwc_family(n_max: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.gen_range(1..=n_max);
            random_cmvwc(n, &mut r)
        })
        .collect()
}
