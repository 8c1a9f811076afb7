//! Named families and seeded random graphs.
//!
//! Vertex numbering is part of each generator's contract:
//!
//! * `path`, `cycle`: traversal order `0, 1, ..., p-1`.
//! * `star`: center `0`, leaves `1..p`.
//! * `double_star(r, s)`: stems `0` and `1`, then the `r` leaves of `0`,
//!   then the `s` leaves of `1`.
//! * `complete_bipartite(m, n)`: sides `0..m` and `m..m+n`.
//! * `spider(legs)`: body `0`, then each leg outward in the order given.

use rand::Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::seeded;

pub fn path(p: usize) -> Result<Graph> {
    Graph::from_edges(p, (1..p).map(|i| (i - 1, i)))
}

pub fn cycle(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {p}"
        )));
    }
    Graph::from_edges(p, (0..p).map(|i| (i, (i + 1) % p)))
}

pub fn star(p: usize) -> Result<Graph> {
    Graph::from_edges(p, (1..p).map(|i| (0, i)))
}

pub fn complete(p: usize) -> Result<Graph> {
    Graph::from_edges(p, (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))))
}

pub fn double_star(r: usize, s: usize) -> Result<Graph> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter(
            "double star needs at least one leaf on each stem".into(),
        ));
    }
    let leaves0 = (0..r).map(|i| (0, 2 + i));
    let leaves1 = (0..s).map(|i| (1, 2 + r + i));
    Graph::from_edges(2 + r + s, std::iter::once((0, 1)).chain(leaves0).chain(leaves1))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite graph needs two non-empty sides".into(),
        ));
    }
    Graph::from_edges(m + n, (0..m).flat_map(|u| (0..n).map(move |j| (u, m + j))))
}

pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.contains(&0) {
        return Err(Error::InvalidParameter("spider legs must be non-empty".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Erdős–Rényi graph: each pair `u < v`, in lexicographic order, is an edge
/// with probability `prob`.
pub fn gnp(p: usize, prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {prob} outside [0, 1]"
        )));
    }
    let mut rng = seeded(seed);
    let mut edges = Vec::new();
    for u in 0..p {
        for v in u + 1..p {
            if rng.random::<f64>() < prob {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(p, edges)
}

/// Uniform random labeled tree, decoded from a random Prüfer sequence.
pub fn random_tree(p: usize, seed: u64) -> Result<Graph> {
    if p <= 2 {
        return path(p);
    }
    let mut rng = seeded(seed);
    let code: Vec<usize> = (0..p - 2).map(|_| rng.random_range(0..p)).collect();
    Graph::from_edges(p, prufer_decode(p, &code))
}

fn prufer_decode(p: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; p];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..p).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(p - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("prufer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}
