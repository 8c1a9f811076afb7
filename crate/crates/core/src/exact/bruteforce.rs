use super::{guard, Method, SolveResult};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest component the exhaustive [k]-RDF search accepts.
pub const BRUTEFORCE_LIMIT: usize = 14;

/// Exhaustive minimum-weight [k]-RDF.
///
/// Labels are enumerated vertex by vertex in BFS order. A vertex is checked
/// as soon as its whole closed neighborhood is labeled, and a branch is cut
/// when it can no longer beat the best weight found. With
/// `restrict_no_ones` the alphabet drops label 1, which for k = 3 leaves
/// the optimum unchanged.
pub fn gamma_kr_bruteforce(g: &Graph, k: u8, restrict_no_ones: bool) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("domination order k must be >= 1".into()));
    }
    guard("bruteforce", g, BRUTEFORCE_LIMIT)?;
    let alphabet: Vec<u8> = (0..=k + 1)
        .filter(|&x| !(restrict_no_ones && x == 1))
        .collect();
    SolveResult::by_components(g, k, Method::Bruteforce, |sub| {
        Ok(Enumeration::new(sub, k, alphabet.clone()).run())
    })
}

struct Enumeration<'a> {
    g: &'a Graph,
    k: u32,
    alphabet: Vec<u8>,
    order: Vec<usize>,
    /// `closing[i]`: vertices whose closed neighborhood is complete once
    /// `order[i]` is labeled.
    closing: Vec<Vec<usize>>,
    values: Vec<u8>,
    weight: u32,
    best: u32,
    best_values: Vec<u8>,
    nodes: u64,
}

impl<'a> Enumeration<'a> {
    fn new(g: &'a Graph, k: u8, alphabet: Vec<u8>) -> Self {
        let order = g.bfs_order(0);
        let mut pos = vec![0usize; g.order()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut closing = vec![Vec::new(); order.len()];
        for v in 0..g.order() {
            let last = g.neighbors(v).iter().map(|&w| pos[w]).fold(pos[v], usize::max);
            closing[last].push(v);
        }
        Enumeration {
            g,
            k: u32::from(k),
            alphabet,
            order,
            closing,
            values: vec![0; g.order()],
            weight: 0,
            best: u32::MAX,
            best_values: Vec::new(),
            nodes: 0,
        }
    }

    fn run(mut self) -> (Vec<u8>, u64) {
        self.descend(0);
        (self.best_values, self.nodes)
    }

    fn satisfied(&self, v: usize) -> bool {
        let h = &self.values;
        let cov = u32::from(h[v])
            + self.g.neighbors(v).iter().map(|&w| u32::from(h[w].saturating_sub(1))).sum::<u32>();
        cov >= self.k
    }

    fn descend(&mut self, depth: usize) {
        self.nodes += 1;
        if depth == self.order.len() {
            if self.weight < self.best {
                self.best = self.weight;
                self.best_values = self.values.clone();
            }
            return;
        }
        let v = self.order[depth];
        for i in 0..self.alphabet.len() {
            let x = self.alphabet[i];
            if self.weight + u32::from(x) >= self.best {
                // alphabet is ascending
                break;
            }
            self.values[v] = x;
            self.weight += u32::from(x);
            if self.closing[depth].iter().all(|&u| self.satisfied(u)) {
                self.descend(depth + 1);
            }
            self.weight -= u32::from(x);
        }
        self.values[v] = 0;
    }
}
