//! Branch-and-bound for the triple Roman number.
//!
//! Vertices are branched in descending degree order (ties by index) over
//! the labels `0, 4, 3, 2`; label 1 is never needed in an optimum. Each node
//! is bounded by a fractional covering argument: every vertex still short
//! of coverage 3 must be topped up by unlabeled vertices, and an unlabeled
//! vertex carrying label `l` adds at most `min(l, deficit)` to itself and
//! `min(l - 1, deficit)` to each neighbor.
//!
//! The top of the tree is split into independent tasks. Tasks share the
//! best weight found so far but only prune against it strictly, so every
//! task whose own optimum equals the global one reports its first optimum
//! in search order. The witness of the lowest such task is returned, which
//! makes the result independent of the thread count.

use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use super::{Method, SolveResult};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Component size above which the search refuses to start.
pub const BNB_LIMIT: usize = 64;

const UNSET: u8 = u8::MAX;
const BRANCH_VALUES: [u8; 4] = [0, 4, 3, 2];
const SPLIT_DEPTH: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BnbOptions {
    /// Worker threads; 1 runs inline on the caller's thread.
    pub threads: usize,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions { threads: 1 }
    }
}

pub fn gamma_3r_bnb(g: &Graph) -> Result<SolveResult> {
    gamma_3r_bnb_with(g, &BnbOptions::default())
}

pub fn gamma_3r_bnb_with(g: &Graph, opts: &BnbOptions) -> Result<SolveResult> {
    super::guard("bnb", g, BNB_LIMIT)?;
    if opts.threads == 0 {
        return Err(Error::InvalidParameter("thread count must be positive".into()));
    }
    let pool = if opts.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    SolveResult::by_components(g, 3, Method::Bnb, |sub| match &pool {
        Some(pool) => pool.install(|| solve_component(sub, true)),
        None => solve_component(sub, false),
    })
}

fn solve_component(g: &Graph, parallel: bool) -> Result<(Vec<u8>, u64)> {
    let n = g.order();
    if n == 1 {
        return Ok((vec![3], 0));
    }
    let incumbent = bounds::incumbent_labeling(g);
    let upper = incumbent.weight();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let root = Search::new(g, &order);
    let root_lower = root.residual_lower_bound().unwrap_or(u32::MAX);
    let degree_lower = bounds::degree_domination_value(g, None).0;
    if upper <= root_lower.max(degree_lower) {
        return Ok((incumbent.values().to_vec(), 0));
    }

    let tasks = root.split(SPLIT_DEPTH.min(n));
    let global = AtomicU32::new(upper);
    let run = |prefix: &Vec<(usize, u8)>| -> (Option<(u32, Vec<u8>)>, u64) {
        let mut s = Search::new(g, &order);
        for &(v, x) in prefix {
            s.assign(v, x);
        }
        s.global = Some(&global);
        s.descend(prefix.len());
        (s.best.map(|b| (s.best_weight, b)), s.nodes)
    };
    let results: Vec<_> = if parallel {
        tasks.par_iter().map(run).collect()
    } else {
        tasks.iter().map(run).collect()
    };

    let nodes = results.iter().map(|r| r.1).sum::<u64>() + 1;
    let best = results
        .into_iter()
        .filter_map(|r| r.0)
        .fold(None::<(u32, Vec<u8>)>, |acc, cur| match acc {
            Some(a) if a.0 <= cur.0 => Some(a),
            _ => Some(cur),
        });
    match best {
        Some((_, values)) => Ok((values, nodes)),
        None => Err(Error::Internal(
            "search exhausted without reaching the incumbent weight".into(),
        )),
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    values: Vec<u8>,
    /// Coverage contributed by labeled vertices in the closed neighborhood.
    cov: Vec<u32>,
    free_nbrs: Vec<u32>,
    weight: u32,
    nodes: u64,
    best_weight: u32,
    best: Option<Vec<u8>>,
    global: Option<&'a AtomicU32>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, order: &'a [usize]) -> Self {
        let n = g.order();
        Search {
            g,
            order,
            values: vec![UNSET; n],
            cov: vec![0; n],
            free_nbrs: (0..n).map(|v| g.degree(v) as u32).collect(),
            weight: 0,
            nodes: 0,
            best_weight: u32::MAX,
            best: None,
            global: None,
        }
    }

    fn potential(&self, v: usize) -> u32 {
        let own = if self.values[v] == UNSET { 3 } else { 0 };
        self.cov[v] + own + 3 * self.free_nbrs[v]
    }

    /// Labels `v` and reports whether every affected vertex can still reach
    /// coverage 3.
    fn assign(&mut self, v: usize, x: u8) -> bool {
        self.values[v] = x;
        self.weight += u32::from(x);
        self.cov[v] += u32::from(x);
        let spill = u32::from(x.saturating_sub(1));
        let mut ok = self.potential(v) >= 3;
        for &w in self.g.neighbors(v) {
            self.cov[w] += spill;
            self.free_nbrs[w] -= 1;
            ok &= self.potential(w) >= 3;
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let x = self.values[v];
        self.values[v] = UNSET;
        self.weight -= u32::from(x);
        self.cov[v] -= u32::from(x);
        let spill = u32::from(x.saturating_sub(1));
        for &w in self.g.neighbors(v) {
            self.cov[w] -= spill;
            self.free_nbrs[w] += 1;
        }
    }

    /// Lower bound on the weight still to be placed, or `None` when the
    /// remaining deficit cannot be covered at all.
    fn residual_lower_bound(&self) -> Option<u32> {
        let n = self.g.order();
        let deficit = |v: usize| 3u32.saturating_sub(self.cov[v]);
        let total: u32 = (0..n).map(deficit).sum();
        if total == 0 {
            return Some(0);
        }
        // Per free vertex: the best coverage-per-weight ratio over labels
        // 2, 3, 4 as (capacity, label), plus the label-4 capacity, which
        // caps what the vertex can add under any label.
        let mut items: Vec<(u32, u32, u32)> = Vec::new();
        for v in (0..n).filter(|&v| self.values[v] == UNSET) {
            let own = deficit(v);
            let mut best: Option<(u32, u32)> = None;
            let mut max_cap = 0;
            for label in [2u32, 3, 4] {
                let cap = own.min(label)
                    + self
                        .g
                        .neighbors(v)
                        .iter()
                        .map(|&w| deficit(w).min(label - 1))
                        .sum::<u32>();
                max_cap = max_cap.max(cap);
                let better = match best {
                    None => cap > 0,
                    Some((c, l)) => cap * l > c * label,
                };
                if better {
                    best = Some((cap, label));
                }
            }
            if let Some((cap, label)) = best {
                items.push((cap, label, max_cap));
            }
        }
        items.sort_by(|a, b| (b.0 * a.1).cmp(&(a.0 * b.1)));
        let mut remaining = total;
        let mut cost = 0.0f64;
        for (cap, label, max_cap) in items {
            if remaining == 0 {
                break;
            }
            let take = max_cap.min(remaining);
            cost += f64::from(take) * f64::from(label) / f64::from(cap);
            remaining -= take;
        }
        if remaining > 0 {
            return None;
        }
        Some((cost - 1e-9).ceil().max(0.0) as u32)
    }

    fn split(&self, depth: usize) -> Vec<Vec<(usize, u8)>> {
        let mut out = Vec::new();
        let mut s = Search::new(self.g, self.order);
        let mut prefix = Vec::new();
        s.enumerate_prefixes(depth, &mut prefix, &mut out);
        out
    }

    fn enumerate_prefixes(
        &mut self,
        depth: usize,
        prefix: &mut Vec<(usize, u8)>,
        out: &mut Vec<Vec<(usize, u8)>>,
    ) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let v = self.order[prefix.len()];
        for x in BRANCH_VALUES {
            if self.assign(v, x) {
                prefix.push((v, x));
                self.enumerate_prefixes(depth, prefix, out);
                prefix.pop();
            }
            self.unassign(v);
        }
    }

    fn pruned(&self, lower: u32) -> bool {
        lower >= self.best_weight
            || self
                .global
                .is_some_and(|g| lower > g.load(Ordering::Relaxed))
    }

    fn descend(&mut self, depth: usize) {
        self.nodes += 1;
        if depth == self.order.len() {
            if !self.pruned(self.weight) {
                self.best_weight = self.weight;
                self.best = Some(self.values.clone());
                if let Some(g) = self.global {
                    g.fetch_min(self.weight, Ordering::Relaxed);
                }
            }
            return;
        }
        let Some(rest) = self.residual_lower_bound() else {
            return;
        };
        if self.pruned(self.weight + rest) {
            return;
        }
        let v = self.order[depth];
        for x in BRANCH_VALUES {
            if self.assign(v, x) {
                self.descend(depth + 1);
            }
            self.unassign(v);
        }
    }
}
