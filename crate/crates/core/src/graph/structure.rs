use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Degree, distance and cycle summary of a graph.
///
/// `diameter` is `None` for disconnected graphs and `girth` is `None` for
/// forests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructReport {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub is_tree: bool,
    pub is_connected: bool,
    pub regular_degree: Option<usize>,
}

impl Graph {
    pub fn struct_report(&self) -> StructReport {
        let is_connected = self.is_connected();
        let girth = self.girth();
        let (min_degree, max_degree) = (self.min_degree(), self.max_degree());
        StructReport {
            order: self.order(),
            size: self.size(),
            min_degree,
            max_degree,
            diameter: self.diameter(),
            girth,
            is_tree: is_connected && self.size() + 1 == self.order(),
            is_connected,
            regular_degree: (min_degree == max_degree).then_some(max_degree),
        }
    }

    /// BFS distances from `src`; unreachable vertices get `None`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices in BFS order from `src`, restricted to its component.
    pub fn bfs_order(&self, src: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[src] = true;
        let mut order = vec![src];
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp = self.bfs_order(s);
            for &v in &comp {
                seen[v] = true;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_order(0).len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle, from a BFS rooted at every vertex.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in 0..self.order() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Chordality via maximum cardinality search followed by a
    /// perfect-elimination-ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.order();
        // MCS numbers vertices from n-1 down to 0; the reverse is a PEO
        // exactly when the graph is chordal.
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        let mut order = vec![0usize; n];
        for i in (0..n).rev() {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            numbered[v] = true;
            order[i] = v;
            for &w in self.neighbors(v) {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for &v in &order {
            let later: Vec<usize> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| position[w] > position[v])
                .collect();
            if let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) {
                if later
                    .iter()
                    .any(|&w| w != parent && !self.has_edge(parent, w))
                {
                    return false;
                }
            }
        }
        true
    }
}
