//! Simple undirected graphs on dense vertex indices `0..p`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted and
//! deduplicated, so adjacency behaves as a set and iteration order is stable.

pub mod generators;
mod io;
mod structure;

pub use structure::StructReport;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `p` vertices.
    pub fn empty(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        Ok(Graph {
            adj: vec![Vec::new(); p],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(p: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(p)?;
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= p || v >= p {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {p} vertices"
                )));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        g.normalize();
        Ok(g)
    }

    fn normalize(&mut self) {
        let mut twice = 0;
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        self.edge_count = twice / 2;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// A copy of this graph with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Graph::from_edges(self.order(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let index = &index;
            self.adj[u]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && u < w)
                .map(move |&w| (index[u], index[w]))
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }
}
