//! Closed forms with optimal labelings for named families, and generators
//! for the extremal families F (trees) and H (graphs) made of P4 blocks.
//!
//! Block `i` of an F or H member occupies vertices `4i..4i+3` as the path
//! `v1 v2 v3 v4`; blocks are joined only through their `v2` vertices
//! (`4i + 1`), called hubs below.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{generators, Graph};
use crate::labeling::Labeling;
use crate::rng::seeded;

/// A value together with a labeling attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certified {
    pub value: u32,
    pub labeling: Labeling,
}

impl Certified {
    fn from_values(values: Vec<u8>) -> Self {
        let labeling = Labeling::triple(values).expect("labels within 0..=4");
        Certified {
            value: labeling.weight(),
            labeling,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { p: usize },
    Cycle { p: usize },
    Star { p: usize },
    DoubleStar { r: usize, s: usize },
    /// `attachment` lists hub-to-hub edges as pairs of block indices.
    FamilyF { k: usize, attachment: Vec<(usize, usize)> },
    FamilyH { l: usize, hub_edges: Vec<(usize, usize)> },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path { p } => generators::path(*p),
            FamilySpec::Cycle { p } => generators::cycle(*p),
            FamilySpec::Star { p } => generators::star(*p),
            FamilySpec::DoubleStar { r, s } => generators::double_star(*r, *s),
            FamilySpec::FamilyF { k, attachment } => gen_family_f(*k, attachment),
            FamilySpec::FamilyH { l, hub_edges } => gen_family_h(*l, hub_edges),
        }
    }

    /// Exact value and an optimal labeling in the generator's numbering.
    pub fn closed_form(&self) -> Result<Certified> {
        match self {
            FamilySpec::Path { p } => gamma_path(*p),
            FamilySpec::Cycle { p } => gamma_cycle(*p),
            FamilySpec::Star { p } => gamma_star(*p),
            FamilySpec::DoubleStar { r, s } => gamma_double_star(*r, *s),
            FamilySpec::FamilyF { k, attachment } => {
                gen_family_f(*k, attachment)?;
                Ok(block_labeling(*k))
            }
            FamilySpec::FamilyH { l, hub_edges } => {
                gen_family_h(*l, hub_edges)?;
                Ok(block_labeling(*l))
            }
        }
    }
}

/// `4⌊p/3⌋`, plus 3 when `p ≡ 1` and 4 when `p ≡ 2 (mod 3)`.
#[allow(non_snake_case)]
pub fn M_value(p: usize) -> Result<u32> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("M_p needs p >= 2, got {p}")));
    }
    Ok(4 * (p / 3) as u32 + [0, 3, 4][p % 3])
}

/// Blocks `0 4 0` followed by `3` or `2 2` for the remainder.
fn block_values(p: usize) -> Vec<u8> {
    let mut values = Vec::with_capacity(p);
    for _ in 0..p / 3 {
        values.extend([0, 4, 0]);
    }
    match p % 3 {
        1 => values.push(3),
        2 => values.extend([2, 2]),
        _ => {}
    }
    values
}

pub fn gamma_path(p: usize) -> Result<Certified> {
    let value = M_value(p)?;
    let c = Certified::from_values(block_values(p));
    debug_assert_eq!(c.value, value);
    Ok(c)
}

pub fn gamma_cycle(p: usize) -> Result<Certified> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs p >= 3, got {p}")));
    }
    let values = match p {
        4 => vec![3, 0, 3, 0],
        5 => vec![3, 0, 2, 2, 0],
        7 => vec![3, 0, 2, 2, 0, 3, 0],
        10 => vec![0, 3, 0, 2, 2, 0, 3, 0, 2, 2],
        _ => block_values(p),
    };
    Ok(Certified::from_values(values))
}

/// Closed-form cycle value without building the labeling.
pub fn cycle_value(p: usize) -> Result<u32> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs p >= 3, got {p}")));
    }
    let base = (4 * p).div_ceil(3) as u32;
    Ok(if matches!(p, 4 | 5 | 7 | 10) || p.is_multiple_of(3) {
        base
    } else {
        base + 1
    })
}

pub fn gamma_star(p: usize) -> Result<Certified> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("star needs p >= 2, got {p}")));
    }
    let mut values = vec![0; p];
    values[0] = 4;
    Ok(Certified::from_values(values))
}

/// 7 when one stem carries a single leaf, 8 otherwise.
pub fn gamma_double_star(r: usize, s: usize) -> Result<Certified> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("double star needs r, s >= 1".into()));
    }
    let mut values = vec![0; r + s + 2];
    if s == 1 {
        values[0] = 4;
        values[r + 2] = 3;
    } else if r == 1 {
        values[1] = 4;
        values[2] = 3;
    } else {
        values[0] = 4;
        values[1] = 4;
    }
    Ok(Certified::from_values(values))
}

/// Each block labeled `0 4 0 3`.
fn block_labeling(blocks: usize) -> Certified {
    Certified::from_values((0..blocks).flat_map(|_| [0, 4, 0, 3]).collect())
}

fn hub(i: usize) -> usize {
    4 * i + 1
}

fn blocks_with_hub_edges(blocks: usize, hub_edges: &[(usize, usize)]) -> Result<Graph> {
    let mut edges = Vec::with_capacity(3 * blocks + hub_edges.len());
    for i in 0..blocks {
        edges.extend([(4 * i, 4 * i + 1), (4 * i + 1, 4 * i + 2), (4 * i + 2, 4 * i + 3)]);
    }
    edges.extend(hub_edges.iter().map(|&(a, b)| (hub(a), hub(b))));
    Graph::from_edges(4 * blocks, edges)
}

/// Checks that `edges` is a simple graph on `0..n` and returns it.
fn hub_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut seen = BTreeSet::new();
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::InvalidParameter(format!("block index out of range in ({a}, {b})")));
        }
        if a == b {
            return Err(Error::InvalidParameter(format!("hub edge ({a}, {a}) is a loop")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::InvalidParameter(format!("hub edge ({a}, {b}) repeated")));
        }
    }
    Graph::from_edges(n, edges.iter().copied())
}

/// F member with `k` blocks; `attachment` must be a spanning tree on the
/// blocks.
pub fn gen_family_f(k: usize, attachment: &[(usize, usize)]) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("family F needs k >= 1".into()));
    }
    if attachment.len() != k - 1 {
        return Err(Error::InvalidParameter(format!(
            "family F with k = {k} needs {} attachment edges, got {}",
            k - 1,
            attachment.len()
        )));
    }
    if !hub_graph(k, attachment)?.is_tree() {
        return Err(Error::InvalidParameter("attachment edges do not form a tree on the blocks".into()));
    }
    blocks_with_hub_edges(k, attachment)
}

/// F member whose block tree is a random tree on `k` vertices.
pub fn gen_family_f_seeded(k: usize, seed: u64) -> Result<(Graph, Vec<(usize, usize)>)> {
    if k == 0 {
        return Err(Error::InvalidParameter("family F needs k >= 1".into()));
    }
    let attachment: Vec<_> = generators::random_tree(k, seed)?.edges().collect();
    Ok((gen_family_f(k, &attachment)?, attachment))
}

/// H member with `l` blocks; `hub_edges` must form a simple connected graph
/// on the blocks.
pub fn gen_family_h(l: usize, hub_edges: &[(usize, usize)]) -> Result<Graph> {
    if l == 0 {
        return Err(Error::InvalidParameter("family H needs l >= 1".into()));
    }
    if !hub_graph(l, hub_edges)?.is_connected() {
        return Err(Error::InvalidParameter("hub edges do not connect the blocks".into()));
    }
    blocks_with_hub_edges(l, hub_edges)
}

/// H member: a random spanning tree on the hubs plus each remaining hub
/// pair with probability 1/2.
pub fn gen_family_h_seeded(l: usize, seed: u64) -> Result<(Graph, Vec<(usize, usize)>)> {
    if l == 0 {
        return Err(Error::InvalidParameter("family H needs l >= 1".into()));
    }
    let tree = generators::random_tree(l, seed)?;
    let mut rng = seeded(seed ^ 0x4855_4253);
    let mut hub_edges = Vec::new();
    for a in 0..l {
        for b in a + 1..l {
            if tree.has_edge(a, b) || rng.random_bool(0.5) {
                hub_edges.push((a, b));
            }
        }
    }
    Ok((gen_family_h(l, &hub_edges)?, hub_edges))
}

/// Recognizes paths, cycles, stars and double stars under any vertex
/// numbering and returns the closed form mapped onto `g`'s vertices.
pub fn recognize(g: &Graph) -> Option<(FamilySpec, Certified)> {
    let p = g.order();
    if p < 2 || !g.is_connected() {
        return None;
    }
    let (spec, order) = if g.max_degree() <= 2 {
        let is_path = g.size() == p - 1;
        let start = if is_path {
            (0..p).find(|&v| g.degree(v) == 1)?
        } else {
            0
        };
        let order = walk(g, start);
        let spec = if is_path {
            FamilySpec::Path { p }
        } else {
            FamilySpec::Cycle { p }
        };
        (spec, order)
    } else if g.is_tree() {
        let stems: Vec<usize> = (0..p).filter(|&v| g.degree(v) > 1).collect();
        match stems[..] {
            [c] => {
                let order = std::iter::once(c).chain(g.neighbors(c).iter().copied()).collect();
                (FamilySpec::Star { p }, order)
            }
            [a, b] => {
                let leaves = |x: usize| g.neighbors(x).iter().copied().filter(move |&w| g.degree(w) == 1);
                let order = [a, b].into_iter().chain(leaves(a)).chain(leaves(b)).collect();
                let spec = FamilySpec::DoubleStar {
                    r: g.degree(a) - 1,
                    s: g.degree(b) - 1,
                };
                (spec, order)
            }
            _ => return None,
        }
    } else {
        return None;
    };
    let c = spec.closed_form().ok()?;
    let mut values = vec![0u8; p];
    for (i, &v) in order.iter().enumerate() {
        values[v] = c.labeling.get(i);
    }
    Some((spec, Certified::from_values(values)))
}

/// Traversal of a path or cycle from `start`.
fn walk(g: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev && w != start) {
        if order.len() == g.order() {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::verify_3rdf;

    fn check(g: &Graph, c: &Certified) {
        assert!(verify_3rdf(g, &c.labeling).unwrap().is_valid());
        assert_eq!(c.labeling.weight(), c.value);
    }

    #[test]
    fn m_values() {
        assert_eq!(M_value(6).unwrap(), 8);
        assert_eq!(M_value(7).unwrap(), 11);
        assert_eq!(M_value(8).unwrap(), 12);
        assert!(M_value(1).is_err());
    }

    #[test]
    fn paths() {
        assert_eq!(gamma_path(4).unwrap().value, 7);
        assert_eq!(gamma_path(5).unwrap().value, 8);
        let c = gamma_path(9).unwrap();
        assert_eq!(c.labeling.values(), &[0, 4, 0, 0, 4, 0, 0, 4, 0]);
        for p in 2..40 {
            let c = gamma_path(p).unwrap();
            check(&generators::path(p).unwrap(), &c);
            assert_eq!(c.value, M_value(p).unwrap());
        }
    }

    #[test]
    fn cycles() {
        assert_eq!(gamma_cycle(4).unwrap().value, 6);
        assert_eq!(gamma_cycle(7).unwrap().value, 10);
        assert_eq!(gamma_cycle(6).unwrap().value, 8);
        assert_eq!(gamma_cycle(8).unwrap().value, 12);
        for p in 3..40 {
            let c = gamma_cycle(p).unwrap();
            check(&generators::cycle(p).unwrap(), &c);
            assert_eq!(c.value, cycle_value(p).unwrap());
        }
    }

    #[test]
    fn stars() {
        assert_eq!(gamma_star(7).unwrap().value, 4);
        assert_eq!(gamma_double_star(4, 1).unwrap().value, 7);
        assert_eq!(gamma_double_star(1, 4).unwrap().value, 7);
        assert_eq!(gamma_double_star(2, 2).unwrap().value, 8);
        for (r, s) in [(1, 1), (4, 1), (1, 3), (3, 3)] {
            check(&generators::double_star(r, s).unwrap(), &gamma_double_star(r, s).unwrap());
        }
    }

    #[test]
    fn family_f_shapes() {
        let g = gen_family_f(1, &[]).unwrap();
        assert_eq!(g, generators::path(4).unwrap());
        let g = gen_family_f(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(g.is_tree());
        assert!(g.has_edge(1, 5) && g.has_edge(1, 9));
        assert!(gen_family_f(3, &[(0, 1), (0, 1)]).is_err());
        assert!(gen_family_f(3, &[(0, 1)]).is_err());
        assert!(gen_family_f(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn family_h_shapes() {
        let tri = gen_family_h(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.order(), 12);
        assert_eq!(tri.size(), 12);
        assert!(gen_family_h(3, &[(0, 1)]).is_err());
        assert!(gen_family_h(2, &[(0, 0)]).is_err());
        let (g, edges) = gen_family_h_seeded(4, 9).unwrap();
        assert!(g.is_connected());
        assert_eq!(gen_family_h(4, &edges).unwrap(), g);
    }

    #[test]
    fn recognizer_maps_labels() {
        let g = Graph::from_edges(5, [(3, 1), (1, 4), (4, 0), (0, 2)]).unwrap();
        let (spec, c) = recognize(&g).unwrap();
        assert_eq!(spec, FamilySpec::Path { p: 5 });
        check(&g, &c);
        let g = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let (spec, c) = recognize(&g).unwrap();
        assert_eq!(spec, FamilySpec::Cycle { p: 4 });
        check(&g, &c);
        let g = generators::double_star(3, 2).unwrap();
        let (_, c) = recognize(&g).unwrap();
        assert_eq!(c.value, 8);
        check(&g, &c);
        assert!(recognize(&generators::complete(4).unwrap()).is_none());
    }
}
