//! Independent oracles shared by the integration tests. Nothing here calls
//! into the solvers under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triple_roman::graph::Graph;

/// Validity straight from the active-neighborhood definition: every vertex
/// labeled below `k` needs `h(AN[v]) >= |AN(v)| + k`.
pub fn is_krdf(g: &Graph, h: &[u8], k: u32) -> bool {
    (0..g.order()).all(|v| {
        if u32::from(h[v]) >= k {
            return true;
        }
        let active: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| h[w] > 0).collect();
        let sum: u32 = u32::from(h[v]) + active.iter().map(|&w| u32::from(h[w])).sum::<u32>();
        sum >= active.len() as u32 + k
    })
}

/// Minimum [k]-RDF weight by plain enumeration of all `(k+2)^p` labelings.
pub fn naive_min(g: &Graph, k: u32) -> u32 {
    let p = g.order();
    let base = k + 2;
    let total = (base as u64).pow(p as u32);
    let mut best = u32::MAX;
    let mut h = vec![0u8; p];
    for code in 0..total {
        let mut c = code;
        for x in h.iter_mut() {
            *x = (c % base as u64) as u8;
            c /= base as u64;
        }
        let w: u32 = h.iter().map(|&x| u32::from(x)).sum();
        if w < best && is_krdf(g, &h, k) {
            best = w;
        }
    }
    best
}

/// Adjacency bitmask form, vertex `v` row in bits.
fn rows(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn permutations_within_classes(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn perms(items: &[usize]) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    for class in classes {
        let mut next = Vec::new();
        for prefix in &acc {
            for p in perms(class) {
                let mut q = prefix.clone();
                q.extend(p);
                next.push(q);
            }
        }
        acc = next;
    }
    acc
}

/// Canonical edge bitstring: minimum over vertex orders that list vertices
/// by ascending degree.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.order();
    let adj = rows(g);
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let classes: Vec<Vec<usize>> = degrees
        .iter()
        .map(|&d| (0..n).filter(|&v| g.degree(v) == d).collect())
        .collect();
    let mut best = u64::MAX;
    for order in permutations_within_classes(&classes) {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    (n, best)
}

/// All graphs on `n` vertices up to isomorphism, built by adding a vertex
/// to every graph on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let h = Graph::from_edges(m, edges).unwrap();
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected())
        .collect()
}

/// Random connected graph: a random spanning tree by attaching each vertex
/// to an earlier one, then every other pair with probability `extra`.
pub fn random_connected(p: usize, extra: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for v in 1..p {
        let u = rng.random_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..p {
        for v in u + 1..p {
            if rng.random_bool(extra) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_edges(p, edges).unwrap()
}

/// Random tree by attaching each vertex to a uniformly chosen earlier one,
/// under a random relabeling.
pub fn random_tree_oracle(p: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut names: Vec<usize> = (0..p).collect();
    for i in (1..p).rev() {
        names.swap(i, rng.random_range(0..=i));
    }
    let edges: Vec<(usize, usize)> = (1..p)
        .map(|v| (names[rng.random_range(0..v)], names[v]))
        .collect();
    Graph::from_edges(p, edges).unwrap()
}

/// Structural membership in the extremal tree family: every non-leaf has
/// exactly one leaf neighbor, and the tree left after deleting the leaves
/// has a perfect matching in which each pair contains one of its leaves.
pub fn in_family_f(t: &Graph) -> bool {
    let p = t.order();
    if !t.is_tree() || !p.is_multiple_of(4) || p == 0 {
        return false;
    }
    let leaf = |v: usize| t.degree(v) == 1;
    let stems: Vec<usize> = (0..p).filter(|&v| !leaf(v)).collect();
    if stems.len() != p / 2 {
        return false;
    }
    if stems
        .iter()
        .any(|&s| t.neighbors(s).iter().filter(|&&w| leaf(w)).count() != 1)
    {
        return false;
    }
    // Greedy matching from the leaves of the stem tree is the unique
    // perfect matching when one exists.
    let in_stem: Vec<bool> = (0..p).map(|v| !leaf(v)).collect();
    let stem_deg = |v: usize, alive: &[bool]| t.neighbors(v).iter().filter(|&&w| alive[w]).count();
    let stem_leaf: Vec<bool> = (0..p).map(|v| in_stem[v] && stem_deg(v, &in_stem) <= 1).collect();
    let mut alive = in_stem.clone();
    let mut remaining = stems.len();
    while remaining > 0 {
        let Some(a) = (0..p).find(|&v| alive[v] && stem_deg(v, &alive) <= 1) else {
            return false;
        };
        let Some(&b) = t.neighbors(a).iter().find(|&&w| alive[w]) else {
            return false;
        };
        if !stem_leaf[a] && !stem_leaf[b] {
            return false;
        }
        alive[a] = false;
        alive[b] = false;
        remaining -= 2;
    }
    true
}

/// Every collection of `t` triples over `0..3q` (repetition allowed), one
/// per orbit of element relabelings.
pub fn x3c_collections(q: usize, t: usize) -> Vec<Vec<[usize; 3]>> {
    let n = 3 * q;
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    let perms = permutations_within_classes(&[(0..n).collect()]);
    let canon = |col: &[[usize; 3]]| {
        perms
            .iter()
            .map(|p| {
                let mut mapped: Vec<[usize; 3]> = col
                    .iter()
                    .map(|tr| {
                        let mut m = [p[tr[0]], p[tr[1]], p[tr[2]]];
                        m.sort_unstable();
                        m
                    })
                    .collect();
                mapped.sort_unstable();
                mapped
            })
            .min()
            .unwrap()
    };
    let mut seen = BTreeSet::new();
    let mut idx = vec![0usize; t];
    loop {
        let col: Vec<[usize; 3]> = idx.iter().map(|&i| triples[i]).collect();
        seen.insert(canon(&col));
        // next non-decreasing index tuple
        let mut i = t;
        loop {
            if i == 0 {
                return seen.into_iter().collect();
            }
            i -= 1;
            if idx[i] + 1 < triples.len() {
                idx[i] += 1;
                for j in i + 1..t {
                    idx[j] = idx[i];
                }
                break;
            }
        }
    }
}

/// Exact cover by checking every subset of triples.
pub fn has_exact_cover(q: usize, triples: &[[usize; 3]]) -> bool {
    (0u32..1 << triples.len()).any(|mask| {
        let mut hits = vec![0; 3 * q];
        for (j, tr) in triples.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for &e in tr {
                    hits[e] += 1;
                }
            }
        }
        hits.iter().all(|&h| h == 1)
    })
}

fn ahu(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of a tree: the smallest rooted encoding over its
/// centers.
pub fn tree_canon(t: &Graph) -> String {
    let n = t.order();
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while alive > 2 {
        alive -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(t, c, usize::MAX)).min().unwrap()
}

/// All trees on `n` vertices up to isomorphism.
pub fn all_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).unwrap()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut edges: Vec<(usize, usize)> = t.edges().collect();
                edges.push((v, m - 1));
                let u = Graph::from_edges(m, edges).unwrap();
                if seen.insert(tree_canon(&u)) {
                    next.push(u);
                }
            }
        }
        level = next;
    }
    level
}
