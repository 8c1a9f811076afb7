//! Exact triple Roman number of a tree by rooted dynamic programming.
//!
//! A vertex state is its label `l` in {0, 2, 3, 4} and the surplus `s` its
//! children already supply, capped at 3. A child labeled `c` with surplus
//! `s_c` is satisfied under a parent labeled `l` when
//! `s_c + max(0, l - 1) >= max(0, 3 - c)`.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::exact::{Method, SolveResult};
use crate::graph::Graph;

const LABELS: [u8; 4] = [0, 2, 3, 4];
const INF: u32 = u32::MAX / 4;

type Table = [[u32; 4]; 4];

fn need(label: u8) -> u32 {
    3u32.saturating_sub(u32::from(label))
}

fn spill(label: u8) -> u32 {
    u32::from(label.saturating_sub(1))
}

/// Exact value and witness, rooted at vertex 0.
pub fn gamma_3r_tree(t: &Graph) -> Result<SolveResult> {
    gamma_3r_tree_rooted(t, 0)
}

/// Same as [`gamma_3r_tree`] with an explicit root; the value does not
/// depend on it.
pub fn gamma_3r_tree_rooted(t: &Graph, root: usize) -> Result<SolveResult> {
    if !t.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges, {} components",
            t.order(),
            t.size(),
            t.components().len()
        )));
    }
    if root >= t.order() {
        return Err(Error::InvalidParameter(format!("root {root} out of range")));
    }
    let values = solve(t, root);
    SolveResult::by_components(t, 3, Method::Treedp, |_| Ok((values.clone(), t.order() as u64)))
}

/// Best child cost for parent label index `pl` and child label index `cl`,
/// with the child surplus attaining it.
fn best_child(child: &Table, pl: usize, cl: usize) -> (u32, usize) {
    let give = spill(LABELS[pl]);
    let c = LABELS[cl];
    (0..4)
        .filter(|&sc| sc as u32 + give >= need(c))
        .map(|sc| (child[cl][sc], sc))
        .min()
        .unwrap_or((INF, 0))
}

fn solve(t: &Graph, root: usize) -> Vec<u8> {
    let n = t.order();
    let order = t.bfs_order(root);
    let mut parent = vec![usize::MAX; n];
    for &v in &order {
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
            }
        }
    }
    let children: Vec<Vec<usize>> = (0..n)
        .map(|v| t.neighbors(v).iter().copied().filter(|&w| parent[w] == v).collect())
        .collect();

    let mut table = vec![[[INF; 4]; 4]; n];
    // before[v][i]: v's table before merging its i-th child
    let mut before: Vec<Vec<Table>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut cur: Table = [[INF; 4]; 4];
        for (li, &l) in LABELS.iter().enumerate() {
            cur[li][0] = u32::from(l);
        }
        for &c in &children[v] {
            before[v].push(cur);
            let mut next: Table = [[INF; 4]; 4];
            for pl in 0..4 {
                for cl in 0..4 {
                    let (cost, _) = best_child(&table[c], pl, cl);
                    if cost >= INF {
                        continue;
                    }
                    for s in 0..4 {
                        if cur[pl][s] >= INF {
                            continue;
                        }
                        let ns = (s as u32 + spill(LABELS[cl])).min(3) as usize;
                        next[pl][ns] = next[pl][ns].min(cur[pl][s] + cost);
                    }
                }
            }
            cur = next;
        }
        table[v] = cur;
    }

    let (mut best, mut state) = (INF, (0, 0));
    for (li, &l) in LABELS.iter().enumerate() {
        for s in 0..4 {
            if s as u32 >= need(l) && table[root][li][s] < best {
                best = table[root][li][s];
                state = (li, s);
            }
        }
    }

    let mut values = vec![0u8; n];
    let mut stack = vec![(root, state.0, state.1)];
    while let Some((v, li, mut s)) = stack.pop() {
        values[v] = LABELS[li];
        // Walk the children backwards, undoing one merge at a time.
        let mut target = table[v][li][s];
        for (i, &c) in children[v].iter().enumerate().rev() {
            let prev = &before[v][i];
            let mut found = None;
            'search: for cl in 0..4 {
                let (ccost, sc) = best_child(&table[c], li, cl);
                if ccost >= INF {
                    continue;
                }
                for ps in 0..4 {
                    let ns = (ps as u32 + spill(LABELS[cl])).min(3) as usize;
                    if ns == s && prev[li][ps] < INF && prev[li][ps] + ccost == target {
                        found = Some((cl, sc, ps, ccost));
                        break 'search;
                    }
                }
            }
            let (cl, sc, ps, ccost) = found.expect("merge step is reproducible");
            stack.push((c, cl, sc));
            target -= ccost;
            s = ps;
        }
        debug_assert_eq!(target, u32::from(LABELS[li]));
    }
    values
}
