//! Subset-enumeration oracles for the domination, Roman and double Roman
//! numbers, written from their classical definitions rather than from the
//! [k]-RDF inequality, and the chain that relates them to the triple Roman
//! number.

use serde::{Deserialize, Serialize};

use super::{gamma_3r_bnb, guard};
use crate::error::Result;
use crate::graph::Graph;

/// Component size limit for the classical oracles.
pub const CLASSICAL_LIMIT: usize = 14;
/// Component size limit for [`inequality_chain_report`].
pub const CHAIN_LIMIT: usize = 12;

fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | (1 << w)))
        .collect()
}

fn open_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn union_of(masks: &[u32], set: u32) -> u32 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        out |= masks[v];
        rest &= rest - 1;
    }
    out
}

fn per_component(g: &Graph, f: impl Fn(&Graph) -> u32) -> Result<u32> {
    let mut total = 0;
    for comp in g.components() {
        total += f(&g.induced(&comp)?);
    }
    Ok(total)
}

/// Minimum size of a dominating set.
pub fn domination_number(g: &Graph) -> Result<u32> {
    guard("domination", g, CLASSICAL_LIMIT)?;
    per_component(g, |c| {
        let closed = closed_masks(c);
        let full = (1u32 << c.order()) - 1;
        (0..=full)
            .filter(|&s| union_of(&closed, s) == full)
            .map(u32::count_ones)
            .min()
            .expect("the full vertex set dominates")
    })
}

/// Roman domination number: labels {0, 1, 2}, every 0 next to a 2.
///
/// For a fixed set of 2s the cheapest completion labels every vertex they
/// do not dominate with 1, so it suffices to enumerate the 2s.
pub fn roman_number(g: &Graph) -> Result<u32> {
    guard("roman", g, CLASSICAL_LIMIT)?;
    per_component(g, |c| {
        let closed = closed_masks(c);
        let n = c.order() as u32;
        let full = (1u32 << n) - 1;
        (0..=full)
            .map(|s| 2 * s.count_ones() + (n - union_of(&closed, s).count_ones()))
            .min()
            .unwrap()
    })
}

/// Double Roman domination number: labels {0, 1, 2, 3}; a 0 needs two
/// neighbors labeled 2 or one labeled 3, a 1 needs a neighbor labeled 2
/// or 3.
///
/// Enumerates the disjoint pairs (twos, threes); every remaining vertex
/// takes 0 when it can, else 1, and the pair is rejected if some vertex
/// can take neither.
pub fn double_roman_number(g: &Graph) -> Result<u32> {
    guard("double roman", g, CLASSICAL_LIMIT)?;
    per_component(g, |c| {
        let open = open_masks(c);
        let n = c.order();
        let full = (1u32 << n) - 1;
        let mut best = 3 * n as u32;
        for threes in 0..=full {
            let base = 3 * threes.count_ones();
            if base >= best {
                continue;
            }
            let rest = full & !threes;
            let mut twos = rest;
            loop {
                let partial = base + 2 * twos.count_ones();
                if partial < best {
                    if let Some(ones) = completion_ones(&open, rest & !twos, twos, threes) {
                        best = best.min(partial + ones);
                    }
                }
                if twos == 0 {
                    break;
                }
                twos = (twos - 1) & rest;
            }
        }
        best
    })
}

fn completion_ones(open: &[u32], others: u32, twos: u32, threes: u32) -> Option<u32> {
    let mut ones = 0;
    let mut rest = others;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let nbrs = open[v];
        if nbrs & threes != 0 || (nbrs & twos).count_ones() >= 2 {
            continue;
        }
        if nbrs & twos != 0 {
            ones += 1;
        } else {
            return None;
        }
    }
    Some(ones)
}

/// The four parameters and each link of
/// `γ ≤ γR ≤ 2γ ≤ γdR < γ[3R] ≤ min(3γdR/2, 4γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub gamma: u32,
    pub gamma_r: u32,
    pub gamma_dr: u32,
    pub gamma_3r: u32,
    pub gamma_le_roman: bool,
    pub roman_le_twice_gamma: bool,
    pub twice_gamma_le_double_roman: bool,
    pub double_roman_lt_triple: bool,
    pub triple_le_three_halves_double: bool,
    pub triple_le_four_gamma: bool,
    pub chain_holds: bool,
}

pub fn inequality_chain_report(g: &Graph) -> Result<ChainReport> {
    guard("chain", g, CHAIN_LIMIT)?;
    let gamma = domination_number(g)?;
    let gamma_r = roman_number(g)?;
    let gamma_dr = double_roman_number(g)?;
    let gamma_3r = gamma_3r_bnb(g)?.weight;
    let links = [
        gamma <= gamma_r,
        gamma_r <= 2 * gamma,
        2 * gamma <= gamma_dr,
        gamma_dr < gamma_3r,
        2 * gamma_3r <= 3 * gamma_dr,
        gamma_3r <= 4 * gamma,
    ];
    Ok(ChainReport {
        gamma,
        gamma_r,
        gamma_dr,
        gamma_3r,
        gamma_le_roman: links[0],
        roman_le_twice_gamma: links[1],
        twice_gamma_le_double_roman: links[2],
        double_roman_lt_triple: links[3],
        triple_le_three_halves_double: links[4],
        triple_le_four_gamma: links[5],
        chain_holds: links.iter().all(|&b| b),
    })
}
