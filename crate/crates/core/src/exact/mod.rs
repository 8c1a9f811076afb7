//! Exact optimum computation.
//!
//! Every solver works component by component and sums the per-component
//! optima. An isolated vertex costs `k` (nothing can cover it, so its own
//! label must reach `k`).

mod bnb;
mod bruteforce;
mod classical;

pub use bnb::{gamma_3r_bnb, gamma_3r_bnb_with, BnbOptions, BNB_LIMIT};
pub use bruteforce::{gamma_kr_bruteforce, BRUTEFORCE_LIMIT};
pub use classical::{
    domination_number, double_roman_number, inequality_chain_report, roman_number, ChainReport,
    CHAIN_LIMIT, CLASSICAL_LIMIT,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{verify_krdf, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Bnb,
    Treedp,
    Closedform,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Bruteforce => "bruteforce",
            Method::Bnb => "bnb",
            Method::Treedp => "treedp",
            Method::Closedform => "closedform",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentResult {
    pub vertices: Vec<usize>,
    pub weight: u32,
    pub nodes_explored: u64,
}

/// Optimal weight with a witness labeling. `nodes_explored` is advisory:
/// it depends on scheduling when the search runs on several threads.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub weight: u32,
    pub witness: Labeling,
    pub method: Method,
    pub nodes_explored: u64,
    pub per_component: Vec<ComponentResult>,
}

impl SolveResult {
    /// Runs `solve` on each connected component (relabeled to `0..n`) and
    /// stitches the witnesses back together.
    pub(crate) fn by_components<F>(g: &Graph, k: u8, method: Method, mut solve: F) -> Result<Self>
    where
        F: FnMut(&Graph) -> Result<(Vec<u8>, u64)>,
    {
        let mut values = vec![0u8; g.order()];
        let mut per_component = Vec::new();
        for comp in g.components() {
            let sub = g.induced(&comp)?;
            let (labels, nodes) = solve(&sub)?;
            let weight = labels.iter().map(|&x| u32::from(x)).sum();
            for (i, &v) in comp.iter().enumerate() {
                values[v] = labels[i];
            }
            per_component.push(ComponentResult {
                vertices: comp,
                weight,
                nodes_explored: nodes,
            });
        }
        let witness = Labeling::new(k, values)?;
        let result = SolveResult {
            weight: witness.weight(),
            nodes_explored: per_component.iter().map(|c| c.nodes_explored).sum(),
            witness,
            method,
            per_component,
        };
        if !verify_krdf(g, &result.witness, k)?.is_valid() {
            return Err(Error::Internal(format!("{method} produced an invalid witness")));
        }
        Ok(result)
    }
}

pub(crate) fn guard(what: &'static str, g: &Graph, limit: usize) -> Result<()> {
    if let Some(big) = g.components().into_iter().map(|c| c.len()).max() {
        if big > limit {
            return Err(Error::SizeGuard {
                what,
                limit,
                actual: big,
            });
        }
    }
    Ok(())
}
