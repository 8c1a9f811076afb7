//! [k]-Roman dominating labelings: the labeling object, validity checking
//! and the rewrite that removes label 1 from a triple Roman labeling.
//!
//! A labeling `h: V -> {0, ..., k+1}` is a [k]-RDF when every vertex with
//! `h(v) < k` satisfies `h(AN[v]) >= |AN(v)| + k`, where `AN(v)` are the
//! neighbors with a positive label. Subtracting `|AN(v)|` from both sides
//! gives the surplus form used throughout the crate:
//!
//! ```text
//! h(v) + sum over neighbors w of max(0, h(w) - 1)  >=  k
//! ```
//!
//! which holds trivially when `h(v) >= k`, so it can be checked at every
//! vertex without a case split.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    k: u8,
    values: Vec<u8>,
}

impl Labeling {
    pub fn new(k: u8, values: Vec<u8>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("domination order k must be >= 1".into()));
        }
        if let Some((v, &x)) = values.iter().enumerate().find(|(_, &x)| x > k + 1) {
            return Err(Error::InvalidLabeling(format!(
                "vertex {v} has label {x}, allowed range is 0..={}",
                k + 1
            )));
        }
        Ok(Labeling { k, values })
    }

    /// A labeling for the triple (k = 3) case.
    pub fn triple(values: Vec<u8>) -> Result<Self> {
        Labeling::new(3, values)
    }

    pub fn uniform(k: u8, p: usize, value: u8) -> Result<Self> {
        Labeling::new(k, vec![value; p])
    }

    /// Parses whitespace-separated labels in vertex order.
    pub fn parse(text: &str, k: u8) -> Result<Self> {
        let values = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u8>()
                    .map_err(|_| Error::InvalidLabeling(format!("`{tok}` is not a label")))
            })
            .collect::<Result<Vec<_>>>()?;
        Labeling::new(k, values)
    }

    pub fn to_line(&self) -> String {
        self.values
            .iter()
            .map(u8::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, v: usize) -> u8 {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| u32::from(x)).sum()
    }

    pub fn count(&self, label: u8) -> usize {
        self.values.iter().filter(|&&x| x == label).count()
    }

    pub(crate) fn set(&mut self, v: usize, label: u8) {
        debug_assert!(label <= self.k + 1);
        self.values[v] = label;
    }
}

/// A vertex failing the defining inequality: `achieved = h(AN[v])` is below
/// `required = |AN(v)| + k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: usize,
    pub required: u32,
    pub achieved: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid => &[],
            Verdict::Invalid(v) => v,
        }
    }
}

/// `h(v) + sum max(0, h(w) - 1)` over the neighbors `w` of `v`.
pub fn coverage(g: &Graph, values: &[u8], v: usize) -> u32 {
    u32::from(values[v])
        + g.neighbors(v)
            .iter()
            .map(|&w| u32::from(values[w].saturating_sub(1)))
            .sum::<u32>()
}

fn check_shape(g: &Graph, l: &Labeling, k: u8) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("domination order k must be >= 1".into()));
    }
    if l.len() != g.order() {
        return Err(Error::InvalidLabeling(format!(
            "labeling has {} entries but the graph has {} vertices",
            l.len(),
            g.order()
        )));
    }
    if let Some((v, &x)) = l.values().iter().enumerate().find(|(_, &x)| x > k + 1) {
        return Err(Error::InvalidLabeling(format!(
            "vertex {v} has label {x}, allowed range is 0..={}",
            k + 1
        )));
    }
    Ok(())
}

/// Checks the [k]-RDF inequality at every vertex and reports every failure.
pub fn verify_krdf(g: &Graph, l: &Labeling, k: u8) -> Result<Verdict> {
    check_shape(g, l, k)?;
    let h = l.values();
    let mut violations = Vec::new();
    for v in 0..g.order() {
        if h[v] >= k {
            continue;
        }
        let active: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| h[w] > 0).collect();
        let required = active.len() as u32 + u32::from(k);
        let achieved = u32::from(h[v]) + active.iter().map(|&w| u32::from(h[w])).sum::<u32>();
        if achieved < required {
            violations.push(Violation {
                vertex: v,
                required,
                achieved,
            });
        }
    }
    Ok(if violations.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Invalid(violations)
    })
}

/// The case table for k = 3, phrased with neighbor counts per label class.
///
/// A 0 needs a neighbor labeled 4, or a 3 together with another 2 or 3, or
/// three 2s. A 1 needs a neighbor labeled 3 or 4, or two 2s. A 2 needs any
/// neighbor labeled at least 2. Two neighbors labeled 2 do not satisfy a 0.
fn satisfies_case_table(g: &Graph, h: &[u8], v: usize) -> bool {
    let (mut n2, mut n3, mut n4) = (0usize, 0usize, 0usize);
    for &w in g.neighbors(v) {
        match h[w] {
            2 => n2 += 1,
            3 => n3 += 1,
            4 => n4 += 1,
            _ => {}
        }
    }
    match h[v] {
        0 => n4 >= 1 || n3 >= 2 || (n3 >= 1 && n2 >= 1) || n2 >= 3,
        1 => n4 + n3 >= 1 || n2 >= 2,
        2 => n4 + n3 + n2 >= 1,
        _ => true,
    }
}

/// Triple Roman check: the k = 3 inequality, cross-checked against the
/// per-label case table.
pub fn verify_3rdf(g: &Graph, l: &Labeling) -> Result<Verdict> {
    let verdict = verify_krdf(g, l, 3)?;
    let failing: Vec<usize> = (0..g.order())
        .filter(|&v| !satisfies_case_table(g, l.values(), v))
        .collect();
    let from_inequality: Vec<usize> = verdict.violations().iter().map(|x| x.vertex).collect();
    if failing != from_inequality {
        return Err(Error::Internal(format!(
            "case table {failing:?} disagrees with inequality {from_inequality:?}"
        )));
    }
    Ok(verdict)
}

/// Rewrites a valid triple Roman labeling into one without label 1.
///
/// Vertices labeled 1 are handled in ascending order. A 1 next to a 4 drops
/// to 0; otherwise a 1 next to a 3 drops to 0 and the 3 becomes 4;
/// otherwise it has two neighbors labeled 2, drops to 0 and the first of
/// them becomes 3. Each rule only raises neighbor coverage, so validity is
/// kept and the weight never grows.
pub fn eliminate_ones(g: &Graph, l: &Labeling) -> Result<Labeling> {
    if !verify_3rdf(g, l)?.is_valid() {
        return Err(Error::InvalidLabeling(
            "eliminate_ones needs a valid triple Roman labeling".into(),
        ));
    }
    let mut out = Labeling::triple(l.values().to_vec())?;
    for v in 0..g.order() {
        if out.get(v) != 1 {
            continue;
        }
        let nbrs = g.neighbors(v);
        let h = out.values();
        if nbrs.iter().any(|&w| h[w] == 4) {
            out.set(v, 0);
        } else if let Some(&w) = nbrs.iter().find(|&&w| h[w] == 3) {
            out.set(v, 0);
            out.set(w, 4);
        } else {
            let twos: Vec<usize> = nbrs.iter().copied().filter(|&w| h[w] == 2).take(2).collect();
            if twos.len() < 2 {
                return Err(Error::Internal(format!(
                    "vertex {v} labeled 1 has no applicable rewrite"
                )));
            }
            out.set(v, 0);
            out.set(twos[0], 3);
        }
    }
    if !verify_3rdf(g, &out)?.is_valid() {
        return Err(Error::Internal("rewrite produced an invalid labeling".into()));
    }
    Ok(out)
}
