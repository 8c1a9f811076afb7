//! Exact 3-cover instances and the gadget graphs that encode them.
//!
//! For an instance with ground set `0..3q` and triples `C_0..C_{t-1}` the
//! gadget has
//! - a pair `x_i - y_i` for every element `i`, numbered `x_i = i` and
//!   `y_i = 3q + i`;
//! - a star `K_{1,4}` per triple `j` at base `b = 6q + 5j`, with centre
//!   `w_j = b`, leaf `c_j = b + 1` and three further leaves `b + 2..b + 4`;
//! - edges `c_j x_i` for `i ∈ C_j`.
//!
//! The chordal variant also joins every pair of `c_j`. The instance has an
//! exact cover iff the gadget has a triple Roman labeling of weight at most
//! `4t + 11q`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{verify_3rdf, Labeling};

/// Largest number of triples [`x3c_bruteforce`] accepts.
pub const X3C_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    q: usize,
    triples: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInstance("q must be positive".into()));
        }
        for (j, tr) in triples.iter().enumerate() {
            if let Some(&e) = tr.iter().find(|&&e| e >= 3 * q) {
                return Err(Error::InvalidInstance(format!(
                    "triple {j} has element {e} outside 0..{}",
                    3 * q
                )));
            }
            if tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2] {
                return Err(Error::InvalidInstance(format!("triple {j} repeats an element")));
            }
        }
        Ok(X3CInstance { q, triples })
    }

    /// Reads `q t` followed by `t` lines of three elements. `#` starts a
    /// comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let numbers = |line: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("expected a non-negative integer, got {tok:?}"),
                    })
                })
                .collect()
        };
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing \"q t\" header".into(),
        })?;
        let (q, t) = match numbers(hline, header)?[..] {
            [q, t] => (q, t),
            _ => {
                return Err(Error::Parse {
                    line: hline,
                    msg: "header must be \"q t\"".into(),
                })
            }
        };
        let mut triples = Vec::with_capacity(t);
        for (line, l) in lines {
            match numbers(line, l)?[..] {
                [a, b, c] => triples.push([a, b, c]),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "a triple line needs exactly 3 elements".into(),
                    })
                }
            }
        }
        if triples.len() != t {
            return Err(Error::InvalidInstance(format!(
                "header announces {t} triples, found {}",
                triples.len()
            )));
        }
        X3CInstance::new(q, triples)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.q, self.triples.len());
        for [a, b, c] in &self.triples {
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn t(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn threshold(&self) -> u32 {
        (4 * self.t() + 11 * self.q) as u32
    }

    /// Whether the chosen triples partition the ground set.
    pub fn is_exact_cover(&self, cover: &[usize]) -> bool {
        self.check_cover(cover).is_ok()
    }

    fn check_cover(&self, cover: &[usize]) -> Result<()> {
        let mut hits = vec![0usize; 3 * self.q];
        for &j in cover {
            let tr = self
                .triples
                .get(j)
                .ok_or_else(|| Error::NotExactCover(format!("no triple {j}")))?;
            for &e in tr {
                hits[e] += 1;
            }
        }
        match hits.iter().position(|&h| h != 1) {
            None => Ok(()),
            Some(e) => Err(Error::NotExactCover(format!(
                "element {e} covered {} times",
                hits[e]
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Bipartite,
    Chordal,
}

/// Role of every gadget vertex, written next to the gadget's edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub variant: Variant,
    pub q: usize,
    pub t: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub w: Vec<usize>,
    pub c: Vec<usize>,
    pub leaves: Vec<[usize; 3]>,
    pub threshold: u32,
}

pub fn build_gadget(inst: &X3CInstance, variant: Variant) -> (Graph, GadgetMap) {
    let (q, t) = (inst.q(), inst.t());
    let base = |j: usize| 6 * q + 5 * j;
    let map = GadgetMap {
        variant,
        q,
        t,
        x: (0..3 * q).collect(),
        y: (3 * q..6 * q).collect(),
        w: (0..t).map(base).collect(),
        c: (0..t).map(|j| base(j) + 1).collect(),
        leaves: (0..t).map(|j| [base(j) + 2, base(j) + 3, base(j) + 4]).collect(),
        threshold: inst.threshold(),
    };
    let mut edges: Vec<(usize, usize)> = (0..3 * q).map(|i| (map.x[i], map.y[i])).collect();
    for j in 0..t {
        edges.push((map.w[j], map.c[j]));
        edges.extend(map.leaves[j].iter().map(|&l| (map.w[j], l)));
        edges.extend(inst.triples()[j].iter().map(|&i| (map.c[j], map.x[i])));
    }
    if variant == Variant::Chordal {
        for a in 0..t {
            for b in a + 1..t {
                edges.push((map.c[a], map.c[b]));
            }
        }
    }
    let g = Graph::from_edges(6 * q + 5 * t, edges).expect("gadget edges are in range");
    (g, map)
}

fn check_map(inst: &X3CInstance, map: &GadgetMap) -> Result<()> {
    if map.q != inst.q() || map.t != inst.t() {
        return Err(Error::InvalidParameter(
            "gadget map does not belong to this instance".into(),
        ));
    }
    Ok(())
}

/// The labeling of weight `4t + 11q` encoding an exact cover: 4 on every
/// star centre, 3 on every `y`, 2 on `c_j` for chosen triples, 0 elsewhere.
pub fn cover_to_labeling(inst: &X3CInstance, cover: &[usize], map: &GadgetMap) -> Result<Labeling> {
    check_map(inst, map)?;
    inst.check_cover(cover)?;
    let mut values = vec![0u8; 6 * map.q + 5 * map.t];
    for &w in &map.w {
        values[w] = 4;
    }
    for &y in &map.y {
        values[y] = 3;
    }
    for &j in cover {
        values[map.c[j]] = 2;
    }
    Labeling::triple(values)
}

/// Reads an exact cover off any valid labeling of weight at most
/// `4t + 11q`: the triples whose `c_j` carries label 2 or more.
///
/// Every star costs at least 4 without `c_j`, and every pair `x_i y_i` at
/// least 3, with exactly 3 only when `x_i` sits next to some `c_j` labeled
/// 2 or more. With `B` the set of such `j`, the weight is at least
/// `4t + 9q + 2|B| + (uncovered elements)`, which under the threshold forces
/// `|B| = q` with nothing uncovered.
pub fn labeling_to_cover(inst: &X3CInstance, map: &GadgetMap, l: &Labeling) -> Result<Vec<usize>> {
    check_map(inst, map)?;
    let (g, _) = build_gadget(inst, map.variant);
    if l.len() != g.order() {
        return Err(Error::InvalidLabeling(format!(
            "labeling has {} entries, gadget has {} vertices",
            l.len(),
            g.order()
        )));
    }
    if !verify_3rdf(&g, l)?.is_valid() {
        return Err(Error::InvalidLabeling("not a triple Roman labeling of the gadget".into()));
    }
    if l.weight() > map.threshold {
        return Err(Error::OverThreshold {
            weight: l.weight(),
            threshold: map.threshold,
        });
    }
    let cover: Vec<usize> = (0..map.t).filter(|&j| l.get(map.c[j]) >= 2).collect();
    inst.check_cover(&cover)
        .map_err(|e| Error::Internal(format!("extraction failed below threshold: {e}")))?;
    Ok(cover)
}

/// An exact cover with the lexicographically smallest index sequence, or
/// `None`.
pub fn x3c_bruteforce(inst: &X3CInstance) -> Result<Option<Vec<usize>>> {
    if inst.t() > X3C_LIMIT {
        return Err(Error::SizeGuard {
            what: "x3c",
            limit: X3C_LIMIT,
            actual: inst.t(),
        });
    }
    let mut covered = vec![false; 3 * inst.q()];
    let mut chosen = Vec::new();
    Ok(cover_from(inst, &mut covered, &mut chosen).then(|| {
        chosen.sort_unstable();
        chosen
    }))
}

fn cover_from(inst: &X3CInstance, covered: &mut [bool], chosen: &mut Vec<usize>) -> bool {
    let Some(e) = covered.iter().position(|&c| !c) else {
        return true;
    };
    for (j, tr) in inst.triples().iter().enumerate() {
        if !tr.contains(&e) || tr.iter().any(|&x| covered[x]) {
            continue;
        }
        for &x in tr {
            covered[x] = true;
        }
        chosen.push(j);
        if cover_from(inst, covered, chosen) {
            return true;
        }
        chosen.pop();
        for &x in tr {
            covered[x] = false;
        }
    }
    false
}
