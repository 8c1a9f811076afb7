//! Closed-form upper and lower bounds on the triple Roman number, with
//! certificate labelings wherever the bound comes from a construction.
//!
//! Rational-valued bounds keep their exact value as a reduced fraction;
//! the integer `value` is the floor for upper bounds and the ceiling for
//! lower bounds, which is what an integer optimum can be compared against.

use num_rational::Ratio;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{domination_number, double_roman_number, CLASSICAL_LIMIT};
use crate::graph::Graph;
use crate::labeling::{verify_3rdf, Labeling};
use crate::rng::{seeded_stream, DEFAULT_SEED};

/// Trials used by [`randomized_3rdf`] when the caller does not choose.
pub const DEFAULT_TRIALS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub applicable: bool,
    pub reason: String,
    /// Integer form of the bound; `None` when not applicable.
    pub value: Option<u32>,
    /// Exact value for bounds that are not integers in general.
    pub rational: Option<Ratio<i64>>,
    pub certificate: Option<Labeling>,
    /// Whether `value` equals the exact optimum, once that is known.
    pub tight: Option<bool>,
}

impl BoundEntry {
    fn inapplicable(name: &str, kind: BoundKind, reason: impl Into<String>) -> Self {
        BoundEntry {
            name: name.to_string(),
            kind,
            applicable: false,
            reason: reason.into(),
            value: None,
            rational: None,
            certificate: None,
            tight: None,
        }
    }

    fn integer(name: &str, kind: BoundKind, value: u32, reason: impl Into<String>) -> Self {
        BoundEntry {
            name: name.to_string(),
            kind,
            applicable: true,
            reason: reason.into(),
            value: Some(value),
            rational: None,
            certificate: None,
            tight: None,
        }
    }

    fn rational(name: &str, kind: BoundKind, r: Ratio<i64>, reason: impl Into<String>) -> Self {
        let value = match kind {
            BoundKind::Upper => r.floor().to_integer(),
            BoundKind::Lower => r.ceil().to_integer(),
        };
        BoundEntry {
            rational: Some(r),
            ..BoundEntry::integer(name, kind, value.max(0) as u32, reason)
        }
    }

    fn with_certificate(mut self, cert: Labeling) -> Self {
        self.certificate = Some(cert);
        self
    }

    /// Does an optimum of `weight` respect this entry?
    pub fn admits(&self, weight: u32) -> bool {
        match (self.applicable, self.rational, self.value) {
            (false, _, _) => true,
            (true, Some(r), _) => {
                let w = Ratio::from_integer(i64::from(weight));
                match self.kind {
                    BoundKind::Upper => w <= r,
                    BoundKind::Lower => w >= r,
                }
            }
            (true, None, Some(v)) => match self.kind {
                BoundKind::Upper => weight <= v,
                BoundKind::Lower => weight >= v,
            },
            (true, None, None) => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    pub best_upper: Option<u32>,
    pub best_lower: Option<u32>,
    pub exact: Option<u32>,
}

impl BoundReport {
    pub fn new(entries: Vec<BoundEntry>) -> Self {
        let best = |kind: BoundKind| {
            entries
                .iter()
                .filter(move |e| e.applicable && e.kind == kind)
                .filter_map(|e| e.value)
        };
        BoundReport {
            best_upper: best(BoundKind::Upper).min(),
            best_lower: best(BoundKind::Lower).max(),
            entries,
            exact: None,
        }
    }

    /// Records the exact optimum and marks which entries meet it.
    pub fn with_exact(mut self, exact: u32) -> Self {
        for e in &mut self.entries {
            e.tight = e.value.map(|v| v == exact);
        }
        self.exact = Some(exact);
        self
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundOptions {
    pub seed: u64,
    pub trials: usize,
    /// Exact domination number, when the caller already has it.
    pub gamma: Option<u32>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            gamma: None,
        }
    }
}

struct Shape {
    p: usize,
    min_deg: usize,
    max_deg: usize,
    connected: bool,
    girth: Option<usize>,
}

impl Shape {
    fn of(g: &Graph) -> Self {
        Shape {
            p: g.order(),
            min_deg: g.min_degree(),
            max_deg: g.max_degree(),
            connected: g.is_connected(),
            girth: g.girth(),
        }
    }
}

fn max_degree_vertex(g: &Graph) -> usize {
    (0..g.order())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0)
}

/// `center` and its neighbors get `center_label` and 0, everything else
/// `rest_label`.
fn hub_labeling(g: &Graph, center: usize, center_label: u8, rest_label: u8) -> Labeling {
    let mut values = vec![rest_label; g.order()];
    values[center] = center_label;
    for &w in g.neighbors(center) {
        values[w] = 0;
    }
    Labeling::triple(values).expect("labels are within 0..=4")
}

/// Every vertex labeled 2; valid when no component is a single vertex.
pub fn ub_trivial(g: &Graph) -> BoundEntry {
    const NAME: &str = "trivial_2p";
    if g.min_degree() == 0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "has an isolated vertex");
    }
    let cert = Labeling::uniform(3, g.order(), 2).unwrap();
    BoundEntry::integer(NAME, BoundKind::Upper, 2 * g.order() as u32, "all vertices labeled 2")
        .with_certificate(cert)
}

/// `3p - 3Δ + 1`: a maximum-degree vertex gets 4, its neighbors 0, the rest
/// 3. On a disconnected graph the construction is applied per component
/// and the values summed.
pub fn ub_max_degree(g: &Graph) -> BoundEntry {
    const NAME: &str = "max_degree";
    let comps = g.components();
    let mut values = vec![3u8; g.order()];
    let mut total = 0u32;
    for comp in &comps {
        let sub = g.induced(comp).unwrap();
        let center = max_degree_vertex(&sub);
        let local = hub_labeling(&sub, center, 4, 3);
        for (i, &v) in comp.iter().enumerate() {
            values[v] = local.get(i);
        }
        total += (3 * sub.order() + 1 - 3 * sub.max_degree()) as u32;
    }
    let reason = if comps.len() == 1 {
        "3p - 3Δ + 1".to_string()
    } else {
        format!("extension: summed over {} components", comps.len())
    };
    BoundEntry::integer(NAME, BoundKind::Upper, total, reason)
        .with_certificate(Labeling::triple(values).unwrap())
}

/// `3p - 3Δ` for girth at least 4, `Δ <= p - 2` and `δ >= 2`.
pub fn ub_max_degree_girth4(g: &Graph) -> BoundEntry {
    const NAME: &str = "max_degree_girth4";
    let s = Shape::of(g);
    if !s.connected {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "disconnected");
    }
    if s.girth.is_some_and(|x| x < 4) {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "girth below 4");
    }
    if s.min_deg < 2 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "minimum degree below 2");
    }
    if s.max_deg + 2 > s.p {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "maximum degree above p - 2");
    }
    let cert = hub_labeling(g, max_degree_vertex(g), 3, 3);
    BoundEntry::integer(NAME, BoundKind::Upper, (3 * s.p - 3 * s.max_deg) as u32, "3p - 3Δ")
        .with_certificate(cert)
}

/// `2p - 2Δ + 1` for `δ >= 2` and girth at least 5.
pub fn ub_girth5(g: &Graph) -> BoundEntry {
    const NAME: &str = "girth5";
    let s = Shape::of(g);
    if !s.connected {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "disconnected");
    }
    if s.min_deg < 2 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "minimum degree below 2");
    }
    if s.girth.is_some_and(|x| x < 5) {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "girth below 5");
    }
    let cert = hub_labeling(g, max_degree_vertex(g), 3, 2);
    BoundEntry::integer(NAME, BoundKind::Upper, (2 * s.p + 1 - 2 * s.max_deg) as u32, "2p - 2Δ + 1")
        .with_certificate(cert)
}

/// `2p - 2r² + 3r - 2` for connected r-regular graphs of girth at least 7.
/// Certificate: BFS levels from vertex 0, with 3 on the first level, 0 on
/// the root and the second level, 2 beyond.
pub fn ub_regular_girth7(g: &Graph) -> BoundEntry {
    const NAME: &str = "regular_girth7";
    let s = Shape::of(g);
    if !s.connected {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "disconnected");
    }
    if s.min_deg != s.max_deg || s.min_deg == 0 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "not regular");
    }
    if s.girth.is_none_or(|x| x < 7) {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "girth below 7");
    }
    let r = s.min_deg as i64;
    let values: Vec<u8> = g
        .distances_from(0)
        .into_iter()
        .map(|d| match d.expect("connected") {
            0 | 2 => 0,
            1 => 3,
            _ => 2,
        })
        .collect();
    let value = 2 * s.p as i64 - 2 * r * r + 3 * r - 2;
    BoundEntry::integer(NAME, BoundKind::Upper, value as u32, "2p - 2r² + 3r - 2")
        .with_certificate(Labeling::triple(values).unwrap())
}

/// Sampling probability of the random construction, if it lies in (0, 1).
fn sampling_probability(min_deg: usize) -> Option<f64> {
    let d1 = (min_deg + 1) as f64;
    let log = (3.0 * d1 / 4.0).ln();
    (log > 0.0 && log < d1).then(|| log / d1)
}

/// `floor(4p/(δ+1) * (ln(3(δ+1)/4) + 1))`, certified by the best of the
/// random constructions when one happens to reach it.
pub fn ub_probabilistic(g: &Graph, seed: u64, trials: usize) -> BoundEntry {
    const NAME: &str = "probabilistic";
    let delta = g.min_degree();
    if sampling_probability(delta).is_none() {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "minimum degree 0");
    }
    let d1 = (delta + 1) as f64;
    let bound = 4.0 * g.order() as f64 / d1 * ((3.0 * d1 / 4.0).ln() + 1.0);
    let value = bound.floor() as u32;
    let entry = BoundEntry::integer(NAME, BoundKind::Upper, value, "4p/(δ+1)·(ln(3(δ+1)/4) + 1)");
    match randomized_3rdf(g, seed, trials) {
        Ok(cert) if cert.weight() <= value => entry.with_certificate(cert),
        _ => entry,
    }
}

/// Best of `trials` random labelings: each vertex joins `A` with the
/// bound's sampling probability, `A` gets 4, its neighbors 0, everything
/// else 3. Every sample is valid. Trial `i` draws from stream `i` under
/// `seed`, and ties go to the lowest trial.
pub fn randomized_3rdf(g: &Graph, seed: u64, trials: usize) -> Result<Labeling> {
    let prob = sampling_probability(g.min_degree()).ok_or_else(|| {
        Error::InvalidParameter("random construction needs minimum degree at least 1".into())
    })?;
    if trials == 0 {
        return Err(Error::InvalidParameter("at least one trial is required".into()));
    }
    let best = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = seeded_stream(seed, t as u64);
            let in_a: Vec<bool> = (0..g.order()).map(|_| rng.random::<f64>() < prob).collect();
            let values: Vec<u8> = (0..g.order())
                .map(|v| {
                    if in_a[v] {
                        4
                    } else if g.neighbors(v).iter().any(|&w| in_a[w]) {
                        0
                    } else {
                        3
                    }
                })
                .collect();
            let l = Labeling::triple(values).unwrap();
            (l.weight(), t, l)
        })
        .min_by_key(|(w, t, _)| (*w, *t))
        .expect("trials > 0");
    Ok(best.2)
}

/// `7p/4` for trees with at least 3 vertices.
pub fn ub_tree(g: &Graph) -> BoundEntry {
    const NAME: &str = "tree_7p_over_4";
    if !g.is_tree() {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "not a tree");
    }
    if g.order() < 3 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "fewer than 3 vertices");
    }
    BoundEntry::rational(NAME, BoundKind::Upper, Ratio::new(7 * g.order() as i64, 4), "7p/4")
}

/// `3p - 5·diam/3 + 7/3` for connected graphs.
pub fn ub_diameter(g: &Graph) -> BoundEntry {
    const NAME: &str = "diameter";
    if g.order() < 2 {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "fewer than 2 vertices");
    }
    match g.diameter() {
        None => BoundEntry::inapplicable(NAME, BoundKind::Upper, "disconnected"),
        Some(d) => {
            let r = Ratio::new(9 * g.order() as i64 - 5 * d as i64 + 7, 3);
            BoundEntry::rational(NAME, BoundKind::Upper, r, "3p - 5·diam/3 + 7/3")
        }
    }
}

/// `3p + 2 - 5g/3` for connected graphs containing a cycle.
pub fn ub_girth_bound(g: &Graph) -> BoundEntry {
    const NAME: &str = "girth";
    if !g.is_connected() {
        return BoundEntry::inapplicable(NAME, BoundKind::Upper, "disconnected");
    }
    match g.girth() {
        None => BoundEntry::inapplicable(NAME, BoundKind::Upper, "acyclic"),
        Some(girth) => {
            let r = Ratio::new(9 * g.order() as i64 + 6 - 5 * girth as i64, 3);
            BoundEntry::rational(NAME, BoundKind::Upper, r, "3p + 2 - 5g/3")
        }
    }
}

/// `ceil((2p + (Δ-1)γ)/Δ)` together with whether γ had to be replaced by
/// the weaker `ceil(p/(Δ+1))`. Expects a connected graph with p >= 2.
pub fn degree_domination_value(g: &Graph, gamma: Option<u32>) -> (u32, bool) {
    let p = g.order() as u64;
    let max_deg = g.max_degree() as u64;
    if max_deg == 0 {
        return (0, true);
    }
    let (gamma, weakened) = match gamma {
        Some(x) => (u64::from(x), false),
        None if g.order() <= CLASSICAL_LIMIT => {
            (u64::from(domination_number(g).expect("within limit")), false)
        }
        None => (p.div_ceil(max_deg + 1), true),
    };
    let value = (2 * p + (max_deg - 1) * gamma).div_ceil(max_deg);
    (value as u32, weakened)
}

/// Lower bound from order, maximum degree and domination number.
pub fn lb_degree_domination(g: &Graph, gamma: Option<u32>) -> BoundEntry {
    const NAME: &str = "degree_domination";
    if g.order() < 2 {
        return BoundEntry::inapplicable(NAME, BoundKind::Lower, "fewer than 2 vertices");
    }
    if !g.is_connected() {
        return BoundEntry::inapplicable(NAME, BoundKind::Lower, "disconnected");
    }
    let (value, weakened) = degree_domination_value(g, gamma);
    let reason = if weakened {
        "weakened: γ replaced by ceil(p/(Δ+1))"
    } else {
        "ceil((2p + (Δ-1)γ)/Δ)"
    };
    BoundEntry::integer(NAME, BoundKind::Lower, value, reason)
}

/// One more than the double Roman number, per component.
pub fn lb_chain(g: &Graph) -> BoundEntry {
    const NAME: &str = "chain";
    let comps = g.components();
    if comps.iter().any(|c| c.len() > CLASSICAL_LIMIT) {
        return BoundEntry::inapplicable(
            NAME,
            BoundKind::Lower,
            format!("double Roman oracle limited to {CLASSICAL_LIMIT} vertices per component"),
        );
    }
    let mut total = 0;
    for comp in &comps {
        let sub = g.induced(comp).unwrap();
        total += double_roman_number(&sub).expect("within limit") + 1;
    }
    BoundEntry::integer(NAME, BoundKind::Lower, total, "double Roman number + 1")
}

/// Every bound above, evaluated on `g`.
pub fn best_bounds(g: &Graph) -> BoundReport {
    best_bounds_with(g, &BoundOptions::default())
}

pub fn best_bounds_with(g: &Graph, opts: &BoundOptions) -> BoundReport {
    BoundReport::new(vec![
        ub_trivial(g),
        ub_max_degree(g),
        ub_max_degree_girth4(g),
        ub_girth5(g),
        ub_regular_girth7(g),
        ub_probabilistic(g, opts.seed, opts.trials),
        ub_tree(g),
        ub_diameter(g),
        ub_girth_bound(g),
        lb_degree_domination(g, opts.gamma),
        lb_chain(g),
    ])
}

/// A valid labeling of `g` to seed exact search: the lightest of the
/// constructive certificates and a greedy dominating set labeled 4.
pub(crate) fn incumbent_labeling(g: &Graph) -> Labeling {
    let mut candidates: Vec<Labeling> = [
        ub_trivial(g),
        ub_max_degree(g),
        ub_max_degree_girth4(g),
        ub_girth5(g),
        ub_regular_girth7(g),
    ]
    .into_iter()
    .filter_map(|e| e.certificate)
    .collect();
    candidates.push(greedy_domination_labeling(g));
    if let Ok(l) = randomized_3rdf(g, DEFAULT_SEED, 16) {
        candidates.push(l);
    }
    let best = candidates
        .into_iter()
        .min_by_key(Labeling::weight)
        .expect("greedy construction always exists");
    debug_assert!(verify_3rdf(g, &best).unwrap().is_valid());
    best
}

fn greedy_domination_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut dominated = vec![false; n];
    let mut values = vec![0u8; n];
    while let Some(v) = (0..n)
        .filter(|&v| values[v] == 0)
        .map(|v| {
            let gain = std::iter::once(v)
                .chain(g.neighbors(v).iter().copied())
                .filter(|&w| !dominated[w])
                .count();
            (gain, std::cmp::Reverse(v))
        })
        .filter(|&(gain, _)| gain > 0)
        .max()
        .map(|(_, std::cmp::Reverse(v))| v)
    {
        values[v] = 4;
        dominated[v] = true;
        for &w in g.neighbors(v) {
            dominated[w] = true;
        }
    }
    Labeling::triple(values).unwrap()
}
