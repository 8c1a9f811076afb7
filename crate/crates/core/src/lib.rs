//! Triple Roman domination: verification, exact solvers, bounds with
//! certificates, closed forms for named families, and the exact 3-cover
//! gadget.
//!
//! A [k]-Roman dominating function labels every vertex with `0..=k+1` so
//! that each vertex `v` labeled below `k` has
//! `h(v) + Σ_{w ∈ N(v)} max(0, h(w) - 1) >= k`. The crate's focus is
//! `k = 3`.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod reduction;
pub mod rng;
pub mod tree_dp;

pub use error::{Error, Result};
pub use graph::Graph;
pub use labeling::{Labeling, Verdict};
