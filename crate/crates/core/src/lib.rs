//! Order-derived graphs of finite groups and divisor-graph recognition.
//!
//! A finite simple graph is a *divisor graph* when its vertices can be
//! injectively labeled with positive integers so that two vertices are
//! adjacent exactly when one label divides the other; equivalently, when the
//! graph admits a transitive orientation. This crate builds the graphs a
//! finite group induces through its element orders (coprime, power, reduced
//! power, order graphs), reduces the coprime graph to the radical graph on
//! squarefree order radicals, and decides the divisor-graph property with a
//! certifying recognizer: positive answers come with a validated transitive
//! orientation and divisor labeling, negative answers with a forcing
//! contradiction, a failing transitivity triple, or a forbidden spectrum
//! pattern.
//!
//! The `classify` module carries the closed-form verdicts for dihedral,
//! dicyclic, symmetric, alternating, nilpotent, direct-product, and sporadic
//! simple groups, each cross-checkable against the recognizer through
//! [`classify::verify_families`].

#![forbid(unsafe_code)]

pub mod analysis;
pub mod arith;
pub mod classify;
pub mod graph;
pub mod group;
pub mod group_graphs;
mod parallel;
pub mod recognize;

pub use graph::Graph;
pub use group::{GroupSpec, OrderSpectrum};
pub use group_graphs::RadicalGraph;
pub use recognize::{DivisorLabeling, Obstruction, Orientation, Verdict};
