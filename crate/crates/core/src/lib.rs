//! Tools for studying how succinctly first-order logic can express subgraph
//! containment: exact pebble-game solvers for the distinguishing depth and
//! width of two graphs, generators for the relevant graph families, pattern
//! statistics, a first-order evaluator, and a scenario harness.

pub mod bounds;
pub mod game;
pub mod graph;
pub mod harness;
pub mod logic;
pub mod pattern;

/// Exact scalar used for bound arithmetic.
pub type Rational = num_rational::Ratio<i64>;
