//! Geodesic convexity toolkit: hulls, halfspaces, metric graph classes,
//! matroid basis graphs, and halfspace separation via 2-SAT.

pub mod classes;
pub mod cli;
pub mod convexity;
pub mod enumeration;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod matroid;
pub mod separation;
pub mod twosat;
pub mod vertex_set;
