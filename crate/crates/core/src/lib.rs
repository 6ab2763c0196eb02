//! Exact coloring, color-class contraction, and planarity tooling for
//! small graphs.
//!
//! A minimum proper coloring splits a graph into independent color classes;
//! contracting each class to a single vertex (keeping one edge between
//! adjacent classes) always yields a complete graph. This crate provides
//! the pieces needed to build and check that construction and to test it
//! against planarity: an exact DSATUR solver, quotient construction,
//! witness-carrying planarity verdicts, an exhaustive K5/K3,3 minor search,
//! and an experiment harness with a CLI (`ect-lab`).

// Pairwise class loops (`for j in i + 1..k`) index several arrays at once.
#![allow(clippy::needless_range_loop)]

pub mod bitset;
pub mod coloring;
pub mod ect;
pub mod error;
pub mod graph;
pub mod harness;
pub mod planarity;

pub use bitset::VertexSet;
pub use coloring::{
    chromatic_number_exact, enumerate_minimal_colorings, greedy_color, is_proper, Coloring,
};
pub use ect::{
    apply_ect, build_ecg, color_classes, is_quotient_complete, reduce_coloring, Ecg, Partition,
    QuotientGraph,
};
pub use error::{Error, Result};
pub use graph::{
    generate_random_planar, named_graph, parse_dimacs, parse_graph, write_dimacs, Graph,
};
pub use planarity::{
    euler_bound_check, has_k5_or_k33_minor, is_planar, planarity_oracle_small, MinorSearch,
    MinorTarget, MinorWitness, PlanarityVerdict,
};
