//! Oriented hypergraphs and their spectral invariants.
//!
//! An oriented hypergraph assigns a sign to every vertex-edge incidence.
//! Two vertices sharing an edge acquire an adjacency sign equal to the
//! negated product of their incidence signs, which makes adjacency and
//! Laplacian matrices well defined without any uniformity assumption on
//! edge sizes.
//!
//! This crate provides:
//!
//! - the value model: [`OrientedHypergraph`], [`constructions::SignedGraph`],
//!   [`designs::BlockDesign`];
//! - structure operators: incidence dual, k-sections, intersection (line)
//!   graph, edge enlargement, vertex/edge switching;
//! - exact integer matrices (incidence, adjacency, degree, Laplacian) and a
//!   self-contained Jacobi eigensolver for their real spectra;
//! - machine checks ([`laws`]) for the matrix identities and eigenvalue
//!   bounds relating a hypergraph to its dual, sections, intersection graph,
//!   switchings, and block designs.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads. The crate is
//! `no_std`-compatible (`alloc` required): disable the default `std` feature
//! and enable `libm` to build without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod constructions;
pub mod designs;
pub mod error;
pub mod hypergraph;
pub mod laws;
pub mod matrix;
pub mod spectrum;
pub mod switching;

pub use error::Error;
pub use hypergraph::{
    Adjacency, EdgeId, HypergraphBuilder, Incidence, OrientedHypergraph, Sign, VertexId,
};
pub use matrix::IntMatrix;
pub use spectrum::Spectrum;
