//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while constructing or transforming values.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A vertex/edge label violates the token rules.
    InvalidLabel { label: String, reason: &'static str },
    DuplicateVertex(String),
    DuplicateEdge(String),
    UnknownVertex(String),
    UnknownEdge(String),
    /// A vertex appears twice in the same edge, which would violate
    /// simplicity.
    DuplicateIncidence { vertex: String, edge: String },
    /// Internal consistency guard for index-based construction.
    VertexIndexOutOfRange { index: usize, len: usize },
    /// The vertex is not a member of the edge.
    NotIncident { vertex: String, edge: String },
    /// An adjacency sign was requested for a single vertex paired with
    /// itself.
    IdenticalVertices(String),
    /// The hypergraph has no vertices, so a maximum over vertices is
    /// undefined.
    EmptyVertexSet,
    /// A k-section was requested with k = 0.
    SectionSizeZero,
    /// Two edges share more than one vertex.
    NotLinear { edge_a: String, edge_b: String },
    /// An edge does not have exactly two members.
    NotTwoUniform { edge: String },
    LoopEdge { edge: String },
    DuplicateEdgePair { edge_a: String, edge_b: String },
    /// An enlargement target is below the current edge size.
    EnlargementTooSmall {
        edge: String,
        size: usize,
        target: usize,
    },
    /// A switching function is missing a domain element.
    SwitchDomainMissing { kind: &'static str, label: String },
    /// A switching function mentions an element the hypergraph does not
    /// have.
    SwitchDomainExtra { kind: &'static str, label: String },
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    /// Rows of unequal length were supplied to a matrix constructor.
    RaggedRows {
        row: usize,
        len: usize,
        expected: usize,
    },
    NotSquare { rows: usize, cols: usize },
    NotSymmetric { row: usize, col: usize },
    /// The Jacobi iteration did not reach the requested tolerance.
    NoConvergence { sweeps: usize, off_norm: f64 },
    UnknownLaw(String),
    /// A law was given the wrong kind of instance.
    LawInput { law: String, needs: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLabel { label, reason } => {
                write!(f, "invalid label '{label}': {reason}")
            }
            Error::DuplicateVertex(l) => write!(f, "duplicate vertex '{l}'"),
            Error::DuplicateEdge(l) => write!(f, "duplicate edge '{l}'"),
            Error::UnknownVertex(l) => write!(f, "unknown vertex '{l}'"),
            Error::UnknownEdge(l) => write!(f, "unknown edge '{l}'"),
            Error::DuplicateIncidence { vertex, edge } => {
                write!(f, "vertex '{vertex}' listed twice in edge '{edge}'")
            }
            Error::VertexIndexOutOfRange { index, len } => {
                write!(f, "vertex index {index} out of range for {len} vertices")
            }
            Error::NotIncident { vertex, edge } => {
                write!(f, "vertex '{vertex}' is not incident to edge '{edge}'")
            }
            Error::IdenticalVertices(l) => {
                write!(f, "adjacency requires two distinct vertices, got '{l}' twice")
            }
            Error::EmptyVertexSet => write!(f, "hypergraph has no vertices"),
            Error::SectionSizeZero => write!(f, "section size k must be at least 1"),
            Error::NotLinear { edge_a, edge_b } => {
                write!(f, "edges '{edge_a}' and '{edge_b}' share more than one vertex")
            }
            Error::NotTwoUniform { edge } => {
                write!(f, "edge '{edge}' does not have exactly two members")
            }
            Error::LoopEdge { edge } => write!(f, "edge '{edge}' is a loop"),
            Error::DuplicateEdgePair { edge_a, edge_b } => {
                write!(f, "edges '{edge_a}' and '{edge_b}' join the same vertex pair")
            }
            Error::EnlargementTooSmall { edge, size, target } => {
                write!(
                    f,
                    "enlargement target {target} for edge '{edge}' is below its size {size}"
                )
            }
            Error::SwitchDomainMissing { kind, label } => {
                write!(f, "switching function does not cover {kind} '{label}'")
            }
            Error::SwitchDomainExtra { kind, label } => {
                write!(f, "switching function mentions unknown {kind} '{label}'")
            }
            Error::DimensionMismatch { op, lhs, rhs } => {
                write!(
                    f,
                    "dimension mismatch in {op}: {}x{} vs {}x{}",
                    lhs.0, lhs.1, rhs.0, rhs.1
                )
            }
            Error::RaggedRows { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row},{col})")
            }
            Error::NoConvergence { sweeps, off_norm } => {
                write!(
                    f,
                    "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
                )
            }
            Error::UnknownLaw(id) => write!(f, "unknown law id '{id}'"),
            Error::LawInput { law, needs } => {
                write!(f, "law {law} needs {needs}")
            }
        }
    }
}

impl core::error::Error for Error {}
