//! Incidence, adjacency, degree, and Laplacian matrices of an oriented
//! hypergraph.
//!
//! Row and column indexing follows the stored vertex and edge order of the
//! hypergraph. All four matrices are exact integer values; `L = D - A`,
//! and `L` also equals `H * H^T` (checked as a law, not assumed).

use crate::hypergraph::OrientedHypergraph;
use crate::laws::{self, LawId, LawReport};
use crate::matrix::IntMatrix;

/// The n x m matrix with entry `sign(v_i, e_j)` for incident pairs and 0
/// otherwise.
pub fn incidence_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let mut h = IntMatrix::zeros(g.vertex_count(), g.edge_count());
    for j in 0..g.edge_count() {
        for &(i, sign) in g.edge_members_at(j) {
            h.set(i, j, sign.value());
        }
    }
    h
}

/// The symmetric n x n matrix whose `(i,j)` entry sums the adjacency signs
/// of `v_i` and `v_j` over all shared edges. Simple hypergraphs have a zero
/// diagonal.
pub fn adjacency_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let n = g.vertex_count();
    let mut a = IntMatrix::zeros(n, n);
    for j in 0..g.edge_count() {
        let members = g.edge_members_at(j);
        for x in 0..members.len() {
            for y in (x + 1)..members.len() {
                let (i, si) = members[x];
                let (k, sk) = members[y];
                let sign = -(si * sk).value();
                a.add_to(i, k, sign);
                a.add_to(k, i, sign);
            }
        }
    }
    a
}

pub fn degree_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let degrees: alloc::vec::Vec<i64> = (0..g.vertex_count())
        .map(|i| g.degree_at(i) as i64)
        .collect();
    IntMatrix::diagonal(&degrees)
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &OrientedHypergraph) -> IntMatrix {
    degree_matrix(g)
        .sub(&adjacency_matrix(g))
        .expect("degree and adjacency matrices are both n x n")
}

/// Checks one of the laws that need only a hypergraph instance. Switching
/// laws and design laws take extra inputs; see [`crate::laws::check`].
pub fn check_law(law: LawId, g: &OrientedHypergraph) -> Result<LawReport, crate::Error> {
    laws::check(law, laws::LawInput::Hypergraph(g))
}
