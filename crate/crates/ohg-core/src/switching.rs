//! Vertex and edge switching.
//!
//! A vertex-switching function multiplies every incidence sign of a vertex
//! by `±1`; an edge-switching function does the same per edge. Switching by
//! `(zeta, xi)` sends `sign(v, e)` to `zeta(v) * sign(v, e) * xi(e)`, which
//! conjugates the adjacency and Laplacian matrices by the `±1` diagonal
//! matrix of `zeta` and therefore preserves their spectra.
//!
//! Switching functions must cover their hypergraph exactly; there is no
//! default value, so a missing or extraneous element is an error rather
//! than a silently assumed `+1`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::constructions::{intersection_graph_with_shared, strict_k_section_with_sources};
use crate::error::Error;
use crate::hypergraph::{EdgeId, OrientedHypergraph, Sign, VertexId};
use crate::laws::{self, LawReport};
use crate::matrix::IntMatrix;

/// A vertex-switching function paired with an edge-switching function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingPair {
    vertex: BTreeMap<VertexId, Sign>,
    edge: BTreeMap<EdgeId, Sign>,
}

impl SwitchingPair {
    pub fn new(vertex: BTreeMap<VertexId, Sign>, edge: BTreeMap<EdgeId, Sign>) -> Self {
        SwitchingPair { vertex, edge }
    }

    /// The all-`+1` switching of `g`.
    pub fn identity(g: &OrientedHypergraph) -> Self {
        SwitchingPair {
            vertex: g
                .vertices()
                .iter()
                .map(|v| (v.clone(), Sign::Plus))
                .collect(),
            edge: g.edge_ids().map(|e| (e.clone(), Sign::Plus)).collect(),
        }
    }

    pub fn vertex_map(&self) -> &BTreeMap<VertexId, Sign> {
        &self.vertex
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, Sign> {
        &self.edge
    }

    pub fn vertex_sign(&self, v: &VertexId) -> Option<Sign> {
        self.vertex.get(v).copied()
    }

    pub fn edge_sign(&self, e: &EdgeId) -> Option<Sign> {
        self.edge.get(e).copied()
    }

    /// The same pair read against the incidence dual: the edge function
    /// becomes the vertex function of `g*` and vice versa (labels carry
    /// across the duality unchanged).
    pub fn for_dual(&self) -> SwitchingPair {
        SwitchingPair {
            vertex: self
                .edge
                .iter()
                .map(|(e, s)| (e.clone().into_vertex_id(), *s))
                .collect(),
            edge: self
                .vertex
                .iter()
                .map(|(v, s)| (v.clone().into_edge_id(), *s))
                .collect(),
        }
    }

    /// Checks that both functions cover `g` exactly: every vertex and edge
    /// of `g` is in the domain, and the domain has nothing else.
    pub fn ensure_covers(&self, g: &OrientedHypergraph) -> Result<(), Error> {
        for v in g.vertices() {
            if !self.vertex.contains_key(v) {
                return Err(Error::SwitchDomainMissing {
                    kind: "vertex",
                    label: v.as_str().to_string(),
                });
            }
        }
        if self.vertex.len() != g.vertex_count() {
            let extra = self
                .vertex
                .keys()
                .find(|v| g.vertex_index(v).is_none())
                .expect("length mismatch implies an extra key");
            return Err(Error::SwitchDomainExtra {
                kind: "vertex",
                label: extra.as_str().to_string(),
            });
        }
        for e in g.edge_ids() {
            if !self.edge.contains_key(e) {
                return Err(Error::SwitchDomainMissing {
                    kind: "edge",
                    label: e.as_str().to_string(),
                });
            }
        }
        if self.edge.len() != g.edge_count() {
            let extra = self
                .edge
                .keys()
                .find(|e| g.edge_index(e).is_none())
                .expect("length mismatch implies an extra key");
            return Err(Error::SwitchDomainExtra {
                kind: "edge",
                label: extra.as_str().to_string(),
            });
        }
        Ok(())
    }
}

/// Resigns every incidence: `sign(v, e)` becomes
/// `zeta(v) * sign(v, e) * xi(e)`. The underlying hypergraph is unchanged.
pub fn apply_switch(
    g: &OrientedHypergraph,
    s: &SwitchingPair,
) -> Result<OrientedHypergraph, Error> {
    s.ensure_covers(g)?;
    let edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = (0..g.edge_count())
        .map(|ei| {
            let id = g.edge_id_at(ei).clone();
            let xi = s.edge_sign(&id).expect("coverage checked");
            let members = g
                .edge_members_at(ei)
                .iter()
                .map(|&(vi, sign)| {
                    let zeta = s
                        .vertex_sign(g.vertex_at(vi))
                        .expect("coverage checked");
                    (vi, zeta * sign * xi)
                })
                .collect();
            (id, members)
        })
        .collect();
    OrientedHypergraph::from_parts(g.vertices().to_vec(), edges)
}

/// The n x n diagonal matrix of the vertex-switching function, in vertex
/// order.
pub fn switch_diag_vertex(g: &OrientedHypergraph, s: &SwitchingPair) -> Result<IntMatrix, Error> {
    s.ensure_covers(g)?;
    let values: Vec<i64> = g
        .vertices()
        .iter()
        .map(|v| s.vertex_sign(v).expect("coverage checked").value())
        .collect();
    Ok(IntMatrix::diagonal(&values))
}

/// The m x m diagonal matrix of the edge-switching function, in edge order.
pub fn switch_diag_edge(g: &OrientedHypergraph, s: &SwitchingPair) -> Result<IntMatrix, Error> {
    s.ensure_covers(g)?;
    let values: Vec<i64> = g
        .edge_ids()
        .map(|e| s.edge_sign(e).expect("coverage checked").value())
        .collect();
    Ok(IntMatrix::diagonal(&values))
}

fn ensure_edge_cover(
    g: &OrientedHypergraph,
    xi: &BTreeMap<EdgeId, Sign>,
) -> Result<(), Error> {
    for e in g.edge_ids() {
        if !xi.contains_key(e) {
            return Err(Error::SwitchDomainMissing {
                kind: "edge",
                label: e.as_str().to_string(),
            });
        }
    }
    if xi.len() != g.edge_count() {
        let extra = xi
            .keys()
            .find(|e| g.edge_index(e).is_none())
            .expect("length mismatch implies an extra key");
        return Err(Error::SwitchDomainExtra {
            kind: "edge",
            label: extra.as_str().to_string(),
        });
    }
    Ok(())
}

fn ensure_vertex_cover(
    g: &OrientedHypergraph,
    zeta: &BTreeMap<VertexId, Sign>,
) -> Result<(), Error> {
    for v in g.vertices() {
        if !zeta.contains_key(v) {
            return Err(Error::SwitchDomainMissing {
                kind: "vertex",
                label: v.as_str().to_string(),
            });
        }
    }
    if zeta.len() != g.vertex_count() {
        let extra = zeta
            .keys()
            .find(|v| g.vertex_index(v).is_none())
            .expect("length mismatch implies an extra key");
        return Err(Error::SwitchDomainExtra {
            kind: "vertex",
            label: extra.as_str().to_string(),
        });
    }
    Ok(())
}

/// Pushes an edge-switching function of `g` to the strict k-section: each
/// section edge inherits the switch value of the source edge it was derived
/// from.
pub fn induced_section_switch(
    g: &OrientedHypergraph,
    xi: &BTreeMap<EdgeId, Sign>,
    k: usize,
) -> Result<BTreeMap<EdgeId, Sign>, Error> {
    ensure_edge_cover(g, xi)?;
    let (section, sources) = strict_k_section_with_sources(g, k)?;
    Ok((0..section.edge_count())
        .map(|i| {
            let source = g.edge_id_at(sources[i]);
            (
                section.edge_id_at(i).clone(),
                *xi.get(source).expect("coverage checked"),
            )
        })
        .collect())
}

/// Pushes a vertex-switching function of a linear `g` to its intersection
/// graph: the pair edge of `ei` and `ej` inherits the switch value of their
/// shared vertex.
pub fn induced_linegraph_switch(
    g: &OrientedHypergraph,
    zeta: &BTreeMap<VertexId, Sign>,
) -> Result<BTreeMap<EdgeId, Sign>, Error> {
    ensure_vertex_cover(g, zeta)?;
    let (lg, shared) = intersection_graph_with_shared(g)?;
    Ok((0..lg.edge_count())
        .map(|i| {
            let v = g.vertex_at(shared[i].2);
            (
                lg.edge_id_at(i).clone(),
                *zeta.get(v).expect("coverage checked"),
            )
        })
        .collect())
}

/// Runs the full switching law battery for `(g, s)`: the six diagonal
/// conjugation identities, the four spectral invariances, and the
/// nonzero-spectrum match between the switched hypergraph and the
/// independently switched dual.
pub fn check_switch_identities(
    g: &OrientedHypergraph,
    s: &SwitchingPair,
    s_independent: &SwitchingPair,
) -> Result<Vec<LawReport>, Error> {
    Ok(alloc::vec![
        laws::check(laws::LawId::Lemma5_1, laws::LawInput::Switched(g, s))?,
        laws::check(laws::LawId::Theorem5_2, laws::LawInput::Switched(g, s))?,
        laws::check(
            laws::LawId::Corollary5_3,
            laws::LawInput::DoublySwitched(g, s, s_independent),
        )?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::adjacency_matrix;
    use alloc::vec;

    fn p3() -> OrientedHypergraph {
        let mut b = OrientedHypergraph::builder();
        b.vertex("v1").unwrap();
        b.vertex("v2").unwrap();
        b.vertex("v3").unwrap();
        b.edge("e1", &[("v1", Sign::Plus), ("v2", Sign::Plus)]).unwrap();
        b.edge("e2", &[("v2", Sign::Plus), ("v3", Sign::Minus)]).unwrap();
        b.build()
    }

    fn v(label: &str) -> VertexId {
        VertexId::new(label).unwrap()
    }

    fn e(label: &str) -> EdgeId {
        EdgeId::new(label).unwrap()
    }

    /// Identity everywhere except the given vertex labels flipped to -1.
    fn flip_vertices(g: &OrientedHypergraph, labels: &[&str]) -> SwitchingPair {
        let mut s = SwitchingPair::identity(g);
        for l in labels {
            s.vertex.insert(v(l), Sign::Minus);
        }
        s
    }

    #[test]
    fn identity_switch_is_a_no_op() {
        let g = p3();
        assert_eq!(apply_switch(&g, &SwitchingPair::identity(&g)).unwrap(), g);
    }

    #[test]
    fn flipping_one_vertex_resigns_its_incidences() {
        let g = p3();
        let s = flip_vertices(&g, &["v2"]);
        let gs = apply_switch(&g, &s).unwrap();
        assert_eq!(gs.incidence_sign(&v("v2"), &e("e1")).unwrap(), Sign::Minus);
        assert_eq!(gs.incidence_sign(&v("v2"), &e("e2")).unwrap(), Sign::Minus);
        assert_eq!(gs.incidence_sign(&v("v1"), &e("e1")).unwrap(), Sign::Plus);
        assert_eq!(gs.incidence_sign(&v("v3"), &e("e2")).unwrap(), Sign::Minus);
    }

    #[test]
    fn adjacency_signs_are_conjugated_by_the_vertex_switch() {
        let g = p3();
        let s = flip_vertices(&g, &["v2"]);
        let gs = apply_switch(&g, &s).unwrap();
        let a = adjacency_matrix(&gs);
        let expected = IntMatrix::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, -1],
            vec![0, -1, 0],
        ])
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn diagonal_matrices() {
        let g = p3();
        let id = SwitchingPair::identity(&g);
        assert_eq!(switch_diag_vertex(&g, &id).unwrap(), IntMatrix::identity(3));
        assert_eq!(switch_diag_edge(&g, &id).unwrap(), IntMatrix::identity(2));

        let s = flip_vertices(&g, &["v2"]);
        let dn = switch_diag_vertex(&g, &s).unwrap();
        assert_eq!(dn, IntMatrix::diagonal(&[1, -1, 1]));
        // A ±1 diagonal is an involution.
        assert_eq!(dn.mul(&dn).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn switching_twice_restores_the_original() {
        let g = p3();
        let mut s = flip_vertices(&g, &["v1", "v3"]);
        s.edge.insert(e("e2"), Sign::Minus);
        let once = apply_switch(&g, &s).unwrap();
        assert_ne!(once, g);
        assert_eq!(apply_switch(&once, &s).unwrap(), g);
    }

    #[test]
    fn coverage_is_mandatory() {
        let g = p3();
        let mut s = SwitchingPair::identity(&g);
        s.vertex.remove(&v("v2"));
        match apply_switch(&g, &s) {
            Err(Error::SwitchDomainMissing { kind, label }) => {
                assert_eq!((kind, label.as_str()), ("vertex", "v2"));
            }
            other => panic!("expected coverage error, got {other:?}"),
        }

        let mut s = SwitchingPair::identity(&g);
        s.edge.insert(e("ghost"), Sign::Minus);
        assert!(matches!(
            apply_switch(&g, &s),
            Err(Error::SwitchDomainExtra { kind: "edge", .. })
        ));
    }

    #[test]
    fn induced_switches_inherit_from_sources() {
        let g = p3();
        let id = SwitchingPair::identity(&g);
        let xi_hat = induced_section_switch(&g, id.edge_map(), 2).unwrap();
        assert!(xi_hat.values().all(|s| *s == Sign::Plus));

        let mut xi = id.edge_map().clone();
        xi.insert(e("e1"), Sign::Minus);
        let xi_hat = induced_section_switch(&g, &xi, 2).unwrap();
        assert_eq!(xi_hat.get(&e("e1|v1,v2")), Some(&Sign::Minus));
        assert_eq!(xi_hat.get(&e("e2|v2,v3")), Some(&Sign::Plus));

        let mut zeta = id.vertex_map().clone();
        zeta.insert(v("v2"), Sign::Minus);
        let zeta_hat = induced_linegraph_switch(&g, &zeta).unwrap();
        assert_eq!(zeta_hat.get(&e("e1~e2")), Some(&Sign::Minus));
    }

    #[test]
    fn switch_identity_battery_on_p3() {
        let g = p3();
        let identity = SwitchingPair::identity(&g);
        // The identity switch reduces every identity to a reflexive check.
        let reports = check_switch_identities(&g, &identity, &identity).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.passed()));

        let mut s = flip_vertices(&g, &["v2"]);
        s.edge.insert(e("e1"), Sign::Minus);
        let s2 = flip_vertices(&g, &["v1", "v3"]);
        let reports = check_switch_identities(&g, &s, &s2).unwrap();
        assert!(reports.iter().all(|r| r.passed()));
    }

    #[test]
    fn dual_view_swaps_the_two_functions() {
        let g = p3();
        let mut s = flip_vertices(&g, &["v1"]);
        s.edge.insert(e("e2"), Sign::Minus);
        let sd = s.for_dual();
        assert_eq!(sd.vertex_sign(&v("e2")), Some(Sign::Minus));
        assert_eq!(sd.edge_sign(&e("v1")), Some(Sign::Minus));
        assert_eq!(sd.edge_sign(&e("v2")), Some(Sign::Plus));
        assert_eq!(sd.for_dual(), s);
    }
}
