//! The oriented-hypergraph value model.
//!
//! A hypergraph is a vertex list together with a *family* of edges: distinct
//! edges may have identical member sets, and an edge may be empty. Each
//! vertex-edge incidence carries a [`Sign`]; the sign of the adjacency
//! between two vertices `vi`, `vj` sharing an edge `e` is
//! `-sign(vi,e) * sign(vj,e)`.
//!
//! Vertex and edge order is part of the value: it fixes the row and column
//! indexing of every matrix derived from the hypergraph, and equality is
//! label-and-order-wise (no isomorphism testing). Only simple oriented
//! hypergraphs are constructible: each vertex of an edge is incident to it
//! exactly once, and construction rejects duplicate memberships.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::Error;

/// An incidence or adjacency sign: `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Labels are nonempty tokens. Whitespace and `:` would break the membership
/// syntax of the text format, `#` would collide with its comments.
fn validate_label(label: &str) -> Result<(), Error> {
    let invalid = |reason| Error::InvalidLabel {
        label: label.to_string(),
        reason,
    };
    if label.is_empty() {
        return Err(invalid("empty"));
    }
    for c in label.chars() {
        if c.is_whitespace() {
            return Err(invalid("contains whitespace"));
        }
        if c == ':' {
            return Err(invalid("contains ':'"));
        }
        if c == '#' {
            return Err(invalid("contains '#'"));
        }
    }
    Ok(())
}

/// Label of a vertex, unique within one hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self, Error> {
        let label = label.into();
        validate_label(&label)?;
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Vertex and edge labels share one token grammar; incidence duality
    /// swaps the namespaces.
    pub fn into_edge_id(self) -> EdgeId {
        EdgeId(self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Label of an edge, unique within one edge family. Two distinct edges may
/// have identical member sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(String);

impl EdgeId {
    pub fn new(label: impl Into<String>) -> Result<Self, Error> {
        let label = label.into();
        validate_label(&label)?;
        Ok(EdgeId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_vertex_id(self) -> VertexId {
        VertexId(self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A signed vertex-edge incidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub sign: Sign,
}

/// An unordered pair of distinct vertices sharing an edge. The pair is
/// reported in vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    pub edge: EdgeId,
    pub pair: (VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct EdgeData {
    id: EdgeId,
    /// Members as `(vertex index, incidence sign)`, sorted by vertex index.
    members: Vec<(usize, Sign)>,
}

/// A simple oriented hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeData>,
}

impl OrientedHypergraph {
    pub fn empty() -> Self {
        OrientedHypergraph {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn builder() -> HypergraphBuilder {
        HypergraphBuilder::new()
    }

    /// Validating constructor used by every structure operator. Edge members
    /// are `(vertex index, sign)` pairs in any order; they are stored sorted
    /// by vertex index.
    pub fn from_parts(
        vertices: Vec<VertexId>,
        edges: Vec<(EdgeId, Vec<(usize, Sign)>)>,
    ) -> Result<Self, Error> {
        let mut seen_vertices = BTreeSet::new();
        for v in &vertices {
            if !seen_vertices.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.as_str().to_string()));
            }
        }
        let mut seen_edges = BTreeSet::new();
        let mut edge_data = Vec::with_capacity(edges.len());
        for (id, mut members) in edges {
            if !seen_edges.insert(id.as_str().to_string()) {
                return Err(Error::DuplicateEdge(id.as_str().to_string()));
            }
            members.sort_by_key(|(i, _)| *i);
            for pair in members.windows(2) {
                if pair[0].0 == pair[1].0 {
                    return Err(Error::DuplicateIncidence {
                        vertex: vertices
                            .get(pair[0].0)
                            .map(|v| v.as_str().to_string())
                            .unwrap_or_else(|| pair[0].0.to_string()),
                        edge: id.as_str().to_string(),
                    });
                }
            }
            if let Some(&(i, _)) = members.iter().find(|(i, _)| *i >= vertices.len()) {
                return Err(Error::VertexIndexOutOfRange {
                    index: i,
                    len: vertices.len(),
                });
            }
            edge_data.push(EdgeData { id, members });
        }
        Ok(OrientedHypergraph {
            vertices,
            edges: edge_data,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_at(&self, index: usize) -> &VertexId {
        &self.vertices[index]
    }

    pub fn vertex_index(&self, v: &VertexId) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &EdgeId> {
        self.edges.iter().map(|e| &e.id)
    }

    pub fn edge_id_at(&self, index: usize) -> &EdgeId {
        &self.edges[index].id
    }

    pub fn edge_index(&self, e: &EdgeId) -> Option<usize> {
        self.edges.iter().position(|x| &x.id == e)
    }

    /// Members of the edge at `index` as `(vertex index, sign)` pairs in
    /// vertex order.
    pub fn edge_members_at(&self, index: usize) -> &[(usize, Sign)] {
        &self.edges[index].members
    }

    pub fn edge_members(&self, e: &EdgeId) -> Result<Vec<&VertexId>, Error> {
        let idx = self
            .edge_index(e)
            .ok_or_else(|| Error::UnknownEdge(e.as_str().to_string()))?;
        Ok(self.edges[idx]
            .members
            .iter()
            .map(|(i, _)| &self.vertices[*i])
            .collect())
    }

    /// All incidences in edge order, then vertex order within each edge.
    pub fn incidences(&self) -> Vec<Incidence> {
        let mut out = Vec::new();
        for edge in &self.edges {
            for &(i, sign) in &edge.members {
                out.push(Incidence {
                    vertex: self.vertices[i].clone(),
                    edge: edge.id.clone(),
                    sign,
                });
            }
        }
        out
    }

    pub fn incidence_count(&self) -> usize {
        self.edges.iter().map(|e| e.members.len()).sum()
    }

    pub fn incidence_sign(&self, v: &VertexId, e: &EdgeId) -> Result<Sign, Error> {
        let vi = self
            .vertex_index(v)
            .ok_or_else(|| Error::UnknownVertex(v.as_str().to_string()))?;
        let ei = self
            .edge_index(e)
            .ok_or_else(|| Error::UnknownEdge(e.as_str().to_string()))?;
        self.member_sign(ei, vi).ok_or_else(|| Error::NotIncident {
            vertex: v.as_str().to_string(),
            edge: e.as_str().to_string(),
        })
    }

    fn member_sign(&self, edge_index: usize, vertex_index: usize) -> Option<Sign> {
        self.edges[edge_index]
            .members
            .binary_search_by_key(&vertex_index, |(i, _)| *i)
            .ok()
            .map(|pos| self.edges[edge_index].members[pos].1)
    }

    pub(crate) fn degree_at(&self, vertex_index: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.members.binary_search_by_key(&vertex_index, |(i, _)| *i).is_ok())
            .count()
    }

    /// Number of incidences containing `v`.
    pub fn degree(&self, v: &VertexId) -> Result<usize, Error> {
        let idx = self
            .vertex_index(v)
            .ok_or_else(|| Error::UnknownVertex(v.as_str().to_string()))?;
        Ok(self.degree_at(idx))
    }

    pub fn max_degree(&self) -> Result<usize, Error> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok((0..self.vertices.len())
            .map(|i| self.degree_at(i))
            .max()
            .unwrap_or(0))
    }

    /// Number of incidences containing `e`; equals the member count for
    /// simple hypergraphs.
    pub fn edge_size(&self, e: &EdgeId) -> Result<usize, Error> {
        let idx = self
            .edge_index(e)
            .ok_or_else(|| Error::UnknownEdge(e.as_str().to_string()))?;
        Ok(self.edges[idx].members.len())
    }

    /// Maximum edge size, 0 when there are no edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(|e| e.members.len()).max().unwrap_or(0)
    }

    pub(crate) fn first_nonlinear_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.edges.len() {
            for j in (i + 1)..self.edges.len() {
                if self.intersection_size(i, j) > 1 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn intersection_size(&self, i: usize, j: usize) -> usize {
        let (a, b) = (&self.edges[i].members, &self.edges[j].members);
        let (mut x, mut y, mut count) = (0, 0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                core::cmp::Ordering::Less => x += 1,
                core::cmp::Ordering::Greater => y += 1,
                core::cmp::Ordering::Equal => {
                    count += 1;
                    x += 1;
                    y += 1;
                }
            }
        }
        count
    }

    /// True when every pair of distinct edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.first_nonlinear_pair().is_none()
    }

    /// `Some(k)` when there is at least one edge and every edge has size
    /// `k >= 1`.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.members.len();
        if first == 0 || self.edges.iter().any(|e| e.members.len() != first) {
            return None;
        }
        Some(first)
    }

    /// `Some(r)` when there is at least one vertex and every vertex has
    /// degree `r >= 1`.
    pub fn regularity(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            return None;
        }
        let first = self.degree_at(0);
        if first == 0 || (1..self.vertices.len()).any(|i| self.degree_at(i) != first) {
            return None;
        }
        Some(first)
    }

    /// The adjacency sign `-sign(vi,e) * sign(vj,e)`; symmetric in
    /// `(vi, vj)`.
    pub fn adjacency_sign(&self, e: &EdgeId, vi: &VertexId, vj: &VertexId) -> Result<Sign, Error> {
        if vi == vj {
            return Err(Error::IdenticalVertices(vi.as_str().to_string()));
        }
        let si = self.incidence_sign(vi, e)?;
        let sj = self.incidence_sign(vj, e)?;
        Ok(-(si * sj))
    }

    /// All adjacencies in edge order, then vertex order within each edge.
    pub fn adjacencies(&self) -> Vec<Adjacency> {
        let mut out = Vec::new();
        for edge in &self.edges {
            for a in 0..edge.members.len() {
                for b in (a + 1)..edge.members.len() {
                    out.push(Adjacency {
                        edge: edge.id.clone(),
                        pair: (
                            self.vertices[edge.members[a].0].clone(),
                            self.vertices[edge.members[b].0].clone(),
                        ),
                    });
                }
            }
        }
        out
    }
}

/// Incremental construction with early validation.
#[derive(Debug, Default)]
pub struct HypergraphBuilder {
    vertices: Vec<VertexId>,
    lookup: BTreeMap<String, usize>,
    edges: Vec<(EdgeId, Vec<(usize, Sign)>)>,
    edge_labels: BTreeSet<String>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, label: &str) -> Result<&mut Self, Error> {
        let id = VertexId::new(label)?;
        if self.lookup.contains_key(label) {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        self.lookup.insert(label.to_string(), self.vertices.len());
        self.vertices.push(id);
        Ok(self)
    }

    pub fn edge(&mut self, label: &str, members: &[(&str, Sign)]) -> Result<&mut Self, Error> {
        let id = EdgeId::new(label)?;
        if !self.edge_labels.insert(label.to_string()) {
            return Err(Error::DuplicateEdge(label.to_string()));
        }
        let mut resolved = Vec::with_capacity(members.len());
        let mut seen = BTreeSet::new();
        for (vertex, sign) in members {
            let index = *self
                .lookup
                .get(*vertex)
                .ok_or_else(|| Error::UnknownVertex(vertex.to_string()))?;
            if !seen.insert(index) {
                return Err(Error::DuplicateIncidence {
                    vertex: vertex.to_string(),
                    edge: label.to_string(),
                });
            }
            resolved.push((index, *sign));
        }
        self.edges.push((id, resolved));
        Ok(self)
    }

    pub fn build(self) -> OrientedHypergraph {
        OrientedHypergraph::from_parts(self.vertices, self.edges)
            .expect("builder enforces all construction invariants")
    }
}
