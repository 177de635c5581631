//! Structure-to-structure operators: incidence dual, k-sections,
//! intersection (line) graph, edge enlargement, and the bridge between
//! signed graphs and 2-uniform oriented hypergraphs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::hypergraph::{EdgeId, OrientedHypergraph, Sign, VertexId};

/// A simple signed graph: no loops, no repeated vertex pairs. Edge order is
/// part of the value, and endpoints are stored with the lower vertex index
/// first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    vertices: Vec<VertexId>,
    edges: Vec<SignedEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedEdge {
    id: EdgeId,
    endpoints: (usize, usize),
    sign: Sign,
}

impl SignedEdge {
    pub fn id(&self) -> &EdgeId {
        &self.id
    }

    pub fn endpoints(&self) -> (usize, usize) {
        self.endpoints
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

impl SignedGraph {
    pub fn from_parts(
        vertices: Vec<VertexId>,
        edges: Vec<(EdgeId, usize, usize, Sign)>,
    ) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.as_str().to_string()));
            }
        }
        let mut labels = BTreeSet::new();
        let mut pairs: BTreeMap<(usize, usize), String> = BTreeMap::new();
        let mut out = Vec::with_capacity(edges.len());
        for (id, a, b, sign) in edges {
            if !labels.insert(id.as_str().to_string()) {
                return Err(Error::DuplicateEdge(id.as_str().to_string()));
            }
            for idx in [a, b] {
                if idx >= vertices.len() {
                    return Err(Error::VertexIndexOutOfRange {
                        index: idx,
                        len: vertices.len(),
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge {
                    edge: id.as_str().to_string(),
                });
            }
            let key = (a.min(b), a.max(b));
            if let Some(other) = pairs.insert(key, id.as_str().to_string()) {
                return Err(Error::DuplicateEdgePair {
                    edge_a: other,
                    edge_b: id.as_str().to_string(),
                });
            }
            out.push(SignedEdge {
                id,
                endpoints: key,
                sign,
            });
        }
        Ok(SignedGraph {
            vertices,
            edges: out,
        })
    }

    pub fn from_labels(
        vertices: &[&str],
        edges: &[(&str, &str, &str, Sign)],
    ) -> Result<Self, Error> {
        let vertex_ids: Vec<VertexId> = vertices
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_, _>>()?;
        let index = |label: &str| {
            vertices
                .iter()
                .position(|v| *v == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut resolved = Vec::with_capacity(edges.len());
        for (id, a, b, sign) in edges {
            resolved.push((EdgeId::new(*id)?, index(a)?, index(b)?, *sign));
        }
        SignedGraph::from_parts(vertex_ids, resolved)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Enlargement targets for [`enlarge_edges`]. Edges missing from a per-edge
/// plan keep their size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnlargementPlan {
    Uniform(usize),
    PerEdge(BTreeMap<EdgeId, usize>),
}

/// Swaps the roles of vertices and edges, carrying each incidence sign
/// across unchanged: the dual incidence `(e, v)` keeps `sign(v, e)`. Vertex
/// and edge order is preserved, so the dual of the dual is structurally
/// equal to the original.
pub fn incidence_dual(g: &OrientedHypergraph) -> OrientedHypergraph {
    let vertices: Vec<VertexId> = g
        .edge_ids()
        .map(|e| e.clone().into_vertex_id())
        .collect();
    let mut edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = g
        .vertices()
        .iter()
        .map(|v| (v.clone().into_edge_id(), Vec::new()))
        .collect();
    for ei in 0..g.edge_count() {
        for &(vi, sign) in g.edge_members_at(ei) {
            edges[vi].1.push((ei, sign));
        }
    }
    OrientedHypergraph::from_parts(vertices, edges)
        .expect("the dual of a valid hypergraph is valid")
}

/// Lexicographic k-combinations of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        out.push(combo.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in (i + 1)..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn fresh_label(base: String, taken: &mut BTreeSet<String>) -> String {
    if taken.insert(base.clone()) {
        return base;
    }
    let mut suffix = 2_usize;
    loop {
        let candidate = format!("{base}|{suffix}");
        if taken.insert(candidate.clone()) {
            return candidate;
        }
        suffix += 1;
    }
}

fn section_label(
    g: &OrientedHypergraph,
    source: &EdgeId,
    members: &[(usize, Sign)],
    taken: &mut BTreeSet<String>,
) -> String {
    let mut labels: Vec<&str> = members
        .iter()
        .map(|(i, _)| g.vertex_at(*i).as_str())
        .collect();
    labels.sort_unstable();
    fresh_label(format!("{}|{}", source.as_str(), labels.join(",")), taken)
}

fn section_impl(
    g: &OrientedHypergraph,
    k: usize,
    strict: bool,
) -> Result<(OrientedHypergraph, Vec<usize>), Error> {
    if k == 0 {
        return Err(Error::SectionSizeZero);
    }
    let mut taken = BTreeSet::new();
    let mut edges = Vec::new();
    let mut sources = Vec::new();
    for ei in 0..g.edge_count() {
        let id = g.edge_id_at(ei);
        let members = g.edge_members_at(ei);
        if members.len() >= k {
            for combo in combinations(members.len(), k) {
                let subset: Vec<(usize, Sign)> = combo.iter().map(|&p| members[p]).collect();
                let label = section_label(g, id, &subset, &mut taken);
                edges.push((EdgeId::new(label)?, subset));
                sources.push(ei);
            }
        } else if !strict {
            let label = section_label(g, id, members, &mut taken);
            edges.push((EdgeId::new(label)?, members.to_vec()));
            sources.push(ei);
        }
    }
    let section = OrientedHypergraph::from_parts(g.vertices().to_vec(), edges)?;
    Ok((section, sources))
}

/// The k-section: same vertices, one edge per pair of a source edge `e` and
/// a subset `f` with either `|f| = k`, `f` inside `e`, or `|f| < k`,
/// `f = e`. Each section edge inherits its incidence signs from its source
/// edge. Multiplicity is per source edge: identical subsets of distinct
/// source edges stay distinct.
pub fn k_section(g: &OrientedHypergraph, k: usize) -> Result<OrientedHypergraph, Error> {
    section_impl(g, k, false).map(|(h, _)| h)
}

/// The k-section without the whole-edge clause for small edges.
pub fn strict_k_section(g: &OrientedHypergraph, k: usize) -> Result<OrientedHypergraph, Error> {
    section_impl(g, k, true).map(|(h, _)| h)
}

/// Strict k-section together with the source edge index of every section
/// edge, used to push edge switchings through the section.
pub fn strict_k_section_with_sources(
    g: &OrientedHypergraph,
    k: usize,
) -> Result<(OrientedHypergraph, Vec<usize>), Error> {
    section_impl(g, k, true)
}

/// The intersection (line) graph of a linear oriented hypergraph: one
/// vertex per edge of `g`, one 2-edge per pair of edges with a common
/// vertex. The incidence sign of edge `ei` in the pair edge is the sign of
/// the shared vertex in `ei`. Linearity makes the shared vertex unique;
/// non-linear input is rejected with the offending edge pair.
pub fn intersection_graph(g: &OrientedHypergraph) -> Result<OrientedHypergraph, Error> {
    intersection_graph_with_shared(g).map(|(h, _)| h)
}

/// Intersection graph together with `(edge_i, edge_j, shared_vertex)`
/// indices per result edge.
#[allow(clippy::type_complexity)]
pub fn intersection_graph_with_shared(
    g: &OrientedHypergraph,
) -> Result<(OrientedHypergraph, Vec<(usize, usize, usize)>), Error> {
    let m = g.edge_count();
    let vertices: Vec<VertexId> = g
        .edge_ids()
        .map(|e| e.clone().into_vertex_id())
        .collect();
    let mut taken = BTreeSet::new();
    let mut edges = Vec::new();
    let mut shared = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let common: Vec<(usize, Sign, Sign)> = common_members(g, i, j);
            match common.len() {
                0 => {}
                1 => {
                    let (v, si, sj) = common[0];
                    let label = fresh_label(
                        format!("{}~{}", g.edge_id_at(i).as_str(), g.edge_id_at(j).as_str()),
                        &mut taken,
                    );
                    edges.push((EdgeId::new(label)?, alloc::vec![(i, si), (j, sj)]));
                    shared.push((i, j, v));
                }
                _ => {
                    return Err(Error::NotLinear {
                        edge_a: g.edge_id_at(i).as_str().to_string(),
                        edge_b: g.edge_id_at(j).as_str().to_string(),
                    });
                }
            }
        }
    }
    let graph = OrientedHypergraph::from_parts(vertices, edges)?;
    Ok((graph, shared))
}

fn common_members(g: &OrientedHypergraph, i: usize, j: usize) -> Vec<(usize, Sign, Sign)> {
    let (a, b) = (g.edge_members_at(i), g.edge_members_at(j));
    let mut out = Vec::new();
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].0.cmp(&b[y].0) {
            core::cmp::Ordering::Less => x += 1,
            core::cmp::Ordering::Greater => y += 1,
            core::cmp::Ordering::Equal => {
                out.push((a[x].0, a[x].1, b[y].1));
                x += 1;
                y += 1;
            }
        }
    }
    out
}

/// Pads edges up to their target sizes with fresh degree-1 vertices,
/// labelled `<edge>.pad1`, `<edge>.pad2`, ... and all incident with sign
/// `+1`. Degree-1 vertices create no new edge intersections, so the
/// intersection graph is unchanged.
pub fn enlarge_edges(
    g: &OrientedHypergraph,
    plan: &EnlargementPlan,
) -> Result<OrientedHypergraph, Error> {
    if let EnlargementPlan::PerEdge(map) = plan {
        for id in map.keys() {
            if g.edge_index(id).is_none() {
                return Err(Error::UnknownEdge(id.as_str().to_string()));
            }
        }
    }
    let mut vertices = g.vertices().to_vec();
    let mut labels: BTreeSet<String> = vertices.iter().map(|v| v.as_str().to_string()).collect();
    let mut edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = (0..g.edge_count())
        .map(|i| (g.edge_id_at(i).clone(), g.edge_members_at(i).to_vec()))
        .collect();
    for (id, members) in &mut edges {
        let size = members.len();
        let target = match plan {
            EnlargementPlan::Uniform(k) => *k,
            EnlargementPlan::PerEdge(map) => map.get(id).copied().unwrap_or(size),
        };
        if target < size {
            return Err(Error::EnlargementTooSmall {
                edge: id.as_str().to_string(),
                size,
                target,
            });
        }
        let mut pad = 1_usize;
        for _ in 0..(target - size) {
            let label = loop {
                let candidate = format!("{}.pad{}", id.as_str(), pad);
                pad += 1;
                if labels.insert(candidate.clone()) {
                    break candidate;
                }
            };
            let index = vertices.len();
            vertices.push(VertexId::new(label)?);
            members.push((index, Sign::Plus));
        }
    }
    OrientedHypergraph::from_parts(vertices, edges)
}

/// Turns a signed graph into a 2-uniform linear oriented hypergraph with
/// the canonical orientation: for an edge `{vi, vj}` with `i < j` in vertex
/// order, the `vi` incidence gets `+1` and the `vj` incidence gets the
/// negated edge sign, so every adjacency sign equals the edge sign.
pub fn orient_signed_graph(sg: &SignedGraph) -> OrientedHypergraph {
    let edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = sg
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            (
                e.id().clone(),
                alloc::vec![(a, Sign::Plus), (b, -e.sign())],
            )
        })
        .collect();
    OrientedHypergraph::from_parts(sg.vertices().to_vec(), edges)
        .expect("a simple signed graph orients to a valid hypergraph")
}

/// Reads a 2-uniform linear oriented hypergraph back as a signed graph,
/// taking each edge sign from its (unique) adjacency sign.
pub fn underlying_signed_graph(g: &OrientedHypergraph) -> Result<SignedGraph, Error> {
    if let Some((i, j)) = g.first_nonlinear_pair() {
        return Err(Error::NotLinear {
            edge_a: g.edge_id_at(i).as_str().to_string(),
            edge_b: g.edge_id_at(j).as_str().to_string(),
        });
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for ei in 0..g.edge_count() {
        let members = g.edge_members_at(ei);
        if members.len() != 2 {
            return Err(Error::NotTwoUniform {
                edge: g.edge_id_at(ei).as_str().to_string(),
            });
        }
        let (a, sa) = members[0];
        let (b, sb) = members[1];
        edges.push((g.edge_id_at(ei).clone(), a, b, -(sa * sb)));
    }
    SignedGraph::from_parts(g.vertices().to_vec(), edges)
}

/// Structural equality that ignores edge labels and edge order: the vertex
/// lists must match exactly (labels and order), and the signed member sets
/// of the edges must match as multisets. This is the comparison used for
/// laws that relate differently-labelled constructions.
pub fn structurally_equal_up_to_edge_labels(
    a: &OrientedHypergraph,
    b: &OrientedHypergraph,
) -> bool {
    if a.vertices() != b.vertices() {
        return false;
    }
    let canon = |g: &OrientedHypergraph| {
        let mut edges: Vec<Vec<(usize, Sign)>> = (0..g.edge_count())
            .map(|i| g.edge_members_at(i).to_vec())
            .collect();
        edges.sort();
        edges
    };
    canon(a) == canon(b)
}
