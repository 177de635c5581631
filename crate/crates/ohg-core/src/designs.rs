//! Balanced incomplete block designs and their hypergraph reading.
//!
//! A design is a point set plus a family of equally sized blocks in which
//! every point has the same replication count and every point pair lies in
//! the same number of blocks. Parameters are inferred by counting, never
//! trusted from the input, so a single mutated membership is caught.
//! Reading the blocks as all-positive edges turns a design into a
//! k-uniform, r-regular oriented hypergraph whose Laplacian collapses to
//! `(r - lambda) I + lambda J`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::hypergraph::{EdgeId, OrientedHypergraph, Sign, VertexId};
use crate::matrix::IntMatrix;

/// The five counted parameters `(v, b, r, k, lambda)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.v, self.b, self.r, self.k, self.lambda
        )
    }
}

/// A validated balanced incomplete block design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDesign {
    points: Vec<VertexId>,
    /// Block members as point indices, sorted.
    blocks: Vec<(EdgeId, Vec<usize>)>,
    params: DesignParams,
}

/// Violation report from [`validate_design`], naming the first offending
/// point, block, or pair.
#[derive(Clone, Debug, PartialEq)]
pub enum DesignError {
    Label(Error),
    NoPoints,
    NoBlocks,
    DuplicatePoint(String),
    DuplicateBlockLabel(String),
    UnknownPoint { block: String, point: String },
    RepeatedPointInBlock { block: String, point: String },
    BlockSizeMismatch {
        block: String,
        size: usize,
        expected: usize,
    },
    ReplicationMismatch {
        point: String,
        count: usize,
        expected: usize,
    },
    PairCoverageMismatch {
        point_a: String,
        point_b: String,
        count: usize,
        expected: usize,
    },
    ParamsMismatch {
        field: &'static str,
        declared: usize,
        inferred: usize,
    },
}

impl fmt::Display for DesignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignError::Label(e) => write!(f, "{e}"),
            DesignError::NoPoints => write!(f, "design has no points"),
            DesignError::NoBlocks => {
                write!(f, "design has no blocks, so no parameters can be inferred")
            }
            DesignError::DuplicatePoint(p) => write!(f, "duplicate point '{p}'"),
            DesignError::DuplicateBlockLabel(b) => write!(f, "duplicate block '{b}'"),
            DesignError::UnknownPoint { block, point } => {
                write!(f, "block '{block}' uses unknown point '{point}'")
            }
            DesignError::RepeatedPointInBlock { block, point } => {
                write!(f, "block '{block}' repeats point '{point}'")
            }
            DesignError::BlockSizeMismatch {
                block,
                size,
                expected,
            } => write!(
                f,
                "block '{block}' has size {size}, expected {expected}"
            ),
            DesignError::ReplicationMismatch {
                point,
                count,
                expected,
            } => write!(
                f,
                "point '{point}' lies in {count} blocks, expected {expected}"
            ),
            DesignError::PairCoverageMismatch {
                point_a,
                point_b,
                count,
                expected,
            } => write!(
                f,
                "pair {{{point_a}, {point_b}}} lies in {count} blocks, expected {expected}"
            ),
            DesignError::ParamsMismatch {
                field,
                declared,
                inferred,
            } => write!(
                f,
                "declared parameter {field} = {declared} disagrees with counted value {inferred}"
            ),
        }
    }
}

impl core::error::Error for DesignError {}

/// Validates raw points and blocks, inferring `(v, b, r, k, lambda)` by
/// brute-force counting. Blocks are `O(v^2 * b)` pair-checked; designs at
/// this scale are tiny.
pub fn validate_design(
    points: &[&str],
    blocks: &[(&str, Vec<&str>)],
) -> Result<BlockDesign, DesignError> {
    if points.is_empty() {
        return Err(DesignError::NoPoints);
    }
    let mut point_ids = Vec::with_capacity(points.len());
    let mut seen = BTreeSet::new();
    for p in points {
        let id = VertexId::new(*p).map_err(DesignError::Label)?;
        if !seen.insert(p.to_string()) {
            return Err(DesignError::DuplicatePoint(p.to_string()));
        }
        point_ids.push(id);
    }
    if blocks.is_empty() {
        return Err(DesignError::NoBlocks);
    }
    let index_of = |label: &str| points.iter().position(|p| *p == label);
    let mut block_data: Vec<(EdgeId, Vec<usize>)> = Vec::with_capacity(blocks.len());
    let mut labels = BTreeSet::new();
    for (label, members) in blocks {
        let id = EdgeId::new(*label).map_err(DesignError::Label)?;
        if !labels.insert(label.to_string()) {
            return Err(DesignError::DuplicateBlockLabel(label.to_string()));
        }
        let mut indices = Vec::with_capacity(members.len());
        for m in members {
            let idx = index_of(m).ok_or_else(|| DesignError::UnknownPoint {
                block: label.to_string(),
                point: m.to_string(),
            })?;
            if indices.contains(&idx) {
                return Err(DesignError::RepeatedPointInBlock {
                    block: label.to_string(),
                    point: m.to_string(),
                });
            }
            indices.push(idx);
        }
        indices.sort_unstable();
        block_data.push((id, indices));
    }

    let v = point_ids.len();
    let b = block_data.len();
    let k = block_data[0].1.len();
    for (id, members) in &block_data {
        if members.len() != k {
            return Err(DesignError::BlockSizeMismatch {
                block: id.as_str().to_string(),
                size: members.len(),
                expected: k,
            });
        }
    }
    let replication =
        |p: usize| block_data.iter().filter(|(_, m)| m.contains(&p)).count();
    let r = replication(0);
    for (p, id) in point_ids.iter().enumerate() {
        let count = replication(p);
        if count != r {
            return Err(DesignError::ReplicationMismatch {
                point: id.as_str().to_string(),
                count,
                expected: r,
            });
        }
    }
    let coverage = |p: usize, q: usize| {
        block_data
            .iter()
            .filter(|(_, m)| m.contains(&p) && m.contains(&q))
            .count()
    };
    let lambda = if v >= 2 { coverage(0, 1) } else { 0 };
    for p in 0..v {
        for q in (p + 1)..v {
            let count = coverage(p, q);
            if count != lambda {
                return Err(DesignError::PairCoverageMismatch {
                    point_a: point_ids[p].as_str().to_string(),
                    point_b: point_ids[q].as_str().to_string(),
                    count,
                    expected: lambda,
                });
            }
        }
    }
    debug_assert_eq!(b * k, v * r);
    debug_assert_eq!(lambda * (v.saturating_sub(1)), r * (k.saturating_sub(1)));
    Ok(BlockDesign {
        points: point_ids,
        blocks: block_data,
        params: DesignParams { v, b, r, k, lambda },
    })
}

impl BlockDesign {
    pub fn params(&self) -> DesignParams {
        self.params
    }

    pub fn points(&self) -> &[VertexId] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_id_at(&self, index: usize) -> &EdgeId {
        &self.blocks[index].0
    }

    /// Member point indices of a block, sorted.
    pub fn block_members_at(&self, index: usize) -> &[usize] {
        &self.blocks[index].1
    }

    /// The v x b 0/1 matrix with a 1 where a point lies in a block.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut c = IntMatrix::zeros(self.points.len(), self.blocks.len());
        for (j, (_, members)) in self.blocks.iter().enumerate() {
            for &i in members {
                c.set(i, j, 1);
            }
        }
        c
    }

    /// Reads the design as an oriented hypergraph with all incidences
    /// `+1`: points become vertices, blocks become edges.
    pub fn to_hypergraph(&self) -> OrientedHypergraph {
        let edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = self
            .blocks
            .iter()
            .map(|(id, members)| {
                (
                    id.clone(),
                    members.iter().map(|&i| (i, Sign::Plus)).collect(),
                )
            })
            .collect();
        OrientedHypergraph::from_parts(self.points.clone(), edges)
            .expect("a valid design is a valid hypergraph")
    }

    /// Cross-checks declared `(v, b, r, k, lambda)` values against the
    /// counted ones.
    pub fn check_declared(&self, declared: &DesignParams) -> Result<(), DesignError> {
        let inferred = self.params;
        let fields = [
            ("v", declared.v, inferred.v),
            ("b", declared.b, inferred.b),
            ("r", declared.r, inferred.r),
            ("k", declared.k, inferred.k),
            ("lambda", declared.lambda, inferred.lambda),
        ];
        for (field, declared, inferred) in fields {
            if declared != inferred {
                return Err(DesignError::ParamsMismatch {
                    field,
                    declared,
                    inferred,
                });
            }
        }
        Ok(())
    }
}

/// Verifies both design identities exactly: the Laplacian of the
/// all-positive hypergraph reading and the Gram matrix of the incidence
/// matrix both equal `(r - lambda) I + lambda J`.
pub fn check_design_identity(d: &BlockDesign) -> Vec<crate::laws::LawReport> {
    alloc::vec![
        crate::laws::check(
            crate::laws::LawId::Theorem6_1,
            crate::laws::LawInput::Design(d)
        )
        .expect("design law accepts a design"),
        crate::laws::check(
            crate::laws::LawId::Corollary6_2,
            crate::laws::LawInput::Design(d)
        )
        .expect("design law accepts a design"),
    ]
}

/// The Fano plane: points `0..6`, blocks `{i, i+1, i+3}` mod 7.
pub fn fano() -> BlockDesign {
    let points: Vec<String> = (0..7).map(|i| i.to_string()).collect();
    let point_refs: Vec<&str> = points.iter().map(|s| s.as_str()).collect();
    let labels: Vec<String> = (0..7).map(|i| alloc::format!("b{i}")).collect();
    let members: Vec<Vec<String>> = (0..7_usize)
        .map(|i| {
            let mut m = alloc::vec![i % 7, (i + 1) % 7, (i + 3) % 7];
            m.sort_unstable();
            m.iter().map(|x| x.to_string()).collect()
        })
        .collect();
    let blocks: Vec<(&str, Vec<&str>)> = labels
        .iter()
        .zip(&members)
        .map(|(l, m)| (l.as_str(), m.iter().map(|x| x.as_str()).collect()))
        .collect();
    validate_design(&point_refs, &blocks).expect("the Fano plane is a valid design")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn fano_parameters() {
        let d = fano();
        assert_eq!(
            d.params(),
            DesignParams {
                v: 7,
                b: 7,
                r: 3,
                k: 3,
                lambda: 1
            }
        );
        // Exhaustive pair check: all 21 pairs covered exactly once.
        for p in 0..7 {
            for q in (p + 1)..7 {
                let count = (0..7)
                    .filter(|&j| {
                        d.block_members_at(j).contains(&p) && d.block_members_at(j).contains(&q)
                    })
                    .count();
                assert_eq!(count, 1, "pair ({p},{q})");
            }
        }
    }

    #[test]
    fn fano_incidence_matrix_is_a_circulant() {
        let c = fano().incidence_matrix();
        for i in 0..7 {
            assert_eq!(c.row(i).iter().sum::<i64>(), 3);
            for j in 0..7 {
                assert_eq!(c.get(i, j), c.get((i + 1) % 7, (j + 1) % 7));
            }
        }
        for j in 0..7 {
            assert_eq!((0..7).map(|i| c.get(i, j)).sum::<i64>(), 3);
        }
    }

    #[test]
    fn single_block_is_a_degenerate_design() {
        let d = validate_design(&["a", "b"], &[("only", vec!["a", "b"])]).unwrap();
        assert_eq!(
            d.params(),
            DesignParams {
                v: 2,
                b: 1,
                r: 1,
                k: 2,
                lambda: 1
            }
        );
        assert_eq!(
            d.incidence_matrix(),
            IntMatrix::from_rows(&[vec![1], vec![1]]).unwrap()
        );
    }

    #[test]
    fn complete_pair_design_on_four_points() {
        let blocks: Vec<(String, Vec<&str>)> = vec![
            ("b1".into(), vec!["a", "b"]),
            ("b2".into(), vec!["a", "c"]),
            ("b3".into(), vec!["a", "d"]),
            ("b4".into(), vec!["b", "c"]),
            ("b5".into(), vec!["b", "d"]),
            ("b6".into(), vec!["c", "d"]),
        ];
        let views: Vec<(&str, Vec<&str>)> = blocks
            .iter()
            .map(|(l, m)| (l.as_str(), m.clone()))
            .collect();
        let d = validate_design(&["a", "b", "c", "d"], &views).unwrap();
        assert_eq!(
            d.params(),
            DesignParams {
                v: 4,
                b: 6,
                r: 3,
                k: 2,
                lambda: 1
            }
        );
        let c = d.incidence_matrix();
        let gram = c.mul(&c.transpose()).unwrap();
        let expected = IntMatrix::identity(4)
            .scale(2)
            .add(&IntMatrix::ones(4, 4))
            .unwrap();
        assert_eq!(gram, expected);
    }

    #[test]
    fn hypergraph_reading_is_all_positive_and_matches_the_incidence_matrix() {
        let d = fano();
        let g = d.to_hypergraph();
        assert_eq!(g.uniformity(), Some(3));
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.rank(), 3);
        assert!(g.incidences().iter().all(|i| i.sign == Sign::Plus));
        assert_eq!(crate::algebra::incidence_matrix(&g), d.incidence_matrix());
        // All-positive incidences force adjacency entries -lambda off the
        // diagonal.
        let a = crate::algebra::adjacency_matrix(&g);
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(a.get(i, j), if i == j { 0 } else { -1 });
            }
        }
    }

    #[test]
    fn mutated_fano_is_rejected() {
        let d = fano();
        // Replace point 3 of block b0 = {0,1,3} with point 2.
        let points: Vec<String> = (0..7).map(|i| i.to_string()).collect();
        let point_refs: Vec<&str> = points.iter().map(|s| s.as_str()).collect();
        let mut raw: Vec<(String, Vec<String>)> = (0..7)
            .map(|j| {
                (
                    d.block_id_at(j).as_str().to_string(),
                    d.block_members_at(j)
                        .iter()
                        .map(|i| i.to_string())
                        .collect(),
                )
            })
            .collect();
        raw[0].1[2] = "2".to_string();
        let views: Vec<(&str, Vec<&str>)> = raw
            .iter()
            .map(|(l, m)| (l.as_str(), m.iter().map(|s| s.as_str()).collect()))
            .collect();
        let err = validate_design(&point_refs, &views).unwrap_err();
        assert!(
            matches!(
                err,
                DesignError::ReplicationMismatch { .. } | DesignError::PairCoverageMismatch { .. }
            ),
            "unexpected report: {err}"
        );
    }

    #[test]
    fn violation_reports_name_the_culprit() {
        assert_eq!(validate_design(&[], &[]), Err(DesignError::NoPoints));
        assert_eq!(
            validate_design(&["a"], &[]),
            Err(DesignError::NoBlocks)
        );
        assert!(matches!(
            validate_design(&["a", "a"], &[("b", vec!["a"])]),
            Err(DesignError::DuplicatePoint(_))
        ));
        assert!(matches!(
            validate_design(&["a"], &[("b", vec!["z"])]),
            Err(DesignError::UnknownPoint { .. })
        ));
        assert!(matches!(
            validate_design(&["a", "b"], &[("x", vec!["a", "a"])]),
            Err(DesignError::RepeatedPointInBlock { .. })
        ));
        match validate_design(
            &["a", "b", "c"],
            &[("x", vec!["a", "b"]), ("y", vec!["c"])],
        ) {
            Err(DesignError::BlockSizeMismatch { block, size, expected }) => {
                assert_eq!((block.as_str(), size, expected), ("y", 1, 2));
            }
            other => panic!("expected size mismatch, got {other:?}"),
        }
    }

    #[test]
    fn design_identity_battery() {
        for d in [
            fano(),
            validate_design(&["a", "b"], &[("only", vec!["a", "b"])]).unwrap(),
        ] {
            let reports = check_design_identity(&d);
            assert_eq!(reports.len(), 2);
            assert!(reports.iter().all(|r| r.passed()), "{:?}", d.params());
        }
    }

    #[test]
    fn declared_parameters_are_cross_checked() {
        let d = fano();
        assert!(d
            .check_declared(&DesignParams {
                v: 7,
                b: 7,
                r: 3,
                k: 3,
                lambda: 1
            })
            .is_ok());
        assert!(matches!(
            d.check_declared(&DesignParams {
                v: 7,
                b: 7,
                r: 4,
                k: 3,
                lambda: 1
            }),
            Err(DesignError::ParamsMismatch { field: "r", .. })
        ));
    }
}
