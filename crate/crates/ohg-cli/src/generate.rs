//! Seeded random instances.
//!
//! Everything is driven by a SplitMix64 stream so that a seed pins the
//! whole instance: the same seed always yields the same hypergraph, the
//! same switching functions, and therefore byte-identical tool output.
//! Constraint flags are enforced by rejection sampling with a hard attempt
//! cap; regular and uniform instances are sampled constructively first so
//! rejection only has to handle the remaining flags.

use std::collections::BTreeMap;

use ohg_core::designs::{fano, validate_design, BlockDesign};
use ohg_core::switching::SwitchingPair;
use ohg_core::{EdgeId, OrientedHypergraph, Sign, VertexId};

/// Attempt cap for rejection sampling inside [`generate`].
pub const REJECTION_CAP: usize = 10_000;

const SWITCH_STREAM_SALT: u64 = 0x7357_5749_5443_4821;

/// SplitMix64; tiny, seedable, and stable across releases.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform draw from `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    pub fn sign(&mut self) -> Sign {
        if self.next_u64() & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `k` distinct values from `0..n`, returned sorted.
    pub fn pick_distinct(&mut self, n: usize, k: usize) -> Vec<usize> {
        debug_assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut out = pool[..k].to_vec();
        out.sort_unstable();
        out
    }
}

/// Structural constraints enforced on generated instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub linear: bool,
    pub k_uniform: Option<usize>,
    pub r_regular: Option<usize>,
    pub all_positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Inclusive edge-size bounds, clamped per instance to the vertex
    /// count. Ignored when a uniformity or regularity constraint dictates
    /// the sizes.
    pub edge_size_range: (usize, usize),
    pub constraints: Constraints,
}

impl GeneratorConfig {
    pub fn new(seed: u64) -> Self {
        GeneratorConfig {
            seed,
            max_vertices: 10,
            max_edges: 8,
            edge_size_range: (0, 10),
            constraints: Constraints::default(),
        }
    }
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig::new(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("unsatisfiable constraints: {0}")]
    Unsatisfiable(String),
    #[error("rejection cap of {attempts} attempts exceeded for constraints {constraints}")]
    RejectionCapExceeded { attempts: usize, constraints: String },
}

fn constraints_summary(c: &Constraints) -> String {
    let mut parts = Vec::new();
    if c.linear {
        parts.push("linear".to_string());
    }
    if let Some(k) = c.k_uniform {
        parts.push(format!("{k}-uniform"));
    }
    if let Some(r) = c.r_regular {
        parts.push(format!("{r}-regular"));
    }
    if c.all_positive {
        parts.push("all-positive".to_string());
    }
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(", ")
    }
}

fn check_satisfiable(config: &GeneratorConfig) -> Result<(), GenerateError> {
    let c = &config.constraints;
    if config.max_vertices == 0 {
        return Err(GenerateError::Unsatisfiable(
            "max-vertices must be at least 1".to_string(),
        ));
    }
    if config.edge_size_range.0 > config.edge_size_range.1 {
        return Err(GenerateError::Unsatisfiable(
            "empty edge-size range".to_string(),
        ));
    }
    if let Some(k) = c.k_uniform {
        if k == 0 {
            return Err(GenerateError::Unsatisfiable(
                "uniformity k must be positive".to_string(),
            ));
        }
        if k > config.max_vertices {
            return Err(GenerateError::Unsatisfiable(format!(
                "uniformity k = {k} exceeds max-vertices = {}",
                config.max_vertices
            )));
        }
        if config.max_edges == 0 {
            return Err(GenerateError::Unsatisfiable(
                "uniformity needs at least one edge".to_string(),
            ));
        }
    }
    if let Some(r) = c.r_regular {
        if r == 0 {
            return Err(GenerateError::Unsatisfiable(
                "regularity r must be positive".to_string(),
            ));
        }
        if r > config.max_edges {
            return Err(GenerateError::Unsatisfiable(format!(
                "regularity r = {r} exceeds max-edges = {}",
                config.max_edges
            )));
        }
    }
    if let (Some(k), Some(r)) = (c.k_uniform, c.r_regular) {
        if shape_pairs(config, k, r).is_empty() {
            return Err(GenerateError::Unsatisfiable(format!(
                "no vertex/edge counts satisfy n*{r} = m*{k} within the limits"
            )));
        }
    }
    Ok(())
}

/// `(n, m)` pairs with `n * r == m * k` within the configured limits.
fn shape_pairs(config: &GeneratorConfig, k: usize, r: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for n in k.max(1)..=config.max_vertices {
        for m in r.max(1)..=config.max_edges {
            if n * r == m * k {
                pairs.push((n, m));
            }
        }
    }
    pairs
}

fn sample_once(config: &GeneratorConfig, rng: &mut SplitMix64) -> OrientedHypergraph {
    let c = &config.constraints;
    let (n, m) = match (c.k_uniform, c.r_regular) {
        (Some(k), Some(r)) => {
            let pairs = shape_pairs(config, k, r);
            pairs[rng.below(pairs.len() as u64) as usize]
        }
        (Some(k), None) => (
            rng.range(k, config.max_vertices),
            rng.range(1, config.max_edges),
        ),
        (None, Some(r)) => (
            rng.range(1, config.max_vertices),
            rng.range(r, config.max_edges),
        ),
        (None, None) => (
            rng.range(1, config.max_vertices),
            rng.range(0, config.max_edges),
        ),
    };

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); m];
    match (c.k_uniform, c.r_regular) {
        // Edge-driven: every edge picks k distinct vertices.
        (Some(k), _) => {
            for slot in members.iter_mut() {
                *slot = rng.pick_distinct(n, k);
            }
        }
        // Vertex-driven: every vertex picks r distinct edges, making the
        // degree sequence exactly regular.
        (None, Some(r)) => {
            for v in 0..n {
                for e in rng.pick_distinct(m, r) {
                    members[e].push(v);
                }
            }
        }
        (None, None) => {
            let lo = config.edge_size_range.0.min(n);
            let hi = config.edge_size_range.1.min(n);
            for slot in members.iter_mut() {
                let size = rng.range(lo, hi);
                *slot = rng.pick_distinct(n, size);
            }
        }
    }

    let vertices: Vec<VertexId> = (1..=n)
        .map(|i| VertexId::new(format!("v{i}")).expect("generated labels are valid"))
        .collect();
    let edges: Vec<(EdgeId, Vec<(usize, Sign)>)> = members
        .into_iter()
        .enumerate()
        .map(|(j, vs)| {
            let signed = vs
                .into_iter()
                .map(|v| {
                    let sign = if c.all_positive { Sign::Plus } else { rng.sign() };
                    (v, sign)
                })
                .collect();
            (
                EdgeId::new(format!("e{}", j + 1)).expect("generated labels are valid"),
                signed,
            )
        })
        .collect();
    OrientedHypergraph::from_parts(vertices, edges).expect("generated instances are simple")
}

fn satisfies(config: &GeneratorConfig, g: &OrientedHypergraph) -> bool {
    let c = &config.constraints;
    if c.linear && !g.is_linear() {
        return false;
    }
    if let Some(k) = c.k_uniform {
        if g.uniformity() != Some(k) {
            return false;
        }
    }
    if let Some(r) = c.r_regular {
        if g.regularity() != Some(r) {
            return false;
        }
    }
    if c.all_positive && g.incidences().iter().any(|i| i.sign == Sign::Minus) {
        return false;
    }
    true
}

/// Deterministically generates an instance satisfying the configured
/// constraints, or reports the constraint set when the attempt cap runs
/// out.
pub fn generate(config: &GeneratorConfig) -> Result<OrientedHypergraph, GenerateError> {
    check_satisfiable(config)?;
    let mut rng = SplitMix64::new(config.seed);
    for _ in 0..REJECTION_CAP {
        let candidate = sample_once(config, &mut rng);
        if satisfies(config, &candidate) {
            return Ok(candidate);
        }
    }
    Err(GenerateError::RejectionCapExceeded {
        attempts: REJECTION_CAP,
        constraints: constraints_summary(&config.constraints),
    })
}

/// The stream that switching functions are drawn from. Kept separate from
/// the instance stream so a witness can be replayed from its seed alone.
pub fn switching_stream(seed: u64) -> SplitMix64 {
    SplitMix64::new(seed ^ SWITCH_STREAM_SALT)
}

/// Uniform switching pair over the vertices and edges of `g`, drawn in
/// stored order.
pub fn random_switching(g: &OrientedHypergraph, rng: &mut SplitMix64) -> SwitchingPair {
    let vertex: BTreeMap<VertexId, Sign> = g
        .vertices()
        .iter()
        .map(|v| (v.clone(), rng.sign()))
        .collect();
    let edge: BTreeMap<EdgeId, Sign> = g
        .edge_ids()
        .map(|e| (e.clone(), rng.sign()))
        .collect();
    SwitchingPair::new(vertex, edge)
}

/// Complete design: all k-subsets of a v-set.
pub fn complete_design(v: usize, k: usize) -> BlockDesign {
    assert!(k >= 1 && k <= v, "complete design needs 1 <= k <= v");
    let points: Vec<String> = (0..v).map(|i| format!("p{i}")).collect();
    let point_refs: Vec<&str> = points.iter().map(|s| s.as_str()).collect();
    let mut blocks: Vec<(String, Vec<usize>)> = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    'all: loop {
        blocks.push((format!("b{}", blocks.len()), combo.clone()));
        let mut i = k;
        loop {
            if i == 0 {
                break 'all;
            }
            i -= 1;
            if combo[i] != i + v - k {
                break;
            }
            if i == 0 {
                break 'all;
            }
        }
        combo[i] += 1;
        for j in (i + 1)..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
    let views: Vec<(&str, Vec<&str>)> = blocks
        .iter()
        .map(|(l, m)| {
            (
                l.as_str(),
                m.iter().map(|&p| point_refs[p]).collect::<Vec<_>>(),
            )
        })
        .collect();
    validate_design(&point_refs, &views).expect("complete designs are balanced")
}

/// Deterministic rotation of valid designs for design-law trials. Random
/// design *construction* is out of scope, so trials cycle a fixed family:
/// the Fano plane, complete designs of several shapes, and the degenerate
/// single-block design.
pub fn design_for_trial(trial: usize) -> BlockDesign {
    match trial % 8 {
        0 => fano(),
        1 => complete_design(4, 2),
        2 => complete_design(5, 2),
        3 => complete_design(5, 3),
        4 => complete_design(6, 2),
        5 => complete_design(5, 4),
        6 => complete_design(6, 3),
        _ => validate_design(&["a", "b"], &[("only", vec!["a", "b"])])
            .expect("the single-block design is valid"),
    }
}
