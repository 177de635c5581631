//! Machine checks for the matrix identities and eigenvalue bounds.
//!
//! Every law is a conditional statement: a hypothesis on the instance
//! (linear, k-uniform, r-regular, ...) and a conclusion that is either an
//! exact integer matrix identity, a structural equality of constructions,
//! or a toleranced spectral statement. A [`LawReport`] separates the two:
//! an instance that misses the hypothesis is *not* a failure, and a failed
//! conclusion always carries a replayable witness.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{adjacency_matrix, incidence_matrix, laplacian_matrix};
use crate::constructions::{
    incidence_dual, intersection_graph, k_section, strict_k_section,
    structurally_equal_up_to_edge_labels,
};
use crate::designs::BlockDesign;
use crate::error::Error;
use crate::hypergraph::OrientedHypergraph;
use crate::matrix::IntMatrix;
use crate::spectrum::{
    nonzero_spectra_equal, spectra_match, symmetric_eigenvalues_default, Spectrum,
    SPECTRUM_PAIR_TOLERANCE,
};
use crate::switching::{
    apply_switch, induced_linegraph_switch, induced_section_switch, switch_diag_edge,
    switch_diag_vertex, SwitchingPair,
};

/// Slack allowed on the `<= k` / `<= r` eigenvalue bounds.
pub const EIGEN_BOUND_TOLERANCE: f64 = 1e-8;

/// Identifier of one checkable law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LawId {
    Lemma2_1,
    Lemma2_2,
    Theorem3_1,
    Corollary3_3,
    Corollary3_7,
    Theorem4_1,
    Corollary4_2,
    Lemma4_3,
    Theorem4_4,
    Lemma4_5,
    Theorem4_6,
    Lemma4_7,
    Proposition4_8,
    Lemma5_1,
    Theorem5_2,
    Corollary5_3,
    Theorem5_4,
    Theorem6_1,
    Corollary6_2,
}

/// What kind of instance a law consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawInputKind {
    /// Just an oriented hypergraph.
    Hypergraph,
    /// A hypergraph plus one switching pair.
    Switched,
    /// A hypergraph plus two independently chosen switching pairs.
    DoublySwitched,
    /// A validated block design.
    Design,
}

impl LawId {
    pub const ALL: [LawId; 19] = [
        LawId::Lemma2_1,
        LawId::Lemma2_2,
        LawId::Theorem3_1,
        LawId::Corollary3_3,
        LawId::Corollary3_7,
        LawId::Theorem4_1,
        LawId::Corollary4_2,
        LawId::Lemma4_3,
        LawId::Theorem4_4,
        LawId::Lemma4_5,
        LawId::Theorem4_6,
        LawId::Lemma4_7,
        LawId::Proposition4_8,
        LawId::Lemma5_1,
        LawId::Theorem5_2,
        LawId::Corollary5_3,
        LawId::Theorem5_4,
        LawId::Theorem6_1,
        LawId::Corollary6_2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Lemma2_1 => "lemma-2.1",
            LawId::Lemma2_2 => "lemma-2.2",
            LawId::Theorem3_1 => "theorem-3.1",
            LawId::Corollary3_3 => "corollary-3.3",
            LawId::Corollary3_7 => "corollary-3.7",
            LawId::Theorem4_1 => "theorem-4.1",
            LawId::Corollary4_2 => "corollary-4.2",
            LawId::Lemma4_3 => "lemma-4.3",
            LawId::Theorem4_4 => "theorem-4.4",
            LawId::Lemma4_5 => "lemma-4.5",
            LawId::Theorem4_6 => "theorem-4.6",
            LawId::Lemma4_7 => "lemma-4.7",
            LawId::Proposition4_8 => "proposition-4.8",
            LawId::Lemma5_1 => "lemma-5.1",
            LawId::Theorem5_2 => "theorem-5.2",
            LawId::Corollary5_3 => "corollary-5.3",
            LawId::Theorem5_4 => "theorem-5.4",
            LawId::Theorem6_1 => "theorem-6.1",
            LawId::Corollary6_2 => "corollary-6.2",
        }
    }

    pub fn parse(s: &str) -> Result<LawId, Error> {
        LawId::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }

    pub fn input_kind(self) -> LawInputKind {
        match self {
            LawId::Lemma5_1 | LawId::Theorem5_2 | LawId::Theorem5_4 => LawInputKind::Switched,
            LawId::Corollary5_3 => LawInputKind::DoublySwitched,
            LawId::Theorem6_1 | LawId::Corollary6_2 => LawInputKind::Design,
            _ => LawInputKind::Hypergraph,
        }
    }
}

impl core::fmt::Display for LawId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub enum HypothesisStatus {
    Met,
    NotMet(String),
}

impl HypothesisStatus {
    pub fn is_met(&self) -> bool {
        matches!(self, HypothesisStatus::Met)
    }
}

/// The failing instance, complete enough to replay the check.
#[derive(Clone, Debug)]
pub struct Witness {
    pub message: String,
    pub instance: Option<OrientedHypergraph>,
    pub design: Option<BlockDesign>,
    pub switch: Option<SwitchingPair>,
    pub switch_second: Option<SwitchingPair>,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Pass,
    Fail(Box<Witness>),
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: LawId,
    pub hypothesis: HypothesisStatus,
    /// Absent exactly when the hypothesis is not met.
    pub verdict: Option<Verdict>,
    pub details: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.hypothesis.is_met() && matches!(self.verdict, Some(Verdict::Pass))
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Some(Verdict::Fail(_)))
    }

    pub fn hypothesis_met(&self) -> bool {
        self.hypothesis.is_met()
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Some(Verdict::Fail(w)) => Some(w),
            _ => None,
        }
    }
}

/// Instance handed to [`check`].
#[derive(Clone, Copy)]
pub enum LawInput<'a> {
    Hypergraph(&'a OrientedHypergraph),
    Switched(&'a OrientedHypergraph, &'a SwitchingPair),
    DoublySwitched(
        &'a OrientedHypergraph,
        &'a SwitchingPair,
        &'a SwitchingPair,
    ),
    Design(&'a BlockDesign),
}

struct Ctx<'a> {
    law: LawId,
    g: Option<&'a OrientedHypergraph>,
    s: Option<&'a SwitchingPair>,
    s2: Option<&'a SwitchingPair>,
    d: Option<&'a BlockDesign>,
}

impl<'a> Ctx<'a> {
    fn plain(law: LawId, g: &'a OrientedHypergraph) -> Self {
        Ctx {
            law,
            g: Some(g),
            s: None,
            s2: None,
            d: None,
        }
    }

    fn pass(&self) -> LawReport {
        LawReport {
            law: self.law,
            hypothesis: HypothesisStatus::Met,
            verdict: Some(Verdict::Pass),
            details: Vec::new(),
        }
    }

    fn not_met(&self, reason: impl Into<String>) -> LawReport {
        LawReport {
            law: self.law,
            hypothesis: HypothesisStatus::NotMet(reason.into()),
            verdict: None,
            details: Vec::new(),
        }
    }

    fn fail(&self, message: String, details: Vec<String>) -> LawReport {
        LawReport {
            law: self.law,
            hypothesis: HypothesisStatus::Met,
            verdict: Some(Verdict::Fail(Box::new(Witness {
                message,
                instance: self.g.cloned(),
                design: self.d.cloned(),
                switch: self.s.cloned(),
                switch_second: self.s2.cloned(),
            }))),
            details,
        }
    }

    /// `None` when the matrices agree; a failure report otherwise.
    fn expect_exact(
        &self,
        what: &str,
        lhs_name: &str,
        lhs: &IntMatrix,
        rhs_name: &str,
        rhs: &IntMatrix,
    ) -> Option<LawReport> {
        if lhs == rhs {
            return None;
        }
        let place = lhs
            .first_difference(rhs)
            .map(|(i, j)| format!(" (first difference at row {i}, column {j})"))
            .unwrap_or_default();
        Some(self.fail(
            format!("{what}: expected exact equality{place}"),
            alloc::vec![
                format!("{lhs_name}:"),
                lhs.render(),
                format!("{rhs_name}:"),
                rhs.render(),
            ],
        ))
    }

    fn expect_spectra(
        &self,
        what: &str,
        lhs: &Spectrum,
        rhs: &Spectrum,
        nonzero_only: bool,
    ) -> Option<LawReport> {
        let ok = if nonzero_only {
            nonzero_spectra_equal(lhs, rhs)
        } else {
            spectra_match(lhs, rhs, SPECTRUM_PAIR_TOLERANCE)
        };
        if ok {
            return None;
        }
        Some(self.fail(
            format!("{what}: spectra do not pair within {SPECTRUM_PAIR_TOLERANCE:e}"),
            alloc::vec![
                "left spectrum:".to_string(),
                lhs.to_string(),
                "right spectrum:".to_string(),
                rhs.to_string(),
            ],
        ))
    }

    fn expect_structural(
        &self,
        what: &str,
        lhs: &OrientedHypergraph,
        rhs: &OrientedHypergraph,
        up_to_edge_labels: bool,
    ) -> Option<LawReport> {
        let ok = if up_to_edge_labels {
            structurally_equal_up_to_edge_labels(lhs, rhs)
        } else {
            lhs == rhs
        };
        if ok {
            None
        } else {
            Some(self.fail(format!("{what}: structures differ"), Vec::new()))
        }
    }
}

/// Checks `law` on `input`. Mismatched input kinds, switch coverage
/// violations, and eigensolver breakdowns surface as `Err`; everything else
/// is in the report.
pub fn check(law: LawId, input: LawInput<'_>) -> Result<LawReport, Error> {
    let wrong = |needs: &'static str| Error::LawInput {
        law: law.name().to_string(),
        needs,
    };
    match law.input_kind() {
        LawInputKind::Hypergraph => {
            let g = match input {
                LawInput::Hypergraph(g)
                | LawInput::Switched(g, _)
                | LawInput::DoublySwitched(g, _, _) => g,
                LawInput::Design(_) => return Err(wrong("an oriented hypergraph instance")),
            };
            check_plain(law, g)
        }
        LawInputKind::Switched => {
            let (g, s) = match input {
                LawInput::Switched(g, s) | LawInput::DoublySwitched(g, s, _) => (g, s),
                _ => return Err(wrong("a hypergraph and a switching pair")),
            };
            check_switched(law, g, s)
        }
        LawInputKind::DoublySwitched => match input {
            LawInput::DoublySwitched(g, s1, s2) => check_corollary_5_3(g, s1, s2),
            _ => Err(wrong("a hypergraph and two switching pairs")),
        },
        LawInputKind::Design => match input {
            LawInput::Design(d) => Ok(check_design(law, d)),
            _ => Err(wrong("a block design instance")),
        },
    }
}

fn check_plain(law: LawId, g: &OrientedHypergraph) -> Result<LawReport, Error> {
    let ctx = Ctx::plain(law, g);
    match law {
        LawId::Lemma2_1 => {
            let h = incidence_matrix(g);
            let hd = incidence_matrix(&incidence_dual(g));
            Ok(ctx
                .expect_exact(
                    "incidence matrix of the dual",
                    "H(G)^T",
                    &h.transpose(),
                    "H(G*)",
                    &hd,
                )
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Lemma2_2 => {
            let h = incidence_matrix(g);
            let ht = h.transpose();
            let l = laplacian_matrix(g);
            let gram = h.mul(&ht).expect("H and H^T are composable");
            if let Some(fail) = ctx.expect_exact("Laplacian factorization", "L(G)", &l, "H H^T", &gram)
            {
                return Ok(fail);
            }
            let ld = laplacian_matrix(&incidence_dual(g));
            let gram_dual = ht.mul(&h).expect("H^T and H are composable");
            Ok(ctx
                .expect_exact("dual Laplacian factorization", "L(G*)", &ld, "H^T H", &gram_dual)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Theorem3_1 => {
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let lg = intersection_graph(g).expect("linear instance");
            let section = strict_k_section(&incidence_dual(g), 2).expect("k = 2 is valid");
            Ok(ctx
                .expect_structural(
                    "intersection graph vs strict 2-section of the dual",
                    &lg,
                    &section,
                    true,
                )
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Corollary3_3 => {
            if g.uniformity() != Some(2) {
                return Ok(ctx.not_met("instance is not 2-uniform"));
            }
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let lg = intersection_graph(&incidence_dual(g))
                .expect("dual of a linear instance is linear");
            Ok(ctx
                .expect_structural("intersection graph of the dual", &lg, g, true)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Corollary3_7 => {
            if g.regularity() != Some(2) {
                return Ok(ctx.not_met("instance is not 2-regular"));
            }
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let lg = intersection_graph(g).expect("linear instance");
            Ok(ctx
                .expect_structural("intersection graph vs dual", &lg, &incidence_dual(g), true)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Theorem4_1 => {
            let a = adjacency_matrix(g);
            let strict = adjacency_matrix(&strict_k_section(g, 2).expect("k = 2 is valid"));
            if let Some(fail) =
                ctx.expect_exact("adjacency of the strict 2-section", "A(G)", &a, "A(strict)", &strict)
            {
                return Ok(fail);
            }
            let lax = adjacency_matrix(&k_section(g, 2).expect("k = 2 is valid"));
            Ok(ctx
                .expect_exact("adjacency of the 2-section", "A(G)", &a, "A(lax)", &lax)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Corollary4_2 => {
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let a_dual = adjacency_matrix(&incidence_dual(g));
            let a_line = adjacency_matrix(&intersection_graph(g).expect("linear instance"));
            Ok(ctx
                .expect_exact(
                    "adjacency of dual vs intersection graph",
                    "A(G*)",
                    &a_dual,
                    "A(line graph)",
                    &a_line,
                )
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Lemma4_3 => {
            let Some(k) = g.uniformity() else {
                return Ok(ctx.not_met("instance is not k-uniform"));
            };
            let dual = incidence_dual(g);
            let l_dual = laplacian_matrix(&dual);
            let expected = IntMatrix::identity(g.edge_count())
                .scale(k as i64)
                .sub(&adjacency_matrix(&dual))
                .expect("both m x m");
            if let Some(fail) =
                ctx.expect_exact("uniform dual Laplacian", "L(G*)", &l_dual, "kI - A(G*)", &expected)
            {
                return Ok(fail);
            }
            let h = incidence_matrix(g);
            let gram = h.transpose().mul(&h).expect("composable");
            Ok(ctx
                .expect_exact("uniform dual factorization", "L(G*)", &l_dual, "H^T H", &gram)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Theorem4_4 => {
            let Some(k) = g.uniformity() else {
                return Ok(ctx.not_met("instance is not k-uniform"));
            };
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let bound = k as f64 + EIGEN_BOUND_TOLERANCE;
            let a_line = adjacency_matrix(&intersection_graph(g).expect("linear instance"));
            let spec_line = symmetric_eigenvalues_default(&a_line)?;
            if let Some(max) = spec_line.max() {
                if max > bound {
                    return Ok(ctx.fail(
                        format!("max eigenvalue {max} of A(line graph) exceeds k = {k}"),
                        alloc::vec![spec_line.to_string()],
                    ));
                }
            }
            let spec_dual = symmetric_eigenvalues_default(&adjacency_matrix(&incidence_dual(g)))?;
            if let Some(max) = spec_dual.max() {
                if max > bound {
                    return Ok(ctx.fail(
                        format!("max eigenvalue {max} of A(G*) exceeds k = {k}"),
                        alloc::vec![spec_dual.to_string()],
                    ));
                }
            }
            Ok(ctx.pass())
        }
        LawId::Lemma4_5 => {
            let Some(r) = g.regularity() else {
                return Ok(ctx.not_met("instance is not r-regular"));
            };
            let l = laplacian_matrix(g);
            let expected = IntMatrix::identity(g.vertex_count())
                .scale(r as i64)
                .sub(&adjacency_matrix(g))
                .expect("both n x n");
            if let Some(fail) =
                ctx.expect_exact("regular Laplacian", "L(G)", &l, "rI - A(G)", &expected)
            {
                return Ok(fail);
            }
            let h = incidence_matrix(g);
            let gram = h.mul(&h.transpose()).expect("composable");
            Ok(ctx
                .expect_exact("regular factorization", "L(G)", &l, "H H^T", &gram)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Theorem4_6 => {
            let Some(r) = g.regularity() else {
                return Ok(ctx.not_met("instance is not r-regular"));
            };
            let spec = symmetric_eigenvalues_default(&adjacency_matrix(g))?;
            match spec.max() {
                Some(max) if max > r as f64 + EIGEN_BOUND_TOLERANCE => Ok(ctx.fail(
                    format!("max eigenvalue {max} of A(G) exceeds r = {r}"),
                    alloc::vec![spec.to_string()],
                )),
                _ => Ok(ctx.pass()),
            }
        }
        LawId::Lemma4_7 => {
            let spec = symmetric_eigenvalues_default(&laplacian_matrix(g))?;
            let spec_dual =
                symmetric_eigenvalues_default(&laplacian_matrix(&incidence_dual(g)))?;
            Ok(ctx
                .expect_spectra("nonzero Laplacian spectra of G and G*", &spec, &spec_dual, true)
                .unwrap_or_else(|| ctx.pass()))
        }
        LawId::Proposition4_8 => {
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let l_dual = laplacian_matrix(&incidence_dual(g));
            let l_line =
                laplacian_matrix(&intersection_graph(g).expect("linear instance"));
            let trace_dual = l_dual.trace().expect("square");
            let trace_line = l_line.trace().expect("square");
            if trace_dual == trace_line {
                return Ok(ctx.not_met("degree sums of G* and the line graph agree"));
            }
            let spec_dual = symmetric_eigenvalues_default(&l_dual)?;
            let spec_line = symmetric_eigenvalues_default(&l_line)?;
            let (hi, lo, direction) = if trace_dual > trace_line {
                (&spec_dual, &spec_line, "G* side")
            } else {
                (&spec_line, &spec_dual, "line-graph side")
            };
            let witnessed = hi
                .values()
                .iter()
                .zip(lo.values())
                .any(|(a, b)| a - b > -SPECTRUM_PAIR_TOLERANCE);
            if witnessed {
                Ok(ctx.pass())
            } else {
                Ok(ctx.fail(
                    format!(
                        "trace surplus on the {direction} produced no larger sorted eigenvalue"
                    ),
                    alloc::vec![
                        "L(G*) spectrum:".to_string(),
                        spec_dual.to_string(),
                        "L(line graph) spectrum:".to_string(),
                        spec_line.to_string(),
                    ],
                ))
            }
        }
        _ => unreachable!("check_plain only receives hypergraph laws"),
    }
}

fn check_switched(
    law: LawId,
    g: &OrientedHypergraph,
    s: &SwitchingPair,
) -> Result<LawReport, Error> {
    let ctx = Ctx {
        law,
        g: Some(g),
        s: Some(s),
        s2: None,
        d: None,
    };
    match law {
        LawId::Lemma5_1 => {
            let switched = apply_switch(g, s)?;
            let dn = switch_diag_vertex(g, s)?;
            let dm = switch_diag_edge(g, s)?;
            let h = incidence_matrix(g);
            let conj = |left: &IntMatrix, mid: &IntMatrix, right: &IntMatrix| {
                left.mul(mid)
                    .and_then(|x| x.mul(right))
                    .expect("diagonal conjugation dimensions always agree")
            };
            let checks = [
                (
                    "incidence matrix of switched hypergraph",
                    incidence_matrix(&switched),
                    conj(&dn, &h, &dm),
                ),
                (
                    "adjacency matrix of switched hypergraph",
                    adjacency_matrix(&switched),
                    conj(&dn, &adjacency_matrix(g), &dn),
                ),
                (
                    "Laplacian of switched hypergraph",
                    laplacian_matrix(&switched),
                    conj(&dn, &laplacian_matrix(g), &dn),
                ),
            ];
            for (what, lhs, rhs) in &checks {
                if let Some(fail) = ctx.expect_exact(what, "switched", lhs, "conjugated", rhs) {
                    return Ok(fail);
                }
            }
            let dual = incidence_dual(g);
            let sd = s.for_dual();
            let switched_dual = apply_switch(&dual, &sd)?;
            let dxi = switch_diag_vertex(&dual, &sd)?;
            let dzeta = switch_diag_edge(&dual, &sd)?;
            let hd = incidence_matrix(&dual);
            let dual_checks = [
                (
                    "incidence matrix of switched dual",
                    incidence_matrix(&switched_dual),
                    conj(&dxi, &hd, &dzeta),
                ),
                (
                    "adjacency matrix of switched dual",
                    adjacency_matrix(&switched_dual),
                    conj(&dxi, &adjacency_matrix(&dual), &dxi),
                ),
                (
                    "Laplacian of switched dual",
                    laplacian_matrix(&switched_dual),
                    conj(&dxi, &laplacian_matrix(&dual), &dxi),
                ),
            ];
            for (what, lhs, rhs) in &dual_checks {
                if let Some(fail) = ctx.expect_exact(what, "switched", lhs, "conjugated", rhs) {
                    return Ok(fail);
                }
            }
            Ok(ctx.pass())
        }
        LawId::Theorem5_2 => {
            let switched = apply_switch(g, s)?;
            let dual = incidence_dual(g);
            let switched_dual = apply_switch(&dual, &s.for_dual())?;
            let pairs = [
                ("adjacency spectrum", adjacency_matrix(g), adjacency_matrix(&switched)),
                ("Laplacian spectrum", laplacian_matrix(g), laplacian_matrix(&switched)),
                (
                    "dual adjacency spectrum",
                    adjacency_matrix(&dual),
                    adjacency_matrix(&switched_dual),
                ),
                (
                    "dual Laplacian spectrum",
                    laplacian_matrix(&dual),
                    laplacian_matrix(&switched_dual),
                ),
            ];
            for (what, a, b) in &pairs {
                let sa = symmetric_eigenvalues_default(a)?;
                let sb = symmetric_eigenvalues_default(b)?;
                if let Some(fail) = ctx.expect_spectra(what, &sa, &sb, false) {
                    return Ok(fail);
                }
            }
            Ok(ctx.pass())
        }
        LawId::Theorem5_4 => {
            if !g.is_linear() {
                return Ok(ctx.not_met("instance is not linear"));
            }
            let switched = apply_switch(g, s)?;

            // (1) duality and switching commute with swapped roles.
            let lhs = incidence_dual(&switched);
            let rhs = apply_switch(&incidence_dual(g), &s.for_dual())?;
            if let Some(fail) =
                ctx.expect_structural("dual of switched hypergraph", &lhs, &rhs, false)
            {
                return Ok(fail);
            }

            // (2) the strict 2-section switches by (zeta, induced xi).
            let lhs = strict_k_section(&switched, 2).expect("k = 2 is valid");
            let xi_hat = induced_section_switch(g, s.edge_map(), 2)?;
            let section_switch = SwitchingPair::new(s.vertex_map().clone(), xi_hat);
            let rhs = apply_switch(
                &strict_k_section(g, 2).expect("k = 2 is valid"),
                &section_switch,
            )?;
            if let Some(fail) =
                ctx.expect_structural("strict 2-section of switched hypergraph", &lhs, &rhs, false)
            {
                return Ok(fail);
            }

            // (3) the intersection graph switches by (xi, induced zeta).
            let lhs = intersection_graph(&switched).expect("switching preserves membership");
            let zeta_hat = induced_linegraph_switch(g, s.vertex_map())?;
            let line_switch = SwitchingPair::new(
                s.edge_map()
                    .iter()
                    .map(|(e, sign)| (e.clone().into_vertex_id(), *sign))
                    .collect(),
                zeta_hat,
            );
            let rhs = apply_switch(&intersection_graph(g).expect("linear instance"), &line_switch)?;
            Ok(ctx
                .expect_structural("intersection graph of switched hypergraph", &lhs, &rhs, false)
                .unwrap_or_else(|| ctx.pass()))
        }
        _ => unreachable!("check_switched only receives single-switch laws"),
    }
}

fn check_corollary_5_3(
    g: &OrientedHypergraph,
    s1: &SwitchingPair,
    s2: &SwitchingPair,
) -> Result<LawReport, Error> {
    let ctx = Ctx {
        law: LawId::Corollary5_3,
        g: Some(g),
        s: Some(s1),
        s2: Some(s2),
        d: None,
    };
    let switched = apply_switch(g, s1)?;
    let switched_dual = apply_switch(&incidence_dual(g), &s2.for_dual())?;
    let spec = symmetric_eigenvalues_default(&laplacian_matrix(&switched))?;
    let spec_dual = symmetric_eigenvalues_default(&laplacian_matrix(&switched_dual))?;
    Ok(ctx
        .expect_spectra(
            "nonzero Laplacian spectra of independently switched G and G*",
            &spec,
            &spec_dual,
            true,
        )
        .unwrap_or_else(|| ctx.pass()))
}

fn check_design(law: LawId, d: &BlockDesign) -> LawReport {
    let ctx = Ctx {
        law,
        g: None,
        s: None,
        s2: None,
        d: Some(d),
    };
    let p = d.params();
    let expected = IntMatrix::identity(p.v)
        .scale(p.r as i64 - p.lambda as i64)
        .add(&IntMatrix::ones(p.v, p.v).scale(p.lambda as i64))
        .expect("both v x v");
    match law {
        LawId::Theorem6_1 => {
            let l = laplacian_matrix(&d.to_hypergraph());
            ctx.expect_exact(
                "Laplacian of the design hypergraph",
                "L(G)",
                &l,
                "(r - lambda)I + lambda J",
                &expected,
            )
            .unwrap_or_else(|| ctx.pass())
        }
        LawId::Corollary6_2 => {
            let c = d.incidence_matrix();
            let gram = c.mul(&c.transpose()).expect("composable");
            ctx.expect_exact(
                "Gram matrix of the design incidence matrix",
                "C C^T",
                &gram,
                "(r - lambda)I + lambda J",
                &expected,
            )
            .unwrap_or_else(|| ctx.pass())
        }
        _ => unreachable!("check_design only receives design laws"),
    }
}
