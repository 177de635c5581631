//! The law-verification harness behind `ohg verify`.
//!
//! Laws run either on a fixed document or on seeded random instances. Each
//! trial gets its own sub-seed from a per-law stream, and switching
//! functions are drawn from a stream keyed by that sub-seed alone, so a
//! failure witness can always be replayed with `--seed <trial seed>` on the
//! written witness file. Instances that miss a law's hypothesis are
//! resampled, up to one hundred attempts per requested trial.

use std::io::{self, Write};

use ohg_core::designs::{validate_design, BlockDesign};
use ohg_core::laws::{check, LawId, LawInput, LawInputKind, LawReport, Witness};
use ohg_core::{OrientedHypergraph, Sign};

use crate::format::{serialize_bibd, serialize_ohg, InputDoc};
use crate::generate::{
    design_for_trial, generate, random_switching, switching_stream, GeneratorConfig, SplitMix64,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    One(LawId),
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub selection: Selection,
    pub trials: usize,
    pub seed: u64,
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            selection: Selection::All,
            trials: 100,
            seed: 0,
            max_vertices: 10,
            max_edges: 8,
        }
    }
}

enum Outcome {
    Pass {
        trials: usize,
    },
    NotMet {
        satisfied: usize,
        wanted: usize,
        attempts: usize,
        reason: Option<String>,
    },
    Fail {
        message: String,
    },
}

/// Runs the selected laws and writes one line per law. Returns the worst
/// exit code encountered.
pub fn run_verify(
    opts: &VerifyOptions,
    file: Option<&InputDoc>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let laws: Vec<LawId> = match opts.selection {
        Selection::All => LawId::ALL.to_vec(),
        Selection::One(law) => vec![law],
    };
    let mut passes = 0usize;
    let mut misses = 0usize;
    let mut failures = 0usize;
    for &law in &laws {
        let outcome = match file {
            Some(doc) => run_on_file(law, doc, opts, err)?,
            None => run_generated(law, opts, err)?,
        };
        match outcome {
            Outcome::Pass { trials } => {
                passes += 1;
                writeln!(out, "{} pass {}/{}", law, trials, trials)?;
            }
            Outcome::NotMet {
                satisfied,
                wanted,
                attempts,
                reason,
            } => {
                misses += 1;
                match reason {
                    Some(reason) => {
                        writeln!(out, "{law} hypothesis-not-met ({reason})")?;
                    }
                    None => {
                        writeln!(
                            out,
                            "{law} hypothesis-not-met {satisfied}/{wanted} (after {attempts} attempts)"
                        )?;
                    }
                }
            }
            Outcome::Fail { message } => {
                failures += 1;
                writeln!(out, "{law} FAIL ({message})")?;
            }
        }
    }
    if laws.len() > 1 {
        writeln!(
            out,
            "verify: {} laws, {} pass, {} hypothesis-not-met, {} fail",
            laws.len(),
            passes,
            misses,
            failures
        )?;
    }
    Ok(if failures > 0 {
        EXIT_VIOLATION
    } else if misses > 0 {
        EXIT_HYPOTHESIS
    } else {
        EXIT_OK
    })
}

/// Per-law trial stream: advancing the base stream once per preceding law
/// keeps the laws independent of each other.
fn law_stream(seed: u64, law: LawId) -> SplitMix64 {
    let index = LawId::ALL
        .iter()
        .position(|l| *l == law)
        .expect("every law is listed");
    let mut base = SplitMix64::new(seed);
    let mut salt = 0;
    for _ in 0..=index {
        salt = base.next_u64();
    }
    SplitMix64::new(salt)
}

/// Generator configuration targeting the law's hypothesis. Uniformities
/// cycle through k = 2, 3, 4 and regularities through r = 2, 3 as trials
/// accumulate.
fn config_for_law(law: LawId, trial: usize, trial_seed: u64, opts: &VerifyOptions) -> GeneratorConfig {
    let mut config = GeneratorConfig::new(trial_seed);
    config.max_vertices = opts.max_vertices;
    config.max_edges = opts.max_edges;
    config.edge_size_range = (0, opts.max_vertices);
    let c = &mut config.constraints;
    match law {
        LawId::Theorem3_1 | LawId::Corollary4_2 | LawId::Proposition4_8 | LawId::Theorem5_4 => {
            c.linear = true;
            config.edge_size_range = (0, 3);
        }
        LawId::Corollary3_3 => {
            c.k_uniform = Some(2);
            c.linear = true;
        }
        LawId::Corollary3_7 => {
            c.r_regular = Some(2);
            c.linear = true;
        }
        LawId::Lemma4_3 => {
            c.k_uniform = Some(2 + trial % 3);
        }
        LawId::Theorem4_4 => {
            c.k_uniform = Some(2 + trial % 3);
            c.linear = true;
        }
        LawId::Lemma4_5 | LawId::Theorem4_6 => {
            c.r_regular = Some(2 + trial % 2);
        }
        _ => {}
    }
    config
}

/// Checks the law on `g`, drawing any needed switching functions from the
/// stream keyed by `switch_seed`.
fn check_with_switchings(
    law: LawId,
    g: &OrientedHypergraph,
    switch_seed: u64,
) -> Result<LawReport, ohg_core::Error> {
    match law.input_kind() {
        LawInputKind::Hypergraph => check(law, LawInput::Hypergraph(g)),
        LawInputKind::Switched | LawInputKind::DoublySwitched => {
            let mut rng = switching_stream(switch_seed);
            let s1 = random_switching(g, &mut rng);
            let s2 = random_switching(g, &mut rng);
            check(law, LawInput::DoublySwitched(g, &s1, &s2))
        }
        LawInputKind::Design => unreachable!("design laws never draw switchings"),
    }
}

fn run_generated(law: LawId, opts: &VerifyOptions, err: &mut dyn Write) -> io::Result<Outcome> {
    if law.input_kind() == LawInputKind::Design {
        for trial in 0..opts.trials {
            let design = design_for_trial(trial);
            let report =
                check(law, LawInput::Design(&design)).expect("design law accepts a design");
            if report.failed() {
                return fail_with_witness(law, &report, None, err);
            }
        }
        return Ok(Outcome::Pass {
            trials: opts.trials,
        });
    }

    let mut master = law_stream(opts.seed, law);
    let mut satisfied = 0usize;
    let mut attempts = 0usize;
    let cap = opts.trials.saturating_mul(100).max(1);
    while satisfied < opts.trials && attempts < cap {
        attempts += 1;
        let trial_seed = master.next_u64();
        let config = config_for_law(law, satisfied, trial_seed, opts);
        let Ok(g) = generate(&config) else { continue };
        let report = match check_with_switchings(law, &g, trial_seed) {
            Ok(report) => report,
            Err(e) => {
                writeln!(err, "law {law} broke down on a generated instance: {e}")?;
                return Ok(Outcome::Fail {
                    message: e.to_string(),
                });
            }
        };
        if !report.hypothesis_met() {
            continue;
        }
        if report.failed() {
            return fail_with_witness(law, &report, Some(trial_seed), err);
        }
        satisfied += 1;
    }
    if satisfied < opts.trials {
        Ok(Outcome::NotMet {
            satisfied,
            wanted: opts.trials,
            attempts,
            reason: None,
        })
    } else {
        Ok(Outcome::Pass {
            trials: opts.trials,
        })
    }
}

fn run_on_file(
    law: LawId,
    doc: &InputDoc,
    opts: &VerifyOptions,
    err: &mut dyn Write,
) -> io::Result<Outcome> {
    if law.input_kind() == LawInputKind::Design {
        let design = match doc {
            InputDoc::Design(d) => d.clone(),
            InputDoc::Hypergraph(g) => match design_view(g) {
                Ok(d) => d,
                Err(reason) => {
                    return Ok(Outcome::NotMet {
                        satisfied: 0,
                        wanted: 1,
                        attempts: 1,
                        reason: Some(reason),
                    })
                }
            },
        };
        let report = check(law, LawInput::Design(&design)).expect("design law accepts a design");
        return if report.failed() {
            fail_with_witness(law, &report, None, err)
        } else {
            Ok(Outcome::Pass { trials: 1 })
        };
    }

    let g = match doc {
        InputDoc::Hypergraph(g) => g.clone(),
        InputDoc::Design(d) => d.to_hypergraph(),
    };
    let report = match check_with_switchings(law, &g, opts.seed) {
        Ok(report) => report,
        Err(e) => {
            writeln!(err, "law {law} broke down on the given instance: {e}")?;
            return Ok(Outcome::Fail {
                message: e.to_string(),
            });
        }
    };
    if let ohg_core::laws::HypothesisStatus::NotMet(reason) = &report.hypothesis {
        return Ok(Outcome::NotMet {
            satisfied: 0,
            wanted: 1,
            attempts: 1,
            reason: Some(reason.clone()),
        });
    }
    if report.failed() {
        fail_with_witness(law, &report, Some(opts.seed), err)
    } else {
        Ok(Outcome::Pass { trials: 1 })
    }
}

/// Reads an all-positive hypergraph as a block design, if it is one.
fn design_view(g: &OrientedHypergraph) -> Result<BlockDesign, String> {
    if g.incidences().iter().any(|i| i.sign == Sign::Minus) {
        return Err("instance has negative incidences, so it is not a design".to_string());
    }
    let points: Vec<&str> = g.vertices().iter().map(|v| v.as_str()).collect();
    let labels: Vec<String> = g.edge_ids().map(|e| e.as_str().to_string()).collect();
    let member_labels: Vec<Vec<&str>> = (0..g.edge_count())
        .map(|i| {
            g.edge_members_at(i)
                .iter()
                .map(|&(vi, _)| g.vertex_at(vi).as_str())
                .collect()
        })
        .collect();
    let blocks: Vec<(&str, Vec<&str>)> = labels
        .iter()
        .zip(&member_labels)
        .map(|(l, m)| (l.as_str(), m.clone()))
        .collect();
    validate_design(&points, &blocks).map_err(|e| e.to_string())
}

fn fail_with_witness(
    law: LawId,
    report: &LawReport,
    trial_seed: Option<u64>,
    err: &mut dyn Write,
) -> io::Result<Outcome> {
    let witness = report.witness().expect("failed reports carry a witness");
    let path = write_witness_file(std::path::Path::new("."), law, witness, trial_seed)?;
    writeln!(err, "law {law} failed: {}", witness.message)?;
    for line in &report.details {
        writeln!(err, "{line}")?;
    }
    writeln!(err, "witness written to {path}")?;
    Ok(Outcome::Fail {
        message: witness.message.clone(),
    })
}

/// Serializes the witness into `dir` so the failure can be replayed with
/// `verify --law <id> [--seed <seed>] <file>`.
fn write_witness_file(
    dir: &std::path::Path,
    law: LawId,
    witness: &Witness,
    trial_seed: Option<u64>,
) -> io::Result<String> {
    let (name, body) = if let Some(design) = &witness.design {
        (format!("witness-{law}.bibd"), serialize_bibd(design))
    } else if let Some(instance) = &witness.instance {
        (format!("witness-{law}.ohg"), serialize_ohg(instance))
    } else {
        (format!("witness-{law}.txt"), String::new())
    };
    let mut content = String::new();
    content.push_str(&format!("# law: {law}\n"));
    content.push_str(&format!("# {}\n", witness.message));
    match trial_seed {
        Some(seed) => content.push_str(&format!(
            "# replay: ohg verify --law {law} --seed {seed} {name}\n"
        )),
        None => content.push_str(&format!("# replay: ohg verify --law {law} {name}\n")),
    }
    content.push_str(&body);
    std::fs::write(dir.join(&name), &content)?;
    Ok(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_ohg;

    const P3: &str =
        "ohg 1\nvertex v1\nvertex v2\nvertex v3\nedge e1 = v1:+ v2:+\nedge e2 = v2:+ v3:-\n";

    fn run_to_string(opts: &VerifyOptions, file: Option<&InputDoc>) -> (String, i32) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_verify(opts, file, &mut out, &mut err).unwrap();
        (String::from_utf8(out).unwrap(), code)
    }

    #[test]
    fn single_law_on_a_file_passes() {
        let doc = InputDoc::Hypergraph(parse_ohg(P3).unwrap());
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Lemma2_2),
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, Some(&doc));
        assert_eq!(code, EXIT_OK);
        assert_eq!(output, "lemma-2.2 pass 1/1\n");
    }

    #[test]
    fn hypothesis_misses_exit_with_code_two() {
        // P3 is not regular, so lemma-4.5 does not apply.
        let doc = InputDoc::Hypergraph(parse_ohg(P3).unwrap());
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Lemma4_5),
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, Some(&doc));
        assert_eq!(code, EXIT_HYPOTHESIS);
        assert!(output.contains("hypothesis-not-met"), "{output}");
    }

    #[test]
    fn generated_trials_are_deterministic() {
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Theorem4_1),
            trials: 20,
            seed: 11,
            ..VerifyOptions::default()
        };
        let (first, code) = run_to_string(&opts, None);
        assert_eq!(code, EXIT_OK);
        let (second, _) = run_to_string(&opts, None);
        assert_eq!(first, second);
        assert_eq!(first, "theorem-4.1 pass 20/20\n");
    }

    #[test]
    fn design_laws_run_on_the_catalog() {
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Theorem6_1),
            trials: 12,
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, None);
        assert_eq!(code, EXIT_OK);
        assert_eq!(output, "theorem-6.1 pass 12/12\n");
    }

    #[test]
    fn switching_laws_run_on_generated_triples() {
        for law in [LawId::Lemma5_1, LawId::Theorem5_2, LawId::Corollary5_3, LawId::Theorem5_4] {
            let opts = VerifyOptions {
                selection: Selection::One(law),
                trials: 10,
                seed: 3,
                ..VerifyOptions::default()
            };
            let (output, code) = run_to_string(&opts, None);
            assert_eq!(code, EXIT_OK, "{law}: {output}");
        }
    }

    #[test]
    fn design_file_feeds_hypergraph_laws() {
        let doc = InputDoc::Design(ohg_core::designs::fano());
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Theorem4_6),
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, Some(&doc));
        assert_eq!(code, EXIT_OK, "{output}");
    }

    #[test]
    fn witness_files_are_replayable_fixtures() {
        let g = parse_ohg(P3).unwrap();
        let witness = Witness {
            message: "fabricated for the writer test".to_string(),
            instance: Some(g.clone()),
            design: None,
            switch: None,
            switch_second: None,
        };
        let dir = std::env::temp_dir().join(format!("ohg-witness-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let name = write_witness_file(&dir, LawId::Lemma5_1, &witness, Some(99)).unwrap();
        assert_eq!(name, "witness-lemma-5.1.ohg");
        let content = std::fs::read_to_string(dir.join(&name)).unwrap();
        assert!(content.contains("# replay: ohg verify --law lemma-5.1 --seed 99"));
        // Comments do not disturb parsing, and the instance survives.
        assert_eq!(parse_ohg(&content).unwrap(), g);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn hypergraph_file_feeds_design_laws_when_all_positive() {
        let doc = InputDoc::Hypergraph(ohg_core::designs::fano().to_hypergraph());
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Corollary6_2),
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, Some(&doc));
        assert_eq!(code, EXIT_OK, "{output}");

        // P3 has a negative incidence: the design laws do not apply.
        let doc = InputDoc::Hypergraph(parse_ohg(P3).unwrap());
        let opts = VerifyOptions {
            selection: Selection::One(LawId::Theorem6_1),
            ..VerifyOptions::default()
        };
        let (output, code) = run_to_string(&opts, Some(&doc));
        assert_eq!(code, EXIT_HYPOTHESIS);
        assert!(output.contains("negative incidences"), "{output}");
    }
}
