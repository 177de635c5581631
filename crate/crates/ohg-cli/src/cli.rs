//! Argument parsing and subcommand dispatch for the `ohg` binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 hypothesis not met
//! (including non-linear input to `linegraph` and invalid designs under
//! `bibd check`), 3 law violation with a witness dumped to standard error.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use ohg_core::algebra::{adjacency_matrix, degree_matrix, incidence_matrix, laplacian_matrix};
use ohg_core::constructions::{incidence_dual, intersection_graph, k_section, strict_k_section};
use ohg_core::laws::LawId;
use ohg_core::spectrum::symmetric_eigenvalues_default;
use ohg_core::switching::{apply_switch, SwitchingPair};
use ohg_core::{EdgeId, Error, IntMatrix, OrientedHypergraph, Sign, VertexId};

use crate::format::{
    load_document, parse_bibd, parse_ohg, serialize_bibd, serialize_ohg, validate_raw_design,
    LoadError,
};
use crate::verify::{
    run_verify, Selection, VerifyOptions, EXIT_HYPOTHESIS, EXIT_OK, EXIT_USAGE,
};

const USAGE: &str = "\
usage: ohg <command> [options]

commands:
  info <file>                                  structural summary
  dual <file>                                  incidence dual
  linegraph <file>                             intersection (line) graph; exit 2 on non-linear input
  section -k <K> [--strict] <file>             k-section
  matrix --kind <incidence|adjacency|degree|laplacian> [--dual] <file>
  spectrum --matrix <adjacency|laplacian> [--dual] <file>
  switch [--vertex-switch a=-1,b=+1] [--edge-switch e=-1] <file>
  verify --law <id>|--all [--trials N] [--seed S]
         [--max-vertices n] [--max-edges m] [<file>]
  bibd check <file>                            validate a block design
  bibd fano                                    print the Fano plane

Use '-' as <file> to read standard input. Law ids: lemma-2.1 lemma-2.2
theorem-3.1 corollary-3.3 corollary-3.7 theorem-4.1 corollary-4.2 lemma-4.3
theorem-4.4 lemma-4.5 theorem-4.6 lemma-4.7 proposition-4.8 lemma-5.1
theorem-5.2 corollary-5.3 theorem-5.4 theorem-6.1 corollary-6.2
";

struct ParsedArgs {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positionals: Vec<String>,
}

fn parse_flags(
    args: &[String],
    value_flags: &[&str],
    bool_flags: &[&str],
) -> Result<ParsedArgs, String> {
    let mut parsed = ParsedArgs {
        values: BTreeMap::new(),
        switches: BTreeSet::new(),
        positionals: Vec::new(),
    };
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        if let Some((flag, value)) = arg.split_once('=').filter(|(f, _)| f.starts_with('-')) {
            if !value_flags.contains(&flag) {
                return Err(format!("unknown option '{flag}'"));
            }
            parsed.values.insert(flag.to_string(), value.to_string());
        } else if value_flags.contains(&arg.as_str()) {
            let value = args
                .get(i + 1)
                .ok_or_else(|| format!("option '{arg}' needs a value"))?;
            parsed.values.insert(arg.clone(), value.clone());
            i += 1;
        } else if bool_flags.contains(&arg.as_str()) {
            parsed.switches.insert(arg.clone());
        } else if arg.starts_with("--") {
            return Err(format!("unknown option '{arg}'"));
        } else {
            parsed.positionals.push(arg.clone());
        }
        i += 1;
    }
    Ok(parsed)
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read '{path}': {e}"))
    }
}

fn usage_error(err: &mut dyn Write, message: &str) -> i32 {
    let _ = writeln!(err, "error: {message}");
    let _ = err.write_all(USAGE.as_bytes());
    EXIT_USAGE
}

fn load_hypergraph(path: &str, err: &mut dyn Write) -> Result<OrientedHypergraph, i32> {
    let text = read_input(path).map_err(|m| usage_error(err, &m))?;
    parse_ohg(&text).map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(command) = args.first() else {
        return usage_error(err, "missing command");
    };
    let rest = &args[1..];
    match command.as_str() {
        "info" => cmd_info(rest, out, err),
        "dual" => cmd_dual(rest, out, err),
        "linegraph" => cmd_linegraph(rest, out, err),
        "section" => cmd_section(rest, out, err),
        "matrix" => cmd_matrix(rest, out, err),
        "spectrum" => cmd_spectrum(rest, out, err),
        "switch" => cmd_switch(rest, out, err),
        "verify" => cmd_verify(rest, out, err),
        "bibd" => cmd_bibd(rest, out, err),
        "help" | "--help" | "-h" => {
            let _ = out.write_all(USAGE.as_bytes());
            EXIT_OK
        }
        other => usage_error(err, &format!("unknown command '{other}'")),
    }
}

fn single_file(args: &[String], err: &mut dyn Write) -> Result<String, i32> {
    let parsed = parse_flags(args, &[], &[]).map_err(|m| usage_error(err, &m))?;
    match parsed.positionals.as_slice() {
        [file] => Ok(file.clone()),
        _ => Err(usage_error(err, "expected exactly one input file")),
    }
}

fn cmd_info(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let file = match single_file(args, err) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let g = match load_hypergraph(&file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let show = |value: Option<usize>| value.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    let _ = writeln!(out, "edges {}", g.edge_count());
    let _ = writeln!(out, "max-degree {}", show(g.max_degree().ok()));
    let _ = writeln!(out, "rank {}", g.rank());
    let _ = writeln!(out, "linear {}", if g.is_linear() { "yes" } else { "no" });
    let _ = writeln!(out, "uniform {}", show(g.uniformity()));
    let _ = writeln!(out, "regular {}", show(g.regularity()));
    EXIT_OK
}

fn cmd_dual(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let file = match single_file(args, err) {
        Ok(f) => f,
        Err(code) => return code,
    };
    match load_hypergraph(&file, err) {
        Ok(g) => {
            let _ = out.write_all(serialize_ohg(&incidence_dual(&g)).as_bytes());
            EXIT_OK
        }
        Err(code) => code,
    }
}

fn cmd_linegraph(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let file = match single_file(args, err) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let g = match load_hypergraph(&file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match intersection_graph(&g) {
        Ok(lg) => {
            let _ = out.write_all(serialize_ohg(&lg).as_bytes());
            EXIT_OK
        }
        Err(e @ Error::NotLinear { .. }) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_HYPOTHESIS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_section(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = match parse_flags(args, &["-k"], &["--strict"]) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    let Some(k_raw) = parsed.values.get("-k") else {
        return usage_error(err, "section needs -k <K>");
    };
    let Ok(k) = k_raw.parse::<usize>() else {
        return usage_error(err, &format!("bad section size '{k_raw}'"));
    };
    let [file] = parsed.positionals.as_slice() else {
        return usage_error(err, "expected exactly one input file");
    };
    let g = match load_hypergraph(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let section = if parsed.switches.contains("--strict") {
        strict_k_section(&g, k)
    } else {
        k_section(&g, k)
    };
    match section {
        Ok(s) => {
            let _ = out.write_all(serialize_ohg(&s).as_bytes());
            EXIT_OK
        }
        Err(e) => usage_error(err, &e.to_string()),
    }
}

fn hypergraph_matrix(g: &OrientedHypergraph, kind: &str) -> Option<IntMatrix> {
    match kind {
        "incidence" => Some(incidence_matrix(g)),
        "adjacency" => Some(adjacency_matrix(g)),
        "degree" => Some(degree_matrix(g)),
        "laplacian" => Some(laplacian_matrix(g)),
        _ => None,
    }
}

fn cmd_matrix(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = match parse_flags(args, &["--kind"], &["--dual"]) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    let Some(kind) = parsed.values.get("--kind") else {
        return usage_error(err, "matrix needs --kind <incidence|adjacency|degree|laplacian>");
    };
    let [file] = parsed.positionals.as_slice() else {
        return usage_error(err, "expected exactly one input file");
    };
    let mut g = match load_hypergraph(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if parsed.switches.contains("--dual") {
        g = incidence_dual(&g);
    }
    match hypergraph_matrix(&g, kind) {
        Some(m) => {
            let _ = writeln!(out, "{m}");
            EXIT_OK
        }
        None => usage_error(err, &format!("unknown matrix kind '{kind}'")),
    }
}

fn cmd_spectrum(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = match parse_flags(args, &["--matrix"], &["--dual"]) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    let Some(kind) = parsed.values.get("--matrix") else {
        return usage_error(err, "spectrum needs --matrix <adjacency|laplacian>");
    };
    let [file] = parsed.positionals.as_slice() else {
        return usage_error(err, "expected exactly one input file");
    };
    let mut g = match load_hypergraph(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if parsed.switches.contains("--dual") {
        g = incidence_dual(&g);
    }
    let matrix = match kind.as_str() {
        "adjacency" => adjacency_matrix(&g),
        "laplacian" => laplacian_matrix(&g),
        other => return usage_error(err, &format!("unknown spectrum matrix '{other}'")),
    };
    match symmetric_eigenvalues_default(&matrix) {
        Ok(spec) => {
            if !spec.is_empty() {
                let _ = writeln!(out, "{spec}");
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_switch_spec(spec: &str) -> Result<Vec<(String, Sign)>, String> {
    let mut out = Vec::new();
    for item in spec.split(',') {
        if item.is_empty() {
            continue;
        }
        let (label, value) = item
            .rsplit_once('=')
            .ok_or_else(|| format!("expected '<label>=+1' or '<label>=-1', got '{item}'"))?;
        let sign = match value {
            "+1" => Sign::Plus,
            "-1" => Sign::Minus,
            other => return Err(format!("bad switch value '{other}' (expected +1 or -1)")),
        };
        out.push((label.to_string(), sign));
    }
    Ok(out)
}

fn cmd_switch(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = match parse_flags(args, &["--vertex-switch", "--edge-switch"], &[]) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    let [file] = parsed.positionals.as_slice() else {
        return usage_error(err, "expected exactly one input file");
    };
    let g = match load_hypergraph(file, err) {
        Ok(g) => g,
        Err(code) => return code,
    };
    // The CLI completes partial switch lists to total maps; unlisted
    // elements default to +1 here, never in the library.
    let mut vertex: BTreeMap<VertexId, Sign> = g
        .vertices()
        .iter()
        .map(|v| (v.clone(), Sign::Plus))
        .collect();
    let mut edge: BTreeMap<EdgeId, Sign> =
        g.edge_ids().map(|e| (e.clone(), Sign::Plus)).collect();
    if let Some(spec) = parsed.values.get("--vertex-switch") {
        let entries = match parse_switch_spec(spec) {
            Ok(entries) => entries,
            Err(m) => return usage_error(err, &m),
        };
        for (label, sign) in entries {
            let Ok(id) = VertexId::new(label.as_str()) else {
                return usage_error(err, &format!("bad vertex label '{label}'"));
            };
            if !vertex.contains_key(&id) {
                return usage_error(err, &format!("unknown vertex '{label}'"));
            }
            vertex.insert(id, sign);
        }
    }
    if let Some(spec) = parsed.values.get("--edge-switch") {
        let entries = match parse_switch_spec(spec) {
            Ok(entries) => entries,
            Err(m) => return usage_error(err, &m),
        };
        for (label, sign) in entries {
            let Ok(id) = EdgeId::new(label.as_str()) else {
                return usage_error(err, &format!("bad edge label '{label}'"));
            };
            if !edge.contains_key(&id) {
                return usage_error(err, &format!("unknown edge '{label}'"));
            }
            edge.insert(id, sign);
        }
    }
    match apply_switch(&g, &SwitchingPair::new(vertex, edge)) {
        Ok(switched) => {
            let _ = out.write_all(serialize_ohg(&switched).as_bytes());
            EXIT_OK
        }
        Err(e) => usage_error(err, &e.to_string()),
    }
}

fn cmd_verify(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let parsed = match parse_flags(
        args,
        &["--law", "--trials", "--seed", "--max-vertices", "--max-edges"],
        &["--all"],
    ) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    let selection = match (parsed.values.get("--law"), parsed.switches.contains("--all")) {
        (Some(_), true) => return usage_error(err, "choose either --law <id> or --all"),
        (Some(id), false) => match LawId::parse(id) {
            Ok(law) => Selection::One(law),
            Err(e) => return usage_error(err, &e.to_string()),
        },
        (None, true) => Selection::All,
        (None, false) => return usage_error(err, "verify needs --law <id> or --all"),
    };
    let mut opts = VerifyOptions {
        selection,
        ..VerifyOptions::default()
    };
    macro_rules! numeric {
        ($flag:expr, $target:expr, $ty:ty) => {
            if let Some(raw) = parsed.values.get($flag) {
                match raw.parse::<$ty>() {
                    Ok(value) => $target = value,
                    Err(_) => {
                        return usage_error(err, &format!("bad value '{raw}' for {}", $flag))
                    }
                }
            }
        };
    }
    numeric!("--trials", opts.trials, usize);
    numeric!("--seed", opts.seed, u64);
    numeric!("--max-vertices", opts.max_vertices, usize);
    numeric!("--max-edges", opts.max_edges, usize);
    if opts.trials == 0 {
        return usage_error(err, "--trials must be at least 1");
    }
    let doc = match parsed.positionals.as_slice() {
        [] => None,
        [file] => {
            let text = match read_input(file) {
                Ok(text) => text,
                Err(m) => return usage_error(err, &m),
            };
            match load_document(&text) {
                Ok(doc) => Some(doc),
                Err(LoadError::Format(e)) => return usage_error(err, &e.to_string()),
                Err(LoadError::Design(e)) => {
                    let _ = writeln!(err, "invalid design: {e}");
                    return EXIT_HYPOTHESIS;
                }
            }
        }
        _ => return usage_error(err, "expected at most one input file"),
    };
    match run_verify(&opts, doc.as_ref(), out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_bibd(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match args.first().map(|s| s.as_str()) {
        Some("fano") => {
            let _ = out.write_all(serialize_bibd(&ohg_core::designs::fano()).as_bytes());
            EXIT_OK
        }
        Some("check") => {
            let [file] = &args[1..] else {
                return usage_error(err, "expected 'bibd check <file>'");
            };
            let text = match read_input(file) {
                Ok(text) => text,
                Err(m) => return usage_error(err, &m),
            };
            let raw = match parse_bibd(&text) {
                Ok(raw) => raw,
                Err(e) => return usage_error(err, &e.to_string()),
            };
            match validate_raw_design(&raw) {
                Ok(design) => {
                    let p = design.params();
                    let _ = writeln!(
                        out,
                        "valid bibd params {} {} {} {} {}",
                        p.v, p.b, p.r, p.k, p.lambda
                    );
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "invalid design: {e}");
                    EXIT_HYPOTHESIS
                }
            }
        }
        _ => usage_error(err, "expected 'bibd check <file>' or 'bibd fano'"),
    }
}
