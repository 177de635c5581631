//! Line-oriented text formats.
//!
//! Hypergraph documents (`ohg` version 1):
//!
//! ```text
//! ohg 1
//! vertex v1
//! vertex v2
//! edge e1 = v1:+ v2:-
//! ```
//!
//! Block design documents:
//!
//! ```text
//! bibd
//! point 0
//! block b0 = 0 1 3
//! params 7 7 3 3 1
//! ```
//!
//! `#` starts a comment, blank lines are ignored, declarations appear in
//! stored order. Serialization is canonical: vertices first, memberships in
//! vertex order, signs always explicit; parsing a canonical document and
//! serializing it again reproduces it byte for byte.

use ohg_core::designs::{validate_design, BlockDesign, DesignError, DesignParams};
use ohg_core::{OrientedHypergraph, Sign};

/// Syntax error with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn se(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_member(token: &str) -> Result<(&str, Sign), String> {
    let (label, sign) = token
        .rsplit_once(':')
        .ok_or_else(|| format!("expected '<vertex>:<sign>', got '{token}'"))?;
    let sign = match sign {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        other => return Err(format!("bad sign token '{other}' (expected '+' or '-')")),
    };
    Ok((label, sign))
}

pub fn parse_ohg(text: &str) -> Result<OrientedHypergraph, FormatError> {
    let mut builder = OrientedHypergraph::builder();
    let mut saw_header = false;
    for (line, content) in significant_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !saw_header {
            if tokens[0] != "ohg" {
                return Err(se(line, "expected header 'ohg 1'"));
            }
            if tokens.len() != 2 || tokens[1] != "1" {
                return Err(se(
                    line,
                    format!("unsupported ohg version '{}'", tokens[1..].join(" ")),
                ));
            }
            saw_header = true;
            continue;
        }
        match tokens[0] {
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(se(line, "expected 'vertex <label>'"));
                }
                builder
                    .vertex(tokens[1])
                    .map_err(|e| se(line, e.to_string()))?;
            }
            "edge" => {
                if tokens.len() < 3 || tokens[2] != "=" {
                    return Err(se(line, "expected 'edge <label> = <memberships>'"));
                }
                let members: Vec<(&str, Sign)> = tokens[3..]
                    .iter()
                    .map(|t| parse_member(t))
                    .collect::<Result<_, _>>()
                    .map_err(|m| se(line, m))?;
                builder
                    .edge(tokens[1], &members)
                    .map_err(|e| se(line, e.to_string()))?;
            }
            other => {
                return Err(se(line, format!("unknown declaration '{other}'")));
            }
        }
    }
    if !saw_header {
        return Err(se(1, "missing 'ohg 1' header"));
    }
    Ok(builder.build())
}

pub fn serialize_ohg(g: &OrientedHypergraph) -> String {
    let mut out = String::from("ohg 1\n");
    for v in g.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for i in 0..g.edge_count() {
        out.push_str(&format!("edge {} =", g.edge_id_at(i)));
        for &(vi, sign) in g.edge_members_at(i) {
            out.push_str(&format!(" {}:{}", g.vertex_at(vi), sign));
        }
        out.push('\n');
    }
    out
}

/// A parsed but not yet validated design document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDesign {
    pub points: Vec<String>,
    pub blocks: Vec<(String, Vec<String>)>,
    pub declared: Option<DesignParams>,
}

pub fn parse_bibd(text: &str) -> Result<RawDesign, FormatError> {
    let mut raw = RawDesign {
        points: Vec::new(),
        blocks: Vec::new(),
        declared: None,
    };
    let mut saw_header = false;
    for (line, content) in significant_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !saw_header {
            if tokens != ["bibd"] {
                return Err(se(line, "expected header 'bibd'"));
            }
            saw_header = true;
            continue;
        }
        match tokens[0] {
            "point" => {
                if tokens.len() != 2 {
                    return Err(se(line, "expected 'point <label>'"));
                }
                raw.points.push(tokens[1].to_string());
            }
            "block" => {
                if tokens.len() < 3 || tokens[2] != "=" {
                    return Err(se(line, "expected 'block <label> = <points>'"));
                }
                raw.blocks.push((
                    tokens[1].to_string(),
                    tokens[3..].iter().map(|t| t.to_string()).collect(),
                ));
            }
            "params" => {
                if raw.declared.is_some() {
                    return Err(se(line, "duplicate params line"));
                }
                if tokens.len() != 6 {
                    return Err(se(line, "expected 'params v b r k lambda'"));
                }
                let mut values = [0usize; 5];
                for (slot, tok) in values.iter_mut().zip(&tokens[1..]) {
                    *slot = tok
                        .parse()
                        .map_err(|_| se(line, format!("bad parameter '{tok}'")))?;
                }
                raw.declared = Some(DesignParams {
                    v: values[0],
                    b: values[1],
                    r: values[2],
                    k: values[3],
                    lambda: values[4],
                });
            }
            other => {
                return Err(se(line, format!("unknown declaration '{other}'")));
            }
        }
    }
    if !saw_header {
        return Err(se(1, "missing 'bibd' header"));
    }
    Ok(raw)
}

/// Validates a parsed design and cross-checks any declared parameters.
pub fn validate_raw_design(raw: &RawDesign) -> Result<BlockDesign, DesignError> {
    let points: Vec<&str> = raw.points.iter().map(|p| p.as_str()).collect();
    let blocks: Vec<(&str, Vec<&str>)> = raw
        .blocks
        .iter()
        .map(|(l, m)| (l.as_str(), m.iter().map(|p| p.as_str()).collect()))
        .collect();
    let design = validate_design(&points, &blocks)?;
    if let Some(declared) = &raw.declared {
        design.check_declared(declared)?;
    }
    Ok(design)
}

pub fn serialize_bibd(d: &BlockDesign) -> String {
    let mut out = String::from("bibd\n");
    for p in d.points() {
        out.push_str(&format!("point {p}\n"));
    }
    for j in 0..d.block_count() {
        out.push_str(&format!("block {} =", d.block_id_at(j)));
        for &i in d.block_members_at(j) {
            out.push_str(&format!(" {}", d.points()[i]));
        }
        out.push('\n');
    }
    let p = d.params();
    out.push_str(&format!(
        "params {} {} {} {} {}\n",
        p.v, p.b, p.r, p.k, p.lambda
    ));
    out
}

/// Any input document the tools accept.
#[derive(Debug, Clone, PartialEq)]
pub enum InputDoc {
    Hypergraph(OrientedHypergraph),
    Design(BlockDesign),
}

/// What went wrong while loading a document: a syntax error, or a design
/// that parses but is not a balanced incomplete block design.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LoadError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Design(#[from] DesignError),
}

/// Sniffs the header and parses either document kind; designs are also
/// validated.
pub fn load_document(text: &str) -> Result<InputDoc, LoadError> {
    let header = significant_lines(text)
        .next()
        .map(|(_, l)| l.split_whitespace().next().unwrap_or(""))
        .unwrap_or("");
    if header == "bibd" {
        let raw = parse_bibd(text)?;
        Ok(InputDoc::Design(validate_raw_design(&raw)?))
    } else {
        Ok(InputDoc::Hypergraph(parse_ohg(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ohg_core::designs::fano;
    use ohg_core::{EdgeId, VertexId};

    const P3: &str = "ohg 1\nvertex v1\nvertex v2\nvertex v3\nedge e1 = v1:+ v2:+\nedge e2 = v2:+ v3:-\n";

    #[test]
    fn parses_the_p3_fixture() {
        let g = parse_ohg(P3).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        let v3 = VertexId::new("v3").unwrap();
        let e2 = EdgeId::new("e2").unwrap();
        assert_eq!(g.incidence_sign(&v3, &e2).unwrap(), Sign::Minus);
    }

    #[test]
    fn canonical_round_trip_is_byte_exact() {
        assert_eq!(serialize_ohg(&parse_ohg(P3).unwrap()), P3);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a file\n\nohg 1\nvertex a # trailing\n\nedge e = a:+\n";
        let g = parse_ohg(text).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn vertex_only_documents_parse() {
        let g = parse_ohg("ohg 1\nvertex a\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert_eq!(serialize_ohg(&OrientedHypergraph::empty()), "ohg 1\n");
    }

    #[test]
    fn empty_edges_round_trip() {
        let text = "ohg 1\nvertex a\nedge hollow =\n";
        let g = parse_ohg(text).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(serialize_ohg(&g), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_ohg("ohg 1\nvertex a\nedge e = a:+ a:-\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("twice"), "{}", err.message);

        let err = parse_ohg("ohg 2\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("version"));

        let err = parse_ohg("ohg 1\nedge e = ghost:+\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("ghost"));

        let err = parse_ohg("ohg 1\nvertex a\nedge e = a:?\n").unwrap_err();
        assert!(err.message.contains("bad sign"));

        assert!(parse_ohg("").is_err());
        assert!(parse_ohg("vertex a\n").is_err());
    }

    #[test]
    fn dual_of_p3_round_trips() {
        let g = parse_ohg(P3).unwrap();
        let dual = ohg_core::constructions::incidence_dual(&g);
        let text = serialize_ohg(&dual);
        assert_eq!(parse_ohg(&text).unwrap(), dual);
    }

    #[test]
    fn fano_design_round_trips() {
        let d = fano();
        let text = serialize_bibd(&d);
        let raw = parse_bibd(&text).unwrap();
        assert_eq!(raw.declared.unwrap().lambda, 1);
        assert_eq!(validate_raw_design(&raw).unwrap(), d);
        assert_eq!(serialize_bibd(&validate_raw_design(&raw).unwrap()), text);
    }

    #[test]
    fn declared_parameters_are_cross_checked_on_load() {
        let mut text = serialize_bibd(&fano());
        text = text.replace("params 7 7 3 3 1", "params 7 7 3 3 2");
        let raw = parse_bibd(&text).unwrap();
        assert!(matches!(
            validate_raw_design(&raw),
            Err(DesignError::ParamsMismatch { field: "lambda", .. })
        ));
    }

    #[test]
    fn document_sniffing() {
        assert!(matches!(
            load_document(P3).unwrap(),
            InputDoc::Hypergraph(_)
        ));
        assert!(matches!(
            load_document(&serialize_bibd(&fano())).unwrap(),
            InputDoc::Design(_)
        ));
        assert!(matches!(
            load_document("bibd\npoint a\n"),
            Err(LoadError::Design(DesignError::NoBlocks))
        ));
        assert!(matches!(
            load_document("nonsense\n"),
            Err(LoadError::Format(_))
        ));
    }
}
