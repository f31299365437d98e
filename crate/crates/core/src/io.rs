//! Instance and certificate files.
//!
//! Both are JSON documents carrying a `format` tag and a schema `version`.
//! Emission is canonical: the same data always produces the same bytes.
//! Darts are written as `[edge, end, at_dummy]` with `at_dummy` 0 or 1 and a
//! `null` guest marks a discarded host edge.

use crate::certificate::{validate_certificate, CertificateViolation, PackingCertificate, Provenance};
use crate::drawing::{Dart, EdgeId, EdgeLabel, HostEdge, OnePlaneDrawing};
use crate::graph::{GraphError, GuestGraph, GuestKind, Vertex};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write as _;
use thiserror::Error;

pub const INSTANCE_FORMAT: &str = "onepack-instance";
pub const CERTIFICATE_FORMAT: &str = "onepack-certificate";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("expected a '{expected}' document, found '{found}'")]
    WrongFormat { expected: String, found: String },
    #[error("schema version {found} is not supported (expected {expected})")]
    SchemaVersionMismatch { found: u32, expected: u32 },
    #[error("field '{field}': {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("certificate is invalid: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<CertificateViolation>),
}

fn syntax(e: serde_json::Error) -> IoError {
    IoError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GuestRecord {
    pub kind: GuestKind,
    pub edges: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format: String,
    pub version: u32,
    pub n: usize,
    pub guests: Vec<GuestRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceBody {
    n: usize,
    guests: Vec<GuestRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    ends: [Vertex; 2],
    guest: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    format: String,
    version: u32,
    instance: InstanceBody,
    mappings: Vec<Vec<Vertex>>,
    host_edges: Vec<EdgeRecord>,
    crossings: Vec<[EdgeId; 2]>,
    rotation: Vec<Vec<[usize; 3]>>,
    intermediate: bool,
    crossing_count: usize,
    provenance: Provenance,
}

fn check_header(format: &str, version: u32, expected: &str) -> Result<(), IoError> {
    if format != expected {
        return Err(IoError::WrongFormat { expected: expected.into(), found: format.into() });
    }
    if version != SCHEMA_VERSION {
        return Err(IoError::SchemaVersionMismatch { found: version, expected: SCHEMA_VERSION });
    }
    Ok(())
}

fn guests_from(n: usize, records: &[GuestRecord]) -> Result<Vec<GuestGraph>, IoError> {
    records.iter().map(|g| Ok(GuestGraph::new(n, g.edges.clone(), g.kind)?)).collect()
}

fn records_of(guests: &[GuestGraph]) -> Vec<GuestRecord> {
    guests.iter().map(|g| GuestRecord { kind: g.kind(), edges: g.edges().to_vec() }).collect()
}

/// Reads an instance document with its metadata.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile, IoError> {
    let f: InstanceFile = serde_json::from_str(text).map_err(syntax)?;
    check_header(&f.format, f.version, INSTANCE_FORMAT)?;
    Ok(f)
}

/// Guests of an instance document, each checked against its declared kind.
pub fn parse_instance(text: &str) -> Result<Vec<GuestGraph>, IoError> {
    let f = parse_instance_file(text)?;
    guests_from(f.n, &f.guests)
}

pub fn emit_instance(guests: &[GuestGraph], name: Option<&str>) -> String {
    let n = guests.first().map_or(0, |g| g.n());
    let f = InstanceFile {
        format: INSTANCE_FORMAT.into(),
        version: SCHEMA_VERSION,
        n,
        guests: records_of(guests),
        name: name.map(str::to_string),
        source: None,
    };
    canonical(&serde_json::to_value(f).expect("instance serializes"))
}

/// Reads a plain edge list: one `a b` pair per line, `#` comments, and an
/// optional `n <count>` line for isolated trailing vertices.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<[Vertex; 2]>), IoError> {
    let mut n = 0;
    let mut declared = None;
    let mut edges = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |m: &str| IoError::Syntax { line: no + 1, column: 1, message: m.to_string() };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() == 2 && words[0] == "n" {
            declared = Some(words[1].parse::<usize>().map_err(|_| bad("bad vertex count"))?);
            continue;
        }
        if words.len() != 2 {
            return Err(bad("expected two vertex numbers"));
        }
        let a: Vertex = words[0].parse().map_err(|_| bad("bad vertex number"))?;
        let b: Vertex = words[1].parse().map_err(|_| bad("bad vertex number"))?;
        n = n.max(a + 1).max(b + 1);
        edges.push([a, b]);
    }
    if let Some(d) = declared {
        if d < n {
            return Err(IoError::Field { field: "n".into(), message: format!("{d} is smaller than a used vertex") });
        }
        n = d;
    }
    Ok((n, edges))
}

fn dart_record(d: Dart) -> [usize; 3] {
    [d.edge, usize::from(d.end), usize::from(d.at_dummy)]
}

fn dart_of(r: [usize; 3]) -> Result<Dart, IoError> {
    if r[1] > 1 || r[2] > 1 {
        return Err(IoError::Field { field: "rotation".into(), message: format!("bad dart {r:?}") });
    }
    Ok(Dart { edge: r[0], end: r[1] as u8, at_dummy: r[2] == 1 })
}

/// Canonical text of a certificate; refuses invalid certificates.
pub fn emit_certificate(c: &PackingCertificate) -> Result<String, IoError> {
    let bad = validate_certificate(c);
    if !bad.is_empty() {
        return Err(IoError::Invalid(bad));
    }
    Ok(emit_certificate_unchecked(c))
}

/// Canonical text without validation, for debugging and fuzzing.
pub fn emit_certificate_unchecked(c: &PackingCertificate) -> String {
    let dr = &c.drawing;
    let f = CertificateFile {
        format: CERTIFICATE_FORMAT.into(),
        version: SCHEMA_VERSION,
        instance: InstanceBody { n: c.instance.first().map_or(dr.n, |g| g.n()), guests: records_of(&c.instance) },
        mappings: c.mappings.clone(),
        host_edges: dr
            .edges
            .iter()
            .map(|e| EdgeRecord {
                ends: e.ends,
                guest: match e.label {
                    EdgeLabel::Guest(g) => Some(g),
                    EdgeLabel::Discard => None,
                },
            })
            .collect(),
        crossings: dr.crossings.clone(),
        rotation: dr.rotation.iter().map(|r| r.iter().map(|&d| dart_record(d)).collect()).collect(),
        intermediate: dr.intermediate,
        crossing_count: dr.crossing_count(),
        provenance: c.provenance.clone(),
    };
    canonical(&serde_json::to_value(f).expect("certificate serializes"))
}

/// Reads a certificate without validating it.
pub fn parse_certificate_unchecked(text: &str) -> Result<PackingCertificate, IoError> {
    let f: CertificateFile = serde_json::from_str(text).map_err(syntax)?;
    check_header(&f.format, f.version, CERTIFICATE_FORMAT)?;
    if f.crossing_count != f.crossings.len() {
        return Err(IoError::Field {
            field: "crossing_count".into(),
            message: format!("{} stated, {} listed", f.crossing_count, f.crossings.len()),
        });
    }
    let instance = guests_from(f.instance.n, &f.instance.guests)?;
    let edges = f
        .host_edges
        .iter()
        .map(|e| HostEdge { ends: e.ends, label: e.guest.map_or(EdgeLabel::Discard, EdgeLabel::Guest) })
        .collect();
    let rotation = f
        .rotation
        .iter()
        .map(|r| r.iter().map(|&d| dart_of(d)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let drawing = OnePlaneDrawing { n: f.instance.n, edges, crossings: f.crossings, rotation, intermediate: f.intermediate };
    Ok(PackingCertificate { instance, mappings: f.mappings, drawing, provenance: f.provenance })
}

/// Reads and validates a certificate.
pub fn parse_certificate(text: &str) -> Result<PackingCertificate, IoError> {
    let c = parse_certificate_unchecked(text)?;
    let bad = validate_certificate(&c);
    if bad.is_empty() {
        Ok(c)
    } else {
        Err(IoError::Invalid(bad))
    }
}

/// Deterministic layout: objects one key per line, short scalar arrays and
/// arrays of short arrays kept on one line per element.
pub fn canonical(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Object(m) if !m.is_empty() => None,
        Value::Array(a) if a.iter().any(|x| matches!(x, Value::Array(_) | Value::Object(_))) => {
            let parts: Option<Vec<String>> = a.iter().map(inline).collect();
            let s = format!("[{}]", parts?.join(", "));
            (s.len() <= 80).then_some(s)
        }
        _ => Some(serde_json::to_string(v).expect("json").replace(',', ", ")),
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    let close = "  ".repeat(depth);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                let _ = write!(out, "{pad}{}: ", serde_json::to_string(k).expect("key"));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{close}}}");
        }
        Value::Array(a) => match inline(v) {
            Some(s) if !a.iter().any(|x| matches!(x, Value::Object(_))) => out.push_str(&s),
            _ if a.is_empty() => out.push_str("[]"),
            _ => {
                out.push_str("[\n");
                for (i, x) in a.iter().enumerate() {
                    out.push_str(&pad);
                    write_value(out, x, depth + 1);
                    out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
                }
                let _ = write!(out, "{close}]");
            }
        },
        _ => out.push_str(&inline(v).expect("scalar")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::certificate_from_drawing;
    use crate::realize::realize;

    fn sample() -> PackingCertificate {
        let edges = vec![
            HostEdge::new(0, 1, 0),
            HostEdge::new(1, 2, 0),
            HostEdge::new(2, 3, 0),
            HostEdge::new(1, 3, 1),
            HostEdge::new(3, 0, 1),
            HostEdge::new(0, 2, 1),
        ];
        let dr = realize(4, edges, vec![[0, 2]], false).unwrap();
        certificate_from_drawing(dr, &[GuestKind::Path, GuestKind::Path], Provenance::new("test", &[("n", 4)])).unwrap()
    }

    #[test]
    fn certificate_round_trip() {
        let c = sample();
        let text = emit_certificate(&c).unwrap();
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(emit_certificate(&back).unwrap(), text);
    }

    #[test]
    fn truncated_certificate_is_a_syntax_error() {
        let text = emit_certificate(&sample()).unwrap();
        let cut = &text[..text.len() / 2];
        assert!(matches!(parse_certificate(cut), Err(IoError::Syntax { .. })));
    }

    #[test]
    fn dangling_crossing_is_a_violation() {
        let mut c = sample();
        c.drawing.crossings[0][1] = 99;
        let text = emit_certificate_unchecked(&c);
        match parse_certificate(&text) {
            Err(IoError::Invalid(v)) => assert!(v.iter().any(|x| x.code() == "crossing-unknown-edge")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn version_and_format_are_checked() {
        let text = emit_certificate(&sample()).unwrap().replace("\"version\": 1", "\"version\": 7");
        assert!(matches!(parse_certificate(&text), Err(IoError::SchemaVersionMismatch { found: 7, .. })));
        let inst = emit_instance(&[GuestGraph::path_on(3)], None);
        assert!(matches!(parse_certificate(&inst), Err(IoError::WrongFormat { .. }) | Err(IoError::Syntax { .. })));
    }

    #[test]
    fn instance_kinds_are_verified() {
        let text = r#"{"format": "onepack-instance", "version": 1, "n": 4,
            "guests": [{"kind": "caterpillar", "edges": [[0,1],[1,2],[2,0],[2,3]]}]}"#;
        assert!(matches!(parse_instance(text), Err(IoError::Graph(GraphError::KindMismatch(_)))));
        let ok = emit_instance(&[GuestGraph::path_on(7), GuestGraph::path_on(7), GuestGraph::path_on(7)], Some("p7"));
        assert_eq!(parse_instance(&ok).unwrap().len(), 3);
        assert_eq!(parse_instance_file(&ok).unwrap().name.as_deref(), Some("p7"));
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("# k3\n0 1\n1 2\n2 0\n").unwrap(), (3, vec![[0, 1], [1, 2], [2, 0]]));
        assert_eq!(parse_edge_list("n 5\n0 1\n").unwrap().0, 5);
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(IoError::Syntax { line: 1, .. })));
    }
}
