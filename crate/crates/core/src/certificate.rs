//! Packing certificates and their validation.

use crate::drawing::{EdgeLabel, OnePlaneDrawing, Violation};
use crate::graph::{crossing_lower_bound, GuestGraph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Which construction produced a certificate, with its parameters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub strategy: String,
    pub params: BTreeMap<String, i64>,
}

impl Provenance {
    pub fn new(strategy: &str, params: &[(&str, i64)]) -> Self {
        Provenance {
            strategy: strategy.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Guests, their placement on the host vertices and a 1-plane drawing of the
/// union.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingCertificate {
    pub instance: Vec<GuestGraph>,
    /// `mappings[i][v]` is the host vertex of vertex `v` of guest `i`.
    pub mappings: Vec<Vec<Vertex>>,
    pub drawing: OnePlaneDrawing,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum CertificateViolation {
    Drawing(Violation),
    IntermediateDrawing,
    MappingCount { guests: usize, mappings: usize },
    VertexCount { guest: usize, guest_n: usize, host_n: usize },
    NotBijection { guest: usize },
    UnknownGuestLabel { edge: usize, guest: usize },
    PullbackMismatch { guest: usize, missing: usize, extra: usize },
    DuplicateHostPair { a: Vertex, b: Vertex },
    TooManyEdges { m: usize, bound: usize },
    BelowCrossingBound { crossings: usize, bound: usize },
}

impl CertificateViolation {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Drawing(v) => v.code(),
            Self::IntermediateDrawing => "intermediate-drawing",
            Self::MappingCount { .. } => "mapping-count",
            Self::VertexCount { .. } => "vertex-count",
            Self::NotBijection { .. } => "not-bijection",
            Self::UnknownGuestLabel { .. } => "unknown-guest-label",
            Self::PullbackMismatch { .. } => "pullback-mismatch",
            Self::DuplicateHostPair { .. } => "duplicate-host-pair",
            Self::TooManyEdges { .. } => "too-many-edges",
            Self::BelowCrossingBound { .. } => "below-crossing-bound",
        }
    }
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Drawing(v) => write!(f, "{v}"),
            other => write!(f, "{}: {:?}", other.code(), other),
        }
    }
}

impl PackingCertificate {
    pub fn n(&self) -> usize {
        self.drawing.n
    }

    pub fn crossing_count(&self) -> usize {
        self.drawing.crossing_count()
    }

    pub fn validate(&self) -> Vec<CertificateViolation> {
        validate_certificate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Host edges of guest `i` expressed in host vertices.
    pub fn host_edges_of(&self, guest: usize) -> Vec<[Vertex; 2]> {
        self.drawing
            .edges
            .iter()
            .filter(|e| e.label == EdgeLabel::Guest(guest))
            .map(|e| e.key())
            .collect()
    }
}

/// Checks the drawing and every certificate invariant; empty means valid.
pub fn validate_certificate(c: &PackingCertificate) -> Vec<CertificateViolation> {
    let mut out: Vec<CertificateViolation> =
        c.drawing.validate().into_iter().map(CertificateViolation::Drawing).collect();
    let dr = &c.drawing;
    let n = dr.n;
    if dr.intermediate {
        out.push(CertificateViolation::IntermediateDrawing);
    }
    let k = c.instance.len();
    if c.mappings.len() != k {
        out.push(CertificateViolation::MappingCount { guests: k, mappings: c.mappings.len() });
        return out;
    }
    let mut bijective = vec![false; k];
    for (i, (g, map)) in c.instance.iter().zip(&c.mappings).enumerate() {
        if g.n() != n || map.len() != n {
            out.push(CertificateViolation::VertexCount { guest: i, guest_n: g.n(), host_n: n });
            continue;
        }
        let image: BTreeSet<Vertex> = map.iter().copied().collect();
        if image.len() != n || map.iter().any(|&v| v >= n) {
            out.push(CertificateViolation::NotBijection { guest: i });
            continue;
        }
        bijective[i] = true;
    }
    let mut by_guest: Vec<BTreeSet<[Vertex; 2]>> = vec![BTreeSet::new(); k];
    let mut extra_dups = vec![0usize; k];
    let mut pairs = BTreeSet::new();
    let mut counted = 0;
    for (id, e) in dr.edges.iter().enumerate() {
        let EdgeLabel::Guest(g) = e.label else { continue };
        counted += 1;
        if g >= k {
            out.push(CertificateViolation::UnknownGuestLabel { edge: id, guest: g });
            continue;
        }
        if !by_guest[g].insert(e.key()) {
            extra_dups[g] += 1;
        }
        if !pairs.insert(e.key()) {
            out.push(CertificateViolation::DuplicateHostPair { a: e.key()[0], b: e.key()[1] });
        }
    }
    for i in 0..k {
        if !bijective[i] {
            continue;
        }
        let map = &c.mappings[i];
        let want: BTreeSet<[Vertex; 2]> = c.instance[i]
            .edges()
            .iter()
            .map(|&[a, b]| {
                let (x, y) = (map[a], map[b]);
                [x.min(y), x.max(y)]
            })
            .collect();
        let missing = want.difference(&by_guest[i]).count();
        let extra = by_guest[i].difference(&want).count() + extra_dups[i];
        if missing + extra > 0 {
            out.push(CertificateViolation::PullbackMismatch { guest: i, missing, extra });
        }
    }
    if n >= 3 && counted > 4 * n - 8 {
        out.push(CertificateViolation::TooManyEdges { m: counted, bound: 4 * n - 8 });
    }
    let bound = crossing_lower_bound(dr.edges.len(), n);
    if dr.crossing_count() < bound {
        out.push(CertificateViolation::BelowCrossingBound { crossings: dr.crossing_count(), bound });
    }
    out
}

/// Identity mappings for guests already expressed in host vertices.
pub fn identity_mappings(k: usize, n: usize) -> Vec<Vec<Vertex>> {
    vec![(0..n).collect(); k]
}

/// Certificate whose guests are read off the drawing's labels, each in host
/// vertex numbering with the given kinds.
pub fn certificate_from_drawing(
    drawing: OnePlaneDrawing,
    kinds: &[crate::graph::GuestKind],
    provenance: Provenance,
) -> Result<PackingCertificate, crate::graph::GraphError> {
    let n = drawing.n;
    let mut instance = Vec::with_capacity(kinds.len());
    for (i, &kind) in kinds.iter().enumerate() {
        let edges = drawing
            .edges
            .iter()
            .filter(|e| e.label == EdgeLabel::Guest(i))
            .map(|e| e.ends)
            .collect();
        instance.push(GuestGraph::new(n, edges, kind)?);
    }
    Ok(PackingCertificate {
        mappings: identity_mappings(kinds.len(), n),
        instance,
        drawing,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::HostEdge;
    use crate::graph::GuestKind;
    use crate::realize::realize;

    /// Three paths on K4 plus a crossing: paths 0-1-2-3, 1-3-0-2 would reuse
    /// edges, so use two paths on four vertices.
    fn two_paths() -> PackingCertificate {
        let edges = vec![
            HostEdge::new(0, 1, 0),
            HostEdge::new(1, 2, 0),
            HostEdge::new(2, 3, 0),
            HostEdge::new(1, 3, 1),
            HostEdge::new(3, 0, 1),
            HostEdge::new(0, 2, 1),
        ];
        let dr = realize(4, edges, vec![[0, 2]], false).unwrap();
        certificate_from_drawing(dr, &[GuestKind::Path, GuestKind::Path], Provenance::default()).unwrap()
    }

    #[test]
    fn valid_certificate() {
        let c = two_paths();
        assert_eq!(c.validate(), vec![]);
    }

    #[test]
    fn flipped_label_is_caught() {
        let mut c = two_paths();
        c.drawing.edges[1].label = EdgeLabel::Guest(1);
        let v = c.validate();
        assert!(v.iter().any(|x| x.code() == "pullback-mismatch"));
    }

    #[test]
    fn broken_mapping_is_caught() {
        let mut c = two_paths();
        c.mappings[0][0] = 1;
        assert!(c.validate().iter().any(|x| x.code() == "not-bijection"));
        let mut c = two_paths();
        c.mappings[1].swap(0, 3);
        assert!(c.validate().iter().any(|x| x.code() == "pullback-mismatch"));
    }
}
