//! Combinatorial 1-plane drawings: host edges, crossing pairs and a rotation
//! system over the planarization.
//!
//! The planarization has the real vertices `0..n` followed by one dummy
//! vertex `n + i` per crossing pair `i`. An uncrossed edge contributes one
//! sub-edge, a crossed edge two (one from each endpoint to its dummy).
//! Rotations list darts in counter-clockwise order.

use crate::graph::Vertex;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub type EdgeId = usize;

/// One end of a sub-edge, seen from the vertex it leaves.
///
/// With `at_dummy == false` the dart sits at real endpoint `ends[end]` of the
/// edge and points away from it. With `at_dummy == true` it sits at the
/// edge's dummy vertex and points towards `ends[end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    pub end: u8,
    pub at_dummy: bool,
}

impl Dart {
    pub fn real(edge: EdgeId, end: u8) -> Self {
        Dart { edge, end, at_dummy: false }
    }

    pub fn dummy(edge: EdgeId, end: u8) -> Self {
        Dart { edge, end, at_dummy: true }
    }

    pub fn index(self) -> usize {
        4 * self.edge + 2 * usize::from(self.at_dummy) + usize::from(self.end)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.at_dummy { "x" } else { "" };
        write!(f, "{}{}{}", self.edge, tag, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Index of the guest this edge belongs to.
    Guest(usize),
    Discard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostEdge {
    pub ends: [Vertex; 2],
    pub label: EdgeLabel,
}

impl HostEdge {
    pub fn new(a: Vertex, b: Vertex, guest: usize) -> Self {
        HostEdge { ends: [a, b], label: EdgeLabel::Guest(guest) }
    }

    pub fn key(&self) -> [Vertex; 2] {
        [self.ends[0].min(self.ends[1]), self.ends[0].max(self.ends[1])]
    }

    pub fn shares_endpoint(&self, other: &HostEdge) -> bool {
        self.ends.iter().any(|v| other.ends.contains(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnePlaneDrawing {
    pub n: usize,
    pub edges: Vec<HostEdge>,
    pub crossings: Vec<[EdgeId; 2]>,
    /// Counter-clockwise dart order at each planarization vertex.
    pub rotation: Vec<Vec<Dart>>,
    /// Parallel host edges are legal only in intermediate drawings.
    pub intermediate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("rotation references dart {0} which is not a sub-edge end of the drawing")]
    DanglingHalfEdge(Dart),
    #[error("drawing is not structurally valid: {0:?}")]
    Invalid(Vec<Violation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum Violation {
    EndpointOutOfRange { edge: EdgeId },
    SelfLoop { edge: EdgeId },
    CrossingUnknownEdge { crossing: usize, edge: EdgeId },
    CrossingNotMatching { edge: EdgeId },
    AdjacentCrossing { crossing: usize },
    RotationCount { expected: usize, found: usize },
    DanglingHalfEdge { vertex: usize, dart: Dart },
    MisplacedDart { vertex: usize, dart: Dart },
    DuplicateDart { dart: Dart },
    MissingDart { dart: Dart },
    DummyDegree { crossing: usize, degree: usize },
    TouchingNotCrossing { crossing: usize },
    Disconnected,
    NonPlanarRotation { vertices: usize, sub_edges: usize, faces: usize },
    ParallelEdges { a: EdgeId, b: EdgeId },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::EndpointOutOfRange { .. } => "endpoint-out-of-range",
            Violation::SelfLoop { .. } => "self-loop",
            Violation::CrossingUnknownEdge { .. } => "crossing-unknown-edge",
            Violation::CrossingNotMatching { .. } => "crossing-not-matching",
            Violation::AdjacentCrossing { .. } => "adjacent-crossing",
            Violation::RotationCount { .. } => "rotation-count",
            Violation::DanglingHalfEdge { .. } => "dangling-half-edge",
            Violation::MisplacedDart { .. } => "misplaced-dart",
            Violation::DuplicateDart { .. } => "duplicate-dart",
            Violation::MissingDart { .. } => "missing-dart",
            Violation::DummyDegree { .. } => "dummy-degree",
            Violation::TouchingNotCrossing { .. } => "touching-not-crossing",
            Violation::Disconnected => "disconnected",
            Violation::NonPlanarRotation { .. } => "non-planar-rotation",
            Violation::ParallelEdges { .. } => "parallel-edges",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.code(), self)
    }
}

impl OnePlaneDrawing {
    pub fn vertex_count(&self) -> usize {
        self.n + self.crossings.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing index of every edge, assuming the crossings form a matching.
    pub fn crossing_map(&self) -> Vec<Option<usize>> {
        let mut map = vec![None; self.edges.len()];
        for (i, pair) in self.crossings.iter().enumerate() {
            for &e in pair {
                if e < map.len() {
                    map[e] = Some(i);
                }
            }
        }
        map
    }

    /// All darts of the planarization, in index order.
    pub fn darts(&self) -> Vec<Dart> {
        let cm = self.crossing_map();
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            for end in 0..2 {
                out.push(Dart::real(e, end));
                if cm[e].is_some() {
                    out.push(Dart::dummy(e, end));
                }
            }
        }
        out.sort_by_key(|d| d.index());
        out
    }

    pub fn origin_with(&self, cm: &[Option<usize>], d: Dart) -> usize {
        if d.at_dummy {
            self.n + cm[d.edge].expect("dummy dart on an uncrossed edge")
        } else {
            self.edges[d.edge].ends[usize::from(d.end)]
        }
    }

    pub fn twin_with(cm: &[Option<usize>], d: Dart) -> Dart {
        if cm[d.edge].is_some() {
            Dart { at_dummy: !d.at_dummy, ..d }
        } else {
            Dart::real(d.edge, 1 - d.end)
        }
    }

    /// Real-vertex degree in the host multigraph, counting every edge.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.ends[0]] += 1;
            d[e.ends[1]] += 1;
        }
        d
    }

    pub fn index(&self) -> Result<DrawingIndex, DrawingError> {
        DrawingIndex::new(self)
    }

    /// Darts grouped into face boundary walks.
    pub fn trace_faces(&self) -> Result<Vec<Vec<Dart>>, DrawingError> {
        Ok(self.index()?.faces)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Every violated drawing invariant; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        validate_drawing(self)
    }
}

/// Precomputed incidence data of a drawing whose rotation is well formed.
#[derive(Debug, Clone)]
pub struct DrawingIndex {
    pub crossing_of: Vec<Option<usize>>,
    /// Planarization vertex and rotation position of each dart, by dart index.
    pub position: Vec<(usize, usize)>,
    pub faces: Vec<Vec<Dart>>,
    /// Face of each dart, by dart index.
    pub face_of: Vec<usize>,
}

impl DrawingIndex {
    fn new(dr: &OnePlaneDrawing) -> Result<Self, DrawingError> {
        let cm = dr.crossing_map();
        let slots = 4 * dr.edges.len();
        let mut position = vec![(usize::MAX, 0); slots];
        for (v, rot) in dr.rotation.iter().enumerate() {
            for (p, &d) in rot.iter().enumerate() {
                let known = d.edge < dr.edges.len() && (!d.at_dummy || cm[d.edge].is_some());
                if !known {
                    return Err(DrawingError::DanglingHalfEdge(d));
                }
                position[d.index()] = (v, p);
            }
        }
        let darts = dr.darts();
        for &d in &darts {
            if position[d.index()].0 == usize::MAX {
                return Err(DrawingError::DanglingHalfEdge(d));
            }
        }
        let mut face_of = vec![usize::MAX; slots];
        let mut faces = Vec::new();
        for &start in &darts {
            if face_of[start.index()] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            while face_of[d.index()] == usize::MAX {
                face_of[d.index()] = id;
                walk.push(d);
                let t = OnePlaneDrawing::twin_with(&cm, d);
                let (v, p) = position[t.index()];
                let rot = &dr.rotation[v];
                d = rot[(p + 1) % rot.len()];
            }
            faces.push(walk);
        }
        Ok(DrawingIndex { crossing_of: cm, position, faces, face_of })
    }

    pub fn face(&self, d: Dart) -> usize {
        self.face_of[d.index()]
    }

    pub fn twin(&self, d: Dart) -> Dart {
        OnePlaneDrawing::twin_with(&self.crossing_of, d)
    }

    /// Successor of `d` along its face walk.
    pub fn face_next(&self, dr: &OnePlaneDrawing, d: Dart) -> Dart {
        let t = self.twin(d);
        let (v, p) = self.position[t.index()];
        let rot = &dr.rotation[v];
        rot[(p + 1) % rot.len()]
    }

    pub fn origin(&self, dr: &OnePlaneDrawing, d: Dart) -> usize {
        dr.origin_with(&self.crossing_of, d)
    }
}

/// Checks every drawing invariant and returns all violations found.
pub fn validate_drawing(dr: &OnePlaneDrawing) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = dr.edges.len();
    for (i, e) in dr.edges.iter().enumerate() {
        if e.ends[0] >= dr.n || e.ends[1] >= dr.n {
            out.push(Violation::EndpointOutOfRange { edge: i });
        } else if e.ends[0] == e.ends[1] {
            out.push(Violation::SelfLoop { edge: i });
        }
    }
    let mut use_count = vec![0usize; m];
    for (c, pair) in dr.crossings.iter().enumerate() {
        for &e in pair {
            if e >= m {
                out.push(Violation::CrossingUnknownEdge { crossing: c, edge: e });
            } else {
                use_count[e] += 1;
            }
        }
        if pair[0] == pair[1] {
            out.push(Violation::AdjacentCrossing { crossing: c });
        } else if pair[0] < m && pair[1] < m && dr.edges[pair[0]].shares_endpoint(&dr.edges[pair[1]]) {
            out.push(Violation::AdjacentCrossing { crossing: c });
        }
    }
    for (e, &u) in use_count.iter().enumerate() {
        if u > 1 {
            out.push(Violation::CrossingNotMatching { edge: e });
        }
    }
    if !dr.intermediate {
        let mut seen: BTreeMap<[Vertex; 2], EdgeId> = BTreeMap::new();
        for (i, e) in dr.edges.iter().enumerate() {
            if let Some(&j) = seen.get(&e.key()) {
                out.push(Violation::ParallelEdges { a: j, b: i });
            } else {
                seen.insert(e.key(), i);
            }
        }
    }
    if !out.is_empty() {
        // Rotation checks below rely on well-formed edges and crossings.
        return out;
    }
    let expected = dr.vertex_count();
    if dr.rotation.len() != expected {
        out.push(Violation::RotationCount { expected, found: dr.rotation.len() });
        return out;
    }
    let cm = dr.crossing_map();
    let mut seen = BTreeSet::new();
    for (v, rot) in dr.rotation.iter().enumerate() {
        for &d in rot {
            if d.edge >= m || d.end > 1 || (d.at_dummy && cm[d.edge].is_none()) {
                out.push(Violation::DanglingHalfEdge { vertex: v, dart: d });
                continue;
            }
            if dr.origin_with(&cm, d) != v {
                out.push(Violation::MisplacedDart { vertex: v, dart: d });
            }
            if !seen.insert(d) {
                out.push(Violation::DuplicateDart { dart: d });
            }
        }
    }
    for d in dr.darts() {
        if !seen.contains(&d) {
            out.push(Violation::MissingDart { dart: d });
        }
    }
    for (c, pair) in dr.crossings.iter().enumerate() {
        let rot = &dr.rotation[dr.n + c];
        if rot.len() != 4 {
            out.push(Violation::DummyDegree { crossing: c, degree: rot.len() });
            continue;
        }
        let pos: Vec<usize> = rot.iter().enumerate().filter(|(_, d)| d.edge == pair[0]).map(|(p, _)| p).collect();
        if pos.len() != 2 || pos[1] - pos[0] != 2 {
            out.push(Violation::TouchingNotCrossing { crossing: c });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let idx = match DrawingIndex::new(dr) {
        Ok(idx) => idx,
        Err(DrawingError::DanglingHalfEdge(d)) => {
            out.push(Violation::MissingDart { dart: d });
            return out;
        }
        Err(DrawingError::Invalid(v)) => return v,
    };
    if !planarization_connected(dr, &cm) {
        out.push(Violation::Disconnected);
        return out;
    }
    let vertices = expected;
    let sub_edges = m + dr.crossings.len() * 2;
    let faces = if sub_edges == 0 { 1 } else { idx.faces.len() };
    if vertices + faces != sub_edges + 2 {
        out.push(Violation::NonPlanarRotation { vertices, sub_edges, faces });
    }
    out
}

fn planarization_connected(dr: &OnePlaneDrawing, cm: &[Option<usize>]) -> bool {
    let total = dr.vertex_count();
    if total == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); total];
    for (e, he) in dr.edges.iter().enumerate() {
        match cm[e] {
            Some(c) => {
                for &v in &he.ends {
                    adj[v].push(dr.n + c);
                    adj[dr.n + c].push(v);
                }
            }
            None => {
                adj[he.ends[0]].push(he.ends[1]);
                adj[he.ends[1]].push(he.ends[0]);
            }
        }
    }
    let mut seen = vec![false; total];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == total
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plane drawing of a simple graph from explicit ccw neighbour orders.
    pub(crate) fn plane(n: usize, edges: &[[usize; 2]], order: &[Vec<usize>]) -> OnePlaneDrawing {
        let hosts: Vec<HostEdge> = edges.iter().map(|&[a, b]| HostEdge::new(a, b, 0)).collect();
        let dart_to = |v: usize, w: usize| {
            let e = edges.iter().position(|&[a, b]| (a == v && b == w) || (a == w && b == v)).unwrap();
            Dart::real(e, if edges[e][0] == v { 0 } else { 1 })
        };
        let rotation = (0..n).map(|v| order[v].iter().map(|&w| dart_to(v, w)).collect()).collect();
        OnePlaneDrawing { n, edges: hosts, crossings: vec![], rotation, intermediate: false }
    }

    fn k4() -> OnePlaneDrawing {
        let edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
        // 3 in the middle of triangle 0,1,2 (ccw).
        let order = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        plane(4, &edges, &order)
    }

    #[test]
    fn triangle_has_two_faces() {
        let edges = [[0, 1], [1, 2], [0, 2]];
        let order = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let dr = plane(3, &edges, &order);
        assert_eq!(dr.trace_faces().unwrap().len(), 2);
        assert!(dr.validate().is_empty());
    }

    #[test]
    fn k4_has_four_faces() {
        let dr = k4();
        assert_eq!(dr.trace_faces().unwrap().len(), 4);
        assert!(dr.validate().is_empty());
    }

    #[test]
    fn twisted_rotation_is_not_planar() {
        let mut dr = k4();
        dr.rotation[3].swap(0, 1);
        assert!(dr.validate().iter().any(|v| v.code() == "non-planar-rotation"));
    }

    #[test]
    fn crossing_checks() {
        // K4 drawn with the diagonals 0-2 and 1-3 crossing inside square 0,1,2,3.
        let edges = vec![
            HostEdge::new(0, 1, 0),
            HostEdge::new(1, 2, 0),
            HostEdge::new(2, 3, 0),
            HostEdge::new(3, 0, 0),
            HostEdge::new(0, 2, 1),
            HostEdge::new(1, 3, 1),
        ];
        let r = Dart::real;
        let x = Dart::dummy;
        let rotation = vec![
            vec![r(0, 0), r(4, 0), r(3, 1)],
            vec![r(1, 0), r(5, 0), r(0, 1)],
            vec![r(2, 0), r(4, 1), r(1, 1)],
            vec![r(3, 0), r(5, 1), r(2, 1)],
            vec![x(4, 0), x(5, 0), x(4, 1), x(5, 1)],
        ];
        let dr = OnePlaneDrawing { n: 4, edges, crossings: vec![[4, 5]], rotation, intermediate: false };
        assert_eq!(dr.validate(), vec![]);
        assert_eq!(dr.trace_faces().unwrap().len(), 5);

        let mut touching = dr.clone();
        touching.rotation[4].swap(1, 2);
        assert!(touching.validate().iter().any(|v| v.code() == "touching-not-crossing"));

        let mut double = dr.clone();
        double.crossings.push([4, 5]);
        assert!(double.validate().iter().any(|v| v.code() == "crossing-not-matching"));

        let mut adjacent = dr.clone();
        adjacent.crossings = vec![[0, 1]];
        assert!(adjacent.validate().iter().any(|v| v.code() == "adjacent-crossing"));
    }

    #[test]
    fn parallel_edges_need_intermediate_flag() {
        let edges = vec![HostEdge::new(0, 1, 0), HostEdge::new(0, 1, 1)];
        let r = Dart::real;
        let rotation = vec![vec![r(0, 0), r(1, 0)], vec![r(1, 1), r(0, 1)]];
        let mut dr = OnePlaneDrawing { n: 2, edges, crossings: vec![], rotation, intermediate: true };
        assert_eq!(dr.validate(), vec![]);
        dr.intermediate = false;
        assert_eq!(dr.validate(), vec![Violation::ParallelEdges { a: 0, b: 1 }]);
    }

    #[test]
    fn dangling_dart_is_reported() {
        let mut dr = k4();
        dr.rotation[0].push(Dart::real(17, 0));
        assert!(matches!(dr.trace_faces(), Err(DrawingError::DanglingHalfEdge(_))));
        assert!(dr.validate().iter().any(|v| v.code() == "dangling-half-edge"));
    }
}
