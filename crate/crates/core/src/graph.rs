//! Guest graphs, caterpillar structure and the necessary-condition screen.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GuestKind {
    Path,
    Cycle,
    Caterpillar,
    Matching,
    Tree,
    General,
}

impl GuestKind {
    pub fn name(self) -> &'static str {
        match self {
            GuestKind::Path => "path",
            GuestKind::Cycle => "cycle",
            GuestKind::Caterpillar => "caterpillar",
            GuestKind::Matching => "matching",
            GuestKind::Tree => "tree",
            GuestKind::General => "general",
        }
    }
}

impl fmt::Display for GuestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge set is not a {0}")]
    KindMismatch(GuestKind),
    #[error("guests disagree on the vertex count ({0} vs {1})")]
    MixedVertexCounts(usize, usize),
    #[error("guest {0} is neither connected nor a perfect matching")]
    NotConnectedOrMatching(usize),
}

/// A simple graph on `0..n` with a structural tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuestGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
    kind: GuestKind,
}

impl GuestGraph {
    /// Builds a guest, normalizing every edge to `[min, max]` and checking the kind.
    pub fn new(n: usize, edges: Vec<[Vertex; 2]>, kind: GuestKind) -> Result<Self, GraphError> {
        let g = Self::unchecked(n, edges, GuestKind::General)?;
        if !g.has_shape(kind) {
            return Err(GraphError::KindMismatch(kind));
        }
        Ok(GuestGraph { kind, ..g })
    }

    fn unchecked(n: usize, edges: Vec<[Vertex; 2]>, kind: GuestKind) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for [a, b] in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = [a.min(b), a.max(b)];
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e[0], e[1]));
            }
            out.push(e);
        }
        Ok(GuestGraph { n, edges: out, kind })
    }

    /// The path visiting `order` in sequence.
    pub fn path(order: &[Vertex]) -> Self {
        let edges = order.windows(2).map(|w| [w[0], w[1]]).collect();
        Self::new(order.len(), edges, GuestKind::Path).expect("order must be a permutation")
    }

    pub fn path_on(n: usize) -> Self {
        Self::path(&(0..n).collect::<Vec<_>>())
    }

    pub fn cycle_on(n: usize) -> Self {
        let mut edges: Vec<_> = (0..n - 1).map(|i| [i, i + 1]).collect();
        edges.push([0, n - 1]);
        Self::new(n, edges, GuestKind::Cycle).expect("n >= 3")
    }

    /// Caterpillar whose spine is `0..legs.len()` and whose spine vertex `i`
    /// carries `legs[i]` leaves.
    pub fn caterpillar(legs: &[usize]) -> Self {
        let k = legs.len();
        let mut edges: Vec<[Vertex; 2]> = (1..k).map(|i| [i - 1, i]).collect();
        let mut next = k;
        for (i, &l) in legs.iter().enumerate() {
            for _ in 0..l {
                edges.push([i, next]);
                next += 1;
            }
        }
        Self::new(next, edges, GuestKind::Caterpillar).expect("valid caterpillar")
    }

    pub fn matching_on(n: usize) -> Self {
        let edges = (0..n / 2).map(|i| [2 * i, 2 * i + 1]).collect();
        Self::new(n, edges, GuestKind::Matching).expect("n even")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[Vertex; 2]] {
        &self.edges
    }

    pub fn kind(&self) -> GuestKind {
        self.kind
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &[a, b] in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[a, b] in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
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
        count == self.n
    }

    pub fn is_perfect_matching(&self) -> bool {
        self.n % 2 == 0 && self.degrees().iter().all(|&d| d == 1)
    }

    fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Structural test of the edge set against a kind.
    pub fn has_shape(&self, kind: GuestKind) -> bool {
        match kind {
            GuestKind::General => true,
            GuestKind::Tree => self.is_tree(),
            GuestKind::Path => self.is_tree() && self.degrees().iter().all(|&d| d <= 2),
            GuestKind::Cycle => {
                self.n >= 3 && self.is_connected() && self.degrees().iter().all(|&d| d == 2)
            }
            GuestKind::Matching => self.is_perfect_matching(),
            GuestKind::Caterpillar => matches!(
                classify_tree(self),
                TreeClass::Path(_) | TreeClass::Caterpillar(_) | TreeClass::Star(_)
            ),
        }
    }

    /// Copy of this guest with the given tag, if the edge set fits it.
    pub fn with_kind(&self, kind: GuestKind) -> Result<Self, GraphError> {
        if self.has_shape(kind) {
            Ok(GuestGraph { kind, ..self.clone() })
        } else {
            Err(GraphError::KindMismatch(kind))
        }
    }

    /// Sequence of vertices along a path guest, starting at its smaller end.
    pub fn path_order(&self) -> Option<Vec<Vertex>> {
        if !self.has_shape(GuestKind::Path) {
            return None;
        }
        if self.n == 1 {
            return Some(vec![0]);
        }
        let adj = self.adjacency();
        let start = (0..self.n).find(|&v| adj[v].len() == 1)?;
        Some(walk(&adj, start))
    }

    /// Sequence of vertices around a cycle guest, starting at 0 towards its
    /// smaller neighbour.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if !self.has_shape(GuestKind::Cycle) {
            return None;
        }
        Some(walk(&self.adjacency(), 0))
    }
}

fn walk(adj: &[Vec<Vertex>], start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().copied().find(|&w| w != prev && w != start);
        match next {
            Some(w) if order.len() < adj.len() => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            _ => return order,
        }
    }
}

/// Spine, backbone and legs of a caterpillar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaterpillarDecomposition {
    /// Spine vertices `v_1..v_k` in path order.
    pub spine: Vec<Vertex>,
    /// The spine extended by one leaf at each end, `v_0..v_{k+1}`.
    pub backbone: Vec<Vertex>,
    /// Leaves of each spine vertex, excluding the backbone ends.
    pub leaves: Vec<Vec<Vertex>>,
    /// Number of leaf neighbours of each spine vertex, backbone ends included.
    pub leg_counts: Vec<usize>,
}

impl CaterpillarDecomposition {
    pub fn n(&self) -> usize {
        self.backbone.len() + self.leaves.iter().map(Vec::len).sum::<usize>()
    }

    /// Degree of the `i`-th spine vertex in the caterpillar.
    pub fn spine_degree(&self, i: usize) -> usize {
        let spine_nbrs = usize::from(i > 0) + usize::from(i + 1 < self.spine.len());
        self.leg_counts[i] + spine_nbrs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeClass {
    Path(CaterpillarDecomposition),
    Caterpillar(CaterpillarDecomposition),
    Star(CaterpillarDecomposition),
    OtherTree,
    NotTree,
}

impl TreeClass {
    pub fn decomposition(&self) -> Option<&CaterpillarDecomposition> {
        match self {
            TreeClass::Path(d) | TreeClass::Caterpillar(d) | TreeClass::Star(d) => Some(d),
            _ => None,
        }
    }
}

/// Classifies a tree by leaf removal.
///
/// A single edge is reported as a path whose spine is vertex 0 and whose
/// backbone is `[1, 0]`; it has no second end leaf.
pub fn classify_tree(g: &GuestGraph) -> TreeClass {
    let n = g.n();
    if n < 2 || !g.is_tree() {
        return TreeClass::NotTree;
    }
    if n == 2 {
        let d = CaterpillarDecomposition {
            spine: vec![0],
            backbone: vec![1, 0],
            leaves: vec![vec![]],
            leg_counts: vec![1],
        };
        return TreeClass::Path(d);
    }
    let adj = g.adjacency();
    let is_spine: Vec<bool> = adj.iter().map(|l| l.len() >= 2).collect();
    let spine_nbrs = |v: Vertex| adj[v].iter().copied().filter(|&w| is_spine[w]).collect::<Vec<_>>();
    let spine_set: Vec<Vertex> = (0..n).filter(|&v| is_spine[v]).collect();
    if spine_set.iter().any(|&v| spine_nbrs(v).len() > 2) {
        return TreeClass::OtherTree;
    }
    // Leaf removal from a tree leaves a subtree, so max spine degree <= 2 means a path.
    let ends: Vec<Vertex> = spine_set.iter().copied().filter(|&v| spine_nbrs(v).len() <= 1).collect();
    let start = ends[0];
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(w) = spine_nbrs(cur).into_iter().find(|&w| w != prev) {
        spine.push(w);
        prev = cur;
        cur = w;
    }
    let leaf_lists: Vec<Vec<Vertex>> = spine
        .iter()
        .map(|&v| adj[v].iter().copied().filter(|&w| !is_spine[w]).collect())
        .collect();
    let k = spine.len();
    let first_end = leaf_lists[0][0];
    let last_end = if k == 1 { leaf_lists[0][1] } else { leaf_lists[k - 1][0] };
    let mut backbone = vec![first_end];
    backbone.extend(&spine);
    backbone.push(last_end);
    let leaves: Vec<Vec<Vertex>> = leaf_lists
        .iter()
        .map(|l| l.iter().copied().filter(|&w| w != first_end && w != last_end).collect())
        .collect();
    let leg_counts = leaf_lists.iter().map(Vec::len).collect();
    let d = CaterpillarDecomposition { spine, backbone, leaves, leg_counts };
    if adj.iter().all(|l| l.len() <= 2) {
        TreeClass::Path(d)
    } else if k == 1 {
        TreeClass::Star(d)
    } else {
        TreeClass::Caterpillar(d)
    }
}

/// True iff every spine vertex has degree 2 or at least `h + 2`.
pub fn is_h_legged(d: &CaterpillarDecomposition, h: usize) -> bool {
    (0..d.spine.len()).all(|i| {
        let deg = d.spine_degree(i);
        deg == 2 || deg >= h + 2
    })
}

/// Maximum edge count of a simple planar graph on `n` vertices.
pub fn planar_edge_bound(n: usize) -> usize {
    match n {
        0 | 1 => 0,
        2 => 1,
        _ => 3 * n - 6,
    }
}

/// Maximum edge count of a simple 1-planar graph on `n` vertices.
pub fn one_planar_edge_bound(n: usize) -> usize {
    if n < 3 {
        planar_edge_bound(n)
    } else {
        (4 * n - 8).min(n * (n - 1) / 2)
    }
}

/// Minimum number of crossings of any drawing with `m` edges on `n` vertices,
/// since deleting one edge per crossing leaves a planar graph.
pub fn crossing_lower_bound(m: usize, n: usize) -> usize {
    m.saturating_sub(planar_edge_bound(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum FeasibilityFailure {
    TooManyConnectedGuests { k: usize },
    TooFewVertices { n: usize, k: usize },
    DegreeTooHigh { guest: usize, vertex: Vertex, degree: usize, bound: usize },
    TooManyEdges { m: usize, bound: usize },
    OddVertexCount { n: usize },
    /// Three paths and a perfect matching on `n <= 8` vertices need `7n/2 - 3 > 4n - 8` edges.
    QuadrupleEdgeBound { n: usize, m: usize, bound: usize },
    /// Three paths and a perfect matching on ten vertices would form an optimal
    /// 1-planar graph, which has at least eight vertices of degree six, while the
    /// union has at most six vertices of degree below seven.
    QuadrupleDegreeSix,
}

impl fmt::Display for FeasibilityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooManyConnectedGuests { k } => {
                write!(f, "{k} connected guests; at most 3 fit in a 1-planar graph")
            }
            Self::TooFewVertices { n, k } => write!(f, "n = {n} < 2k = {}", 2 * k),
            Self::DegreeTooHigh { guest, vertex, degree, bound } => write!(
                f,
                "vertex {vertex} of guest {guest} has degree {degree} > n - k = {bound}"
            ),
            Self::TooManyEdges { m, bound } => {
                write!(f, "{m} edges exceed the 1-planar bound of {bound}")
            }
            Self::OddVertexCount { n } => write!(f, "a perfect matching needs an even n, got {n}"),
            Self::QuadrupleEdgeBound { n, m, bound } => write!(
                f,
                "n = {n}: three paths and a matching need {m} edges, more than 4n - 8 = {bound}"
            ),
            Self::QuadrupleDegreeSix => write!(
                f,
                "n = 10: the union would be optimal 1-planar, which forces at least eight degree-six vertices"
            ),
        }
    }
}

impl FeasibilityFailure {
    pub fn code(&self) -> &'static str {
        match self {
            Self::TooManyConnectedGuests { .. } => "too-many-connected-guests",
            Self::TooFewVertices { .. } => "too-few-vertices",
            Self::DegreeTooHigh { .. } => "degree-too-high",
            Self::TooManyEdges { .. } => "too-many-edges",
            Self::OddVertexCount { .. } => "odd-vertex-count",
            Self::QuadrupleEdgeBound { .. } => "quadruple-edge-bound",
            Self::QuadrupleDegreeSix => "quadruple-degree-six",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Screen {
    Pass,
    Fail(FeasibilityFailure),
}

/// True when the guests are three paths plus one perfect matching.
pub fn is_paths_matching_quadruple(instance: &[GuestGraph]) -> bool {
    instance.len() == 4
        && instance.iter().filter(|g| g.has_shape(GuestKind::Matching)).count() == 1
        && instance.iter().filter(|g| g.has_shape(GuestKind::Path)).count() == 3
}

/// Necessary conditions for a 1-planar packing to exist.
pub fn feasibility_screen(instance: &[GuestGraph]) -> Result<Screen, GraphError> {
    let Some(first) = instance.first() else {
        return Ok(Screen::Pass);
    };
    let n = first.n();
    for g in instance {
        if g.n() != n {
            return Err(GraphError::MixedVertexCounts(n, g.n()));
        }
    }
    let mut connected = Vec::new();
    for (i, g) in instance.iter().enumerate() {
        if g.is_connected() {
            connected.push(i);
        } else if !g.is_perfect_matching() {
            return Err(GraphError::NotConnectedOrMatching(i));
        }
    }
    let k = connected.len();
    if k > 3 {
        return Ok(Screen::Fail(FeasibilityFailure::TooManyConnectedGuests { k }));
    }
    if k > 0 && n < 2 * k {
        return Ok(Screen::Fail(FeasibilityFailure::TooFewVertices { n, k }));
    }
    if k > 0 {
        for &i in &connected {
            for (v, &d) in instance[i].degrees().iter().enumerate() {
                if d + k > n {
                    return Ok(Screen::Fail(FeasibilityFailure::DegreeTooHigh {
                        guest: i,
                        vertex: v,
                        degree: d,
                        bound: n - k,
                    }));
                }
            }
        }
    }
    let m: usize = instance.iter().map(|g| g.edges().len()).sum();
    if is_paths_matching_quadruple(instance) {
        if n % 2 == 1 {
            return Ok(Screen::Fail(FeasibilityFailure::OddVertexCount { n }));
        }
        if n <= 8 {
            return Ok(Screen::Fail(FeasibilityFailure::QuadrupleEdgeBound {
                n,
                m,
                bound: (4 * n).saturating_sub(8),
            }));
        }
        if n == 10 {
            return Ok(Screen::Fail(FeasibilityFailure::QuadrupleDegreeSix));
        }
    }
    let bound = one_planar_edge_bound(n);
    if m > bound {
        return Ok(Screen::Fail(FeasibilityFailure::TooManyEdges { m, bound }));
    }
    Ok(Screen::Pass)
}
