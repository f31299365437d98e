//! Cutting curves and k-leaf additions.
//!
//! A cutting curve leaves the anchor `v` into face `f0`, crosses sub-edge
//! `s1` into face `f1` and crosses sub-edge `s2` into the face beyond. The
//! leaf addition draws `k` new leaves of `v` inside `f0 ∪ f1` and reroutes
//! the two stubs through them using a gadget from the catalog.
//!
//! Stub endpoints are called slots. `X1`/`Y1` are the origin and head of
//! `s1`, `X2`/`Y2` those of `s2`; walking around the region that receives
//! the gadget with the region on the right reads `V, X1, X2, Y2, Y1`.

use crate::drawing::{Dart, EdgeId, EdgeLabel, HostEdge, OnePlaneDrawing, Violation};
use crate::graph::Vertex;
use crate::realize::realize;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use thiserror::Error;

/// The gadget catalog shipped with the crate.
pub const CATALOG: &str = include_str!("../data/gadgets.txt");

/// Smallest number of leaves a gadget exists for.
pub const MIN_LEAVES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuttingCurve {
    pub anchor: Vertex,
    /// Dart leaving the anchor with `f0` on its right.
    pub corner: Dart,
    /// Sub-edge on `f0`, oriented with `f0` on its right.
    pub s1: Dart,
    /// Sub-edge on `f1 = face(twin(s1))`, oriented with `f1` on its right.
    pub s2: Dart,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "kebab-case")]
pub enum CurveViolation {
    Drawing(Violation),
    UnknownFace { dart: Dart },
    UnknownSubEdge { dart: Dart },
    CornerNotAtAnchor,
    StubNotOnFace { stub: u8 },
    SameEdge,
    StubIsBridge,
    StubsCross,
    ParallelCrossed,
    AnchorOnStub,
}

impl CurveViolation {
    pub fn code(&self) -> &'static str {
        match self {
            Self::Drawing(v) => v.code(),
            Self::UnknownFace { .. } => "unknown-face",
            Self::UnknownSubEdge { .. } => "unknown-sub-edge",
            Self::CornerNotAtAnchor => "corner-not-at-anchor",
            Self::StubNotOnFace { .. } => "stub-not-on-face",
            Self::SameEdge => "same-edge",
            Self::StubIsBridge => "stub-is-bridge",
            Self::StubsCross => "stubs-cross",
            Self::ParallelCrossed => "parallel-crossed",
            Self::AnchorOnStub => "anchor-on-stub",
        }
    }
}

impl fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {:?}", self.code(), self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeafError {
    #[error("k = {0} is too small; gadgets exist for k >= 5")]
    KTooSmall(usize),
    #[error("invalid cutting curve: {0:?}")]
    Curve(Vec<CurveViolation>),
    #[error("no gadget orientation fits this curve")]
    NoFit,
    #[error("gadget catalog: {0}")]
    Catalog(String),
}

fn known(dr: &OnePlaneDrawing, cm: &[Option<usize>], d: Dart) -> bool {
    d.edge < dr.edges.len() && (!d.at_dummy || cm[d.edge].is_some())
}

/// Every violated curve condition; empty means the curve is usable.
pub fn validate_cutting_curve(dr: &OnePlaneDrawing, c: &CuttingCurve) -> Vec<CurveViolation> {
    let bad = dr.validate();
    if !bad.is_empty() {
        return bad.into_iter().map(CurveViolation::Drawing).collect();
    }
    let idx = dr.index().expect("validated drawing");
    let cm = &idx.crossing_of;
    let mut out = Vec::new();
    if !known(dr, cm, c.corner) {
        out.push(CurveViolation::UnknownFace { dart: c.corner });
    }
    for d in [c.s1, c.s2] {
        if !known(dr, cm, d) {
            out.push(CurveViolation::UnknownSubEdge { dart: d });
        }
    }
    if !out.is_empty() {
        return out;
    }
    if c.anchor >= dr.n || idx.origin(dr, c.corner) != c.anchor {
        out.push(CurveViolation::CornerNotAtAnchor);
    }
    let f0 = idx.face(c.corner);
    let f1 = idx.face(idx.twin(c.s1));
    if idx.face(c.s1) != f0 {
        out.push(CurveViolation::StubNotOnFace { stub: 1 });
    }
    if idx.face(c.s2) != f1 {
        out.push(CurveViolation::StubNotOnFace { stub: 2 });
    }
    let (e1, e2) = (c.s1.edge, c.s2.edge);
    if e1 == e2 {
        out.push(CurveViolation::SameEdge);
    }
    if f0 == f1 {
        out.push(CurveViolation::StubIsBridge);
    }
    if cm[e1].is_some() && cm[e1] == cm[e2] && e1 != e2 {
        out.push(CurveViolation::StubsCross);
    }
    if e1 != e2 && dr.edges[e1].key() == dr.edges[e2].key() && (cm[e1].is_some() || cm[e2].is_some()) {
        out.push(CurveViolation::ParallelCrossed);
    }
    let slots = [c.s1, idx.twin(c.s1), c.s2, idx.twin(c.s2)];
    if slots.iter().any(|&d| idx.origin(dr, d) == c.anchor) {
        out.push(CurveViolation::AnchorOnStub);
    }
    out
}

/// All valid cutting curves starting at `anchor`.
pub fn cutting_curves(dr: &OnePlaneDrawing, anchor: Vertex) -> Vec<CuttingCurve> {
    let Ok(idx) = dr.index() else { return Vec::new() };
    if anchor >= dr.n || !dr.validate().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &corner in &dr.rotation[anchor] {
        for &s1 in &idx.faces[idx.face(corner)] {
            for &s2 in &idx.faces[idx.face(idx.twin(s1))] {
                let c = CuttingCurve { anchor, corner, s1, s2 };
                if curve_ok(dr, &idx, &c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// The structural checks of `validate_cutting_curve` on a drawing known to be
/// valid, for curves built from its own face walks.
fn curve_ok(dr: &OnePlaneDrawing, idx: &crate::drawing::DrawingIndex, c: &CuttingCurve) -> bool {
    let cm = &idx.crossing_of;
    let (e1, e2) = (c.s1.edge, c.s2.edge);
    if e1 == e2 || idx.face(c.corner) == idx.face(idx.twin(c.s1)) {
        return false;
    }
    if cm[e1].is_some() && cm[e1] == cm[e2] {
        return false;
    }
    if dr.edges[e1].key() == dr.edges[e2].key() && (cm[e1].is_some() || cm[e2].is_some()) {
        return false;
    }
    [c.s1, idx.twin(c.s1), c.s2, idx.twin(c.s2)].iter().all(|&d| idx.origin(dr, d) != c.anchor)
}

// ---------------------------------------------------------------------------
// Catalog

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GadgetFamily {
    Parallel,
    NonParallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GadgetVertex {
    Anchor,
    X1,
    Y1,
    X2,
    Y2,
    /// Leaf `w_i`, numbered from 1.
    Leaf(usize),
}

impl GadgetVertex {
    fn mirrored(self) -> Self {
        match self {
            Self::X1 => Self::Y1,
            Self::Y1 => Self::X1,
            Self::X2 => Self::Y2,
            Self::Y2 => Self::X2,
            v => v,
        }
    }

    /// Slot name with the two stubs' copies of a shared slot merged.
    fn merged(self) -> Self {
        match self {
            Self::X2 => Self::X1,
            Self::Y2 => Self::Y1,
            v => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GadgetPart {
    Fan,
    Near,
    Far,
}

/// A catalog entry instantiated for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetTemplate {
    pub family: GadgetFamily,
    pub k: usize,
    /// New route of the first stub, from `X1` to `Y1`.
    pub near: Vec<GadgetVertex>,
    /// New route of the second stub, from `X2` to `Y2`.
    pub far: Vec<GadgetVertex>,
    /// Crossing pairs as indices into `edges()`.
    pub crossings: Vec<[usize; 2]>,
}

impl GadgetTemplate {
    /// Fan edges `V w_i` for `i = 1..k`, then the near path, then the far path.
    pub fn edges(&self) -> Vec<([GadgetVertex; 2], GadgetPart)> {
        let mut out: Vec<_> =
            (1..=self.k).map(|i| ([GadgetVertex::Anchor, GadgetVertex::Leaf(i)], GadgetPart::Fan)).collect();
        out.extend(self.near.windows(2).map(|w| ([w[0], w[1]], GadgetPart::Near)));
        out.extend(self.far.windows(2).map(|w| ([w[0], w[1]], GadgetPart::Far)));
        out
    }

    /// Indices of the path edges that touch a slot.
    pub fn attaching_edges(&self) -> Vec<usize> {
        let edges = self.edges();
        (0..edges.len())
            .filter(|&i| edges[i].1 != GadgetPart::Fan)
            .filter(|&i| edges[i].0.iter().any(|v| !matches!(v, GadgetVertex::Leaf(_) | GadgetVertex::Anchor)))
            .collect()
    }

    pub fn crossed_attaching_edges(&self) -> Vec<usize> {
        let crossed: BTreeSet<usize> = self.crossings.iter().flatten().copied().collect();
        self.attaching_edges().into_iter().filter(|e| crossed.contains(e)).collect()
    }

    fn mirrored(&self) -> Self {
        let flip = |p: &[GadgetVertex]| p.iter().map(|v| v.mirrored()).collect();
        GadgetTemplate { near: flip(&self.near), far: flip(&self.far), ..self.clone() }
    }

    /// Checks the path shapes: slot ends, every leaf exactly once inside each
    /// path, crossings between existing non-adjacent edges forming a matching.
    fn check(&self) -> Result<(), String> {
        use GadgetVertex::*;
        let leaves: BTreeSet<GadgetVertex> = (1..=self.k).map(Leaf).collect();
        for (path, a, b) in [(&self.near, X1, Y1), (&self.far, X2, Y2)] {
            let ok_ends = path.first() == Some(&a) && path.last() == Some(&b);
            let inner: Vec<_> = path[1..path.len().saturating_sub(1)].to_vec();
            let set: BTreeSet<_> = inner.iter().copied().collect();
            if !ok_ends || set.len() != inner.len() || set != leaves {
                return Err(format!("k={}: path {:?} is not a slot-to-slot route through all leaves", self.k, path));
            }
        }
        let edges = self.edges();
        let keys: BTreeSet<_> = edges
            .iter()
            .map(|(e, _)| {
                let (a, b) = match self.family {
                    GadgetFamily::Parallel => (e[0].merged(), e[1].merged()),
                    GadgetFamily::NonParallel => (e[0], e[1]),
                };
                (a.min(b), a.max(b))
            })
            .collect();
        if keys.len() != edges.len() {
            return Err(format!("k={}: repeated gadget edge", self.k));
        }
        let mut used = BTreeSet::new();
        for &[a, b] in &self.crossings {
            if a >= edges.len() || b >= edges.len() || !used.insert(a) || !used.insert(b) {
                return Err(format!("k={}: crossings do not form a matching", self.k));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KClass {
    Exact(usize),
    Even(usize),
    Odd(usize),
}

impl KClass {
    fn admits(self, k: usize) -> bool {
        match self {
            KClass::Exact(x) => k == x,
            KClass::Even(m) => k >= m && k % 2 == 0,
            KClass::Odd(m) => k >= m && k % 2 == 1,
        }
    }
}

#[derive(Debug, Clone)]
struct CrossRule {
    pair: [[String; 2]; 2],
    range: Option<String>,
}

/// One record of the catalog, still symbolic in `k`.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: GadgetFamily,
    class: KClass,
    near: Vec<String>,
    far: Vec<String>,
    cross: Vec<CrossRule>,
}

impl CatalogEntry {
    pub fn admits(&self, k: usize) -> bool {
        self.class.admits(k)
    }

    /// The `k` the record was written for, or the smallest `k` of its class.
    pub fn min_k(&self) -> usize {
        match self.class {
            KClass::Exact(k) | KClass::Even(k) | KClass::Odd(k) => k,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.class, KClass::Exact(_))
    }

    pub fn instantiate(&self, k: usize) -> Result<GadgetTemplate, String> {
        let parallel = self.family == GadgetFamily::Parallel;
        let near = expand_sequence(&self.near, k, parallel, true)?;
        let far = expand_sequence(&self.far, k, parallel, false)?;
        let mut t = GadgetTemplate { family: self.family, k, near, far, crossings: Vec::new() };
        let edges = t.edges();
        let find = |a: GadgetVertex, b: GadgetVertex| -> Result<usize, String> {
            let norm = |v: GadgetVertex| if parallel { v.merged() } else { v };
            let (a, b) = (norm(a), norm(b));
            edges
                .iter()
                .position(|(e, _)| {
                    let (x, y) = (norm(e[0]), norm(e[1]));
                    (x, y) == (a, b) || (x, y) == (b, a)
                })
                .ok_or_else(|| format!("k={k}: no gadget edge {a:?}-{b:?}"))
        };
        for rule in &self.cross {
            let values: Vec<Option<i64>> = match &rule.range {
                None => vec![None],
                Some(r) => expand_range(r, k as i64, None)?.into_iter().map(Some).collect(),
            };
            for i in values {
                let mut pair = [0; 2];
                for (slot, [a, b]) in pair.iter_mut().zip(&rule.pair) {
                    *slot = find(vertex(a, k as i64, i, parallel, true)?, vertex(b, k as i64, i, parallel, true)?)?;
                }
                t.crossings.push(pair);
            }
        }
        t.check()?;
        Ok(t)
    }
}

fn eval(expr: &str, k: i64, i: Option<i64>) -> Result<i64, String> {
    let mut total = 0i64;
    let mut sign = 1i64;
    let mut term = String::new();
    let flush = |term: &mut String, sign: i64, total: &mut i64| -> Result<(), String> {
        let v = match term.as_str() {
            "k" => k,
            "i" => i.ok_or_else(|| format!("'i' used outside a loop in '{expr}'"))?,
            t => t.parse::<i64>().map_err(|_| format!("bad term '{t}' in '{expr}'"))?,
        };
        *total += sign * v;
        term.clear();
        Ok(())
    };
    for ch in expr.chars() {
        match ch {
            '+' | '-' => {
                if !term.is_empty() {
                    flush(&mut term, sign, &mut total)?;
                } else if total != 0 || ch == '+' {
                    return Err(format!("malformed expression '{expr}'"));
                }
                sign = if ch == '-' { -1 } else { 1 };
            }
            c => term.push(c),
        }
    }
    if term.is_empty() {
        return Err(format!("malformed expression '{expr}'"));
    }
    flush(&mut term, sign, &mut total)?;
    Ok(total)
}

fn expand_range(token: &str, k: i64, i: Option<i64>) -> Result<Vec<i64>, String> {
    let (span, step) = match token.split_once(':') {
        Some((s, st)) => (s, eval(st, k, i)?),
        None => (token, 1),
    };
    let (a, b) = span.split_once("..").ok_or_else(|| format!("bad range '{token}'"))?;
    let (a, b) = (eval(a, k, i)?, eval(b, k, i)?);
    if step == 0 {
        return Err(format!("zero step in '{token}'"));
    }
    let mut out = Vec::new();
    let mut x = a;
    while (step > 0 && x <= b) || (step < 0 && x >= b) {
        out.push(x);
        x += step;
    }
    Ok(out)
}

fn vertex(tok: &str, k: i64, i: Option<i64>, parallel: bool, near: bool) -> Result<GadgetVertex, String> {
    use GadgetVertex::*;
    Ok(match tok {
        "V" => Anchor,
        "X1" => X1,
        "Y1" => Y1,
        "X2" => X2,
        "Y2" => Y2,
        "X" | "Y" if !parallel => return Err(format!("slot '{tok}' needs a parallel gadget")),
        "X" => {
            if near {
                X1
            } else {
                X2
            }
        }
        "Y" => {
            if near {
                Y1
            } else {
                Y2
            }
        }
        t => {
            let v = eval(t, k, i)?;
            if v < 1 || v > k {
                return Err(format!("leaf {v} out of range for k={k}"));
            }
            Leaf(v as usize)
        }
    })
}

fn expand_sequence(tokens: &[String], k: usize, parallel: bool, near: bool) -> Result<Vec<GadgetVertex>, String> {
    let mut out = Vec::new();
    for t in tokens {
        if t.contains("..") {
            for v in expand_range(t, k as i64, None)? {
                out.push(vertex(&v.to_string(), k as i64, None, parallel, near)?);
            }
        } else {
            out.push(vertex(t, k as i64, None, parallel, near)?);
        }
    }
    Ok(out)
}

fn parse_edge(tok: &str) -> Result<[String; 2], String> {
    let inner = tok
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected (a,b), found '{tok}'"))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| format!("expected (a,b), found '{tok}'"))?;
    Ok([a.trim().to_string(), b.trim().to_string()])
}

/// Parses catalog text into its records.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, String> {
    let mut out = Vec::new();
    let mut cur: Option<CatalogEntry> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |m: String| format!("line {}: {m}", no + 1);
        let words: Vec<&str> = line.split_whitespace().collect();
        match (words[0], cur.as_mut()) {
            ("gadget", None) => {
                if words.len() != 3 {
                    return Err(err("expected 'gadget <family> <class>'".into()));
                }
                let family = match words[1] {
                    "parallel" => GadgetFamily::Parallel,
                    "non-parallel" => GadgetFamily::NonParallel,
                    f => return Err(err(format!("unknown family '{f}'"))),
                };
                let class = if let Some(m) = words[2].strip_prefix("even>=") {
                    KClass::Even(m.parse().map_err(|_| err("bad class".into()))?)
                } else if let Some(m) = words[2].strip_prefix("odd>=") {
                    KClass::Odd(m.parse().map_err(|_| err("bad class".into()))?)
                } else {
                    KClass::Exact(words[2].parse().map_err(|_| err("bad class".into()))?)
                };
                cur = Some(CatalogEntry { family, class, near: vec![], far: vec![], cross: vec![] });
            }
            ("near", Some(e)) => e.near = words[1..].iter().map(|s| s.to_string()).collect(),
            ("far", Some(e)) => e.far = words[1..].iter().map(|s| s.to_string()).collect(),
            ("cross", Some(e)) => {
                let range = match words.len() {
                    3 => None,
                    7 if words[3] == "for" && words[4] == "i" && words[5] == "in" => Some(words[6].to_string()),
                    _ => return Err(err("expected 'cross (a,b) (c,d) [for i in <range>]'".into())),
                };
                let pair = [parse_edge(words[1]).map_err(&err)?, parse_edge(words[2]).map_err(&err)?];
                e.cross.push(CrossRule { pair, range });
            }
            ("end", Some(_)) => out.push(cur.take().expect("open record")),
            (w, _) => return Err(err(format!("unexpected '{w}'"))),
        }
    }
    if cur.is_some() {
        return Err("unterminated record at end of catalog".into());
    }
    Ok(out)
}

/// The built-in catalog, parsed.
pub fn catalog() -> &'static [CatalogEntry] {
    use std::sync::OnceLock;
    static CAT: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CAT.get_or_init(|| parse_catalog(CATALOG).expect("built-in gadget catalog parses"))
}

/// Template for `k` leaves: an exact record when one exists, else the
/// matching parity record.
pub fn select_gadget(family: GadgetFamily, k: usize) -> Result<GadgetTemplate, LeafError> {
    if k < MIN_LEAVES {
        return Err(LeafError::KTooSmall(k));
    }
    let entries: Vec<&CatalogEntry> = catalog().iter().filter(|e| e.family == family && e.admits(k)).collect();
    let entry = entries
        .iter()
        .find(|e| e.is_exact())
        .or(entries.first())
        .ok_or_else(|| LeafError::Catalog(format!("no {family:?} record admits k={k}")))?;
    entry.instantiate(k).map_err(LeafError::Catalog)
}

// ---------------------------------------------------------------------------
// Application

/// Slot data resolved against the host drawing.
struct Frame {
    /// Slot names in boundary order, with identified slots merged.
    names: Vec<GadgetVertex>,
    /// Planarization vertex of each slot.
    host: Vec<usize>,
    /// Host darts replaced at each slot, in counter-clockwise order.
    replaced: Vec<Vec<Dart>>,
}

fn next_ccw(dr: &OnePlaneDrawing, idx: &crate::drawing::DrawingIndex, d: Dart) -> Dart {
    let (v, p) = idx.position[d.index()];
    let rot = &dr.rotation[v];
    rot[(p + 1) % rot.len()]
}

fn frame(dr: &OnePlaneDrawing, idx: &crate::drawing::DrawingIndex, c: &CuttingCurve) -> Frame {
    use GadgetVertex::*;
    let (t1, t2) = (idx.twin(c.s1), idx.twin(c.s2));
    let x1 = idx.origin(dr, c.s1);
    let y1 = idx.origin(dr, t1);
    let x2 = idx.origin(dr, c.s2);
    let y2 = idx.origin(dr, t2);
    let share_x = x1 == x2 && x1 < dr.n && next_ccw(dr, idx, c.s1) == c.s2;
    let share_y = y1 == y2 && y1 < dr.n && next_ccw(dr, idx, t2) == t1;
    let mut f = Frame { names: vec![Anchor], host: vec![c.anchor], replaced: vec![vec![]] };
    let mut push = |name, host, darts: Vec<Dart>| {
        f.names.push(name);
        f.host.push(host);
        f.replaced.push(if host < dr.n { darts } else { vec![] });
    };
    if share_x {
        push(X1, x1, vec![c.s1, c.s2]);
    } else {
        push(X1, x1, vec![c.s1]);
        push(X2, x2, vec![c.s2]);
    }
    if share_y {
        push(Y1, y1, vec![t2, t1]);
    } else {
        push(Y2, y2, vec![t2]);
        push(Y1, y1, vec![t1]);
    }
    f
}

/// Replaces the consecutive run `block` of `row` by `with`.
fn splice(row: &mut Vec<Dart>, block: &[Dart], with: &[Dart]) -> bool {
    let Some(p) = row.iter().position(|&d| d == block[0]) else { return false };
    row.rotate_left(p);
    if row.len() < block.len() || row[..block.len()] != *block {
        return false;
    }
    row.splice(..block.len(), with.iter().copied());
    true
}

/// Adds `k` leaves to the curve's anchor, rerouting both stubs through them.
pub fn apply_leaf_addition(
    dr: &OnePlaneDrawing,
    c: &CuttingCurve,
    k: usize,
    leaf_label: EdgeLabel,
) -> Result<OnePlaneDrawing, LeafError> {
    if k < MIN_LEAVES {
        return Err(LeafError::KTooSmall(k));
    }
    let bad = validate_cutting_curve(dr, c);
    if !bad.is_empty() {
        return Err(LeafError::Curve(bad));
    }
    let idx = dr.index().expect("validated drawing");
    let fr = frame(dr, &idx, c);
    let family = if fr.names.len() == 3 { GadgetFamily::Parallel } else { GadgetFamily::NonParallel };
    let template = select_gadget(family, k)?;
    for t in [template.clone(), template.mirrored()] {
        if let Some(out) = fit(dr, &idx, c, &fr, &t, leaf_label) {
            return Ok(out);
        }
    }
    Err(LeafError::NoFit)
}

fn fit(
    dr: &OnePlaneDrawing,
    idx: &crate::drawing::DrawingIndex,
    c: &CuttingCurve,
    fr: &Frame,
    t: &GadgetTemplate,
    leaf_label: EdgeLabel,
) -> Option<OnePlaneDrawing> {
    use GadgetVertex::*;
    let n = dr.n;
    let s = fr.names.len();
    let hub = s + t.k;
    let local = |v: GadgetVertex| -> usize {
        match v {
            Leaf(i) => s + i - 1,
            v => fr
                .names
                .iter()
                .position(|&x| x == v)
                .or_else(|| fr.names.iter().position(|&x| x == v.merged()))
                .expect("slot present in frame"),
        }
    };
    // Local drawing: gadget edges, then the frame cycle, then hub spokes.
    let gadget = t.edges();
    let mut edges: Vec<HostEdge> = gadget.iter().map(|(e, _)| HostEdge::new(local(e[0]), local(e[1]), 0)).collect();
    let g = edges.len();
    for i in 0..s {
        edges.push(HostEdge::new(i, (i + 1) % s, 1));
    }
    for i in 0..s {
        edges.push(HostEdge::new(hub, i, 1));
    }
    let mut keys = BTreeSet::new();
    if !edges.iter().all(|e| keys.insert(e.key())) {
        return None;
    }
    let crossed: BTreeSet<usize> = t.crossings.iter().flatten().copied().collect();
    for (i, &h) in fr.host.iter().enumerate() {
        if h >= n {
            let touching: Vec<usize> = (0..g).filter(|&e| edges[e].ends.contains(&i)).collect();
            if touching.len() != 1 || crossed.contains(&touching[0]) {
                return None;
            }
        }
    }
    let mut local_dr = realize(hub + 1, edges, t.crossings.clone(), false).ok()?;
    let lidx = local_dr.index().ok()?;
    let probe = Dart::real(g, 0);
    let outside = lidx.faces[lidx.face(probe)].iter().any(|&d| lidx.origin(&local_dr, d) == hub);
    if outside {
        for row in &mut local_dr.rotation {
            row.reverse();
        }
    }
    // Host ids and end indices for every gadget edge.
    let mut host_edges = dr.edges.clone();
    let mut id: Vec<Option<EdgeId>> = vec![None; g];
    let mut ends = vec![[0u8, 1u8]; g];
    let host_vertex = |l: usize| if l < s { fr.host[l] } else { n + l - s };
    for (stub, part) in [(c.s1, GadgetPart::Near), (c.s2, GadgetPart::Far)] {
        let e = stub.edge;
        let j = usize::from(stub.end);
        let crossed_stub = idx.crossing_of[e].is_some();
        // Slot where the reused piece attaches, as a local vertex.
        let anchor_slot = if crossed_stub {
            let d = if stub.at_dummy { stub } else { idx.twin(stub) };
            fr.host.iter().position(|&h| h == idx.origin(dr, d))?
        } else {
            let name = if part == GadgetPart::Near { X1 } else { X2 };
            local(name)
        };
        let ge = (0..g).find(|&i| gadget[i].1 == part && local_dr.edges[i].ends.contains(&anchor_slot))?;
        let slot_end = usize::from(local_dr.edges[ge].ends[1] == anchor_slot);
        let z = host_vertex(local_dr.edges[ge].ends[1 - slot_end]);
        id[ge] = Some(e);
        if crossed_stub {
            host_edges[e].ends[j] = z;
            ends[ge][slot_end] = j as u8;
            ends[ge][1 - slot_end] = j as u8;
        } else {
            host_edges[e].ends[1 - j] = z;
            ends[ge][slot_end] = j as u8;
            ends[ge][1 - slot_end] = (1 - j) as u8;
        }
    }
    for i in 0..g {
        if id[i].is_some() {
            continue;
        }
        let label = match gadget[i].1 {
            GadgetPart::Fan => leaf_label,
            GadgetPart::Near => dr.edges[c.s1.edge].label,
            GadgetPart::Far => dr.edges[c.s2.edge].label,
        };
        let [a, b] = local_dr.edges[i].ends;
        id[i] = Some(host_edges.len());
        host_edges.push(HostEdge { ends: [host_vertex(a), host_vertex(b)], label });
    }
    let id: Vec<EdgeId> = id.into_iter().map(|e| e.expect("assigned")).collect();
    let map = |d: Dart| Dart { edge: id[d.edge], end: ends[d.edge][usize::from(d.end)], at_dummy: d.at_dummy };
    // Counter-clockwise gadget darts at local vertex `v` strictly between the
    // frame darts towards `from` and `to`.
    let run = |v: usize, from: usize, to: usize| -> Option<Vec<Dart>> {
        let fe = |a: usize, b: usize| -> Dart {
            let i = (0..s).find(|&i| local_dr.edges[g + i].key() == [a.min(b), a.max(b)]).expect("frame edge");
            Dart::real(g + i, u8::from(local_dr.edges[g + i].ends[1] == a))
        };
        let row = &local_dr.rotation[v];
        let p = row.iter().position(|&d| d == fe(v, from))?;
        let mut out = Vec::new();
        for step in 1..row.len() {
            let d = row[(p + step) % row.len()];
            if d == fe(v, to) {
                return Some(out);
            }
            if d.edge >= g {
                return None;
            }
            out.push(map(d));
        }
        None
    };
    let mut rotation: Vec<Vec<Dart>> = dr.rotation[..n].to_vec();
    let mut placed = 0;
    for i in 0..s {
        let (from, to) = ((i + s - 1) % s, (i + 1) % s);
        let darts = run(i, from, to)?;
        placed += darts.len();
        let h = fr.host[i];
        if h >= n {
            continue;
        }
        if i == 0 {
            let row = &mut rotation[h];
            let p = row.iter().position(|&d| d == c.corner)?;
            row.rotate_left(p);
            row.splice(0..0, darts);
        } else if !splice(&mut rotation[h], &fr.replaced[i], &darts) {
            return None;
        }
    }
    let slot_darts: usize = (0..s).map(|i| (0..g).filter(|&e| local_dr.edges[e].ends.contains(&i)).count()).sum();
    if placed != slot_darts {
        return None;
    }
    for l in s..hub {
        rotation.push(local_dr.rotation[l].iter().map(|&d| map(d)).collect());
    }
    rotation.extend(dr.rotation[n..].iter().cloned());
    let mut crossings = dr.crossings.clone();
    for (ci, &[a, b]) in local_dr.crossings.iter().enumerate() {
        crossings.push([id[a], id[b]]);
        rotation.push(local_dr.rotation[hub + 1 + ci].iter().map(|&d| map(d)).collect());
    }
    let out = OnePlaneDrawing { n: n + t.k, edges: host_edges, crossings, rotation, intermediate: dr.intermediate };
    let mut count: HashMap<[Vertex; 2], usize> = HashMap::new();
    for e in &out.edges {
        *count.entry(e.key()).or_default() += 1;
    }
    if id.iter().any(|&e| count[&out.edges[e].key()] > 1) {
        return None;
    }
    if !out.validate().is_empty() {
        return None;
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// Reference contexts

/// A small drawing with curves that exercise one kind of slot layout.
#[derive(Debug, Clone)]
pub struct ReferenceContext {
    pub name: &'static str,
    pub family: GadgetFamily,
    pub drawing: OnePlaneDrawing,
    pub curves: Vec<CuttingCurve>,
}

/// Drawings covering parallel stubs, distinct slots, a shared first slot, a
/// shared last slot, and stubs ending at crossings. Vertex 0 is the anchor.
pub fn reference_contexts() -> Vec<ReferenceContext> {
    let e = HostEdge::new;
    let mk = |name, n, edges: Vec<HostEdge>, crossings: Vec<[EdgeId; 2]>, pick: &dyn Fn(&OnePlaneDrawing, &CuttingCurve) -> bool| {
        let intermediate = {
            let keys: BTreeSet<_> = edges.iter().map(|h| h.key()).collect();
            keys.len() < edges.len()
        };
        let drawing = realize(n, edges, crossings, intermediate).expect("reference context is drawable");
        let curves: Vec<_> = cutting_curves(&drawing, 0).into_iter().filter(|c| pick(&drawing, c)).collect();
        let family = if name == "parallel" { GadgetFamily::Parallel } else { GadgetFamily::NonParallel };
        ReferenceContext { name, family, drawing, curves }
    };
    let on = |a: EdgeId, b: EdgeId| move |_: &OnePlaneDrawing, c: &CuttingCurve| c.s1.edge == a && c.s2.edge == b;
    let crossed_stub = |dr: &OnePlaneDrawing, c: &CuttingCurve| {
        let cm = dr.crossing_map();
        cm[c.s1.edge].is_some() || cm[c.s2.edge].is_some()
    };
    vec![
        mk("parallel", 3, vec![e(0, 1, 0), e(0, 2, 0), e(1, 2, 1), e(1, 2, 2)], vec![], &on(2, 3)),
        mk(
            "distinct-slots",
            5,
            vec![e(0, 1, 0), e(0, 2, 0), e(1, 2, 1), e(1, 3, 0), e(2, 4, 0), e(3, 4, 2)],
            vec![],
            &on(2, 5),
        ),
        mk("shared-first-slot", 4, vec![e(0, 1, 0), e(0, 2, 0), e(1, 2, 1), e(1, 3, 2), e(2, 3, 0)], vec![], &on(2, 3)),
        mk("shared-last-slot", 4, vec![e(0, 1, 0), e(0, 3, 0), e(1, 3, 1), e(2, 3, 2), e(1, 2, 0)], vec![], &on(2, 3)),
        mk(
            "crossed-stubs",
            6,
            vec![
                e(1, 2, 1),
                e(1, 3, 1),
                e(1, 4, 2),
                e(1, 5, 2),
                e(2, 3, 1),
                e(2, 4, 2),
                e(2, 5, 1),
                e(3, 4, 1),
                e(3, 5, 2),
                e(4, 5, 1),
                e(0, 1, 0),
                e(0, 2, 0),
            ],
            vec![[1, 5]],
            &crossed_stub,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use GadgetVertex::*;

    fn leaves(xs: &[usize]) -> Vec<GadgetVertex> {
        xs.iter().map(|&i| Leaf(i)).collect()
    }

    #[test]
    fn catalog_golden_entry() {
        let t = select_gadget(GadgetFamily::NonParallel, 7).unwrap();
        let mut near = vec![X1];
        near.extend(leaves(&[1, 2, 3, 4, 5, 6, 7]));
        near.push(Y1);
        let mut far = vec![X2];
        far.extend(leaves(&[6, 2, 4, 1, 3, 5, 7]));
        far.push(Y2);
        assert_eq!(t.near, near);
        assert_eq!(t.far, far);
        assert_eq!(t.crossings.len(), 4);
        let edges = t.edges();
        let named: Vec<_> = t.crossings.iter().map(|&[a, b]| (edges[a].0, edges[b].0)).collect();
        assert_eq!(named[3], ([Leaf(6), Leaf(2)], [Leaf(4), Leaf(1)]));
        assert_eq!(catalog().len(), 10);
    }

    #[test]
    fn catalog_extends_to_larger_k() {
        for k in 5..=25 {
            for fam in [GadgetFamily::Parallel, GadgetFamily::NonParallel] {
                let t = select_gadget(fam, k).unwrap();
                assert_eq!(t.k, k);
                if fam == GadgetFamily::NonParallel {
                    assert!(t.crossed_attaching_edges().len() <= 1, "{k}");
                }
            }
        }
        assert_eq!(select_gadget(GadgetFamily::Parallel, 4), Err(LeafError::KTooSmall(4)));
    }

    #[test]
    fn catalog_parse_errors_carry_line_numbers() {
        let e = parse_catalog("gadget parallel 5\nnear X 1 Y\nbogus\nend\n").unwrap_err();
        assert!(e.starts_with("line 3"), "{e}");
        assert!(parse_catalog("gadget parallel 5\n").is_err());
    }

    #[test]
    fn expressions_and_ranges() {
        assert_eq!(eval("k-1", 9, None), Ok(8));
        assert_eq!(eval("i+2", 9, Some(3)), Ok(5));
        assert!(eval("i", 9, None).is_err());
        assert_eq!(expand_range("k..3:-2", 9, None), Ok(vec![9, 7, 5, 3]));
        assert_eq!(expand_range("4..2:2", 9, None), Ok(vec![]));
    }

    #[test]
    fn every_context_has_curves() {
        for ctx in reference_contexts() {
            assert!(!ctx.curves.is_empty(), "{}", ctx.name);
            for c in &ctx.curves {
                assert_eq!(validate_cutting_curve(&ctx.drawing, c), vec![], "{}", ctx.name);
            }
        }
    }

    #[test]
    fn leaf_addition_on_every_context() {
        for ctx in reference_contexts() {
            for k in [5, 6, 7, 8, 9, 12] {
                let c = &ctx.curves[0];
                let out = apply_leaf_addition(&ctx.drawing, c, k, EdgeLabel::Guest(0))
                    .unwrap_or_else(|e| panic!("{} k={k}: {e}", ctx.name));
                assert_eq!(out.n, ctx.drawing.n + k);
                assert_eq!(out.validate(), vec![]);
                let added = out.crossing_count() - ctx.drawing.crossing_count();
                assert_eq!(added, select_gadget(ctx.family, k).unwrap().crossings.len());
            }
        }
    }

    #[test]
    fn parallel_pair_is_removed() {
        let ctx = &reference_contexts()[0];
        let out = apply_leaf_addition(&ctx.drawing, &ctx.curves[0], 6, EdgeLabel::Guest(0)).unwrap();
        let keys: BTreeSet<_> = out.edges.iter().map(|e| e.key()).collect();
        assert_eq!(keys.len(), out.edges.len());
    }

    #[test]
    fn crossing_stubs_are_rejected() {
        let ctx = &reference_contexts()[4];
        let dr = &ctx.drawing;
        let idx = dr.index().unwrap();
        let d = Dart::dummy(1, 0);
        let c = CuttingCurve { anchor: 0, corner: dr.rotation[0][0], s1: d, s2: Dart::dummy(5, 0) };
        let v = validate_cutting_curve(dr, &c);
        assert!(v.iter().any(|x| x.code() == "stubs-cross"), "{v:?}");
        let _ = idx;
        assert_eq!(apply_leaf_addition(dr, &ctx.curves[0], 4, EdgeLabel::Guest(0)), Err(LeafError::KTooSmall(4)));
    }
}
