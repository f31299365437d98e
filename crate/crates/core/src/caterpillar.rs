//! Two paths plus a caterpillar.
//!
//! A packing of three paths on the backbone length is the base; every leafy
//! spine vertex then receives its leaves through a leaf addition whose two
//! stubs belong to the two path guests, so both paths absorb every leaf.
//! Small shapes the additions cannot reach come from whole templates.

mod templates;

use crate::certificate::{validate_certificate, PackingCertificate, Provenance};
use crate::drawing::{EdgeLabel, OnePlaneDrawing};
use crate::few_crossings::pack_three_paths;
use crate::graph::{classify_tree, is_h_legged, CaterpillarDecomposition, GuestGraph, GuestKind, Vertex};
use crate::leaf::{cutting_curves, apply_leaf_addition, CuttingCurve, MIN_LEAVES};
use crate::packing::{HostBuilder, PackError};
use serde::Deserialize;
use templates::{DOUBLE_STARS, SINGLE_LEAFY};

/// Guest index of the caterpillar; guests 0 and 1 are the paths.
pub const CATERPILLAR: usize = 2;

/// A packing of three paths on `n_prime` vertices with the caterpillar's
/// backbone as guest [`CATERPILLAR`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseTemplate {
    pub n_prime: usize,
    /// May carry parallel edges between the two path guests.
    pub drawing: OnePlaneDrawing,
    /// Host vertices of the backbone in order.
    pub backbone: Vec<Vertex>,
    /// A usable cutting curve for each internal backbone position.
    pub curves: Vec<Option<CuttingCurve>>,
}

/// A finished packing stored as host edges and crossing pairs.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Whole {
    pub n: usize,
    /// Caterpillar edges; the leading ones walk the backbone.
    pub tree: &'static [[Vertex; 2]],
    pub paths: [&'static [Vertex]; 2],
    pub crossings: &'static [[[Vertex; 2]; 2]],
}

impl Whole {
    fn drawing(&self) -> Result<OnePlaneDrawing, PackError> {
        let mut b = HostBuilder::new(self.n);
        b.path(self.paths[0], 0);
        b.path(self.paths[1], 1);
        for &[x, y] in self.tree {
            b.edge(x, y, CATERPILLAR);
        }
        for &[e, f] in self.crossings {
            b.cross(e, f)?;
        }
        b.drawing()
    }

    /// The first `len` backbone vertices read off the leading tree edges.
    fn backbone(&self, len: usize) -> Vec<Vertex> {
        let mut out = vec![self.tree[0][0]];
        out.extend(self.tree[..len - 1].iter().map(|e| e[1]));
        out
    }

    fn base(&self, backbone_len: usize) -> Result<BaseTemplate, PackError> {
        let dr = self.drawing()?;
        Ok(with_backbone(dr, self.backbone(backbone_len)))
    }
}

fn relabel(dr: &mut OnePlaneDrawing, to: [usize; 3]) {
    for e in &mut dr.edges {
        if let EdgeLabel::Guest(g) = e.label {
            e.label = EdgeLabel::Guest(to[g]);
        }
    }
}

fn guest_edges(dr: &OnePlaneDrawing, guest: usize) -> Vec<[Vertex; 2]> {
    dr.edges.iter().filter(|e| e.label == EdgeLabel::Guest(guest)).map(|e| e.ends).collect()
}

fn guest_order(dr: &OnePlaneDrawing, guest: usize) -> Option<Vec<Vertex>> {
    GuestGraph::new(dr.n, guest_edges(dr, guest), GuestKind::General).ok()?.path_order()
}

/// Curves at `anchor` whose stubs are one edge of each path guest.
pub fn leaf_curves(dr: &OnePlaneDrawing, anchor: Vertex) -> Vec<CuttingCurve> {
    let mut out: Vec<CuttingCurve> = cutting_curves(dr, anchor)
        .into_iter()
        .filter(|c| {
            let (a, b) = (dr.edges[c.s1.edge].label, dr.edges[c.s2.edge].label);
            matches!((a, b), (EdgeLabel::Guest(0), EdgeLabel::Guest(1)) | (EdgeLabel::Guest(1), EdgeLabel::Guest(0)))
        })
        .collect();
    // Curves across a parallel pair first: removing those is never optional.
    out.sort_by_key(|c| dr.edges[c.s1.edge].key() != dr.edges[c.s2.edge].key());
    out
}

impl BaseTemplate {
    /// Wraps a drawing whose guest [`CATERPILLAR`] is a spanning path.
    pub fn from_drawing(drawing: OnePlaneDrawing) -> Option<Self> {
        let backbone = guest_order(&drawing, CATERPILLAR)?;
        Some(with_backbone(drawing, backbone))
    }
}

fn with_backbone(drawing: OnePlaneDrawing, backbone: Vec<Vertex>) -> BaseTemplate {
    let len = backbone.len();
    let curves = (0..len)
        .map(|i| if i == 0 || i + 1 == len { None } else { leaf_curves(&drawing, backbone[i]).into_iter().next() })
        .collect();
    BaseTemplate { n_prime: len, drawing, backbone, curves }
}

#[derive(Deserialize)]
struct Backbone5 {
    /// Takes leaves on several spine vertices, or twice on the last one.
    spread: OnePlaneDrawing,
    /// Takes two additions on the middle spine vertex.
    middle: OnePlaneDrawing,
}

fn backbone5() -> Result<Backbone5, PackError> {
    serde_json::from_str(include_str!("../data/backbone5.json")).map_err(|e| PackError::Internal(e.to_string()))
}

fn backbone5_base(dr: OnePlaneDrawing) -> Result<BaseTemplate, PackError> {
    BaseTemplate::from_drawing(dr).ok_or_else(|| PackError::Internal("backbone-5 base lost its backbone".into()))
}

/// Base packing of three paths on `n_prime` vertices. For five vertices the
/// drawing is intermediate, with two pairs of parallel path edges.
pub fn base_three_paths(n_prime: usize) -> Result<BaseTemplate, PackError> {
    if n_prime < 5 {
        return Err(PackError::NTooSmall { n: n_prime, min: 5 });
    }
    if n_prime == 5 {
        return backbone5_base(backbone5()?.spread);
    }
    let mut dr = pack_three_paths(n_prime)?.drawing;
    relabel(&mut dr, BACKBONE_ROLE);
    BaseTemplate::from_drawing(dr).ok_or_else(|| PackError::Internal("base template lost its backbone".into()))
}

/// Guest relabeling applied to the three-path packings.
const BACKBONE_ROLE: [usize; 3] = [0, 2, 1];

/// One leaf addition: `count` leaves at backbone position `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeafStep {
    pub pos: usize,
    pub count: usize,
}

/// Applies the steps in order, trying the usable curves of each step until
/// the rest succeeds and no parallel edge remains. A curve is skipped when it
/// leaves a pending step within two backbone positions without curves.
pub fn run_leaf_steps(base: &BaseTemplate, steps: &[LeafStep]) -> Option<OnePlaneDrawing> {
    fn go(dr: &OnePlaneDrawing, backbone: &[Vertex], steps: &[LeafStep], budget: &mut usize) -> Option<OnePlaneDrawing> {
        let Some((s, rest)) = steps.split_first() else {
            let mut done = dr.clone();
            done.intermediate = false;
            return done.validate().is_empty().then_some(done);
        };
        let near: Vec<Vertex> = rest.iter().filter(|r| r.pos.abs_diff(s.pos) <= 2).map(|r| backbone[r.pos]).collect();
        for c in leaf_curves(dr, backbone[s.pos]) {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if let Ok(next) = apply_leaf_addition(dr, &c, s.count, EdgeLabel::Guest(CATERPILLAR)) {
                if near.iter().any(|&v| leaf_curves(&next, v).is_empty()) {
                    continue;
                }
                if let Some(out) = go(&next, backbone, rest, budget) {
                    return Some(out);
                }
            }
        }
        None
    }
    let mut budget = 10_000;
    go(&base.drawing, &base.backbone, steps, &mut budget)
}

fn steps_or_fail(base: &BaseTemplate, steps: &[LeafStep]) -> Result<OnePlaneDrawing, PackError> {
    run_leaf_steps(base, steps).ok_or_else(|| PackError::Internal(format!("leaf additions {steps:?} found no curve")))
}

/// Splits `count` leaves into two additions of at least [`MIN_LEAVES`].
fn twice(pos: usize, count: usize) -> [LeafStep; 2] {
    [LeafStep { pos, count: count / 2 }, LeafStep { pos, count: count - count / 2 }]
}

/// Drawing and provenance for the double star with `a <= b` legs.
fn backbone4_drawing(a: usize, b: usize) -> Result<(OnePlaneDrawing, Provenance), PackError> {
    debug_assert!(a <= b);
    if a < 2 {
        return Err(PackError::no_packing(
            "degree-too-high",
            format!("a spine vertex with {b} legs has degree n - 2 > n - 3"),
        ));
    }
    let star = |x: usize, y: usize| DOUBLE_STARS.iter().find(|(k, _)| *k == (x, y)).map(|(_, w)| *w).expect("catalogued");
    let prov = |additions: i64| {
        Provenance::new("caterpillar-double-star", &[("n1", a as i64), ("n2", b as i64), ("additions", additions)])
    };
    if b <= 6 {
        return Ok((star(a, b).drawing()?, prov(0)));
    }
    if a <= 6 {
        // The template's first spine vertex has two legs; grow it to `b`.
        let base = star(2, a).base(4)?;
        let dr = steps_or_fail(&base, &[LeafStep { pos: 1, count: b - 2 }])?;
        return Ok((dr, prov(1)));
    }
    let base = star(2, 2).base(4)?;
    let dr = steps_or_fail(&base, &[LeafStep { pos: 1, count: a - 2 }, LeafStep { pos: 2, count: b - 2 }])?;
    Ok((dr, prov(2)))
}

/// Drawing and provenance for a 5-legged caterpillar on a five-vertex
/// backbone; `counts[p]` is the number of leaves added at backbone position `p`.
fn backbone5_drawing(counts: &[usize]) -> Result<(OnePlaneDrawing, Provenance), PackError> {
    let leafy: Vec<usize> = (1..4).filter(|&p| counts[p] > 0).collect();
    let prov = |base: &str, additions: usize| {
        Provenance::new(&format!("caterpillar-backbone5-{base}"), &[("leafy", leafy.len() as i64), ("additions", additions as i64)])
    };
    let whole = |j: usize, k: usize| -> Result<OnePlaneDrawing, PackError> {
        SINGLE_LEAFY.iter().find(|(key, _)| *key == (j, k)).map(|(_, w)| w.drawing()).expect("catalogued")
    };
    match leafy[..] {
        [] => Err(PackError::no_packing("too-few-vertices", "a path on five vertices has n < 6")),
        [2] if counts[2] < 2 * MIN_LEAVES => Ok((whole(2, counts[2])?, prov("template", 0))),
        [2] => {
            let base = backbone5_base(backbone5()?.middle)?;
            Ok((steps_or_fail(&base, &twice(2, counts[2]))?, prov("middle", 2)))
        }
        // An end spine vertex alone: the mapping onto the input may reverse the backbone.
        [p] if counts[p] < 2 * MIN_LEAVES => Ok((whole(1, counts[p])?, prov("template", 0))),
        [p] => {
            let base = backbone5_base(backbone5()?.spread)?;
            Ok((steps_or_fail(&base, &twice(3, counts[p]))?, prov("spread", 2)))
        }
        _ => {
            let base = backbone5_base(backbone5()?.spread)?;
            let steps: Vec<LeafStep> = leafy.iter().map(|&pos| LeafStep { pos, count: counts[pos] }).collect();
            Ok((steps_or_fail(&base, &steps)?, prov("spread", steps.len())))
        }
    }
}

/// Decomposition of `g` with the backbone reversed when `rev` is set.
fn oriented(d: &CaterpillarDecomposition, rev: bool) -> (Vec<Vertex>, Vec<Vec<Vertex>>) {
    let (mut bb, mut lv) = (d.backbone.clone(), d.leaves.clone());
    if rev {
        bb.reverse();
        lv.reverse();
    }
    (bb, lv)
}

/// An isomorphism from caterpillar `from` onto caterpillar `to`.
pub fn caterpillar_isomorphism(from: &GuestGraph, to: &GuestGraph) -> Option<Vec<Vertex>> {
    let (cf, ct) = (classify_tree(from), classify_tree(to));
    let (df, dt) = (cf.decomposition()?, ct.decomposition()?);
    if from.n() != to.n() || df.backbone.len() != dt.backbone.len() {
        return None;
    }
    let (fb, fl) = oriented(df, false);
    for rev in [false, true] {
        let (tb, tl) = oriented(dt, rev);
        if fl.iter().zip(&tl).any(|(x, y)| x.len() != y.len()) {
            continue;
        }
        let mut map = vec![0; from.n()];
        for (&x, &y) in fb.iter().zip(&tb) {
            map[x] = y;
        }
        for (xs, ys) in fl.iter().zip(&tl) {
            for (&x, &y) in xs.iter().zip(ys) {
                map[x] = y;
            }
        }
        return Some(map);
    }
    None
}

/// Certificate for the instance (path, path, `t`) from a drawing whose
/// guest [`CATERPILLAR`] is isomorphic to `t`.
fn certificate_for(dr: OnePlaneDrawing, t: &GuestGraph, provenance: Provenance) -> Result<PackingCertificate, PackError> {
    let n = dr.n;
    let lost = |what: &str| PackError::Internal(format!("drawing lost its {what}"));
    let mut mappings = Vec::with_capacity(3);
    for g in 0..2 {
        mappings.push(guest_order(&dr, g).ok_or_else(|| lost("paths"))?);
    }
    let host_t = GuestGraph::new(n, guest_edges(&dr, CATERPILLAR), GuestKind::General).map_err(|_| lost("caterpillar"))?;
    mappings.push(caterpillar_isomorphism(t, &host_t).ok_or_else(|| lost("caterpillar"))?);
    let cert = PackingCertificate {
        instance: vec![GuestGraph::path_on(n), GuestGraph::path_on(n), t.clone()],
        mappings,
        drawing: dr,
        provenance,
    };
    match validate_certificate(&cert).first() {
        None => Ok(cert),
        Some(v) => Err(PackError::Internal(format!("caterpillar certificate invalid: {v}"))),
    }
}

/// Packs two paths with the caterpillar `t`.
///
/// Refuses exactly when `n < 6` or some vertex has degree above `n - 3`.
/// Covers double stars and 5-legged caterpillars; other caterpillars are
/// `Unsupported`.
pub fn pack_two_paths_caterpillar(t: &GuestGraph) -> Result<PackingCertificate, PackError> {
    let class = classify_tree(t);
    let d = class.decomposition().ok_or(PackError::NotACaterpillar)?;
    let n = t.n();
    if n < 6 {
        return Err(PackError::no_packing("too-few-vertices", format!("two paths and a caterpillar need n >= 6, got {n}")));
    }
    if let Some((v, &deg)) = t.degrees().iter().enumerate().find(|(_, &deg)| deg + 3 > n) {
        return Err(PackError::no_packing(
            "degree-too-high",
            format!("vertex {v} has degree {deg} > n - 3 = {}", n - 3),
        ));
    }
    let n_prime = d.backbone.len();
    let mut counts = vec![0; n_prime];
    for (i, l) in d.leaves.iter().enumerate() {
        counts[i + 1] = l.len();
    }
    let (dr, prov) = match n_prime {
        4 => {
            let (x, y) = (d.leg_counts[0], d.leg_counts[1]);
            backbone4_drawing(x.min(y), x.max(y))?
        }
        _ if !is_h_legged(d, MIN_LEAVES) => {
            return Err(PackError::Unsupported(format!(
                "caterpillar with a spine vertex carrying 1 to {} leaves",
                MIN_LEAVES - 1
            )))
        }
        5 => backbone5_drawing(&counts)?,
        _ => {
            let base = base_three_paths(n_prime)?;
            let steps: Vec<LeafStep> = (1..n_prime - 1).filter(|&p| counts[p] > 0).map(|pos| LeafStep { pos, count: counts[pos] }).collect();
            let dr = steps_or_fail(&base, &steps)?;
            let prov = Provenance::new(
                "caterpillar-leaf-additions",
                &[("n_prime", n_prime as i64), ("additions", steps.len() as i64)],
            );
            (dr, prov)
        }
    };
    certificate_for(dr, t, prov)
}

/// Packs two paths with the caterpillar on a five-vertex backbone described by `d`.
pub fn pack_backbone5(d: &CaterpillarDecomposition) -> Result<PackingCertificate, PackError> {
    if d.backbone.len() != 5 {
        return Err(PackError::Unsupported(format!("backbone has {} vertices, not 5", d.backbone.len())));
    }
    pack_two_paths_caterpillar(&GuestGraph::caterpillar(&d.leg_counts))
}

/// Packs two paths with the double star whose spine vertices carry `n1` and
/// `n2` legs, backbone ends included.
pub fn pack_backbone4(n1: usize, n2: usize) -> Result<PackingCertificate, PackError> {
    if n1.min(n2) == 0 {
        return Err(PackError::Unsupported("a double star needs a leg on each spine vertex".into()));
    }
    pack_two_paths_caterpillar(&GuestGraph::caterpillar(&[n1, n2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn valid(c: &PackingCertificate) {
        assert_eq!(validate_certificate(c), vec![]);
    }

    #[test]
    fn whole_templates_realize() {
        for ((a, b), w) in DOUBLE_STARS.iter() {
            let dr = w.drawing().unwrap();
            assert!(dr.validate().is_empty(), "double star {a},{b}");
            assert_eq!(dr.n, a + b + 2);
        }
        for ((j, k), w) in SINGLE_LEAFY.iter() {
            let dr = w.drawing().unwrap();
            assert!(dr.validate().is_empty(), "single leafy {j},{k}");
            assert_eq!(dr.n, 5 + k);
        }
    }

    #[test]
    fn base_five_is_intermediate_with_two_parallel_pairs() {
        let b = base_three_paths(5).unwrap();
        assert!(b.drawing.intermediate);
        assert!(b.drawing.validate().is_empty());
        let mut keys: Vec<_> = b.drawing.edges.iter().map(|e| e.key()).collect();
        keys.sort();
        let before = keys.len();
        keys.dedup();
        assert_eq!(before - keys.len(), 2);
        assert_eq!(b.backbone.len(), 5);
    }

    #[test]
    fn bases_have_curves_at_every_internal_vertex() {
        for n in 6..=30 {
            let b = base_three_paths(n).unwrap();
            assert!(b.curves[1..n - 1].iter().all(Option::is_some), "n' = {n}");
        }
    }

    #[test]
    fn small_refusals() {
        assert_eq!(pack_two_paths_caterpillar(&GuestGraph::path_on(5)).unwrap_err().code(), "too-few-vertices");
        assert_eq!(pack_backbone4(1, 7).unwrap_err().code(), "degree-too-high");
        let star = GuestGraph::caterpillar(&[8]);
        assert_eq!(pack_two_paths_caterpillar(&star).unwrap_err().code(), "degree-too-high");
        let cycle = GuestGraph::cycle_on(8);
        assert_eq!(pack_two_paths_caterpillar(&cycle).unwrap_err(), PackError::NotACaterpillar);
    }

    #[test]
    fn one_leafy_vertex_on_backbone_six() {
        let t = GuestGraph::caterpillar(&[1, 5, 0, 1]);
        assert_eq!(t.n(), 11);
        let c = pack_two_paths_caterpillar(&t).unwrap();
        valid(&c);
        assert_eq!(c.provenance.strategy, "caterpillar-leaf-additions");
    }

    #[test]
    fn double_stars_up_to_twenty_legs() {
        for a in 2..=20 {
            for b in a..=20 {
                let c = pack_backbone4(a, b).unwrap_or_else(|e| panic!("({a}, {b}): {e}"));
                valid(&c);
                let c = pack_backbone4(b, a).unwrap();
                valid(&c);
            }
        }
    }

    #[test]
    fn backbone5_shapes() {
        let ks = [0, 5, 6, 9, 10, 11, 17];
        for &x in &ks {
            for &y in &ks {
                for &z in &ks {
                    // Leg counts include the backbone ends.
                    let t = GuestGraph::caterpillar(&[x + 1, y, z + 1]);
                    let r = pack_two_paths_caterpillar(&t);
                    if t.n() < 6 {
                        assert!(matches!(r, Err(PackError::NoPacking { .. })));
                    } else {
                        let c = r.unwrap_or_else(|e| panic!("({x}, {y}, {z}): {e}"));
                        valid(&c);
                    }
                }
            }
        }
    }

    #[test]
    fn non_five_legged_is_unsupported() {
        let t = GuestGraph::caterpillar(&[1, 3, 0, 1]);
        assert!(matches!(pack_two_paths_caterpillar(&t), Err(PackError::Unsupported(_))));
    }

    #[test]
    fn isomorphism_handles_reversal() {
        let a = GuestGraph::caterpillar(&[1, 5, 0, 2]);
        let b = GuestGraph::caterpillar(&[2, 0, 5, 1]);
        let m = caterpillar_isomorphism(&a, &b).unwrap();
        let mut image: Vec<[Vertex; 2]> = a.edges().iter().map(|&[x, y]| [m[x].min(m[y]), m[x].max(m[y])]).collect();
        let mut target: Vec<[Vertex; 2]> = b.edges().iter().map(|&[x, y]| [x.min(y), x.max(y)]).collect();
        image.sort();
        target.sort();
        assert_eq!(image, target);
    }
}
