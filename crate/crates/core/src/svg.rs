//! SVG rendering that follows the stored rotation system.
//!
//! The planarization is triangulated by putting a centre vertex in every
//! face of length at least four, with one subdivision vertex per corner so
//! the result stays simple. The triangulation is drawn on the integer grid
//! with a canonical ordering and the shift method, so host edges become
//! straight segments meeting at their crossing points. Coordinates are
//! integers, which keeps the intersection recount exact.

use crate::certificate::PackingCertificate;
use crate::drawing::{Dart, EdgeLabel, OnePlaneDrawing};
use std::collections::HashMap;
use std::fmt::Write as _;

pub type Point = (i64, i64);

#[derive(Debug, Clone)]
pub struct Style {
    pub palette: Vec<&'static str>,
    pub vertex_labels: bool,
    /// Output width in pixels; the height follows the aspect ratio.
    pub width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { palette: vec!["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"], vertex_labels: true, width: 900.0 }
    }
}

const DASHES: [&str; 5] = ["", "6 3", "2 2", "8 2 2 2", "1 3"];

/// Grid positions of every planarization vertex, and each host edge as a
/// polyline through its crossing point.
#[derive(Debug, Clone)]
pub struct Layout {
    pub points: Vec<Point>,
    pub polylines: Vec<Vec<Point>>,
}

/// Straight-line layout of a valid drawing.
pub fn layout(dr: &OnePlaneDrawing) -> Layout {
    let idx = dr.index().expect("layout needs a valid drawing");
    let cm = &idx.crossing_of;
    let nv = dr.vertex_count();
    let head = |d: Dart| dr.origin_with(cm, OnePlaneDrawing::twin_with(cm, d));
    // Neighbour rotations of the triangulated planarization. Items inserted
    // into the face wedge ending at dart `d` are kept in `before[d]`.
    let mut before: HashMap<Dart, Vec<usize>> = HashMap::new();
    let mut extra: Vec<Vec<usize>> = Vec::new();
    let mut outer = None;
    let biggest = (0..idx.faces.len()).max_by_key(|&f| idx.faces[f].len()).expect("a face");
    for (fi, walk) in idx.faces.iter().enumerate() {
        let len = walk.len();
        if len <= 3 {
            if fi == biggest {
                let v: Vec<usize> = walk.iter().map(|&d| dr.origin_with(cm, d)).collect();
                outer = Some([v[0], v[1], v[2]]);
            }
            continue;
        }
        let base = nv + extra.len();
        let centre = base + len;
        let s = |p: usize| base + (p % len);
        let corner = |p: usize| dr.origin_with(cm, walk[p % len]);
        for p in 0..len {
            before.entry(walk[p]).or_default().extend([s(p), s(p + 1)]);
            extra.push(vec![corner(p), corner(p + len - 1), s(p + len - 1), centre, s(p + 1)]);
        }
        extra.push((0..len).rev().map(s).collect());
        if fi == biggest {
            outer = Some([corner(0), corner(1), s(1)]);
        }
    }
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(nv + extra.len());
    for v in 0..nv {
        let mut r = Vec::new();
        for &d in &dr.rotation[v] {
            if let Some(ins) = before.get(&d) {
                r.extend(ins);
            }
            r.push(head(d));
        }
        rot.push(r);
    }
    rot.extend(extra);
    let points = shift_layout(&rot, outer.expect("outer face chosen"));
    let polylines = dr
        .edges
        .iter()
        .enumerate()
        .map(|(e, h)| match cm[e] {
            Some(c) => vec![points[h.ends[0]], points[dr.n + c], points[h.ends[1]]],
            None => vec![points[h.ends[0]], points[h.ends[1]]],
        })
        .collect();
    Layout { points: points[..nv].to_vec(), polylines }
}

/// Canonical ordering of a triangulation given by neighbour rotations, with
/// the contour neighbours of each vertex at the time it is added.
fn canonical_order(rot: &[Vec<usize>], outer: [usize; 3]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = rot.len();
    let [mut v1, mut v2, vn] = outer;
    // Interior neighbours of `v` lie counter-clockwise from its left to its
    // right contour neighbour; swap the base if the outer face runs the other way.
    let ccw_between = |v: usize, a: usize, b: usize| -> Vec<usize> {
        let r = &rot[v];
        let pa = r.iter().position(|&x| x == a).expect("contour neighbour");
        let mut out = Vec::new();
        for step in 1..r.len() {
            let x = r[(pa + step) % r.len()];
            if x == b {
                return out;
            }
            out.push(x);
        }
        panic!("contour neighbour missing")
    };
    if ccw_between(vn, v1, v2).is_empty() {
        std::mem::swap(&mut v1, &mut v2);
    }
    let mut removed = vec![false; n];
    let mut on_contour = vec![false; n];
    let mut contour = vec![v1, vn, v2];
    for &v in &contour {
        on_contour[v] = true;
    }
    let mut order = vec![usize::MAX; n];
    let mut sides = vec![(0, 0); n];
    for k in (3..n).rev() {
        let pos = (1..contour.len() - 1)
            .find(|&i| {
                let v = contour[i];
                rot[v].iter().filter(|&&w| !removed[w] && on_contour[w]).count() == 2
            })
            .expect("triangulation has a removable contour vertex");
        let v = contour[pos];
        let (a, b) = (contour[pos - 1], contour[pos + 1]);
        let inner: Vec<usize> = ccw_between(v, a, b).into_iter().filter(|&w| !removed[w]).collect();
        removed[v] = true;
        on_contour[v] = false;
        for &w in &inner {
            on_contour[w] = true;
        }
        contour.splice(pos..=pos, inner);
        order[k] = v;
        sides[k] = (a, b);
    }
    debug_assert_eq!(contour.len(), 3);
    order[0] = v1;
    order[1] = v2;
    order[2] = contour[1];
    (order, sides)
}

/// Integer straight-line positions on a `(2n-4) x (n-2)` grid.
fn shift_layout(rot: &[Vec<usize>], outer: [usize; 3]) -> Vec<Point> {
    let n = rot.len();
    let (order, sides) = canonical_order(rot, outer);
    let mut pos = vec![(0i64, 0i64); n];
    let mut under: Vec<Vec<usize>> = vec![Vec::new(); n];
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    pos[v1] = (0, 0);
    pos[v2] = (2, 0);
    pos[v3] = (1, 1);
    for v in [v1, v2, v3] {
        under[v] = vec![v];
    }
    let mut contour = vec![v1, v3, v2];
    for k in 3..n {
        let v = order[k];
        let (a, b) = sides[k];
        let p = contour.iter().position(|&x| x == a).expect("left neighbour on contour");
        let q = contour.iter().position(|&x| x == b).expect("right neighbour on contour");
        for &w in &contour[p + 1..q] {
            for &u in &under[w] {
                pos[u].0 += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &under[w] {
                pos[u].0 += 2;
            }
        }
        let ((xp, yp), (xq, yq)) = (pos[a], pos[b]);
        let x = (xq + yq + xp - yp) / 2;
        pos[v] = (x, yp + x - xp);
        let mut u = vec![v];
        for &w in &contour[p + 1..q] {
            u.extend_from_slice(&under[w]);
        }
        under[v] = u;
        contour.splice(p + 1..q, [v]);
    }
    pos
}

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay, bx, by, cx, cy) = (a.0 as i128, a.1 as i128, b.0 as i128, b.1 as i128, c.0 as i128, c.1 as i128);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// True when the segments share a point other than a point in `ignore`.
fn segments_meet(a: Point, b: Point, c: Point, d: Point, ignore: &[Point]) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return (o1 > 0) != (o2 > 0) && (o3 > 0) != (o4 > 0);
    }
    if o1 == 0 && o2 == 0 {
        // Collinear: overlapping in more than one point always counts.
        let key = |p: Point| (p.0, p.1);
        let (lo1, hi1) = (key(a).min(key(b)), key(a).max(key(b)));
        let (lo2, hi2) = (key(c).min(key(d)), key(c).max(key(d)));
        let (lo, hi) = (lo1.max(lo2), hi1.min(hi2));
        if lo > hi {
            return false;
        }
        if lo < hi {
            return true;
        }
        return !ignore.contains(&lo);
    }
    [a, b, c, d]
        .into_iter()
        .filter(|&p| on_segment(p, a, b) && on_segment(p, c, d))
        .any(|p| !ignore.contains(&p))
}

/// Pairs of polylines that meet anywhere except at a shared end point.
pub fn count_crossings(polylines: &[Vec<Point>]) -> usize {
    let mut count = 0;
    for i in 0..polylines.len() {
        for j in i + 1..polylines.len() {
            let (p, q) = (&polylines[i], &polylines[j]);
            let ends_p = [p[0], p[p.len() - 1]];
            let shared: Vec<Point> = [q[0], q[q.len() - 1]].into_iter().filter(|x| ends_p.contains(x)).collect();
            let meet = p.windows(2).any(|s| q.windows(2).any(|t| segments_meet(s[0], s[1], t[0], t[1], &shared)));
            count += usize::from(meet);
        }
    }
    count
}

/// SVG document of a certificate's drawing.
pub fn render_svg(c: &PackingCertificate, style: &Style) -> String {
    let dr = &c.drawing;
    let lay = layout(dr);
    let max_x = lay.points.iter().map(|p| p.0).max().unwrap_or(1).max(1);
    let max_y = lay.points.iter().map(|p| p.1).max().unwrap_or(1).max(1);
    let margin = 2;
    let (w, h) = (max_x + 2 * margin, max_y + 2 * margin);
    let px_h = style.width * h as f64 / w as f64;
    let unit = w as f64 / style.width;
    let flip = |p: Point| (p.0 + margin, max_y - p.1 + margin);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {w} {h}">"#,
        style.width, px_h
    );
    let _ = writeln!(
        out,
        r#"<title>n={} edges={} crossings={}</title>"#,
        dr.n,
        dr.edges.len(),
        dr.crossing_count()
    );
    for (e, line) in lay.polylines.iter().enumerate() {
        let (colour, dash, guest) = match dr.edges[e].label {
            EdgeLabel::Guest(g) => (style.palette[g % style.palette.len()], DASHES[g % DASHES.len()], g.to_string()),
            EdgeLabel::Discard => ("#999999", "1 1", "discard".to_string()),
        };
        let pts: Vec<String> = line
            .iter()
            .map(|&p| {
                let (x, y) = flip(p);
                format!("{x},{y}")
            })
            .collect();
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            let scaled: Vec<String> = dash.split(' ').map(|d| format!("{:.3}", d.parse::<f64>().unwrap() * unit)).collect();
            format!(r#" stroke-dasharray="{}""#, scaled.join(" "))
        };
        let _ = writeln!(
            out,
            r#"<polyline data-edge="{e}" data-guest="{guest}" points="{}" fill="none" stroke="{colour}" stroke-width="{:.3}"{dash_attr}/>"#,
            pts.join(" "),
            1.5 * unit
        );
    }
    for c in 0..dr.crossing_count() {
        let (x, y) = flip(lay.points[dr.n + c]);
        let _ = writeln!(out, r#"<circle data-crossing="{c}" cx="{x}" cy="{y}" r="{:.3}" fill="black"/>"#, 2.0 * unit);
    }
    for v in 0..dr.n {
        let (x, y) = flip(lay.points[v]);
        let _ = writeln!(out, r#"<circle data-vertex="{v}" cx="{x}" cy="{y}" r="{:.3}" fill="white" stroke="black" stroke-width="{:.3}"/>"#, 4.0 * unit, unit);
        if style.vertex_labels {
            let _ = writeln!(
                out,
                r#"<text x="{x}" y="{y}" font-size="{:.3}" text-anchor="middle" dominant-baseline="central">{v}</text>"#,
                5.0 * unit
            );
        }
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.3}" y="{:.3}" font-size="{:.3}">crossings: {}</text>"#,
        unit * 6.0,
        unit * 14.0,
        12.0 * unit,
        dr.crossing_count()
    );
    out.push_str("</svg>\n");
    out
}

/// Polylines read back from the `points` attributes of an SVG document.
pub fn polylines_in_svg(svg: &str) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    for chunk in svg.split("<polyline").skip(1) {
        let Some(start) = chunk.find("points=\"") else { continue };
        let rest = &chunk[start + 8..];
        let Some(end) = rest.find('"') else { continue };
        let pts = rest[..end]
            .split_whitespace()
            .filter_map(|pair| {
                let (x, y) = pair.split_once(',')?;
                Some((x.parse().ok()?, y.parse().ok()?))
            })
            .collect();
        out.push(pts);
    }
    out
}
