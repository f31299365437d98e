//! Three paths plus a perfect matching.
//!
//! For `n = 8k + r` with `k >= 3` the host is a stack of `k - 1` concentric
//! 8-cycles with both diagonals in every quadrilateral between consecutive
//! rings. Inside the first ring sits a 4-cycle, outside the last ring a cap of
//! `4 + r` vertices. Between the caps the partition is periodic: the first
//! path climbs the spokes, the other two climb the diagonals, swapping
//! direction on every layer, and the matching takes every other ring edge.
//! The caps join the climbing strands into single paths; their partitions
//! depend only on `r` and the parity of the ring count, so two more rings
//! never change them. Every vertex away from the path ends then has degree
//! exactly seven in the union.
//!
//! Smaller `n` use whole stored packings.

mod designs;

use crate::certificate::{PackingCertificate, Provenance};
use crate::drawing::OnePlaneDrawing;
use crate::graph::{one_planar_edge_bound, FeasibilityFailure, GuestKind, Vertex};
use crate::packing::{HostBuilder, PackError};
use crate::realize::realize;
use designs::{Caps, CAPS, SMALL};
use std::collections::HashMap;

/// Role of a host edge in the packing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadClass {
    Path(usize),
    Matching,
    Discard,
}

impl QuadClass {
    fn from_code(c: u8) -> Self {
        match c {
            0..=2 => QuadClass::Path(c as usize),
            3 => QuadClass::Matching,
            _ => QuadClass::Discard,
        }
    }
}

/// The ring host for `n = 8k + r`, before partitioning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadHost {
    pub k: usize,
    pub r: usize,
    pub n: usize,
    /// Every host edge, the ones the partition discards included.
    pub edges: Vec<[Vertex; 2]>,
    /// Index pairs into `edges` of the crossing diagonals.
    pub crossings: Vec<[usize; 2]>,
}

/// Vertex numbering: the inner 4-cycle is `0..4`, ring `i` (from 1) column
/// `c` is `4 + 8(i - 1) + c`, the outer cap follows the last ring.
#[derive(Debug, Clone, Copy)]
struct Layout {
    rings: usize,
}

impl Layout {
    fn ring(&self, i: usize, c: usize) -> Vertex {
        4 + 8 * (i - 1) + c % 8
    }

    fn cap(&self, t: usize) -> Vertex {
        4 + 8 * self.rings + t
    }

    /// Host vertex of an inner-cap local name: `0..4` the 4-cycle, `4 + c` ring 1.
    fn inner(&self, x: usize) -> Vertex {
        if x < 4 {
            x
        } else {
            self.ring(1, x - 4)
        }
    }

    /// Host vertex of an outer-cap local name: `0..8` the last ring, then the cap.
    fn outer(&self, x: usize) -> Vertex {
        if x < 8 {
            self.ring(self.rings, x)
        } else {
            self.cap(x - 8)
        }
    }
}

fn key(a: Vertex, b: Vertex) -> [Vertex; 2] {
    [a.min(b), a.max(b)]
}

fn caps_for(r: usize, rings: usize) -> &'static Caps {
    CAPS.iter().find(|c| c.r == r && c.parity == rings % 2).expect("caps for every residue and parity")
}

/// Edges of the inner cap and its crossing pairs, in inner-cap local names.
fn inner_cap() -> (Vec<[usize; 2]>, Vec<[[usize; 2]; 2]>) {
    let ring = |c: usize| 4 + c % 8;
    let mut edges = Vec::new();
    let mut crossings = Vec::new();
    for j in 0..4 {
        let next = (j + 1) % 4;
        edges.extend([[j, next], [j, ring(2 * j)], [j, ring(2 * j + 1)]]);
        let (d1, d2) = ([j, ring(2 * j + 2)], [ring(2 * j + 1), next]);
        edges.extend([d1, d2]);
        crossings.push([d1, d2]);
    }
    edges.extend([[0, 2], [1, 3]]);
    crossings.push([[0, 2], [1, 3]]);
    for c in 0..8 {
        edges.push([ring(c), ring(c + 1)]);
    }
    (edges, crossings)
}

/// Builds the host for `n = 8k + r`.
pub fn base_quad_graph(k: usize, r: usize) -> Result<QuadHost, PackError> {
    if k < 3 {
        return Err(PackError::NTooSmall { n: 8 * k + r, min: 24 });
    }
    if !matches!(r, 0 | 2 | 4 | 6) {
        return Err(PackError::Unsupported(format!("residue {r} is not one of 0, 2, 4, 6")));
    }
    let rings = k - 1;
    let lay = Layout { rings };
    let caps = caps_for(r, rings);
    let mut edges: Vec<[Vertex; 2]> = Vec::new();
    let mut crossing_keys: Vec<[[Vertex; 2]; 2]> = Vec::new();
    let (inner_edges, inner_crossings) = inner_cap();
    edges.extend(inner_edges.iter().map(|&[a, b]| key(lay.inner(a), lay.inner(b))));
    let inner_key = |[a, b]: [usize; 2]| key(lay.inner(a), lay.inner(b));
    crossing_keys.extend(inner_crossings.iter().map(|&[e, f]| [inner_key(e), inner_key(f)]));
    for i in 2..rings {
        edges.extend((0..8).map(|c| key(lay.ring(i, c), lay.ring(i, c + 1))));
    }
    for i in 1..rings {
        for c in 0..8 {
            let up = key(lay.ring(i, c), lay.ring(i + 1, c + 1));
            let down = key(lay.ring(i, c + 1), lay.ring(i + 1, c));
            edges.extend([key(lay.ring(i, c), lay.ring(i + 1, c)), up, down]);
            crossing_keys.push([up, down]);
        }
    }
    let outer_key = |[a, b]: [usize; 2]| key(lay.outer(a), lay.outer(b));
    edges.extend(caps.outer.iter().map(|&(a, b, _)| outer_key([a, b])));
    crossing_keys.extend(caps.outer_crossings.iter().map(|&[e, f]| [outer_key(e), outer_key(f)]));
    let index: HashMap<[Vertex; 2], usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    if index.len() != edges.len() {
        return Err(PackError::Internal("ring host has a repeated edge".into()));
    }
    let crossings = crossing_keys
        .iter()
        .map(|[e, f]| match (index.get(e), index.get(f)) {
            (Some(&x), Some(&y)) => Ok([x, y]),
            _ => Err(PackError::Internal("crossing names a missing edge".into())),
        })
        .collect::<Result<_, _>>()?;
    Ok(QuadHost { k, r, n: 8 * k + r, edges, crossings })
}

impl QuadHost {
    /// The full host drawn with every crossing pair.
    pub fn drawing(&self) -> Result<OnePlaneDrawing, PackError> {
        let edges = self.edges.iter().map(|&[a, b]| crate::drawing::HostEdge::new(a, b, 0)).collect();
        realize(self.n, edges, self.crossings.clone(), false).map_err(|e| PackError::Internal(e.to_string()))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &[a, b] in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }
}

/// Class of every host edge: three spanning paths, a perfect matching and
/// the discarded rest.
pub fn partition_edges(h: &QuadHost) -> Vec<QuadClass> {
    let rings = h.k - 1;
    let lay = Layout { rings };
    let caps = caps_for(h.r, rings);
    let mut fixed: HashMap<[Vertex; 2], QuadClass> = HashMap::new();
    for &(a, b, c) in caps.inner {
        fixed.insert(key(lay.inner(a), lay.inner(b)), QuadClass::from_code(c));
    }
    for &(a, b, c) in caps.outer {
        fixed.insert(key(lay.outer(a), lay.outer(b)), QuadClass::from_code(c));
    }
    let place = |v: Vertex| -> Option<(usize, usize)> {
        (4..lay.cap(0)).contains(&v).then(|| ((v - 4) / 8 + 1, (v - 4) % 8))
    };
    h.edges
        .iter()
        .map(|e| {
            if let Some(&c) = fixed.get(e) {
                return c;
            }
            let ((i, c), (j, d)) = (place(e[0]).expect("ring vertex"), place(e[1]).expect("ring vertex"));
            if i == j {
                // Middle ring edge between columns c and c + 1.
                let low = if (c + 1) % 8 == d { c } else { d };
                return if low % 2 == 0 { QuadClass::Matching } else { QuadClass::Discard };
            }
            let (lower, lc, uc) = if i < j { (i, c, d) } else { (j, d, c) };
            if lc == uc {
                return QuadClass::Path(0);
            }
            let rising = uc == (lc + 1) % 8;
            match (rising, lower % 2 == 1) {
                (true, true) | (false, false) => QuadClass::Path(1),
                _ => QuadClass::Path(2),
            }
        })
        .collect()
}

const KINDS: [GuestKind; 4] = [GuestKind::Path, GuestKind::Path, GuestKind::Path, GuestKind::Matching];

fn guest_of(c: QuadClass) -> Option<usize> {
    match c {
        QuadClass::Path(p) => Some(p),
        QuadClass::Matching => Some(3),
        QuadClass::Discard => None,
    }
}

fn from_host(h: &QuadHost) -> Result<PackingCertificate, PackError> {
    let classes = partition_edges(h);
    let mut b = HostBuilder::new(h.n);
    for (&[x, y], &c) in h.edges.iter().zip(&classes) {
        if let Some(g) = guest_of(c) {
            b.edge(x, y, g);
        }
    }
    for &[e, f] in &h.crossings {
        if classes[e] != QuadClass::Discard && classes[f] != QuadClass::Discard {
            b.cross(h.edges[e], h.edges[f])?;
        }
    }
    let prov = Provenance::new("quadruple-rings", &[("k", h.k as i64), ("r", h.r as i64)]);
    b.finish(&KINDS, prov)
}

fn small(n: usize) -> Result<PackingCertificate, PackError> {
    let s = SMALL
        .iter()
        .find(|s| s.n == n)
        .ok_or_else(|| PackError::Unsupported(format!("no stored packing for n = {n}")))?;
    let mut b = HostBuilder::new(n);
    for (g, p) in s.paths.iter().enumerate() {
        b.path(p, g);
    }
    for &[x, y] in s.matching {
        b.edge(x, y, 3);
    }
    for &[e, f] in s.crossings {
        b.cross(e, f)?;
    }
    b.finish(&KINDS, Provenance::new("quadruple-template", &[("n", n as i64)]))
}

/// Packs three paths and a perfect matching on `n` vertices.
pub fn pack_three_paths_matching(n: usize) -> Result<PackingCertificate, PackError> {
    let refuse = |f: FeasibilityFailure| Err(PackError::no_packing(f.code(), f.to_string()));
    if n % 2 == 1 {
        return refuse(FeasibilityFailure::OddVertexCount { n });
    }
    if n <= 8 {
        let (m, bound) = ((7 * n / 2).saturating_sub(3), one_planar_edge_bound(n));
        return refuse(FeasibilityFailure::QuadrupleEdgeBound { n, m, bound });
    }
    match n {
        10 => refuse(FeasibilityFailure::QuadrupleDegreeSix),
        12..=22 => small(n),
        _ => from_host(&base_quad_graph(n / 8, n % 8)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::validate_certificate;

    fn check(n: usize) {
        let c = pack_three_paths_matching(n).unwrap_or_else(|e| panic!("n = {n}: {e}"));
        assert_eq!(validate_certificate(&c), vec![], "n = {n}");
        assert_eq!(c.drawing.edges.len(), 7 * n / 2 - 3);
        let mut deg = vec![0; n];
        for e in &c.drawing.edges {
            deg[e.ends[0]] += 1;
            deg[e.ends[1]] += 1;
        }
        assert!(deg.iter().filter(|&&d| d != 7).count() <= 6, "n = {n}");
    }

    #[test]
    fn refusals() {
        for n in [3, 7, 13] {
            assert_eq!(pack_three_paths_matching(n).unwrap_err().code(), "odd-vertex-count");
        }
        for n in [2, 4, 6, 8] {
            assert_eq!(pack_three_paths_matching(n).unwrap_err().code(), "quadruple-edge-bound");
            assert!(7 * n / 2 - 3 > one_planar_edge_bound(n));
        }
        assert_eq!(pack_three_paths_matching(10).unwrap_err().code(), "quadruple-degree-six");
    }

    #[test]
    fn small_templates() {
        for n in (12..=22).step_by(2) {
            check(n);
        }
    }

    #[test]
    fn ring_hosts() {
        for n in (24..=128).step_by(2) {
            check(n);
        }
    }

    #[test]
    fn host_shape() {
        assert!(matches!(base_quad_graph(2, 0), Err(PackError::NTooSmall { .. })));
        assert!(matches!(base_quad_graph(3, 3), Err(PackError::Unsupported(_))));
        let h = base_quad_graph(3, 0).unwrap();
        assert_eq!(h.n, 24);
        assert!(h.drawing().unwrap().validate().is_empty());
        // The inner 4-cycle and the first ring have degree exactly seven; the
        // last ring depends on the outer cap.
        let d = h.degrees();
        assert!(d[..12].iter().all(|&x| x == 7), "{d:?}");
        let classes = partition_edges(&h);
        assert_eq!(classes.iter().filter(|&&c| c == QuadClass::Matching).count(), 12);
    }
}
