//! Three spanning paths with at most seven crossings, and three spanning
//! cycles with at most fourteen.
//!
//! For `n = 7 + 3k` the vertices sit on three rays: `u(i, 1..=k)` on ray `i`.
//! Guest `i` zig-zags between rays `i` and `i + 1`, runs straight along ray
//! `i + 2`, and the two pieces are joined through a fixed seven-vertex core
//! placed inside the triangle `u(0,1) u(1,1) u(2,1)`. One or two extra
//! vertices outside the outer triangle cover the other residues.

use crate::certificate::{PackingCertificate, Provenance};
use crate::drawing::OnePlaneDrawing;
use crate::graph::{GuestKind, Vertex};
use crate::packing::{HostBuilder, PackError};
use crate::realize::realize;

/// Guest paths of the core, each listed from `v_i` to `w_i`.
const CORE_PATHS: [[Vertex; 7]; 3] = [[2, 0, 1, 3, 4, 6, 5], [3, 0, 6, 2, 5, 1, 4], [1, 2, 4, 0, 5, 3, 6]];
const CORE_CROSSINGS: [[[Vertex; 2]; 2]; 3] = [[[1, 4], [0, 2]], [[5, 0], [3, 1]], [[0, 6], [3, 4]]];

#[derive(Debug, Clone, Copy)]
enum Slot {
    Core(Vertex),
    /// `u(i, 1)`.
    Inner(usize),
}

/// Crossings between connector edges and core edges.
const CONNECTOR_CROSSINGS: [[[Slot; 2]; 2]; 3] = [
    [[Slot::Core(4), Slot::Inner(0)], [Slot::Core(2), Slot::Core(6)]],
    [[Slot::Core(2), Slot::Core(5)], [Slot::Core(1), Slot::Inner(2)]],
    [[Slot::Core(5), Slot::Core(6)], [Slot::Core(3), Slot::Inner(1)]],
];

struct Template {
    n: usize,
    paths: [&'static [Vertex]; 3],
    crossings: &'static [[[Vertex; 2]; 2]],
}

const SMALL: [Template; 3] = [
    Template {
        n: 6,
        paths: [&[0, 1, 2, 3, 4, 5], &[1, 3, 0, 5, 2, 4], &[2, 0, 4, 1, 5, 3]],
        crossings: &[[[1, 3], [0, 4]], [[0, 5], [1, 2]], [[5, 3], [4, 2]]],
    },
    Template {
        n: 8,
        paths: [&[0, 2, 1, 3, 4, 7, 5, 6], &[4, 0, 3, 6, 2, 5, 1, 7], &[5, 0, 7, 3, 2, 4, 1, 6]],
        crossings: &[[[4, 2], [3, 0]], [[4, 1], [7, 3]], [[1, 2], [5, 6]]],
    },
    Template {
        n: 9,
        paths: [&[0, 2, 1, 3, 4, 6, 5, 8, 7], &[3, 0, 4, 1, 8, 6, 7, 2, 5], &[3, 2, 4, 8, 0, 5, 7, 1, 6]],
        crossings: &[[[4, 6], [8, 1]], [[5, 6], [7, 8]], [[4, 2], [3, 0]]],
    },
];

/// Vertex numbering of the ray construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayLayout {
    /// Vertices per ray.
    pub k: usize,
    /// Vertices outside the outer triangle, 0 to 2.
    pub extras: usize,
}

impl RayLayout {
    pub fn for_n(n: usize) -> Option<Self> {
        (n >= 10).then(|| RayLayout { k: (n - 7) / 3, extras: (n - 7) % 3 })
    }

    pub fn n(&self) -> usize {
        7 + 3 * self.k + self.extras
    }

    pub fn core(&self, c: Vertex) -> Vertex {
        c
    }

    /// `u(i, j)` for `1 <= j <= k`, with `i` taken modulo 3.
    pub fn ray(&self, i: usize, j: usize) -> Vertex {
        debug_assert!((1..=self.k).contains(&j));
        7 + (i % 3) * self.k + j - 1
    }

    pub fn extra(&self, t: usize) -> Vertex {
        7 + 3 * self.k + t
    }

    /// Outer triangle when every guest has both ends on it.
    pub fn outer(&self) -> Option<[Vertex; 3]> {
        (self.extras == 0).then(|| [0, 1, 2].map(|i| self.ray(i, self.k)))
    }

    /// Vertex order of guest `i`.
    pub fn path_order(&self, i: usize) -> Vec<Vertex> {
        let mut p = Vec::with_capacity(self.n());
        if self.extras >= 1 {
            p.push(self.extra(0));
        }
        for j in (1..=self.k).rev() {
            p.push(self.ray(i + 1, j));
            p.push(self.ray(i, j));
        }
        p.extend(CORE_PATHS[i].iter().map(|&c| self.core(c)));
        p.extend((1..=self.k).map(|j| self.ray(i + 2, j)));
        if self.extras == 2 {
            p.push(self.extra(1));
        }
        p
    }

    fn slot(&self, s: Slot) -> Vertex {
        match s {
            Slot::Core(c) => self.core(c),
            Slot::Inner(i) => self.ray(i, 1),
        }
    }

    /// Adds the guests and crossings with every vertex shifted by `offset`.
    fn add_to(&self, b: &mut HostBuilder, offset: Vertex) -> Result<(), PackError> {
        let sh = |e: [Vertex; 2]| e.map(|v| v + offset);
        for i in 0..3 {
            let p: Vec<Vertex> = self.path_order(i).iter().map(|v| v + offset).collect();
            b.path(&p, i);
        }
        for [e, f] in CORE_CROSSINGS {
            b.cross(sh(e.map(|c| self.core(c))), sh(f.map(|c| self.core(c))))?;
        }
        for [e, f] in CONNECTOR_CROSSINGS {
            b.cross(sh(e.map(|s| self.slot(s))), sh(f.map(|s| self.slot(s))))?;
        }
        if self.extras == 2 {
            b.cross(sh([self.extra(1), self.ray(0, self.k)]), sh([self.extra(0), self.ray(1, self.k)]))?;
        }
        Ok(())
    }

    fn builder(&self) -> Result<HostBuilder, PackError> {
        let mut b = HostBuilder::new(self.n());
        self.add_to(&mut b, 0)?;
        Ok(b)
    }
}

/// The seven-vertex drawing of three spanning paths with three crossings.
pub fn seven_vertex_core() -> OnePlaneDrawing {
    let mut b = HostBuilder::new(7);
    for (i, p) in CORE_PATHS.iter().enumerate() {
        b.path(p, i);
    }
    for [e, f] in CORE_CROSSINGS {
        b.cross(e, f).expect("core crossings name core edges");
    }
    realize(7, b.edges, b.crossings, false).expect("core is realizable")
}

fn template(t: &Template) -> Result<HostBuilder, PackError> {
    let mut b = HostBuilder::new(t.n);
    for (i, p) in t.paths.iter().enumerate() {
        b.path(p, i);
    }
    for &[e, f] in t.crossings {
        b.cross(e, f)?;
    }
    Ok(b)
}

fn paths_builder(n: usize) -> Result<(HostBuilder, Provenance), PackError> {
    match n {
        0..=5 => Err(PackError::NTooSmall { n, min: 6 }),
        7 => {
            let mut b = HostBuilder::new(7);
            for (i, p) in CORE_PATHS.iter().enumerate() {
                b.path(p, i);
            }
            for [e, f] in CORE_CROSSINGS {
                b.cross(e, f)?;
            }
            Ok((b, Provenance::new("three-paths-core", &[("n", 7)])))
        }
        6..=9 => {
            let t = SMALL.iter().find(|t| t.n == n).expect("small templates cover 6, 8, 9");
            Ok((template(t)?, Provenance::new("three-paths-template", &[("n", n as i64)])))
        }
        _ => {
            let l = RayLayout::for_n(n).expect("n >= 10");
            let p = Provenance::new("three-paths-rays", &[("k", l.k as i64), ("extras", l.extras as i64)]);
            Ok((l.builder()?, p))
        }
    }
}

/// Three spanning paths on `n >= 6` vertices, at most seven crossings.
pub fn pack_three_paths(n: usize) -> Result<PackingCertificate, PackError> {
    let (b, p) = paths_builder(n)?;
    b.finish(&[GuestKind::Path; 3], p)
}

/// Endpoint of a joining edge: a vertex of the first outer triangle, of the
/// second, or a left-out vertex.
#[derive(Debug, Clone, Copy)]
enum J {
    A(usize),
    B(usize),
    Z(usize),
}

/// How two path packings are closed into three cycles. Guest `c` of each
/// packing ends at `A(c+1)`, `A(c+2)` and `B(c+1)`, `B(c+2)`; its two chains
/// connect those ends across, passing through left-out vertices.
struct Join {
    chains: [[&'static [J]; 2]; 3],
    crossings: &'static [[[J; 2]; 2]],
}

use J::{A, B, Z};

const JOINS: [Join; 3] = [
    Join {
        chains: [[&[A(1), B(2)], &[A(2), B(1)]], [&[A(2), B(0)], &[A(0), B(2)]], [&[A(0), B(0)], &[A(1), B(1)]]],
        crossings: &[],
    },
    Join {
        chains: [
            [&[A(1), Z(0), B(1)], &[A(2), B(2)]],
            [&[A(2), Z(0), B(2)], &[A(0), B(0)]],
            [&[A(0), Z(0), B(0)], &[A(1), B(1)]],
        ],
        crossings: &[[[A(1), Z(0)], [A(2), B(2)]], [[Z(0), B(1)], [A(0), B(0)]]],
    },
    Join {
        chains: [
            [&[A(1), Z(0), B(1)], &[A(2), Z(1), B(2)]],
            [&[A(2), Z(0), B(2)], &[A(0), Z(1), B(0)]],
            [&[A(0), Z(0), B(0)], &[A(1), Z(1), B(1)]],
        ],
        crossings: &[[[A(1), Z(0)], [A(2), Z(1)]], [[Z(0), B(1)], [Z(1), B(2)]]],
    },
];

/// Sizes of the two path packings and the number of left-out vertices.
fn cycle_split(n: usize) -> Option<(RayLayout, RayLayout, usize)> {
    let extra = (n + 1) % 3;
    let s = n.checked_sub(extra + 14)? / 3;
    (s >= 2).then(|| (RayLayout { k: s.div_ceil(2), extras: 0 }, RayLayout { k: s / 2, extras: 0 }, extra))
}

/// Three spanning cycles on `n >= 20` vertices, at most fourteen crossings.
pub fn pack_three_cycles(n: usize) -> Result<PackingCertificate, PackError> {
    let (l1, l2, extra) = cycle_split(n).ok_or(PackError::NTooSmall { n, min: 20 })?;
    let (o1, o2) = (l1.outer().expect("no extras"), l2.outer().expect("no extras"));
    let off = l1.n();
    let vertex = |j: J| match j {
        A(i) => o1[i],
        B(i) => o2[i] + off,
        Z(t) => off + l2.n() + t,
    };
    let mut b = HostBuilder::new(n);
    l1.add_to(&mut b, 0)?;
    l2.add_to(&mut b, off)?;
    let join = &JOINS[extra];
    for (c, chains) in join.chains.iter().enumerate() {
        for chain in chains {
            let p: Vec<Vertex> = chain.iter().map(|&j| vertex(j)).collect();
            b.path(&p, c);
        }
    }
    for [e, f] in join.crossings {
        b.cross(e.map(vertex), f.map(vertex))?;
    }
    let p = Provenance::new(
        "three-cycles-join",
        &[("k", l1.k as i64), ("h", l2.k as i64), ("left_out", extra as i64)],
    );
    b.finish(&[GuestKind::Cycle; 3], p)
}
