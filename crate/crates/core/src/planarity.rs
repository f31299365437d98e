//! Left-right planarity test with embedding output and Kuratowski witnesses.

use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    /// Counter-clockwise neighbour order of every vertex.
    Planar(Vec<Vec<usize>>),
    NonPlanar(Kuratowski),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A minimal non-planar subgraph, which is a subdivision of K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub edges: Vec<[usize; 2]>,
    pub branch_vertices: Vec<usize>,
}

/// Exact planarity verdict. Edges must be simple (no loops, no duplicates).
pub fn planarity_test(n: usize, edges: &[[usize; 2]]) -> Planarity {
    match embed(n, edges) {
        Some(rot) => Planarity::Planar(rot),
        None => Planarity::NonPlanar(kuratowski_witness(n, edges)),
    }
}

pub fn is_planar(n: usize, edges: &[[usize; 2]]) -> bool {
    if n > 2 && edges.len() > 3 * n - 6 {
        return false;
    }
    Lr::new(n, edges).run(false).is_some()
}

/// Counter-clockwise rotation system of a planar embedding, or `None`.
pub fn embed(n: usize, edges: &[[usize; 2]]) -> Option<Vec<Vec<usize>>> {
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    Lr::new(n, edges).run(true)
}

/// Number of faces of a rotation system given as neighbour lists, summed over
/// connected components; isolated vertices count one face each.
pub fn face_count(rotation: &[Vec<usize>]) -> usize {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, r) in rotation.iter().enumerate() {
        for (i, &w) in r.iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces = 0;
    for (v, r) in rotation.iter().enumerate() {
        if r.is_empty() {
            faces += 1;
        }
        for &w in r {
            if seen.contains_key(&(v, w)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (v, w);
            while !seen.contains_key(&(a, b)) {
                seen.insert((a, b), true);
                let p = pos[&(b, a)];
                let rb = &rotation[b];
                let c = rb[(p + 1) % rb.len()];
                a = b;
                b = c;
            }
        }
    }
    faces
}

/// True iff the rotation system has genus 0 on every component.
pub fn rotation_is_planar(rotation: &[Vec<usize>]) -> bool {
    let n = rotation.len();
    let m2: usize = rotation.iter().map(Vec::len).sum();
    let comps = components(n, rotation);
    // Sum over components of V - E + F = 2 gives V - E + F = 2c.
    n + face_count(rotation) == m2 / 2 + 2 * comps
}

fn components(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; n];
    let mut c = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        c += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    c
}

fn kuratowski_witness(n: usize, edges: &[[usize; 2]]) -> Kuratowski {
    let mut keep: Vec<[usize; 2]> = edges.to_vec();
    let mut i = 0;
    while i < keep.len() {
        let e = keep.remove(i);
        if is_planar(n, &keep) {
            keep.insert(i, e);
            i += 1;
        }
    }
    classify_witness(n, &keep).expect("a minimal non-planar graph is a Kuratowski subdivision")
}

/// Recognizes a subdivision of K5 or K3,3 by suppressing degree-2 vertices.
pub fn classify_witness(n: usize, edges: &[[usize; 2]]) -> Option<Kuratowski> {
    let mut adj = vec![Vec::new(); n];
    for &[a, b] in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if adj.iter().any(|l| l.len() == 1) {
        return None;
    }
    // Follow every branch-vertex edge through degree-2 vertices.
    let mut pairs = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let (mut prev, mut cur) = (b, first);
            let mut steps = 0;
            while adj[cur].len() == 2 {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                steps += 1;
                if steps > n {
                    return None;
                }
            }
            if cur == b {
                return None;
            }
            pairs.push([b.min(cur), b.max(cur)]);
        }
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    if pairs.len() * 2 != before {
        return None;
    }
    let deg = |v: usize| pairs.iter().filter(|p| p.contains(&v)).count();
    let kind = if branch.len() == 5 && pairs.len() == 10 && branch.iter().all(|&v| deg(v) == 4) {
        KuratowskiKind::K5
    } else if branch.len() == 6 && pairs.len() == 9 && branch.iter().all(|&v| deg(v) == 3) {
        let mut side = HashMap::new();
        side.insert(branch[0], 0);
        let mut changed = true;
        while changed {
            changed = false;
            for p in &pairs {
                for (x, y) in [(p[0], p[1]), (p[1], p[0])] {
                    if let Some(&s) = side.get(&x) {
                        match side.get(&y) {
                            None => {
                                side.insert(y, 1 - s);
                                changed = true;
                            }
                            Some(&t) if t == s => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
        if side.len() != 6 || side.values().filter(|&&s| s == 0).count() != 3 {
            return None;
        }
        KuratowskiKind::K33
    } else {
        return None;
    };
    Some(Kuratowski { kind, edges: edges.to_vec(), branch_vertices: branch })
}

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

/// State of the left-right planarity algorithm. Edges are oriented during the
/// first DFS; `src`/`dst` hold the orientation of each edge id.
struct Lr {
    n: usize,
    ends: Vec<[usize; 2]>,
    adj: Vec<Vec<(usize, usize)>>,
    oriented: Vec<bool>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<usize>>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<Option<usize>>,
    pairs: Vec<ConflictPair>,
    stack: Vec<usize>,
    roots: Vec<usize>,
}

impl Lr {
    fn new(n: usize, edges: &[[usize; 2]]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &[a, b]) in edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        Lr {
            n,
            ends: edges.to_vec(),
            adj,
            oriented: vec![false; m],
            src: vec![0; m],
            dst: vec![0; m],
            out: vec![Vec::new(); n],
            height: vec![None; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting: vec![0; m],
            reference: vec![None; m],
            side: vec![1; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![None; m],
            pairs: Vec::new(),
            stack: Vec::new(),
            roots: Vec::new(),
        }
    }

    fn run(mut self, want_embedding: bool) -> Option<Vec<Vec<usize>>> {
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..self.n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            self.out[v] = o;
        }
        for r in self.roots.clone() {
            if !self.test(r) {
                return None;
            }
        }
        if !want_embedding {
            return Some(Vec::new());
        }
        for e in 0..self.ends.len() {
            self.nesting[e] *= self.sign(e);
        }
        let mut emb = Embedding::new(self.n);
        for v in 0..self.n {
            let mut o = std::mem::take(&mut self.out[v]);
            o.sort_by_key(|&e| self.nesting[e]);
            let mut prev = None;
            for &e in &o {
                emb.add_cw(v, self.dst[e], prev);
                prev = Some(self.dst[e]);
            }
            self.out[v] = o;
        }
        let mut left_ref = vec![0; self.n];
        let mut right_ref = vec![0; self.n];
        for r in self.roots.clone() {
            self.embed_dfs(r, &mut emb, &mut left_ref, &mut right_ref);
        }
        Some(emb.ccw_lists())
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        for i in 0..self.adj[v].len() {
            let (w, vw) = self.adj[v][i];
            if self.oriented[vw] {
                continue;
            }
            self.oriented[vw] = true;
            self.src[vw] = v;
            self.dst[vw] = w;
            self.out[v].push(vw);
            self.lowpt[vw] = hv;
            self.lowpt2[vw] = hv;
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting[vw] = 2 * self.lowpt[vw] as i64;
            if self.lowpt2[vw] < hv {
                self.nesting[vw] += 1;
            }
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn top(&self) -> Option<usize> {
        self.stack.last().copied()
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.empty() && self.lowpt[iv.high.unwrap()] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn push_pair(&mut self, p: ConflictPair) {
        self.pairs.push(p);
        self.stack.push(self.pairs.len() - 1);
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        let outs = self.out[v].clone();
        for (i, &ei) in outs.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.top();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.push_pair(ConflictPair {
                    left: Interval::default(),
                    right: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.lowpt[ei] < hv {
                if i == 0 {
                    if let Some(e) = e {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e.expect("non-root")) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let qi = self.stack.pop().expect("stack holds the return edges of ei");
            let mut q = self.pairs[qi];
            if !q.left.empty() {
                q.swap();
            }
            if !q.left.empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap()] > self.lowpt[e] {
                if p.right.empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low.unwrap()] = self.lowpt_edge[e];
            }
            if self.top() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(ti) = self.top() {
            let t = self.pairs[ti];
            if !(self.conflicting(&t.left, ei) || self.conflicting(&t.right, ei)) {
                break;
            }
            self.stack.pop();
            let mut q = t;
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.empty() && p.right.empty()) {
            self.push_pair(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        let hu = self.height[u].unwrap();
        while let Some(ti) = self.top() {
            let t = self.pairs[ti];
            if self.lowest(&t) != hu {
                break;
            }
            self.stack.pop();
            if let Some(l) = t.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(pi) = self.stack.pop() {
            let mut p = self.pairs[pi];
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.reference[l] = p.left.low;
                    self.side[l] = -1;
                    p.right.low = None;
                }
            }
            self.pairs[pi] = p;
            self.stack.push(pi);
        }
        if self.lowpt[e] < hu {
            let t = self.pairs[self.top().expect("return edge on stack")];
            let (hl, hr) = (t.left.high, t.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        // Iterative resolution of the reference chain.
        let mut chain = vec![e];
        let mut cur = e;
        while let Some(r) = self.reference[cur] {
            chain.push(r);
            cur = r;
        }
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed_dfs(&mut self, v: usize, emb: &mut Embedding, left_ref: &mut [usize], right_ref: &mut [usize]) {
        let outs = self.out[v].clone();
        for ei in outs {
            let w = self.dst[ei];
            if self.parent_edge[w] == Some(ei) {
                emb.add_first(w, v);
                left_ref[v] = w;
                right_ref[v] = w;
                self.embed_dfs(w, emb, left_ref, right_ref);
            } else if self.side[ei] == 1 {
                emb.add_cw(w, v, Some(right_ref[w]));
            } else {
                emb.add_ccw(w, v, Some(left_ref[w]));
                left_ref[w] = v;
            }
        }
    }
}

/// Cyclic neighbour lists stored as clockwise/counter-clockwise links.
struct Embedding {
    cw: Vec<HashMap<usize, usize>>,
    ccw: Vec<HashMap<usize, usize>>,
    first: Vec<Option<usize>>,
}

impl Embedding {
    fn new(n: usize) -> Self {
        Embedding { cw: vec![HashMap::new(); n], ccw: vec![HashMap::new(); n], first: vec![None; n] }
    }

    /// Inserts `w` immediately clockwise of `reference` around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => {
                self.cw[v].insert(w, w);
                self.ccw[v].insert(w, w);
                self.first[v] = Some(w);
            }
            Some(r) => {
                let after = self.cw[v][&r];
                self.cw[v].insert(r, w);
                self.cw[v].insert(w, after);
                self.ccw[v].insert(after, w);
                self.ccw[v].insert(w, r);
            }
        }
    }

    /// Inserts `w` immediately counter-clockwise of `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: Option<usize>) {
        match reference {
            None => self.add_cw(v, w, None),
            Some(r) => {
                let before = self.ccw[v][&r];
                self.add_cw(v, w, Some(before));
                if self.first[v] == Some(r) {
                    self.first[v] = Some(w);
                }
            }
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let r = self.first[v];
        self.add_ccw(v, w, r);
    }

    fn ccw_lists(&self) -> Vec<Vec<usize>> {
        (0..self.cw.len())
            .map(|v| {
                let Some(start) = self.first[v] else { return Vec::new() };
                let mut out = vec![start];
                let mut cur = self.ccw[v][&start];
                while cur != start {
                    out.push(cur);
                    cur = self.ccw[v][&cur];
                }
                out
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<[usize; 2]> {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push([a, b]);
            }
        }
        e
    }

    fn k33() -> Vec<[usize; 2]> {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push([a, b]);
            }
        }
        e
    }

    #[test]
    fn k4_is_planar_with_four_faces() {
        let Planarity::Planar(rot) = planarity_test(4, &complete(4)) else { panic!() };
        assert!(rotation_is_planar(&rot));
        assert_eq!(face_count(&rot), 4);
    }

    #[test]
    fn k5_witness() {
        let Planarity::NonPlanar(w) = planarity_test(5, &complete(5)) else { panic!() };
        assert_eq!(w.kind, KuratowskiKind::K5);
        // Bypass the edge-count shortcut by subdividing every edge of K5.
        let mut edges = Vec::new();
        for (i, [a, b]) in complete(5).into_iter().enumerate() {
            edges.push([a, 5 + i]);
            edges.push([b, 5 + i]);
        }
        assert!(!is_planar(15, &edges));
        let Planarity::NonPlanar(w) = planarity_test(15, &edges) else { panic!() };
        assert_eq!(w.kind, KuratowskiKind::K5);
    }

    #[test]
    fn k33_witness() {
        let Planarity::NonPlanar(w) = planarity_test(6, &k33()) else { panic!() };
        assert_eq!(w.kind, KuratowskiKind::K33);
        let mut e = k33();
        e.remove(0);
        assert!(is_planar(6, &e));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push([i, (i + 1) % 5]);
            e.push([i, i + 5]);
            e.push([5 + i, 5 + (i + 2) % 5]);
        }
        let Planarity::NonPlanar(w) = planarity_test(10, &e) else { panic!() };
        assert!(classify_witness(10, &w.edges).is_some());
    }

    #[test]
    fn grid_and_disconnected_graphs_embed() {
        let mut e = Vec::new();
        let id = |r: usize, c: usize| r * 6 + c;
        for r in 0..6 {
            for c in 0..6 {
                if c + 1 < 6 {
                    e.push([id(r, c), id(r, c + 1)]);
                }
                if r + 1 < 6 {
                    e.push([id(r, c), id(r + 1, c)]);
                }
                if r + 1 < 6 && c + 1 < 6 {
                    e.push([id(r, c), id(r + 1, c + 1)]);
                }
            }
        }
        e.push([100, 101]);
        let rot = embed(102, &e).unwrap();
        assert!(rotation_is_planar(&rot));
    }
}
