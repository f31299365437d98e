//! Exact 1-planarity testing and an exhaustive packing oracle for small
//! instances.

use crate::certificate::{PackingCertificate, Provenance};
use crate::drawing::{EdgeId, EdgeLabel, HostEdge, OnePlaneDrawing, Violation};
use crate::graph::{crossing_lower_bound, one_planar_edge_bound, GuestGraph, Vertex};
use crate::planarity::is_planar;
use crate::realize::{planarize, realize, RealizeError};
use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

/// Limits for exhaustive searches. Exceeding either yields a timeout verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub wall_clock: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, wall_clock: Duration) -> Self {
        assert!(max_nodes > 0 && !wall_clock.is_zero(), "budget limits must be positive");
        SearchBudget { max_nodes, wall_clock }
    }

    pub fn seconds(secs: u64) -> Self {
        Self::new(u64::MAX, Duration::from_secs(secs))
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::seconds(60)
    }
}

struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    fn new(budget: SearchBudget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0 }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return false;
        }
        self.nodes % 256 != 0 || self.start.elapsed() <= self.budget.wall_clock
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OnePlanarity {
    OnePlanar(OnePlaneDrawing),
    NotOnePlanar,
    Timeout,
}

/// Statistics of a finished search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    Plain,
    Crossed,
}

/// Decides 1-planarity of a simple graph by exhaustive search over matchings
/// of pairwise non-adjacent edges.
///
/// Edges are decided in index order; each is either left uncrossed or paired
/// with a later open edge, in increasing partner order. A branch is cut when
/// the decided part cannot be realized in the plane or when too few edges
/// remain to reach `m - (3n - 6)` crossings.
///
/// The returned drawing keeps the input edge order, with every edge labelled
/// as guest 0. For disconnected inputs it satisfies every drawing invariant
/// except connectivity.
pub fn one_planar_test(n: usize, edges: &[[Vertex; 2]], budget: SearchBudget) -> OnePlanarity {
    one_planar_test_stats(n, edges, budget).0
}

pub fn one_planar_test_stats(
    n: usize,
    edges: &[[Vertex; 2]],
    budget: SearchBudget,
) -> (OnePlanarity, SearchStats) {
    let m = edges.len();
    if m > one_planar_edge_bound(n) {
        return (OnePlanarity::NotOnePlanar, SearchStats::default());
    }
    let hosts: Vec<HostEdge> = edges.iter().map(|&[a, b]| HostEdge::new(a, b, 0)).collect();
    let mut s = Search {
        n,
        hosts: &hosts,
        state: vec![State::Open; m],
        crossings: Vec::new(),
        need: crossing_lower_bound(m, n),
        meter: Meter::new(budget),
        timed_out: false,
    };
    let found = s.run(0);
    let stats = SearchStats { nodes: s.meter.nodes };
    if s.timed_out {
        return (OnePlanarity::Timeout, stats);
    }
    match found {
        Some(crossings) => (OnePlanarity::OnePlanar(draw(n, hosts, crossings)), stats),
        None => (OnePlanarity::NotOnePlanar, stats),
    }
}

fn draw(n: usize, hosts: Vec<HostEdge>, crossings: Vec<[EdgeId; 2]>) -> OnePlaneDrawing {
    match realize(n, hosts.clone(), crossings.clone(), false) {
        Ok(dr) => dr,
        Err(RealizeError::Invalid(v)) if v == vec![Violation::Disconnected] => {
            realize_disconnected(n, hosts, crossings)
        }
        Err(e) => panic!("search accepted an unrealizable crossing set: {e}"),
    }
}

fn realize_disconnected(n: usize, hosts: Vec<HostEdge>, crossings: Vec<[EdgeId; 2]>) -> OnePlaneDrawing {
    // Join one vertex of each component to a fresh vertex, embed, then drop
    // it: removing edges keeps the rotation planar per component.
    let mut extended = hosts.clone();
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(c: &mut [usize], v: usize) -> usize {
        if c[v] != v {
            c[v] = root(c, c[v]);
        }
        c[v]
    }
    for h in &hosts {
        let (a, b) = (root(&mut comp, h.ends[0]), root(&mut comp, h.ends[1]));
        comp[a] = b;
    }
    for v in 0..n {
        if root(&mut comp, v) == v {
            extended.push(HostEdge::new(v, n, 0));
        }
    }
    let dr = realize(n + 1, extended, crossings.clone(), false).expect("apex keeps the drawing planar");
    let m = hosts.len();
    let mut rotation = Vec::with_capacity(n + crossings.len());
    for (v, rot) in dr.rotation.iter().enumerate() {
        if v == n {
            continue;
        }
        rotation.push(rot.iter().copied().filter(|d| d.edge < m).collect());
    }
    OnePlaneDrawing { n, edges: hosts, crossings, rotation, intermediate: false }
}

struct Search<'a> {
    n: usize,
    hosts: &'a [HostEdge],
    state: Vec<State>,
    crossings: Vec<[EdgeId; 2]>,
    need: usize,
    meter: Meter,
    timed_out: bool,
}

impl Search<'_> {
    fn feasible(&self) -> bool {
        let mut edges = Vec::new();
        let mut map = vec![usize::MAX; self.hosts.len()];
        for (i, h) in self.hosts.iter().enumerate() {
            if self.state[i] != State::Open {
                map[i] = edges.len();
                edges.push(*h);
            }
        }
        let cr: Vec<[EdgeId; 2]> = self.crossings.iter().map(|&[a, b]| [map[a], map[b]]).collect();
        let p = planarize(self.n, &edges, &cr);
        is_planar(p.n, &p.edges)
    }

    fn run(&mut self, from: usize) -> Option<Vec<[EdgeId; 2]>> {
        if !self.meter.tick() {
            self.timed_out = true;
            return None;
        }
        let Some(i) = (from..self.hosts.len()).find(|&i| self.state[i] == State::Open) else {
            return (self.crossings.len() >= self.need).then(|| self.crossings.clone());
        };
        let open_after = (i + 1..self.hosts.len()).filter(|&j| self.state[j] == State::Open).count();
        // Leave edge i uncrossed.
        if self.crossings.len() + open_after / 2 >= self.need {
            self.state[i] = State::Plain;
            if self.feasible() {
                if let Some(r) = self.run(i + 1) {
                    return Some(r);
                }
                if self.timed_out {
                    return None;
                }
            }
        }
        // Cross edge i with a later open edge.
        if self.crossings.len() + 1 + open_after.saturating_sub(1) / 2 >= self.need {
            self.state[i] = State::Crossed;
            for j in i + 1..self.hosts.len() {
                if self.state[j] != State::Open || self.hosts[i].shares_endpoint(&self.hosts[j]) {
                    continue;
                }
                self.state[j] = State::Crossed;
                self.crossings.push([i, j]);
                if self.feasible() {
                    if let Some(r) = self.run(i + 1) {
                        return Some(r);
                    }
                    if self.timed_out {
                        return None;
                    }
                }
                self.crossings.pop();
                self.state[j] = State::Open;
            }
        }
        self.state[i] = State::Open;
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    Exists(Box<PackingCertificate>),
    NotExists,
    Timeout,
}

/// Options of the packing oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    /// Skip guest placements with an already seen image and unions already
    /// seen up to relabeling of the host.
    pub symmetry_pruning: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { symmetry_pruning: true }
    }
}

/// Exhaustive search for a 1-planar packing of the instance.
pub fn oracle_pack(instance: &[GuestGraph], budget: SearchBudget) -> OracleVerdict {
    oracle_pack_with(instance, budget, OracleOptions::default())
}

pub fn oracle_pack_with(instance: &[GuestGraph], budget: SearchBudget, opts: OracleOptions) -> OracleVerdict {
    let Some(first) = instance.first() else {
        return OracleVerdict::NotExists;
    };
    let n = first.n();
    if instance.iter().any(|g| g.n() != n) {
        return OracleVerdict::NotExists;
    }
    let m: usize = instance.iter().map(|g| g.edges().len()).sum();
    if m > one_planar_edge_bound(n) {
        return OracleVerdict::NotExists;
    }
    let mut o = Oracle {
        n,
        instance,
        opts,
        budget,
        start: Instant::now(),
        meter: Meter::new(budget),
        timed_out: false,
        mappings: vec![(0..n).collect()],
        used: HashSet::new(),
        labels: Vec::new(),
        seen_unions: vec![HashSet::new(); instance.len()],
        planarity_cache: HashMap::new(),
    };
    for &[a, b] in first.edges() {
        o.used.insert([a, b]);
        o.labels.push(([a, b], 0));
    }
    match o.place(1) {
        Some(c) => OracleVerdict::Exists(Box::new(c)),
        None if o.timed_out => OracleVerdict::Timeout,
        None => OracleVerdict::NotExists,
    }
}

struct Oracle<'a> {
    n: usize,
    instance: &'a [GuestGraph],
    opts: OracleOptions,
    budget: SearchBudget,
    start: Instant,
    meter: Meter,
    timed_out: bool,
    mappings: Vec<Vec<Vertex>>,
    used: HashSet<[Vertex; 2]>,
    labels: Vec<([Vertex; 2], usize)>,
    seen_unions: Vec<HashSet<Vec<u8>>>,
    planarity_cache: HashMap<Vec<u8>, Option<OnePlaneDrawing>>,
}

impl Oracle<'_> {
    fn remaining(&self) -> SearchBudget {
        let left = self.budget.wall_clock.saturating_sub(self.start.elapsed());
        SearchBudget { max_nodes: u64::MAX, wall_clock: left.max(Duration::from_millis(1)) }
    }

    fn place(&mut self, gi: usize) -> Option<PackingCertificate> {
        if gi == self.instance.len() {
            return self.finish();
        }
        let g = &self.instance[gi];
        let adj = g.adjacency();
        let order = bfs_order(&adj);
        let mut map = vec![usize::MAX; self.n];
        let mut taken = vec![false; self.n];
        self.assign(gi, &adj, &order, 0, &mut map, &mut taken)
    }

    fn assign(
        &mut self,
        gi: usize,
        adj: &[Vec<Vertex>],
        order: &[Vertex],
        depth: usize,
        map: &mut Vec<Vertex>,
        taken: &mut Vec<bool>,
    ) -> Option<PackingCertificate> {
        if !self.meter.tick() {
            self.timed_out = true;
            return None;
        }
        if depth == order.len() {
            return self.placed(gi, map);
        }
        let v = order[depth];
        for h in 0..self.n {
            if taken[h] {
                continue;
            }
            let clash = adj[v].iter().any(|&w| {
                let hw = map[w];
                hw != usize::MAX && self.used.contains(&[h.min(hw), h.max(hw)])
            });
            if clash {
                continue;
            }
            map[v] = h;
            taken[h] = true;
            let r = self.assign(gi, adj, order, depth + 1, map, taken);
            map[v] = usize::MAX;
            taken[h] = false;
            if r.is_some() || self.timed_out {
                return r;
            }
        }
        None
    }

    fn placed(&mut self, gi: usize, map: &[Vertex]) -> Option<PackingCertificate> {
        let g = &self.instance[gi];
        let mut image: Vec<[Vertex; 2]> = g
            .edges()
            .iter()
            .map(|&[a, b]| [map[a].min(map[b]), map[a].max(map[b])])
            .collect();
        image.sort_unstable();
        for &e in &image {
            self.labels.push((e, gi));
            self.used.insert(e);
        }
        self.mappings.push(map.to_vec());
        let mut fresh = true;
        if self.opts.symmetry_pruning {
            let key = canonical_form(self.n, &self.labels);
            fresh = self.seen_unions[gi].insert(key);
        }
        let r = if fresh { self.place(gi + 1) } else { None };
        self.mappings.pop();
        for e in &image {
            self.used.remove(e);
            self.labels.pop();
        }
        r
    }

    fn finish(&mut self) -> Option<PackingCertificate> {
        let edges: Vec<[Vertex; 2]> = self.labels.iter().map(|&(e, _)| e).collect();
        let key = if self.opts.symmetry_pruning {
            let plain: Vec<([Vertex; 2], usize)> = edges.iter().map(|&e| (e, 0)).collect();
            Some(canonical_form(self.n, &plain))
        } else {
            None
        };
        if let Some(k) = &key {
            if let Some(None) = self.planarity_cache.get(k) {
                return None;
            }
        }
        let verdict = one_planar_test(self.n, &edges, self.remaining());
        let drawing = match verdict {
            OnePlanarity::OnePlanar(dr) => dr,
            OnePlanarity::NotOnePlanar => {
                if let Some(k) = key {
                    self.planarity_cache.insert(k, None);
                }
                return None;
            }
            OnePlanarity::Timeout => {
                self.timed_out = true;
                return None;
            }
        };
        let mut drawing = drawing;
        for (he, &(_, gi)) in drawing.edges.iter_mut().zip(&self.labels) {
            he.label = EdgeLabel::Guest(gi);
        }
        Some(PackingCertificate {
            instance: self.instance.to_vec(),
            mappings: self.mappings.clone(),
            drawing,
            provenance: Provenance::new("oracle", &[("n", self.n as i64)]),
        })
    }
}

fn bfs_order(adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Canonical form of an edge-coloured graph on `0..n`: the lexicographically
/// smallest colour matrix over all relabelings that respect a refined vertex
/// partition.
pub fn canonical_form(n: usize, edges: &[([Vertex; 2], usize)]) -> Vec<u8> {
    let mut mat = vec![0u8; n * n];
    for &([a, b], c) in edges {
        mat[a * n + b] = c as u8 + 1;
        mat[b * n + a] = c as u8 + 1;
    }
    // Colour-refinement of vertices, started from coloured degrees.
    let mut cell: Vec<u64> = vec![0; n];
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<(u8, u64)>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u8, u64)> =
                    (0..n).filter(|&w| mat[v * n + w] != 0).map(|w| (mat[v * n + w], cell[w])).collect();
                nb.sort_unstable();
                (cell[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0u64; n];
        let mut id = 0u64;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                id += 1;
            }
            next[sig[i].2] = id;
        }
        let stable = {
            let distinct = |c: &[u64]| c.iter().collect::<HashSet<_>>().len();
            distinct(&next) == distinct(&cell)
        };
        cell = next;
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    let mut ids: Vec<u64> = cell.clone();
    ids.sort_unstable();
    ids.dedup();
    for id in ids {
        cells.push((0..n).filter(|&v| cell[v] == id).collect());
    }
    let mut best: Option<Vec<u8>> = None;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    permute_cells(&cells, 0, 0, &mut perm, &mut used, &mat, n, &mut best);
    best.unwrap_or_default()
}

#[allow(clippy::too_many_arguments)]
fn permute_cells(
    cells: &[Vec<Vertex>],
    ci: usize,
    within: usize,
    perm: &mut Vec<Vertex>,
    used: &mut Vec<bool>,
    mat: &[u8],
    n: usize,
    best: &mut Option<Vec<u8>>,
) {
    if ci == cells.len() {
        let mut form = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in 0..=i {
                form.push(mat[perm[i] * n + perm[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| form < *b) {
            *best = Some(form);
        }
        return;
    }
    if within == cells[ci].len() {
        permute_cells(cells, ci + 1, 0, perm, used, mat, n, best);
        return;
    }
    for &v in &cells[ci] {
        if used[v] {
            continue;
        }
        // The form lists the lower triangle row by row, so placed vertices
        // fix a prefix of it; prune prefixes above the best form.
        perm.push(v);
        used[v] = true;
        let keep = match best {
            None => true,
            Some(b) => {
                let k = perm.len();
                let mut cmp = std::cmp::Ordering::Equal;
                let mut pos = 0;
                'outer: for i in 0..k {
                    for j in 0..=i {
                        let x = mat[perm[i] * n + perm[j]];
                        if x != b[pos] {
                            cmp = x.cmp(&b[pos]);
                            break 'outer;
                        }
                        pos += 1;
                    }
                }
                cmp != std::cmp::Ordering::Greater
            }
        };
        if keep {
            permute_cells(cells, ci, within + 1, perm, used, mat, n, best);
        }
        perm.pop();
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::validate_certificate;

    fn complete(n: usize) -> Vec<[Vertex; 2]> {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push([a, b]);
            }
        }
        e
    }

    #[test]
    fn k7_fails_the_edge_bound() {
        let (v, stats) = one_planar_test_stats(7, &complete(7), SearchBudget::seconds(1));
        assert_eq!(v, OnePlanarity::NotOnePlanar);
        assert_eq!(stats.nodes, 0);
    }

    #[test]
    fn k6_is_one_planar() {
        let OnePlanarity::OnePlanar(dr) = one_planar_test(6, &complete(6), SearchBudget::seconds(30)) else {
            panic!()
        };
        assert_eq!(dr.validate(), vec![]);
        assert!(dr.crossing_count() >= 3);
    }

    #[test]
    fn node_budget_times_out() {
        let v = one_planar_test(6, &complete(6), SearchBudget::new(2, Duration::from_secs(5)));
        assert_eq!(v, OnePlanarity::Timeout);
    }

    #[test]
    fn disconnected_graphs_get_component_drawings() {
        let mut e = complete(5);
        e.push([5, 6]);
        let OnePlanarity::OnePlanar(dr) = one_planar_test(7, &e, SearchBudget::seconds(10)) else { panic!() };
        assert_eq!(dr.validate(), vec![Violation::Disconnected]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = vec![([0, 1], 0), ([1, 2], 1), ([2, 3], 0)];
        let b = vec![([3, 2], 0), ([2, 0], 1), ([0, 1], 0)];
        let c = vec![([0, 1], 1), ([1, 2], 0), ([2, 3], 0)];
        assert_eq!(canonical_form(4, &a), canonical_form(4, &b));
        assert_ne!(canonical_form(4, &a), canonical_form(4, &c));
    }

    #[test]
    fn three_paths_oracle_small() {
        let paths = |n| vec![GuestGraph::path_on(n); 3];
        assert_eq!(oracle_pack(&paths(5), SearchBudget::seconds(5)), OracleVerdict::NotExists);
        let OracleVerdict::Exists(c) = oracle_pack(&paths(6), SearchBudget::seconds(60)) else { panic!() };
        assert_eq!(validate_certificate(&c), vec![]);
    }
}
