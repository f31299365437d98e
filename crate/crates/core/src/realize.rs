//! Builds rotation systems for host edges with prescribed crossing pairs.
//!
//! Every crossing is replaced by a wheel whose rim vertices carry the four
//! edge halves in alternating order, and extra copies of parallel uncrossed
//! edges are subdivided. The resulting simple graph is embedded with the
//! planarity test and each wheel is contracted back to a dummy vertex. Since
//! a wheel has a unique embedding up to mirroring, the contracted rotation
//! alternates the two crossing edges.

use crate::drawing::{Dart, EdgeId, HostEdge, OnePlaneDrawing, Violation};
use crate::planarity::embed;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("invalid host data: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("no planar rotation system realizes the prescribed crossings")]
    NotRealizable,
}

/// The auxiliary simple graph and how its vertices map back to darts.
pub(crate) struct Planarized {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    /// Dart of the host drawing leaving `v` along aux edge towards `w`, for
    /// real vertices `v` and wheel hubs.
    links: HashMap<(usize, usize), Dart>,
    hubs: Vec<usize>,
}

/// Aux graph of the given edges and crossing pairs; crossings must form a
/// matching on edges with distinct endpoints.
pub(crate) fn planarize(n: usize, edges: &[HostEdge], crossings: &[[EdgeId; 2]]) -> Planarized {
    let mut aux: Vec<[usize; 2]> = Vec::new();
    let mut links = HashMap::new();
    let mut next = n;
    let mut hubs = Vec::with_capacity(crossings.len());
    let mut crossed = vec![false; edges.len()];
    for &[e, f] in crossings {
        crossed[e] = true;
        crossed[f] = true;
        let hub = next;
        let rim = [next + 1, next + 2, next + 3, next + 4];
        next += 5;
        hubs.push(hub);
        let halves = [(e, 0u8), (f, 0u8), (e, 1u8), (f, 1u8)];
        for j in 0..4 {
            aux.push([hub, rim[j]]);
            aux.push([rim[j], rim[(j + 1) % 4]]);
            let (edge, end) = halves[j];
            let v = edges[edge].ends[usize::from(end)];
            aux.push([v, rim[j]]);
            links.insert((v, rim[j]), Dart::real(edge, end));
            links.insert((hub, rim[j]), Dart::dummy(edge, end));
        }
    }
    let mut seen: HashMap<[usize; 2], ()> = HashMap::new();
    for (i, he) in edges.iter().enumerate() {
        if crossed[i] {
            continue;
        }
        let [a, b] = he.ends;
        if seen.insert(he.key(), ()).is_none() {
            aux.push([a, b]);
            links.insert((a, b), Dart::real(i, 0));
            links.insert((b, a), Dart::real(i, 1));
        } else {
            let s = next;
            next += 1;
            aux.push([a, s]);
            aux.push([s, b]);
            links.insert((a, s), Dart::real(i, 0));
            links.insert((b, s), Dart::real(i, 1));
        }
    }
    Planarized { n: next, edges: aux, links, hubs }
}

/// Checks the host data that `realize` relies on.
fn precheck(n: usize, edges: &[HostEdge], crossings: &[[EdgeId; 2]]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if e.ends[0] >= n || e.ends[1] >= n {
            out.push(Violation::EndpointOutOfRange { edge: i });
        } else if e.ends[0] == e.ends[1] {
            out.push(Violation::SelfLoop { edge: i });
        }
    }
    let mut used = vec![false; edges.len()];
    for (c, &[e, f]) in crossings.iter().enumerate() {
        for x in [e, f] {
            if x >= edges.len() {
                out.push(Violation::CrossingUnknownEdge { crossing: c, edge: x });
            } else if used[x] {
                out.push(Violation::CrossingNotMatching { edge: x });
            } else {
                used[x] = true;
            }
        }
        if e == f || (e < edges.len() && f < edges.len() && edges[e].shares_endpoint(&edges[f])) {
            out.push(Violation::AdjacentCrossing { crossing: c });
        }
    }
    out
}

/// True when some rotation system realizes the edges with exactly the given
/// crossings.
pub fn realizable(n: usize, edges: &[HostEdge], crossings: &[[EdgeId; 2]]) -> bool {
    if !precheck(n, edges, crossings).is_empty() {
        return false;
    }
    let p = planarize(n, edges, crossings);
    crate::planarity::is_planar(p.n, &p.edges)
}

/// Drawing of `edges` with exactly the given crossing pairs, validated.
pub fn realize(
    n: usize,
    edges: Vec<HostEdge>,
    crossings: Vec<[EdgeId; 2]>,
    intermediate: bool,
) -> Result<OnePlaneDrawing, RealizeError> {
    let bad = precheck(n, &edges, &crossings);
    if !bad.is_empty() {
        return Err(RealizeError::Invalid(bad));
    }
    let p = planarize(n, &edges, &crossings);
    let rot = embed(p.n, &p.edges).ok_or(RealizeError::NotRealizable)?;
    let mut rotation = Vec::with_capacity(n + crossings.len());
    for (v, order) in rot.iter().enumerate().take(n) {
        rotation.push(order.iter().map(|&w| p.links[&(v, w)]).collect());
    }
    for &hub in &p.hubs {
        rotation.push(rot[hub].iter().map(|&w| p.links[&(hub, w)]).collect());
    }
    let dr = OnePlaneDrawing { n, edges, crossings, rotation, intermediate };
    let violations = dr.validate();
    if violations.is_empty() {
        Ok(dr)
    } else {
        Err(RealizeError::Invalid(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<HostEdge> {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push(HostEdge::new(a, b, 0));
            }
        }
        e
    }

    #[test]
    fn k4_plane_and_with_one_crossing() {
        let dr = realize(4, complete(4), vec![], false).unwrap();
        assert_eq!(dr.trace_faces().unwrap().len(), 4);
        // Edges 0-1 and 2-3 crossing.
        let dr = realize(4, complete(4), vec![[0, 5]], false).unwrap();
        assert_eq!(dr.crossing_count(), 1);
        assert_eq!(dr.trace_faces().unwrap().len(), 5);
    }

    #[test]
    fn k5_needs_a_crossing() {
        assert_eq!(realize(5, complete(5), vec![], false), Err(RealizeError::NotRealizable));
        // 0-2 crosses 1-3.
        let e = complete(5);
        let a = e.iter().position(|h| h.ends == [0, 2]).unwrap();
        let b = e.iter().position(|h| h.ends == [1, 3]).unwrap();
        assert!(realize(5, e, vec![[a, b]], false).is_ok());
    }

    #[test]
    fn adjacent_crossings_rejected() {
        let r = realize(4, complete(4), vec![[0, 1]], false);
        assert!(matches!(r, Err(RealizeError::Invalid(_))));
    }

    #[test]
    fn parallel_edges_in_intermediate_drawings() {
        let mut e = complete(3);
        e.push(HostEdge::new(0, 1, 1));
        assert!(realize(3, e.clone(), vec![], true).is_ok());
        assert!(matches!(realize(3, e, vec![], false), Err(RealizeError::Invalid(_))));
    }
}
