//! Shared plumbing for the constructive packers.

use crate::certificate::{certificate_from_drawing, PackingCertificate, Provenance};
use crate::drawing::{EdgeId, HostEdge, OnePlaneDrawing};
use crate::graph::{GuestKind, Vertex};
use crate::realize::realize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackError {
    /// The instance provably has no 1-planar packing.
    #[error("no packing exists ({code}): {reason}")]
    NoPacking { code: &'static str, reason: String },
    /// The instance may have a packing but no construction here covers it.
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("n = {n} is below the minimum {min} of this construction")]
    NTooSmall { n: usize, min: usize },
    #[error("input is not a caterpillar")]
    NotACaterpillar,
    #[error("construction failed: {0}")]
    Internal(String),
}

impl PackError {
    pub fn code(&self) -> &'static str {
        match self {
            PackError::NoPacking { code, .. } => code,
            PackError::Unsupported(_) => "unsupported",
            PackError::NTooSmall { .. } => "n-too-small",
            PackError::NotACaterpillar => "not-a-caterpillar",
            PackError::Internal(_) => "internal",
        }
    }

    pub(crate) fn no_packing(code: &'static str, reason: impl Into<String>) -> Self {
        PackError::NoPacking { code, reason: reason.into() }
    }
}

/// Host edges and crossing pairs collected before realization.
#[derive(Debug, Clone, Default)]
pub(crate) struct HostBuilder {
    pub n: usize,
    pub edges: Vec<HostEdge>,
    pub crossings: Vec<[EdgeId; 2]>,
    index: HashMap<[Vertex; 2], EdgeId>,
    duplicate: Option<[Vertex; 2]>,
}

impl HostBuilder {
    pub fn new(n: usize) -> Self {
        HostBuilder { n, ..Default::default() }
    }

    pub fn edge(&mut self, a: Vertex, b: Vertex, guest: usize) -> EdgeId {
        let e = HostEdge::new(a, b, guest);
        let id = self.edges.len();
        if self.index.insert(e.key(), id).is_some() {
            self.duplicate.get_or_insert(e.key());
        }
        self.edges.push(e);
        id
    }

    pub fn path(&mut self, order: &[Vertex], guest: usize) {
        for w in order.windows(2) {
            self.edge(w[0], w[1], guest);
        }
    }

    pub fn id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.index.get(&[a.min(b), a.max(b)]).copied()
    }

    /// Records that the host edges `a`-`b` and `c`-`d` cross.
    pub fn cross(&mut self, [a, b]: [Vertex; 2], [c, d]: [Vertex; 2]) -> Result<(), PackError> {
        let missing = |x: Vertex, y: Vertex| PackError::Internal(format!("crossing names missing edge {x}-{y}"));
        let e = self.id(a, b).ok_or_else(|| missing(a, b))?;
        let f = self.id(c, d).ok_or_else(|| missing(c, d))?;
        self.crossings.push([e, f]);
        Ok(())
    }

    /// Embeds the collected edges with exactly the recorded crossings.
    pub fn drawing(self) -> Result<OnePlaneDrawing, PackError> {
        if let Some([a, b]) = self.duplicate {
            return Err(PackError::Internal(format!("host edge {a}-{b} added twice")));
        }
        realize(self.n, self.edges, self.crossings, false).map_err(|e| PackError::Internal(e.to_string()))
    }

    pub fn finish(self, kinds: &[GuestKind], provenance: Provenance) -> Result<PackingCertificate, PackError> {
        let dr = self.drawing()?;
        certificate_from_drawing(dr, kinds, provenance).map_err(|e| PackError::Internal(e.to_string()))
    }
}
