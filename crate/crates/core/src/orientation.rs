//! Acyclic orientations and the source-firing move.
//!
//! An orientation is one direction bit per edge in the graph's fixed edge
//! order: bit set means the edge runs from its smaller endpoint to its larger
//! endpoint. Firing a source reverses every edge at it, so the source becomes
//! a sink and the two orientations agree away from the fired vertex.

use crate::graph::Graph;
use crate::parallel;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientationError {
    #[error("direction vector has {got} entries, graph has {expected} edges")]
    WrongEdgeCount { got: usize, expected: usize },
    #[error("orientation has a directed cycle")]
    Cyclic,
    #[error("arc ({0}, {1}) is not an edge of the graph")]
    UnknownArc(usize, usize),
    #[error("edge ({0}, {1}) assigned more than one direction")]
    RepeatedArc(usize, usize),
    #[error("vertex {vertex} is not a source (step {step})")]
    NotASource { vertex: usize, step: usize },
    #[error("vertex {vertex} may not fire in sink-fixed mode (step {step})")]
    ForbiddenVertex { vertex: usize, step: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("start orientation does not have 0 as a sink")]
    RootNotSink,
    #[error("invalid orientation JSON: {0}")]
    Json(String),
}

/// One direction bit per edge; bit `e` set means edge `e` runs min -> max.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    bits: u64,
}

/// Sources (every incident edge outgoing) and sinks (every incident edge
/// incoming) of an orientation. A vertex with no incident edges counts as
/// both, which only occurs on the one-vertex graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRoles {
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

impl Orientation {
    /// Validates acyclicity; the bit encoding is the canonical constructor.
    pub fn from_bits(g: &Graph, bits: u64) -> Result<Self, OrientationError> {
        let m = g.edge_count();
        if m < 64 && bits >> m != 0 {
            return Err(OrientationError::WrongEdgeCount {
                got: 64 - bits.leading_zeros() as usize,
                expected: m,
            });
        }
        let o = Orientation { bits };
        if !o.is_acyclic(g) {
            return Err(OrientationError::Cyclic);
        }
        Ok(o)
    }

    pub(crate) fn from_bits_unchecked(bits: u64) -> Self {
        Orientation { bits }
    }

    /// Builds an orientation from `(tail, head)` arcs covering every edge once.
    pub fn from_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        if arcs.len() != g.edge_count() {
            return Err(OrientationError::WrongEdgeCount {
                got: arcs.len(),
                expected: g.edge_count(),
            });
        }
        let mut bits = 0u64;
        let mut seen = vec![false; g.edge_count()];
        for &(tail, head) in arcs {
            let e = g
                .edge_index(tail, head)
                .ok_or(OrientationError::UnknownArc(tail, head))?;
            if seen[e] {
                return Err(OrientationError::RepeatedArc(tail, head));
            }
            seen[e] = true;
            if tail < head {
                bits |= 1 << e;
            }
        }
        Self::from_bits(g, bits)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Head of edge `e`: the endpoint its direction points at.
    pub fn head(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.edges()[e];
        if self.bits >> e & 1 == 1 {
            b
        } else {
            a
        }
    }

    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.edges()[e];
        if self.bits >> e & 1 == 1 {
            a
        } else {
            b
        }
    }

    /// `(tail, head)` arcs in edge-index order.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, usize)> {
        (0..g.edge_count())
            .map(|e| (self.tail(g, e), self.head(g, e)))
            .collect()
    }

    pub fn is_acyclic(&self, g: &Graph) -> bool {
        let dirs: Vec<bool> = (0..g.edge_count()).map(|e| self.bits >> e & 1 == 1).collect();
        is_acyclic(g, &dirs)
    }

    pub fn vertex_roles(&self, g: &Graph) -> VertexRoles {
        let mut sources = Vec::new();
        let mut sinks = Vec::new();
        for v in 0..=g.max_vertex() {
            let mut all_out = true;
            let mut all_in = true;
            for &e in g.incident_edges(v) {
                if self.head(g, e) == v {
                    all_out = false;
                } else {
                    all_in = false;
                }
            }
            if all_out {
                sources.push(v);
            }
            if all_in {
                sinks.push(v);
            }
        }
        VertexRoles { sources, sinks }
    }

    pub fn is_source(&self, g: &Graph, v: usize) -> bool {
        g.incident_edges(v).iter().all(|&e| self.tail(g, e) == v)
    }

    pub fn is_sink(&self, g: &Graph, v: usize) -> bool {
        g.incident_edges(v).iter().all(|&e| self.head(g, e) == v)
    }

    pub fn has_sink_zero(&self, g: &Graph) -> bool {
        self.is_sink(g, 0)
    }

    /// Fires source `v`: reverses every edge at `v`, leaving it a sink.
    pub fn fire(&self, g: &Graph, v: usize) -> Result<Orientation, OrientationError> {
        if v > g.max_vertex() {
            return Err(OrientationError::VertexOutOfRange(v));
        }
        if !self.is_source(g, v) {
            return Err(OrientationError::NotASource { vertex: v, step: 1 });
        }
        let mut bits = self.bits;
        for &e in g.incident_edges(v) {
            bits ^= 1 << e;
        }
        let fired = Orientation { bits };
        debug_assert!(fired.is_acyclic(g));
        Ok(fired)
    }

    /// Serializes to the documented `{"edges": [[tail, head], ...]}` value.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({ "edges": self.arcs(g) })
    }

    pub fn from_json(g: &Graph, v: &serde_json::Value) -> Result<Self, OrientationError> {
        #[derive(Deserialize)]
        struct Raw {
            edges: Vec<(usize, usize)>,
        }
        let raw: Raw = serde_json::from_value(v.clone())
            .map_err(|e| OrientationError::Json(e.to_string()))?;
        Self::from_arcs(g, &raw.edges)
    }
}

/// Topological-sort acyclicity test over a raw direction vector.
pub fn is_acyclic(g: &Graph, forward: &[bool]) -> bool {
    assert_eq!(forward.len(), g.edge_count(), "one direction per edge");
    let nv = g.vertex_count();
    let mut indegree = vec![0usize; nv];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let head = if forward[e] { b } else { a };
        indegree[head] += 1;
    }
    let mut stack: Vec<usize> = (0..nv).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &e in g.incident_edges(v) {
            let (a, b) = g.edges()[e];
            let (tail, head) = if forward[e] { (a, b) } else { (b, a) };
            if tail == v {
                indegree[head] -= 1;
                if indegree[head] == 0 {
                    stack.push(head);
                }
            }
        }
    }
    seen == nv
}

/// All acyclic orientations, ascending by direction-bit encoding.
pub fn enumerate_acyclic(g: &Graph) -> Vec<Orientation> {
    let m = g.edge_count();
    assert!(m <= 24, "direction-bit enumeration is for small graphs");
    parallel::filter_range(1 << m, |bits| {
        Orientation::from_bits_unchecked(bits).is_acyclic(g)
    })
    .into_iter()
    .map(Orientation::from_bits_unchecked)
    .collect()
}

/// Acyclic orientations with 0 as a sink, ascending by bit encoding.
pub fn enumerate_sink_zero(g: &Graph) -> Vec<Orientation> {
    enumerate_acyclic(g)
        .into_iter()
        .filter(|o| o.has_sink_zero(g))
        .collect()
}

/// Whether any source may fire, or only vertices legal in the sink-fixed
/// poset (neither 0 nor a neighbor of 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringMode {
    /// Preorder over all acyclic orientations: every source may fire.
    P,
    /// Poset of orientations with 0 fixed as a sink.
    P0,
}

/// An orientation together with an ordered list of fired vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringSequence {
    pub start: Orientation,
    pub fires: Vec<usize>,
}

impl FiringSequence {
    /// Number of times each vertex fires.
    pub fn counts(&self, g: &Graph) -> Vec<usize> {
        let mut counts = vec![0; g.vertex_count()];
        for &v in &self.fires {
            counts[v] += 1;
        }
        counts
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({ "start": self.start.to_json(g), "fires": self.fires })
    }

    pub fn from_json(g: &Graph, v: &serde_json::Value) -> Result<Self, OrientationError> {
        #[derive(Deserialize)]
        struct Raw {
            start: serde_json::Value,
            fires: Vec<usize>,
        }
        let raw: Raw = serde_json::from_value(v.clone())
            .map_err(|e| OrientationError::Json(e.to_string()))?;
        Ok(FiringSequence {
            start: Orientation::from_json(g, &raw.start)?,
            fires: raw.fires,
        })
    }
}

/// Replay report: the per-edge firing-count inequality (each vertex fires at
/// most once more than any neighbor) and, in sink-fixed mode, the distance
/// bound `|F^-1(i)| <= d(0,i) - 1` with total length at most the sum of those
/// bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiringReport {
    pub final_bits: u64,
    pub counts: Vec<usize>,
    pub lemma1_ok: bool,
    pub bound_ok: Option<bool>,
}

impl FiringReport {
    pub fn final_orientation(&self) -> Orientation {
        Orientation::from_bits_unchecked(self.final_bits)
    }
}

/// Replays `seq` step by step, enforcing that each fired vertex is a source
/// at its step (and, in `P0` mode, never 0 or a neighbor of 0).
pub fn validate_firing_sequence(
    g: &Graph,
    seq: &FiringSequence,
    mode: FiringMode,
) -> Result<FiringReport, OrientationError> {
    if mode == FiringMode::P0 && !seq.start.has_sink_zero(g) {
        return Err(OrientationError::RootNotSink);
    }
    let mut current = seq.start;
    for (i, &v) in seq.fires.iter().enumerate() {
        let step = i + 1;
        if v > g.max_vertex() {
            return Err(OrientationError::VertexOutOfRange(v));
        }
        if mode == FiringMode::P0 && (v == 0 || g.is_root_neighbor(v)) {
            return Err(OrientationError::ForbiddenVertex { vertex: v, step });
        }
        if !current.is_source(g, v) {
            return Err(OrientationError::NotASource { vertex: v, step });
        }
        current = current.fire(g, v).expect("source checked");
    }

    let counts = seq.counts(g);
    let lemma1_ok = g
        .edges()
        .iter()
        .all(|&(a, b)| counts[a].abs_diff(counts[b]) <= 1);
    let bound_ok = match mode {
        FiringMode::P => None,
        FiringMode::P0 => {
            let d = g.distances_from_root();
            let per_vertex = (1..=g.max_vertex()).all(|v| counts[v] <= d[v].saturating_sub(1));
            let total: usize = (1..=g.max_vertex()).map(|v| d[v].saturating_sub(1)).sum();
            Some(per_vertex && seq.fires.len() <= total)
        }
    };
    Ok(FiringReport {
        final_bits: current.bits,
        counts,
        lemma1_ok,
        bound_ok,
    })
}
