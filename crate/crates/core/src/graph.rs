//! The underlying rooted graph: a simple connected undirected graph on the
//! vertex set `{0, ..., n}` with vertex 0 distinguished as the root sink.
//!
//! Edges are stored canonically as `(min, max)` pairs in lexicographic order;
//! the resulting edge index is stable and everything downstream (orientation
//! bits, serialization) depends on it.

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} exceeds declared vertex count")]
    VertexOutOfRange(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no edge mentions the root vertex 0")]
    RootAbsent,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("cannot parse edge list at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Simple connected undirected graph rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on vertices `{0, ..., n}` from unordered edge pairs.
    ///
    /// Pairs may come in either endpoint order; they are canonicalized to
    /// `(min, max)` and sorted lexicographically.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let e = (a.min(b), a.max(b));
            if e.1 > n {
                return Err(GraphError::VertexOutOfRange(e.1));
            }
            canon.push(e);
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }

        let mut adj = vec![Vec::new(); n + 1];
        let mut incident = vec![Vec::new(); n + 1];
        for (idx, &(a, b)) in canon.iter().enumerate() {
            adj[a].push(b);
            adj[b].push(a);
            incident[a].push(idx);
            incident[b].push(idx);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        if n > 0 {
            if let Some(v) = (0..=n).find(|&v| adj[v].is_empty()) {
                return Err(GraphError::IsolatedVertex(v));
            }
        }

        let g = Graph {
            n,
            edges: canon,
            adj,
            incident,
        };
        if g.bfs_from_root().iter().any(Option::is_none) {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// Parses a whitespace-separated edge list, one `i j` pair per line.
    /// `#` starts a comment. The vertex set is `{0, ..., max vertex seen}`.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut max_seen = None::<usize>;
        let mut saw_root = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse_tok = |tok: &str| {
                tok.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: lineno + 1,
                    reason: format!("expected a nonnegative integer, got {tok:?}"),
                })
            };
            let a = parse_tok(it.next().ok_or(GraphError::Parse {
                line: lineno + 1,
                reason: "missing edge endpoints".into(),
            })?)?;
            let b = parse_tok(it.next().ok_or(GraphError::Parse {
                line: lineno + 1,
                reason: "missing second endpoint".into(),
            })?)?;
            if let Some(extra) = it.next() {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    reason: format!("unexpected trailing token {extra:?}"),
                });
            }
            saw_root |= a == 0 || b == 0;
            max_seen = Some(max_seen.map_or(a.max(b), |m: usize| m.max(a.max(b))));
            edges.push((a, b));
        }
        if !saw_root {
            return Err(GraphError::RootAbsent);
        }
        Self::new(max_seen.unwrap_or(0), &edges)
    }

    /// Largest vertex label; the vertex set is `{0, ..., n}`.
    pub fn max_vertex(&self) -> usize {
        self.n
    }

    /// Number of vertices, `n + 1`.
    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edges in index order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of the canonical edge `(min, max)`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    /// Sorted adjacency of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize], GraphError> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange(v))
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_root_neighbor(&self, v: usize) -> bool {
        self.adj[0].binary_search(&v).is_ok()
    }

    fn bfs_from_root(&self) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Shortest-path distance from the root to every vertex.
    pub fn distances_from_root(&self) -> Vec<usize> {
        self.bfs_from_root()
            .into_iter()
            .map(|d| d.expect("graph invariant: connected"))
            .collect()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Graph::new(raw.n, &raw.edges).map_err(D::Error::custom)
    }
}

/// Every connected graph on `1..=max_vertices` labeled vertices, smallest
/// vertex count first, then ascending edge-subset encoding. Deterministic.
pub fn connected_graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for nv in 1..=max_vertices {
        let n = nv - 1;
        let mut pairs = Vec::new();
        for a in 0..nv {
            for b in (a + 1)..nv {
                pairs.push((a, b));
            }
        }
        let m = pairs.len();
        for mask in 0u64..(1 << m) {
            let edges: Vec<_> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            if let Ok(g) = Graph::new(n, &edges) {
                out.push(g);
            }
        }
    }
    out
}
