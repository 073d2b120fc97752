//! Simple undirected graphs with a canonical edge order.
//!
//! Vertices are `0..n`. Edges are stored as pairs `(u, v)` with `u < v`,
//! sorted lexicographically; that order fixes the column order of every
//! incidence-type matrix built from the graph, so downstream matrices are
//! reproducible bit for bit.

mod generators;
mod graph6;
mod line_graph;
mod queries;
mod trees;

pub use generators::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_path, gen_petersen, gen_star,
};
pub use graph6::{parse_graph6, write_graph6};
pub use line_graph::line_graph;
pub use queries::{
    bipartition, clique_number, components, is_complete_bipartite, is_connected,
    structural_summary, StructuralSummary,
};
pub use trees::{enumerate_trees, tree_certificate, TREE_ENUMERATION_CAP};

use thiserror::Error;

/// Errors raised by graph construction, parsing, and structural queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("{family} requires at least {min} vertices, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: long form (n > 62) is not supported")]
    Graph6UnsupportedSize,
    #[error("graph6: byte {byte:#04x} at position {pos} outside the printable range 63..=126")]
    Graph6BadByte { byte: u8, pos: usize },
    #[error("graph6: payload has {got} bytes, expected {expected} for n = {n}")]
    Graph6PayloadLength { got: usize, expected: usize, n: usize },
    #[error("graph6: nonzero padding bits in the final byte")]
    Graph6BadPadding,
    #[error("clique number supports at most {cap} vertices, got {got}")]
    CliqueCapExceeded { cap: usize, got: usize },
    #[error("tree enumeration supports 1..={cap} vertices, got {got}")]
    TreeCapExceeded { cap: usize, got: usize },
    #[error("edge-list text: {0}")]
    EdgeListFormat(String),
}

/// A simple undirected graph: vertex count plus a canonical edge list.
///
/// Invariants held by every constructed value: no self-loops, no duplicate
/// edges, all endpoints in `0..n`, and the edge list sorted lexicographically
/// with `u < v` in each pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Split of the vertex set into non-isolated (`W`) and isolated (`U`) vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub non_isolated: Vec<usize>,
    pub isolated: Vec<usize>,
}

impl VertexPartition {
    /// Number of non-isolated vertices, usually written `r`.
    pub fn r(&self) -> usize {
        self.non_isolated.len()
    }
}

impl Graph {
    /// Builds a graph from an arbitrary pair list, normalizing each pair to
    /// `u < v` and sorting. Rejects out-of-range endpoints, self-loops, and
    /// duplicate edges (duplicates are an error, not a silent dedup).
    pub fn from_edge_list(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted lexicographically with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Degree of every vertex; the sum is always `2 m`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Removes the given edges, keeping the vertex set (vertices may become
    /// isolated). Every pair in `subset` must be an edge of the graph.
    pub fn delete_edges(&self, subset: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut remove = Vec::with_capacity(subset.len());
        for &(a, b) in subset {
            if !self.has_edge(a, b) {
                return Err(GraphError::NotAnEdge(a, b));
            }
            remove.push((a.min(b), a.max(b)));
        }
        remove.sort_unstable();
        remove.dedup();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| remove.binary_search(e).is_err())
            .collect();
        Ok(Graph { n: self.n, edges })
    }

    /// Partition of the vertex set into non-isolated and isolated vertices,
    /// both in ascending order.
    pub fn non_isolated_partition(&self) -> VertexPartition {
        let degrees = self.degrees();
        let (non_isolated, isolated) = (0..self.n).partition(|&v| degrees[v] > 0);
        VertexPartition {
            non_isolated,
            isolated,
        }
    }

    /// Subgraph induced by `vertices` (must be distinct and in range), with
    /// vertex `vertices[i]` relabeled to `i`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::EndpointOutOfRange { vertex: v, n: self.n });
            }
            if index[v] != usize::MAX {
                return Err(GraphError::DuplicateEdge(v, v));
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edge_list(vertices.len(), edges)
    }
}

/// Parses the plain edge-list text format: a first line `n m` followed by
/// `m` lines `u v` with 0-indexed endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| GraphError::EdgeListFormat("missing 'n m' header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::EdgeListFormat(format!("bad header line {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::EdgeListFormat(format!("bad header line {header:?}")))?;
    if it.next().is_some() {
        return Err(GraphError::EdgeListFormat(format!(
            "trailing tokens in header line {header:?}"
        )));
    }
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::EdgeListFormat(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GraphError::EdgeListFormat(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(GraphError::EdgeListFormat(format!(
                "trailing tokens in edge line {line:?}"
            )));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(GraphError::EdgeListFormat(format!(
            "header declares {m} edges but {} edge lines follow",
            pairs.len()
        )));
    }
    Graph::from_edge_list(n, pairs)
}

/// Writes the plain edge-list text format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
