//! Generators for the named graph families used throughout the crate.

use super::{Graph, GraphError};

/// Complete graph on `n >= 1` vertices.
pub fn gen_complete(n: usize) -> Result<Graph, GraphError> {
    family_min("complete graph", 1, n)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edge_list(n, edges)
}

/// Complete bipartite graph with parts of size `x, y >= 1`; part `X` is
/// vertices `0..x`, part `Y` is `x..x+y`.
pub fn gen_complete_bipartite(x: usize, y: usize) -> Result<Graph, GraphError> {
    family_min("complete bipartite graph", 1, x.min(y))?;
    let edges = (0..x).flat_map(|u| (x..x + y).map(move |v| (u, v)));
    Graph::from_edge_list(x + y, edges)
}

/// Star on `n >= 2` vertices, center `n - 1`, leaves `0..n-1`.
pub fn gen_star(n: usize) -> Result<Graph, GraphError> {
    family_min("star", 2, n)?;
    Graph::from_edge_list(n, (0..n - 1).map(|v| (v, n - 1)))
}

/// Path on `n >= 1` vertices with edges `(i, i+1)`.
pub fn gen_path(n: usize) -> Result<Graph, GraphError> {
    family_min("path", 1, n)?;
    Graph::from_edge_list(n, (0..n.saturating_sub(1)).map(|v| (v, v + 1)))
}

/// Cycle on `n >= 3` vertices.
pub fn gen_cycle(n: usize) -> Result<Graph, GraphError> {
    family_min("cycle", 3, n)?;
    Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, edges).expect("Petersen edges are valid")
}

fn family_min(family: &'static str, min: usize, got: usize) -> Result<(), GraphError> {
    if got < min {
        Err(GraphError::TooSmall { family, min, got })
    } else {
        Ok(())
    }
}
