//! Structural queries: components, bipartiteness, clique number.

use super::{Graph, GraphError};

const CLIQUE_CAP: usize = 32;

/// Aggregate result of the structural queries on one graph.
#[derive(Debug, Clone)]
pub struct StructuralSummary {
    pub degrees: Vec<usize>,
    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    /// A proper 2-coloring if the graph is bipartite, `None` otherwise.
    pub bipartition: Option<Vec<u8>>,
    pub clique_number: usize,
}

/// Runs all structural queries at once. Fails like [`clique_number`] when the
/// graph is too large for the exact clique search.
pub fn structural_summary(g: &Graph) -> Result<StructuralSummary, GraphError> {
    Ok(StructuralSummary {
        degrees: g.degrees(),
        components: components(g),
        bipartition: bipartition(g),
        clique_number: clique_number(g)?,
    })
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency_lists();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

/// Proper 2-coloring (colors 0/1, color 0 on the smallest vertex of each
/// component) if the graph is bipartite.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let adj = g.adjacency_lists();
    let mut color = vec![u8::MAX; g.n()];
    for start in 0..g.n() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in &adj[u] {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Whether the graph is a complete bipartite graph `K_{x,y}` with `x, y >= 1`:
/// connected, bipartite with parts `X`, `Y`, and `m = |X| |Y|`.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    if !is_connected(g) {
        return false;
    }
    let Some(color) = bipartition(g) else {
        return false;
    };
    let x = color.iter().filter(|&&c| c == 0).count();
    let y = g.n() - x;
    x >= 1 && y >= 1 && g.m() == x * y
}

/// Exact clique number by bitset branch and bound. Exponential in the worst
/// case, so the vertex count is capped at 32.
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n > CLIQUE_CAP {
        return Err(GraphError::CliqueCapExceeded {
            cap: CLIQUE_CAP,
            got: n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut best = 0usize;
    expand(&adj, ((1u64 << n) - 1) as u32, 0, &mut best);
    Ok(best)
}

fn expand(adj: &[u32], mut candidates: u32, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    while candidates != 0 {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        candidates &= !(1 << v);
        expand(adj, candidates & adj[v], size + 1, best);
    }
    *best = (*best).max(size);
}
