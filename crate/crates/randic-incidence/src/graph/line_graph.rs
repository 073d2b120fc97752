//! Line graph construction.

use super::Graph;

/// Line graph: one vertex per edge of `g` (in canonical edge order), two
/// vertices adjacent iff the corresponding edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let m = g.m();
    let mut incident = vec![Vec::new(); g.n()];
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let mut edges = Vec::new();
    for ids in &incident {
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    Graph::from_edge_list(m, edges).expect("line graph edges are valid by construction")
}
