//! Enumeration of non-isomorphic free trees.
//!
//! Rooted trees on `n` vertices are generated as level sequences with the
//! Beyer–Hedetniemi successor rule; each is reduced to a canonical free-tree
//! certificate (AHU encoding rooted at the centers) and the first occurrence
//! of each certificate is emitted. Correctness is pinned by the known
//! free-tree counts rather than by the generation order.

use super::queries::is_connected;
use super::{Graph, GraphError};

/// Practical cap for [`enumerate_trees`].
pub const TREE_ENUMERATION_CAP: usize = 16;

/// All free trees on `n` vertices, one representative per isomorphism class,
/// in a deterministic order. `1 <= n <= 16`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > TREE_ENUMERATION_CAP {
        return Err(GraphError::TreeCapExceeded {
            cap: TREE_ENUMERATION_CAP,
            got: n,
        });
    }
    if n == 1 {
        return Ok(vec![Graph::from_edge_list(1, [])?]);
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut levels: Vec<usize> = (1..=n).collect();
    loop {
        let tree = graph_from_levels(&levels);
        let cert = tree_certificate(&tree).expect("level sequence encodes a tree");
        if seen.insert(cert) {
            out.push(tree);
        }
        if !advance_levels(&mut levels) {
            break;
        }
    }
    Ok(out)
}

/// Beyer–Hedetniemi successor: copy the block between the parent of the last
/// deep vertex and that vertex over the tail. Returns false once the star
/// (all levels 2) is reached.
fn advance_levels(levels: &mut [usize]) -> bool {
    let Some(p) = levels.iter().rposition(|&l| l > 2) else {
        return false;
    };
    let q = levels[..p]
        .iter()
        .rposition(|&l| l == levels[p] - 1)
        .expect("every non-root level has a parent level before it");
    for i in p..levels.len() {
        levels[i] = levels[i - (p - q)];
    }
    true
}

fn graph_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[levels[0]] = 0;
    let mut edges = Vec::with_capacity(n - 1);
    for (i, &l) in levels.iter().enumerate().skip(1) {
        edges.push((last_at_level[l - 1], i));
        last_at_level[l] = i;
    }
    Graph::from_edge_list(n, edges).expect("level sequence yields valid edges")
}

/// Canonical certificate of a free tree: the AHU encoding rooted at the
/// center, or the smaller of the two encodings when the tree is bicentral.
/// Two trees are isomorphic iff their certificates are equal. Returns `None`
/// for graphs that are not trees.
pub fn tree_certificate(g: &Graph) -> Option<Vec<u8>> {
    if g.n() == 0 || g.m() != g.n() - 1 || !is_connected(g) {
        return None;
    }
    let adj = g.adjacency_lists();
    centers(g)
        .into_iter()
        .map(|c| rooted_code(&adj, c, usize::MAX))
        .min()
}

/// Center vertices (1 or 2) found by stripping leaves level by level.
fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let adj = g.adjacency_lists();
    let mut degree = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in &adj[v] {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut child_codes: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(adj, c, v))
        .collect();
    child_codes.sort();
    let mut code = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in child_codes {
        code.extend(c);
    }
    code.push(b')');
    code
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_path, gen_star};

    // published counts of free trees on 1..=10 vertices
    const FREE_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

    #[test]
    fn counts_match_published_values() {
        for (i, &count) in FREE_TREE_COUNTS.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn twelve_vertex_count() {
        assert_eq!(enumerate_trees(12).unwrap().len(), 551);
    }

    #[test]
    #[ignore = "slow in debug builds; run with --ignored"]
    fn cap_size_count() {
        assert_eq!(enumerate_trees(16).unwrap().len(), 19320);
    }

    #[test]
    fn emitted_trees_are_trees_and_pairwise_non_isomorphic() {
        for n in 1..=9 {
            let trees = enumerate_trees(n).unwrap();
            let mut certs = Vec::new();
            for t in &trees {
                assert_eq!(t.n(), n);
                assert_eq!(t.m(), n - 1);
                assert!(is_connected(t));
                certs.push(tree_certificate(t).unwrap());
            }
            for i in 0..certs.len() {
                for j in i + 1..certs.len() {
                    assert_ne!(certs[i], certs[j], "n = {n}: trees {i} and {j} isomorphic");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_trees(1).unwrap()[0].n(), 1);
        let four = enumerate_trees(4).unwrap();
        assert_eq!(four.len(), 2);
        let certs: Vec<_> = four.iter().map(|t| tree_certificate(t).unwrap()).collect();
        assert!(certs.contains(&tree_certificate(&gen_path(4).unwrap()).unwrap()));
        assert!(certs.contains(&tree_certificate(&gen_star(4).unwrap()).unwrap()));
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(17).is_err());
    }

    #[test]
    fn certificate_is_isomorphism_invariant() {
        // the same tree under two labelings
        let a = Graph::from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let b = Graph::from_edge_list(5, [(4, 3), (3, 0), (0, 2), (0, 1)]).unwrap();
        assert_eq!(tree_certificate(&a), tree_certificate(&b));
        // ...and a genuinely different tree differs
        let c = gen_star(5).unwrap();
        assert_ne!(tree_certificate(&a), tree_certificate(&c));
        // non-trees have no certificate
        let cycle = crate::graph::gen_cycle(5).unwrap();
        assert_eq!(tree_certificate(&cycle), None);
        let forest = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(tree_certificate(&forest), None);
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let a = enumerate_trees(8).unwrap();
        let b = enumerate_trees(8).unwrap();
        assert_eq!(a, b);
    }
}
