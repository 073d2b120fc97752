//! Shared helpers for the integration suites: a spectrum oracle that never
//! touches the crate's eigensolver, and a self-contained seeded graph
//! generator for the fuzz corpora.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use randic_incidence::graph::Graph;

pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got:.15e}, want {want:.15e}, tol {tol:.1e}"
    );
}

/// Independent spectrum oracle: a claimed full spectrum of a symmetric
/// matrix is correct iff the power sums of the claimed values match the
/// traces of the matrix powers for k = 1..=n (the moments pin the
/// multiset). Uses only plain `Vec` arithmetic.
pub fn moment_check(matrix: &[Vec<f64>], claimed: &[f64], tol: f64, what: &str) {
    let n = matrix.len();
    assert_eq!(claimed.len(), n, "{what}: claimed spectrum length");
    let mut power = matrix.to_vec();
    for k in 1..=n {
        let trace: f64 = (0..n).map(|i| power[i][i]).sum();
        let power_sum: f64 = claimed.iter().map(|l| l.powi(k as i32)).sum();
        assert!(
            (trace - power_sum).abs() <= tol * trace.abs().max(1.0),
            "{what}: moment k = {k}: trace {trace:.12e} vs power sum {power_sum:.12e}"
        );
        if k < n {
            power = mat_mul(&power, matrix);
        }
    }
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut c = vec![vec![0.0; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

/// Hand-built Randić incidence matrix (n rows, one column per edge in the
/// given order), independent of the crate's construction path.
pub fn randic_incidence_by_hand(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<f64>> {
    let mut degrees = vec![0usize; n];
    for &(u, v) in edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    let mut m = vec![vec![0.0; edges.len()]; n];
    for (j, &(u, v)) in edges.iter().enumerate() {
        m[u][j] = 1.0 / (degrees[u] as f64).sqrt();
        m[v][j] = 1.0 / (degrees[v] as f64).sqrt();
    }
    m
}

/// `M Mᵀ` for a hand-built rectangular matrix.
pub fn gram_by_hand(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut g = vec![vec![0.0; rows]; rows];
    for i in 0..rows {
        for j in 0..rows {
            g[i][j] = (0..cols).map(|k| m[i][k] * m[j][k]).sum();
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with i.i.d. edges; `min_n` guards the families that cannot
/// have isolated vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.random_range(lo..=hi);
    let p: f64 = rng.random_range(0.15..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

/// Random connected graph by rejection.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    loop {
        let g = random_graph(rng, lo, hi);
        if g.n() >= 1 && randic_incidence::graph::is_connected(&g) && (g.n() == 1 || g.m() >= 1)
        {
            return g;
        }
    }
}
