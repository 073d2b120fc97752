//! Shared helpers for the unit tests: seeded random graphs (from the verify
//! module's corpus generators) and a moment-based spectrum oracle that is
//! independent of the Jacobi solver.

use crate::spectra::SymmetricMatrix;

pub(crate) use crate::verify::{random_graph, seeded_rng};

pub fn assert_close(got: f64, want: f64, tol: f64) {
    assert!(
        (got - want).abs() <= tol,
        "got {got:.15e}, want {want:.15e}, tol {tol:.1e}"
    );
}

/// Verifies a claimed full spectrum against the matrix without any
/// eigensolver: the power sums of the eigenvalues must equal the traces of
/// the matrix powers for k = 1..=n, which pins the multiset.
pub fn moment_check(m: &SymmetricMatrix, claimed: &[f64], tol: f64) {
    let n = m.order();
    assert_eq!(claimed.len(), n, "claimed spectrum has wrong length");
    let dense: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect();
    let mut power = dense.clone();
    for k in 1..=n {
        let trace: f64 = (0..n).map(|i| power[i][i]).sum();
        let power_sum: f64 = claimed.iter().map(|l| l.powi(k as i32)).sum();
        assert!(
            (trace - power_sum).abs() <= tol * trace.abs().max(1.0),
            "moment k = {k}: trace {trace:.12e} vs claimed power sum {power_sum:.12e}"
        );
        if k < n {
            power = mat_mul(&power, &dense);
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
