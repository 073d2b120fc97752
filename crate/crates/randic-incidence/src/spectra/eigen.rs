//! Cyclic Jacobi eigendecomposition for dense symmetric matrices.
//!
//! Plane rotations annihilate one off-diagonal entry at a time; accumulated
//! rotations give orthonormal eigenvectors, which the caller uses to enforce
//! the residual contract of [`super::sym_eigenvalues`].

// the rotation updates address (p, j), (j, q) pairs across rows; index
// loops mirror that addressing
#![allow(clippy::needless_range_loop)]

use super::matrix::SymmetricMatrix;
use crate::Error;

const MAX_SWEEPS: usize = 100;

/// Full eigendecomposition. Returns unsorted eigenvalues and the matching
/// orthonormal eigenvectors as columns (`vectors[i][k]` is component `i` of
/// eigenvector `k`).
pub(super) fn jacobi(m: &SymmetricMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>), Error> {
    let n = m.order();
    let mut a: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j)).collect()).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut d: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    if n < 2 {
        return Ok((d, v));
    }

    for sweep in 1..=MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n - 1 {
            for q in p + 1..n {
                off += a[p][q].abs();
            }
        }
        if off == 0.0 {
            return Ok((d, v));
        }
        let thresh = if sweep < 4 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let g = 100.0 * a[p][q].abs();
                // after a few sweeps, zero entries too small to change d
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p][q] = 0.0;
                    continue;
                }
                if a[p][q].abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    a[p][q] / h
                } else {
                    let theta = 0.5 * h / a[p][q];
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * a[p][q];
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                a[p][q] = 0.0;
                for j in 0..p {
                    let (x, y) = get_two(&mut a[j], p, q);
                    plane_rotate(s, tau, x, y);
                }
                for j in p + 1..q {
                    let apj = a[p][j];
                    let ajq = a[j][q];
                    a[p][j] = apj - s * (ajq + apj * tau);
                    a[j][q] = ajq + s * (apj - ajq * tau);
                }
                for j in q + 1..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = apj - s * (aqj + apj * tau);
                    a[q][j] = aqj + s * (apj - aqj * tau);
                }
                for row in v.iter_mut() {
                    let (x, y) = get_two(row, p, q);
                    plane_rotate(s, tau, x, y);
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    Err(Error::NonConvergence(MAX_SWEEPS))
}

#[inline]
fn plane_rotate(s: f64, tau: f64, x: &mut f64, y: &mut f64) {
    let (gx, gy) = (*x, *y);
    *x = gx - s * (gy + gx * tau);
    *y = gy + s * (gx - gy * tau);
}

/// Two distinct mutable entries of one row (`i < j`).
fn get_two(row: &mut [f64], i: usize, j: usize) -> (&mut f64, &mut f64) {
    let (left, right) = row.split_at_mut(j);
    (&mut left[i], &mut right[0])
}
