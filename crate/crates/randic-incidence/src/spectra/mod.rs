//! Matrix constructions and the symmetric eigensolver.
//!
//! Everything here is a pure function of an immutable [`Graph`]. Incidence
//! matrices are `n x m` with columns in the canonical edge order; symmetric
//! matrices are mirrored at construction time. The eigensolver carries an
//! explicit numerical contract: every returned eigenvalue has a unit vector
//! with residual below `tol * max(1, inf_norm)`, and the eigenvalue sum
//! matches the trace, or the call fails loudly.

mod eigen;
mod matrix;

pub use matrix::{RectMatrix, SymmetricMatrix};

use crate::graph::Graph;
use crate::Error;

/// Default verification tolerance for [`sym_eigenvalues`].
pub const DEFAULT_EIGEN_TOL: f64 = 1e-10;

/// Eigenvalues sorted in non-increasing order, together with the tolerance
/// they were verified at.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    residual_tol: f64,
}

impl Spectrum {
    pub(crate) fn new(values: Vec<f64>, residual_tol: f64) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum {
            values,
            residual_tol,
        }
    }

    /// Values in non-increasing order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn residual_tol(&self) -> f64 {
        self.residual_tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Zero-pads (never truncates) to `len` values.
    pub(crate) fn zero_padded(mut self, len: usize) -> Spectrum {
        assert!(self.values.len() <= len);
        self.values.resize(len, 0.0);
        self
    }
}

/// The 0/1 adjacency matrix.
pub fn adjacency(g: &Graph) -> SymmetricMatrix {
    let mut a = SymmetricMatrix::zero(g.n());
    for &(u, v) in g.edges() {
        a.set_sym(u, v, 1.0);
    }
    a
}

/// The diagonal matrix of vertex degrees.
pub fn degree_matrix(g: &Graph) -> SymmetricMatrix {
    let degrees = g.degrees();
    let mut d = SymmetricMatrix::zero(g.n());
    for (i, &deg) in degrees.iter().enumerate() {
        d.set_sym(i, i, deg as f64);
    }
    d
}

/// Degree-weighted adjacency matrix with entry `(d_u d_v)^{-1/2}` on each
/// edge and zeros elsewhere.
pub fn randic_matrix(g: &Graph) -> SymmetricMatrix {
    let degrees = g.degrees();
    let mut r = SymmetricMatrix::zero(g.n());
    for &(u, v) in g.edges() {
        r.set_sym(u, v, 1.0 / ((degrees[u] * degrees[v]) as f64).sqrt());
    }
    r
}

/// The signless Laplacian `D + A`.
pub fn signless_laplacian(g: &Graph) -> SymmetricMatrix {
    let degrees = g.degrees();
    let mut q = SymmetricMatrix::zero(g.n());
    for (i, &deg) in degrees.iter().enumerate() {
        q.set_sym(i, i, deg as f64);
    }
    for &(u, v) in g.edges() {
        q.set_sym(u, v, 1.0);
    }
    q
}

/// The degree-normalized signless Laplacian `D^{-1/2} (D + A) D^{-1/2}`,
/// which equals `I + R` entrywise. Defined only for graphs without isolated
/// vertices; the first isolated vertex is reported otherwise.
pub fn normalized_signless_laplacian(g: &Graph) -> Result<SymmetricMatrix, Error> {
    let degrees = g.degrees();
    if let Some(v) = (0..g.n()).find(|&v| degrees[v] == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let q = signless_laplacian(g);
    let inv_sqrt: Vec<f64> = degrees.iter().map(|&d| 1.0 / (d as f64).sqrt()).collect();
    Ok(SymmetricMatrix::from_upper(g.n(), |i, j| {
        inv_sqrt[i] * q.get(i, j) * inv_sqrt[j]
    }))
}

/// The 0/1 vertex-edge incidence matrix (`n x m`, canonical edge order).
pub fn incidence(g: &Graph) -> RectMatrix {
    let mut m = RectMatrix::zero(g.n(), g.m());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        m.set(u, j, 1.0);
        m.set(v, j, 1.0);
    }
    m
}

/// Incidence matrix weighted by `d^{-1/2}`: entry `(i, j)` is
/// `d_i^{-1/2}` when vertex `i` lies on edge `j`. Rows of isolated vertices
/// are zero, so no degree singularity arises.
pub fn randic_incidence(g: &Graph) -> RectMatrix {
    general_randic_incidence(g, -0.5)
}

/// Incidence matrix weighted by `d^alpha`. `alpha = -1/2` reproduces
/// [`randic_incidence`] and `alpha = 0` reproduces [`incidence`] (the
/// degenerate case; callers flag it in result metadata).
pub fn general_randic_incidence(g: &Graph, alpha: f64) -> RectMatrix {
    let degrees = g.degrees();
    // powf(d, -1/2) and 1/sqrt(d) differ in the last ulp; route the
    // defining case through sqrt so randic_incidence is reproduced exactly
    let weight = |d: usize| {
        if alpha == -0.5 {
            1.0 / (d as f64).sqrt()
        } else {
            (d as f64).powf(alpha)
        }
    };
    let mut m = RectMatrix::zero(g.n(), g.m());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        m.set(u, j, weight(degrees[u]));
        m.set(v, j, weight(degrees[v]));
    }
    m
}

/// Direct construction of the `m x m` edge Gram matrix `I_RᵀI_R` from its
/// entry formula: diagonal `1/d_u + 1/d_v` for edge `{u, v}`, off-diagonal
/// `1/d_w` when two edges share the vertex `w`, zero otherwise. Every row
/// and column sums to 2.
pub fn edge_gram(g: &Graph) -> SymmetricMatrix {
    let degrees = g.degrees();
    let mut gram = SymmetricMatrix::zero(g.m());
    let mut incident = vec![Vec::new(); g.n()];
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        gram.set_sym(j, j, 1.0 / degrees[u] as f64 + 1.0 / degrees[v] as f64);
        incident[u].push(j);
        incident[v].push(j);
    }
    for (w, ids) in incident.iter().enumerate() {
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                gram.set_sym(i, j, 1.0 / degrees[w] as f64);
            }
        }
    }
    gram
}

/// Full spectrum of a symmetric matrix, sorted non-increasing.
///
/// Contract: for each returned eigenvalue there is a unit vector `v` with
/// `|M v - lambda v| <= tol * max(1, |M|_inf)`, and the eigenvalue sum equals
/// the trace within `n * tol`. Violations and non-convergence are reported
/// as errors, never returned silently.
pub fn sym_eigenvalues(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum, Error> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = m.order();
    let (mut values, vectors) = eigen::jacobi(m)?;

    let bound = tol * m.inf_norm().max(1.0);
    for (k, &lambda) in values.iter().enumerate() {
        let v: Vec<f64> = (0..n).map(|i| vectors[i][k]).collect();
        let mv = m.mul_vec(&v);
        let residual = mv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual > bound {
            return Err(Error::EigenResidual { residual, bound });
        }
    }
    let sum: f64 = values.iter().sum();
    let trace_bound = n as f64 * tol * m.inf_norm().max(1.0);
    if (sum - m.trace()).abs() > trace_bound {
        return Err(Error::EigenResidual {
            residual: (sum - m.trace()).abs(),
            bound: trace_bound,
        });
    }

    values.sort_by(|a, b| b.partial_cmp(a).expect("eigenvalues are finite"));
    Ok(Spectrum::new(values, tol))
}
