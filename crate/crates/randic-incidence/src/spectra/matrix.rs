//! Dense matrix value types.
//!
//! Symmetric matrices are written through [`SymmetricMatrix::from_upper`],
//! which mirrors the upper triangle so no asymmetric drift can reach the
//! eigensolver. Sizes are desk scale, so everything is a flat `Vec<f64>`.

/// Dense real symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zero(order: usize) -> Self {
        SymmetricMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    /// Builds from a function evaluated on the upper triangle (`i <= j`);
    /// the lower triangle is mirrored, so the result is symmetric exactly.
    pub fn from_upper(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zero(order);
        for i in 0..order {
            for j in i..order {
                let v = f(i, j);
                m.data[i * order + j] = v;
                m.data[j * order + i] = v;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Sets entry `(i, j)` and its mirror.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        assert_eq!(self.order, other.order);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks_exact(self.order.max(1))
            .take(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Debug dump: one row per line, 17 significant digits, space-separated.
    pub fn to_text(&self) -> String {
        rows_to_text(self.order, self.order, |i, j| self.get(i, j))
    }
}

/// Dense real rectangular matrix. For incidence-type matrices the rows are
/// vertices and the columns follow the canonical edge order of the source
/// graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RectMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RectMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    /// `M Mᵀ`, a symmetric `rows x rows` Gram matrix.
    pub fn gram_rows(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_upper(self.rows, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * self.get(j, k)).sum()
        })
    }

    /// `Mᵀ M`, a symmetric `cols x cols` Gram matrix.
    pub fn gram_cols(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_upper(self.cols, |i, j| {
            (0..self.rows).map(|k| self.get(k, i) * self.get(k, j)).sum()
        })
    }

    /// Debug dump: one row per line, 17 significant digits, space-separated.
    pub fn to_text(&self) -> String {
        rows_to_text(self.rows, self.cols, |i, j| self.get(i, j))
    }
}

fn rows_to_text(rows: usize, cols: usize, get: impl Fn(usize, usize) -> f64) -> String {
    let mut out = String::new();
    for i in 0..rows {
        for j in 0..cols {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{:.16e}", get(i, j)));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_upper_is_exactly_symmetric() {
        let m = SymmetricMatrix::from_upper(3, |i, j| (i * 10 + j) as f64);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j).to_bits(), m.get(j, i).to_bits());
            }
        }
        assert_eq!(m.get(2, 1), 12.0);
    }

    #[test]
    fn gram_of_small_matrix() {
        // M = [[1, 2], [0, 1], [1, 0]]
        let mut m = RectMatrix::zero(3, 2);
        m.set(0, 0, 1.0);
        m.set(0, 1, 2.0);
        m.set(1, 1, 1.0);
        m.set(2, 0, 1.0);
        let mmt = m.gram_rows();
        assert_eq!(mmt.get(0, 0), 5.0);
        assert_eq!(mmt.get(0, 1), 2.0);
        assert_eq!(mmt.get(0, 2), 1.0);
        assert_eq!(mmt.get(1, 1), 1.0);
        let mtm = m.gram_cols();
        assert_eq!(mtm.get(0, 0), 2.0);
        assert_eq!(mtm.get(0, 1), 2.0);
        assert_eq!(mtm.get(1, 1), 5.0);
        assert_eq!(mmt.trace(), mtm.trace());
    }

    #[test]
    fn text_dump_has_17_significant_digits() {
        let m = SymmetricMatrix::from_upper(1, |_, _| 0.5);
        assert_eq!(m.to_text(), "5.0000000000000000e-1\n");
    }
}
