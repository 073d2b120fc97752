//! Singular-value energies of incidence-type matrices.
//!
//! The energy of an `n x m` matrix is the sum of its singular values, i.e.
//! the square roots of the eigenvalues of either Gram product. The sum is
//! taken over `n` terms, zero-padding when `m < n`; padding never changes
//! the value. Decompositions run on whichever Gram side is smaller, and a
//! test pins that both sides agree.

use crate::graph::Graph;
use crate::spectra::{
    general_randic_incidence, incidence, randic_incidence, sym_eigenvalues, RectMatrix, Spectrum,
    DEFAULT_EIGEN_TOL,
};
use crate::Error;

/// Eigenvalues of a Gram matrix in `[-SINGULAR_CLAMP, 0)` are treated as
/// roundoff and clamped to zero; anything more negative is a solver fault.
pub const SINGULAR_CLAMP: f64 = 1e-9;

/// Which energy a result describes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyVariant {
    RandicIncidence,
    Incidence,
    GeneralAlpha(f64),
    RandicIndex,
}

impl EnergyVariant {
    pub fn name(&self) -> &'static str {
        match self {
            EnergyVariant::RandicIncidence => "randic_incidence",
            EnergyVariant::Incidence => "incidence",
            EnergyVariant::GeneralAlpha(_) => "general_alpha",
            EnergyVariant::RandicIndex => "randic_index",
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match self {
            EnergyVariant::GeneralAlpha(a) => Some(*a),
            _ => None,
        }
    }
}

/// An energy value together with the singular values that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyResult {
    pub variant: EnergyVariant,
    pub n: usize,
    pub m: usize,
    /// Sum of `spectrum` entries.
    pub value: f64,
    /// Singular values, non-increasing, zero-padded to `n`.
    pub spectrum: Spectrum,
    /// Set when `variant` is `GeneralAlpha(0)`: the weight degenerates to
    /// the plain incidence matrix.
    pub degenerate_alpha: bool,
}

/// Singular values (non-increasing, zero-padded to `n`) of the Randić
/// incidence matrix.
pub fn randic_incidence_singular_values(g: &Graph) -> Result<Spectrum, Error> {
    singular_values(&randic_incidence(g))
}

/// Randić incidence energy: the sum of the singular values of the
/// `d^{-1/2}`-weighted incidence matrix.
pub fn randic_incidence_energy(g: &Graph) -> Result<EnergyResult, Error> {
    let spectrum = randic_incidence_singular_values(g)?;
    Ok(EnergyResult {
        variant: EnergyVariant::RandicIncidence,
        n: g.n(),
        m: g.m(),
        value: spectrum.sum(),
        spectrum,
        degenerate_alpha: false,
    })
}

/// Incidence energy: the sum of the square roots of the signless Laplacian
/// eigenvalues.
pub fn incidence_energy(g: &Graph) -> Result<EnergyResult, Error> {
    let spectrum = singular_values(&incidence(g))?;
    Ok(EnergyResult {
        variant: EnergyVariant::Incidence,
        n: g.n(),
        m: g.m(),
        value: spectrum.sum(),
        spectrum,
        degenerate_alpha: false,
    })
}

/// Energy of the `d^alpha`-weighted incidence matrix. `alpha = -1/2` equals
/// [`randic_incidence_energy`]; `alpha = 0` degenerates to the plain
/// incidence energy and is flagged as such.
pub fn general_randic_incidence_energy(g: &Graph, alpha: f64) -> Result<EnergyResult, Error> {
    let spectrum = singular_values(&general_randic_incidence(g, alpha))?;
    Ok(EnergyResult {
        variant: EnergyVariant::GeneralAlpha(alpha),
        n: g.n(),
        m: g.m(),
        value: spectrum.sum(),
        spectrum,
        degenerate_alpha: alpha == 0.0,
    })
}

/// The Randić index: the sum of `(d_u d_v)^{-1/2}` over all edges.
pub fn randic_index(g: &Graph) -> f64 {
    let degrees = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((degrees[u] * degrees[v]) as f64).sqrt())
        .sum()
}

/// Singular values of a vertices-by-edges matrix, zero-padded to the row
/// count. Decomposes whichever Gram product is smaller; the nonzero spectra
/// of the two sides coincide.
fn singular_values(mat: &RectMatrix) -> Result<Spectrum, Error> {
    let gram = if mat.rows() <= mat.cols() {
        mat.gram_rows()
    } else {
        mat.gram_cols()
    };
    let eigenvalues = sym_eigenvalues(&gram, DEFAULT_EIGEN_TOL)?;
    let mut values = Vec::with_capacity(eigenvalues.len());
    for &lambda in eigenvalues.values() {
        values.push(singular_from_gram_eigenvalue(lambda)?);
    }
    values.sort_by(|a, b| b.partial_cmp(a).expect("singular values are finite"));
    Ok(Spectrum::new(values, eigenvalues.residual_tol()).zero_padded(mat.rows()))
}

/// Maps one Gram eigenvalue to a singular value. Eigenvalues within
/// [`SINGULAR_CLAMP`] of zero are structural zeros polluted by roundoff and
/// map to exactly zero: a solver error of 1e-15 would otherwise surface as
/// a sqrt-scale 3e-8 error in the energy. Anything below `-SINGULAR_CLAMP`
/// is a solver fault. True nonzero Gram eigenvalues of desk-scale graphs
/// sit far above the clamp, so the floor is lossless.
pub fn singular_from_gram_eigenvalue(lambda: f64) -> Result<f64, Error> {
    if lambda < -SINGULAR_CLAMP {
        return Err(Error::NegativeEigenvalue {
            value: lambda,
            clamp: SINGULAR_CLAMP,
        });
    }
    if lambda <= SINGULAR_CLAMP {
        return Ok(0.0);
    }
    Ok(lambda.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        gen_complete, gen_complete_bipartite, gen_cycle, gen_path, gen_star, Graph,
    };
    use crate::spectra::{normalized_signless_laplacian, randic_incidence};
    use crate::test_support::{assert_close, moment_check, random_graph, seeded_rng};

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn k2_singular_values() {
        let sv = randic_incidence_singular_values(&gen_complete(2).unwrap()).unwrap();
        assert_eq!(sv.len(), 2);
        assert_close(sv.values()[0], SQRT2, 1e-12);
        assert_close(sv.values()[1], 0.0, 1e-12);
    }

    #[test]
    fn p4_singular_values_frozen_by_moment_oracle() {
        let p4 = gen_path(4).unwrap();
        // the vertex Gram of P4 has spectrum {2, 3/2, 1/2, 0}
        let gram = randic_incidence(&p4).gram_rows();
        moment_check(&gram, &[2.0, 1.5, 0.5, 0.0], 1e-9);
        let sv = randic_incidence_singular_values(&p4).unwrap();
        let expected = [2f64.sqrt(), 1.5f64.sqrt(), 0.5f64.sqrt(), 0.0];
        for (got, want) in sv.values().iter().zip(expected) {
            assert_close(*got, want, 1e-10);
        }
    }

    #[test]
    fn star_energy_closed_form() {
        for n in 2..=12 {
            let e = randic_incidence_energy(&gen_star(n).unwrap()).unwrap();
            assert_close(e.value, (n - 2) as f64 + SQRT2, 1e-10);
            // singular values: sqrt(2), 1 x(n-2), 0
            assert_close(e.spectrum.values()[0], SQRT2, 1e-10);
        }
    }

    #[test]
    fn complete_graph_energy_closed_form() {
        for n in 2..=10 {
            let e = randic_incidence_energy(&gen_complete(n).unwrap()).unwrap();
            let expected = SQRT2 + (((n - 1) * (n - 2)) as f64).sqrt();
            assert_close(e.value, expected, 1e-10);
        }
    }

    #[test]
    fn four_cycle_energy() {
        let e = randic_incidence_energy(&gen_cycle(4).unwrap()).unwrap();
        assert_close(e.value, 2.0 + SQRT2, 1e-10);
        let k22 = gen_complete_bipartite(2, 2).unwrap();
        assert_close(
            randic_incidence_energy(&k22).unwrap().value,
            e.value,
            1e-10,
        );
    }

    #[test]
    fn sigma_squares_sum_to_non_isolated_count() {
        let mut rng = seeded_rng(21);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 1..=12, false);
            let sv = randic_incidence_singular_values(&g).unwrap();
            let sum_sq: f64 = sv.values().iter().map(|s| s * s).sum();
            let r = g.non_isolated_partition().r();
            assert_close(sum_sq, r as f64, g.n() as f64 * 1e-10);
            if g.m() >= 1 {
                assert_close(sv.values()[0], SQRT2, 1e-9);
            }
        }
    }

    #[test]
    fn energy_is_additive_over_components() {
        let mut rng = seeded_rng(22);
        for _ in 0..30 {
            let a = random_graph(&mut rng, 2..=8, true);
            let b = random_graph(&mut rng, 2..=8, true);
            let mut edges: Vec<_> = a.edges().to_vec();
            edges.extend(b.edges().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
            let disjoint = Graph::from_edge_list(a.n() + b.n(), edges).unwrap();
            let ea = randic_incidence_energy(&a).unwrap().value;
            let eb = randic_incidence_energy(&b).unwrap().value;
            let e = randic_incidence_energy(&disjoint).unwrap().value;
            assert_close(e, ea + eb, 1e-9);
        }
    }

    #[test]
    fn connected_bipartite_has_zero_smallest_singular_value() {
        let mut rng = seeded_rng(23);
        let mut checked = 0;
        while checked < 20 {
            let g = random_graph(&mut rng, 2..=10, true);
            if !crate::graph::is_connected(&g) || crate::graph::bipartition(&g).is_none() {
                continue;
            }
            let sv = randic_incidence_singular_values(&g).unwrap();
            assert_close(*sv.values().last().unwrap(), 0.0, 1e-9);
            checked += 1;
        }
    }

    #[test]
    fn gram_side_consistency() {
        // value computed from the n x n Gram equals the value from the
        // m x m edge Gram, whichever side the dispatch picks
        let mut rng = seeded_rng(24);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 2..=10, false);
            let mat = randic_incidence(&g);
            let energy_of = |gram: &crate::spectra::SymmetricMatrix| {
                sym_eigenvalues(gram, DEFAULT_EIGEN_TOL)
                    .unwrap()
                    .values()
                    .iter()
                    .map(|&l| singular_from_gram_eigenvalue(l).unwrap())
                    .sum::<f64>()
            };
            let via_rows = energy_of(&mat.gram_rows());
            let via_cols = energy_of(&mat.gram_cols());
            assert_close(via_rows, via_cols, 1e-9);
        }
    }

    #[test]
    fn energy_matches_normalized_spectrum_path() {
        // independent route: sum of sqrt(eigenvalues) of the normalized
        // signless Laplacian of the non-isolated induced subgraph
        let mut rng = seeded_rng(25);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 1..=12, false);
            let direct = randic_incidence_energy(&g).unwrap().value;
            let part = g.non_isolated_partition();
            let via_parts = if part.r() == 0 {
                0.0
            } else {
                let sub = g.induced(&part.non_isolated).unwrap();
                let qn = normalized_signless_laplacian(&sub).unwrap();
                sym_eigenvalues(&qn, DEFAULT_EIGEN_TOL)
                    .unwrap()
                    .values()
                    .iter()
                    .map(|&l| singular_from_gram_eigenvalue(l).unwrap())
                    .sum()
            };
            assert_close(direct, via_parts, 1e-9);
        }
    }

    #[test]
    fn incidence_energy_values() {
        let e = incidence_energy(&gen_complete(2).unwrap()).unwrap();
        assert_close(e.value, SQRT2, 1e-12);

        // Q(S4) spectrum {4, 1, 1, 0} -> IE = 2 + 1 + 1
        let s4 = gen_star(4).unwrap();
        moment_check(
            &crate::spectra::signless_laplacian(&s4),
            &[4.0, 1.0, 1.0, 0.0],
            1e-9,
        );
        assert_close(incidence_energy(&s4).unwrap().value, 4.0, 1e-10);

        // IE >= sqrt(2m)
        let mut rng = seeded_rng(26);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 1..=12, false);
            let ie = incidence_energy(&g).unwrap().value;
            assert!(ie + 1e-12 >= (2.0 * g.m() as f64).sqrt());
        }
    }

    #[test]
    fn general_alpha_special_values() {
        let mut rng = seeded_rng(27);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 1..=10, false);
            let general = general_randic_incidence_energy(&g, -0.5).unwrap();
            let plain = randic_incidence_energy(&g).unwrap();
            assert_close(general.value, plain.value, 1e-10);
        }

        // K3 is 2-regular: energy at alpha = 1 is 2 * IE(K3) = 2 * 4
        let k3 = gen_complete(3).unwrap();
        moment_check(
            &crate::spectra::signless_laplacian(&k3),
            &[4.0, 1.0, 1.0],
            1e-9,
        );
        let e = general_randic_incidence_energy(&k3, 1.0).unwrap();
        assert_close(e.value, 8.0, 1e-9);

        // degrees 1: any alpha leaves the matrix unchanged
        let k2 = gen_complete(2).unwrap();
        let e = general_randic_incidence_energy(&k2, 7.0).unwrap();
        assert_close(e.value, SQRT2, 1e-12);
        assert!(!e.degenerate_alpha);

        let e0 = general_randic_incidence_energy(&k3, 0.0).unwrap();
        assert!(e0.degenerate_alpha);
        assert_close(e0.value, incidence_energy(&k3).unwrap().value, 1e-10);
    }

    #[test]
    fn general_alpha_regular_scaling_law() {
        // d-regular: energy(alpha) = d^(alpha + 1/2) * energy(-1/2)... i.e.
        // d^alpha * IE(G)
        let mut cases = vec![gen_cycle(6).unwrap(), gen_complete(5).unwrap()];
        cases.push(crate::graph::gen_petersen());
        for g in cases {
            let d = g.degrees()[0] as f64;
            for alpha in [-1.0, -0.5, 0.3, 1.0, 2.0] {
                let e = general_randic_incidence_energy(&g, alpha).unwrap();
                let ie = incidence_energy(&g).unwrap();
                assert_close(e.value, d.powf(alpha) * ie.value, 1e-8);
            }
        }
    }

    #[test]
    fn randic_index_values() {
        assert_close(randic_index(&gen_complete(2).unwrap()), 1.0, 1e-15);
        for n in 2..=8 {
            assert_close(
                randic_index(&gen_complete(n).unwrap()),
                n as f64 / 2.0,
                1e-12,
            );
        }
        assert_close(
            randic_index(&gen_path(4).unwrap()),
            0.5 + SQRT2,
            1e-12,
        );
        assert_eq!(randic_index(&Graph::from_edge_list(3, []).unwrap()), 0.0);
    }

    #[test]
    fn energy_result_value_matches_spectrum_sum() {
        let mut rng = seeded_rng(28);
        for _ in 0..30 {
            let g = random_graph(&mut rng, 1..=10, false);
            let e = randic_incidence_energy(&g).unwrap();
            assert_eq!(e.spectrum.len(), g.n());
            assert_close(e.value, e.spectrum.sum(), g.n() as f64 * 1e-12);
            assert!(e.spectrum.values().iter().all(|&s| s >= 0.0));
        }
    }

    #[test]
    fn empty_graphs_have_zero_energy() {
        let empty0 = Graph::from_edge_list(0, []).unwrap();
        assert_eq!(randic_incidence_energy(&empty0).unwrap().value, 0.0);
        let empty3 = Graph::from_edge_list(3, []).unwrap();
        let e = randic_incidence_energy(&empty3).unwrap();
        assert_eq!(e.value, 0.0);
        assert_eq!(e.spectrum.len(), 3);
    }
}
