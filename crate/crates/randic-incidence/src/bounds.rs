//! Machine-checkable reports for the sharp bounds the Randić incidence
//! energy satisfies, with equality-case detection.
//!
//! Each check evaluates one inequality on one graph and reports both sides,
//! whether the inequality holds, and whether it is attained with equality
//! (within [`EQ_TOL`]). Equality classes are detected structurally, not
//! spectrally, so a tight report also names its witness class.

use crate::energy::randic_incidence_energy;
use crate::graph::{bipartition, is_connected, line_graph, Graph};
use crate::spectra::{adjacency, sym_eigenvalues, DEFAULT_EIGEN_TOL};
use crate::Error;

/// Absolute tolerance for declaring an inequality tight.
pub const EQ_TOL: f64 = 1e-9;

/// The bound checks this module can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheck {
    /// Energy at least `sqrt(n)` for isolated-free graphs; equality only
    /// for the single edge.
    LowerBound,
    /// Energy at most `sqrt(2) + sqrt((n-1)(n-2))`; equality only for the
    /// complete graph.
    UpperBound,
    /// Deleting a nonempty edge set strictly decreases the energy.
    Monotonicity,
    /// Energy at least `sqrt(2) + sqrt((c-1)(c-2))` for clique number `c`.
    CliqueBound,
    /// Single-edge deletion: energy at least
    /// `sqrt(1/d(u) + 1/d(v) + energy(G - e)^2)`; equality only for the
    /// single edge.
    EdgeDeletion,
    /// Bipartite graphs: energy at most `n - 2 + sqrt(2)`; equality exactly
    /// for complete bipartite graphs.
    BipartiteBound,
}

impl BoundCheck {
    pub fn name(&self) -> &'static str {
        match self {
            BoundCheck::LowerBound => "lower-bound",
            BoundCheck::UpperBound => "upper-bound",
            BoundCheck::Monotonicity => "monotonicity",
            BoundCheck::CliqueBound => "clique-bound",
            BoundCheck::EdgeDeletion => "edge-deletion",
            BoundCheck::BipartiteBound => "bipartite-bound",
        }
    }

    pub const ALL: [BoundCheck; 6] = [
        BoundCheck::LowerBound,
        BoundCheck::UpperBound,
        BoundCheck::Monotonicity,
        BoundCheck::CliqueBound,
        BoundCheck::EdgeDeletion,
        BoundCheck::BipartiteBound,
    ];
}

/// Extra data carried by a report to make it reproducible.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    DeletedEdges(Vec<(usize, usize)>),
    Edge {
        u: usize,
        v: usize,
        degree_u: usize,
        degree_v: usize,
    },
    CliqueNumber(usize),
}

/// Result of one bound check on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub check: BoundCheck,
    pub lhs: f64,
    pub rhs: f64,
    /// The inequality holds (strictly for [`BoundCheck::Monotonicity`],
    /// within [`EQ_TOL`] otherwise).
    pub holds: bool,
    /// `|lhs - rhs| <= EQ_TOL`.
    pub tight: bool,
    /// Description of the class of graphs attaining equality.
    pub equality_class: &'static str,
    pub witness: Option<Witness>,
}

impl BoundReport {
    fn lower(check: BoundCheck, lhs: f64, rhs: f64, class: &'static str) -> Self {
        BoundReport {
            check,
            lhs,
            rhs,
            holds: lhs >= rhs - EQ_TOL,
            tight: (lhs - rhs).abs() <= EQ_TOL,
            equality_class: class,
            witness: None,
        }
    }

    fn upper(check: BoundCheck, lhs: f64, rhs: f64, class: &'static str) -> Self {
        BoundReport {
            check,
            lhs,
            rhs,
            holds: lhs <= rhs + EQ_TOL,
            tight: (lhs - rhs).abs() <= EQ_TOL,
            equality_class: class,
            witness: None,
        }
    }

    /// Signed gap `lhs - rhs`.
    pub fn gap(&self) -> f64 {
        self.lhs - self.rhs
    }
}

fn require_isolated_free(check: &'static str, g: &Graph) -> Result<(), Error> {
    if let Some(v) = g.degrees().iter().position(|&d| d == 0) {
        return Err(Error::Precondition {
            check,
            reason: format!("graph has an isolated vertex ({v})"),
        });
    }
    Ok(())
}

/// Energy at least `sqrt(n)`, for graphs without isolated vertices.
/// Tight exactly for the single edge.
pub fn check_lower_bound(g: &Graph) -> Result<BoundReport, Error> {
    require_isolated_free("lower-bound", g)?;
    let lhs = randic_incidence_energy(g)?.value;
    let rhs = (g.n() as f64).sqrt();
    Ok(BoundReport::lower(
        BoundCheck::LowerBound,
        lhs,
        rhs,
        "single edge",
    ))
}

/// Energy at most `sqrt(2) + sqrt((n-1)(n-2))`, for isolated-free graphs on
/// at least two vertices. Tight exactly for complete graphs.
pub fn check_upper_bound(g: &Graph) -> Result<BoundReport, Error> {
    if g.n() < 2 {
        return Err(Error::Precondition {
            check: "upper-bound",
            reason: format!("needs n >= 2, got n = {}", g.n()),
        });
    }
    require_isolated_free("upper-bound", g)?;
    let lhs = randic_incidence_energy(g)?.value;
    let n = g.n() as f64;
    let rhs = 2f64.sqrt() + ((n - 1.0) * (n - 2.0)).sqrt();
    Ok(BoundReport::upper(
        BoundCheck::UpperBound,
        lhs,
        rhs,
        "complete graph",
    ))
}

/// Strict decrease of the energy under deletion of a nonempty edge subset.
pub fn check_monotonicity(g: &Graph, subset: &[(usize, usize)]) -> Result<BoundReport, Error> {
    if subset.is_empty() {
        return Err(Error::Precondition {
            check: "monotonicity",
            reason: "edge subset must be nonempty".into(),
        });
    }
    let smaller = g.delete_edges(subset)?;
    let lhs = randic_incidence_energy(g)?.value;
    let rhs = randic_incidence_energy(&smaller)?.value;
    Ok(BoundReport {
        check: BoundCheck::Monotonicity,
        lhs,
        rhs,
        holds: lhs > rhs,
        tight: (lhs - rhs).abs() <= EQ_TOL,
        equality_class: "none (strict)",
        witness: Some(Witness::DeletedEdges(subset.to_vec())),
    })
}

/// Energy at least `sqrt(2) + sqrt((c-1)(c-2))` where `c` is the exact
/// clique number. Needs at least one edge.
pub fn check_clique_bound(g: &Graph) -> Result<BoundReport, Error> {
    if g.m() == 0 {
        return Err(Error::Precondition {
            check: "clique-bound",
            reason: "graph has no edges".into(),
        });
    }
    let c = crate::graph::clique_number(g)?;
    let lhs = randic_incidence_energy(g)?.value;
    let rhs = 2f64.sqrt() + (((c - 1) * (c - 2)) as f64).sqrt();
    let mut report = BoundReport::lower(
        BoundCheck::CliqueBound,
        lhs,
        rhs,
        "complete graph (c = n)",
    );
    report.witness = Some(Witness::CliqueNumber(c));
    Ok(report)
}

/// Single-edge deletion inequality
/// `energy(G) >= sqrt(1/d(u) + 1/d(v) + energy(G - e)^2)` with the degrees
/// taken in `G`. Requires `G` connected and `e` an edge. Tight exactly for
/// the single edge.
pub fn check_edge_deletion(g: &Graph, e: (usize, usize)) -> Result<BoundReport, Error> {
    if !is_connected(g) {
        return Err(Error::Precondition {
            check: "edge-deletion",
            reason: "graph must be connected".into(),
        });
    }
    let smaller = g.delete_edges(&[e])?;
    let degrees = g.degrees();
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    let lhs = randic_incidence_energy(g)?.value;
    let rest = randic_incidence_energy(&smaller)?.value;
    let rhs = (1.0 / degrees[u] as f64 + 1.0 / degrees[v] as f64 + rest * rest).sqrt();
    let mut report = BoundReport::lower(BoundCheck::EdgeDeletion, lhs, rhs, "single edge");
    report.witness = Some(Witness::Edge {
        u,
        v,
        degree_u: degrees[u],
        degree_v: degrees[v],
    });
    Ok(report)
}

/// Bipartite graphs without isolated vertices: energy at most
/// `n - 2 + sqrt(2)`. Tight exactly for complete bipartite graphs.
pub fn check_bipartite_bound(g: &Graph) -> Result<BoundReport, Error> {
    if bipartition(g).is_none() {
        return Err(Error::Precondition {
            check: "bipartite-bound",
            reason: "graph is not bipartite".into(),
        });
    }
    require_isolated_free("bipartite-bound", g)?;
    let lhs = randic_incidence_energy(g)?.value;
    let rhs = g.n() as f64 - 2.0 + 2f64.sqrt();
    Ok(BoundReport::upper(
        BoundCheck::BipartiteBound,
        lhs,
        rhs,
        "complete bipartite graph",
    ))
}

/// Report for the regular-graph identity relating the energy to the line
/// graph's adjacency spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    /// Energy via the Gram spectrum.
    pub lhs: f64,
    /// `sum over i of sqrt(2/d + lambda_i(Line(G))/d)`.
    pub rhs: f64,
    pub residual: f64,
    /// `residual <= tol` (1e-9).
    pub within_tol: bool,
}

/// For a `d`-regular graph the energy equals
/// `sum_i sqrt(2/d + lambda_i(Line(G))/d)` over the line graph's adjacency
/// eigenvalues; terms with `lambda = -2` contribute zero. Both sides are
/// computed and compared to 1e-9.
pub fn check_regular_line_identity(g: &Graph) -> Result<IdentityReport, Error> {
    let degrees = g.degrees();
    let d = *degrees.first().unwrap_or(&0);
    if d == 0 || degrees.iter().any(|&x| x != d) {
        return Err(Error::Precondition {
            check: "regular-line-identity",
            reason: "graph must be d-regular with d >= 1".into(),
        });
    }
    let lhs = randic_incidence_energy(g)?.value;
    let line = line_graph(g);
    let line_spectrum = sym_eigenvalues(&adjacency(&line), DEFAULT_EIGEN_TOL)?;
    let d = d as f64;
    let mut rhs = 0.0;
    for &lambda in line_spectrum.values() {
        // line-graph eigenvalues are >= -2, with equality exactly where the
        // edge Gram is singular; the shared clamp turns those terms into 0
        rhs += crate::energy::singular_from_gram_eigenvalue(2.0 / d + lambda / d)?;
    }
    let residual = (lhs - rhs).abs();
    Ok(IdentityReport {
        lhs,
        rhs,
        residual,
        within_tol: residual <= 1e-9,
    })
}
