//! Self-verification suite: every identity, closed form, bound, and
//! determinism property the crate promises, run end to end with seeded
//! corpora. `rie verify` prints one line per check and exits nonzero when
//! any check fails.

use crate::energy::randic_incidence_energy;
use crate::extremal::{explore_min_tree, rank_trees, records_to_csv};
use crate::graph::{
    enumerate_trees, gen_complete, gen_complete_bipartite, gen_cycle, gen_path, gen_petersen,
    gen_star, is_complete_bipartite, parse_graph6, write_graph6, Graph,
};
use crate::spectra::{
    edge_gram, normalized_signless_laplacian, randic_incidence, sym_eigenvalues, SymmetricMatrix,
    DEFAULT_EIGEN_TOL,
};
use crate::Error;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

const SQRT2: f64 = std::f64::consts::SQRT_2;

/// Options for one verification run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Seed for the randomized corpora; any seed must pass.
    pub seed: u64,
    /// Tolerance for the closed-form and tightness comparisons.
    pub tolerance: f64,
    /// Test hook: added to every energy the suite computes, simulating a
    /// corrupted solver. Zero in normal runs.
    pub inject_error: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 42,
            tolerance: 1e-9,
            inject_error: 0.0,
        }
    }
}

/// One line of the verification report.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Full verification outcome.
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub lines: Vec<CheckLine>,
    pub passed: bool,
}

/// Runs every check. Failures are collected, not short-circuited.
pub fn run(options: &VerifyOptions) -> VerifyOutcome {
    let checks: Vec<fn(&VerifyOptions) -> CheckLine> = vec![
        check_star_closed_form,
        check_complete_closed_form,
        check_complete_bipartite_closed_form,
        check_path4_spot_value,
        check_bound_fuzz,
        check_monotonicity_fuzz,
        check_edge_deletion_fuzz,
        check_identity_residuals,
        check_regular_line_identities,
        check_tree_enumeration,
        check_eigensolver_accuracy,
        check_graph6_round_trip,
        check_determinism,
        check_min_tree_exploration,
    ];
    let lines: Vec<CheckLine> = checks.iter().map(|c| c(options)).collect();
    let passed = lines.iter().all(|l| l.passed);
    VerifyOutcome { lines, passed }
}

pub(crate) fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph with `n` drawn from `n_range` and i.i.d. edges. With
/// `isolated_free` every isolated vertex gets attached somewhere (and `n`
/// is at least 2).
pub(crate) fn random_graph(
    rng: &mut ChaCha8Rng,
    n_range: RangeInclusive<usize>,
    isolated_free: bool,
) -> Graph {
    let mut n = rng.random_range(n_range);
    if isolated_free {
        n = n.max(2);
    }
    let p: f64 = rng.random_range(0.15..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut g = Graph::from_edge_list(n, edges).unwrap();
    if isolated_free {
        let mut all: Vec<(usize, usize)> = g.edges().to_vec();
        for (v, &degree) in g.degrees().iter().enumerate() {
            if degree == 0 {
                let mut w = rng.random_range(0..n - 1);
                if w >= v {
                    w += 1;
                }
                all.push((v.min(w), v.max(w)));
            }
        }
        all.sort_unstable();
        all.dedup();
        g = Graph::from_edge_list(n, all).unwrap();
    }
    g
}

/// Random connected graph, by rejection.
pub(crate) fn random_connected_graph(
    rng: &mut ChaCha8Rng,
    n_range: RangeInclusive<usize>,
) -> Graph {
    loop {
        let g = random_graph(rng, n_range.clone(), true);
        if crate::graph::is_connected(&g) {
            return g;
        }
    }
}

fn energy_of(g: &Graph, options: &VerifyOptions) -> Result<f64, Error> {
    Ok(randic_incidence_energy(g)?.value + options.inject_error)
}

fn line(name: &'static str, passed: bool, detail: String) -> CheckLine {
    CheckLine {
        name,
        passed,
        detail,
    }
}

fn fail(name: &'static str, detail: String) -> CheckLine {
    line(name, false, detail)
}

fn check_star_closed_form(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "star-closed-form";
    let mut worst = 0.0f64;
    for n in 2..=50 {
        let e = match energy_of(&gen_star(n).unwrap(), options) {
            Ok(e) => e,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let expected = (n as f64) - 2.0 + SQRT2;
        worst = worst.max((e - expected).abs());
    }
    line(
        NAME,
        worst <= options.tolerance,
        format!("n = 2..=50, worst deviation {worst:.3e}"),
    )
}

fn check_complete_closed_form(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "complete-closed-form";
    let mut worst = 0.0f64;
    for n in 2..=50 {
        let e = match energy_of(&gen_complete(n).unwrap(), options) {
            Ok(e) => e,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let expected = SQRT2 + (((n - 1) * (n - 2)) as f64).sqrt();
        worst = worst.max((e - expected).abs());
    }
    line(
        NAME,
        worst <= options.tolerance,
        format!("n = 2..=50, worst deviation {worst:.3e}"),
    )
}

fn check_complete_bipartite_closed_form(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "complete-bipartite-closed-form";
    let mut worst = 0.0f64;
    for x in 1..=20 {
        for y in x..=20 {
            let e = match energy_of(&gen_complete_bipartite(x, y).unwrap(), options) {
                Ok(e) => e,
                Err(err) => return fail(NAME, err.to_string()),
            };
            let expected = (x + y) as f64 - 2.0 + SQRT2;
            worst = worst.max((e - expected).abs());
        }
    }
    line(
        NAME,
        worst <= options.tolerance,
        format!("1 <= x <= y <= 20, worst deviation {worst:.3e}"),
    )
}

fn check_path4_spot_value(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "path4-spot-value";
    let expected = SQRT2 + 1.5f64.sqrt() + 0.5f64.sqrt();
    let e = match energy_of(&gen_path(4).unwrap(), options) {
        Ok(e) => e,
        Err(err) => return fail(NAME, err.to_string()),
    };
    line(
        NAME,
        (e - expected).abs() <= 1e-6,
        format!("got {e:.12}, expected {expected:.12}"),
    )
}

fn check_bound_fuzz(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "bound-fuzz";
    let tol = options.tolerance;
    let mut rng = seeded_rng(options.seed);
    let mut graphs = Vec::new();
    for _ in 0..1000 {
        graphs.push(random_connected_graph(&mut rng, 3..=10));
    }
    for n in 2..=10 {
        graphs.extend(enumerate_trees(n).unwrap());
    }
    let total = graphs.len();
    for g in graphs {
        let n = g.n() as f64;
        let e = match energy_of(&g, options) {
            Ok(e) => e,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let lower = n.sqrt();
        let upper = SQRT2 + ((n - 1.0) * (n - 2.0)).sqrt();
        if e < lower - tol || e > upper + tol {
            return fail(NAME, format!("bounds violated: n = {n}, energy {e}"));
        }
        let is_single_edge = g.n() == 2 && g.m() == 1;
        if ((e - lower).abs() <= tol) != is_single_edge {
            return fail(NAME, format!("lower tightness mismatch on n = {n}"));
        }
        let is_complete = g.m() == g.n() * (g.n() - 1) / 2;
        if ((e - upper).abs() <= tol) != is_complete {
            return fail(NAME, format!("upper tightness mismatch on n = {n}"));
        }
        if crate::graph::bipartition(&g).is_some() {
            let bip = n - 2.0 + SQRT2;
            if e > bip + tol {
                return fail(NAME, format!("bipartite bound violated on n = {n}"));
            }
            if ((e - bip).abs() <= tol) != is_complete_bipartite(&g) {
                return fail(NAME, format!("bipartite tightness mismatch on n = {n}"));
            }
        }
    }
    line(
        NAME,
        true,
        format!("{total} graphs (1000 random connected + all trees n <= 10)"),
    )
}

fn check_monotonicity_fuzz(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "monotonicity-fuzz";
    let mut rng = seeded_rng(options.seed.wrapping_add(1));
    let mut min_gap = f64::INFINITY;
    for _ in 0..500 {
        let g = random_graph(&mut rng, 2..=10, true);
        if g.m() == 0 {
            continue;
        }
        let mut subset: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.4))
            .collect();
        if subset.is_empty() {
            subset.push(g.edges()[rng.random_range(0..g.m())]);
        }
        let smaller = g.delete_edges(&subset).unwrap();
        // a uniform shift cancels in the difference, so the gap uses one
        // injected and one raw energy
        let gap = match (energy_of(&g, options), randic_incidence_energy(&smaller)) {
            (Ok(a), Ok(b)) => a - b.value,
            (Err(err), _) | (_, Err(err)) => return fail(NAME, err.to_string()),
        };
        min_gap = min_gap.min(gap);
        if gap <= 1e-12 {
            return fail(
                NAME,
                format!(
                    "non-positive gap {gap:.3e} deleting {} edges from {}",
                    subset.len(),
                    write_graph6(&g).unwrap()
                ),
            );
        }
    }
    line(NAME, true, format!("500 pairs, smallest gap {min_gap:.3e}"))
}

fn check_edge_deletion_fuzz(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "edge-deletion-fuzz";
    let tol = options.tolerance;
    let mut rng = seeded_rng(options.seed.wrapping_add(2));
    let mut tight_seen = 0usize;
    for _ in 0..500 {
        let g = random_connected_graph(&mut rng, 2..=10);
        let e = g.edges()[rng.random_range(0..g.m())];
        let degrees = g.degrees();
        let smaller = g.delete_edges(&[e]).unwrap();
        let (lhs, rest) = match (energy_of(&g, options), energy_of(&smaller, options)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(err), _) | (_, Err(err)) => return fail(NAME, err.to_string()),
        };
        let rhs = (1.0 / degrees[e.0] as f64 + 1.0 / degrees[e.1] as f64 + rest * rest).sqrt();
        if lhs < rhs - tol {
            return fail(
                NAME,
                format!("inequality violated on {}", write_graph6(&g).unwrap()),
            );
        }
        let is_single_edge = g.n() == 2 && g.m() == 1;
        let tight = (lhs - rhs).abs() <= tol;
        if tight != is_single_edge {
            return fail(
                NAME,
                format!("tightness mismatch on {}", write_graph6(&g).unwrap()),
            );
        }
        if tight {
            tight_seen += 1;
        }
    }
    line(
        NAME,
        true,
        format!("500 pairs, equality cases seen: {tight_seen}"),
    )
}

fn check_identity_residuals(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "identity-residuals";
    let mut rng = seeded_rng(options.seed.wrapping_add(3));
    let mut worst_block = 0.0f64;
    for _ in 0..200 {
        let g = random_graph(&mut rng, 1..=12, false);
        let gram = randic_incidence(&g).gram_rows();
        let part = g.non_isolated_partition();

        // block identity: the Gram restricted to non-isolated vertices is
        // the normalized signless Laplacian of the induced subgraph; all
        // rows and columns of isolated vertices vanish
        let sub = g.induced(&part.non_isolated).unwrap();
        let qn = normalized_signless_laplacian(&sub).unwrap();
        let mut expected = SymmetricMatrix::zero(g.n());
        for (bi, &u) in part.non_isolated.iter().enumerate() {
            for (bj, &v) in part.non_isolated.iter().enumerate().skip(bi) {
                expected.set_sym(u, v, qn.get(bi, bj));
            }
        }
        let diff = gram.max_abs_diff(&expected);
        worst_block = worst_block.max(diff);
        if diff > 1e-12 {
            return fail(NAME, format!("block identity residual {diff:.3e}"));
        }
        if (gram.trace() - part.r() as f64).abs() > 1e-10 {
            return fail(NAME, format!("Gram trace vs r mismatch on n = {}", g.n()));
        }

        if g.m() >= 1 {
            let eg = edge_gram(&g);
            for i in 0..g.m() {
                let row: f64 = (0..g.m()).map(|j| eg.get(i, j)).sum();
                if (row - 2.0).abs() > 1e-12 {
                    return fail(NAME, format!("edge-Gram row sum {row}"));
                }
            }
            if part.isolated.is_empty() && (eg.trace() - g.n() as f64).abs() > 1e-10 {
                return fail(NAME, "edge-Gram trace vs n mismatch".into());
            }
        }
    }
    line(
        NAME,
        true,
        format!("200 graphs, worst block residual {worst_block:.3e}"),
    )
}

fn check_regular_line_identities(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "regular-line-identity";
    let mut graphs = vec![gen_petersen()];
    for n in 3..=12 {
        graphs.push(gen_cycle(n).unwrap());
    }
    for n in 3..=8 {
        graphs.push(gen_complete(n).unwrap());
    }
    let mut worst = 0.0f64;
    for g in graphs {
        let report = match crate::bounds::check_regular_line_identity(&g) {
            Ok(r) => r,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let residual = (report.lhs + options.inject_error - report.rhs).abs();
        worst = worst.max(residual);
        if residual > 1e-9 {
            return fail(
                NAME,
                format!("residual {residual:.3e} on {}", write_graph6(&g).unwrap()),
            );
        }
    }
    line(
        NAME,
        true,
        format!("cycles 3..=12, complete 3..=8, Petersen; worst residual {worst:.3e}"),
    )
}

fn check_tree_enumeration(_options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "tree-enumeration";
    const COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (i, &want) in COUNTS.iter().enumerate() {
        let n = i + 1;
        let got = match enumerate_trees(n) {
            Ok(t) => t.len(),
            Err(err) => return fail(NAME, err.to_string()),
        };
        if got != want {
            return fail(NAME, format!("count mismatch at n = {n}: {got} vs {want}"));
        }
    }
    for n in 3..=10 {
        let ranking = match rank_trees(n) {
            Ok(r) => r,
            Err(err) => return fail(NAME, err.to_string()),
        };
        if !ranking.summary.max_is_star {
            return fail(NAME, format!("maximum at n = {n} is not the star"));
        }
        if n >= 4 && !ranking.summary.max_unique {
            return fail(NAME, format!("maximum at n = {n} is not unique"));
        }
    }
    line(
        NAME,
        true,
        "counts 1..=10 match; star is the strict unique maximum for n = 4..=10".into(),
    )
}

fn check_eigensolver_accuracy(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "eigensolver-accuracy";
    let mut worst = 0.0f64;
    for n in 3..=12 {
        let q = match normalized_signless_laplacian(&gen_complete(n).unwrap()) {
            Ok(q) => q,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let spectrum = match sym_eigenvalues(&q, DEFAULT_EIGEN_TOL) {
            Ok(s) => s,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let values = spectrum.values();
        let bulk = (n as f64 - 2.0) / (n as f64 - 1.0);
        worst = worst.max((values[0] + options.inject_error - 2.0).abs());
        for &v in &values[1..] {
            worst = worst.max((v - bulk).abs());
        }
    }
    line(
        NAME,
        worst <= 1e-10,
        format!("complete graphs n = 3..=12, worst deviation {worst:.3e}"),
    )
}

fn check_graph6_round_trip(options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "graph6-round-trip";
    let k4 = gen_complete(4).unwrap();
    let p4 = gen_path(4).unwrap();
    if write_graph6(&k4) != Ok("C~".into()) || parse_graph6("C~").as_ref() != Ok(&k4) {
        return fail(NAME, "complete graph on 4 vertices must encode as C~".into());
    }
    if write_graph6(&p4) != Ok("Ch".into()) || parse_graph6("Ch").as_ref() != Ok(&p4) {
        return fail(NAME, "path on 4 vertices must encode as Ch".into());
    }
    let mut rng = seeded_rng(options.seed.wrapping_add(4));
    for i in 0..500 {
        let g = random_graph(&mut rng, 1..=30, false);
        let s = match write_graph6(&g) {
            Ok(s) => s,
            Err(err) => return fail(NAME, err.to_string()),
        };
        let back = match parse_graph6(&s) {
            Ok(b) => b,
            Err(err) => return fail(NAME, format!("rejects own output {s:?}: {err}")),
        };
        if back != g || write_graph6(&back) != Ok(s.clone()) {
            return fail(NAME, format!("round trip failed at sample {i} ({s:?})"));
        }
    }
    line(NAME, true, "500-string corpus plus C~ and Ch anchors".into())
}

fn check_determinism(_options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "determinism";
    let render = |threads: usize| -> Result<String, Error> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Precondition {
                check: "determinism",
                reason: e.to_string(),
            })?;
        pool.install(|| {
            let mut out = String::new();
            for n in 2..=10 {
                out.push_str(&records_to_csv(&rank_trees(n)?.records));
            }
            Ok(out)
        })
    };
    match (render(1), render(4)) {
        (Ok(a), Ok(b)) if a == b => line(
            NAME,
            true,
            format!("rankings for n = 2..=10 byte-identical across 1 and 4 workers ({} bytes)", a.len()),
        ),
        (Ok(_), Ok(_)) => fail(NAME, "worker count changed the output".into()),
        (Err(e), _) | (_, Err(e)) => fail(NAME, e.to_string()),
    }
}

fn check_min_tree_exploration(_options: &VerifyOptions) -> CheckLine {
    const NAME: &str = "min-tree-exploration";
    match explore_min_tree(2..=10) {
        Ok(reports) => {
            let flags: Vec<String> = reports
                .iter()
                .map(|r| format!("n={}:{}", r.n, if r.path_is_min { "path" } else { r.argmin[0].graph6.as_str() }))
                .collect();
            // recorded, never asserted: whether the path minimizes is an
            // open empirical question
            line(NAME, true, format!("argmin per n: {}", flags.join(" ")))
        }
        Err(err) => fail(NAME, err.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The two corpus checks built on inequalities that fail on real graphs
    /// (see the counterexamples pinned in the bounds tests). Their outcome
    /// depends on whether the seeded corpus happens to contain a
    /// counterexample; every other check must always pass.
    const SAMPLE_DEPENDENT: [&str; 2] = ["monotonicity-fuzz", "edge-deletion-fuzz"];

    #[test]
    fn sound_checks_pass_for_default_seed() {
        let outcome = run(&VerifyOptions::default());
        for l in &outcome.lines {
            if !SAMPLE_DEPENDENT.contains(&l.name) {
                assert!(l.passed, "{} failed: {}", l.name, l.detail);
            }
        }
    }

    #[test]
    fn sound_checks_pass_for_other_seeds() {
        for seed in [7, 8] {
            let outcome = run(&VerifyOptions {
                seed,
                ..VerifyOptions::default()
            });
            for l in &outcome.lines {
                if !SAMPLE_DEPENDENT.contains(&l.name) {
                    assert!(l.passed, "seed {seed}: {} failed: {}", l.name, l.detail);
                }
            }
        }
    }

    #[test]
    fn injected_error_is_caught() {
        let outcome = run(&VerifyOptions {
            inject_error: 1e-3,
            ..VerifyOptions::default()
        });
        assert!(!outcome.passed);
        // corruption must surface in the always-sound closed-form checks,
        // not only in the sample-dependent ones
        let failed: Vec<&str> = outcome
            .lines
            .iter()
            .filter(|l| !l.passed)
            .map(|l| l.name)
            .collect();
        assert!(failed.contains(&"star-closed-form"), "failed: {failed:?}");
        assert!(failed.contains(&"complete-closed-form"));
    }
}
