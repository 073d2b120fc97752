//! Exhaustive extremal searches over enumerated tree families and batch
//! scanning of graph6 corpora.
//!
//! Energies are computed by parallel workers and merged deterministically:
//! records are keyed by graph6 string and sorted by (energy descending,
//! graph6 ascending), so the output is byte-identical regardless of the
//! worker count.

use crate::bounds::{
    check_bipartite_bound, check_clique_bound, check_edge_deletion, check_lower_bound,
    check_monotonicity, check_upper_bound, BoundCheck, BoundReport,
};
use crate::cli::fmt_sig12;
use crate::energy::randic_incidence_energy;
use crate::graph::{enumerate_trees, parse_graph6, write_graph6, Graph, TREE_ENUMERATION_CAP};
use crate::Error;
use rayon::prelude::*;
use std::ops::RangeInclusive;

/// Records closer than this in energy are considered tied when reporting
/// uniqueness of an extremum.
pub const RANK_TIE_TOL: f64 = 1e-9;

/// One tree in a ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeRecord {
    pub n: usize,
    pub graph6: String,
    pub i_re: f64,
    /// Position in descending-energy order, starting at 1.
    pub rank: usize,
}

/// Summary of the ranking of all trees on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSummary {
    pub n: usize,
    pub count_trees: usize,
    pub max_record: TreeRecord,
    pub min_record: TreeRecord,
    /// The maximum is attained by the star.
    pub max_is_star: bool,
    /// No other tree comes within [`RANK_TIE_TOL`] of the maximum.
    pub max_unique: bool,
    /// Whether the path attains the minimum. Reported as data, never
    /// asserted: the answer is an open empirical question.
    pub path_is_min: bool,
}

/// Ranking of every isomorphism class of trees on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeRanking {
    pub records: Vec<TreeRecord>,
    pub summary: ExtremalSummary,
}

/// Ranks all free trees on `n` vertices by Randić incidence energy,
/// descending. `2 <= n <= 16`.
pub fn rank_trees(n: usize) -> Result<TreeRanking, Error> {
    if !(2..=TREE_ENUMERATION_CAP).contains(&n) {
        return Err(Error::Precondition {
            check: "rank-trees",
            reason: format!("n must be in 2..={TREE_ENUMERATION_CAP}, got {n}"),
        });
    }
    let trees = enumerate_trees(n)?;
    let count_trees = trees.len();

    struct Item {
        graph6: String,
        i_re: f64,
        is_star: bool,
        is_path: bool,
    }
    let mut items = trees
        .par_iter()
        .map(|t| {
            let degrees = t.degrees();
            let max_degree = degrees.iter().copied().max().unwrap_or(0);
            Ok(Item {
                graph6: write_graph6(t)?,
                i_re: randic_incidence_energy(t)?.value,
                is_star: max_degree == n - 1,
                is_path: max_degree <= 2,
            })
        })
        .collect::<Result<Vec<Item>, Error>>()?;

    items.sort_by(|a, b| {
        b.i_re
            .partial_cmp(&a.i_re)
            .expect("energies are finite")
            .then_with(|| a.graph6.cmp(&b.graph6))
    });

    let records: Vec<TreeRecord> = items
        .iter()
        .enumerate()
        .map(|(i, item)| TreeRecord {
            n,
            graph6: item.graph6.clone(),
            i_re: item.i_re,
            rank: i + 1,
        })
        .collect();

    let max_record = records.first().expect("n >= 2 yields a tree").clone();
    let min_record = records.last().unwrap().clone();
    let summary = ExtremalSummary {
        n,
        count_trees,
        max_is_star: items[0].is_star,
        max_unique: items.len() < 2 || items[0].i_re - items[1].i_re > RANK_TIE_TOL,
        path_is_min: items.last().unwrap().is_path,
        max_record,
        min_record,
    };
    Ok(TreeRanking { records, summary })
}

/// CSV rendering of a tree ranking: fixed column order, 12 significant
/// digits, byte-deterministic.
pub fn records_to_csv(records: &[TreeRecord]) -> String {
    let mut out = String::from("rank,graph6,n,i_re\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.rank,
            r.graph6,
            r.n,
            fmt_sig12(r.i_re)
        ));
    }
    out
}

/// Outcome of one bound check in a corpus scan: either a report or the
/// reason the check's preconditions were not met.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Report(BoundReport),
    Skipped { check: BoundCheck, reason: String },
}

/// One successfully scanned corpus line.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub i_re: f64,
    pub checks: Vec<CheckOutcome>,
}

/// One output row per corpus input line.
#[derive(Debug, Clone, PartialEq)]
pub enum ScanRow {
    Graph(Box<ScanRecord>),
    Error { line: usize, message: String },
}

/// Scans a newline-delimited graph6 corpus: computes the energy and runs
/// every bound check on each line. Lines starting with `#` and blank lines
/// are skipped. Invalid lines become error rows rather than aborting the
/// scan; row order follows input order.
pub fn scan_corpus<'a>(lines: impl Iterator<Item = &'a str>) -> Vec<ScanRow> {
    let numbered: Vec<(usize, &str)> = lines
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    numbered
        .par_iter()
        .map(|&(line, text)| scan_one(line, text))
        .collect()
}

fn scan_one(line: usize, text: &str) -> ScanRow {
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return ScanRow::Error {
                line,
                message: e.to_string(),
            }
        }
    };
    let i_re = match randic_incidence_energy(&g) {
        Ok(e) => e.value,
        Err(e) => {
            return ScanRow::Error {
                line,
                message: e.to_string(),
            }
        }
    };
    ScanRow::Graph(Box::new(ScanRecord {
        line,
        graph6: text.to_string(),
        n: g.n(),
        m: g.m(),
        i_re,
        checks: run_all_checks(&g),
    }))
}

/// Runs every bound check on one graph, skipping (with a reason) the ones
/// whose preconditions fail. Monotonicity and edge deletion use the first
/// edge so the output is deterministic.
pub fn run_all_checks(g: &Graph) -> Vec<CheckOutcome> {
    let first_edge = g.edges().first().copied();
    BoundCheck::ALL
        .iter()
        .map(|&check| {
            let result = match check {
                BoundCheck::LowerBound => check_lower_bound(g),
                BoundCheck::UpperBound => check_upper_bound(g),
                BoundCheck::Monotonicity => match first_edge {
                    Some(e) => check_monotonicity(g, &[e]),
                    None => Err(Error::Precondition {
                        check: "monotonicity",
                        reason: "graph has no edges".into(),
                    }),
                },
                BoundCheck::CliqueBound => check_clique_bound(g),
                BoundCheck::EdgeDeletion => match first_edge {
                    Some(e) => check_edge_deletion(g, e),
                    None => Err(Error::Precondition {
                        check: "edge-deletion",
                        reason: "graph has no edges".into(),
                    }),
                },
                BoundCheck::BipartiteBound => check_bipartite_bound(g),
            };
            match result {
                Ok(report) => CheckOutcome::Report(report),
                Err(e) => CheckOutcome::Skipped {
                    check,
                    reason: e.to_string(),
                },
            }
        })
        .collect()
}

/// Report on the minimum-energy tree(s) for one vertex count.
#[derive(Debug, Clone, PartialEq)]
pub struct MinTreeReport {
    pub n: usize,
    pub count_trees: usize,
    /// Every record within [`RANK_TIE_TOL`] of the minimum.
    pub argmin: Vec<TreeRecord>,
    /// The path's record (rank and energy).
    pub path_record: TreeRecord,
    /// Whether the path attains the minimum. Data, not an assertion.
    pub path_is_min: bool,
}

/// For each `n` in the range, reports which tree minimizes the energy and
/// whether the path attains that minimum. No expected answer is hard-coded;
/// the output records the empirical finding.
pub fn explore_min_tree(range: RangeInclusive<usize>) -> Result<Vec<MinTreeReport>, Error> {
    range
        .map(|n| {
            let ranking = rank_trees(n)?;
            let min_value = ranking.summary.min_record.i_re;
            let argmin: Vec<TreeRecord> = ranking
                .records
                .iter()
                .filter(|r| r.i_re - min_value <= RANK_TIE_TOL)
                .cloned()
                .collect();
            let path = gen_path_record(&ranking, n);
            Ok(MinTreeReport {
                n,
                count_trees: ranking.summary.count_trees,
                path_is_min: ranking.summary.path_is_min
                    || path.i_re - min_value <= RANK_TIE_TOL,
                argmin,
                path_record: path,
            })
        })
        .collect()
}

fn gen_path_record(ranking: &TreeRanking, n: usize) -> TreeRecord {
    let path_g6 = write_graph6(&crate::graph::gen_path(n).expect("n >= 2"))
        .expect("path fits short-form graph6");
    ranking
        .records
        .iter()
        .find(|r| r.graph6 == path_g6)
        .expect("enumeration includes the path")
        .clone()
}
