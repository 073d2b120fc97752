//! Building blocks of the `rie` command line: input resolution, rendering,
//! and the command implementations.
//!
//! Commands return fully rendered output strings; nothing is printed until
//! a command succeeds, so failures never leave partial tables behind. All
//! numeric output carries 12 significant digits and is byte-deterministic
//! for a fixed (input, seed, tolerance).

use crate::bounds::check_regular_line_identity;
use crate::energy::{
    general_randic_incidence_energy, incidence_energy, randic_incidence_energy, randic_index,
    EnergyResult, EnergyVariant,
};
use crate::extremal::{
    explore_min_tree, rank_trees, records_to_csv, scan_corpus, CheckOutcome, ScanRow,
};
use crate::graph::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_path, gen_star, parse_edge_list,
    parse_graph6, write_graph6, Graph,
};
use crate::verify::{self, VerifyOptions};
use crate::Error;
use serde_json::{json, Value};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

/// Exit codes used by the binary.
pub mod exit_code {
    pub const OK: i32 = 0;
    pub const INPUT_ERROR: i32 = 2;
    pub const NUMERICAL_ERROR: i32 = 3;
    pub const VERIFY_FAILED: i32 = 4;
}

/// Maps an error to the binary's exit code convention.
pub fn exit_code_for(e: &Error) -> i32 {
    if e.is_input_error() {
        exit_code::INPUT_ERROR
    } else {
        exit_code::NUMERICAL_ERROR
    }
}

/// Output rendering selected with `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?} (table, json, csv)")),
        }
    }
}

/// Options shared by the commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub tolerance: f64,
    pub format: OutputFormat,
    /// Degree exponent for the generalized energy; forwarded only to
    /// energy computations.
    pub alpha: Option<f64>,
    /// Seed for the randomized corpora of `verify`.
    pub seed: Option<u64>,
    /// Test hook: shifts every energy computed by the verification suite,
    /// as a corrupted solver would. Hidden from normal use.
    pub inject_error: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerance: 1e-9,
            format: OutputFormat::Table,
            alpha: None,
            seed: None,
            inject_error: None,
        }
    }
}

/// Formats with exactly 12 significant digits, in fixed notation for
/// moderate magnitudes and scientific notation otherwise.
pub fn fmt_sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.00000000000".into();
    }
    let mut exp = x.abs().log10().floor() as i32;
    // rounding can bump the magnitude (0.9999... prints as 1.000...); the
    // second pass reformats at the post-rounding exponent
    for _ in 0..2 {
        if !(-4..12).contains(&exp) {
            return format!("{x:.11e}");
        }
        let decimals = (11 - exp).max(0) as usize;
        let formatted = format!("{x:.decimals$}");
        let rounded: f64 = formatted.parse().expect("fixed notation parses");
        let new_exp = rounded.abs().log10().floor() as i32;
        if rounded == 0.0 || new_exp == exp {
            return formatted;
        }
        exp = new_exp;
    }
    format!("{x:.11e}")
}

/// JSON number rounded to 12 significant digits, so JSON output matches the
/// other formats byte for byte across runs.
fn json_num(x: f64) -> Value {
    Value::from(fmt_sig12(x).parse::<f64>().expect("fmt_sig12 emits valid floats"))
}

/// How a graph argument was understood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    /// Family spec like `K5`, `S7`, `P4`, `C6`, or `K3,4` (case-insensitive).
    Generator(String),
    /// Path to an edge-list file (`n m` header, then `u v` lines).
    File(PathBuf),
    /// Literal graph6 string.
    Graph6(String),
}

/// Resolves a positional graph argument: generator specs win, then paths to
/// existing files, then graph6 text. The three classes cannot collide:
/// generator specs contain digits, which never occur in graph6.
pub fn resolve_graph_argument(arg: &str) -> GraphInput {
    if parse_generator_spec(arg).is_some() {
        GraphInput::Generator(arg.to_string())
    } else if Path::new(arg).is_file() {
        GraphInput::File(PathBuf::from(arg))
    } else {
        GraphInput::Graph6(arg.to_string())
    }
}

/// Parses the generator grammar: a family letter plus size(s), with a comma
/// for the bipartite sizes. Returns `None` when the text is not a generator
/// spec at all, `Some(Err)` when it is one with a bad size.
pub fn parse_generator_spec(spec: &str) -> Option<Result<Graph, Error>> {
    let mut chars = spec.chars();
    let family = chars.next()?.to_ascii_uppercase();
    let rest = chars.as_str();
    if rest.is_empty() {
        return None;
    }
    let build = |r: Result<Graph, crate::GraphError>| Some(r.map_err(Error::from));
    if family == 'K' {
        if let Some((x, y)) = rest.split_once(',') {
            let (x, y) = (x.parse().ok()?, y.parse().ok()?);
            return build(gen_complete_bipartite(x, y));
        }
    }
    let n: usize = rest.parse().ok()?;
    match family {
        'K' => build(gen_complete(n)),
        'S' => build(gen_star(n)),
        'P' => build(gen_path(n)),
        'C' => build(gen_cycle(n)),
        _ => None,
    }
}

/// Loads a resolved graph input, returning the graph and a display label.
pub fn load_graph(input: &GraphInput) -> Result<(Graph, String), Error> {
    match input {
        GraphInput::Generator(spec) => {
            let g = parse_generator_spec(spec).expect("resolved as generator")?;
            Ok((g, spec.clone()))
        }
        GraphInput::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition {
                check: "input",
                reason: format!("cannot read {}: {e}", path.display()),
            })?;
            let g = parse_edge_list(&text)?;
            Ok((g, path.display().to_string()))
        }
        GraphInput::Graph6(text) => {
            let g = parse_graph6(text)?;
            Ok((g, text.clone()))
        }
    }
}

fn energy_records(g: &Graph, alpha: Option<f64>) -> Result<Vec<EnergyResult>, Error> {
    let mut records = vec![randic_incidence_energy(g)?, incidence_energy(g)?];
    if let Some(a) = alpha {
        records.push(general_randic_incidence_energy(g, a)?);
    }
    Ok(records)
}

fn energy_record_json(rec: &EnergyResult) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("variant".into(), rec.variant.name().into());
    if let Some(a) = rec.variant.alpha() {
        obj.insert("alpha".into(), json_num(a));
    }
    obj.insert("n".into(), rec.n.into());
    obj.insert("m".into(), rec.m.into());
    obj.insert("value".into(), json_num(rec.value));
    obj.insert(
        "sigma".into(),
        Value::Array(rec.spectrum.values().iter().map(|&s| json_num(s)).collect()),
    );
    if rec.degenerate_alpha {
        obj.insert("degenerate_alpha".into(), true.into());
    }
    Value::Object(obj)
}

fn variant_label(v: &EnergyVariant) -> String {
    match v {
        EnergyVariant::RandicIncidence => "I_RE".into(),
        EnergyVariant::Incidence => "IE".into(),
        EnergyVariant::GeneralAlpha(a) => format!("I_RE(alpha={})", fmt_sig12(*a)),
        EnergyVariant::RandicIndex => "randic_index".into(),
    }
}

/// `compute`: energies, Randić index, and singular values of one graph.
pub fn cmd_compute(input: &GraphInput, config: &RunConfig) -> Result<String, Error> {
    let (g, label) = load_graph(input)?;
    let records = energy_records(&g, config.alpha)?;
    let index = randic_index(&g);
    let graph6 = write_graph6(&g).ok();

    match config.format {
        OutputFormat::Table => {
            let mut out = format!(
                "graph: {label} (n = {}, m = {}{})\n",
                g.n(),
                g.m(),
                graph6
                    .as_deref()
                    .map(|s| format!(", graph6 {s}"))
                    .unwrap_or_default()
            );
            out.push_str(&format!("{:<20} {}\n", "randic_index", fmt_sig12(index)));
            for rec in &records {
                out.push_str(&format!(
                    "{:<20} {}\n",
                    variant_label(&rec.variant),
                    fmt_sig12(rec.value)
                ));
            }
            let sigma: Vec<String> = records[0]
                .spectrum
                .values()
                .iter()
                .map(|&s| fmt_sig12(s))
                .collect();
            out.push_str(&format!("{:<20} {}\n", "sigma", sigma.join(" ")));
            Ok(out)
        }
        OutputFormat::Json => {
            let mut recs: Vec<Value> = records.iter().map(energy_record_json).collect();
            recs.push(json!({
                "variant": "randic_index",
                "n": g.n(),
                "m": g.m(),
                "value": json_num(index),
                "sigma": [],
            }));
            let doc = json!({
                "graph": label,
                "graph6": graph6,
                "records": recs,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
        OutputFormat::Csv => {
            let mut out = String::from("variant,alpha,n,m,value,sigma\n");
            for rec in &records {
                let sigma: Vec<String> =
                    rec.spectrum.values().iter().map(|&s| fmt_sig12(s)).collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    rec.variant.name(),
                    rec.variant.alpha().map(fmt_sig12).unwrap_or_default(),
                    rec.n,
                    rec.m,
                    fmt_sig12(rec.value),
                    sigma.join(" ")
                ));
            }
            out.push_str(&format!(
                "randic_index,,{},{},{},\n",
                g.n(),
                g.m(),
                fmt_sig12(index)
            ));
            Ok(out)
        }
    }
}

/// `compute --stdin`: one row of energies per graph6 line.
pub fn cmd_compute_batch(corpus: &str, config: &RunConfig) -> Result<String, Error> {
    let mut rows = Vec::new();
    for (i, line) in corpus.lines().enumerate() {
        let line_no = i + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match parse_graph6(text).map_err(Error::from).and_then(|g| {
            let records = energy_records(&g, config.alpha)?;
            Ok((g, records))
        }) {
            Ok((g, records)) => rows.push((line_no, text.to_string(), Some((g, records)))),
            Err(e) => {
                if !e.is_input_error() {
                    return Err(e);
                }
                rows.push((line_no, format!("{e}"), None));
            }
        }
    }
    match config.format {
        OutputFormat::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|(line, text, entry)| match entry {
                    Some((g, records)) => json!({
                        "line": line,
                        "graph6": text,
                        "n": g.n(),
                        "m": g.m(),
                        "randic_index": json_num(randic_index(g)),
                        "records": records.iter().map(energy_record_json).collect::<Vec<_>>(),
                    }),
                    None => json!({ "line": line, "error": text }),
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Array(arr)).unwrap()
            ))
        }
        _ => {
            // table and csv share the flat row layout
            let mut out = String::from("line,graph6,n,m,randic_index,i_re,ie\n");
            for (line, text, entry) in &rows {
                match entry {
                    Some((g, records)) => out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        line,
                        text,
                        g.n(),
                        g.m(),
                        fmt_sig12(randic_index(g)),
                        fmt_sig12(records[0].value),
                        fmt_sig12(records[1].value),
                    )),
                    None => out.push_str(&format!("{line},error: {text},,,,,\n")),
                }
            }
            Ok(out)
        }
    }
}

const BOUNDS_HEADER: &str = "line,theorem,graph6,n,m,lhs,rhs,holds,tight,note";

fn bound_rows_for_scan(rows: &[ScanRow]) -> Vec<[String; 10]> {
    let mut out = Vec::new();
    for row in rows {
        match row {
            ScanRow::Graph(rec) => {
                for outcome in &rec.checks {
                    match outcome {
                        CheckOutcome::Report(r) => out.push([
                            rec.line.to_string(),
                            r.check.name().to_string(),
                            rec.graph6.clone(),
                            rec.n.to_string(),
                            rec.m.to_string(),
                            fmt_sig12(r.lhs),
                            fmt_sig12(r.rhs),
                            r.holds.to_string(),
                            r.tight.to_string(),
                            String::new(),
                        ]),
                        CheckOutcome::Skipped { check, reason } => out.push([
                            rec.line.to_string(),
                            check.name().to_string(),
                            rec.graph6.clone(),
                            rec.n.to_string(),
                            rec.m.to_string(),
                            String::new(),
                            String::new(),
                            String::new(),
                            String::new(),
                            format!("skipped: {reason}"),
                        ]),
                    }
                }
            }
            ScanRow::Error { line, message } => out.push([
                line.to_string(),
                "error".to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                message.clone(),
            ]),
        }
    }
    out
}

fn render_bound_rows(rows: Vec<[String; 10]>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "line": r[0].parse::<usize>().ok(),
                        "theorem": r[1],
                        "graph6": r[2],
                        "n": r[3].parse::<usize>().ok(),
                        "m": r[4].parse::<usize>().ok(),
                        "lhs": r[5].parse::<f64>().ok(),
                        "rhs": r[6].parse::<f64>().ok(),
                        "holds": r[7].parse::<bool>().ok(),
                        "tight": r[8].parse::<bool>().ok(),
                        "note": if r[9].is_empty() { Value::Null } else { r[9].clone().into() },
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Array(arr)).unwrap()
            )
        }
        OutputFormat::Csv => {
            let mut out = String::from(BOUNDS_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{:<5} {:<16} {:<12} {:>3} {:>3} {:>16} {:>16} {:<6} {:<6} {}\n",
                "line", "theorem", "graph6", "n", "m", "lhs", "rhs", "holds", "tight", "note"
            );
            for r in rows {
                out.push_str(&format!(
                    "{:<5} {:<16} {:<12} {:>3} {:>3} {:>16} {:>16} {:<6} {:<6} {}\n",
                    r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8], r[9]
                ));
            }
            out
        }
    }
}

/// `bounds`: every bound check on one graph, plus the regular line-graph
/// identity when the graph is regular.
pub fn cmd_bounds(input: &GraphInput, config: &RunConfig) -> Result<String, Error> {
    let (g, _label) = load_graph(input)?;
    let graph6 = write_graph6(&g)?;
    let outcomes = crate::extremal::run_all_checks(&g);
    let mut rows = bound_rows_for_scan(&[ScanRow::Graph(Box::new(
        crate::extremal::ScanRecord {
            line: 1,
            graph6: graph6.clone(),
            n: g.n(),
            m: g.m(),
            i_re: randic_incidence_energy(&g)?.value,
            checks: outcomes,
        },
    ))]);
    // the line-graph identity is reported alongside the six bound checks
    match check_regular_line_identity(&g) {
        Ok(r) => rows.push([
            "1".into(),
            "line-identity".into(),
            graph6,
            g.n().to_string(),
            g.m().to_string(),
            fmt_sig12(r.lhs),
            fmt_sig12(r.rhs),
            r.within_tol.to_string(),
            r.within_tol.to_string(),
            String::new(),
        ]),
        Err(e) => rows.push([
            "1".into(),
            "line-identity".into(),
            graph6,
            g.n().to_string(),
            g.m().to_string(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            format!("skipped: {e}"),
        ]),
    }
    Ok(render_bound_rows(rows, config.format))
}

/// `bounds --stdin`: scans a graph6 corpus, one set of bound rows per line.
pub fn cmd_bounds_batch(corpus: &str, config: &RunConfig) -> Result<String, Error> {
    let rows = scan_corpus(corpus.lines());
    Ok(render_bound_rows(bound_rows_for_scan(&rows), config.format))
}

/// Tree selection for `trees`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSelection {
    Single(usize),
    Range(RangeInclusive<usize>),
}

impl TreeSelection {
    fn values(&self) -> Vec<usize> {
        match self {
            TreeSelection::Single(n) => vec![*n],
            TreeSelection::Range(r) => r.clone().collect(),
        }
    }
}

/// Parses `A..B` as the inclusive range `A..=B`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Error> {
    let parts: Vec<&str> = text.split("..").collect();
    let bad = || Error::Precondition {
        check: "range",
        reason: format!("expected A..B, got {text:?}"),
    };
    if parts.len() != 2 {
        return Err(bad());
    }
    let lo: usize = parts[0].parse().map_err(|_| bad())?;
    let hi: usize = parts[1].parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn summary_line(s: &crate::extremal::ExtremalSummary) -> String {
    format!(
        "n={} trees={} max={} max_i_re={} max_is_star={} max_unique={} min={} min_i_re={} path_is_min={}",
        s.n,
        s.count_trees,
        s.max_record.graph6,
        fmt_sig12(s.max_record.i_re),
        s.max_is_star,
        s.max_unique,
        s.min_record.graph6,
        fmt_sig12(s.min_record.i_re),
        s.path_is_min,
    )
}

/// `trees`: ranks all trees for each selected vertex count. With `out_dir`,
/// writes one CSV file per count and prints the summaries; otherwise prints
/// records in the selected format.
pub fn cmd_trees(
    selection: &TreeSelection,
    config: &RunConfig,
    out_dir: Option<&Path>,
) -> Result<String, Error> {
    let mut rankings = Vec::new();
    for n in selection.values() {
        rankings.push(rank_trees(n)?);
    }

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Precondition {
            check: "out-dir",
            reason: format!("cannot create {}: {e}", dir.display()),
        })?;
        let mut out = String::new();
        for ranking in &rankings {
            let path = dir.join(format!("trees_n{}.csv", ranking.summary.n));
            std::fs::write(&path, records_to_csv(&ranking.records)).map_err(|e| {
                Error::Precondition {
                    check: "out-dir",
                    reason: format!("cannot write {}: {e}", path.display()),
                }
            })?;
            out.push_str(&summary_line(&ranking.summary));
            out.push('\n');
        }
        return Ok(out);
    }

    match config.format {
        OutputFormat::Csv => {
            let mut out = String::from("rank,graph6,n,i_re\n");
            for ranking in &rankings {
                for r in &ranking.records {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        r.rank,
                        r.graph6,
                        r.n,
                        fmt_sig12(r.i_re)
                    ));
                }
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let arr: Vec<Value> = rankings
                .iter()
                .map(|ranking| {
                    json!({
                        "n": ranking.summary.n,
                        "count_trees": ranking.summary.count_trees,
                        "max_is_star": ranking.summary.max_is_star,
                        "max_unique": ranking.summary.max_unique,
                        "path_is_min": ranking.summary.path_is_min,
                        "records": ranking.records.iter().map(|r| json!({
                            "rank": r.rank,
                            "graph6": r.graph6,
                            "n": r.n,
                            "i_re": json_num(r.i_re),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&Value::Array(arr)).unwrap()
            ))
        }
        OutputFormat::Table => {
            let mut out = String::new();
            for ranking in &rankings {
                out.push_str(&summary_line(&ranking.summary));
                out.push('\n');
                for r in &ranking.records {
                    out.push_str(&format!(
                        "  {:>4}  {:<12} {}\n",
                        r.rank,
                        r.graph6,
                        fmt_sig12(r.i_re)
                    ));
                }
            }
            Ok(out)
        }
    }
}

/// `trees --explore-min`: emits the minimum-energy findings per vertex
/// count. Exploratory output, no expected answer.
pub fn cmd_explore_min(range: RangeInclusive<usize>) -> Result<String, Error> {
    let mut out = String::new();
    for rep in explore_min_tree(range)? {
        let argmin: Vec<&str> = rep.argmin.iter().map(|r| r.graph6.as_str()).collect();
        out.push_str(&format!(
            "n={} trees={} argmin={} min_i_re={} path={} path_rank={} path_i_re={} path_is_min={}\n",
            rep.n,
            rep.count_trees,
            argmin.join("|"),
            fmt_sig12(rep.argmin[0].i_re),
            rep.path_record.graph6,
            rep.path_record.rank,
            fmt_sig12(rep.path_record.i_re),
            rep.path_is_min,
        ));
    }
    Ok(out)
}

/// `verify`: runs the whole verification suite; one line per check.
/// Returns the rendered report and whether everything passed.
pub fn cmd_verify(config: &RunConfig) -> (String, bool) {
    let outcome = verify::run(&VerifyOptions {
        seed: config.seed.unwrap_or(42),
        tolerance: config.tolerance,
        inject_error: config.inject_error.unwrap_or(0.0),
    });
    let mut out = String::new();
    for line in &outcome.lines {
        out.push_str(&format!(
            "{} {}: {}\n",
            if line.passed { "ok  " } else { "FAIL" },
            line.name,
            line.detail
        ));
    }
    out.push_str(&format!(
        "verify: {} of {} checks passed\n",
        outcome.lines.iter().filter(|l| l.passed).count(),
        outcome.lines.len()
    ));
    (out, outcome.passed)
}
