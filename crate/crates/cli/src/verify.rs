//! The `verify` harness: exhaustive checks of the cell theorems for
//! `n = 1..=n_max`, one report row per (check, n, shape).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use rs_cells_core::cells::{self, cell_from_pairs, is_locally_minimal, is_move_connected};
use rs_cells_core::kl::verify_smoothness_criterion;
use rs_cells_core::rsk::{insertion_tableau, inverse_rs, robinson_schensted};
use rs_cells_core::{
    CellBuckets, CellReport, DescentChoice, KlTable, Partition, Permutation, StandardTableau,
};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::sweep;

/// Default largest `n` for a sweep; `RS_CELLS_N_CEILING` may raise it.
pub const DEFAULT_N_CEILING: usize = 9;
/// Largest `n` for the Kazhdan–Lusztig part of `kl-criterion` without override.
pub const KL_CHECK_CEILING: usize = 6;
/// Pair-enumeration cross-check of the cell sweep runs up to this `n`.
pub const PAIR_ROUTE_CEILING: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    TheoremMin,
    CorollaryMax,
    Counts,
    Lengths,
    KlCriterion,
    Bijections,
    Knuth,
    Evacuation,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::TheoremMin,
        Check::CorollaryMax,
        Check::Counts,
        Check::Lengths,
        Check::KlCriterion,
        Check::Bijections,
        Check::Knuth,
        Check::Evacuation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TheoremMin => "theorem-min",
            Check::CorollaryMax => "corollary-max",
            Check::Counts => "counts",
            Check::Lengths => "lengths",
            Check::KlCriterion => "kl-criterion",
            Check::Bijections => "bijections",
            Check::Knuth => "knuth",
            Check::Evacuation => "evacuation",
        }
    }

    fn per_shape(self) -> bool {
        matches!(
            self,
            Check::TheoremMin | Check::CorollaryMax | Check::Counts | Check::Lengths
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub checks: BTreeSet<Check>,
    pub output_format: OutputFormat,
    pub parallel_workers: usize,
    pub override_ceiling: bool,
    /// Report `millis = 0` everywhere so output is byte-reproducible.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 8,
            checks: Check::ALL.into_iter().collect(),
            output_format: OutputFormat::Json,
            parallel_workers: 1,
            override_ceiling: false,
            timings: true,
        }
    }
}

/// `RS_CELLS_N_CEILING` when set to an integer, else [`DEFAULT_N_CEILING`].
pub fn sweep_ceiling() -> usize {
    std::env::var("RS_CELLS_N_CEILING")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .map_or(DEFAULT_N_CEILING, |c: usize| c.max(DEFAULT_N_CEILING))
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 {
            return Err(CliError::Config("n_max must be at least 1".into()));
        }
        if self.checks.is_empty() {
            return Err(CliError::Config("no checks selected".into()));
        }
        if self.parallel_workers < 1 {
            return Err(CliError::Config("parallel_workers must be at least 1".into()));
        }
        let ceiling = sweep_ceiling();
        if self.n_max > ceiling && !self.override_ceiling {
            return Err(CliError::Config(format!(
                "n = {} exceeds the sweep ceiling {ceiling}; pass --override-ceiling or set RS_CELLS_N_CEILING",
                self.n_max
            )));
        }
        Ok(())
    }

    /// Largest `n` at which `kl-criterion` computes polynomials.
    pub fn kl_ceiling(&self) -> usize {
        if self.override_ceiling {
            rs_cells_core::kl::KL_CEILING
        } else {
            KL_CHECK_CEILING
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub check: Check,
    pub n: usize,
    /// Empty for checks that cover all of `S_n` at once.
    pub shape: String,
    pub verdict: bool,
    pub detail: String,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n_max: usize,
    pub checks: Vec<Check>,
    pub all_passed: bool,
    pub rows: Vec<Row>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.verdict)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["check", "n", "shape", "verdict", "detail", "millis"])?;
                for r in &self.rows {
                    w.write_record([
                        r.check.name(),
                        &r.n.to_string(),
                        &r.shape,
                        &r.verdict.to_string(),
                        &r.detail,
                        &r.millis.to_string(),
                    ])?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
            OutputFormat::Text => {
                let mut out = String::new();
                for r in &self.rows {
                    let status = if r.verdict { "PASS" } else { "FAIL" };
                    let shape = if r.shape.is_empty() { String::new() } else { format!(" {}", r.shape) };
                    out += &format!("{status} {} n={}{shape}: {} ({} ms)\n", r.check, r.n, r.detail, r.millis);
                }
                let passed = self.rows.iter().filter(|r| r.verdict).count();
                out += &format!("{passed}/{} rows passed\n", self.rows.len());
                Ok(out)
            }
        }
    }
}

fn elapsed(start: Instant, timings: bool) -> u64 {
    if timings {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

fn words(ws: &[Permutation]) -> String {
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Collects failed sub-claims into a detail string.
#[derive(Default)]
struct Findings(Vec<String>);

impl Findings {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn expect_all(&mut self, label: &str, failures: Vec<Permutation>) {
        if !failures.is_empty() {
            self.0.push(format!("{label}: {}", words(&failures)));
        }
    }

    fn finish(self, ok_detail: String) -> (bool, String) {
        if self.0.is_empty() {
            (true, ok_detail)
        } else {
            (false, self.0.join("; "))
        }
    }
}

/// Runs every selected check; `progress` receives one line per finished `n`.
pub fn run(config: &VerifyConfig, mut progress: impl FnMut(&str)) -> Result<Report> {
    config.validate()?;
    let pool = sweep::pool(config.parallel_workers)?;
    let mut rows = Vec::new();
    for n in 1..=config.n_max {
        let start = Instant::now();
        let n_rows = pool.install(|| run_n(config, n));
        progress(&format!("n = {n}: {} rows in {:?}", n_rows.len(), start.elapsed()));
        rows.extend(n_rows);
    }
    Ok(Report {
        n_max: config.n_max,
        checks: config.checks.iter().copied().collect(),
        all_passed: rows.iter().all(|r| r.verdict),
        rows,
    })
}

fn run_n(config: &VerifyConfig, n: usize) -> Vec<Row> {
    let t = config.timings;
    let sweep_start = Instant::now();
    let buckets = sweep::cell_buckets(n);
    let sweep_millis = elapsed(sweep_start, t);
    let shapes = Partition::all(n);
    let mut rows = Vec::new();

    if config.checks.iter().any(|c| c.per_shape()) {
        let per_shape: Vec<Vec<Row>> = shapes
            .par_iter()
            .map(|shape| shape_rows(config, n, shape, buckets.cell(shape), sweep_millis))
            .collect();
        rows.extend(per_shape.into_iter().flatten());
    }
    for &check in &config.checks {
        if check.per_shape() {
            continue;
        }
        let start = Instant::now();
        let (verdict, detail) = match check {
            Check::KlCriterion => kl_criterion(n, config.kl_ceiling()),
            Check::Bijections => bijections(n, &buckets),
            Check::Knuth => knuth(n, &buckets),
            Check::Evacuation => evacuation(n, &buckets),
            _ => unreachable!("per-shape checks handled above"),
        };
        rows.push(Row {
            check,
            n,
            shape: String::new(),
            verdict,
            detail,
            millis: elapsed(start, t),
        });
    }
    // stable: shapes stay in `Partition::all` order within each check
    rows.sort_by_key(|r| r.check);
    rows
}

fn shape_rows(
    config: &VerifyConfig,
    n: usize,
    shape: &Partition,
    cell: &[Permutation],
    sweep_millis: u64,
) -> Vec<Row> {
    let start = Instant::now();
    let report = CellReport::analyze(shape, cell);
    let millis = sweep_millis + elapsed(start, config.timings);
    let row = |check: Check, verdict: bool, detail: String| Row {
        check,
        n,
        shape: shape.to_string(),
        verdict,
        detail,
        millis,
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            return config
                .checks
                .iter()
                .filter(|c| c.per_shape())
                .map(|&c| row(c, false, e.to_string()))
                .collect();
        }
    };
    let v = report.verdicts;
    config
        .checks
        .iter()
        .filter(|c| c.per_shape())
        .map(|&check| match check {
            Check::TheoremMin => row(
                check,
                v.theorem_min,
                format!("min_length={} min={}", report.min_length, words(&report.min_set)),
            ),
            Check::CorollaryMax => row(
                check,
                v.corollary_max && v.max_reading,
                format!(
                    "max_length={} |max|={} d_c={} reading={}",
                    report.max_length,
                    report.max_set.len(),
                    v.corollary_max,
                    v.max_reading
                ),
            ),
            Check::Counts => row(
                check,
                v.count_min && v.count_max,
                format!(
                    "|min|={} count_min={} |max|={} count_max={}",
                    report.min_set.len(),
                    cells::count_min(shape),
                    report.max_set.len(),
                    cells::count_max(shape)
                ),
            ),
            Check::Lengths => row(
                check,
                v.length_min && v.length_max,
                format!(
                    "min_length={} n(lambda)={} max_length={} formula={}",
                    report.min_length,
                    shape.n_lambda(),
                    report.max_length,
                    cells::max_length_formula(shape, n).unwrap_or(usize::MAX)
                ),
            ),
            _ => unreachable!(),
        })
        .collect()
}

fn kl_criterion(n: usize, kl_ceiling: usize) -> (bool, String) {
    let p4231 = Permutation::new(vec![4, 2, 3, 1]).expect("valid");
    let p3412 = Permutation::new(vec![3, 4, 1, 2]).expect("valid");
    let mut findings = Findings::default();
    findings.expect_all(
        "involution patterns vs sigma_c",
        sweep::all_perms(n, |w| {
            !w.is_involution()
                || (!w.contains_pattern(&p4231) && !w.contains_pattern(&p3412))
                    == w.young_composition().is_some()
        }),
    );
    if n > kl_ceiling {
        return findings.finish(format!("pattern lemma only; KL ceiling {kl_ceiling}"));
    }
    let mut table = KlTable::new_unbounded(n, DescentChoice::Smallest);
    let check = verify_smoothness_criterion(&mut table);
    findings.expect(check.pattern_criterion, || "P_{e,w}=1 vs pattern avoidance".into());
    findings.expect(check.involution_criterion, || "delta(w)=0 vs sigma_c on involutions".into());
    findings.finish(format!("pattern lemma ok; P_e,w != 1 for {} elements", check.singular.len()))
}

fn bijections(n: usize, buckets: &CellBuckets) -> (bool, String) {
    let mut findings = Findings::default();
    findings.expect_all(
        "RS round trip / shape / inverse symmetry / involution",
        sweep::all_perms(n, |w| {
            let (p, q) = robinson_schensted(w);
            let (pi, qi) = robinson_schensted(&w.inverse());
            p.shape() == q.shape()
                && inverse_rs(&p, &q).as_ref() == Ok(w)
                && pi == q
                && qi == p
                && (w.is_involution() == (p == q))
        }),
    );
    let shapes = Partition::all(n);
    let factorial: u64 = (1..=n as u64).product();
    let mut sum_sq = 0u64;
    let mut sum = 0u64;
    for shape in &shapes {
        let tabs = StandardTableau::enumerate(shape);
        let f = StandardTableau::count(shape);
        findings.expect(tabs.len() as u64 == f, || format!("{shape}: enumeration != hook length"));
        findings.expect(buckets.cell(shape).len() as u64 == f * f, || format!("{shape}: |cell| != f^2"));
        sum_sq += f * f;
        sum += f;
        let reading: BTreeSet<StandardTableau> = StandardTableau::reading_tableaux(shape).into_iter().collect();
        findings.expect(
            tabs.iter().all(|t| t.is_reading_tableau() == reading.contains(t)),
            || format!("{shape}: reading predicate != composition tableaux"),
        );
        findings.expect(
            StandardTableau::column_superstandard(shape).is_reading_tableau(),
            || format!("{shape}: column superstandard not reading"),
        );
        findings.expect(
            tabs.iter().all(|t| {
                let w = rs_cells_core::rsk::involution_of_tableau(t);
                w.is_involution() && robinson_schensted(&w) == (t.clone(), t.clone())
            }),
            || format!("{shape}: w_T not an involution"),
        );
        if n <= PAIR_ROUTE_CEILING {
            findings.expect(cell_from_pairs(shape) == buckets.cell(shape), || {
                format!("{shape}: pair enumeration != sweep")
            });
        }
    }
    let involutions = Permutation::all(n).filter(Permutation::is_involution).count() as u64;
    findings.expect(sum_sq == factorial, || format!("sum f^2 = {sum_sq} != {factorial}"));
    findings.expect(sum == involutions, || format!("sum f = {sum} != #involutions {involutions}"));
    findings.finish(format!("sum f^2 = {sum_sq}; sum f = {sum} involutions"))
}

fn knuth(n: usize, buckets: &CellBuckets) -> (bool, String) {
    let mut findings = Findings::default();
    findings.expect_all(
        "Knuth moves change P or dual moves change Q",
        sweep::all_perms(n, |w| {
            let (p, q) = robinson_schensted(w);
            cells::knuth_moves(w).iter().all(|u| insertion_tableau(u) == p)
                && cells::dual_knuth_moves(w).iter().all(|u| robinson_schensted(u).1 == q)
        }),
    );
    let disconnected: Vec<String> = buckets
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|(_, cell)| !is_move_connected(cell))
        .map(|(shape, _)| shape.to_string())
        .collect();
    findings.expect(disconnected.is_empty(), || format!("disconnected cells: {}", disconnected.join(" ")));
    let mut detail = String::from("moves preserve tableaux; every cell connected");
    if n == 6 {
        let w = Permutation::new(vec![6, 3, 2, 5, 4, 1]).expect("valid");
        let n_lambda = insertion_tableau(&w).shape().n_lambda();
        findings.expect(is_locally_minimal(&w) && w.length() > n_lambda, || {
            "632541 is not a locally minimal non-minimal element".into()
        });
        detail += &format!("; 632541 locally minimal with length {} > n(lambda) = {n_lambda}", w.length());
    }
    findings.finish(detail)
}

fn evacuation(n: usize, buckets: &CellBuckets) -> (bool, String) {
    let mut findings = Findings::default();
    let w0 = Permutation::longest(n);
    findings.expect_all(
        "Q(w w0) != ev(Q(w)^t)",
        sweep::all_perms(n, |w| {
            let q = robinson_schensted(w).1;
            robinson_schensted(&w.compose(&w0).expect("same n")).1 == q.transpose().evacuation()
        }),
    );
    for shape in Partition::all(n) {
        findings.expect(
            StandardTableau::enumerate(&shape)
                .iter()
                .all(|t| t.evacuation().shape() == shape && t.evacuation().evacuation() == *t),
            || format!("{shape}: evacuation not a shape-preserving involution"),
        );
        let target: BTreeSet<&Permutation> = buckets.cell(&shape.conjugate()).iter().collect();
        let cell = buckets.cell(&shape);
        let right: BTreeSet<Permutation> = cell.iter().map(|w| w.compose(&w0).expect("same n")).collect();
        let left: BTreeSet<Permutation> = cell.iter().map(|w| w0.compose(w).expect("same n")).collect();
        findings.expect(
            right.iter().collect::<BTreeSet<_>>() == target && left.iter().collect::<BTreeSet<_>>() == target,
            || format!("{shape}: T w0 or w0 T != T of conjugate"),
        );
    }
    findings.finish("Q(w w0) = ev(Q(w)^t); ev involutive; T w0 = w0 T = T^(conjugate)".into())
}
