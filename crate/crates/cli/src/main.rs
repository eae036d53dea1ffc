use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rs_cells::io::{parse_partition, parse_permutation, parse_tableau, to_json, TableauPair};
use rs_cells::verify::{self, Check, OutputFormat, VerifyConfig};
use rs_cells::{sweep, CliError, Result};
use rs_cells_core::cells::{self, CellReport};
use rs_cells_core::kl::{bruhat_leq, KlTable};
use rs_cells_core::rsk::{inverse_rs, robinson_schensted};
use rs_cells_core::{DescentChoice, Partition, StandardTableau};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "rs-cells", version, about = "Robinson-Schensted and two-sided cells of S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print (P, Q) of a permutation as {"P": ..., "Q": ...}
    Rs {
        /// Comma-separated one-line word, e.g. 4,3,2,1,6,5,7
        perm: Option<String>,
        /// Read the permutation as a JSON array from stdin
        #[arg(long)]
        stdin_json: bool,
    },
    /// Recover the permutation from a pair of tableaux
    Unrs {
        /// Insertion tableau as JSON rows
        #[arg(long = "p")]
        p: Option<String>,
        /// Recording tableau as JSON rows
        #[arg(long = "q")]
        q: Option<String>,
        /// Read {"P": ..., "Q": ...} from stdin
        #[arg(long)]
        stdin_json: bool,
    },
    /// Schützenberger evacuation of a tableau
    Evac {
        /// Tableau as JSON rows, e.g. [[1,2],[3]]
        tableau: Option<String>,
        #[arg(long)]
        stdin_json: bool,
    },
    /// Analyse the two-sided cell of a shape
    Cell {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
        /// Print only the minimal-length elements, one JSON array per line
        #[arg(long, conflicts_with = "max")]
        min: bool,
        /// Print only the maximal-length elements, one JSON array per line
        #[arg(long)]
        max: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        override_ceiling: bool,
    },
    /// Run the exhaustive verification sweep for n = 1..=N
    Verify {
        #[arg(long = "n", default_value_t = 8)]
        n_max: usize,
        /// Comma-separated subset of: theorem-min, corollary-max, counts, lengths,
        /// kl-criterion, bijections, knuth, evacuation
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        override_ceiling: bool,
        /// Report 0 ms everywhere so that output is byte-reproducible
        #[arg(long)]
        no_timings: bool,
    },
    /// Kazhdan-Lusztig polynomial P_{x,w} (x defaults to the identity)
    Kl {
        #[arg(long)]
        w: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        override_ceiling: bool,
    },
    /// Counting and length formulas for a shape
    Count {
        #[arg(long)]
        shape: String,
    },
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn input(arg: Option<String>, stdin_json: bool, what: &str) -> Result<String> {
    match (arg, stdin_json) {
        (_, true) => read_stdin(),
        (Some(s), false) => Ok(s),
        (None, false) => Err(CliError::Config(format!("missing {what}; pass it or use --stdin-json"))),
    }
}

fn check_ceiling(n: usize, override_ceiling: bool) -> Result<()> {
    let ceiling = verify::sweep_ceiling();
    if n > ceiling && !override_ceiling {
        return Err(CliError::Config(format!(
            "n = {n} exceeds the sweep ceiling {ceiling}; pass --override-ceiling or set RS_CELLS_N_CEILING"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct KlOutput {
    x: rs_cells_core::Permutation,
    w: rs_cells_core::Permutation,
    bruhat_leq: bool,
    polynomial: rs_cells_core::IntPolynomial,
    delta: Option<usize>,
}

#[derive(Serialize)]
struct CountOutput {
    shape: Partition,
    n: usize,
    conjugate: Partition,
    syt: u64,
    cell_size: u64,
    count_min: u64,
    count_max: u64,
    n_lambda: usize,
    max_length: usize,
}

/// Runs one command, writing its payload to `out`; returns the exit code.
fn execute(command: Command, out: &mut impl Write) -> Result<u8> {
    match command {
        Command::Rs { perm, stdin_json } => {
            let w = parse_permutation(&input(perm, stdin_json, "permutation")?)?;
            let (p, q) = robinson_schensted(&w);
            writeln!(out, "{}", to_json(&TableauPair { p, q })?)?;
        }
        Command::Unrs { p, q, stdin_json } => {
            let pair: TableauPair = if stdin_json {
                serde_json::from_str(&read_stdin()?)?
            } else {
                let p = parse_tableau(&p.ok_or_else(|| CliError::Config("missing --p".into()))?)?;
                let q = parse_tableau(&q.ok_or_else(|| CliError::Config("missing --q".into()))?)?;
                TableauPair { p, q }
            };
            writeln!(out, "{}", to_json(&inverse_rs(&pair.p, &pair.q)?)?)?;
        }
        Command::Evac { tableau, stdin_json } => {
            let t: StandardTableau = parse_tableau(&input(tableau, stdin_json, "tableau")?)?;
            writeln!(out, "{}", to_json(&t.evacuation())?)?;
        }
        Command::Cell { shape, n, min, max, format, workers, override_ceiling } => {
            let shape = parse_partition(&shape)?;
            shape.check_size(n)?;
            check_ceiling(n, override_ceiling)?;
            let buckets = sweep::pool(workers)?.install(|| sweep::cell_buckets(n));
            let report = CellReport::analyze(&shape, buckets.cell(&shape))?;
            if min || max {
                let set = if min { &report.min_set } else { &report.max_set };
                for w in set {
                    writeln!(out, "{}", to_json(w)?)?;
                }
            } else {
                write!(out, "{}", render_cell(&report, format)?)?;
            }
        }
        Command::Verify { n_max, checks, format, workers, override_ceiling, no_timings } => {
            let checks = if checks.is_empty() {
                Check::ALL.into_iter().collect()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<_>>()?
            };
            let config = VerifyConfig {
                n_max,
                checks,
                output_format: format,
                parallel_workers: workers,
                override_ceiling,
                timings: !no_timings,
            };
            config.validate()?;
            if config.checks.contains(&Check::KlCriterion) && n_max > config.kl_ceiling() {
                eprintln!(
                    "kl-criterion: polynomials computed for n <= {}, pattern lemma only above",
                    config.kl_ceiling()
                );
            }
            let report = verify::run(&config, |line| eprintln!("{line}"))?;
            write!(out, "{}", report.render(format)?)?;
            return Ok(if report.all_passed { 0 } else { 1 });
        }
        Command::Kl { w, x, override_ceiling } => {
            let w = parse_permutation(&w)?;
            let x = match x {
                Some(x) => parse_permutation(&x)?,
                None => rs_cells_core::Permutation::identity(w.n()),
            };
            let mut table = if override_ceiling {
                KlTable::new_unbounded(w.n(), DescentChoice::Smallest)
            } else {
                KlTable::new(w.n())?
            };
            let polynomial = table.polynomial(&x, &w)?;
            let delta = if x.is_identity() { polynomial.degree() } else { None };
            let payload = KlOutput { bruhat_leq: bruhat_leq(&x, &w)?, x, w, polynomial, delta };
            writeln!(out, "{}", to_json(&payload)?)?;
        }
        Command::Count { shape } => {
            let shape = parse_partition(&shape)?;
            let n = shape.size();
            let syt = StandardTableau::count(&shape);
            let payload = CountOutput {
                n,
                conjugate: shape.conjugate(),
                syt,
                cell_size: syt * syt,
                count_min: cells::count_min(&shape),
                count_max: cells::count_max(&shape),
                n_lambda: shape.n_lambda(),
                max_length: cells::max_length_formula(&shape, n)?,
                shape,
            };
            writeln!(out, "{}", to_json(&payload)?)?;
        }
    }
    Ok(0)
}

fn render_cell(report: &CellReport, format: OutputFormat) -> Result<String> {
    let v = report.verdicts;
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "shape", "n", "cell_size", "min_length", "max_length", "min_count", "max_count",
                "theorem_min", "corollary_max", "max_reading", "count_min", "count_max",
                "length_min", "length_max", "cell_size_ok",
            ])?;
            w.write_record([
                report.shape.to_string(),
                report.n.to_string(),
                report.cell_size.to_string(),
                report.min_length.to_string(),
                report.max_length.to_string(),
                report.min_set.len().to_string(),
                report.max_set.len().to_string(),
                v.theorem_min.to_string(),
                v.corollary_max.to_string(),
                v.max_reading.to_string(),
                v.count_min.to_string(),
                v.count_max.to_string(),
                v.length_min.to_string(),
                v.length_max.to_string(),
                v.cell_size.to_string(),
            ])?;
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("utf-8"))
        }
        OutputFormat::Text => {
            let list = |ws: &[rs_cells_core::Permutation]| {
                ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            };
            Ok(format!(
                "shape {} (n = {}): cell size {}\nmin length {}: {}\nmax length {}: {}\nall verdicts hold: {}\n",
                report.shape,
                report.n,
                report.cell_size,
                report.min_length,
                list(&report.min_set),
                report.max_length,
                list(&report.max_set),
                v.all()
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
