//! `prank-tool`: p-ranks, fiber products, the genus-5 sweep, strata formulas
//! and self-check suites from the command line.
//!
//! Exit status: 0 on success, 1 when a verification did not hold, 2 on bad
//! input (including arguments the library rejects).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use prank_core::cartier::{cartier_matrix_with, HyperellipticModel, Strategy};
use prank_core::covers::prank_fiber_product;
use prank_core::curves::supersingular_lambdas;
use prank_core::ff::FieldCtx;
use prank_core::poly::DensePoly;
use prank_core::search::{
    ss5_range, ss5_sweep, superspecial_g2_enumeration, Family, RangeRow, ResultsCache,
    SearchRecord, SweepConfig, SweepMode, DEFAULT_CHUNK,
};
use prank_core::strata::{
    boundary_components, smooth_cover_exists, stratum_dim, BoundaryComponent, Space, StratumQuery,
};
use prank_core::verify::{run_suite, Report, Suite, DEFAULT_SEED};
use prank_core::Error;

#[derive(Parser, Debug)]
#[command(name = "prank-tool", version, about = "p-ranks of hyperelliptic curves and their double covers")]
struct Cli {
    /// Worker threads; falls back to PRANK_THREADS, then to the core count.
    #[arg(long, global = true, env = "PRANK_THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Output format. Not every subcommand has a tabular form.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree of the base field (1 or 2).
    #[arg(long, default_value_t = 1)]
    ext: u32,
}

impl FieldArgs {
    fn ctx(&self) -> Result<FieldCtx, Error> {
        FieldCtx::new(self.p, self.ext)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    Naive,
    Recurrence,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Recurrence => Strategy::Recurrence,
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, default_value = "first")]
    mode: SweepMode,
    /// Which D_v factor to use.
    #[arg(long, default_value = "homogenized")]
    family: Family,
    /// Search (u, v) over GF(p^2).
    #[arg(long)]
    ext: bool,
    /// Rows of u per parallel batch in first mode.
    #[arg(long, default_value_t = DEFAULT_CHUNK)]
    chunk: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cartier-Manin matrix and p-rank of y^2 = f(x).
    Prank {
        #[command(flatten)]
        field: FieldArgs,
        /// Coefficients c0,c1,...,cd.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
    },
    /// Genera and p-ranks of the three quotients of a fiber product.
    Fiber {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        f1: String,
        #[arg(long, allow_hyphen_values = true)]
        f2: String,
    },
    /// Supersingular Legendre parameters in GF(p^2).
    SsLambdas {
        #[arg(long)]
        p: u64,
    },
    /// Genus-5 (u, v) sweep for one prime.
    Ss5 {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Also store the record under <DIR>/ss5/p=<P>.json.
        #[arg(long)]
        results_dir: Option<PathBuf>,
    },
    /// Genus-5 sweep over every prime 11 mod 12 in a range, with a results cache.
    Ss5Range {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long, default_value = "results")]
        results_dir: PathBuf,
        /// Recompute primes that already have a cached record.
        #[arg(long)]
        force: bool,
    },
    /// All superspecial monic genus-2 models over GF(p^ext), p <= 5.
    EnumerateSsG2 {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Dimension formulas for p-rank strata and boundary components.
    Strata {
        #[command(subcommand)]
        query: StrataCommand,
    },
    /// Rerun a self-check suite.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum StrataCommand {
    /// Dimension of the p-rank <= f locus.
    Dim {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        f: i64,
        #[arg(long, default_value_t = 0)]
        fe: i64,
        /// B_Eg, B_g or H_g.
        #[arg(long, default_value = "B_Eg")]
        space: Space,
    },
    /// Boundary components of the double-cover locus.
    Boundary {
        #[arg(long)]
        g: i64,
    },
    /// Whether a smooth double cover with the given p-ranks exists.
    Exists {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        g: i64,
        #[arg(long)]
        f: i64,
        #[arg(long, default_value_t = 0)]
        fe: i64,
    },
}

/// A failure to report and the exit status that goes with it.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Verification(_)) { 1 } else { 2 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Rendered result: JSON always, rows when the result is tabular.
struct Output {
    json: String,
    rows: Option<(Vec<String>, Vec<Vec<String>>)>,
    default_format: Format,
    /// Exit status after printing (1 for a failed verification).
    code: u8,
}

impl Output {
    fn json<T: Serialize>(value: &T) -> Result<Self, Failure> {
        Ok(Output {
            json: serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?,
            rows: None,
            default_format: Format::Json,
            code: 0,
        })
    }

    fn with_rows(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.rows = Some((header.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    fn render(&self, format: Option<Format>) -> Result<String, Failure> {
        let format = format.unwrap_or(self.default_format);
        let rows = || {
            self.rows
                .as_ref()
                .ok_or_else(|| usage(format!("{format:?} output is not available for this subcommand")))
        };
        match format {
            Format::Json => Ok(self.json.clone() + "\n"),
            Format::Csv => {
                let (header, rows) = rows()?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(header).map_err(|e| usage(e.to_string()))?;
                for r in rows {
                    w.write_record(r).map_err(|e| usage(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| usage(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
            Format::Table => {
                let (header, rows) = rows()?;
                let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
                for r in rows {
                    for (w, c) in width.iter_mut().zip(r) {
                        *w = (*w).max(c.len());
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&width)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(header);
                for r in rows {
                    out += &line(r);
                }
                Ok(out)
            }
        }
    }
}

#[derive(Serialize)]
struct PrankRecord {
    p: u64,
    ext: u32,
    genus: usize,
    matrix: Vec<Vec<String>>,
    p_rank: usize,
    superspecial: bool,
    strategy: Strategy,
}

#[derive(Serialize)]
struct EnumerationRecord {
    p: u64,
    ext: u32,
    count: usize,
    models: Vec<String>,
}

#[derive(Serialize)]
struct DimRecord {
    #[serde(flatten)]
    query: StratumQuery,
    dim: i64,
}

#[derive(Serialize)]
struct ExistsRecord {
    p: u64,
    g: i64,
    f: i64,
    f_e: i64,
    exists: bool,
}

fn parse_poly(ctx: FieldCtx, s: &str) -> Result<DensePoly, Failure> {
    Ok(DensePoly::parse(ctx, s)?)
}

fn sweep_config(p: u64, s: &SweepArgs, threads: usize) -> Result<SweepConfig, Failure> {
    let cfg = SweepConfig {
        p,
        mode: s.mode,
        family: s.family,
        threads,
        chunk: s.chunk,
        ext: s.ext,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn component_rows(c: &BoundaryComponent, out: &mut Vec<Vec<String>>, parent: &str) {
    out.push(vec![
        c.name(),
        parent.to_string(),
        c.g1.to_string(),
        c.g2.to_string(),
        c.dim.to_string(),
        c.contained_in.join(" "),
    ]);
    for part in &c.parts {
        component_rows(part, out, &c.name());
    }
}

fn report_rows(reports: &[Report]) -> Vec<Vec<String>> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| {
                vec![
                    r.suite.to_string(),
                    c.name.clone(),
                    if c.passed { "pass" } else { "FAIL" }.to_string(),
                    c.cases.to_string(),
                    c.detail.clone(),
                ]
            })
        })
        .collect()
}

fn run(cli: &Cli, threads: usize) -> Result<Output, Failure> {
    match &cli.command {
        Command::Prank { field, poly, strategy } => {
            let ctx = field.ctx()?;
            let model = HyperellipticModel::new(parse_poly(ctx, poly)?)?;
            let cd = cartier_matrix_with(&model, (*strategy).into())?;
            let matrix: Vec<Vec<String>> = cd
                .matrix
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect();
            Output::json(&PrankRecord {
                p: field.p,
                ext: field.ext,
                genus: model.genus(),
                superspecial: cd.matrix.is_zero(),
                matrix,
                p_rank: cd.p_rank,
                strategy: cd.strategy,
            })
        }
        Command::Fiber { field, f1, f2 } => {
            let ctx = field.ctx()?;
            let r = prank_fiber_product(&parse_poly(ctx, f1)?, &parse_poly(ctx, f2)?)?;
            Output::json(&r)
        }
        Command::SsLambdas { p } => {
            let ls: Vec<String> = supersingular_lambdas(*p)?.iter().map(|l| l.to_string()).collect();
            let rows = ls.iter().map(|l| vec![l.clone()]).collect();
            Ok(Output::json(&ls)?.with_rows(&["lambda"], rows))
        }
        Command::Ss5 { p, sweep, results_dir } => {
            let cfg = sweep_config(*p, sweep, threads)?;
            let cache = results_dir.as_ref().map(ResultsCache::new).transpose()?;
            let rec = SearchRecord::from(&ss5_sweep(&cfg)?);
            if let Some(c) = cache {
                c.store(&rec)?;
            }
            let rows = rec.solutions.iter().map(|s| s.to_vec()).collect();
            Ok(Output::json(&rec)?.with_rows(&["u", "v"], rows))
        }
        Command::Ss5Range {
            from,
            to,
            sweep,
            results_dir,
            force,
        } => {
            // residue and primality are checked per prime; validate the rest once
            let template = sweep_config(11, sweep, threads)?;
            let cache = ResultsCache::new(results_dir)?;
            let entries = ss5_range(*from, *to, &template, Some(&cache), *force)?;
            let rows: Vec<RangeRow> = entries.iter().map(|e| RangeRow::from(&e.record)).collect();
            let table = rows
                .iter()
                .map(|r| {
                    vec![
                        r.p.to_string(),
                        r.found.to_string(),
                        r.num_solutions.to_string(),
                        r.first_u.clone(),
                        r.first_v.clone(),
                        r.tested.to_string(),
                        r.elapsed_ms.to_string(),
                    ]
                })
                .collect();
            let mut out = Output::json(&rows)?.with_rows(
                &["p", "found", "num_solutions", "first_u", "first_v", "tested", "elapsed_ms"],
                table,
            );
            out.default_format = Format::Csv;
            Ok(out)
        }
        Command::EnumerateSsG2 { field } => {
            let models = superspecial_g2_enumeration(field.p, field.ext)?;
            let models: Vec<String> = models.iter().map(|m| m.f().to_coeff_string()).collect();
            let rows = models.iter().map(|m| vec![m.clone()]).collect();
            Ok(Output::json(&EnumerationRecord {
                p: field.p,
                ext: field.ext,
                count: models.len(),
                models,
            })?
            .with_rows(&["poly"], rows))
        }
        Command::Strata { query } => match query {
            StrataCommand::Dim { g, f, fe, space } => {
                let q = StratumQuery {
                    g: *g,
                    f: *f,
                    f_e: *fe,
                    space: *space,
                };
                let dim = stratum_dim(&q)?;
                Ok(Output::json(&DimRecord { query: q, dim })?.with_rows(
                    &["space", "g", "f", "f_e", "dim"],
                    vec![vec![space.to_string(), g.to_string(), f.to_string(), fe.to_string(), dim.to_string()]],
                ))
            }
            StrataCommand::Boundary { g } => {
                let comps = boundary_components(*g)?;
                let mut rows = Vec::new();
                for c in &comps {
                    component_rows(c, &mut rows, "");
                }
                Ok(Output::json(&comps)?.with_rows(
                    &["component", "part_of", "g1", "g2", "dim", "contained_in"],
                    rows,
                ))
            }
            StrataCommand::Exists { p, g, f, fe } => {
                let exists = smooth_cover_exists(*p, *g, *f, *fe)?;
                Ok(Output::json(&ExistsRecord {
                    p: *p,
                    g: *g,
                    f: *f,
                    f_e: *fe,
                    exists,
                })?
                .with_rows(
                    &["p", "g", "f", "f_e", "exists"],
                    vec![vec![p.to_string(), g.to_string(), f.to_string(), fe.to_string(), exists.to_string()]],
                ))
            }
        },
        Command::Verify { suite, seed } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let reports = suites
                .into_iter()
                .map(|s| run_suite(s, *seed))
                .collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(|r| r.passed);
            let rows = report_rows(&reports);
            let mut out = if reports.len() == 1 {
                Output::json(&reports[0])?
            } else {
                Output::json(&reports)?
            };
            out.code = if passed { 0 } else { 1 };
            Ok(out.with_rows(&["suite", "check", "result", "cases", "detail"], rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.map(|t| t as usize).unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("error: thread pool: {e}");
        return ExitCode::from(2);
    }
    let result = run(&cli, threads).and_then(|out| Ok((out.render(cli.format)?, out.code)));
    match result {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
