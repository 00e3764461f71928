use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use z2z4::codes::{parse_matrix, write_matrix};
use z2z4::constructions::{
    arm_first_order, arm_recursive, block_repetition, macdonald_matrix, mixed_simplex, repetition_code, ArmLayout,
    BlockRepetitionSpec, BlockSpan, MacDonaldParams, SimplexParams, SimplexVariant,
};
use z2z4::covering::{bound_report, covering_radius, covering_radius_auto, Engine};
use z2z4::verify::{run_suite, Grid, Instance, Report};
use z2z4::{Budget, Code, Error, GeneratorMatrix, Metric};

#[derive(Parser)]
#[command(name = "z2z4", version, about = "Z2Z4-additive codes and their covering radii")]
struct Cli {
    /// Ambient budget exponent: sweeps up to 2^N, coset tables up to 2^(N-2). At most 28.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u32>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simplex generator matrix.
    Simplex {
        #[arg(long, value_enum, default_value = "mixed")]
        ring: Ring,
        #[arg(long, value_enum, default_value = "alpha")]
        variant: Variant,
        #[arg(short)]
        k: usize,
        /// Allow shapes beyond the usual size guard.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// MacDonald generator matrix.
    Macdonald {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        u: usize,
        #[arg(long, value_enum, default_value = "alpha")]
        variant: Variant,
        #[command(flatten)]
        out: Output,
    },
    /// Repetition code C_alpha{i} over n pairs.
    Repetition {
        #[arg(short)]
        i: u8,
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Block repetition code.
    BlockRep {
        /// Seven block lengths, comma separated.
        #[arg(long)]
        blocks: String,
        #[arg(long, value_enum, default_value = "generator")]
        span: Span,
        #[command(flatten)]
        out: Output,
    },
    /// Additive Reed-Muller generator.
    Arm {
        #[arg(short, default_value_t = 1)]
        r: usize,
        #[arg(short)]
        m: usize,
        /// Use the explicit first-order matrix for ARM(1, m-1).
        #[arg(long)]
        first_order: bool,
        #[arg(long, value_enum, default_value = "alternating")]
        layout: Layout,
        #[command(flatten)]
        out: Output,
    },
    /// Type and size of a code.
    Info {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        out: Output,
    },
    /// Gray image of the generator rows, or of every codeword.
    Gray {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        codewords: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Exact covering radius.
    CoveringRadius {
        #[arg(long, value_enum, default_value = "lee")]
        metric: MetricArg,
        #[arg(long, value_enum, default_value = "auto")]
        engine: EngineArg,
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        out: Output,
    },
    /// Sphere-covering, Delsarte and printed bounds.
    Bounds {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        out: Output,
    },
    /// Audit of the printed formulas.
    Audit {
        /// `default` or a JSON grid file.
        #[arg(long, default_value = "default")]
        grid: String,
        /// JSON report destination.
        #[arg(long, default_value = "-")]
        out: String,
        /// Plain-text table destination.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Zero the timings so the report is byte-stable.
        #[arg(long)]
        stable: bool,
    },
    /// Serialize a result as JSON or CSV.
    Export {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Generator matrix, for every kind except `audit`.
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long, value_enum, default_value = "lee")]
        metric: MetricArg,
        /// Audit grid, `default` or a JSON file.
        #[arg(long, default_value = "default")]
        grid: String,
        /// Existing audit report to convert instead of running the audit.
        #[arg(long)]
        report: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct MatrixInput {
    /// Matrix file, or `-` for standard input.
    #[arg(long)]
    matrix: String,
}

#[derive(Args)]
struct Output {
    /// Destination file, or `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    Z2,
    Z4,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Alpha,
    Beta,
}

impl From<Variant> for SimplexVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Alpha => SimplexVariant::Alpha,
            Variant::Beta => SimplexVariant::Beta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Span {
    Generator,
    PaperListed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    Alternating,
    HalfSimplex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Hamming,
    Lee,
    Euclidean,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Hamming => Metric::Hamming,
            MetricArg::Lee => Metric::Lee,
            MetricArg::Euclidean => Metric::Euclidean,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Exhaustive,
    Coset,
    Both,
    /// Every engine the budget admits.
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Type,
    Weights,
    Covering,
    Bounds,
    Audit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("csv: {e}"))
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => 2,
                Error::EngineDisagreement { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let budget = match cli.budget {
        Some(n) => Budget::with_ambient_log2(n)?,
        None => Budget::default(),
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Simplex {
            ring,
            variant,
            k,
            force,
            out,
        } => {
            let variant = variant.into();
            let g = match ring {
                Ring::Mixed => mixed_simplex(SimplexParams { k, variant, force })?,
                Ring::Z2 | Ring::Z4 => {
                    let quaternary = matches!(ring, Ring::Z4);
                    Instance::SimplexComponent { k, variant, quaternary }
                        .build(&budget)?
                        .matrix()
                        .clone()
                }
            };
            emit_matrix(&g, &out)
        }
        Command::Macdonald { k, u, variant, out } => {
            let g = macdonald_matrix(MacDonaldParams {
                k,
                u,
                variant: variant.into(),
            })?;
            emit_matrix(&g, &out)
        }
        Command::Repetition { i, n, out } => emit_matrix(&repetition_code(i, n)?, &out),
        Command::BlockRep { blocks, span, out } => {
            let spec: BlockRepetitionSpec = blocks.parse()?;
            let span = match span {
                Span::Generator => BlockSpan::Generator,
                Span::PaperListed => BlockSpan::PaperListed,
            };
            emit_matrix(&block_repetition(&spec, span), &out)
        }
        Command::Arm {
            r,
            m,
            first_order,
            layout,
            out,
        } => {
            let g = if first_order {
                let layout = match layout {
                    Layout::Alternating => ArmLayout::Alternating,
                    Layout::HalfSimplex => ArmLayout::HalfSimplex,
                };
                arm_first_order(m, layout)?
            } else {
                arm_recursive(r, m)?
            };
            emit_matrix(&g, &out)
        }
        Command::Info { input, out } => {
            let code = Code::new(read_matrix(&input.matrix)?);
            let info = serde_json::json!({
                "type": code.code_type(),
                "size_log2": code.size_log2(),
                "rows": code.matrix().len(),
            });
            emit(
                &out.out,
                &(serde_json::to_string_pretty(&info).map_err(Error::from)? + "\n"),
            )
        }
        Command::Gray { input, codewords, out } => {
            let code = Code::new(read_matrix(&input.matrix)?);
            let mut text = String::new();
            if codewords {
                if code.size_log2() > budget.ambient_log2 {
                    return Err(Error::Budget {
                        what: "codeword enumeration",
                        needed_log2: code.size_log2(),
                        limit_log2: budget.ambient_log2,
                    }
                    .into());
                }
                let (words, _, _) = code.distinct_codewords();
                for w in words {
                    text.push_str(&w.gray_map().to_string());
                    text.push('\n');
                }
            } else {
                for r in code.matrix().rows() {
                    text.push_str(&r.gray_map().to_string());
                    text.push('\n');
                }
            }
            emit(&out.out, &text)
        }
        Command::CoveringRadius {
            metric,
            engine,
            input,
            out,
        } => {
            let code = Code::new(read_matrix(&input.matrix)?);
            let start = Instant::now();
            let metric = metric.into();
            let r = match engine {
                EngineArg::Exhaustive => covering_radius(&code, metric, Engine::Exhaustive, &budget)?,
                EngineArg::Coset => covering_radius(&code, metric, Engine::Coset, &budget)?,
                EngineArg::Both => covering_radius(&code, metric, Engine::Both, &budget)?,
                EngineArg::Auto => covering_radius_auto(&code, metric, &budget)?,
            };
            let json = serde_json::json!({
                "metric": r.metric,
                "radius": r.radius,
                "witness": r.witness.to_string(),
                "engine": r.engine,
                "elapsed_ms": start.elapsed().as_millis() as u64,
            });
            emit(
                &out.out,
                &(serde_json::to_string_pretty(&json).map_err(Error::from)? + "\n"),
            )
        }
        Command::Bounds { input, out } => {
            let code = Code::new(read_matrix(&input.matrix)?);
            let report = bound_report(&code, &budget)?;
            emit(&out.out, &to_json(&report)?)
        }
        Command::Audit {
            grid,
            out,
            table,
            seed,
            stable,
        } => {
            let report = audit(&grid, seed, stable, &budget)?;
            emit(&out, &report.to_json()?)?;
            if let Some(path) = table {
                emit(&path, &report.to_table())?;
            }
            Ok(())
        }
        Command::Export {
            kind,
            format,
            matrix,
            metric,
            grid,
            report,
            out,
        } => export(kind, format, matrix, metric.into(), &grid, report, &out.out, &budget),
    }
}

fn audit(grid: &str, seed: Option<u64>, stable: bool, budget: &Budget) -> Result<Report, Failure> {
    let mut grid = if grid == "default" {
        Grid::default()
    } else {
        Grid::from_json(&read_input(grid)?)?
    };
    if let Some(s) = seed {
        grid.seed = s;
    }
    let mut report = run_suite(&grid, budget)?;
    if stable {
        report.stabilize();
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn export(
    kind: Kind,
    format: Format,
    matrix: Option<String>,
    metric: Metric,
    grid: &str,
    report: Option<String>,
    out: &str,
    budget: &Budget,
) -> Outcome {
    let code = || -> Result<Code, Failure> {
        let path = matrix
            .as_deref()
            .ok_or_else(|| Failure::Usage("--matrix is required for this kind".into()))?;
        Ok(Code::new(read_matrix(path)?))
    };
    let text = match kind {
        Kind::Type => {
            let t = code()?.code_type();
            match format {
                Format::Json => to_json(&t)?,
                Format::Csv => csv_rows(
                    &["gamma", "delta", "lambda", "mu", "kappa"],
                    [[t.gamma, t.delta, t.lambda, t.mu, t.kappa].map(|x| x.to_string())],
                )?,
            }
        }
        Kind::Weights => {
            let w = code()?.weight_distribution(metric, budget)?;
            match format {
                Format::Json => to_json(&w)?,
                Format::Csv => csv_rows(
                    &["metric", "weight", "count"],
                    w.counts
                        .iter()
                        .map(|(k, v)| [metric.name().to_string(), k.to_string(), v.to_string()]),
                )?,
            }
        }
        Kind::Covering => {
            let r = covering_radius_auto(&code()?, metric, budget)?;
            match format {
                Format::Json => to_json(&r)?,
                Format::Csv => csv_rows(
                    &["metric", "radius", "witness", "engine"],
                    [[
                        r.metric.name().to_string(),
                        r.radius.to_string(),
                        r.witness.to_string(),
                        r.engine.name().to_string(),
                    ]],
                )?,
            }
        }
        Kind::Bounds => {
            let b = bound_report(&code()?, budget)?;
            match format {
                Format::Json => to_json(&b)?,
                Format::Csv => {
                    let value = serde_json::to_value(&b).map_err(Error::from)?;
                    let mut rows = Vec::new();
                    flatten("", &value, &mut rows);
                    csv_rows(&["field", "value"], rows.into_iter().map(|(k, v)| [k, v]))?
                }
            }
        }
        Kind::Audit => {
            let report = match report {
                Some(path) => Report {
                    entries: serde_json::from_str(&read_input(&path)?).map_err(Error::from)?,
                },
                None => audit(grid, None, true, budget)?,
            };
            match format {
                Format::Json => report.to_json()?,
                Format::Csv => csv_rows(
                    &[
                        "claim_id",
                        "params",
                        "conventions",
                        "computed",
                        "verdict",
                        "engine",
                        "elapsed_ms",
                    ],
                    report.entries.iter().map(|e| {
                        [
                            e.claim_id.clone(),
                            serde_json::to_string(&e.params).unwrap_or_default(),
                            serde_json::to_string(&e.conventions).unwrap_or_default(),
                            e.computed.as_ref().map(ToString::to_string).unwrap_or_default(),
                            e.verdict.to_string(),
                            e.engine.clone().unwrap_or_default(),
                            e.elapsed_ms.to_string(),
                        ]
                    }),
                )?,
            }
        }
    };
    emit(out, &text)
}

/// Leaf fields of a JSON value as dotted paths.
fn flatten(prefix: &str, v: &serde_json::Value, out: &mut Vec<(String, String)>) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        serde_json::Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_rows<const N: usize>(header: &[&str], rows: impl IntoIterator<Item = [String; N]>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(v).map_err(Error::from)? + "\n")
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(PathBuf::from(path))?)
    }
}

fn read_matrix(path: &str) -> Result<GeneratorMatrix, Failure> {
    Ok(parse_matrix(&read_input(path)?)?)
}

fn emit_matrix(g: &GeneratorMatrix, out: &Output) -> Outcome {
    emit(&out.out, &write_matrix(g))
}

fn emit(path: &str, text: &str) -> Outcome {
    if path == "-" {
        let mut stdout = io::stdout().lock();
        stdout.write_all(text.as_bytes())?;
        stdout.flush()?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}
