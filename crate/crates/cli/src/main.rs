//! Command-line front end for matroid bingo analysis.
//!
//! Every capability of the library is reachable from here: validation,
//! exact winning probabilities (several engines), timed profiles, bounds,
//! Tutte polynomials, corpus scanning, equitability, seeded simulation, the
//! monotonicity threshold, and the generator constructions.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use matroid_bingo::format::{
    beta_table_to_csv, beta_table_to_json, compact_circuit, matroid_from_json,
    parse_inline_circuits, tutte_to_json, write_circuit_text, SubsetOrder,
};
use matroid_bingo::prob::{
    beta_inclusion_exclusion, beta_table, brute_force_beta, equal_size_ties,
    equitable_from_table, monte_carlo, timed_beta, violations_from_table, BetaTable,
};
use matroid_bingo::ratio::{decimal4, format_fraction};
use matroid_bingo::scan::{
    exit_code, indicator_stream_to_circuit_text, parse_circuit_stream, parse_indicator_stream,
    persist_results, render_results, scan, CorpusRecord, OutputFormat, ScanOptions,
};
use matroid_bingo::set::ElementSet;
use matroid_bingo::{bounds, gen, graph, pg, threshold, tutte, validate_circuits, Matroid};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EX_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "matroid-bingo",
    about = "Exact winning-probability analysis for matroid bingo",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand that consumes one matroid: a file path
/// (or `-` for stdin), or an inline circuit list.
#[derive(Args)]
struct MatroidInput {
    /// Input file in circuit text or JSON format; `-` reads stdin
    file: Option<PathBuf>,

    /// Inline circuits, `;`-separated; digit-per-element for n <= 9,
    /// comma-separated labels otherwise (e.g. "127;159;34689")
    #[arg(long)]
    circuits: Option<String>,

    /// Ground-set size for --circuits
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BetaMethod {
    /// Per-round engine over independent-set counts of M/C (default)
    Timed,
    /// Inclusion-exclusion over circuit subsets
    Inclexcl,
    /// Run both exact engines and fail loudly on any mismatch
    Both,
    /// Play all n! calling orders (n <= 10)
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the circuit axioms and report failures with tie witnesses
    Validate(MatroidInput),

    /// Exact winning probability of every card
    Beta {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long, value_enum, default_value = "timed")]
        method: BetaMethod,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },

    /// Per-round winning probabilities of one card
    Timed {
        #[command(flatten)]
        input: MatroidInput,
        /// The card, e.g. `1,2,7` (or `127` for single-digit labels)
        #[arg(long)]
        circuit: String,
    },

    /// Closed-form bounds for given (n, r, |C|) and optional coloop count
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        csize: usize,
        #[arg(long, default_value_t = 0)]
        coloops: usize,
    },

    /// Tutte polynomial coefficients as JSON
    Tutte(MatroidInput),

    /// Analyze a corpus of matroids in parallel with deterministic output
    Scan {
        /// Corpus file; `-` reads stdin
        corpus: PathBuf,
        /// Worker threads (default: MATROID_BINGO_WORKERS or 1)
        #[arg(long)]
        workers: Option<usize>,
        /// Write results to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: ScanFormat,
        /// Embed the full beta table in each result record
        #[arg(long)]
        emit_tables: bool,
        /// Force the input format instead of auto-detecting
        #[arg(long, value_enum, default_value = "auto")]
        input_format: InputFormat,
        /// Subset order for basis-indicator input
        #[arg(long, value_enum, default_value = "revlex")]
        order: OrderFlag,
    },

    /// Report whether all cards have equal winning probability
    Equitable(MatroidInput),

    /// Seeded Monte Carlo simulation (SplitMix64; seed is required and echoed)
    Simulate {
        #[command(flatten)]
        input: MatroidInput,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },

    /// Monotonicity threshold N(r): ranks r on >= N(r) elements never violate
    Threshold {
        #[arg(long)]
        r: usize,
    },

    /// Emit a constructed matroid in circuit text format
    #[command(subcommand)]
    Gen(GenCommand),

    /// Convert a basis-indicator corpus to circuit text (adds #order header)
    Convert {
        /// Indicator file; `-` reads stdin
        file: PathBuf,
        #[arg(long, value_enum, default_value = "revlex")]
        order: OrderFlag,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Circuits,
    Json,
    Indicator,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderFlag {
    Revlex,
    Lex,
}

impl From<OrderFlag> for SubsetOrder {
    fn from(o: OrderFlag) -> SubsetOrder {
        match o {
            OrderFlag::Revlex => SubsetOrder::RevLex,
            OrderFlag::Lex => SubsetOrder::Lex,
        }
    }
}

#[derive(Subcommand)]
enum GenCommand {
    /// Uniform matroid U_{r,n}
    Uniform {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Graphic matroid of a multigraph; edges like "1-2,2-3,3-1"
    Graphic {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: String,
    },
    /// Dual of the projective geometry PG(dim, q), q prime
    Pgdual {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        q: u64,
    },
    /// Matroid attaining the upper bound for (n, r, d)
    SharpUpper {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
    /// Matroid attaining the sharp lower bound for (n, r, d)
    SharpLower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EX_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run with --help for details");
            ExitCode::from(EX_USAGE)
        }
        Err(CliError::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum CliError {
    /// Bad flag combinations: exit 64.
    Usage(String),
    /// Computation or I/O failures: exit 1.
    Run(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn run(msg: impl Into<String>) -> Self {
        CliError::Run(msg.into())
    }
}

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Run(e.to_string())
    }
}

type CliResult = Result<ExitCode, CliError>;

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Validate(input) => cmd_validate(&input),
        Command::Beta { input, method, format } => cmd_beta(&input, method, format),
        Command::Timed { input, circuit } => cmd_timed(&input, &circuit),
        Command::Bounds { n, r, csize, coloops } => cmd_bounds(n, r, csize, coloops),
        Command::Tutte(input) => cmd_tutte(&input),
        Command::Scan { corpus, workers, out, format, emit_tables, input_format, order } => {
            cmd_scan(&corpus, workers, out.as_deref(), format, emit_tables, input_format, order)
        }
        Command::Equitable(input) => cmd_equitable(&input),
        Command::Simulate { input, trials, seed } => cmd_simulate(&input, trials, seed),
        Command::Threshold { r } => {
            let n = threshold::threshold_n(r)?;
            println!("{n}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(gen_cmd) => cmd_gen(gen_cmd),
        Command::Convert { file, order, out } => cmd_convert(&file, order, out.as_deref()),
    }
}

fn read_input(path: &std::path::Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::run(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::run(format!("{}: {e}", path.display())))
    }
}

/// Loads exactly one matroid from the input flags.
fn load_matroid(input: &MatroidInput) -> Result<Matroid, CliError> {
    match (&input.file, &input.circuits) {
        (Some(_), Some(_)) => Err(CliError::usage("give either a file or --circuits, not both")),
        (None, None) => Err(CliError::usage("no input: give a file or --circuits with --n")),
        (None, Some(spec)) => {
            let n = input.n.ok_or_else(|| CliError::usage("--circuits requires --n"))?;
            parse_inline_circuits(spec, n).map_err(CliError::from)
        }
        (Some(path), None) => {
            let text = read_input(path)?;
            if text.trim_start().starts_with('{') {
                return matroid_from_json(&text).map_err(CliError::from);
            }
            let records: Vec<_> = parse_circuit_stream(&text).collect();
            match records.len() {
                0 => Err(CliError::run("input contains no matroid records")),
                1 => records
                    .into_iter()
                    .next()
                    .unwrap()
                    .map(|r| r.matroid)
                    .map_err(CliError::from),
                k => Err(CliError::run(format!(
                    "input contains {k} records; this command takes exactly one"
                ))),
            }
        }
    }
}

fn cmd_validate(input: &MatroidInput) -> CliResult {
    // reparse manually so invalid families are reported, not rejected
    let (n, circuits) = match (&input.file, &input.circuits) {
        (None, Some(spec)) => {
            let n = input.n.ok_or_else(|| CliError::usage("--circuits requires --n"))?;
            match parse_inline_circuits(spec, n) {
                Ok(m) => (n, m.circuits().to_vec()),
                Err(matroid_bingo::Error::NotAMatroid(report)) => {
                    println!("invalid: {report}");
                    return Ok(ExitCode::from(1));
                }
                Err(e) => return Err(e.into()),
            }
        }
        (Some(path), None) => {
            let text = read_input(path)?;
            if text.trim_start().starts_with('{') {
                match matroid_from_json(&text) {
                    Ok(m) => (m.n(), m.circuits().to_vec()),
                    Err(e) => {
                        println!("invalid: {e}");
                        return Ok(ExitCode::from(1));
                    }
                }
            } else {
                match parse_circuit_stream(&text).next() {
                    None => return Err(CliError::run("input contains no matroid records")),
                    Some(Ok(rec)) => (rec.matroid.n(), rec.matroid.circuits().to_vec()),
                    Some(Err(e)) => {
                        println!("invalid: {e}");
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        _ => return Err(CliError::usage("give either a file or --circuits with --n")),
    };
    let report = validate_circuits(n, &circuits)?;
    if report.is_valid() {
        println!("valid: {} circuits on {} elements", circuits.len(), n);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("invalid: {report}");
        Ok(ExitCode::from(1))
    }
}

fn print_beta_rows(table: &BetaTable) {
    for entry in table.display_order() {
        println!(
            "{} {} {}",
            compact_circuit(entry.circuit),
            format_fraction(&entry.beta),
            decimal4(&entry.beta)
        );
    }
}

fn cmd_beta(input: &MatroidInput, method: BetaMethod, format: TableFormat) -> CliResult {
    let m = load_matroid(input)?;
    if method == BetaMethod::Inclexcl {
        if format != TableFormat::Text {
            return Err(CliError::usage(
                "--method inclexcl produces no timed profiles; use --format text",
            ));
        }
        let mut rows: Vec<(ElementSet, _)> = m
            .circuits()
            .iter()
            .map(|&c| beta_inclusion_exclusion(&m, c).map(|b| (c, b)))
            .collect::<Result<_, _>>()?;
        rows.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (c, b) in rows {
            println!("{} {} {}", compact_circuit(c), format_fraction(&b), decimal4(&b));
        }
        return Ok(ExitCode::SUCCESS);
    }

    let table = match method {
        BetaMethod::Brute => brute_force_beta(&m)?,
        _ => beta_table(&m)?,
    };
    if method == BetaMethod::Both {
        for entry in table.entries() {
            let alt = beta_inclusion_exclusion(&m, entry.circuit)?;
            if alt != entry.beta {
                return Err(CliError::run(format!(
                    "engine mismatch on circuit {}: timed {} vs inclusion-exclusion {}",
                    entry.circuit,
                    format_fraction(&entry.beta),
                    format_fraction(&alt)
                )));
            }
        }
    }
    match format {
        TableFormat::Text => print_beta_rows(&table),
        TableFormat::Json => println!("{}", beta_table_to_json(&table)),
        TableFormat::Csv => print!("{}", beta_table_to_csv(&table)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_timed(input: &MatroidInput, circuit: &str) -> CliResult {
    let m = load_matroid(input)?;
    let indices: Vec<usize> = if circuit.contains(',') {
        circuit
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::usage(format!("bad --circuit: {e}")))?
    } else {
        circuit
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| CliError::usage("bad --circuit"))
            })
            .collect::<Result<_, _>>()?
    };
    let c = ElementSet::from_indices(indices.iter().copied())
        .ok_or_else(|| CliError::usage("--circuit elements out of range"))?;
    let profile = timed_beta(&m, c)?;
    for (t, v) in profile.values().iter().enumerate() {
        println!("t={} {} {}", t + 1, format_fraction(v), decimal4(v));
    }
    let total = profile.total();
    println!("total {} {}", format_fraction(&total), decimal4(&total));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(n: usize, r: usize, csize: usize, coloops: usize) -> CliResult {
    let p = bounds::BoundParams::with_coloops(n, r, csize, coloops)?;
    let upper = bounds::upper_bound(&p);
    let sharp = bounds::lower_bound_sharp(&p);
    let simple = bounds::lower_bound_simple(&p);
    println!("upper {} {}", format_fraction(&upper), decimal4(&upper));
    println!("lower_sharp {} {}", format_fraction(&sharp), decimal4(&sharp));
    println!("lower_simple {} {}", format_fraction(&simple), decimal4(&simple));
    Ok(ExitCode::SUCCESS)
}

fn cmd_tutte(input: &MatroidInput) -> CliResult {
    let m = load_matroid(input)?;
    println!("{}", tutte_to_json(&tutte::tutte(&m)));
    Ok(ExitCode::SUCCESS)
}

fn detect_format(text: &str) -> InputFormat {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with("n=") {
            return InputFormat::Circuits;
        }
        if t.starts_with('{') {
            return InputFormat::Json;
        }
        return InputFormat::Indicator;
    }
    InputFormat::Circuits
}

fn cmd_scan(
    corpus: &std::path::Path,
    workers: Option<usize>,
    out: Option<&std::path::Path>,
    format: ScanFormat,
    emit_tables: bool,
    input_format: InputFormat,
    order: OrderFlag,
) -> CliResult {
    let text = read_input(corpus)?;
    let workers = workers
        .or_else(|| {
            std::env::var("MATROID_BINGO_WORKERS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1);
    let effective = match input_format {
        InputFormat::Auto => detect_format(&text),
        other => other,
    };
    let records: Vec<_> = match effective {
        InputFormat::Circuits | InputFormat::Auto => parse_circuit_stream(&text).collect(),
        InputFormat::Json => match matroid_from_json(&text) {
            Ok(m) => vec![Ok(CorpusRecord { index: 0, source_id: None, matroid: m })],
            Err(e) => vec![Err(e)],
        },
        InputFormat::Indicator => parse_indicator_stream(&text, order.into()),
    };
    let options = ScanOptions { emit_tables, workers };
    let output = scan(records, &options);
    for issue in &output.issues {
        eprintln!("record {}: {}", issue.index, issue.message);
    }
    let fmt = match format {
        ScanFormat::Jsonl => OutputFormat::Jsonl,
        ScanFormat::Csv => OutputFormat::Csv,
    };
    match out {
        Some(path) => persist_results(&output, path, fmt)?,
        None => print!("{}", render_results(&output, fmt)),
    }
    Ok(ExitCode::from(exit_code(&output) as u8))
}

fn cmd_equitable(input: &MatroidInput) -> CliResult {
    let m = load_matroid(input)?;
    let table = beta_table(&m)?;
    if equitable_from_table(&table) {
        let b = &table.entries()[0].beta;
        println!("equitable {} {}", format_fraction(b), decimal4(b));
    } else {
        let violations = violations_from_table(&table).len();
        let ties = equal_size_ties(&table).len();
        println!("not equitable ({} betas, {violations} violations, {ties} equal-size ties)",
                 table.entries().len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(input: &MatroidInput, trials: u64, seed: u64) -> CliResult {
    let m = load_matroid(input)?;
    let table = monte_carlo(&m, trials, seed)?;
    print!("{table}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen(cmd: GenCommand) -> CliResult {
    let (matroid, note) = match cmd {
        GenCommand::Uniform { r, n } => {
            (Matroid::uniform(r, n)?, None)
        }
        GenCommand::Graphic { vertices, edges } => {
            let list = parse_edges(&edges)?;
            (graph::from_graph(vertices, &list)?, None)
        }
        GenCommand::Pgdual { dim, q } => {
            (pg::pg_dual(dim, q)?, None)
        }
        GenCommand::SharpUpper { n, r, d } => {
            let (m, c) = gen::sharp_upper(n, r, d)?;
            (m, Some(c))
        }
        GenCommand::SharpLower { n, r, d } => {
            let (m, c) = gen::sharp_lower(n, r, d)?;
            (m, Some(c))
        }
    };
    if let Some(c) = note {
        let labels: Vec<String> = c.indices().iter().map(|i| i.to_string()).collect();
        println!("# distinguished circuit: {}", labels.join(" "));
    }
    print!("{}", write_circuit_text(&matroid, None));
    Ok(ExitCode::SUCCESS)
}

fn parse_edges(spec: &str) -> Result<Vec<(usize, usize)>, CliError> {
    spec.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (u, v) = t
                .trim()
                .split_once('-')
                .ok_or_else(|| CliError::usage(format!("bad edge '{t}', expected 'u-v'")))?;
            let u = u
                .trim()
                .parse()
                .map_err(|e| CliError::usage(format!("bad edge '{t}': {e}")))?;
            let v = v
                .trim()
                .parse()
                .map_err(|e| CliError::usage(format!("bad edge '{t}': {e}")))?;
            Ok((u, v))
        })
        .collect()
}

fn cmd_convert(
    file: &std::path::Path,
    order: OrderFlag,
    out: Option<&std::path::Path>,
) -> CliResult {
    let text = read_input(file)?;
    let converted = indicator_stream_to_circuit_text(&text, order.into())?;
    match out {
        Some(path) => std::fs::write(path, converted)
            .map_err(|e| CliError::run(format!("{}: {e}", path.display())))?,
        None => print!("{converted}"),
    }
    Ok(ExitCode::SUCCESS)
}
