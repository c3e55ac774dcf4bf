//! Corpus scanning: parse matroid streams, analyze every record, and
//! persist census results.
//!
//! Scanning is embarrassingly parallel at one-matroid granularity. The pool
//! is producer / workers / single reorder buffer: workers pull records from
//! a shared queue and the collector re-emits results in input order, so the
//! output is byte-identical for any worker count. A panicking worker only
//! poisons its own record, which is reported as an issue with its index.

use crate::bounds::{lower_bound_sharp, lower_bound_simple, upper_bound, BoundParams};
use crate::format::{
    parse_basis_indicator, write_circuit_text, BetaTableJson, ParseError, SubsetOrder,
};
use crate::matroid::Matroid;
use crate::prob::{
    beta_table, equal_size_ties, equitable_from_table, violations_from_table, BetaTable,
    ViolationReport,
};
use crate::ratio::{decimal4, format_fraction};
use crate::seq::{has_contiguous_support, is_log_concave, is_unimodal};
use crate::set::ElementSet;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::mpsc;
use std::sync::Mutex;

/// One matroid pulled from a corpus stream.
#[derive(Clone, Debug)]
pub struct CorpusRecord {
    /// 0-based arrival index, strictly increasing within a stream.
    pub index: usize,
    pub source_id: Option<String>,
    pub matroid: Matroid,
}

/// Streaming parser for the circuit text format; yields one record or error
/// per blank-line-separated block. Lines starting with `#` are skipped.
pub struct CircuitTextStream<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    next_index: usize,
}

pub fn parse_circuit_stream(input: &str) -> CircuitTextStream<'_> {
    CircuitTextStream { lines: input.lines().enumerate().peekable(), next_index: 0 }
}

impl<'a> CircuitTextStream<'a> {
    /// Consumes the rest of the current block (up to a blank line) so the
    /// stream can continue after an error.
    fn skip_block(&mut self) {
        while let Some((_, line)) = self.lines.peek() {
            if line.trim().is_empty() {
                break;
            }
            self.lines.next();
        }
    }

    fn parse_block(&mut self, start: usize, header: &str) -> Result<CorpusRecord, ParseError> {
        let n: usize = header
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| ParseError::new(start, format!("expected 'n=<int>', found '{header}'")))?
            .trim()
            .parse()
            .map_err(|e| ParseError::new(start, format!("bad ground-set size: {e}")))?;
        let mut source_id = None;
        let mut circuits = Vec::new();
        while let Some(&(i, line)) = self.lines.peek() {
            let trimmed = line.trim();
            if trimmed.is_empty() {
                break;
            }
            self.lines.next();
            if trimmed.starts_with('#') {
                continue;
            }
            if let Some(id) = trimmed.strip_prefix("id=") {
                source_id = Some(id.trim().to_string());
                continue;
            }
            let indices: Vec<usize> = trimmed
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| ParseError::new(i + 1, format!("bad circuit line: {e}")))?;
            let circuit = ElementSet::from_indices(indices.iter().copied())
                .ok_or_else(|| ParseError::new(i + 1, "element outside 1..=64".to_string()))?;
            circuits.push(circuit);
        }
        let matroid = Matroid::new(n, circuits)
            .map_err(|e| ParseError::new(start, e.to_string()))?;
        let index = self.next_index;
        self.next_index += 1;
        Ok(CorpusRecord { index, source_id, matroid })
    }
}

impl<'a> Iterator for CircuitTextStream<'a> {
    type Item = Result<CorpusRecord, ParseError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let (i, line) = self.lines.next()?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let result = self.parse_block(i + 1, trimmed);
            if result.is_err() {
                self.skip_block();
                // a failed block still consumes an index slot
                self.next_index += 1;
            }
            return Some(result);
        }
    }
}

/// Parses a basis-indicator corpus: optional `#order=revlex|lex` header,
/// then one record per line as `<n> <r> <indicator>`.
pub fn parse_indicator_stream(
    input: &str,
    default_order: SubsetOrder,
) -> Vec<Result<CorpusRecord, ParseError>> {
    let mut order = default_order;
    let mut out = Vec::new();
    let mut index = 0;
    for (i, line) in input.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("#order=") {
            match SubsetOrder::parse(rest.trim()) {
                Some(o) => order = o,
                None => out.push(Err(ParseError::new(i + 1, format!("unknown order '{rest}'")))),
            }
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = trimmed.split_whitespace().collect();
        let parsed = (|| -> Result<CorpusRecord, ParseError> {
            if parts.len() != 3 {
                return Err(ParseError::new(i + 1, "expected '<n> <r> <indicator>'".to_string()));
            }
            let n: usize = parts[0]
                .parse()
                .map_err(|e| ParseError::new(i + 1, format!("bad n: {e}")))?;
            let r: usize = parts[1]
                .parse()
                .map_err(|e| ParseError::new(i + 1, format!("bad r: {e}")))?;
            let matroid = parse_basis_indicator(n, r, parts[2], order)
                .map_err(|e| ParseError::new(i + 1, e.to_string()))?;
            Ok(CorpusRecord { index, source_id: None, matroid })
        })();
        index += 1;
        out.push(parsed);
    }
    out
}

/// Converts an indicator corpus to circuit text, prefixed with the
/// self-describing `#order=` header naming the convention that was used.
pub fn indicator_stream_to_circuit_text(
    input: &str,
    default_order: SubsetOrder,
) -> Result<String, ParseError> {
    let mut out = format!("#order={}\n", default_order.name());
    for record in parse_indicator_stream(input, default_order) {
        let record = record?;
        out.push('\n');
        out.push_str(&write_circuit_text(&record.matroid, record.source_id.as_deref()));
    }
    Ok(out)
}

/// Analysis of one corpus record.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub index: usize,
    pub source_id: Option<String>,
    pub n: usize,
    pub rank: usize,
    pub circuit_count: usize,
    pub violation_count: usize,
    pub violations: ViolationReport,
    pub equitable: bool,
    /// Every beta inside `[lower_simple, upper]` and above the sharp lower
    /// bound — must hold for every record; a failure means an
    /// implementation bug or corpus corruption.
    pub bounds_ok: bool,
    /// Every timed profile log-concave, unimodal, contiguous — same
    /// contract as `bounds_ok`.
    pub log_concave_ok: bool,
    pub equal_size_ties: usize,
    pub beta_table: Option<BetaTable>,
}

/// A record that could not be analyzed (parse failure or worker panic).
#[derive(Clone, Debug)]
pub struct ScanIssue {
    pub index: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub emit_tables: bool,
    pub workers: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { emit_tables: false, workers: 1 }
    }
}

/// Aggregates over one scan run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub records: usize,
    pub violating_records: usize,
    pub violation_pairs: usize,
    pub errors: usize,
    pub bound_failures: usize,
    pub log_concavity_failures: usize,
    /// Violation-pair counts keyed by (n, rank).
    pub by_size_rank: BTreeMap<(usize, usize), usize>,
}

#[derive(Debug)]
pub struct ScanOutput {
    pub results: Vec<ScanResult>,
    pub issues: Vec<ScanIssue>,
    pub summary: ScanSummary,
}

/// Full analysis of one record. Circuit-free matroids are vacuously clean.
pub fn analyze(record: &CorpusRecord, emit_tables: bool) -> ScanResult {
    let m = &record.matroid;
    if m.circuits().is_empty() {
        return ScanResult {
            index: record.index,
            source_id: record.source_id.clone(),
            n: m.n(),
            rank: m.rank(),
            circuit_count: 0,
            violation_count: 0,
            violations: ViolationReport::default(),
            equitable: true,
            bounds_ok: true,
            log_concave_ok: true,
            equal_size_ties: 0,
            beta_table: None,
        };
    }
    let table = beta_table(m).expect("matroid with circuits has a beta table");
    let violations = violations_from_table(&table);
    let equitable = equitable_from_table(&table);
    let ties = equal_size_ties(&table).len();

    let n = table.n();
    let r = table.rank();
    let coloops = m.loops_and_coloops().1.len();
    let bounds_ok = table.entries().iter().all(|e| {
        let p = match BoundParams::with_coloops(n, r, e.circuit.len(), coloops) {
            Ok(p) => p,
            Err(_) => return false,
        };
        lower_bound_simple(&p) <= e.beta
            && lower_bound_sharp(&p) <= e.beta
            && e.beta <= upper_bound(&p)
    });
    let log_concave_ok = table.entries().iter().all(|e| {
        is_log_concave(e.timed.values())
            && is_unimodal(e.timed.values())
            && has_contiguous_support(e.timed.values())
    });

    ScanResult {
        index: record.index,
        source_id: record.source_id.clone(),
        n,
        rank: r,
        circuit_count: m.circuits().len(),
        violation_count: violations.len(),
        violations,
        equitable,
        bounds_ok,
        log_concave_ok,
        equal_size_ties: ties,
        beta_table: emit_tables.then_some(table),
    }
}

enum Slot {
    Done(ScanResult),
    Failed(ScanIssue),
}

/// Scans a record stream. Results come back in input order regardless of
/// `workers`, so output is deterministic.
pub fn scan<I>(records: I, options: &ScanOptions) -> ScanOutput
where
    I: IntoIterator<Item = Result<CorpusRecord, ParseError>>,
{
    let workers = options.workers.max(1);
    let emit_tables = options.emit_tables;

    let mut slots: BTreeMap<usize, Slot> = BTreeMap::new();
    let mut arrivals = 0usize;

    if workers == 1 {
        for (arrival, record) in records.into_iter().enumerate() {
            arrivals += 1;
            slots.insert(arrival, run_one(arrival, record, emit_tables));
        }
    } else {
        let inputs: Vec<(usize, Result<CorpusRecord, ParseError>)> =
            records.into_iter().enumerate().collect();
        arrivals = inputs.len();
        let queue = Mutex::new(inputs.into_iter());
        let (tx, rx) = mpsc::channel::<(usize, Slot)>();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                let tx = tx.clone();
                let queue = &queue;
                scope.spawn(move || loop {
                    let next = queue.lock().expect("queue lock").next();
                    let Some((arrival, record)) = next else { break };
                    let slot = run_one(arrival, record, emit_tables);
                    if tx.send((arrival, slot)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            for (arrival, slot) in rx {
                slots.insert(arrival, slot);
            }
        });
    }

    let mut results = Vec::new();
    let mut issues = Vec::new();
    for (_, slot) in slots {
        match slot {
            Slot::Done(r) => results.push(r),
            Slot::Failed(i) => issues.push(i),
        }
    }
    let summary = summarize(&results, issues.len(), arrivals);
    ScanOutput { results, issues, summary }
}

fn run_one(arrival: usize, record: Result<CorpusRecord, ParseError>, emit_tables: bool) -> Slot {
    match record {
        Err(e) => Slot::Failed(ScanIssue { index: arrival, message: e.to_string() }),
        Ok(rec) => {
            let index = rec.index;
            match catch_unwind(AssertUnwindSafe(|| analyze(&rec, emit_tables))) {
                Ok(result) => Slot::Done(result),
                Err(panic) => {
                    let message = panic
                        .downcast_ref::<&str>()
                        .map(|s| s.to_string())
                        .or_else(|| panic.downcast_ref::<String>().cloned())
                        .unwrap_or_else(|| "worker panicked".to_string());
                    Slot::Failed(ScanIssue {
                        index,
                        message: format!("record {index}: analysis panicked: {message}"),
                    })
                }
            }
        }
    }
}

fn summarize(results: &[ScanResult], errors: usize, arrivals: usize) -> ScanSummary {
    let mut summary = ScanSummary {
        records: arrivals,
        errors,
        ..ScanSummary::default()
    };
    for r in results {
        if r.violation_count > 0 {
            summary.violating_records += 1;
            summary.violation_pairs += r.violation_count;
            *summary.by_size_rank.entry((r.n, r.rank)).or_default() += r.violation_count;
        }
        if !r.bounds_ok {
            summary.bound_failures += 1;
        }
        if !r.log_concave_ok {
            summary.log_concavity_failures += 1;
        }
    }
    summary
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "jsonl" => Some(OutputFormat::Jsonl),
            "csv" => Some(OutputFormat::Csv),
            _ => None,
        }
    }
}

#[derive(Serialize)]
struct ViolationJson {
    longer: Vec<usize>,
    shorter: Vec<usize>,
    beta_longer: String,
    beta_shorter: String,
}

#[derive(Serialize)]
struct ScanResultJson {
    index: usize,
    source_id: Option<String>,
    n: usize,
    r: usize,
    circuit_count: usize,
    violation_count: usize,
    violations: Vec<ViolationJson>,
    equitable: bool,
    bounds_ok: bool,
    log_concave_ok: bool,
    equal_size_ties: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_table: Option<BetaTableJson>,
}

#[derive(Serialize)]
struct SummaryJson {
    records: usize,
    violating_records: usize,
    violation_pairs: usize,
    errors: usize,
    bound_failures: usize,
    log_concavity_failures: usize,
    by_size_rank: Vec<(usize, usize, usize)>,
}

/// Renders results plus the trailing `#summary` line.
pub fn render_results(output: &ScanOutput, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Jsonl => {
            for r in &output.results {
                let json = ScanResultJson {
                    index: r.index,
                    source_id: r.source_id.clone(),
                    n: r.n,
                    r: r.rank,
                    circuit_count: r.circuit_count,
                    violation_count: r.violation_count,
                    violations: r
                        .violations
                        .pairs
                        .iter()
                        .map(|p| ViolationJson {
                            longer: p.longer.indices(),
                            shorter: p.shorter.indices(),
                            beta_longer: format_fraction(&p.beta_longer),
                            beta_shorter: format_fraction(&p.beta_shorter),
                        })
                        .collect(),
                    equitable: r.equitable,
                    bounds_ok: r.bounds_ok,
                    log_concave_ok: r.log_concave_ok,
                    equal_size_ties: r.equal_size_ties,
                    beta_table: r.beta_table.as_ref().map(BetaTableJson::from_table),
                };
                out.push_str(&serde_json::to_string(&json).expect("plain struct serializes"));
                out.push('\n');
            }
        }
        OutputFormat::Csv => {
            out.push_str("index,n,r,longer,shorter,beta_longer,beta_shorter,beta_longer_decimal,beta_shorter_decimal\n");
            for r in &output.results {
                for p in &r.violations.pairs {
                    let longer = join_spaces(&p.longer.indices());
                    let shorter = join_spaces(&p.shorter.indices());
                    out.push_str(&format!(
                        "{},{},{},{longer},{shorter},{},{},{},{}\n",
                        r.index,
                        r.n,
                        r.rank,
                        format_fraction(&p.beta_longer),
                        format_fraction(&p.beta_shorter),
                        decimal4(&p.beta_longer),
                        decimal4(&p.beta_shorter),
                    ));
                }
            }
        }
    }
    let summary = SummaryJson {
        records: output.summary.records,
        violating_records: output.summary.violating_records,
        violation_pairs: output.summary.violation_pairs,
        errors: output.summary.errors,
        bound_failures: output.summary.bound_failures,
        log_concavity_failures: output.summary.log_concavity_failures,
        by_size_rank: output
            .summary
            .by_size_rank
            .iter()
            .map(|(&(n, r), &c)| (n, r, c))
            .collect(),
    };
    out.push_str("#summary ");
    out.push_str(&serde_json::to_string(&summary).expect("plain struct serializes"));
    out.push('\n');
    out
}

fn join_spaces(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes rendered results to a file, reporting I/O failures with the path.
pub fn persist_results(
    output: &ScanOutput,
    path: &std::path::Path,
    format: OutputFormat,
) -> std::io::Result<()> {
    let rendered = render_results(output, format);
    let mut file = std::fs::File::create(path).map_err(|e| {
        std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))
    })?;
    file.write_all(rendered.as_bytes())
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// Exit status contract: 0 clean, 2 violations found, 1 errors present.
pub fn exit_code(output: &ScanOutput) -> i32 {
    if output.summary.errors > 0
        || output.summary.bound_failures > 0
        || output.summary.log_concavity_failures > 0
    {
        1
    } else if output.summary.violating_records > 0 {
        2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_circuit_text;
    use crate::golden::{connected_example_matroid, five_card_matroid};

    fn corpus_text(matroids: &[Matroid]) -> String {
        let mut out = String::new();
        for m in matroids {
            out.push_str(&write_circuit_text(m, None));
            out.push('\n');
        }
        out
    }

    #[test]
    fn parses_two_records() {
        let text = corpus_text(&[five_card_matroid(), connected_example_matroid()]);
        let records: Vec<_> = parse_circuit_stream(&text).collect();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].as_ref().unwrap().matroid, five_card_matroid());
        assert_eq!(records[1].as_ref().unwrap().index, 1);
    }

    #[test]
    fn empty_input_is_empty_stream() {
        assert_eq!(parse_circuit_stream("").count(), 0);
        assert_eq!(parse_circuit_stream("\n# only comments\n\n").count(), 0);
    }

    #[test]
    fn c3_failure_is_reported_with_witness_and_stream_continues() {
        let text = "n=3\n1 3\n2 3\n\nn=2\n1 2\n";
        let records: Vec<_> = parse_circuit_stream(text).collect();
        assert_eq!(records.len(), 2);
        let err = records[0].as_ref().unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("C3"), "message: {}", err.message);
        assert!(err.message.contains("{1,3}"));
        let ok = records[1].as_ref().unwrap();
        assert_eq!(ok.matroid.circuits().len(), 1);
        assert_eq!(ok.index, 1);
    }

    #[test]
    fn malformed_lines_carry_line_numbers() {
        let text = "n=3\n1 x\n\nn=oops\n";
        let records: Vec<_> = parse_circuit_stream(text).collect();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].as_ref().unwrap_err().line, 2);
        assert_eq!(records[1].as_ref().unwrap_err().line, 4);
    }

    #[test]
    fn scan_flags_exactly_the_violating_record() {
        let text = corpus_text(&[
            Matroid::uniform(2, 4).unwrap(),
            five_card_matroid(),
            Matroid::uniform(1, 3).unwrap(),
        ]);
        let output = scan(parse_circuit_stream(&text), &ScanOptions::default());
        assert_eq!(output.results.len(), 3);
        assert_eq!(output.results[1].violation_count, 4);
        assert_eq!(output.results[0].violation_count, 0);
        assert!(output.results.iter().all(|r| r.bounds_ok && r.log_concave_ok));
        assert_eq!(output.summary.violating_records, 1);
        assert_eq!(output.summary.violation_pairs, 4);
        assert_eq!(output.summary.by_size_rank.get(&(8, 5)), Some(&4));
        assert_eq!(exit_code(&output), 2);
    }

    #[test]
    fn worker_counts_give_identical_output() {
        let mut matroids = vec![five_card_matroid(), connected_example_matroid()];
        let mut sampler = crate::gen::MatroidSampler::new(31);
        for _ in 0..30 {
            matroids.push(sampler.next_matroid());
        }
        let text = corpus_text(&matroids);
        let mut rendered = Vec::new();
        for workers in [1, 4, 8] {
            let opts = ScanOptions { emit_tables: true, workers };
            let output = scan(parse_circuit_stream(&text), &opts);
            rendered.push(render_results(&output, OutputFormat::Jsonl));
        }
        assert_eq!(rendered[0], rendered[1]);
        assert_eq!(rendered[0], rendered[2]);
    }

    #[test]
    fn empty_scan_renders_summary_only() {
        let output = scan(Vec::new(), &ScanOptions::default());
        let text = render_results(&output, OutputFormat::Jsonl);
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("#summary "));
        assert_eq!(exit_code(&output), 0);
    }

    #[test]
    fn csv_flattens_violation_pairs() {
        let text = corpus_text(&[five_card_matroid()]);
        let output = scan(parse_circuit_stream(&text), &ScanOptions::default());
        let csv = render_results(&output, OutputFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        // header + 4 pairs + summary
        assert_eq!(lines.len(), 6);
        assert!(lines[1].starts_with("0,8,5,5 6 7 8,1 2 3,3/14,11/56,"));
        assert!(lines[5].starts_with("#summary "));
    }

    #[test]
    fn parse_errors_count_in_summary_and_exit_code() {
        let text = "n=3\n1 3\n2 3\n\nn=2\n1 2\n";
        let output = scan(parse_circuit_stream(text), &ScanOptions::default());
        assert_eq!(output.results.len(), 1);
        assert_eq!(output.issues.len(), 1);
        assert_eq!(output.summary.errors, 1);
        assert_eq!(exit_code(&output), 1);
    }

    #[test]
    fn circuit_free_record_is_vacuously_clean() {
        let free = Matroid::uniform(2, 2).unwrap();
        let output = scan(
            parse_circuit_stream(&corpus_text(&[free])),
            &ScanOptions::default(),
        );
        let r = &output.results[0];
        assert_eq!(r.circuit_count, 0);
        assert!(r.equitable && r.bounds_ok && r.log_concave_ok);
        assert_eq!(exit_code(&output), 0);
    }

    #[test]
    fn indicator_corpus_and_conversion() {
        let input = "#order=revlex\n3 2 ***\n2 1 *0\n";
        let records = parse_indicator_stream(input, SubsetOrder::RevLex);
        assert_eq!(records.len(), 2);
        assert_eq!(
            records[0].as_ref().unwrap().matroid,
            Matroid::uniform(2, 3).unwrap()
        );
        let text = indicator_stream_to_circuit_text(input, SubsetOrder::RevLex).unwrap();
        assert!(text.starts_with("#order=revlex\n"));
        let reparsed: Vec<_> = parse_circuit_stream(&text).collect();
        assert_eq!(reparsed.len(), 2);
        assert!(reparsed.iter().all(|r| r.is_ok()));
    }

    #[test]
    fn persist_writes_file_with_path_in_errors() {
        let dir = std::env::temp_dir().join("matroid-bingo-scan-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("out.jsonl");
        let output = scan(
            parse_circuit_stream(&corpus_text(&[five_card_matroid()])),
            &ScanOptions::default(),
        );
        persist_results(&output, &path, OutputFormat::Jsonl).unwrap();
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, render_results(&output, OutputFormat::Jsonl));
        let bad = dir.join("missing-dir").join("out.jsonl");
        let err = persist_results(&output, &bad, OutputFormat::Jsonl).unwrap_err();
        assert!(err.to_string().contains("missing-dir"));
    }
}
