//! Wire formats.
//!
//! * Circuit text: `n=<int>` on the first line of a record, then one
//!   circuit per line as space-separated ascending labels; a blank line
//!   terminates the record. Lines starting with `#` are metadata/comments;
//!   an optional `id=<string>` line names the record.
//! * Circuit JSON: `{"n": int, "circuits": [[int, ...], ...]}`.
//! * Basis-indicator strings over `{0, *}`: position `k` is the `k`-th
//!   `r`-subset of `[n]` in revlex order by default (compare the reversed
//!   descending sequences lexicographically; `*` marks a basis), with plain
//!   lexicographic order as a fallback.
//! * Beta-table JSON/CSV and Tutte-coefficient JSON renderings.

use crate::error::Error;
use crate::matroid::Matroid;
use crate::prob::BetaTable;
use crate::ratio::{binom, decimal4, format_fraction};
use crate::set::{subsets_of_size, ElementSet};
use crate::tutte::TuttePolynomial;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

/// A parse failure pinned to an input line.
#[derive(Debug, Clone, ThisError)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// Renders one matroid in circuit text format (no trailing blank line).
pub fn write_circuit_text(m: &Matroid, id: Option<&str>) -> String {
    let mut out = format!("n={}\n", m.n());
    if let Some(id) = id {
        out.push_str(&format!("id={id}\n"));
    }
    for c in m.circuits() {
        let labels: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    circuits: Vec<Vec<usize>>,
}

/// Parses the JSON form `{"n": int, "circuits": [[int, ...], ...]}`,
/// validating the axioms.
pub fn matroid_from_json(input: &str) -> Result<Matroid, ParseError> {
    let raw: MatroidJson = serde_json::from_str(input)
        .map_err(|e| ParseError::new(e.line(), format!("invalid matroid JSON: {e}")))?;
    let circuits = raw
        .circuits
        .iter()
        .map(|c| {
            ElementSet::from_indices(c.iter().copied())
                .ok_or_else(|| ParseError::new(1, format!("circuit {c:?} has elements outside 1..=64")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matroid::new(raw.n, circuits).map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn matroid_to_json(m: &Matroid) -> String {
    let raw = MatroidJson {
        n: m.n(),
        circuits: m.circuits().iter().map(|c| c.indices()).collect(),
    };
    serde_json::to_string(&raw).expect("plain struct serializes")
}

/// Parses the CLI inline form: circuits separated by `;`, each circuit
/// either digit-per-element (when every label fits in one digit) or
/// comma-separated.
pub fn parse_inline_circuits(spec: &str, n: usize) -> Result<Matroid, Error> {
    let mut circuits = Vec::new();
    for token in spec.split(';') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let indices: Vec<usize> = if token.contains(',') {
            token
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::Domain(format!("bad circuit '{token}': {e}")))?
        } else {
            token
                .chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Domain(format!("bad circuit '{token}'")))
                })
                .collect::<Result<_, _>>()?
        };
        circuits.push(
            ElementSet::from_indices(indices.iter().copied())
                .ok_or_else(|| Error::Domain(format!("circuit '{token}' out of range")))?,
        );
    }
    Matroid::new(n, circuits)
}

/// Subset ordering conventions for basis-indicator strings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubsetOrder {
    /// Compare reversed descending sequences lexicographically (colex).
    RevLex,
    /// Plain lexicographic order on the ascending sequences.
    Lex,
}

impl SubsetOrder {
    pub fn name(self) -> &'static str {
        match self {
            SubsetOrder::RevLex => "revlex",
            SubsetOrder::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "revlex" => Some(SubsetOrder::RevLex),
            "lex" => Some(SubsetOrder::Lex),
            _ => None,
        }
    }
}

/// All `r`-subsets of `[n]` in the chosen order.
pub fn subsets_in_order(n: usize, r: usize, order: SubsetOrder) -> Vec<ElementSet> {
    let mut subs: Vec<ElementSet> = subsets_of_size(n, r).collect();
    match order {
        SubsetOrder::RevLex => {
            // mask value order IS colex order: highest element dominates
            subs.sort_by_key(|s| s.bits());
        }
        SubsetOrder::Lex => {
            subs.sort_by_key(|s| s.indices());
        }
    }
    subs
}

/// Decodes a basis-indicator string over `{0, *}` of length `C(n, r)`.
pub fn parse_basis_indicator(
    n: usize,
    r: usize,
    s: &str,
    order: SubsetOrder,
) -> Result<Matroid, Error> {
    let expected = binom(n, r);
    if BigInt::from(s.len()) != expected {
        return Err(Error::Domain(format!(
            "indicator has length {}, expected C({n},{r}) = {expected}",
            s.len()
        )));
    }
    let subsets = subsets_in_order(n, r, order);
    let mut bases = Vec::new();
    for (ch, &subset) in s.chars().zip(&subsets) {
        match ch {
            '*' => bases.push(subset),
            '0' => {}
            other => {
                return Err(Error::Domain(format!(
                    "indicator may contain only '0' and '*', found {other:?}"
                )))
            }
        }
    }
    if bases.is_empty() {
        return Err(Error::NotABasisFamily("indicator marks no bases".into()));
    }
    Matroid::from_bases(n, &bases)
}

#[derive(Serialize, Deserialize, Debug)]
pub struct BetaEntryJson {
    pub circuit: Vec<usize>,
    pub beta: String,
    pub beta_decimal: String,
    pub timed: Vec<String>,
}

/// The beta-table wire schema:
/// `{"n":..,"r":..,"entries":[{"circuit":[..],"beta":"p/q","beta_decimal":"0.dddd","timed":["p/q",..]}],"sum_check":"1/1"}`.
#[derive(Serialize, Deserialize, Debug)]
pub struct BetaTableJson {
    pub n: usize,
    pub r: usize,
    pub entries: Vec<BetaEntryJson>,
    pub sum_check: String,
}

impl BetaTableJson {
    pub fn from_table(t: &BetaTable) -> Self {
        let entries = t
            .entries()
            .iter()
            .map(|e| BetaEntryJson {
                circuit: e.circuit.indices(),
                beta: format_fraction(&e.beta),
                beta_decimal: decimal4(&e.beta),
                timed: e.timed.values().iter().map(format_fraction).collect(),
            })
            .collect();
        let sum = t
            .entries()
            .iter()
            .fold(num_rational::BigRational::new(0.into(), 1.into()), |a, e| a + &e.beta);
        BetaTableJson {
            n: t.n(),
            r: t.rank(),
            entries,
            sum_check: format_fraction(&sum),
        }
    }
}

pub fn beta_table_to_json(t: &BetaTable) -> String {
    serde_json::to_string(&BetaTableJson::from_table(t)).expect("plain struct serializes")
}

/// CSV rendering, one circuit per row; elements and timed entries are
/// space-joined so no quoting is needed.
pub fn beta_table_to_csv(t: &BetaTable) -> String {
    let mut out = String::from("circuit,size,beta,beta_decimal,timed\n");
    for e in t.entries() {
        let circuit = e
            .circuit
            .indices()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let timed = e
            .timed
            .values()
            .iter()
            .map(format_fraction)
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!(
            "{circuit},{},{},{},{timed}\n",
            e.circuit.len(),
            format_fraction(&e.beta),
            decimal4(&e.beta),
        ));
    }
    out
}

/// Tutte coefficients as `{"coeffs": [[i, j, "c"], ...]}` ordered by (i, j).
pub fn tutte_to_json(t: &TuttePolynomial) -> String {
    let coeffs: Vec<serde_json::Value> = t
        .terms()
        .into_iter()
        .map(|(i, j, c)| serde_json::json!([i, j, c.to_string()]))
        .collect();
    serde_json::to_string(&serde_json::json!({ "coeffs": coeffs }))
        .expect("plain value serializes")
}

/// Compact circuit rendering for table rows: digit-run when every label is
/// a single digit, comma-joined otherwise.
pub fn compact_circuit(c: ElementSet) -> String {
    let indices = c.indices();
    if indices.iter().all(|&i| i <= 9) {
        indices.iter().map(|i| i.to_string()).collect()
    } else {
        indices
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::five_card_matroid;
    use crate::prob::beta_table;

    #[test]
    fn circuit_text_round_trip_via_scan_parser() {
        let m = five_card_matroid();
        let text = write_circuit_text(&m, Some("fig1"));
        assert!(text.starts_with("n=8\nid=fig1\n1 2 3\n"));
    }

    #[test]
    fn matroid_json_round_trip() {
        let m = five_card_matroid();
        let json = matroid_to_json(&m);
        assert_eq!(matroid_from_json(&json).unwrap(), m);
        assert!(matroid_from_json("{\"n\": 3, \"circuits\": [[1], [1, 2]]}").is_err());
        assert!(matroid_from_json("not json").is_err());
    }

    #[test]
    fn inline_circuits_digits_and_commas() {
        let m = parse_inline_circuits("12;13;23", 3).unwrap();
        assert_eq!(m, Matroid::uniform(1, 3).unwrap());
        let m2 = parse_inline_circuits("1,2;1,3;2,3", 3).unwrap();
        assert_eq!(m, m2);
        assert!(parse_inline_circuits("12;34", 3).is_err());
    }

    #[test]
    fn revlex_is_colex_and_lex_is_lex() {
        let revlex: Vec<Vec<usize>> = subsets_in_order(4, 2, SubsetOrder::RevLex)
            .iter()
            .map(|s| s.indices())
            .collect();
        assert_eq!(
            revlex,
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
        let lex: Vec<Vec<usize>> = subsets_in_order(4, 2, SubsetOrder::Lex)
            .iter()
            .map(|s| s.indices())
            .collect();
        assert_eq!(
            lex,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
    }

    #[test]
    fn indicator_examples() {
        // all 2-subsets of [3] are bases regardless of convention
        let m = parse_basis_indicator(3, 2, "***", SubsetOrder::RevLex).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());
        let m = parse_basis_indicator(3, 2, "***", SubsetOrder::Lex).unwrap();
        assert_eq!(m, Matroid::uniform(2, 3).unwrap());

        // n=2, r=1: first revlex position is {1}; {2} becomes a loop
        let m = parse_basis_indicator(2, 1, "*0", SubsetOrder::RevLex).unwrap();
        assert_eq!(m.circuits(), &[ElementSet::from_indices([2]).unwrap()]);
        let back = Matroid::from_bases(2, &m.bases()).unwrap();
        assert_eq!(back, m);

        // six stars on n=4, r=2 gives U_{2,4}
        let m = parse_basis_indicator(4, 2, "******", SubsetOrder::RevLex).unwrap();
        assert_eq!(m, Matroid::uniform(2, 4).unwrap());

        assert!(matches!(
            parse_basis_indicator(4, 2, "*****", SubsetOrder::RevLex),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_basis_indicator(2, 1, "00", SubsetOrder::RevLex),
            Err(Error::NotABasisFamily(_))
        ));
        assert!(parse_basis_indicator(2, 1, "x0", SubsetOrder::RevLex).is_err());
    }

    #[test]
    fn beta_table_json_schema() {
        let t = beta_table(&Matroid::uniform(1, 2).unwrap()).unwrap();
        let json = beta_table_to_json(&t);
        assert_eq!(
            json,
            "{\"n\":2,\"r\":1,\"entries\":[{\"circuit\":[1,2],\"beta\":\"1/1\",\
             \"beta_decimal\":\"1.0000\",\"timed\":[\"0/1\",\"1/1\"]}],\"sum_check\":\"1/1\"}"
        );
        // parse back
        let parsed: BetaTableJson = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.entries.len(), 1);
    }

    #[test]
    fn beta_table_csv_rows() {
        let t = beta_table(&five_card_matroid()).unwrap();
        let csv = beta_table_to_csv(&t);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "circuit,size,beta,beta_decimal,timed");
        assert!(lines[1].starts_with("1 2 3,3,11/56,0.1964,"));
    }

    #[test]
    fn tutte_json_terms() {
        let t = crate::tutte::tutte(&Matroid::uniform(1, 2).unwrap());
        assert_eq!(tutte_to_json(&t), "{\"coeffs\":[[0,1,\"1\"],[1,0,\"1\"]]}");
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(compact_circuit(ElementSet::from_indices([1, 2, 7]).unwrap()), "127");
        assert_eq!(
            compact_circuit(ElementSet::from_indices([3, 10]).unwrap()),
            "3,10"
        );
    }
}
