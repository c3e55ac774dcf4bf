//! Shared fixtures for the criterion benchmarks.

use matroid_bingo::format::write_circuit_text;
use matroid_bingo::gen::MatroidSampler;
use matroid_bingo::Matroid;

/// A deterministic corpus in circuit text format for scan benchmarks.
pub fn sample_corpus(records: usize, seed: u64) -> String {
    let mut sampler = MatroidSampler::new(seed);
    let mut out = String::new();
    for _ in 0..records {
        out.push_str(&write_circuit_text(&sampler.next_matroid(), None));
        out.push('\n');
    }
    out
}

/// The census matroids most benchmarks exercise.
pub fn fixtures() -> Vec<Matroid> {
    matroid_bingo::golden::known_violators()
        .iter()
        .map(|t| t.matroid())
        .collect()
}
