//! Round-trip evaluation: string similarity between a reader's re-coding of
//! a class and the source axioms, taking equivalent formulations into account.

mod assignment;
mod equivalents;
mod score;

pub use assignment::max_weight_assignment;
pub use equivalents::{enumerate_equivalents, version_key, EquivalentSet, DEFAULT_CAP};
pub use score::{score_submission, score_version, AxiomScore, SimilarityReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("more than {cap} equivalent versions")]
    EquivalentExplosion { cap: usize },
}

/// Case-folds, drops punctuation, collapses whitespace runs and trims.
pub fn normalize(text: &str) -> String {
    let folded: String = text
        .chars()
        .flat_map(char::to_lowercase)
        .filter(|c| c.is_alphanumeric() || c.is_whitespace())
        .collect();
    folded.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Edit distance over Unicode scalar values.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitution.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `(L - d) / L` with `L` the longer length; 1 when both are empty.
pub fn similarity(candidate: &str, reference: &str) -> f64 {
    let longest = candidate.chars().count().max(reference.chars().count());
    if longest == 0 {
        return 1.0;
    }
    let d = levenshtein(candidate, reference);
    ((longest as f64 - d as f64) / longest as f64).max(0.0)
}
