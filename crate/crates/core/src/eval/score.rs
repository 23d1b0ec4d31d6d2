use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::equivalents::{enumerate_equivalents, units, DEFAULT_CAP};
use super::{max_weight_assignment, normalize, similarity};
use crate::model::{Axiom, ClassFrame};
use crate::syntax::serialize_axiom;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomScore {
    pub reference: String,
    /// `None` when no candidate axiom was left for this reference axiom.
    pub candidate: Option<String>,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimilarityReport {
    pub per_axiom: Vec<AxiomScore>,
    pub mean: f64,
    /// The equivalent version of the reference that scored best.
    #[serde(skip)]
    pub best_version: Vec<Axiom>,
    /// Index of `best_version` in the enumerated equivalent set, when the
    /// set is small enough to enumerate.
    pub best_version_index: Option<usize>,
    /// False when the reference allowed too many subclass layouts and only
    /// the written, fully merged and fully split ones were tried.
    pub exhaustive: bool,
}

/// Variants of one skeleton axiom, with the best (score, variant) per candidate.
type Row = (Vec<Axiom>, Vec<(f64, usize)>);

fn normalized(axiom: &Axiom) -> String {
    normalize(&serialize_axiom(axiom))
}

fn mean(total: f64, count: usize) -> f64 {
    if count == 0 {
        1.0
    } else {
        total / count as f64
    }
}

/// Scores one fixed version of the reference against a candidate.
pub fn score_version(version: &[Axiom], candidate: &[Axiom]) -> (Vec<AxiomScore>, f64) {
    let cand: Vec<String> = candidate.iter().map(normalized).collect();
    let weights: Vec<Vec<f64>> = version
        .iter()
        .map(|a| {
            let r = normalized(a);
            cand.iter().map(|c| similarity(c, &r)).collect()
        })
        .collect();
    let (chosen, total) = max_weight_assignment(&weights);
    let per_axiom = version
        .iter()
        .zip(&chosen)
        .enumerate()
        .map(|(i, (a, c))| AxiomScore {
            reference: serialize_axiom(a),
            candidate: c.map(|j| serialize_axiom(&candidate[j])),
            score: c.map_or(0.0, |j| weights[i][j]),
        })
        .collect();
    (per_axiom, mean(total, version.len()))
}

/// Best similarity of each variant set against each candidate, with the
/// variant that achieves it.
fn best_row(variants: &[Axiom], cand: &[String]) -> Vec<(f64, usize)> {
    let mut row = vec![(f64::NEG_INFINITY, 0); cand.len()];
    for (vi, v) in variants.iter().enumerate() {
        let r = normalized(v);
        for (j, c) in cand.iter().enumerate() {
            if row[j].0 >= 1.0 {
                continue;
            }
            let s = similarity(c, &r);
            if s > row[j].0 {
                row[j] = (s, vi);
            }
        }
    }
    row
}

/// Scores a candidate re-coding against every equivalent version of the
/// reference and keeps the best mean. Variants of one axiom and the choice
/// of partner are independent, so each version is scored as an assignment
/// over per-axiom best variants instead of being materialised.
pub fn score_submission(candidate: &ClassFrame, reference: &ClassFrame) -> SimilarityReport {
    let cand: Vec<String> = candidate.axioms.iter().map(normalized).collect();
    let units = units(&reference.axioms);
    let layouts = units
        .iter()
        .try_fold(1usize, |acc, u| acc.checked_mul(u.partition_count()));
    let exhaustive = layouts.is_some_and(|n| n <= DEFAULT_CAP);

    // unit -> skeleton -> axiom -> (variants, row over candidates)
    let tables: Vec<Vec<Vec<Row>>> = units
        .par_iter()
        .map(|u| {
            u.skeletons(!exhaustive)
                .into_iter()
                .map(|sk| {
                    sk.into_iter()
                        .map(|variants| {
                            let row = best_row(&variants, &cand);
                            (variants, row)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let combos: Vec<Vec<usize>> = if tables.is_empty() {
        vec![Vec::new()]
    } else {
        tables
            .iter()
            .map(|t| 0..t.len())
            .multi_cartesian_product()
            .collect()
    };

    let evaluate = |combo: &Vec<usize>| {
        let rows: Vec<&Row> = combo
            .iter()
            .enumerate()
            .flat_map(|(u, &s)| tables[u][s].iter())
            .collect();
        let weights: Vec<Vec<f64>> = rows
            .iter()
            .map(|(_, r)| r.iter().map(|x| x.0).collect())
            .collect();
        let (chosen, total) = max_weight_assignment(&weights);
        (mean(total, rows.len()), rows, chosen)
    };

    let best = combos
        .par_iter()
        .enumerate()
        .map(|(i, c)| (evaluate(c).0, i))
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );
    let (mean, rows, chosen) = evaluate(&combos[best.1]);

    let mut best_version = Vec::with_capacity(rows.len());
    let mut per_axiom = Vec::with_capacity(rows.len());
    for ((variants, row), c) in rows.iter().zip(&chosen) {
        let variant = c.map_or(0, |j| row[j].1);
        let axiom = variants[variant].clone();
        per_axiom.push(AxiomScore {
            reference: serialize_axiom(&axiom),
            candidate: c.map(|j| serialize_axiom(&candidate.axioms[j])),
            score: c.map_or(0.0, |j| row[j].0),
        });
        best_version.push(axiom);
    }
    let best_version_index = enumerate_equivalents(&reference.axioms, DEFAULT_CAP)
        .ok()
        .and_then(|set| set.position(&best_version));

    SimilarityReport {
        per_axiom,
        mean,
        best_version,
        best_version_index,
        exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ClassExpression, ClassId};

    fn c(name: &str) -> ClassId {
        ClassId::new(format!(":{name}")).unwrap()
    }

    fn n(name: &str) -> ClassExpression {
        ClassExpression::Named(c(name))
    }

    fn frame(axioms: Vec<Axiom>) -> ClassFrame {
        ClassFrame::new(c("A"), axioms).unwrap()
    }

    #[test]
    fn verbatim_is_perfect() {
        let f = frame(vec![
            Axiom::sub_class_of(n("A"), n("B")),
            Axiom::EquivalentClasses(vec![
                n("A"),
                ClassExpression::intersection(vec![n("C"), n("D")]).unwrap(),
            ]),
        ]);
        let r = score_submission(&f, &f);
        assert_eq!(r.mean, 1.0);
        assert_eq!(r.best_version_index, Some(0));
        assert!(r.exhaustive);
    }

    #[test]
    fn reordered_conjuncts_are_perfect() {
        let reference = frame(vec![Axiom::sub_class_of(
            n("A"),
            ClassExpression::intersection(vec![n("B"), n("C"), n("D")]).unwrap(),
        )]);
        let candidate = frame(vec![
            Axiom::sub_class_of(
                n("A"),
                ClassExpression::intersection(vec![n("D"), n("B")]).unwrap(),
            ),
            Axiom::sub_class_of(n("A"), n("C")),
        ]);
        let r = score_submission(&candidate, &reference);
        assert_eq!(r.mean, 1.0);
        assert!(r.best_version_index.unwrap() > 0);
    }

    #[test]
    fn missing_axiom_scores_zero() {
        let reference = frame(vec![
            Axiom::sub_class_of(n("A"), n("B")),
            Axiom::EquivalentClasses(vec![n("A"), n("X")]),
            Axiom::DisjointClasses(vec![n("A"), n("Y")]),
        ]);
        let candidate = frame(vec![
            Axiom::sub_class_of(n("A"), n("B")),
            Axiom::EquivalentClasses(vec![n("A"), n("X")]),
        ]);
        let r = score_submission(&candidate, &reference);
        assert!((r.mean - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.per_axiom.iter().filter(|s| s.candidate.is_none()).count(), 1);
    }

    #[test]
    fn single_version_scoring_agrees() {
        let reference = vec![Axiom::sub_class_of(n("A"), n("B"))];
        let candidate = vec![Axiom::sub_class_of(n("A"), n("C"))];
        let (per, m) = score_version(&reference, &candidate);
        let expected = similarity("subclassofa c", "subclassofa b");
        assert_eq!(per[0].score, expected);
        assert_eq!(m, expected);
    }
}
