use std::collections::HashSet;

use itertools::Itertools;

use super::EvalError;
use crate::model::{Axiom, ClassExpression};
use crate::syntax::serialize_axiom;

pub const DEFAULT_CAP: usize = 10_000;

/// Reformulations of a class description that differ only in conjunct
/// order, argument order, or how subclass conjunctions are split across
/// axioms. The reference is always first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalentSet {
    pub versions: Vec<Vec<Axiom>>,
}

impl EquivalentSet {
    pub fn len(&self) -> usize {
        self.versions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.versions.is_empty()
    }

    pub fn position(&self, version: &[Axiom]) -> Option<usize> {
        let key = version_key(version);
        self.versions.iter().position(|v| version_key(v) == key)
    }
}

/// Order-insensitive identity of an axiom list.
pub fn version_key(axioms: &[Axiom]) -> String {
    axioms.iter().map(serialize_axiom).sorted().join("\n")
}

fn dedup_axioms(list: Vec<Axiom>) -> Vec<Axiom> {
    let mut seen = HashSet::new();
    list.into_iter()
        .filter(|a| seen.insert(serialize_axiom(a)))
        .collect()
}

fn dedup_expressions(list: Vec<ClassExpression>) -> Vec<ClassExpression> {
    let mut seen = HashSet::new();
    list.into_iter().filter(|e| seen.insert(e.clone())).collect()
}

/// Every conjunct ordering, recursively.
pub(crate) fn expression_variants(expr: &ClassExpression) -> Vec<ClassExpression> {
    match expr {
        ClassExpression::Named(_) => vec![expr.clone()],
        ClassExpression::Existential { property, filler } => expression_variants(filler)
            .into_iter()
            .map(|f| ClassExpression::some(property.clone(), f))
            .collect(),
        ClassExpression::Intersection(parts) => dedup_expressions(ordered_conjunctions(parts)),
    }
}

fn ordered_conjunctions(parts: &[ClassExpression]) -> Vec<ClassExpression> {
    let per_part: Vec<Vec<ClassExpression>> = parts.iter().map(expression_variants).collect();
    let mut out = Vec::new();
    for order in (0..parts.len()).permutations(parts.len()) {
        for choice in order
            .iter()
            .map(|&i| per_part[i].iter())
            .multi_cartesian_product()
        {
            out.push(ClassExpression::Intersection(
                choice.into_iter().cloned().collect(),
            ));
        }
    }
    out
}

fn list_variants(list: &[ClassExpression]) -> Vec<Vec<ClassExpression>> {
    let per_item: Vec<Vec<ClassExpression>> = list.iter().map(expression_variants).collect();
    let mut out = Vec::new();
    for order in (0..list.len()).permutations(list.len()) {
        for choice in order
            .iter()
            .map(|&i| per_item[i].iter())
            .multi_cartesian_product()
        {
            out.push(choice.into_iter().cloned().collect());
        }
    }
    out
}

/// Variants of a single axiom that keep it a single axiom.
fn axiom_variants(axiom: &Axiom) -> Vec<Axiom> {
    let out = match axiom {
        Axiom::SubClassOf { sub, sup } => expression_variants(sub)
            .into_iter()
            .cartesian_product(expression_variants(sup))
            .map(|(sub, sup)| Axiom::SubClassOf { sub, sup })
            .collect(),
        Axiom::EquivalentClasses(list) => list_variants(list)
            .into_iter()
            .map(Axiom::EquivalentClasses)
            .collect(),
        Axiom::DisjointClasses(list) => list_variants(list)
            .into_iter()
            .map(Axiom::DisjointClasses)
            .collect(),
        Axiom::ClassAssertion { individual, class } => expression_variants(class)
            .into_iter()
            .map(|class| Axiom::ClassAssertion {
                individual: individual.clone(),
                class,
            })
            .collect(),
        Axiom::DisjointUnion {
            union_class,
            disjuncts,
        } => list_variants(disjuncts)
            .into_iter()
            .map(|disjuncts| Axiom::DisjointUnion {
                union_class: union_class.clone(),
                disjuncts,
            })
            .collect(),
    };
    dedup_axioms(out)
}

/// All set partitions of `0..n`, blocks ordered by their smallest element.
pub(crate) fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            go(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// One way of laying out a unit: per resulting axiom, its single-axiom variants.
pub(crate) type Skeleton = Vec<Vec<Axiom>>;

/// Axioms that reformulate together: all subclass axioms sharing a
/// subclass expression, or any other single axiom.
#[derive(Debug, Clone)]
pub(crate) struct Unit {
    pub members: Vec<Axiom>,
}

impl Unit {
    /// Top-level superclass conjuncts pooled across the unit, when it is
    /// a subclass unit.
    fn pool(&self) -> Option<(&ClassExpression, Vec<&ClassExpression>)> {
        match self.members.first()? {
            Axiom::SubClassOf { sub, .. } => {
                let conjuncts = self
                    .members
                    .iter()
                    .filter_map(|a| match a {
                        Axiom::SubClassOf { sup, .. } => Some(sup.conjuncts()),
                        _ => None,
                    })
                    .flatten()
                    .collect();
                Some((sub, conjuncts))
            }
            _ => None,
        }
    }

    pub fn partition_count(&self) -> usize {
        match self.pool() {
            Some((_, pool)) => bell(pool.len()),
            None => 1,
        }
    }

    /// Layout as written, then every other split of the pooled conjuncts.
    /// With `restricted`, only the written, fully merged and fully split
    /// layouts are produced.
    pub fn skeletons(&self, restricted: bool) -> Vec<Skeleton> {
        let Some((sub, pool)) = self.pool() else {
            return vec![vec![axiom_variants(&self.members[0])]];
        };
        let mut written = Vec::new();
        let mut start = 0;
        for a in &self.members {
            if let Axiom::SubClassOf { sup, .. } = a {
                let len = sup.conjuncts().len();
                written.push((start..start + len).collect::<Vec<_>>());
                start += len;
            }
        }
        let layouts: Vec<Vec<Vec<usize>>> = if restricted {
            vec![
                written.clone(),
                vec![(0..pool.len()).collect()],
                (0..pool.len()).map(|i| vec![i]).collect(),
            ]
        } else {
            let mut all = set_partitions(pool.len());
            if let Some(at) = all.iter().position(|p| *p == written) {
                all.remove(at);
            }
            all.insert(0, written.clone());
            all
        };
        let mut seen = HashSet::new();
        layouts
            .into_iter()
            .filter(|l| seen.insert(l.clone()))
            .map(|layout| {
                layout
                    .iter()
                    .map(|block| {
                        let sup = if block.len() == 1 {
                            pool[block[0]].clone()
                        } else {
                            ClassExpression::Intersection(block.iter().map(|&i| pool[i].clone()).collect())
                        };
                        axiom_variants(&Axiom::SubClassOf {
                            sub: sub.clone(),
                            sup,
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn bell(n: usize) -> usize {
    // Bell triangle; saturates instead of overflowing.
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("row is never empty")];
        for x in &row {
            next.push(next.last().expect("just pushed").saturating_add(*x));
        }
        row = next;
    }
    row[0]
}

/// Groups a frame's axioms into units, in order of first appearance.
pub(crate) fn units(axioms: &[Axiom]) -> Vec<Unit> {
    let mut out: Vec<Unit> = Vec::new();
    for a in axioms {
        if let Axiom::SubClassOf { sub, .. } = a {
            let existing = out
                .iter_mut()
                .find(|u| matches!(u.members.first(), Some(Axiom::SubClassOf { sub: s, .. }) if s == sub));
            if let Some(u) = existing {
                u.members.push(a.clone());
                continue;
            }
        }
        out.push(Unit {
            members: vec![a.clone()],
        });
    }
    out
}

/// Enumerates equivalent versions of a class description; errors once more
/// than `cap` distinct versions would be produced.
pub fn enumerate_equivalents(axioms: &[Axiom], cap: usize) -> Result<EquivalentSet, EvalError> {
    let mut seen = HashSet::new();
    let mut versions = vec![axioms.to_vec()];
    seen.insert(version_key(axioms));

    let per_unit: Vec<Vec<Vec<Axiom>>> = units(axioms)
        .iter()
        .map(|u| {
            let mut layouts = Vec::new();
            for skeleton in u.skeletons(false) {
                for choice in skeleton.iter().map(|v| v.iter()).multi_cartesian_product() {
                    layouts.push(choice.into_iter().cloned().collect::<Vec<Axiom>>());
                }
                if skeleton.is_empty() {
                    layouts.push(Vec::new());
                }
            }
            layouts
        })
        .collect();
    let total = per_unit
        .iter()
        .try_fold(1usize, |acc, l| acc.checked_mul(l.len()));
    if total.is_none_or(|t| t > cap) {
        return Err(EvalError::EquivalentExplosion { cap });
    }
    if per_unit.is_empty() {
        return Ok(EquivalentSet { versions });
    }
    for combo in per_unit.iter().map(|l| l.iter()).multi_cartesian_product() {
        let version: Vec<Axiom> = combo.into_iter().flatten().cloned().collect();
        if seen.insert(version_key(&version)) {
            versions.push(version);
        }
    }
    Ok(EquivalentSet { versions })
}
