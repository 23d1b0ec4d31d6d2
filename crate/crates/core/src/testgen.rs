//! Seeded random generators for property tests.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};

use crate::model::{Axiom, ClassExpression, ClassFrame, ClassId, Ontology, PropertyId};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn class_ids(n: usize) -> Vec<ClassId> {
    (0..n)
        .map(|i| ClassId::new(format!(":C{i}")).expect("non-empty"))
        .collect()
}

pub fn property_ids(n: usize) -> Vec<PropertyId> {
    (0..n)
        .map(|i| PropertyId::new(format!(":p{i}")).expect("non-empty"))
        .collect()
}

/// Vocabulary used by the generators.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    pub classes: Vec<ClassId>,
    pub properties: Vec<PropertyId>,
    pub individuals: Vec<String>,
}

impl Vocabulary {
    pub fn new(classes: usize, properties: usize, individuals: usize) -> Self {
        Vocabulary {
            classes: class_ids(classes.max(1)),
            properties: property_ids(properties.max(1)),
            individuals: (0..individuals.max(1)).map(|i| format!(":i{i}")).collect(),
        }
    }
}

pub fn expression(rng: &mut impl Rng, vocab: &Vocabulary, depth: usize) -> ClassExpression {
    let named = |rng: &mut _| ClassExpression::Named(vocab.classes.choose(rng).expect("non-empty").clone());
    if depth == 0 || rng.random_bool(0.5) {
        return named(rng);
    }
    if rng.random_bool(0.5) {
        let n = rng.random_range(2..=3);
        ClassExpression::Intersection((0..n).map(|_| expression(rng, vocab, depth - 1)).collect())
    } else {
        let p = vocab.properties.choose(rng).expect("non-empty").clone();
        ClassExpression::some(p, expression(rng, vocab, depth - 1))
    }
}

fn expression_list(rng: &mut impl Rng, vocab: &Vocabulary, depth: usize) -> Vec<ClassExpression> {
    let n = rng.random_range(2..=3);
    (0..n).map(|_| expression(rng, vocab, depth)).collect()
}

pub fn axiom(rng: &mut impl Rng, vocab: &Vocabulary, depth: usize) -> Axiom {
    match rng.random_range(0..10) {
        0..=3 => Axiom::SubClassOf {
            sub: expression(rng, vocab, depth.min(1)),
            sup: expression(rng, vocab, depth),
        },
        4..=5 => Axiom::EquivalentClasses(expression_list(rng, vocab, depth)),
        6..=7 => Axiom::DisjointClasses(expression_list(rng, vocab, depth.min(1))),
        8 => Axiom::ClassAssertion {
            individual: vocab.individuals.choose(rng).expect("non-empty").clone(),
            class: expression(rng, vocab, depth),
        },
        _ => Axiom::DisjointUnion {
            union_class: vocab.classes.choose(rng).expect("non-empty").clone(),
            disjuncts: expression_list(rng, vocab, 0),
        },
    }
}

/// An ontology with up to `max_classes` classes and `max_axioms` axioms.
pub fn ontology(rng: &mut impl Rng, max_classes: usize, max_axioms: usize) -> Ontology {
    let vocab = Vocabulary::new(rng.random_range(1..=max_classes.max(1)), 2, 2);
    let n = rng.random_range(0..=max_axioms);
    let axioms = (0..n).map(|_| axiom(rng, &vocab, 2)).collect();
    let classes: BTreeSet<ClassId> = vocab.classes.iter().cloned().collect();
    let properties = vocab.properties.iter().cloned().collect();
    let individuals = vocab.individuals.iter().cloned().collect();
    Ontology::new(classes, properties, individuals, axioms).expect("generated from the vocabulary")
}

/// A frame for `:C0` made of random axioms that all mention it.
pub fn frame(rng: &mut impl Rng, max_axioms: usize) -> ClassFrame {
    let vocab = Vocabulary::new(5, 2, 2);
    let designated = vocab.classes[0].clone();
    let target = rng.random_range(0..=max_axioms);
    let mut axioms = Vec::new();
    while axioms.len() < target {
        let a = axiom(rng, &vocab, 2);
        if a.mentions(&designated) {
            axioms.push(a);
        }
    }
    ClassFrame::new(designated, axioms).expect("every axiom mentions the class")
}

pub fn text(rng: &mut impl Rng, alphabet: &[char], max_len: usize) -> String {
    let n = rng.random_range(0..=max_len);
    (0..n)
        .map(|_| *alphabet.choose(rng).expect("non-empty alphabet"))
        .collect()
}
