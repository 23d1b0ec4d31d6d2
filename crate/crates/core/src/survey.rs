//! Corpus survey: per-class pattern labels tallied over many ontologies,
//! plus how often each axiom group and communicative role occurs across the
//! distinct patterns found.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::classify::{classify, GroupLabel, PatternLabel, Role};
use crate::model::{ClassId, Ontology};
use crate::syntax::{parse_ontology, ParseOptions, SourceDocument, SyntaxError};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PatternStats {
    /// Classes per pattern; classes with empty frames count under the empty pattern.
    pub per_pattern: BTreeMap<PatternLabel, usize>,
    pub total_classes: usize,
    /// Ontologies that could not be parsed and were left out.
    pub skipped: usize,
}

impl PatternStats {
    /// Merging is associative and commutative.
    pub fn merge(mut self, other: PatternStats) -> PatternStats {
        for (label, count) in other.per_pattern {
            *self.per_pattern.entry(label).or_default() += count;
        }
        self.total_classes += other.total_classes;
        self.skipped += other.skipped;
        self
    }

    pub fn nonempty_classes(&self) -> usize {
        self.per_pattern
            .iter()
            .filter(|(label, _)| !label.is_empty())
            .map(|(_, count)| count)
            .sum()
    }

    /// Distinct non-empty patterns.
    pub fn distinct_patterns(&self) -> impl Iterator<Item = &PatternLabel> {
        self.per_pattern.keys().filter(|label| !label.is_empty())
    }

    pub fn pattern_fraction(&self, label: &PatternLabel) -> f64 {
        ratio(
            self.per_pattern.get(label).copied().unwrap_or(0),
            self.total_classes,
        )
    }

    /// Share among classes whose frame is not empty; 0 for the empty pattern.
    pub fn pattern_fraction_nonempty(&self, label: &PatternLabel) -> f64 {
        if label.is_empty() {
            return 0.0;
        }
        ratio(
            self.per_pattern.get(label).copied().unwrap_or(0),
            self.nonempty_classes(),
        )
    }

    /// Number of distinct patterns containing each group (each pattern counts once).
    pub fn group_containment(&self) -> BTreeMap<GroupLabel, usize> {
        let mut out = BTreeMap::new();
        for label in self.distinct_patterns() {
            for g in label.groups() {
                *out.entry(g).or_default() += 1;
            }
        }
        out
    }

    /// Number of distinct patterns containing at least one group of each role.
    pub fn role_containment(&self) -> BTreeMap<Role, usize> {
        let mut out = BTreeMap::new();
        for label in self.distinct_patterns() {
            let roles: BTreeSet<Role> = label.groups().iter().map(GroupLabel::role).collect();
            for r in roles {
                *out.entry(r).or_default() += 1;
            }
        }
        out
    }

    pub fn group_frequency(&self) -> BTreeMap<GroupLabel, f64> {
        let distinct = self.distinct_patterns().count();
        self.group_containment()
            .into_iter()
            .map(|(g, n)| (g, ratio(n, distinct)))
            .collect()
    }

    pub fn role_frequency(&self) -> BTreeMap<Role, f64> {
        let distinct = self.distinct_patterns().count();
        self.role_containment()
            .into_iter()
            .map(|(r, n)| (r, ratio(n, distinct)))
            .collect()
    }
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

/// Pattern label of every declared class of one ontology, in class order.
pub fn class_patterns(ontology: &Ontology) -> BTreeMap<ClassId, PatternLabel> {
    let mut groups: HashMap<&ClassId, Vec<GroupLabel>> = HashMap::new();
    for axiom in ontology.axioms() {
        let mut mentioned = BTreeSet::new();
        axiom.for_each_class(&mut |c| {
            mentioned.insert(c);
        });
        for class in mentioned {
            let ca = classify(axiom, class).expect("class is mentioned");
            groups.entry(class).or_default().push(ca.group);
        }
    }
    ontology
        .classes()
        .iter()
        .map(|c| {
            let label = groups
                .get(c)
                .map(|g| PatternLabel::from_groups(g.iter().copied()))
                .unwrap_or_default();
            (c.clone(), label)
        })
        .collect()
}

fn tally(ontology: &Ontology) -> PatternStats {
    let mut stats = PatternStats::default();
    for label in class_patterns(ontology).into_values() {
        *stats.per_pattern.entry(label).or_default() += 1;
        stats.total_classes += 1;
    }
    stats
}

pub fn survey(corpus: &[Ontology]) -> PatternStats {
    corpus
        .par_iter()
        .map(tally)
        .reduce(PatternStats::default, PatternStats::merge)
}

#[derive(Debug)]
pub struct SurveyOutcome {
    pub stats: PatternStats,
    pub failures: Vec<SyntaxError>,
}

/// Parses and surveys a set of documents; unparseable ones are skipped and
/// counted.
pub fn survey_documents(docs: &[SourceDocument], options: ParseOptions) -> SurveyOutcome {
    let parsed: Vec<Result<Ontology, SyntaxError>> = docs
        .par_iter()
        .map(|d| parse_ontology(d, options).map(|p| p.ontology))
        .collect();
    let mut corpus = Vec::new();
    let mut failures = Vec::new();
    for p in parsed {
        match p {
            Ok(o) => corpus.push(o),
            Err(e) => failures.push(e),
        }
    }
    let mut stats = survey(&corpus);
    stats.skipped = failures.len();
    SurveyOutcome { stats, failures }
}

fn display_pattern(label: &PatternLabel) -> &str {
    if label.is_empty() {
        "(empty)"
    } else {
        label.as_str()
    }
}

fn section<I>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// CSV report: four sections separated by blank lines. Rows are sorted by
/// descending count, then label; fractions use four decimals.
pub fn emit_report(stats: &PatternStats) -> String {
    let mut patterns: Vec<(&PatternLabel, usize)> = stats.per_pattern.iter().map(|(l, c)| (l, *c)).collect();
    patterns.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));

    let by_class = section(
        &["pattern", "count", "fraction"],
        patterns.iter().map(|(l, c)| {
            vec![
                display_pattern(l).to_string(),
                c.to_string(),
                format!("{:.4}", stats.pattern_fraction(l)),
            ]
        }),
    );
    let by_nonempty = section(
        &["pattern", "count", "fraction_of_nonempty"],
        patterns.iter().filter(|(l, _)| !l.is_empty()).map(|(l, c)| {
            vec![
                l.to_string(),
                c.to_string(),
                format!("{:.4}", stats.pattern_fraction_nonempty(l)),
            ]
        }),
    );

    let distinct = stats.distinct_patterns().count();
    let mut roles: Vec<(Role, usize)> = stats.role_containment().into_iter().collect();
    roles.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.as_str().cmp(b.0.as_str())));
    let roles = section(
        &["role", "fraction"],
        roles
            .into_iter()
            .map(|(r, n)| vec![r.as_str().to_string(), format!("{:.4}", ratio(n, distinct))]),
    );

    let mut groups: Vec<(GroupLabel, usize)> = stats.group_containment().into_iter().collect();
    groups.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.as_str().cmp(b.0.as_str())));
    let groups = section(
        &["group", "fraction"],
        groups
            .into_iter()
            .map(|(g, n)| vec![g.as_str().to_string(), format!("{:.4}", ratio(n, distinct))]),
    );

    [by_class, by_nonempty, roles, groups].join("\n")
}
