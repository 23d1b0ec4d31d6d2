//! Surface realization: discourse tree to English paragraph.

mod expression;

use serde::Serialize;

pub use expression::{is_rolegroup, join_list, render_expression, Namer, NounPhrase, SyntacticRole};

use crate::classify::{ClassifiedAxiom, GroupLabel};
use crate::model::{Axiom, ClassExpression, ClassFrame, ClassId, Lexicon};
use crate::planner::{plan, Block, Connector, Payload, RstNode, Slot};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Render `RoleGroup some X` as just X.
    pub elide_rolegroup: bool,
    /// Use "a"/"an" by initial letter when the lexicon gives no article.
    pub guess_articles: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sentence {
    pub text: String,
    /// Groups of the axioms the sentence verbalises.
    pub groups: Vec<GroupLabel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BulletList {
    pub intro: Sentence,
    pub items: Vec<Sentence>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Paragraph {
    pub sentences: Vec<Sentence>,
    pub bullets: Option<BulletList>,
}

impl Paragraph {
    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty() && self.bullets.is_none()
    }

    /// Sentences separated by single spaces; a bullet list follows on its
    /// own lines.
    pub fn to_text(&self) -> String {
        let mut out = self
            .sentences
            .iter()
            .map(|s| s.text.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        if let Some(b) = &self.bullets {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&b.intro.text);
            for item in &b.items {
                out.push_str("\n- ");
                out.push_str(&item.text);
            }
        }
        out
    }

    /// Every sentence in reading order, bullet intro and items included.
    pub fn records(&self) -> Vec<&Sentence> {
        let mut out: Vec<&Sentence> = self.sentences.iter().collect();
        if let Some(b) = &self.bullets {
            out.push(&b.intro);
            out.extend(&b.items);
        }
        out
    }
}

/// Uppercases the first alphabetic character and leaves the rest alone.
pub fn capitalize_first(text: &str) -> String {
    match text.char_indices().find(|(_, c)| c.is_alphabetic()) {
        Some((i, c)) => {
            let mut out = String::with_capacity(text.len());
            out.push_str(&text[..i]);
            out.extend(c.to_uppercase());
            out.push_str(&text[i + c.len_utf8()..]);
            out
        }
        None => text.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Template {
    /// "{S} is a kind of {objects}."
    KindOf,
    /// "A more specialised kind of {S} is {Z}." / "More specialised kinds of {S} are {list}."
    Specialisations,
    /// "{S} is defined as {objects}."
    DefinedAs,
    /// "Also {S} is different from {objects}."
    DifferentFrom,
    /// "{S} has members {objects}."
    Members,
}

/// One sentence for a subject and all its objects under one template.
pub fn aggregate(subject: &str, objects: &[String], template: Template) -> String {
    let list = join_list(objects);
    let text = match template {
        Template::KindOf => format!("{subject} is a kind of {list}."),
        Template::Specialisations if objects.len() == 1 => {
            format!("A more specialised kind of {subject} is {list}.")
        }
        Template::Specialisations => format!("More specialised kinds of {subject} are {list}."),
        Template::DefinedAs => format!("{subject} is defined as {list}."),
        Template::DifferentFrom => format!("Also {subject} is different from {list}."),
        Template::Members => format!("{subject} has members {list}."),
    };
    capitalize_first(&text)
}

fn push_unique(out: &mut Vec<String>, item: String) {
    if !out.contains(&item) {
        out.push(item);
    }
}

struct Realizer<'a> {
    namer: Namer<'a>,
    designated: &'a ClassId,
}

impl Realizer<'_> {
    fn subject(&self) -> String {
        self.namer.noun_phrase(self.designated).text
    }

    fn bare(&self) -> String {
        self.namer.class_name(self.designated)
    }

    fn named(&self, e: &ClassExpression) -> Option<String> {
        e.as_named().map(|c| self.namer.class_name(c))
    }

    fn render(&self, e: &ClassExpression, role: SyntacticRole) -> String {
        self.namer.render(e, role).text
    }

    /// Names of the other operands of equivalence or disjointness axioms.
    fn others(&self, axioms: &[ClassifiedAxiom]) -> Vec<String> {
        let mut out = Vec::new();
        for ca in axioms {
            if let Axiom::EquivalentClasses(list) | Axiom::DisjointClasses(list) = &ca.axiom {
                for e in list.iter().filter(|e| !e.is_named(self.designated)) {
                    push_unique(
                        &mut out,
                        self.named(e)
                            .unwrap_or_else(|| self.render(e, SyntacticRole::Object)),
                    );
                }
            }
        }
        out
    }

    fn simple_block(&self, leaves: &[&RstNode], sentences: &mut Vec<Sentence>) {
        for leaf in leaves {
            let Payload::Leaf { slot, group, axioms } = &leaf.payload else {
                continue;
            };
            let groups = vec![*group];
            match slot {
                Slot::Supers => {
                    let mut objects = Vec::new();
                    for ca in axioms {
                        if let Axiom::SubClassOf { sup, .. } = &ca.axiom {
                            for part in sup.conjuncts() {
                                push_unique(
                                    &mut objects,
                                    self.named(part)
                                        .unwrap_or_else(|| self.render(part, SyntacticRole::Object)),
                                );
                            }
                        }
                    }
                    sentences.push(Sentence {
                        text: aggregate(&self.subject(), &objects, Template::KindOf),
                        groups,
                    });
                }
                Slot::Specialisations => {
                    let mut subs = Vec::new();
                    for ca in axioms {
                        if let Axiom::SubClassOf { sub, .. } = &ca.axiom {
                            push_unique(
                                &mut subs,
                                self.named(sub)
                                    .unwrap_or_else(|| self.render(sub, SyntacticRole::Object)),
                            );
                        }
                    }
                    sentences.push(Sentence {
                        text: aggregate(&self.bare(), &subs, Template::Specialisations),
                        groups,
                    });
                }
                Slot::Equivalents => {
                    let list = join_list(&self.others(axioms));
                    match sentences.last_mut() {
                        Some(prev) => {
                            let stem = prev.text.strip_suffix('.').unwrap_or(&prev.text);
                            prev.text = format!("{stem}, and {} is defined as {list}.", self.subject());
                            prev.groups.push(*group);
                        }
                        None => sentences.push(Sentence {
                            text: aggregate(&self.subject(), &self.others(axioms), Template::DefinedAs),
                            groups,
                        }),
                    }
                }
                Slot::Disjoints => sentences.push(Sentence {
                    text: aggregate(&self.subject(), &self.others(axioms), Template::DifferentFrom),
                    groups,
                }),
                _ => {}
            }
        }
    }

    fn complex_block(&self, block: &RstNode) -> Sentence {
        let mut clauses = Vec::new();
        let mut groups = Vec::new();
        for leaf in block.leaves() {
            let Payload::Leaf { slot, group, axioms } = &leaf.payload else {
                continue;
            };
            groups.push(*group);
            match slot {
                Slot::Members => {
                    let mut members = Vec::new();
                    for ca in axioms {
                        if let Axiom::ClassAssertion { individual, .. } = &ca.axiom {
                            push_unique(&mut members, self.namer.name(individual));
                        }
                    }
                    clauses.push(format!("has members {}", join_list(&members)));
                }
                Slot::ComplexSuper => {
                    for ca in axioms {
                        if let Axiom::SubClassOf { sup, .. } = &ca.axiom {
                            clauses.push(format!(
                                "is a kind of {}",
                                self.render(sup, SyntacticRole::Object)
                            ));
                        }
                    }
                }
                Slot::ComplexDefinition => {
                    for ca in axioms {
                        if let Axiom::EquivalentClasses(list) = &ca.axiom {
                            for e in list.iter().filter(|e| !e.is_named(self.designated)) {
                                clauses
                                    .push(format!("is defined as {}", self.render(e, SyntacticRole::Object)));
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        let mut text = format!("{} {}.", self.subject(), clauses.join(", and "));
        if block.connector() == Some(Connector::Additionally) {
            text = format!("Additionally, {text}");
        }
        Sentence {
            text: capitalize_first(&text),
            groups,
        }
    }

    /// An indirect axiom as a sentence about its own subject, without the
    /// final period.
    fn aspect(&self, ca: &ClassifiedAxiom) -> String {
        let subject = |e: &ClassExpression| self.render(e, SyntacticRole::Subject);
        let object = |e: &ClassExpression| self.render(e, SyntacticRole::Object);
        match &ca.axiom {
            Axiom::SubClassOf { sub, sup } => {
                let verb = match sup {
                    ClassExpression::Intersection(_) => "is defined as",
                    _ => "is a kind of",
                };
                format!("{} {verb} {}", subject(sub), object(sup))
            }
            Axiom::EquivalentClasses(list) => {
                let defs: Vec<String> = list[1..]
                    .iter()
                    .map(|e| format!("is defined as {}", object(e)))
                    .collect();
                format!("{} {}", subject(&list[0]), defs.join(", and "))
            }
            Axiom::DisjointClasses(list) => {
                let others: Vec<String> = list[1..].iter().map(object).collect();
                format!("{} is different from {}", subject(&list[0]), join_list(&others))
            }
            Axiom::ClassAssertion { individual, class } => {
                format!("{} is a member of {}", self.namer.name(individual), object(class))
            }
            Axiom::DisjointUnion {
                union_class,
                disjuncts,
            } => {
                let parts: Vec<String> = disjuncts.iter().map(object).collect();
                format!(
                    "{} is the disjoint union of {}",
                    self.namer.noun_phrase(union_class).text,
                    join_list(&parts)
                )
            }
        }
    }

    fn indirect_block(&self, block: &RstNode, paragraph: &mut Paragraph) {
        let items: Vec<(String, GroupLabel)> = block
            .leaves()
            .iter()
            .filter_map(|l| match &l.payload {
                Payload::Leaf { group, axioms, .. } => Some((self.aspect(&axioms[0]), *group)),
                Payload::Block { .. } => None,
            })
            .collect();
        match items.as_slice() {
            [] => {}
            [(one, group)] => paragraph.sentences.push(Sentence {
                text: format!("Another relevant aspect of {} is that {one}.", self.bare()),
                groups: vec![*group],
            }),
            many => {
                let last = many.len() - 1;
                paragraph.bullets = Some(BulletList {
                    intro: Sentence {
                        text: format!("Other relevant aspects of {} are:", self.bare()),
                        groups: Vec::new(),
                    },
                    items: many
                        .iter()
                        .enumerate()
                        .map(|(i, (text, group))| Sentence {
                            text: format!("{}{}", capitalize_first(text), if i == last { "." } else { ";" }),
                            groups: vec![*group],
                        })
                        .collect(),
                });
            }
        }
    }
}

/// Realizes a discourse tree about `designated`.
pub fn realize(
    tree: &RstNode,
    designated: &ClassId,
    lexicon: &Lexicon,
    options: RealizeOptions,
) -> Paragraph {
    let r = Realizer {
        namer: Namer::new(lexicon, options),
        designated,
    };
    let mut paragraph = Paragraph::default();
    for block in &tree.children {
        match block.payload {
            Payload::Block {
                block: Block::SimpleDirect,
                ..
            } => r.simple_block(&block.leaves(), &mut paragraph.sentences),
            Payload::Block {
                block: Block::ComplexDirect,
                ..
            } => {
                let s = r.complex_block(block);
                paragraph.sentences.push(s);
            }
            Payload::Block {
                block: Block::Indirect,
                ..
            } => r.indirect_block(block, &mut paragraph),
            _ => {}
        }
    }
    paragraph
}

/// Plans and realizes one class frame.
pub fn verbalize_frame(frame: &ClassFrame, lexicon: &Lexicon, options: RealizeOptions) -> Paragraph {
    let plan = plan(frame);
    realize(&plan.tree, &plan.designated, lexicon, options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Article, LexEntry, PropertyId};

    fn c(name: &str) -> ClassId {
        ClassId::new(format!(":{name}")).unwrap()
    }

    fn n(name: &str) -> ClassExpression {
        ClassExpression::Named(c(name))
    }

    fn some(p: &str, f: ClassExpression) -> ClassExpression {
        ClassExpression::some(PropertyId::new(format!(":{p}")).unwrap(), f)
    }

    fn text(f: &str, axioms: Vec<Axiom>) -> String {
        let frame = ClassFrame::new(c(f), axioms).unwrap();
        verbalize_frame(&frame, &Lexicon::new(), RealizeOptions::default()).to_text()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn aggregation_templates() {
        assert_eq!(
            aggregate("X", &strings(&["P", "Q", "R"]), Template::KindOf),
            "X is a kind of P, Q and R."
        );
        assert_eq!(
            aggregate(
                "settlement",
                &strings(&["city", "town", "village"]),
                Template::Specialisations
            ),
            "More specialised kinds of settlement are city, town and village."
        );
        assert_eq!(
            aggregate("X", &strings(&["Z"]), Template::Specialisations),
            "A more specialised kind of X is Z."
        );
        assert_eq!(
            aggregate("a settlement", &strings(&["P"]), Template::KindOf),
            "A settlement is a kind of P."
        );
    }

    #[test]
    fn single_subclass() {
        assert_eq!(
            text("X", vec![Axiom::sub_class_of(n("X"), n("P"))]),
            "X is a kind of P."
        );
    }

    #[test]
    fn equivalence_joins_previous_sentence() {
        let t = text(
            "F",
            vec![
                Axiom::sub_class_of(n("F"), n("X")),
                Axiom::sub_class_of(n("F"), n("Y")),
                Axiom::sub_class_of(n("Z"), n("F")),
                Axiom::EquivalentClasses(vec![n("P"), n("F")]),
                Axiom::EquivalentClasses(vec![n("F"), n("Q")]),
                Axiom::DisjointClasses(vec![n("R"), n("F")]),
            ],
        );
        assert_eq!(
            t,
            "F is a kind of X and Y. A more specialised kind of F is Z, and F is defined as P and Q. Also F is different from R."
        );
    }

    #[test]
    fn equivalence_alone() {
        assert_eq!(
            text("F", vec![Axiom::EquivalentClasses(vec![n("F"), n("G")])]),
            "F is defined as G."
        );
    }

    #[test]
    fn complex_clauses_merge() {
        let t = text(
            "F",
            vec![
                Axiom::sub_class_of(n("F"), some("p", n("A"))),
                Axiom::EquivalentClasses(vec![
                    n("F"),
                    ClassExpression::intersection(vec![n("B"), some("hasQ", n("C"))]).unwrap(),
                ]),
                Axiom::ClassAssertion {
                    individual: ":i1".into(),
                    class: n("F"),
                },
                Axiom::ClassAssertion {
                    individual: ":i2".into(),
                    class: n("F"),
                },
            ],
        );
        assert_eq!(
            t,
            "F has members i1 and i2, and is a kind of p A, and is defined as B that hasQ C."
        );
    }

    #[test]
    fn bullets_for_several_aspects() {
        let frame = ClassFrame::new(
            c("F"),
            vec![
                Axiom::sub_class_of(n("F"), n("P")),
                Axiom::EquivalentClasses(vec![n("A"), some("p", n("F"))]),
                Axiom::sub_class_of(n("B"), some("q", n("F"))),
            ],
        )
        .unwrap();
        let p = verbalize_frame(&frame, &Lexicon::new(), RealizeOptions::default());
        let b = p.bullets.as_ref().unwrap();
        assert_eq!(b.intro.text, "Other relevant aspects of F are:");
        assert_eq!(b.items[0].text, "B is a kind of q F;");
        assert_eq!(b.items[1].text, "A is defined as p F.");
        assert_eq!(
            p.to_text(),
            "F is a kind of P. Other relevant aspects of F are:\n- B is a kind of q F;\n- A is defined as p F."
        );
    }

    #[test]
    fn articles_only_capitalized_at_sentence_start() {
        let lex: Lexicon = [
            LexEntry::new(":Settlement", "settlement")
                .unwrap()
                .with_article(Article::A),
            LexEntry::new(":AdministrativeDivision", "administrative division").unwrap(),
            LexEntry::new(":City", "city").unwrap(),
        ]
        .into_iter()
        .collect();
        let frame = ClassFrame::new(
            c("Settlement"),
            vec![
                Axiom::sub_class_of(n("Settlement"), n("AdministrativeDivision")),
                Axiom::sub_class_of(n("City"), n("Settlement")),
            ],
        )
        .unwrap();
        assert_eq!(
            verbalize_frame(&frame, &lex, RealizeOptions::default()).to_text(),
            "A settlement is a kind of administrative division. A more specialised kind of settlement is city."
        );
    }

    #[test]
    fn capitalization() {
        assert_eq!(capitalize_first("an x"), "An x");
        assert_eq!(capitalize_first("(b) c"), "(B) c");
        assert_eq!(capitalize_first("123"), "123");
    }

    #[test]
    fn dropped_axioms_leave_no_text() {
        let frame = ClassFrame::new(
            c("F"),
            vec![Axiom::DisjointUnion {
                union_class: c("F"),
                disjuncts: vec![n("A"), n("B")],
            }],
        )
        .unwrap();
        assert!(verbalize_frame(&frame, &Lexicon::new(), RealizeOptions::default()).is_empty());
    }
}
