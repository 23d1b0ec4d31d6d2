use crate::model::{ClassExpression, ClassId, Lexicon, PropertyId};

use super::RealizeOptions;

/// Syntactic slot an expression is rendered for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntacticRole {
    Subject,
    Object,
    /// Predicate after a subject: "is a disorder", "has a finding site in ...".
    Clause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounPhrase {
    pub text: String,
    pub article_applied: bool,
}

/// Looks up surface names; falls back to the identifier without its colon.
#[derive(Debug, Clone, Copy)]
pub struct Namer<'a> {
    pub lexicon: &'a Lexicon,
    pub options: RealizeOptions,
}

impl<'a> Namer<'a> {
    pub fn new(lexicon: &'a Lexicon, options: RealizeOptions) -> Self {
        Namer { lexicon, options }
    }

    /// Bare preferred name.
    pub fn name(&self, id: &str) -> String {
        match self.lexicon.get(id) {
            Some(e) => e.preferred_name.clone(),
            None => id.strip_prefix(':').unwrap_or(id).to_string(),
        }
    }

    pub fn class_name(&self, id: &ClassId) -> String {
        self.name(id.as_str())
    }

    fn article(&self, id: &str, name: &str) -> Option<&'static str> {
        let given = self.lexicon.get(id).map(|e| e.article).unwrap_or_default();
        match given.as_str() {
            Some(a) => Some(a),
            None if self.options.guess_articles => Some(guess_article(name)),
            None => None,
        }
    }

    /// Article (when known) plus preferred name.
    pub fn noun_phrase(&self, id: &ClassId) -> NounPhrase {
        let name = self.class_name(id);
        match self.article(id.as_str(), &name) {
            Some(a) => NounPhrase {
                text: format!("{a} {name}"),
                article_applied: true,
            },
            None => NounPhrase {
                text: name,
                article_applied: false,
            },
        }
    }

    fn property_phrase(&self, p: &PropertyId) -> (String, Option<String>) {
        match self.lexicon.get(p.as_str()) {
            Some(e) => (
                e.property_phrase
                    .clone()
                    .unwrap_or_else(|| e.preferred_name.clone()),
                e.joiner.clone(),
            ),
            None => (p.local_name().to_string(), None),
        }
    }

    pub fn render(&self, expr: &ClassExpression, role: SyntacticRole) -> NounPhrase {
        match (expr, role) {
            (ClassExpression::Named(id), SyntacticRole::Clause) => {
                let np = self.noun_phrase(id);
                NounPhrase {
                    text: format!("is {}", np.text),
                    ..np
                }
            }
            (ClassExpression::Named(id), _) => self.noun_phrase(id),
            (ClassExpression::Existential { property, filler }, _) => {
                if self.options.elide_rolegroup && is_rolegroup(property) {
                    return self.render(filler, role);
                }
                let (phrase, joiner) = self.property_phrase(property);
                let filler = self.render(filler, SyntacticRole::Object);
                let joiner = joiner
                    .or_else(|| (phrase.split_whitespace().next() == Some("has")).then(|| "in".to_string()));
                let text = match joiner {
                    Some(j) => format!("{phrase} {j} {}", filler.text),
                    None => format!("{phrase} {}", filler.text),
                };
                NounPhrase {
                    text,
                    article_applied: filler.article_applied,
                }
            }
            (ClassExpression::Intersection(parts), SyntacticRole::Clause) => self.clauses(parts),
            (ClassExpression::Intersection(parts), _) => {
                if parts.iter().all(|p| p.as_named().is_some()) {
                    let nps: Vec<NounPhrase> = parts.iter().map(|p| self.render(p, role)).collect();
                    let article_applied = nps.iter().any(|np| np.article_applied);
                    let texts: Vec<String> = nps.into_iter().map(|np| np.text).collect();
                    return NounPhrase {
                        text: join_list(&texts),
                        article_applied,
                    };
                }
                match parts[0].as_named() {
                    Some(head) => {
                        let head = self.noun_phrase(head);
                        let rest = self.clauses(&parts[1..]);
                        NounPhrase {
                            text: format!("{} that {}", head.text, rest.text),
                            article_applied: head.article_applied,
                        }
                    }
                    None => self.clauses(parts),
                }
            }
        }
    }

    fn clauses(&self, parts: &[ClassExpression]) -> NounPhrase {
        let rendered: Vec<NounPhrase> = parts
            .iter()
            .map(|p| self.render(p, SyntacticRole::Clause))
            .collect();
        NounPhrase {
            article_applied: rendered.iter().any(|r| r.article_applied),
            text: rendered
                .into_iter()
                .map(|r| r.text)
                .collect::<Vec<_>>()
                .join(", and "),
        }
    }
}

pub fn is_rolegroup(p: &PropertyId) -> bool {
    p.local_name().eq_ignore_ascii_case("rolegroup")
}

fn guess_article(name: &str) -> &'static str {
    match name.chars().next().map(|c| c.to_ascii_lowercase()) {
        Some('a' | 'e' | 'i' | 'o' | 'u') => "an",
        _ => "a",
    }
}

/// "a", "a and b", "a, b and c".
pub fn join_list(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{} and {last}", init.join(", ")),
    }
}

pub fn render_expression(
    expr: &ClassExpression,
    lexicon: &Lexicon,
    role: SyntacticRole,
    options: RealizeOptions,
) -> NounPhrase {
    Namer::new(lexicon, options).render(expr, role)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Article, LexEntry};

    fn c(name: &str) -> ClassId {
        ClassId::new(format!(":{name}")).unwrap()
    }

    fn n(name: &str) -> ClassExpression {
        ClassExpression::Named(c(name))
    }

    fn some(p: &str, f: ClassExpression) -> ClassExpression {
        ClassExpression::some(PropertyId::new(format!(":{p}")).unwrap(), f)
    }

    fn lexicon() -> Lexicon {
        [
            LexEntry::new(":IntracranialStructure", "intracranial structure")
                .unwrap()
                .with_article(Article::An),
            LexEntry::new(":hasProcedureSite", "procedure site")
                .unwrap()
                .with_property_phrase("has a procedure site"),
            LexEntry::new(":partOf", "part of").unwrap(),
            LexEntry::new(":BasalGanglion", "basal ganglion")
                .unwrap()
                .with_article(Article::A),
            LexEntry::new(":KidneyOperation", "kidney operation")
                .unwrap()
                .with_article(Article::A),
            LexEntry::new(":SolidOrganTransplant", "solid organ transplant")
                .unwrap()
                .with_article(Article::A),
            LexEntry::new(":RenalReplacement", "renal replacement")
                .unwrap()
                .with_article(Article::A),
            LexEntry::new(":hasMethod", "method")
                .unwrap()
                .with_property_phrase("has a method"),
            LexEntry::new(
                ":SurgicalTransplantationAction",
                "surgical transplantation action",
            )
            .unwrap()
            .with_article(Article::A),
        ]
        .into_iter()
        .collect()
    }

    fn render(expr: &ClassExpression, role: SyntacticRole) -> String {
        render_expression(expr, &lexicon(), role, RealizeOptions::default()).text
    }

    #[test]
    fn has_property_takes_in() {
        let e = some("hasProcedureSite", n("IntracranialStructure"));
        assert_eq!(
            render(&e, SyntacticRole::Object),
            "has a procedure site in an intracranial structure"
        );
    }

    #[test]
    fn other_property_has_no_joiner() {
        assert_eq!(
            render(&some("partOf", n("BasalGanglion")), SyntacticRole::Object),
            "part of a basal ganglion"
        );
    }

    #[test]
    fn head_noun_with_clauses() {
        let e = ClassExpression::intersection(vec![
            n("KidneyOperation"),
            n("SolidOrganTransplant"),
            n("RenalReplacement"),
            some("hasMethod", n("SurgicalTransplantationAction")),
        ])
        .unwrap();
        assert_eq!(
            render(&e, SyntacticRole::Object),
            "a kidney operation that is a solid organ transplant, and is a renal replacement, and has a method in a surgical transplantation action"
        );
    }

    #[test]
    fn named_conjunction_is_a_list() {
        let e = ClassExpression::intersection(vec![n("KidneyOperation"), n("RenalReplacement"), n("Graft")])
            .unwrap();
        assert_eq!(
            render(&e, SyntacticRole::Object),
            "a kidney operation, a renal replacement and Graft"
        );
    }

    #[test]
    fn missing_entries_fall_back_to_identifier() {
        let np = render_expression(
            &n("Graft"),
            &Lexicon::new(),
            SyntacticRole::Subject,
            RealizeOptions::default(),
        );
        assert_eq!(np.text, "Graft");
        assert!(!np.article_applied);
    }

    #[test]
    fn guessed_articles() {
        let options = RealizeOptions {
            guess_articles: true,
            ..Default::default()
        };
        let lex: Lexicon = [
            LexEntry::new(":Organ", "organ").unwrap(),
            LexEntry::new(":Graft", "graft").unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            render_expression(&n("Organ"), &lex, SyntacticRole::Object, options).text,
            "an organ"
        );
        assert_eq!(
            render_expression(&n("Graft"), &lex, SyntacticRole::Object, options).text,
            "a graft"
        );
    }

    #[test]
    fn rolegroup_elision() {
        let e = some("RoleGroup", some("partOf", n("BasalGanglion")));
        assert_eq!(
            render(&e, SyntacticRole::Object),
            "RoleGroup part of a basal ganglion"
        );
        let options = RealizeOptions {
            elide_rolegroup: true,
            ..Default::default()
        };
        assert_eq!(
            render_expression(&e, &lexicon(), SyntacticRole::Object, options).text,
            "part of a basal ganglion"
        );
    }

    #[test]
    fn lists() {
        let s = |v: &[&str]| join_list(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(s(&["P"]), "P");
        assert_eq!(s(&["P", "Q"]), "P and Q");
        assert_eq!(s(&["P", "Q", "R"]), "P, Q and R");
    }
}
