use std::collections::BTreeSet;

use super::{ParseError, ParseWarning, Position, SourceDocument, SyntaxError};
use crate::model::{Axiom, ClassExpression, ClassId, EntityKind, Ontology, PropertyId};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Reject axioms that reference undeclared ids instead of declaring them.
    pub strict: bool,
}

#[derive(Debug, Clone)]
pub struct Parsed {
    pub ontology: Ontology,
    pub warnings: Vec<ParseWarning>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Word(String),
    Id(String),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Open => "'('".into(),
            Tok::Close => "')'".into(),
            Tok::Word(w) => format!("keyword {w}"),
            Tok::Id(id) => format!("identifier {id}"),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(doc: &SourceDocument) -> Result<Vec<(Tok, Position)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = doc.text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    let id_char = |c: char| !c.is_whitespace() && c != '(' && c != ')' && c != '#';

    while let Some(&c) = chars.peek() {
        let pos = Position { line, column };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
            }
            '(' => {
                chars.next();
                column += 1;
                out.push((Tok::Open, pos));
            }
            ')' => {
                chars.next();
                column += 1;
                out.push((Tok::Close, pos));
            }
            ':' => {
                let mut id = String::from(':');
                chars.next();
                column += 1;
                while let Some(&c) = chars.peek() {
                    if !id_char(c) {
                        break;
                    }
                    id.push(c);
                    chars.next();
                    column += 1;
                }
                if id.len() == 1 {
                    return Err(ParseError {
                        path: doc.path.clone(),
                        position: pos,
                        expected: vec!["identifier name after ':'".into()],
                        found: "':'".into(),
                    });
                }
                out.push((Tok::Id(id), pos));
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if !c.is_ascii_alphanumeric() {
                        break;
                    }
                    word.push(c);
                    chars.next();
                    column += 1;
                }
                out.push((Tok::Word(word), pos));
            }
            other => {
                return Err(ParseError {
                    path: doc.path.clone(),
                    position: pos,
                    expected: vec!["'('".into(), "')'".into(), "keyword".into(), "identifier".into()],
                    found: format!("character {other:?}"),
                });
            }
        }
    }
    out.push((Tok::End, Position { line, column }));
    Ok(out)
}

const AXIOM_KEYWORDS: [&str; 6] = [
    "Declaration",
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "ClassAssertion",
    "DisjointUnion",
];

struct Parser<'a> {
    path: &'a str,
    tokens: Vec<(Tok, Position)>,
    at: usize,
    declared_classes: BTreeSet<ClassId>,
    declared_properties: BTreeSet<PropertyId>,
    declared_individuals: BTreeSet<String>,
    references: Vec<(EntityKind, String, Position)>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Position {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Tok, Position) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> PResult<T> {
        Err(ParseError {
            path: self.path.to_string(),
            position: self.pos(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect_open(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Open => {
                self.bump();
                Ok(())
            }
            _ => self.error(&["'('"]),
        }
    }

    fn expect_close(&mut self) -> PResult<()> {
        match self.peek() {
            Tok::Close => {
                self.bump();
                Ok(())
            }
            _ => self.error(&["')'"]),
        }
    }

    fn expect_id(&mut self) -> PResult<(String, Position)> {
        match self.peek().clone() {
            Tok::Id(id) => {
                let (_, pos) = self.bump();
                Ok((id, pos))
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn expect_word(&mut self, options: &[&str]) -> PResult<String> {
        match self.peek().clone() {
            Tok::Word(w) if options.contains(&w.as_str()) => {
                self.bump();
                Ok(w)
            }
            _ => self.error(options),
        }
    }

    fn document(&mut self) -> PResult<Vec<Axiom>> {
        let mut axioms = Vec::new();
        let wrapped = matches!(self.peek(), Tok::Word(w) if w == "Ontology");
        if wrapped {
            self.bump();
            self.expect_open()?;
        }
        loop {
            match self.peek() {
                Tok::Close if wrapped => {
                    self.bump();
                    break;
                }
                Tok::End if !wrapped => break,
                Tok::Word(_) => {
                    if let Some(axiom) = self.item()? {
                        axioms.push(axiom);
                    }
                }
                _ if wrapped => {
                    let mut expected = AXIOM_KEYWORDS.to_vec();
                    expected.push("')'");
                    return self.error(&expected);
                }
                _ => return self.error(&AXIOM_KEYWORDS),
            }
        }
        if !matches!(self.peek(), Tok::End) {
            return self.error(&["end of input"]);
        }
        Ok(axioms)
    }

    fn item(&mut self) -> PResult<Option<Axiom>> {
        let keyword = self.expect_word(&AXIOM_KEYWORDS)?;
        self.expect_open()?;
        let axiom = match keyword.as_str() {
            "Declaration" => {
                let kind = self.expect_word(&["Class", "ObjectProperty", "NamedIndividual"])?;
                self.expect_open()?;
                let (id, _) = self.expect_id()?;
                self.expect_close()?;
                match kind.as_str() {
                    "Class" => {
                        self.declared_classes.insert(ClassId::new(id).expect("non-empty"));
                    }
                    "ObjectProperty" => {
                        self.declared_properties
                            .insert(PropertyId::new(id).expect("non-empty"));
                    }
                    _ => {
                        self.declared_individuals.insert(id);
                    }
                }
                None
            }
            "SubClassOf" => {
                let sub = self.expression()?;
                let sup = self.expression()?;
                Some(Axiom::SubClassOf { sub, sup })
            }
            "EquivalentClasses" => Some(Axiom::EquivalentClasses(self.expression_list(2)?)),
            "DisjointClasses" => Some(Axiom::DisjointClasses(self.expression_list(2)?)),
            "ClassAssertion" => {
                let class = self.expression()?;
                let (individual, pos) = self.expect_id()?;
                self.references
                    .push((EntityKind::NamedIndividual, individual.clone(), pos));
                Some(Axiom::ClassAssertion { individual, class })
            }
            "DisjointUnion" => {
                let (id, pos) = self.expect_id()?;
                self.references.push((EntityKind::Class, id.clone(), pos));
                let union_class = ClassId::new(id).expect("non-empty");
                let disjuncts = self.expression_list(2)?;
                Some(Axiom::DisjointUnion {
                    union_class,
                    disjuncts,
                })
            }
            _ => unreachable!("keyword filtered by expect_word"),
        };
        self.expect_close()?;
        Ok(axiom)
    }

    /// Parses expressions up to (not including) the closing parenthesis.
    fn expression_list(&mut self, min: usize) -> PResult<Vec<ClassExpression>> {
        let mut list = Vec::new();
        while !matches!(self.peek(), Tok::Close) || list.len() < min {
            list.push(self.expression()?);
        }
        Ok(list)
    }

    fn expression(&mut self) -> PResult<ClassExpression> {
        match self.peek().clone() {
            Tok::Id(id) => {
                let (_, pos) = self.bump();
                self.references.push((EntityKind::Class, id.clone(), pos));
                Ok(ClassExpression::Named(ClassId::new(id).expect("non-empty")))
            }
            Tok::Word(w) if w == "ObjectIntersectionOf" => {
                self.bump();
                self.expect_open()?;
                let parts = self.expression_list(2)?;
                self.expect_close()?;
                Ok(ClassExpression::Intersection(parts))
            }
            Tok::Word(w) if w == "ObjectSomeValuesFrom" => {
                self.bump();
                self.expect_open()?;
                let (prop, pos) = self.expect_id()?;
                self.references
                    .push((EntityKind::ObjectProperty, prop.clone(), pos));
                let filler = self.expression()?;
                self.expect_close()?;
                Ok(ClassExpression::some(
                    PropertyId::new(prop).expect("non-empty"),
                    filler,
                ))
            }
            _ => self.error(&["identifier", "ObjectIntersectionOf", "ObjectSomeValuesFrom"]),
        }
    }
}

/// Parses a document in the canonical functional-style syntax.
///
/// In lenient mode (the default) undeclared ids are declared on first use
/// and reported as warnings; strict mode turns the first one into an error.
pub fn parse_ontology(doc: &SourceDocument, options: ParseOptions) -> Result<Parsed, SyntaxError> {
    let tokens = tokenize(doc)?;
    let mut parser = Parser {
        path: &doc.path,
        tokens,
        at: 0,
        declared_classes: BTreeSet::new(),
        declared_properties: BTreeSet::new(),
        declared_individuals: BTreeSet::new(),
        references: Vec::new(),
    };
    let axioms = parser.document()?;

    let mut warnings = Vec::new();
    let mut classes = parser.declared_classes;
    let mut properties = parser.declared_properties;
    let mut individuals = parser.declared_individuals;
    for (kind, id, position) in parser.references {
        let declared = match kind {
            EntityKind::Class => classes.contains(id.as_str()),
            EntityKind::ObjectProperty => properties.contains(id.as_str()),
            EntityKind::NamedIndividual => individuals.contains(&id),
        };
        if declared {
            continue;
        }
        if options.strict {
            return Err(SyntaxError::UndeclaredEntity {
                path: doc.path.clone(),
                position,
                kind,
                id,
            });
        }
        warnings.push(ParseWarning {
            position,
            message: format!("undeclared {kind} {id} declared implicitly"),
        });
        match kind {
            EntityKind::Class => {
                classes.insert(ClassId::new(id).expect("non-empty"));
            }
            EntityKind::ObjectProperty => {
                properties.insert(PropertyId::new(id).expect("non-empty"));
            }
            EntityKind::NamedIndividual => {
                individuals.insert(id);
            }
        }
    }

    let ontology = Ontology::new(classes, properties, individuals, axioms)
        .expect("parser declares every referenced entity");
    Ok(Parsed { ontology, warnings })
}

/// Lenient parse of inline text.
pub fn parse_ontology_str(text: &str) -> Result<Ontology, SyntaxError> {
    parse_ontology(&SourceDocument::inline(text), ParseOptions::default()).map(|p| p.ontology)
}
