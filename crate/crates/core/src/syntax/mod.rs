//! Canonical text formats: a functional-style ontology syntax and a
//! tab-separated lexicon.
//!
//! Ontology grammar (`#` starts a comment that runs to end of line):
//!
//! ```text
//! document    := "Ontology(" item* ")" | item*
//! item        := "Declaration(" ("Class" | "ObjectProperty" | "NamedIndividual") "(" ID "))"
//!              | "SubClassOf(" ce ce ")"
//!              | "EquivalentClasses(" ce ce+ ")"
//!              | "DisjointClasses(" ce ce+ ")"
//!              | "ClassAssertion(" ce ID ")"
//!              | "DisjointUnion(" ID ce ce+ ")"
//! ce          := ID | "ObjectIntersectionOf(" ce ce+ ")" | "ObjectSomeValuesFrom(" ID ce ")"
//! ID          := ":" followed by one or more characters other than whitespace, "(", ")", "#"
//! ```

mod lexicon;
mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

pub use lexicon::load_lexicon;
pub use parser::{parse_ontology, parse_ontology_str, ParseOptions, Parsed};
pub use printer::{serialize_axiom, serialize_expression, serialize_ontology};

use crate::model::EntityKind;

/// Version tag of the ontology grammar accepted by [`parse_ontology`].
pub const GRAMMAR_VERSION: &str = "ofs-el/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDocument {
    pub text: String,
    pub path: String,
}

impl SourceDocument {
    pub fn new(path: impl Into<String>, text: impl Into<String>) -> Self {
        SourceDocument {
            text: text.into(),
            path: path.into(),
        }
    }

    pub fn inline(text: impl Into<String>) -> Self {
        Self::new("<inline>", text)
    }

    pub fn read(path: impl AsRef<std::path::Path>) -> std::io::Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Ok(Self::new(path.display().to_string(), text))
    }
}

/// Line and column, both 1-based; columns count characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}:{position}: expected {}, found {found}", .expected.join(" or "))]
pub struct ParseError {
    pub path: String,
    pub position: Position,
    pub expected: Vec<String>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}:{position}: undeclared {kind} {id}")]
    UndeclaredEntity {
        path: String,
        position: Position,
        kind: EntityKind,
        id: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconFormatError {
    #[error("{path}:{line}: expected 2 to 5 tab-separated columns, found {found}")]
    ColumnCount { path: String, line: u64, found: usize },
    #[error("{path}:{line}: unknown article {article:?}")]
    Article {
        path: String,
        line: u64,
        article: String,
    },
    #[error("{path}:{line}: empty preferred name")]
    EmptyName { path: String, line: u64 },
    #[error("{path}: {message}")]
    Read { path: String, message: String },
}

/// Non-fatal diagnostics from lenient parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub position: Position,
    pub message: String,
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.position, self.message)
    }
}
