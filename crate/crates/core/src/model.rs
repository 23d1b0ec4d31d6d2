//! In-memory model of the OWL-EL subset: identifiers, class expressions,
//! axioms, the ontology container and per-class frames.
//!
//! Everything here is immutable once built. Frames follow the usage-based
//! view: a class frame holds every axiom that mentions the class anywhere,
//! in source order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("identifier must not be empty")]
    EmptyIdentifier,
    #[error("unknown class {0}")]
    UnknownClass(String),
    #[error("axiom references undeclared {kind} {id}")]
    UndeclaredReference { kind: EntityKind, id: String },
    #[error("{0} needs at least two operands")]
    TooFewOperands(&'static str),
    #[error("axiom does not mention {0}")]
    NotInFrame(String),
    #[error("preferred name for {0} is empty")]
    EmptyPreferredName(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    NamedIndividual,
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntityKind::Class => "class",
            EntityKind::ObjectProperty => "object property",
            EntityKind::NamedIndividual => "individual",
        })
    }
}

macro_rules! identifier {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            pub fn new(iri: impl Into<String>) -> Result<Self, ModelError> {
                let iri = iri.into();
                if iri.is_empty() {
                    return Err(ModelError::EmptyIdentifier);
                }
                Ok(Self(iri))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            /// The identifier without its leading `:` prefix marker.
            pub fn local_name(&self) -> &str {
                self.0.strip_prefix(':').unwrap_or(&self.0)
            }
        }

        impl std::borrow::Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

identifier!(
    /// Opaque class identifier, e.g. `:LowerTrunkStructure`.
    ClassId
);
identifier!(
    /// Opaque object property identifier, e.g. `:hasFindingSite`.
    PropertyId
);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassExpression {
    Named(ClassId),
    /// Conjunction of two or more expressions, in source order.
    Intersection(Vec<ClassExpression>),
    /// `ObjectSomeValuesFrom(property filler)`.
    Existential {
        property: PropertyId,
        filler: Box<ClassExpression>,
    },
}

impl ClassExpression {
    pub fn named(id: &ClassId) -> Self {
        ClassExpression::Named(id.clone())
    }

    pub fn intersection(parts: Vec<ClassExpression>) -> Result<Self, ModelError> {
        if parts.len() < 2 {
            return Err(ModelError::TooFewOperands("ObjectIntersectionOf"));
        }
        Ok(ClassExpression::Intersection(parts))
    }

    pub fn some(property: PropertyId, filler: ClassExpression) -> Self {
        ClassExpression::Existential {
            property,
            filler: Box::new(filler),
        }
    }

    /// Simple expressions are named classes; everything else is complex.
    pub fn is_simple(&self) -> bool {
        matches!(self, ClassExpression::Named(_))
    }

    pub fn as_named(&self) -> Option<&ClassId> {
        match self {
            ClassExpression::Named(id) => Some(id),
            _ => None,
        }
    }

    pub fn is_named(&self, class: &ClassId) -> bool {
        self.as_named() == Some(class)
    }

    pub fn mentions(&self, class: &ClassId) -> bool {
        match self {
            ClassExpression::Named(id) => id == class,
            ClassExpression::Intersection(parts) => parts.iter().any(|p| p.mentions(class)),
            ClassExpression::Existential { filler, .. } => filler.mentions(class),
        }
    }

    /// Top-level conjuncts: the parts of an intersection, or the expression itself.
    pub fn conjuncts(&self) -> &[ClassExpression] {
        match self {
            ClassExpression::Intersection(parts) => parts,
            other => std::slice::from_ref(other),
        }
    }

    pub fn for_each_class<'a>(&'a self, f: &mut impl FnMut(&'a ClassId)) {
        match self {
            ClassExpression::Named(id) => f(id),
            ClassExpression::Intersection(parts) => parts.iter().for_each(|p| p.for_each_class(f)),
            ClassExpression::Existential { filler, .. } => filler.for_each_class(f),
        }
    }

    pub fn for_each_property<'a>(&'a self, f: &mut impl FnMut(&'a PropertyId)) {
        match self {
            ClassExpression::Named(_) => {}
            ClassExpression::Intersection(parts) => parts.iter().for_each(|p| p.for_each_property(f)),
            ClassExpression::Existential { property, filler } => {
                f(property);
                filler.for_each_property(f);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ClassExpression::Named(_) => 1,
            ClassExpression::Intersection(parts) => 1 + parts.iter().map(Self::depth).max().unwrap_or(0),
            ClassExpression::Existential { filler, .. } => 1 + filler.depth(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    SubClassOf {
        sub: ClassExpression,
        sup: ClassExpression,
    },
    EquivalentClasses(Vec<ClassExpression>),
    DisjointClasses(Vec<ClassExpression>),
    ClassAssertion {
        individual: String,
        class: ClassExpression,
    },
    DisjointUnion {
        union_class: ClassId,
        disjuncts: Vec<ClassExpression>,
    },
}

impl Axiom {
    pub fn sub_class_of(sub: ClassExpression, sup: ClassExpression) -> Self {
        Axiom::SubClassOf { sub, sup }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Axiom::SubClassOf { .. } => "SubClassOf",
            Axiom::EquivalentClasses(_) => "EquivalentClasses",
            Axiom::DisjointClasses(_) => "DisjointClasses",
            Axiom::ClassAssertion { .. } => "ClassAssertion",
            Axiom::DisjointUnion { .. } => "DisjointUnion",
        }
    }

    /// The class-expression operands of the axiom. The union class of a
    /// `DisjointUnion` is an identifier, not an operand.
    pub fn operands(&self) -> Vec<&ClassExpression> {
        match self {
            Axiom::SubClassOf { sub, sup } => vec![sub, sup],
            Axiom::EquivalentClasses(list) | Axiom::DisjointClasses(list) => list.iter().collect(),
            Axiom::ClassAssertion { class, .. } => vec![class],
            Axiom::DisjointUnion { disjuncts, .. } => disjuncts.iter().collect(),
        }
    }

    /// True iff `class` occurs anywhere in the axiom, at any depth.
    pub fn mentions(&self, class: &ClassId) -> bool {
        if let Axiom::DisjointUnion { union_class, .. } = self {
            if union_class == class {
                return true;
            }
        }
        self.operands().iter().any(|e| e.mentions(class))
    }

    pub fn for_each_class<'a>(&'a self, f: &mut impl FnMut(&'a ClassId)) {
        if let Axiom::DisjointUnion { union_class, .. } = self {
            f(union_class);
        }
        for e in self.operands() {
            e.for_each_class(f);
        }
    }

    pub fn for_each_property<'a>(&'a self, f: &mut impl FnMut(&'a PropertyId)) {
        for e in self.operands() {
            e.for_each_property(f);
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        fn check(e: &ClassExpression) -> Result<(), ModelError> {
            match e {
                ClassExpression::Named(_) => Ok(()),
                ClassExpression::Intersection(parts) => {
                    if parts.len() < 2 {
                        return Err(ModelError::TooFewOperands("ObjectIntersectionOf"));
                    }
                    parts.iter().try_for_each(check)
                }
                ClassExpression::Existential { filler, .. } => check(filler),
            }
        }
        match self {
            Axiom::EquivalentClasses(list) if list.len() < 2 => {
                return Err(ModelError::TooFewOperands("EquivalentClasses"))
            }
            Axiom::DisjointClasses(list) if list.len() < 2 => {
                return Err(ModelError::TooFewOperands("DisjointClasses"))
            }
            Axiom::DisjointUnion { disjuncts, .. } if disjuncts.len() < 2 => {
                return Err(ModelError::TooFewOperands("DisjointUnion"))
            }
            _ => {}
        }
        self.operands().into_iter().try_for_each(check)
    }
}

/// Mentions check over a single axiom.
pub fn mentions(axiom: &Axiom, class: &ClassId) -> bool {
    axiom.mentions(class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Article {
    A,
    An,
    The,
    #[default]
    None,
}

impl Article {
    pub fn parse(text: &str) -> Option<Article> {
        match text.trim() {
            "a" | "A" => Some(Article::A),
            "an" | "An" => Some(Article::An),
            "the" | "The" => Some(Article::The),
            "" | "none" => Some(Article::None),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&'static str> {
        match self {
            Article::A => Some("a"),
            Article::An => Some("an"),
            Article::The => Some("the"),
            Article::None => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub id: String,
    pub preferred_name: String,
    pub article: Article,
    /// Verb phrase used when the id names a property, e.g. "has a finding site".
    pub property_phrase: Option<String>,
    /// Word placed between the property phrase and its filler; overrides
    /// the "has ... in" heuristic when present.
    pub joiner: Option<String>,
}

impl LexEntry {
    pub fn new(id: impl Into<String>, preferred_name: impl Into<String>) -> Result<Self, ModelError> {
        let id = id.into();
        let preferred_name = preferred_name.into();
        if preferred_name.trim().is_empty() {
            return Err(ModelError::EmptyPreferredName(id));
        }
        Ok(LexEntry {
            id,
            preferred_name,
            article: Article::None,
            property_phrase: None,
            joiner: None,
        })
    }

    pub fn with_article(mut self, article: Article) -> Self {
        self.article = article;
        self
    }

    pub fn with_property_phrase(mut self, phrase: impl Into<String>) -> Self {
        self.property_phrase = Some(phrase.into());
        self
    }
}

/// Surface names keyed by identifier text (classes, properties and
/// individuals share one namespace).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, LexEntry>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Later inserts override earlier ones.
    pub fn insert(&mut self, entry: LexEntry) {
        self.entries.insert(entry.id.clone(), entry);
    }

    pub fn get(&self, id: &str) -> Option<&LexEntry> {
        self.entries.get(id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LexEntry> {
        self.entries.values()
    }
}

impl FromIterator<LexEntry> for Lexicon {
    fn from_iter<T: IntoIterator<Item = LexEntry>>(iter: T) -> Self {
        let mut lexicon = Lexicon::new();
        iter.into_iter().for_each(|e| lexicon.insert(e));
        lexicon
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ontology {
    classes: BTreeSet<ClassId>,
    properties: BTreeSet<PropertyId>,
    individuals: BTreeSet<String>,
    axioms: Vec<Axiom>,
    lexicon: Lexicon,
}

impl Ontology {
    /// Builds an ontology, rejecting axioms that reference undeclared entities.
    pub fn new(
        classes: BTreeSet<ClassId>,
        properties: BTreeSet<PropertyId>,
        individuals: BTreeSet<String>,
        axioms: Vec<Axiom>,
    ) -> Result<Self, ModelError> {
        for axiom in &axioms {
            axiom.validate()?;
            let mut missing = None;
            axiom.for_each_class(&mut |c| {
                if missing.is_none() && !classes.contains(c) {
                    missing = Some((EntityKind::Class, c.to_string()));
                }
            });
            axiom.for_each_property(&mut |p| {
                if missing.is_none() && !properties.contains(p) {
                    missing = Some((EntityKind::ObjectProperty, p.to_string()));
                }
            });
            if let Axiom::ClassAssertion { individual, .. } = axiom {
                if missing.is_none() && !individuals.contains(individual) {
                    missing = Some((EntityKind::NamedIndividual, individual.clone()));
                }
            }
            if let Some((kind, id)) = missing {
                return Err(ModelError::UndeclaredReference { kind, id });
            }
        }
        Ok(Ontology {
            classes,
            properties,
            individuals,
            axioms,
            lexicon: Lexicon::new(),
        })
    }

    /// Builds an ontology declaring every entity the axioms reference.
    pub fn from_axioms(axioms: Vec<Axiom>) -> Self {
        let mut classes = BTreeSet::new();
        let mut properties = BTreeSet::new();
        let mut individuals = BTreeSet::new();
        for axiom in &axioms {
            axiom.for_each_class(&mut |c| {
                classes.insert(c.clone());
            });
            axiom.for_each_property(&mut |p| {
                properties.insert(p.clone());
            });
            if let Axiom::ClassAssertion { individual, .. } = axiom {
                individuals.insert(individual.clone());
            }
        }
        Ontology {
            classes,
            properties,
            individuals,
            axioms,
            lexicon: Lexicon::new(),
        }
    }

    pub fn with_lexicon(mut self, lexicon: Lexicon) -> Self {
        self.lexicon = lexicon;
        self
    }

    pub fn classes(&self) -> &BTreeSet<ClassId> {
        &self.classes
    }

    pub fn properties(&self) -> &BTreeSet<PropertyId> {
        &self.properties
    }

    pub fn individuals(&self) -> &BTreeSet<String> {
        &self.individuals
    }

    pub fn axioms(&self) -> &[Axiom] {
        &self.axioms
    }

    pub fn lexicon(&self) -> &Lexicon {
        &self.lexicon
    }

    pub fn class(&self, iri: &str) -> Option<&ClassId> {
        self.classes.iter().find(|c| c.as_str() == iri)
    }

    pub fn collect_frame(&self, class: &ClassId) -> Result<ClassFrame, ModelError> {
        collect_frame(self, class)
    }
}

/// A designated class together with every axiom that mentions it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFrame {
    pub designated: ClassId,
    pub axioms: Vec<Axiom>,
}

impl ClassFrame {
    /// Checked constructor: every axiom must mention the designated class.
    pub fn new(designated: ClassId, axioms: Vec<Axiom>) -> Result<Self, ModelError> {
        if let Some(bad) = axioms.iter().find(|a| !a.mentions(&designated)) {
            return Err(ModelError::NotInFrame(format!(
                "{} ({})",
                designated,
                bad.kind_name()
            )));
        }
        Ok(ClassFrame { designated, axioms })
    }

    /// Wraps an arbitrary axiom list, e.g. a re-coded class description
    /// whose split axioms no longer all mention the class.
    pub fn from_axioms_unchecked(designated: ClassId, axioms: Vec<Axiom>) -> Self {
        ClassFrame { designated, axioms }
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }
}

pub fn collect_frame(ontology: &Ontology, class: &ClassId) -> Result<ClassFrame, ModelError> {
    if !ontology.classes.contains(class) {
        return Err(ModelError::UnknownClass(class.to_string()));
    }
    let axioms = ontology
        .axioms
        .iter()
        .filter(|a| a.mentions(class))
        .cloned()
        .collect();
    Ok(ClassFrame {
        designated: class.clone(),
        axioms,
    })
}
