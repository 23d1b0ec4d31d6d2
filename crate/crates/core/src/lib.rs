//! Paragraph-level English descriptions of OWL-EL classes.
//!
//! A class is described through its frame, every axiom that mentions it.
//! Axioms are classified into groups, arranged by a discourse planner and
//! realized with a small template catalogue. The `eval` module scores how
//! closely a re-coding of a class matches its source axioms, and `survey`
//! tallies frame patterns over a corpus.

pub mod classify;
pub mod eval;
pub mod model;
pub mod planner;
pub mod realize;
pub mod survey;
pub mod syntax;

#[cfg(any(test, feature = "test-support"))]
pub mod testgen;

pub use classify::{classify, pattern_label, to_direct, ClassifiedAxiom, GroupLabel, PatternLabel};
pub use model::{Axiom, ClassExpression, ClassFrame, ClassId, Lexicon, Ontology, PropertyId};
pub use planner::{build_rst, order_groups, plan, DiscoursePlan, RstNode};
pub use realize::{realize, verbalize_frame, Paragraph, RealizeOptions};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
