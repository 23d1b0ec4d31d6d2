//! Axiom group labels, complexity, directness, conversion of indirect simple
//! axioms to the designated class's perspective, and per-frame pattern labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::model::{Axiom, ClassExpression, ClassFrame, ClassId};

/// Axiom group label. Two-letter labels are simple groups; the `r` suffix
/// marks the complex counterpart. Declaration order is ASCII order of the
/// label text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupLabel {
    Ca,
    Car,
    Dc,
    Dcr,
    Du,
    Ec,
    Ecr,
    Sc,
    Scr,
}

impl GroupLabel {
    pub const ALL: [GroupLabel; 9] = [
        GroupLabel::Ca,
        GroupLabel::Car,
        GroupLabel::Dc,
        GroupLabel::Dcr,
        GroupLabel::Du,
        GroupLabel::Ec,
        GroupLabel::Ecr,
        GroupLabel::Sc,
        GroupLabel::Scr,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupLabel::Ca => "Ca",
            GroupLabel::Car => "Car",
            GroupLabel::Dc => "Dc",
            GroupLabel::Dcr => "Dcr",
            GroupLabel::Du => "Du",
            GroupLabel::Ec => "Ec",
            GroupLabel::Ecr => "Ecr",
            GroupLabel::Sc => "Sc",
            GroupLabel::Scr => "Scr",
        }
    }

    pub fn is_complex(&self) -> bool {
        self.as_str().len() == 3
    }

    /// Presentation precedence of the verbalised groups: Sc, Ec, Dc, Ca,
    /// Scr, Ecr. `None` for groups that are never verbalised.
    pub fn precedence(&self) -> Option<u8> {
        match self {
            GroupLabel::Sc => Some(0),
            GroupLabel::Ec => Some(1),
            GroupLabel::Dc => Some(2),
            GroupLabel::Ca => Some(3),
            GroupLabel::Scr => Some(4),
            GroupLabel::Ecr => Some(5),
            GroupLabel::Car | GroupLabel::Dcr | GroupLabel::Du => None,
        }
    }

    pub fn role(&self) -> Role {
        match self {
            GroupLabel::Sc | GroupLabel::Scr => Role::Taxonomy,
            GroupLabel::Ec | GroupLabel::Ecr => Role::Definition,
            GroupLabel::Dc | GroupLabel::Dcr => Role::Distinction,
            GroupLabel::Ca | GroupLabel::Car => Role::Illustration,
            GroupLabel::Du => Role::Alternatives,
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Communicative role of an axiom group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Role {
    Taxonomy,
    Definition,
    Distinction,
    Illustration,
    Alternatives,
}

impl Role {
    pub const ALL: [Role; 5] = [
        Role::Taxonomy,
        Role::Definition,
        Role::Distinction,
        Role::Illustration,
        Role::Alternatives,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Role::Taxonomy => "taxonomy",
            Role::Definition => "definition",
            Role::Distinction => "distinction",
            Role::Illustration => "illustration",
            Role::Alternatives => "alternatives",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Directness {
    Direct,
    Indirect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedAxiom {
    pub axiom: Axiom,
    pub group: GroupLabel,
    pub directness: Directness,
    /// Set when an indirect simple subclass axiom is read from the
    /// superclass side ("a more specialised kind of X is Z").
    pub inverted: bool,
}

impl ClassifiedAxiom {
    pub fn is_direct(&self) -> bool {
        self.directness == Directness::Direct
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("axiom does not mention {0}")]
    NotInFrame(String),
    #[error("{group} axiom cannot be converted to direct form")]
    NotConvertible { group: GroupLabel },
}

fn any_complex<'a>(mut operands: impl Iterator<Item = &'a ClassExpression>) -> bool {
    operands.any(|e| !e.is_simple())
}

pub fn classify(axiom: &Axiom, designated: &ClassId) -> Result<ClassifiedAxiom, ClassifyError> {
    if !axiom.mentions(designated) {
        return Err(ClassifyError::NotInFrame(designated.to_string()));
    }
    let complex = any_complex(axiom.operands().into_iter());
    let pick = |simple, complex_label| if complex { complex_label } else { simple };
    let direct_if = |cond: bool| {
        if cond {
            Directness::Direct
        } else {
            Directness::Indirect
        }
    };
    let (group, directness) = match axiom {
        Axiom::SubClassOf { sub, .. } => (
            pick(GroupLabel::Sc, GroupLabel::Scr),
            direct_if(sub.is_named(designated)),
        ),
        Axiom::EquivalentClasses(list) => (
            pick(GroupLabel::Ec, GroupLabel::Ecr),
            direct_if(list[0].is_named(designated)),
        ),
        Axiom::DisjointClasses(list) => (
            pick(GroupLabel::Dc, GroupLabel::Dcr),
            direct_if(list[0].is_named(designated)),
        ),
        Axiom::ClassAssertion { .. } => (pick(GroupLabel::Ca, GroupLabel::Car), Directness::Direct),
        Axiom::DisjointUnion { union_class, .. } => (GroupLabel::Du, direct_if(union_class == designated)),
    };
    Ok(ClassifiedAxiom {
        axiom: axiom.clone(),
        group,
        directness,
        inverted: false,
    })
}

/// Re-expresses an indirect simple Sc/Ec/Dc axiom from the designated
/// class's perspective. Subclass axioms are flagged as inverted; equivalence
/// and disjointness lists are rotated so the designated class comes first,
/// keeping the relative order of the others. Direct input is returned as is.
pub fn to_direct(ca: &ClassifiedAxiom, designated: &ClassId) -> Result<ClassifiedAxiom, ClassifyError> {
    if ca.is_direct() {
        return Ok(ca.clone());
    }
    let rotate = |list: &[ClassExpression]| -> Option<Vec<ClassExpression>> {
        let at = list.iter().position(|e| e.is_named(designated))?;
        let mut out = Vec::with_capacity(list.len());
        out.push(list[at].clone());
        out.extend(
            list.iter()
                .enumerate()
                .filter(|(i, _)| *i != at)
                .map(|(_, e)| e.clone()),
        );
        Some(out)
    };
    let not_convertible = ClassifyError::NotConvertible { group: ca.group };
    let (axiom, inverted) = match (&ca.axiom, ca.group) {
        (Axiom::SubClassOf { sup, .. }, GroupLabel::Sc) if sup.is_named(designated) => {
            (ca.axiom.clone(), true)
        }
        (Axiom::EquivalentClasses(list), GroupLabel::Ec) => (
            Axiom::EquivalentClasses(rotate(list).ok_or(not_convertible)?),
            false,
        ),
        (Axiom::DisjointClasses(list), GroupLabel::Dc) => (
            Axiom::DisjointClasses(rotate(list).ok_or(not_convertible)?),
            false,
        ),
        _ => return Err(not_convertible),
    };
    Ok(ClassifiedAxiom {
        axiom,
        group: ca.group,
        directness: Directness::Direct,
        inverted,
    })
}

/// Distinct group labels of a frame, sorted and concatenated, e.g. "EcEcrScr".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct PatternLabel(String);

impl PatternLabel {
    pub fn from_groups(groups: impl IntoIterator<Item = GroupLabel>) -> Self {
        let distinct: BTreeSet<&'static str> = groups.into_iter().map(|g| g.as_str()).collect();
        PatternLabel(distinct.into_iter().collect())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Splits the label back into its groups.
    pub fn groups(&self) -> Vec<GroupLabel> {
        let mut out = Vec::new();
        let mut rest = self.0.as_str();
        while !rest.is_empty() {
            // Longest match first so "Scr" is not read as "Sc" + "r".
            let g = GroupLabel::ALL
                .iter()
                .filter(|g| rest.starts_with(g.as_str()))
                .max_by_key(|g| g.as_str().len())
                .copied();
            match g {
                Some(g) => {
                    out.push(g);
                    rest = &rest[g.as_str().len()..];
                }
                None => break,
            }
        }
        out
    }

    pub fn contains(&self, group: GroupLabel) -> bool {
        self.groups().contains(&group)
    }
}

impl fmt::Display for PatternLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn pattern_label(frame: &ClassFrame) -> PatternLabel {
    PatternLabel::from_groups(
        frame
            .axioms
            .iter()
            .filter_map(|a| classify(a, &frame.designated).ok())
            .map(|ca| ca.group),
    )
}
