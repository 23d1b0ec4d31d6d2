//! Discourse planning: classified axioms are bucketed into categories, ordered
//! by group precedence and arranged as a nucleus/satellite tree.

use std::fmt::{self, Write};

use serde::Serialize;

use crate::classify::{classify, to_direct, ClassifiedAxiom, GroupLabel};
use crate::model::{Axiom, ClassExpression, ClassFrame, ClassId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Category {
    SimpleDirect,
    ComplexDirect,
    SimpleIndirect,
    ComplexIndirect,
}

impl Category {
    pub fn as_str(&self) -> &'static str {
        match self {
            Category::SimpleDirect => "simple-direct",
            Category::ComplexDirect => "complex-direct",
            Category::SimpleIndirect => "simple-indirect",
            Category::ComplexIndirect => "complex-indirect",
        }
    }
}

/// Output of [`order_groups`]. Each bucket is sorted by group precedence,
/// frame order within a group.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Buckets {
    pub simple_direct: Vec<ClassifiedAxiom>,
    pub complex_direct: Vec<ClassifiedAxiom>,
    pub simple_indirect: Vec<ClassifiedAxiom>,
    pub complex_indirect: Vec<ClassifiedAxiom>,
    /// Car, Dcr and Du axioms; never planned.
    pub dropped: Vec<ClassifiedAxiom>,
}

impl Buckets {
    pub fn get(&self, category: Category) -> &[ClassifiedAxiom] {
        match category {
            Category::SimpleDirect => &self.simple_direct,
            Category::ComplexDirect => &self.complex_direct,
            Category::SimpleIndirect => &self.simple_indirect,
            Category::ComplexIndirect => &self.complex_indirect,
        }
    }

    pub fn planned_len(&self) -> usize {
        self.simple_direct.len()
            + self.complex_direct.len()
            + self.simple_indirect.len()
            + self.complex_indirect.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planned_len() == 0 && self.dropped.is_empty()
    }
}

/// A direct complex subclass axiom whose superclass is a plain conjunction
/// of named classes says no more than several simple ones, so it joins the
/// simple subclass list.
fn flattens(ca: &ClassifiedAxiom) -> bool {
    if ca.group != GroupLabel::Scr || !ca.is_direct() {
        return false;
    }
    match &ca.axiom {
        Axiom::SubClassOf {
            sup: ClassExpression::Intersection(parts),
            ..
        } => parts.iter().all(|p| p.as_named().is_some()),
        _ => false,
    }
}

/// Routes classified axioms into categories. Indirect simple axioms are
/// converted to the designated class's perspective first.
pub fn order_groups(classified: &[ClassifiedAxiom], designated: &ClassId) -> Buckets {
    let mut buckets = Buckets::default();
    for ca in classified {
        match ca.group.precedence() {
            None => buckets.dropped.push(ca.clone()),
            Some(_) if flattens(ca) => buckets.simple_direct.push(ClassifiedAxiom {
                group: GroupLabel::Sc,
                ..ca.clone()
            }),
            Some(_) if !ca.group.is_complex() && ca.group != GroupLabel::Ca => {
                match to_direct(ca, designated) {
                    Ok(direct) => buckets.simple_direct.push(direct),
                    Err(_) => buckets.simple_indirect.push(ca.clone()),
                }
            }
            Some(_) if ca.group == GroupLabel::Ca || ca.is_direct() => {
                buckets.complex_direct.push(ca.clone())
            }
            Some(_) => buckets.complex_indirect.push(ca.clone()),
        }
    }
    for bucket in [
        &mut buckets.simple_direct,
        &mut buckets.complex_direct,
        &mut buckets.simple_indirect,
        &mut buckets.complex_indirect,
    ] {
        bucket.sort_by_key(|ca| ca.group.precedence());
    }
    buckets
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeKind {
    Nucleus,
    Satellite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RstRelation {
    Elaboration,
    Condition,
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Connector {
    /// "Additionally, " in front of the complex direct sentence.
    Additionally,
    /// "Another relevant aspect of F is that ..." / "Other relevant aspects of F are:".
    RelevantAspects,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Block {
    Paragraph,
    SimpleDirect,
    ComplexDirect,
    Indirect,
}

/// What a leaf says about the designated class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Slot {
    /// F is a kind of ...
    Supers,
    /// More specialised kinds of F are ...
    Specialisations,
    Equivalents,
    Disjoints,
    Members,
    ComplexSuper,
    ComplexDefinition,
    /// One indirect axiom, read from its own subject.
    Aspect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Block {
        block: Block,
        connector: Option<Connector>,
    },
    Leaf {
        slot: Slot,
        group: GroupLabel,
        axioms: Vec<ClassifiedAxiom>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RstNode {
    pub kind: NodeKind,
    /// `None` only at the root and for nuclei that are not list items.
    pub relation: Option<RstRelation>,
    pub payload: Payload,
    pub children: Vec<RstNode>,
}

impl RstNode {
    fn block(block: Block, children: Vec<RstNode>) -> RstNode {
        RstNode {
            kind: NodeKind::Nucleus,
            relation: None,
            payload: Payload::Block {
                block,
                connector: None,
            },
            children,
        }
    }

    fn leaf(slot: Slot, group: GroupLabel, axioms: Vec<ClassifiedAxiom>) -> RstNode {
        RstNode {
            kind: NodeKind::Nucleus,
            relation: None,
            payload: Payload::Leaf { slot, group, axioms },
            children: Vec::new(),
        }
    }

    fn satellite(mut self, relation: RstRelation) -> RstNode {
        self.kind = NodeKind::Satellite;
        self.relation = Some(relation);
        self
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.payload, Payload::Leaf { .. })
    }

    /// Leaves in document order.
    pub fn leaves(&self) -> Vec<&RstNode> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a RstNode>) {
        if self.is_leaf() {
            out.push(self);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    pub fn leaf_axioms(&self) -> Option<&[ClassifiedAxiom]> {
        match &self.payload {
            Payload::Leaf { axioms, .. } => Some(axioms),
            Payload::Block { .. } => None,
        }
    }

    pub fn connector(&self) -> Option<Connector> {
        match self.payload {
            Payload::Block { connector, .. } => connector,
            Payload::Leaf { .. } => None,
        }
    }

    fn label(&self) -> String {
        match &self.payload {
            Payload::Block { block, connector } => {
                let name = match block {
                    Block::Paragraph => "paragraph",
                    Block::SimpleDirect => "simple-direct",
                    Block::ComplexDirect => "complex-direct",
                    Block::Indirect => "indirect",
                };
                match connector {
                    Some(c) => format!("{name} [{c:?}]"),
                    None => name.to_string(),
                }
            }
            Payload::Leaf { slot, group, axioms } => {
                format!("{group} {slot:?} ({})", axioms.len())
            }
        }
    }

    /// Indented rendering, one node per line: kind, relation, group or block.
    pub fn debug_render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let relation = self
            .relation
            .map(|r| format!("{r:?}"))
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{:indent$}{:?} {} {}",
            "",
            self.kind,
            relation,
            self.label(),
            indent = depth * 2
        );
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeError(pub String);

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid discourse tree: {}", self.0)
    }
}

impl std::error::Error for TreeError {}

/// Checks the structural invariants: the root has no relation, every
/// satellite has one, every child of a list block is a nucleus tagged List,
/// and leaves have no children.
pub fn validate(root: &RstNode) -> Result<(), TreeError> {
    if root.relation.is_some() || root.kind != NodeKind::Nucleus {
        return Err(TreeError("root must be a nucleus without relation".into()));
    }
    check_node(root)
}

fn check_node(node: &RstNode) -> Result<(), TreeError> {
    if node.kind == NodeKind::Satellite && node.relation.is_none() {
        return Err(TreeError(format!("satellite without relation: {}", node.label())));
    }
    if node.is_leaf() && !node.children.is_empty() {
        return Err(TreeError("leaf with children".into()));
    }
    if let Payload::Leaf { axioms, .. } = &node.payload {
        if axioms.is_empty() {
            return Err(TreeError("empty leaf".into()));
        }
    }
    let is_list = node
        .children
        .iter()
        .any(|c| c.relation == Some(RstRelation::List));
    if is_list
        && node
            .children
            .iter()
            .any(|c| c.kind != NodeKind::Nucleus || c.relation != Some(RstRelation::List))
    {
        return Err(TreeError("list siblings must all be nuclei".into()));
    }
    if !node.children.is_empty() && !node.children.iter().any(|c| c.kind == NodeKind::Nucleus) {
        return Err(TreeError(format!("no nucleus under {}", node.label())));
    }
    node.children.iter().try_for_each(check_node)
}

fn take_group(axioms: &[ClassifiedAxiom], keep: impl Fn(&ClassifiedAxiom) -> bool) -> Vec<ClassifiedAxiom> {
    axioms.iter().filter(|ca| keep(ca)).cloned().collect()
}

/// Children of a block, in order; the first child that may carry the
/// nucleus role becomes the nucleus if none of the preferred ones is present.
fn arrange(mut parts: Vec<(RstNode, Option<RstRelation>)>) -> Vec<RstNode> {
    if !parts.is_empty() && parts.iter().all(|(_, r)| r.is_some()) {
        parts[0].1 = None;
    }
    parts
        .into_iter()
        .map(|(node, rel)| match rel {
            Some(r) => node.satellite(r),
            None => node,
        })
        .collect()
}

pub fn build_rst(buckets: &Buckets) -> RstNode {
    let mut blocks = Vec::new();

    let sd = &buckets.simple_direct;
    let mut parts = Vec::new();
    let supers = take_group(sd, |ca| ca.group == GroupLabel::Sc && !ca.inverted);
    let specs = take_group(sd, |ca| ca.group == GroupLabel::Sc && ca.inverted);
    let eqs = take_group(sd, |ca| ca.group == GroupLabel::Ec);
    let djs = take_group(sd, |ca| ca.group == GroupLabel::Dc);
    if !supers.is_empty() {
        parts.push((RstNode::leaf(Slot::Supers, GroupLabel::Sc, supers), None));
    }
    if !specs.is_empty() {
        parts.push((RstNode::leaf(Slot::Specialisations, GroupLabel::Sc, specs), None));
    }
    if !eqs.is_empty() {
        parts.push((
            RstNode::leaf(Slot::Equivalents, GroupLabel::Ec, eqs),
            Some(RstRelation::Elaboration),
        ));
    }
    if !djs.is_empty() {
        parts.push((
            RstNode::leaf(Slot::Disjoints, GroupLabel::Dc, djs),
            Some(RstRelation::Elaboration),
        ));
    }
    if !parts.is_empty() {
        blocks.push(RstNode::block(Block::SimpleDirect, arrange(parts)));
    }

    let cd = &buckets.complex_direct;
    let mut parts = Vec::new();
    let members = take_group(cd, |ca| ca.group == GroupLabel::Ca);
    let supers = take_group(cd, |ca| ca.group == GroupLabel::Scr);
    let defs = take_group(cd, |ca| ca.group == GroupLabel::Ecr);
    if !members.is_empty() {
        parts.push((
            RstNode::leaf(Slot::Members, GroupLabel::Ca, members),
            Some(RstRelation::Elaboration),
        ));
    }
    if !supers.is_empty() {
        parts.push((RstNode::leaf(Slot::ComplexSuper, GroupLabel::Scr, supers), None));
    }
    if !defs.is_empty() {
        parts.push((
            RstNode::leaf(Slot::ComplexDefinition, GroupLabel::Ecr, defs),
            Some(RstRelation::Condition),
        ));
    }
    if !parts.is_empty() {
        let mut node = RstNode::block(Block::ComplexDirect, arrange(parts));
        if !blocks.is_empty() {
            node.payload = Payload::Block {
                block: Block::ComplexDirect,
                connector: Some(Connector::Additionally),
            };
        }
        blocks.push(node);
    }

    let items: Vec<RstNode> = buckets
        .simple_indirect
        .iter()
        .chain(&buckets.complex_indirect)
        .map(|ca| {
            let mut leaf = RstNode::leaf(Slot::Aspect, ca.group, vec![ca.clone()]);
            leaf.relation = Some(RstRelation::List);
            leaf
        })
        .collect();
    if !items.is_empty() {
        let mut node = RstNode::block(Block::Indirect, items);
        node.payload = Payload::Block {
            block: Block::Indirect,
            connector: Some(Connector::RelevantAspects),
        };
        blocks.push(node);
    }

    let blocks = blocks
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            if i == 0 {
                b
            } else {
                b.satellite(RstRelation::Elaboration)
            }
        })
        .collect();
    RstNode::block(Block::Paragraph, blocks)
}

/// A planned frame: the tree plus what was left out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoursePlan {
    pub designated: ClassId,
    pub tree: RstNode,
    pub dropped: Vec<ClassifiedAxiom>,
}

pub fn plan(frame: &ClassFrame) -> DiscoursePlan {
    let classified: Vec<ClassifiedAxiom> = frame
        .axioms
        .iter()
        .filter_map(|a| classify(a, &frame.designated).ok())
        .collect();
    let buckets = order_groups(&classified, &frame.designated);
    DiscoursePlan {
        designated: frame.designated.clone(),
        tree: build_rst(&buckets),
        dropped: buckets.dropped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::PropertyId;

    fn c(name: &str) -> ClassId {
        ClassId::new(format!(":{name}")).unwrap()
    }

    fn n(name: &str) -> ClassExpression {
        ClassExpression::Named(c(name))
    }

    fn some(p: &str, f: ClassExpression) -> ClassExpression {
        ClassExpression::some(PropertyId::new(format!(":{p}")).unwrap(), f)
    }

    fn classified(f: &str, axioms: Vec<Axiom>) -> Vec<ClassifiedAxiom> {
        axioms.iter().map(|a| classify(a, &c(f)).unwrap()).collect()
    }

    fn groups(list: &[ClassifiedAxiom]) -> Vec<GroupLabel> {
        list.iter().map(|ca| ca.group).collect()
    }

    #[test]
    fn precedence_within_categories() {
        use GroupLabel::*;
        let cas = classified(
            "F",
            vec![
                Axiom::EquivalentClasses(vec![n("F"), some("p", n("X"))]),
                Axiom::sub_class_of(n("F"), n("P")),
                Axiom::EquivalentClasses(vec![n("F"), n("Q")]),
            ],
        );
        let b = order_groups(&cas, &c("F"));
        assert_eq!(groups(&b.simple_direct), vec![Sc, Ec]);
        assert_eq!(groups(&b.complex_direct), vec![Ecr]);
        assert!(b.dropped.is_empty());
    }

    #[test]
    fn disjoint_union_dropped() {
        let cas = classified(
            "F",
            vec![Axiom::DisjointUnion {
                union_class: c("F"),
                disjuncts: vec![n("A"), n("B")],
            }],
        );
        let b = order_groups(&cas, &c("F"));
        assert_eq!(b.planned_len(), 0);
        assert_eq!(groups(&b.dropped), vec![GroupLabel::Du]);
    }

    #[test]
    fn empty_plan() {
        let b = order_groups(&[], &c("F"));
        assert!(b.is_empty());
        let tree = build_rst(&b);
        assert!(tree.leaves().is_empty());
        validate(&tree).unwrap();
    }

    #[test]
    fn supers_and_specialisation_share_the_nucleus() {
        let cas = classified(
            "X",
            vec![
                Axiom::sub_class_of(n("X"), n("P")),
                Axiom::sub_class_of(n("X"), n("Q")),
                Axiom::sub_class_of(n("X"), n("R")),
                Axiom::sub_class_of(n("Z"), n("X")),
            ],
        );
        let tree = build_rst(&order_groups(&cas, &c("X")));
        validate(&tree).unwrap();
        assert_eq!(tree.children.len(), 1);
        let block = &tree.children[0];
        assert_eq!(block.children.len(), 2);
        assert!(block.children.iter().all(|l| l.kind == NodeKind::Nucleus));
    }

    #[test]
    fn complex_block_gets_connector() {
        let cas = classified(
            "F",
            vec![
                Axiom::sub_class_of(n("F"), n("P")),
                Axiom::sub_class_of(n("F"), some("p", n("Q"))),
            ],
        );
        let tree = build_rst(&order_groups(&cas, &c("F")));
        validate(&tree).unwrap();
        let second = &tree.children[1];
        assert_eq!(second.kind, NodeKind::Satellite);
        assert_eq!(second.connector(), Some(Connector::Additionally));
    }

    #[test]
    fn lone_complex_block_has_no_connector() {
        let cas = classified("F", vec![Axiom::sub_class_of(n("F"), some("p", n("Q")))]);
        let tree = build_rst(&order_groups(&cas, &c("F")));
        assert_eq!(tree.children[0].connector(), None);
    }

    #[test]
    fn indirect_items_form_a_list() {
        let cas = classified(
            "F",
            vec![
                Axiom::EquivalentClasses(vec![n("A"), some("p", n("F"))]),
                Axiom::sub_class_of(
                    n("B"),
                    ClassExpression::intersection(vec![n("F"), n("C")]).unwrap(),
                ),
            ],
        );
        let tree = build_rst(&order_groups(&cas, &c("F")));
        validate(&tree).unwrap();
        let list = &tree.children[0];
        assert_eq!(list.children.len(), 2);
        assert!(list
            .children
            .iter()
            .all(|n| n.kind == NodeKind::Nucleus && n.relation == Some(RstRelation::List)));
        // Scr before Ecr.
        let labels: Vec<_> = tree
            .leaves()
            .iter()
            .map(|l| l.leaf_axioms().unwrap()[0].group)
            .collect();
        assert_eq!(labels, vec![GroupLabel::Scr, GroupLabel::Ecr]);
    }

    #[test]
    fn named_conjunction_flattens_into_supers() {
        let cas = classified(
            "K",
            vec![
                Axiom::sub_class_of(n("K"), n("U")),
                Axiom::sub_class_of(
                    n("K"),
                    ClassExpression::intersection(vec![n("U"), n("S")]).unwrap(),
                ),
            ],
        );
        let b = order_groups(&cas, &c("K"));
        assert_eq!(groups(&b.simple_direct), vec![GroupLabel::Sc, GroupLabel::Sc]);
        assert!(b.complex_direct.is_empty());
    }

    #[test]
    fn debug_rendering() {
        let frame = ClassFrame::new(
            c("F"),
            vec![
                Axiom::sub_class_of(n("F"), n("P")),
                Axiom::EquivalentClasses(vec![n("F"), some("p", n("Q"))]),
            ],
        )
        .unwrap();
        let text = plan(&frame).tree.debug_render();
        assert_eq!(
            text,
            "Nucleus - paragraph\n  Nucleus - simple-direct\n    Nucleus - Sc Supers (1)\n  Satellite Elaboration complex-direct [Additionally]\n    Nucleus - Ecr ComplexDefinition (1)\n"
        );
    }
}
