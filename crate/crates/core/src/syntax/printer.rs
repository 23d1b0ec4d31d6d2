use std::fmt::Write;

use crate::model::{Axiom, ClassExpression, Ontology};

pub fn serialize_expression(expr: &ClassExpression) -> String {
    let mut out = String::new();
    write_expression(&mut out, expr);
    out
}

fn write_expression(out: &mut String, expr: &ClassExpression) {
    match expr {
        ClassExpression::Named(id) => out.push_str(id.as_str()),
        ClassExpression::Intersection(parts) => {
            out.push_str("ObjectIntersectionOf(");
            write_list(out, parts);
            out.push(')');
        }
        ClassExpression::Existential { property, filler } => {
            out.push_str("ObjectSomeValuesFrom(");
            out.push_str(property.as_str());
            out.push(' ');
            write_expression(out, filler);
            out.push(')');
        }
    }
}

fn write_list(out: &mut String, list: &[ClassExpression]) {
    for (i, e) in list.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write_expression(out, e);
    }
}

/// Canonical single-line rendering of an axiom.
pub fn serialize_axiom(axiom: &Axiom) -> String {
    let mut out = String::new();
    out.push_str(axiom.kind_name());
    out.push('(');
    match axiom {
        Axiom::SubClassOf { sub, sup } => {
            write_expression(&mut out, sub);
            out.push(' ');
            write_expression(&mut out, sup);
        }
        Axiom::EquivalentClasses(list) | Axiom::DisjointClasses(list) => write_list(&mut out, list),
        Axiom::ClassAssertion { individual, class } => {
            write_expression(&mut out, class);
            out.push(' ');
            out.push_str(individual);
        }
        Axiom::DisjointUnion {
            union_class,
            disjuncts,
        } => {
            out.push_str(union_class.as_str());
            out.push(' ');
            write_list(&mut out, disjuncts);
        }
    }
    out.push(')');
    out
}

/// Full document with declarations first, one entry per line.
pub fn serialize_ontology(ontology: &Ontology) -> String {
    let mut out = String::from("Ontology(\n");
    for c in ontology.classes() {
        let _ = writeln!(out, "  Declaration(Class({c}))");
    }
    for p in ontology.properties() {
        let _ = writeln!(out, "  Declaration(ObjectProperty({p}))");
    }
    for i in ontology.individuals() {
        let _ = writeln!(out, "  Declaration(NamedIndividual({i}))");
    }
    for a in ontology.axioms() {
        let _ = writeln!(out, "  {}", serialize_axiom(a));
    }
    out.push_str(")\n");
    out
}
