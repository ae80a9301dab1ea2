//! Crafted sentences with expected extraction results, two or more per rule.
//! Expected values were worked out by hand from the rule text.

use dcb_core::ingest::tokenize_str;
use dcb_core::rules::{apply_rules_traced, RuleFiring};
use dcb_core::{
    chunk, extract_clauses, tag, CandidateModel, RelationKind, RuleConfig, RuleId, TagLexicon,
};

pub struct RuleCase {
    pub rule: RuleId,
    pub fires: bool,
    pub text: &'static str,
    pub classes: &'static [&'static str],
    pub attributes: &'static [(&'static str, &'static str)],
    pub relations: &'static [(RelationKind, &'static str, &'static str, &'static str)],
}

use RelationKind::{Aggregation as Agg, Association as Assoc, Generalization as Gen};

pub const RULE_CASES: &[RuleCase] = &[
    RuleCase {
        rule: RuleId::R1,
        fires: true,
        text: "a doctor gives medicines to the patient",
        classes: &["doctor", "medicine", "patient"],
        attributes: &[],
        relations: &[(Assoc, "doctor", "medicine", "give")],
    },
    RuleCase {
        rule: RuleId::R1,
        fires: false,
        text: "It works.",
        classes: &[],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R2,
        fires: true,
        text: "Borrowing is recorded by the librarian.",
        classes: &["borrowing", "librarian"],
        attributes: &[],
        relations: &[(Assoc, "borrowing", "librarian", "record_by")],
    },
    RuleCase {
        rule: RuleId::R2,
        fires: false,
        text: "The librarian is recording.",
        classes: &["librarian"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R3,
        fires: true,
        text: "a student is a person",
        classes: &["student", "person"],
        attributes: &[],
        relations: &[(Gen, "student", "person", "is_a")],
    },
    RuleCase {
        rule: RuleId::R3,
        fires: false,
        text: "the name is stored",
        classes: &["name"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R4,
        fires: true,
        text: "The system stores books.",
        classes: &["book"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R4,
        fires: false,
        text: "The clerk stores books.",
        classes: &["clerk", "book"],
        attributes: &[],
        relations: &[(Assoc, "clerk", "book", "store")],
    },
    RuleCase {
        rule: RuleId::R5,
        fires: true,
        text: "The clerk helps John.",
        classes: &["clerk"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R5,
        fires: false,
        text: "The clerk helps the member.",
        classes: &["clerk", "member"],
        attributes: &[],
        relations: &[(Assoc, "clerk", "member", "help")],
    },
    RuleCase {
        rule: RuleId::R6,
        fires: true,
        text: "The clerk checks the person_id.",
        classes: &["clerk", "person"],
        attributes: &[("person", "id")],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R6,
        fires: false,
        text: "The clerk checks the card_reader.",
        classes: &["clerk", "card_reader"],
        attributes: &[],
        relations: &[(Assoc, "clerk", "card_reader", "check")],
    },
    RuleCase {
        rule: RuleId::R7,
        fires: true,
        text: "The customer's address is stored.",
        classes: &["customer"],
        attributes: &[("customer", "address")],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R7,
        fires: false,
        text: "John's car is parked.",
        classes: &["car"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R8,
        fires: true,
        text: "The room type is stored.",
        classes: &["room"],
        attributes: &[("room", "type")],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R8,
        fires: true,
        text: "A card reader is installed.",
        classes: &["card_reader"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R8,
        fires: false,
        text: "A reader is installed.",
        classes: &["reader"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R9,
        fires: true,
        text: "a book has a title and an author",
        classes: &["book"],
        attributes: &[("book", "title"), ("book", "author")],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R9,
        fires: false,
        text: "the system has records",
        classes: &[],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R10,
        fires: true,
        text: "A member reserves a book.",
        classes: &["member", "book"],
        attributes: &[],
        relations: &[(Assoc, "member", "book", "reserve")],
    },
    RuleCase {
        rule: RuleId::R10,
        fires: false,
        text: "It gives medicines.",
        classes: &["medicine"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R11,
        fires: true,
        text: "the teacher works in a school",
        classes: &["teacher", "school"],
        attributes: &[],
        relations: &[(Assoc, "teacher", "school", "work_in")],
    },
    RuleCase {
        rule: RuleId::R11,
        fires: false,
        text: "the teacher works with a school",
        classes: &["teacher", "school"],
        attributes: &[],
        relations: &[],
    },
    RuleCase {
        rule: RuleId::R12,
        fires: true,
        text: "a library contains books",
        classes: &["library", "book"],
        attributes: &[],
        relations: &[(Agg, "library", "book", "contain")],
    },
    RuleCase {
        rule: RuleId::R12,
        fires: true,
        text: "the catalog consists of entries",
        classes: &["catalog", "entry"],
        attributes: &[],
        relations: &[(Agg, "catalog", "entry", "consist")],
    },
    RuleCase {
        rule: RuleId::R12,
        fires: true,
        text: "The library is divided into sections.",
        classes: &["library", "section"],
        attributes: &[],
        relations: &[(Agg, "library", "section", "divide")],
    },
    RuleCase {
        rule: RuleId::R12,
        fires: false,
        text: "the catalog consists in entries",
        classes: &["catalog", "entry"],
        attributes: &[],
        relations: &[(Assoc, "catalog", "entry", "consist_in")],
    },
];

pub fn candidates(text: &str) -> (CandidateModel, Vec<RuleFiring>) {
    let tagged = tag(&tokenize_str(text), &TagLexicon::bundled());
    let clauses = extract_clauses(&chunk(&tagged), 0);
    let mut firings = Vec::new();
    let m = apply_rules_traced(&clauses, &RuleConfig::default(), &mut firings);
    (m, firings)
}

/// Ok when the extraction matches the expected classes, attributes and
/// relationships exactly (as sets).
pub fn check_case(case: &RuleCase) -> Result<(), String> {
    let (m, firings) = candidates(case.text);
    let mut classes: Vec<&str> = m.classes.iter().map(|c| c.name.as_str()).collect();
    let mut expected: Vec<&str> = case.classes.to_vec();
    classes.sort();
    expected.sort();
    if classes != expected {
        return Err(format!("{:?}: classes {classes:?}, expected {expected:?}", case.text));
    }

    let mut attributes: Vec<(&str, &str)> = m
        .attributes
        .iter()
        .map(|a| (a.owner.as_str(), a.name.as_str()))
        .collect();
    let mut expected = case.attributes.to_vec();
    attributes.sort();
    expected.sort();
    if attributes != expected {
        return Err(format!("{:?}: attributes {attributes:?}, expected {expected:?}", case.text));
    }

    let mut relations: Vec<(RelationKind, &str, &str, &str)> = m
        .associations
        .iter()
        .map(|a| (a.kind, a.source.as_str(), a.target.as_str(), a.label.as_str()))
        .collect();
    let mut expected = case.relations.to_vec();
    relations.sort();
    expected.sort();
    if relations != expected {
        return Err(format!("{:?}: relations {relations:?}, expected {expected:?}", case.text));
    }

    if firings.iter().any(|f| f.rule == case.rule) != case.fires {
        return Err(format!(
            "{:?}: {} fired = {}, expected {}",
            case.text,
            case.rule,
            !case.fires,
            case.fires
        ));
    }
    Ok(())
}
