//! proptest strategies for models, candidate models and ontologies.

use dcb_core::{
    CandidateAssociation, CandidateAttribute, CandidateClass, CandidateModel, ClassModel, Concept,
    Ontology, Provenance, RelationKind, RuleId, SourceRef, Status, UmlAttribute, UmlClass,
    UmlRelationship,
};
use proptest::collection::{btree_set, vec};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

/// Lowercase singular words; `normalize_name` leaves each unchanged.
pub const WORDS: &[&str] = &[
    "book", "member", "loan", "card", "bank", "account", "customer", "library", "entry", "fine",
    "screen", "receipt", "cash", "teller", "branch", "catalog", "student", "staff", "order",
    "item", "card_reader", "system", "database", "title", "name", "author", "balance", "pin",
];

pub fn kind() -> impl Strategy<Value = RelationKind> {
    select(vec![
        RelationKind::Association,
        RelationKind::Aggregation,
        RelationKind::Generalization,
    ])
}

fn rule() -> impl Strategy<Value = RuleId> {
    select(RuleId::ALL.to_vec())
}

fn source_refs() -> impl Strategy<Value = Vec<SourceRef>> {
    vec(
        (rule(), 0usize..40).prop_map(|(rule_id, sentence_index)| SourceRef {
            rule_id,
            sentence_index,
        }),
        0..3,
    )
    .prop_map(|mut refs| {
        refs.dedup();
        let mut unique = Vec::new();
        for r in refs {
            if !unique.contains(&r) {
                unique.push(r);
            }
        }
        unique
    })
}

fn metadata() -> impl Strategy<Value = Option<String>> {
    proptest::option::of("[a-zA-Z0-9 _.&<>\"'-]{1,12}")
}

/// Any valid class model: unique class names, unique attribute names per
/// class, endpoints among the classes.
pub fn class_model() -> impl Strategy<Value = ClassModel> {
    btree_set("[A-Z][a-z]{1,6}([A-Z][a-z]{1,5})?", 0..8)
        .prop_flat_map(|names| {
            let names: Vec<String> = names.into_iter().collect();
            let n = names.len();
            let classes = names
                .iter()
                .map(|name| {
                    (
                        Just(name.clone()),
                        btree_set("[a-z][a-z_]{0,8}", 0..4),
                        vec(source_refs(), 4),
                        source_refs(),
                    )
                        .prop_map(|(name, attrs, attr_refs, provenance)| UmlClass {
                            name,
                            attributes: attrs
                                .into_iter()
                                .zip(attr_refs.into_iter().cycle())
                                .map(|(name, provenance)| UmlAttribute { name, provenance })
                                .collect(),
                            provenance,
                        })
                        .boxed()
                })
                .collect::<Vec<_>>();
            let relationships = if n == 0 {
                Just(Vec::new()).boxed()
            } else {
                let names = names.clone();
                vec(
                    (kind(), 0..n, 0..n, "[a-z_]{0,8}", source_refs()),
                    0..8,
                )
                .prop_map(move |rels| {
                    rels.into_iter()
                        .map(|(kind, s, t, label, provenance)| UmlRelationship {
                            kind,
                            source: names[s].clone(),
                            target: names[t].clone(),
                            label,
                            provenance,
                        })
                        .collect()
                })
                .boxed()
            };
            (classes, relationships, metadata(), metadata(), metadata())
        })
        .prop_map(|(classes, relationships, source, mode, tool)| ClassModel {
            source,
            mode,
            tool,
            classes,
            relationships,
        })
}

fn provenance() -> impl Strategy<Value = Vec<Provenance>> {
    vec(
        (rule(), 0usize..20, "[a-z ]{0,10}")
            .prop_map(|(r, s, snippet)| Provenance::new(r, s, snippet)),
        1..3,
    )
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        4 => Just(Status::Candidate),
        1 => Just(Status::Confirmed),
        1 => Just(Status::Rejected("test".into())),
    ]
}

/// Candidate models over [`WORDS`]; attributes and associations may name
/// classes that do not exist.
pub fn candidate_model() -> impl Strategy<Value = CandidateModel> {
    let word = || select(WORDS.to_vec()).prop_map(str::to_string);
    (
        vec((word(), provenance(), status()), 0..10),
        vec((word(), word(), provenance()), 0..8),
        vec((kind(), word(), word(), "[a-z_]{1,8}", provenance()), 0..10),
    )
        .prop_map(|(classes, attributes, associations)| {
            let mut m = CandidateModel::default();
            for (name, provenance, status) in classes {
                let mut class = CandidateClass::new(name, provenance[0].clone());
                class.provenance = provenance;
                class.status = status;
                if m.class(&class.name).is_none() {
                    m.classes.push(class);
                }
            }
            for (owner, name, provenance) in attributes {
                let mut a = CandidateAttribute::new(owner, name, provenance[0].clone());
                a.provenance = provenance;
                m.add_attribute(a);
            }
            for (kind, source, target, label, provenance) in associations {
                let mut a =
                    CandidateAssociation::new(kind, source, target, label, provenance[0].clone());
                a.provenance = provenance;
                m.add_association(a);
            }
            m
        })
}

/// Ontologies over [`WORDS`]: some words become concepts, some synonyms,
/// some irrelevant, without collisions.
pub fn ontology() -> impl Strategy<Value = Ontology> {
    (
        Just(WORDS.to_vec()).prop_shuffle(),
        0usize..10,
        0usize..6,
        0usize..4,
        subsequence(WORDS.to_vec(), 0..6),
    )
        .prop_map(|(words, n_concepts, n_synonyms, n_irrelevant, attrs)| {
            let mut rest = words.into_iter();
            let mut concepts: Vec<Concept> =
                rest.by_ref().take(n_concepts).map(Concept::new).collect();
            if !concepts.is_empty() {
                let k = concepts.len();
                for (i, synonym) in rest.by_ref().take(n_synonyms).enumerate() {
                    concepts[i % k].synonyms.insert(synonym.to_string());
                }
                for (i, a) in attrs.iter().enumerate() {
                    concepts[i % k].expected_attributes.insert(a.to_string());
                }
            }
            Ontology {
                concepts,
                irrelevant: rest.take(n_irrelevant).map(str::to_string).collect(),
                relations: Vec::new(),
            }
        })
}

/// Response/key pairs drawn from a shared pool so they overlap.
pub fn model_pair() -> impl Strategy<Value = (ClassModel, ClassModel)> {
    (pool_model(), pool_model())
}

fn pool_model() -> impl Strategy<Value = ClassModel> {
    const POOL: &[&str] = &["Book", "Member", "Loan", "Card", "Bank", "Account", "Fine", "Order"];
    const ATTRS: &[&str] = &["title", "name", "number", "date"];
    (
        subsequence(POOL.to_vec(), 0..=POOL.len()),
        vec((0usize..8, select(ATTRS.to_vec())), 0..8),
        vec((kind(), 0usize..8, 0usize..8), 0..8),
    )
        .prop_map(|(names, attrs, rels)| {
            let mut classes: Vec<UmlClass> = names.iter().map(|n| UmlClass::new(*n)).collect();
            let n = classes.len();
            let mut relationships = Vec::new();
            if n > 0 {
                for (i, a) in attrs {
                    let class = &mut classes[i % n];
                    if class.attributes.iter().all(|x| x.name != a) {
                        class.attributes.push(UmlAttribute {
                            name: a.to_string(),
                            provenance: Vec::new(),
                        });
                    }
                }
                for (kind, s, t) in rels {
                    relationships.push(UmlRelationship {
                        kind,
                        source: names[s % n].to_string(),
                        target: names[t % n].to_string(),
                        label: String::new(),
                        provenance: Vec::new(),
                    });
                }
            }
            ClassModel {
                classes,
                relationships,
                ..ClassModel::default()
            }
        })
}
