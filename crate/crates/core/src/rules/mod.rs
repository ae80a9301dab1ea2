//! Linguistic heuristics mapping clauses to candidate classes, attributes
//! and relationships.
//!
//! | rule | trigger                                         | output                  |
//! |------|-------------------------------------------------|-------------------------|
//! | R1   | noun                                            | class                   |
//! | R2   | gerund used as a noun                           | class                   |
//! | R3   | `A is a B`                                      | generalization A → B    |
//! | R4   | environment noun (`system`, `database`, ...)    | ignored                 |
//! | R5   | proper noun                                     | ignored                 |
//! | R6   | `person_id`-style compound ending in an indicator | attribute             |
//! | R7   | genitive `A's B`                                | attribute B of A        |
//! | R8   | noun compound: indicator last → attribute, else class |                   |
//! | R9   | `A has B`                                       | attribute B of A        |
//! | R10  | transitive verb `A v B`                         | association             |
//! | R11  | verb + preposition `A v in B`                   | association `v_in`      |
//! | R12  | whole-part verb (`contain`, `consist of`, ...)  | aggregation             |
//!
//! Filters win over constructors (R5 > R4 > R6 > R8 > R1) and R12 wins
//! over R10/R11.

mod candidate;
mod config;

use std::collections::HashSet;
use std::fmt;

pub use candidate::{
    CandidateAssociation, CandidateAttribute, CandidateClass, CandidateModel, Provenance,
    RelationKind, RuleId, Status, GENERALIZATION_LABEL,
};
pub use config::{
    RuleConfig, RuleConfigError, DEFAULT_AGGREGATION_VERBS, DEFAULT_ATTRIBUTE_INDICATORS,
    DEFAULT_ENVIRONMENT_NOUNS, DEFAULT_RELATION_PREPOSITIONS,
};

use crate::chunker::{Clause, Phrase, PhraseKind};
use crate::tagger::{singularize, PosTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IgnoreReason {
    ProperNoun,
    EnvironmentNoun,
    Pronoun,
    NotNounPhrase,
}

impl IgnoreReason {
    pub fn rule(self) -> Option<RuleId> {
        match self {
            IgnoreReason::ProperNoun => Some(RuleId::R5),
            IgnoreReason::EnvironmentNoun => Some(RuleId::R4),
            IgnoreReason::Pronoun | IgnoreReason::NotNounPhrase => None,
        }
    }
}

impl fmt::Display for IgnoreReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IgnoreReason::ProperNoun => "proper noun",
            IgnoreReason::EnvironmentNoun => "environment noun",
            IgnoreReason::Pronoun => "pronoun",
            IgnoreReason::NotNounPhrase => "not a noun phrase",
        })
    }
}

/// What a noun phrase denotes on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NounRole {
    Class { name: String, rule: RuleId },
    Attribute { owner: String, name: String, rule: RuleId },
    Ignored(IgnoreReason),
}

impl NounRole {
    pub fn class_name(&self) -> Option<&str> {
        match self {
            NounRole::Class { name, .. } => Some(name),
            _ => None,
        }
    }
}

/// Trailing run of noun tokens ending at the head.
fn noun_run(np: &Phrase) -> &[crate::tagger::TaggedToken] {
    let end = np.head + 1;
    let start = np.tokens[..end]
        .iter()
        .rposition(|t| !t.tag.is_noun())
        .map_or(0, |p| p + 1);
    &np.tokens[start..end]
}

fn joined_lemmas(tokens: &[crate::tagger::TaggedToken]) -> String {
    tokens
        .iter()
        .map(|t| t.lemma.as_str())
        .collect::<Vec<_>>()
        .join("_")
}

/// Classifies a noun phrase, filters first: R5, R4, R6, R8, then R2/R1.
pub fn classify_noun_phrase(np: &Phrase, cfg: &RuleConfig) -> NounRole {
    if np.kind != PhraseKind::NP {
        return NounRole::Ignored(IgnoreReason::NotNounPhrase);
    }
    let head = np.head_token();
    match head.tag {
        PosTag::PRP => return NounRole::Ignored(IgnoreReason::Pronoun),
        PosTag::NNP => return NounRole::Ignored(IgnoreReason::ProperNoun),
        _ => {}
    }
    if cfg.is_environment_noun(&head.lemma) {
        return NounRole::Ignored(IgnoreReason::EnvironmentNoun);
    }

    let surface = head.lower();
    if let Some((owner, last)) = surface.rsplit_once('_') {
        if cfg.is_attribute_indicator(last) && !owner.is_empty() {
            let owner = owner
                .split('_')
                .map(singularize)
                .collect::<Vec<_>>()
                .join("_");
            return NounRole::Attribute {
                owner,
                name: last.to_string(),
                rule: RuleId::R6,
            };
        }
    }

    let run = noun_run(np);
    if run.len() >= 2 {
        let (last, rest) = run.split_last().expect("run has two or more tokens");
        if cfg.is_attribute_indicator(&last.lemma) {
            return NounRole::Attribute {
                owner: joined_lemmas(rest),
                name: last.lemma.clone(),
                rule: RuleId::R8,
            };
        }
        return NounRole::Class {
            name: joined_lemmas(run),
            rule: RuleId::R8,
        };
    }

    if head.tag == PosTag::VBG {
        return NounRole::Class {
            name: surface,
            rule: RuleId::R2,
        };
    }
    NounRole::Class {
        name: head.lemma.clone(),
        rule: RuleId::R1,
    }
}

/// Class for a gerund-headed noun phrase, named by the `-ing` form.
pub fn detect_gerund_class(np: &Phrase, sentence_index: usize) -> Option<CandidateClass> {
    (np.kind == PhraseKind::NP && np.head_tag() == PosTag::VBG).then(|| {
        CandidateClass::new(
            np.head_token().lower(),
            Provenance::new(RuleId::R2, sentence_index, np.full_text()),
        )
    })
}

fn clause_snippet(clause: &Clause, target: Option<&Phrase>) -> String {
    let mut parts = Vec::new();
    if let Some(s) = &clause.subject {
        parts.push(s.full_text());
    }
    if let Some(v) = &clause.verb {
        parts.push(v.text());
    }
    if let Some(t) = target {
        parts.push(t.full_text());
    }
    parts.join(" ")
}

/// Class named by an NP in a relationship slot. An owned genitive
/// (`the member's address`) names an attribute instead.
fn slot_class(np: &Phrase, cfg: &RuleConfig) -> Option<String> {
    if let Some(owner) = &np.owner {
        if classify_noun_phrase(owner, cfg).class_name().is_some() {
            return None;
        }
    }
    classify_noun_phrase(np, cfg)
        .class_name()
        .map(str::to_string)
}

fn subject_class(clause: &Clause, cfg: &RuleConfig) -> Option<String> {
    slot_class(clause.subject.as_ref()?, cfg)
}

/// `A is a B` → generalization A → B, one per object.
pub fn detect_generalization(clause: &Clause, cfg: &RuleConfig) -> Vec<CandidateAssociation> {
    if !clause.copular {
        return Vec::new();
    }
    let Some(sub) = subject_class(clause, cfg) else {
        return Vec::new();
    };
    clause
        .objects
        .iter()
        .filter_map(|obj| {
            let sup = slot_class(obj, cfg)?;
            Some(CandidateAssociation::new(
                RelationKind::Generalization,
                sub.clone(),
                sup,
                GENERALIZATION_LABEL,
                Provenance::new(RuleId::R3, clause.sentence_index, clause_snippet(clause, Some(obj))),
            ))
        })
        .collect()
}

/// `A's B` → attribute B of A, when A is a class.
pub fn detect_genitive_attributes(clause: &Clause, cfg: &RuleConfig) -> Vec<CandidateAttribute> {
    clause
        .possessed
        .iter()
        .filter_map(|(owner, owned)| {
            let owner_class = classify_noun_phrase(owner, cfg).class_name()?.to_string();
            Some(CandidateAttribute::new(
                owner_class,
                owned.head_lemma(),
                Provenance::new(
                    RuleId::R7,
                    clause.sentence_index,
                    format!("{}'s {}", owner.full_text(), owned.text()),
                ),
            ))
        })
        .collect()
}

/// `A has B (and C)` → attributes of A.
pub fn detect_have_attributes(clause: &Clause, cfg: &RuleConfig) -> Vec<CandidateAttribute> {
    if clause.verb_lemma() != Some("have") {
        return Vec::new();
    }
    let Some(owner) = subject_class(clause, cfg) else {
        return Vec::new();
    };
    clause
        .objects
        .iter()
        .map(|obj| {
            CandidateAttribute::new(
                owner.clone(),
                obj.head_lemma(),
                Provenance::new(RuleId::R9, clause.sentence_index, clause_snippet(clause, Some(obj))),
            )
        })
        .collect()
}

/// Whole-part verbs → aggregation (whole = subject).
pub fn detect_aggregation(clause: &Clause, cfg: &RuleConfig) -> Vec<CandidateAssociation> {
    let Some(verb) = clause.verb_lemma() else {
        return Vec::new();
    };
    let Some(required_preps) = cfg.aggregation_verbs.get(verb) else {
        return Vec::new();
    };
    let Some(whole) = subject_class(clause, cfg) else {
        return Vec::new();
    };
    let parts: Vec<&Phrase> = if required_preps.is_empty() {
        clause.objects.iter().collect()
    } else {
        clause
            .pp_complements
            .iter()
            .filter(|(prep, _)| required_preps.contains(prep))
            .map(|(_, np)| np)
            .collect()
    };
    parts
        .into_iter()
        .filter_map(|part| {
            let part_class = slot_class(part, cfg)?;
            Some(CandidateAssociation::new(
                RelationKind::Aggregation,
                whole.clone(),
                part_class,
                verb,
                Provenance::new(RuleId::R12, clause.sentence_index, clause_snippet(clause, Some(part))),
            ))
        })
        .collect()
}

/// Transitive verb (R10) or verb + relation preposition (R11). Empty when
/// the clause is copular, uses `have`, or fires R12.
pub fn detect_association(clause: &Clause, cfg: &RuleConfig) -> Vec<CandidateAssociation> {
    let Some(verb) = clause.verb_lemma() else {
        return Vec::new();
    };
    if clause.copular || verb == "have" || !detect_aggregation(clause, cfg).is_empty() {
        return Vec::new();
    }
    let Some(source) = subject_class(clause, cfg) else {
        return Vec::new();
    };

    if !clause.objects.is_empty() {
        return clause
            .objects
            .iter()
            .filter_map(|obj| {
                let target = slot_class(obj, cfg)?;
                Some(CandidateAssociation::new(
                    RelationKind::Association,
                    source.clone(),
                    target,
                    verb,
                    Provenance::new(RuleId::R10, clause.sentence_index, clause_snippet(clause, Some(obj))),
                ))
            })
            .collect();
    }

    clause
        .pp_complements
        .iter()
        .filter(|(prep, _)| cfg.relation_prepositions.contains(prep))
        .filter_map(|(prep, np)| {
            let target = slot_class(np, cfg)?;
            Some(CandidateAssociation::new(
                RelationKind::Association,
                source.clone(),
                target,
                format!("{verb}_{prep}"),
                Provenance::new(
                    RuleId::R11,
                    clause.sentence_index,
                    format!("{} {prep} {}", clause_snippet(clause, None), np.full_text()),
                ),
            ))
        })
        .collect()
}

/// One rule application, for tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleFiring {
    pub rule: RuleId,
    pub sentence_index: usize,
    pub snippet: String,
    pub result: String,
}

impl fmt::Display for RuleFiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RULE\t{}\t{}\t{}\t{}",
            self.rule, self.sentence_index, self.snippet, self.result
        )
    }
}

/// Runs every heuristic over the clauses and merges the results.
pub fn apply_rules(clauses: &[Clause], cfg: &RuleConfig) -> CandidateModel {
    apply_rules_traced(clauses, cfg, &mut Vec::new())
}

fn describe_relation(a: &CandidateAssociation) -> String {
    format!("{} {} {} {}", a.kind, a.source, a.target, a.label)
}

/// Same as [`apply_rules`], recording every firing.
///
/// Per clause: noun classification (R1, R2, R4, R5, R6, R8), then R3, R12,
/// R10/R11, R7 and R9. A noun phrase consumed as an attribute by R7 or R9
/// does not also become a class from that mention.
pub fn apply_rules_traced(
    clauses: &[Clause],
    cfg: &RuleConfig,
    firings: &mut Vec<RuleFiring>,
) -> CandidateModel {
    let mut model = CandidateModel::default();
    for clause in clauses {
        apply_clause(clause, cfg, &mut model, firings);
    }
    model
}

fn apply_clause(
    clause: &Clause,
    cfg: &RuleConfig,
    model: &mut CandidateModel,
    firings: &mut Vec<RuleFiring>,
) {
    let s = clause.sentence_index;
    let mut fire = |rule: RuleId, snippet: String, result: String| {
        firings.push(RuleFiring {
            rule,
            sentence_index: s,
            snippet,
            result,
        });
    };

    let genitive = detect_genitive_attributes(clause, cfg);
    let have = detect_have_attributes(clause, cfg);
    let mut consumed: HashSet<(usize, usize)> = HashSet::new();
    for (owner, owned) in &clause.possessed {
        if classify_noun_phrase(owner, cfg).class_name().is_some() {
            consumed.insert(owned.span);
        }
    }
    if !have.is_empty() {
        consumed.extend(clause.objects.iter().map(|o| o.span));
    }

    let mut nps: Vec<&Phrase> = clause.noun_phrases();
    nps.extend(clause.possessed.iter().map(|(owner, _)| owner));
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for np in nps {
        if !seen.insert(np.span) {
            continue;
        }
        let snippet = np.full_text();
        let role = classify_noun_phrase(np, cfg);
        if consumed.contains(&np.span) {
            continue;
        }
        match role {
            NounRole::Class { name, rule } => {
                fire(rule, snippet.clone(), format!("class {name}"));
                model.add_class(CandidateClass::new(name, Provenance::new(rule, s, snippet)));
            }
            NounRole::Attribute { owner, name, rule } => {
                let owner_tail = owner.rsplit('_').next().unwrap_or(&owner);
                let owner_proper = rule == RuleId::R8
                    && noun_run(np)
                        .split_last()
                        .is_some_and(|(_, rest)| rest.iter().any(|t| t.tag == PosTag::NNP));
                if cfg.is_environment_noun(owner_tail) || owner_proper {
                    fire(rule, snippet, format!("dropped attribute {owner}.{name}"));
                    continue;
                }
                fire(rule, snippet.clone(), format!("attribute {owner}.{name}"));
                model.add_class(CandidateClass::new(
                    owner.clone(),
                    Provenance::new(rule, s, snippet.clone()),
                ));
                model.add_attribute(CandidateAttribute::new(
                    owner,
                    name,
                    Provenance::new(rule, s, snippet),
                ));
            }
            NounRole::Ignored(reason) => {
                if let Some(rule) = reason.rule() {
                    fire(rule, snippet, format!("ignored ({reason})"));
                }
            }
        }
    }

    let mut relations = detect_generalization(clause, cfg);
    relations.extend(detect_aggregation(clause, cfg));
    relations.extend(detect_association(clause, cfg));
    for relation in relations {
        let prov = &relation.provenance[0];
        fire(prov.rule_id, prov.snippet.clone(), describe_relation(&relation));
        for endpoint in [&relation.source, &relation.target] {
            if model.class(endpoint).is_none() {
                model.add_class(CandidateClass::new(endpoint.clone(), prov.clone()));
            }
        }
        model.add_association(relation);
    }

    for attribute in genitive.into_iter().chain(have) {
        let prov = &attribute.provenance[0];
        fire(
            prov.rule_id,
            prov.snippet.clone(),
            format!("attribute {}.{}", attribute.owner, attribute.name),
        );
        model.add_attribute(attribute);
    }
}
