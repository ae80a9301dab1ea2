//! Domain ontologies and candidate-model refinement.
//!
//! File format, one statement per line (`#` starts a comment):
//!
//! ```text
//! concept book
//!   synonym publication
//!   attribute title
//! concept member
//!   synonym borrower
//! relation member borrow book
//! irrelevant system
//! ```
//!
//! `synonym` and `attribute` attach to the most recent `concept`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::names::{display_name, normalize_name};
use crate::rules::{
    CandidateAssociation, CandidateAttribute, CandidateClass, CandidateModel, Provenance, RuleId,
    Status,
};

#[derive(Debug, Error)]
pub enum OntologyError {
    #[error("line {line}: malformed ontology line `{content}`")]
    MalformedOntologyLine { line: usize, content: String },
    #[error("line {line}: concept `{name}` declared twice")]
    DuplicateConcept { line: usize, name: String },
    #[error("line {line}: synonym `{word}` collides with another concept")]
    SynonymCollision { line: usize, word: String },
    #[error("`{name}` is both a concept and irrelevant")]
    IrrelevantConcept { name: String },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Concept {
    pub name: String,
    pub synonyms: BTreeSet<String>,
    pub expected_attributes: BTreeSet<String>,
}

impl Concept {
    pub fn new(name: &str) -> Self {
        Self {
            name: normalize_name(name),
            ..Self::default()
        }
    }
}

/// Relation between two concepts. Parsed and kept, not used by [`refine`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptRelation {
    pub source: String,
    pub label: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ontology {
    pub concepts: Vec<Concept>,
    pub irrelevant: BTreeSet<String>,
    pub relations: Vec<ConceptRelation>,
}

impl Ontology {
    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty() && self.irrelevant.is_empty()
    }

    pub fn concept(&self, name: &str) -> Option<&Concept> {
        self.concepts.iter().find(|c| c.name == name)
    }

    pub fn is_irrelevant(&self, name: &str) -> bool {
        self.irrelevant.contains(&normalize_name(name))
    }

    /// Parses the line format described in the module docs.
    pub fn parse(text: &str) -> Result<Self, OntologyError> {
        let mut ont = Ontology::default();
        // word (name or synonym) → owning concept, for collision checks
        let mut owners: BTreeMap<String, String> = BTreeMap::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let malformed = || OntologyError::MalformedOntologyLine {
                line,
                content: raw.trim().to_string(),
            };
            let (keyword, rest) = content
                .split_once(char::is_whitespace)
                .map(|(k, r)| (k, r.trim()))
                .ok_or_else(malformed)?;
            if rest.is_empty() {
                return Err(malformed());
            }
            match keyword.to_lowercase().as_str() {
                "concept" => {
                    let name = normalize_name(rest);
                    if ont.concept(&name).is_some() {
                        return Err(OntologyError::DuplicateConcept { line, name });
                    }
                    if owners.contains_key(&name) {
                        return Err(OntologyError::SynonymCollision { line, word: name });
                    }
                    owners.insert(name.clone(), name.clone());
                    ont.concepts.push(Concept {
                        name,
                        ..Concept::default()
                    });
                }
                "synonym" => {
                    let concept = ont.concepts.last_mut().ok_or_else(malformed)?;
                    let word = normalize_name(rest);
                    match owners.get(&word) {
                        Some(owner) if *owner != concept.name => {
                            return Err(OntologyError::SynonymCollision { line, word });
                        }
                        _ => {}
                    }
                    owners.insert(word.clone(), concept.name.clone());
                    if word != concept.name {
                        concept.synonyms.insert(word);
                    }
                }
                "attribute" => {
                    let concept = ont.concepts.last_mut().ok_or_else(malformed)?;
                    concept.expected_attributes.insert(normalize_name(rest));
                }
                "irrelevant" => {
                    ont.irrelevant.insert(normalize_name(rest));
                }
                "relation" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let [source, label, target] = parts.as_slice() else {
                        return Err(malformed());
                    };
                    ont.relations.push(ConceptRelation {
                        source: normalize_name(source),
                        label: label.to_lowercase(),
                        target: normalize_name(target),
                    });
                }
                _ => return Err(malformed()),
            }
        }

        if let Some(name) = ont.irrelevant.iter().find(|w| owners.contains_key(*w)) {
            return Err(OntologyError::IrrelevantConcept { name: name.clone() });
        }
        Ok(ont)
    }
}

pub fn load_ontology(path: &Path) -> Result<Ontology, OntologyError> {
    let text = std::fs::read_to_string(path).map_err(|source| OntologyError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ontology::parse(&text)
}

/// Concept with the given name or synonym.
pub fn match_concept<'a>(name: &str, ont: &'a Ontology) -> Option<&'a Concept> {
    let name = normalize_name(name);
    ont.concept(&name)
        .or_else(|| ont.concepts.iter().find(|c| c.synonyms.contains(&name)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RefinementMode {
    /// Classes outside the ontology are rejected.
    Strict,
    /// Classes outside the ontology stay as candidates.
    #[default]
    Lenient,
}

impl RefinementMode {
    pub fn as_str(self) -> &'static str {
        match self {
            RefinementMode::Strict => "strict",
            RefinementMode::Lenient => "lenient",
        }
    }
}

impl fmt::Display for RefinementMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RefinementMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(RefinementMode::Strict),
            "lenient" => Ok(RefinementMode::Lenient),
            other => Err(format!("unknown refinement mode `{other}`")),
        }
    }
}

fn push_unique(into: &mut Vec<Provenance>, p: Provenance) {
    if !into.contains(&p) {
        into.push(p);
    }
}

fn ont_provenance(first_mention: usize, note: impl Into<String>) -> Provenance {
    let sentence = if first_mention == usize::MAX { 0 } else { first_mention };
    Provenance::new(RuleId::Ont, sentence, note)
}

/// Confirms, renames or rejects candidates against the ontology.
///
/// Never adds elements. Attributes of rejected classes and associations
/// with an endpoint that is not a surviving class are removed. Statuses are
/// recomputed from scratch, so refining twice gives the same model.
pub fn refine(model: &CandidateModel, ont: &Ontology, mode: RefinementMode) -> CandidateModel {
    let mut out = CandidateModel::default();
    // original class name → canonical name
    let mut renamed: BTreeMap<&str, String> = BTreeMap::new();

    for class in &model.classes {
        let normal = normalize_name(&class.name);
        let first = class.first_mention();
        let (name, status, note) = if ont.irrelevant.contains(&normal) {
            (
                class.name.clone(),
                Status::Rejected("irrelevant".into()),
                Some("irrelevant".to_string()),
            )
        } else if let Some(concept) = match_concept(&normal, ont) {
            (
                concept.name.clone(),
                Status::Confirmed,
                Some(format!("concept {}", concept.name)),
            )
        } else if mode == RefinementMode::Strict {
            (
                class.name.clone(),
                Status::Rejected("not in ontology".into()),
                Some("not in ontology".to_string()),
            )
        } else {
            (class.name.clone(), Status::Candidate, None)
        };

        renamed.insert(&class.name, name.clone());
        let mut provenance = class.provenance.clone();
        if let Some(note) = note {
            push_unique(&mut provenance, ont_provenance(first, note));
        }
        match out.class_mut(&name) {
            Some(existing) => {
                for p in provenance {
                    push_unique(&mut existing.provenance, p);
                }
                if status == Status::Confirmed {
                    existing.status = Status::Confirmed;
                }
            }
            None => {
                out.classes.push(CandidateClass {
                    display_name: display_name(&name),
                    name,
                    provenance,
                    status,
                });
            }
        }
    }

    let canonical = |name: &str| -> String {
        renamed
            .get(name)
            .cloned()
            .unwrap_or_else(|| name.to_string())
    };
    let surviving: HashSet<String> = out
        .classes
        .iter()
        .filter(|c| !c.status.is_rejected())
        .map(|c| c.name.clone())
        .collect();
    let rejected: HashSet<String> = out
        .classes
        .iter()
        .filter(|c| c.status.is_rejected())
        .map(|c| c.name.clone())
        .collect();

    for attribute in &model.attributes {
        let owner = canonical(&attribute.owner);
        if rejected.contains(&owner) {
            continue;
        }
        let mut refined = CandidateAttribute {
            owner: owner.clone(),
            name: attribute.name.clone(),
            provenance: attribute.provenance.clone(),
            status: Status::Candidate,
        };
        let expected = ont
            .concept(&owner)
            .is_some_and(|c| c.expected_attributes.contains(&normalize_name(&attribute.name)));
        if expected {
            refined.status = Status::Confirmed;
            let first = attribute.first_mention();
            push_unique(
                &mut refined.provenance,
                ont_provenance(first, format!("attribute {owner}.{}", attribute.name)),
            );
        }
        merge_attribute(&mut out, refined);
    }

    for association in &model.associations {
        let source = canonical(&association.source);
        let target = canonical(&association.target);
        if !surviving.contains(&source) || !surviving.contains(&target) {
            continue;
        }
        let mut provenance = association.provenance.clone();
        if source != association.source || target != association.target {
            let first = association.first_mention();
            push_unique(&mut provenance, ont_provenance(first, format!("{source} {target}")));
        }
        out.add_association(CandidateAssociation {
            source,
            target,
            label: association.label.clone(),
            kind: association.kind,
            provenance,
        });
    }
    out
}

fn merge_attribute(out: &mut CandidateModel, attribute: CandidateAttribute) {
    let existing = out
        .attributes
        .iter_mut()
        .find(|a| a.owner == attribute.owner && a.name == attribute.name);
    match existing {
        Some(existing) => {
            for p in attribute.provenance {
                push_unique(&mut existing.provenance, p);
            }
            if attribute.status == Status::Confirmed {
                existing.status = Status::Confirmed;
            }
        }
        None => out.attributes.push(attribute),
    }
}
