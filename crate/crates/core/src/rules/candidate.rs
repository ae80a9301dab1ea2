use std::fmt;
use std::str::FromStr;

use crate::names::display_name;

/// Which heuristic produced (or refined) a model element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    /// Ontology refinement.
    Ont,
}

impl RuleId {
    pub const ALL: [RuleId; 13] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R12,
        RuleId::Ont,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
            RuleId::R10 => "R10",
            RuleId::R11 => "R11",
            RuleId::R12 => "R12",
            RuleId::Ont => "ONT",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown rule id `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub rule_id: RuleId,
    pub sentence_index: usize,
    pub snippet: String,
}

impl Provenance {
    pub fn new(rule_id: RuleId, sentence_index: usize, snippet: impl Into<String>) -> Self {
        Self {
            rule_id,
            sentence_index,
            snippet: snippet.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum Status {
    #[default]
    Candidate,
    Rejected(String),
    Confirmed,
}

impl Status {
    pub fn is_rejected(&self) -> bool {
        matches!(self, Status::Rejected(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Association,
    Aggregation,
    Generalization,
}

impl RelationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::Association => "association",
            RelationKind::Aggregation => "aggregation",
            RelationKind::Generalization => "generalization",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "association" => Ok(RelationKind::Association),
            "aggregation" => Ok(RelationKind::Aggregation),
            "generalization" => Ok(RelationKind::Generalization),
            other => Err(format!("unknown relationship kind `{other}`")),
        }
    }
}

/// Label carried by every candidate generalization.
pub const GENERALIZATION_LABEL: &str = "is_a";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateClass {
    /// Lowercase singular lemma, compounds joined with `_`.
    pub name: String,
    pub display_name: String,
    pub provenance: Vec<Provenance>,
    pub status: Status,
}

impl CandidateClass {
    pub fn new(name: impl Into<String>, provenance: Provenance) -> Self {
        let name = name.into();
        Self {
            display_name: display_name(&name),
            name,
            provenance: vec![provenance],
            status: Status::Candidate,
        }
    }

    pub fn first_mention(&self) -> usize {
        first_mention(&self.provenance)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateAttribute {
    pub owner: String,
    pub name: String,
    pub provenance: Vec<Provenance>,
    pub status: Status,
}

impl CandidateAttribute {
    pub fn new(owner: impl Into<String>, name: impl Into<String>, provenance: Provenance) -> Self {
        Self {
            owner: owner.into(),
            name: name.into(),
            provenance: vec![provenance],
            status: Status::Candidate,
        }
    }

    pub fn first_mention(&self) -> usize {
        first_mention(&self.provenance)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateAssociation {
    pub source: String,
    pub target: String,
    pub label: String,
    pub kind: RelationKind,
    pub provenance: Vec<Provenance>,
}

impl CandidateAssociation {
    pub fn new(
        kind: RelationKind,
        source: impl Into<String>,
        target: impl Into<String>,
        label: impl Into<String>,
        provenance: Provenance,
    ) -> Self {
        let label = match kind {
            RelationKind::Generalization => GENERALIZATION_LABEL.to_string(),
            _ => label.into(),
        };
        Self {
            source: source.into(),
            target: target.into(),
            label,
            kind,
            provenance: vec![provenance],
        }
    }

    pub fn first_mention(&self) -> usize {
        first_mention(&self.provenance)
    }

    fn key(&self) -> (&str, &str, &str, RelationKind) {
        (&self.source, &self.target, &self.label, self.kind)
    }
}

pub(crate) fn first_mention(provenance: &[Provenance]) -> usize {
    provenance
        .iter()
        .map(|p| p.sentence_index)
        .min()
        .unwrap_or(usize::MAX)
}

fn merge_provenance(into: &mut Vec<Provenance>, from: impl IntoIterator<Item = Provenance>) {
    for p in from {
        if !into.contains(&p) {
            into.push(p);
        }
    }
}

/// Intermediate model built by the rules. Elements are kept in first-seen
/// order and merged on identity (class name, owner/name pair, or
/// source/target/label/kind tuple).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateModel {
    pub classes: Vec<CandidateClass>,
    pub attributes: Vec<CandidateAttribute>,
    pub associations: Vec<CandidateAssociation>,
}

impl CandidateModel {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && self.attributes.is_empty() && self.associations.is_empty()
    }

    pub fn class(&self, name: &str) -> Option<&CandidateClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn class_mut(&mut self, name: &str) -> Option<&mut CandidateClass> {
        self.classes.iter_mut().find(|c| c.name == name)
    }

    pub fn attribute(&self, owner: &str, name: &str) -> Option<&CandidateAttribute> {
        self.attributes
            .iter()
            .find(|a| a.owner == owner && a.name == name)
    }

    pub fn association(
        &self,
        kind: RelationKind,
        source: &str,
        target: &str,
    ) -> Option<&CandidateAssociation> {
        self.associations
            .iter()
            .find(|a| a.kind == kind && a.source == source && a.target == target)
    }

    pub fn add_class(&mut self, class: CandidateClass) {
        match self.class_mut(&class.name) {
            Some(existing) => merge_provenance(&mut existing.provenance, class.provenance),
            None => self.classes.push(class),
        }
    }

    pub fn add_attribute(&mut self, attribute: CandidateAttribute) {
        let existing = self
            .attributes
            .iter_mut()
            .find(|a| a.owner == attribute.owner && a.name == attribute.name);
        match existing {
            Some(existing) => merge_provenance(&mut existing.provenance, attribute.provenance),
            None => self.attributes.push(attribute),
        }
    }

    pub fn add_association(&mut self, association: CandidateAssociation) {
        let existing = self
            .associations
            .iter_mut()
            .find(|a| a.key() == association.key());
        match existing {
            Some(existing) => merge_provenance(&mut existing.provenance, association.provenance),
            None => self.associations.push(association),
        }
    }

    /// Merges another model into this one, offsetting its sentence indices.
    pub fn absorb(&mut self, other: CandidateModel, sentence_offset: usize) {
        let shift = |mut p: Vec<Provenance>| {
            for entry in &mut p {
                entry.sentence_index += sentence_offset;
            }
            p
        };
        for mut c in other.classes {
            c.provenance = shift(c.provenance);
            self.add_class(c);
        }
        for mut a in other.attributes {
            a.provenance = shift(a.provenance);
            self.add_attribute(a);
        }
        for mut a in other.associations {
            a.provenance = shift(a.provenance);
            self.add_association(a);
        }
    }
}
