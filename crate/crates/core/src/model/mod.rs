//! Finalized UML class models.

mod plantuml;
mod xml;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use plantuml::to_plantuml;
pub use xml::{from_xml, to_xml, ModelError, SCHEMA_VERSION};

use crate::names::display_name;
use crate::rules::{CandidateModel, Provenance, RelationKind, RuleId};

/// Rule and sentence a model element came from, as written in XML
/// (`R10:s3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceRef {
    pub rule_id: RuleId,
    pub sentence_index: usize,
}

impl From<&Provenance> for SourceRef {
    fn from(p: &Provenance) -> Self {
        Self {
            rule_id: p.rule_id,
            sentence_index: p.sentence_index,
        }
    }
}

impl fmt::Display for SourceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:s{}", self.rule_id, self.sentence_index)
    }
}

impl FromStr for SourceRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (rule, sentence) = s
            .split_once(":s")
            .ok_or_else(|| format!("bad provenance `{s}`"))?;
        Ok(Self {
            rule_id: rule.parse()?,
            sentence_index: sentence
                .parse()
                .map_err(|_| format!("bad sentence index in `{s}`"))?,
        })
    }
}

fn source_refs(provenance: &[Provenance]) -> Vec<SourceRef> {
    let mut refs: Vec<SourceRef> = Vec::new();
    for p in provenance {
        let r = SourceRef::from(p);
        if !refs.contains(&r) {
            refs.push(r);
        }
    }
    refs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlAttribute {
    pub name: String,
    pub provenance: Vec<SourceRef>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlClass {
    /// UpperCamelCase.
    pub name: String,
    pub attributes: Vec<UmlAttribute>,
    pub provenance: Vec<SourceRef>,
}

impl UmlClass {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            attributes: Vec::new(),
            provenance: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UmlRelationship {
    pub kind: RelationKind,
    pub source: String,
    pub target: String,
    /// Empty for generalizations.
    pub label: String,
    pub provenance: Vec<SourceRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassModel {
    pub source: Option<String>,
    pub mode: Option<String>,
    pub tool: Option<String>,
    pub classes: Vec<UmlClass>,
    pub relationships: Vec<UmlRelationship>,
}

impl ClassModel {
    pub fn class(&self, name: &str) -> Option<&UmlClass> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && self.relationships.is_empty()
    }

    /// First relationship endpoint that names no class.
    pub fn dangling_endpoint(&self) -> Option<&str> {
        self.relationships
            .iter()
            .flat_map(|r| [r.source.as_str(), r.target.as_str()])
            .find(|name| self.class(name).is_none())
    }
}

fn first(provenance: &[Provenance]) -> usize {
    provenance
        .iter()
        .map(|p| p.sentence_index)
        .min()
        .unwrap_or(usize::MAX)
}

/// Drops rejected and orphaned elements, applies display names and orders
/// everything by first mention, then name.
pub fn finalize(cand: &CandidateModel) -> ClassModel {
    // display name → (first mention, class)
    let mut classes: BTreeMap<String, (usize, UmlClass)> = BTreeMap::new();
    let mut display: BTreeMap<&str, String> = BTreeMap::new();
    for c in cand.classes.iter().filter(|c| !c.status.is_rejected()) {
        let name = display_name(&c.name);
        if name.is_empty() {
            continue;
        }
        display.insert(&c.name, name.clone());
        let entry = classes
            .entry(name.clone())
            .or_insert_with(|| (usize::MAX, UmlClass::new(name)));
        entry.0 = entry.0.min(first(&c.provenance));
        for r in source_refs(&c.provenance) {
            if !entry.1.provenance.contains(&r) {
                entry.1.provenance.push(r);
            }
        }
    }

    let mut attributes: BTreeMap<String, Vec<(usize, UmlAttribute)>> = BTreeMap::new();
    for a in cand.attributes.iter().filter(|a| !a.status.is_rejected()) {
        let Some(owner) = display.get(a.owner.as_str()) else {
            continue;
        };
        if a.name.is_empty() {
            continue;
        }
        let list = attributes.entry(owner.clone()).or_default();
        let refs = source_refs(&a.provenance);
        match list.iter_mut().find(|(_, x)| x.name == a.name) {
            Some((mention, existing)) => {
                *mention = (*mention).min(first(&a.provenance));
                for r in refs {
                    if !existing.provenance.contains(&r) {
                        existing.provenance.push(r);
                    }
                }
            }
            None => list.push((
                first(&a.provenance),
                UmlAttribute {
                    name: a.name.clone(),
                    provenance: refs,
                },
            )),
        }
    }
    for (owner, mut list) in attributes {
        list.sort_by(|(m1, a1), (m2, a2)| (m1, &a1.name).cmp(&(m2, &a2.name)));
        if let Some((_, class)) = classes.get_mut(&owner) {
            class.attributes = list.into_iter().map(|(_, a)| a).collect();
        }
    }

    let mut relationships: Vec<(usize, UmlRelationship)> = Vec::new();
    for a in &cand.associations {
        let (Some(source), Some(target)) =
            (display.get(a.source.as_str()), display.get(a.target.as_str()))
        else {
            continue;
        };
        let label = match a.kind {
            RelationKind::Generalization => String::new(),
            _ => a.label.clone(),
        };
        let refs = source_refs(&a.provenance);
        let existing = relationships.iter_mut().find(|(_, r)| {
            r.kind == a.kind && &r.source == source && &r.target == target && r.label == label
        });
        match existing {
            Some((mention, r)) => {
                *mention = (*mention).min(first(&a.provenance));
                for x in refs {
                    if !r.provenance.contains(&x) {
                        r.provenance.push(x);
                    }
                }
            }
            None => relationships.push((
                first(&a.provenance),
                UmlRelationship {
                    kind: a.kind,
                    source: source.clone(),
                    target: target.clone(),
                    label,
                    provenance: refs,
                },
            )),
        }
    }
    relationships.sort_by(|(m1, r1), (m2, r2)| {
        (m1, &r1.source, &r1.target, r1.kind, &r1.label)
            .cmp(&(m2, &r2.source, &r2.target, r2.kind, &r2.label))
    });

    let mut classes: Vec<(usize, UmlClass)> = classes.into_values().collect();
    classes.sort_by(|(m1, c1), (m2, c2)| (m1, &c1.name).cmp(&(m2, &c2.name)));
    ClassModel {
        classes: classes.into_iter().map(|(_, c)| c).collect(),
        relationships: relationships.into_iter().map(|(_, r)| r).collect(),
        ..ClassModel::default()
    }
}
