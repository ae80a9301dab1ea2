use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Nouns describing the business environment rather than a domain entity.
pub const DEFAULT_ENVIRONMENT_NOUNS: &[&str] = &[
    "database",
    "record",
    "system",
    "company",
    "information",
    "organization",
    "detail",
];

/// Last nouns of a compound that mark it as an attribute.
pub const DEFAULT_ATTRIBUTE_INDICATORS: &[&str] = &[
    "number", "no", "code", "date", "type", "volume", "birth", "id", "address", "name",
];

/// Whole-part verbs; multiword forms carry their required preposition.
pub const DEFAULT_AGGREGATION_VERBS: &[(&str, &[&str])] = &[
    ("include", &[]),
    ("involve", &[]),
    ("consist", &["of"]),
    ("contain", &[]),
    ("comprise", &[]),
    ("divide", &["to", "into"]),
    ("embrace", &[]),
];

pub const DEFAULT_RELATION_PREPOSITIONS: &[&str] = &["in", "on", "to", "by"];

#[derive(Debug, Error)]
pub enum RuleConfigError {
    #[error("line {line}: malformed rule setting `{content}`")]
    Malformed { line: usize, content: String },
    #[error("line {line}: unknown rule setting `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Word lists the heuristics consult. All entries are lowercase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleConfig {
    pub environment_nouns: BTreeSet<String>,
    pub attribute_indicators: BTreeSet<String>,
    /// Verb lemma → prepositions that must follow it (empty: direct object).
    pub aggregation_verbs: BTreeMap<String, BTreeSet<String>>,
    pub relation_prepositions: BTreeSet<String>,
}

fn owned_set(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|w| w.to_string()).collect()
}

impl Default for RuleConfig {
    fn default() -> Self {
        Self {
            environment_nouns: owned_set(DEFAULT_ENVIRONMENT_NOUNS),
            attribute_indicators: owned_set(DEFAULT_ATTRIBUTE_INDICATORS),
            aggregation_verbs: DEFAULT_AGGREGATION_VERBS
                .iter()
                .map(|(verb, preps)| (verb.to_string(), owned_set(preps)))
                .collect(),
            relation_prepositions: owned_set(DEFAULT_RELATION_PREPOSITIONS),
        }
    }
}

impl RuleConfig {
    /// Extends the word lists from `key value` lines:
    ///
    /// ```text
    /// environment_noun ledger
    /// attribute_indicator label
    /// aggregation_verb hold
    /// aggregation_verb consist of
    /// relation_preposition for
    /// ```
    pub fn merge_settings(&mut self, text: &str) -> Result<(), RuleConfigError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim().to_lowercase();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let malformed = || RuleConfigError::Malformed {
                line,
                content: raw.trim().to_string(),
            };
            match fields.as_slice() {
                ["environment_noun", word] => {
                    self.environment_nouns.insert(word.to_string());
                }
                ["attribute_indicator", word] => {
                    self.attribute_indicators.insert(word.to_string());
                }
                ["relation_preposition", word] => {
                    self.relation_prepositions.insert(word.to_string());
                }
                ["aggregation_verb", verb] => {
                    self.aggregation_verbs.entry(verb.to_string()).or_default();
                }
                ["aggregation_verb", verb, prep] => {
                    self.aggregation_verbs
                        .entry(verb.to_string())
                        .or_default()
                        .insert(prep.to_string());
                }
                [
                    "environment_noun" | "attribute_indicator" | "relation_preposition"
                    | "aggregation_verb",
                    ..,
                ] => return Err(malformed()),
                [key, ..] => {
                    return Err(RuleConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
                [] => unreachable!("blank lines are skipped"),
            }
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, RuleConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| RuleConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let mut cfg = Self::default();
        cfg.merge_settings(&text)?;
        Ok(cfg)
    }

    pub fn is_environment_noun(&self, lemma: &str) -> bool {
        self.environment_nouns.contains(lemma)
    }

    pub fn is_attribute_indicator(&self, lemma: &str) -> bool {
        self.attribute_indicators.contains(lemma)
    }
}
