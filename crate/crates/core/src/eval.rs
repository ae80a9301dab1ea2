//! Scoring extracted models against gold models.
//!
//! recall = correct / key, precision = correct / response,
//! over-generation = extra / key. Elements match on normalized names;
//! relationships match on kind and the unordered endpoint pair.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::ops::Add;

use crate::model::ClassModel;
use crate::names::normalize_name;
use crate::rules::RelationKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatchCounts {
    pub n_key: usize,
    pub n_response: usize,
    pub n_correct: usize,
}

impl MatchCounts {
    pub fn new(n_key: usize, n_response: usize, n_correct: usize) -> Self {
        debug_assert!(n_correct <= n_key && n_correct <= n_response);
        Self {
            n_key,
            n_response,
            n_correct,
        }
    }

    pub fn n_extra(&self) -> usize {
        self.n_response - self.n_correct
    }

    pub fn n_missing(&self) -> usize {
        self.n_key - self.n_correct
    }

    /// 1 when the key is empty.
    pub fn recall(&self) -> f64 {
        ratio_or(self.n_correct, self.n_key, 1.0)
    }

    /// 1 when the response is empty.
    pub fn precision(&self) -> f64 {
        ratio_or(self.n_correct, self.n_response, 1.0)
    }

    /// 0 when nothing is extra; undefined when the key is empty but the
    /// response is not. May exceed 1.
    pub fn over_generation(&self) -> Option<f64> {
        match (self.n_extra(), self.n_key) {
            (0, _) => Some(0.0),
            (_, 0) => None,
            (extra, key) => Some(extra as f64 / key as f64),
        }
    }
}

fn ratio_or(num: usize, den: usize, empty: f64) -> f64 {
    if den == 0 {
        empty
    } else {
        num as f64 / den as f64
    }
}

impl Add for MatchCounts {
    type Output = MatchCounts;

    fn add(self, rhs: MatchCounts) -> MatchCounts {
        MatchCounts {
            n_key: self.n_key + rhs.n_key,
            n_response: self.n_response + rhs.n_response,
            n_correct: self.n_correct + rhs.n_correct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalReport {
    pub classes: MatchCounts,
    pub attributes: MatchCounts,
    pub relationships: MatchCounts,
}

impl EvalReport {
    pub fn combined(&self) -> MatchCounts {
        self.classes + self.attributes + self.relationships
    }

    pub fn categories(&self) -> [(&'static str, MatchCounts); 4] {
        [
            ("classes", self.classes),
            ("attributes", self.attributes),
            ("relationships", self.relationships),
            ("combined", self.combined()),
        ]
    }

    /// `key=value` lines, one metric per line, fixed order.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        for (category, c) in self.categories() {
            let _ = writeln!(out, "{category}.key={}", c.n_key);
            let _ = writeln!(out, "{category}.response={}", c.n_response);
            let _ = writeln!(out, "{category}.correct={}", c.n_correct);
            let _ = writeln!(out, "{category}.extra={}", c.n_extra());
            let _ = writeln!(out, "{category}.missing={}", c.n_missing());
            let _ = writeln!(out, "{category}.recall={:.6}", c.recall());
            let _ = writeln!(out, "{category}.precision={:.6}", c.precision());
            let _ = writeln!(
                out,
                "{category}.over_generation={}",
                fmt_optional(c.over_generation())
            );
        }
        out
    }
}

fn fmt_optional(value: Option<f64>) -> String {
    value.map_or_else(|| "undefined".to_string(), |v| format!("{v:.6}"))
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<14}{:>6}{:>9}{:>8}{:>9}{:>11}{:>10}",
            "category", "key", "response", "correct", "recall", "precision", "overgen"
        )?;
        for (category, c) in self.categories() {
            writeln!(
                f,
                "{:<14}{:>6}{:>9}{:>8}{:>9.3}{:>11.3}{:>10}",
                category,
                c.n_key,
                c.n_response,
                c.n_correct,
                c.recall(),
                c.precision(),
                c.over_generation()
                    .map_or_else(|| "-".to_string(), |v| format!("{v:.3}"))
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CompareOptions {
    /// Relationship labels must also match.
    pub strict_labels: bool,
}

fn counts<T: Ord>(response: BTreeSet<T>, key: BTreeSet<T>) -> MatchCounts {
    let correct = response.intersection(&key).count();
    MatchCounts::new(key.len(), response.len(), correct)
}

fn class_set(m: &ClassModel) -> BTreeSet<String> {
    m.classes.iter().map(|c| normalize_name(&c.name)).collect()
}

fn attribute_set(m: &ClassModel) -> BTreeSet<(String, String)> {
    m.classes
        .iter()
        .flat_map(|c| {
            let owner = normalize_name(&c.name);
            c.attributes
                .iter()
                .map(move |a| (owner.clone(), normalize_name(&a.name)))
        })
        .collect()
}

type RelationKey = (RelationKind, String, String, Option<String>);

fn relationship_set(m: &ClassModel, strict_labels: bool) -> BTreeSet<RelationKey> {
    m.relationships
        .iter()
        .map(|r| {
            let a = normalize_name(&r.source);
            let b = normalize_name(&r.target);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let label = strict_labels.then(|| r.label.to_lowercase());
            (r.kind, lo, hi, label)
        })
        .collect()
}

pub fn compare(response: &ClassModel, key: &ClassModel, options: CompareOptions) -> EvalReport {
    EvalReport {
        classes: counts(class_set(response), class_set(key)),
        attributes: counts(attribute_set(response), attribute_set(key)),
        relationships: counts(
            relationship_set(response, options.strict_labels),
            relationship_set(key, options.strict_labels),
        ),
    }
}

/// Micro-average: counts are summed, metrics recomputed from the sums.
pub fn aggregate(reports: &[EvalReport]) -> EvalReport {
    reports
        .iter()
        .fold(EvalReport::default(), |acc, r| EvalReport {
            classes: acc.classes + r.classes,
            attributes: acc.attributes + r.attributes,
            relationships: acc.relationships + r.relationships,
        })
}
