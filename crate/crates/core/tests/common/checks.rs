//! Checks shared by the property tests and the acceptance target.

use std::collections::HashSet;

use dcb_core::ingest::tokenize_str;
use dcb_core::names::normalize_name;
use dcb_core::{
    match_concept, refine, tag, CandidateModel, MatchCounts, Ontology, PosTag, RefinementMode,
    Status, TagLexicon,
};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

/// recall, precision and over-generation against their defining ratios,
/// including the zero-denominator conventions.
pub fn metric_identities(c: MatchCounts) -> Result<(), TestCaseError> {
    prop_assert_eq!(c.n_extra() + c.n_correct, c.n_response);
    prop_assert_eq!(c.n_missing() + c.n_correct, c.n_key);
    if c.n_key == 0 {
        prop_assert_eq!(c.recall(), 1.0);
    } else {
        prop_assert!((c.recall() - c.n_correct as f64 / c.n_key as f64).abs() < TOL);
    }
    if c.n_response == 0 {
        prop_assert_eq!(c.precision(), 1.0);
    } else {
        prop_assert!((c.precision() - c.n_correct as f64 / c.n_response as f64).abs() < TOL);
    }
    match (c.n_extra(), c.n_key, c.over_generation()) {
        (0, _, og) => prop_assert_eq!(og, Some(0.0)),
        (_, 0, og) => prop_assert_eq!(og, None),
        (extra, key, Some(og)) => prop_assert!((og - extra as f64 / key as f64).abs() < TOL),
        (_, _, None) => prop_assert!(false, "undefined over-generation with a key"),
    }
    Ok(())
}

/// Strict output only keeps ontology classes, no association loses an
/// endpoint, nothing is invented, and a second pass changes nothing.
pub fn refine_soundness(
    m: &CandidateModel,
    ont: &Ontology,
    mode: RefinementMode,
) -> Result<(), TestCaseError> {
    let out = refine(m, ont, mode);

    let surviving: HashSet<&str> = out
        .classes
        .iter()
        .filter(|c| !c.status.is_rejected())
        .map(|c| c.name.as_str())
        .collect();
    for a in &out.associations {
        prop_assert!(surviving.contains(a.source.as_str()), "dangling {}", a.source);
        prop_assert!(surviving.contains(a.target.as_str()), "dangling {}", a.target);
    }

    if mode == RefinementMode::Strict {
        for c in out.classes.iter().filter(|c| !c.status.is_rejected()) {
            prop_assert_eq!(&c.status, &Status::Confirmed);
            prop_assert!(match_concept(&c.name, ont).is_some(), "{} unmatched", c.name);
        }
    }

    let canonical = |name: &str| {
        match_concept(name, ont).map_or_else(|| normalize_name(name), |c| c.name.clone())
    };
    let inputs: HashSet<String> = m.classes.iter().map(|c| canonical(&c.name)).collect();
    prop_assert!(out.classes.len() <= m.classes.len());
    prop_assert!(out.classes.iter().all(|c| inputs.contains(&c.name)));
    prop_assert!(out.attributes.len() <= m.attributes.len());
    prop_assert!(out.associations.len() <= m.associations.len());

    prop_assert_eq!(&refine(&out, ont, mode), &out);
    Ok(())
}

pub struct TaggerScore {
    pub words: usize,
    pub correct: usize,
    pub misses: Vec<String>,
}

impl TaggerScore {
    pub fn accuracy(&self) -> f64 {
        self.correct as f64 / self.words as f64
    }
}

/// Scores the tagger on the hand-tagged sample, word tokens only.
pub fn tagger_score() -> TaggerScore {
    let text = std::fs::read_to_string(super::corpus_dir().join("tagged_sample.txt")).unwrap();
    let lexicon = TagLexicon::bundled();
    let mut score = TaggerScore {
        words: 0,
        correct: 0,
        misses: Vec::new(),
    };
    for line in text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let gold: Vec<(&str, PosTag)> = line
            .split_whitespace()
            .map(|pair| {
                let (word, t) = pair.rsplit_once('/').expect("word/TAG");
                (word, t.parse().expect("known tag"))
            })
            .collect();
        let sentence: Vec<&str> = gold.iter().map(|(w, _)| *w).collect();
        let mut text = String::new();
        for (i, (word, t)) in gold.iter().enumerate() {
            if i > 0 && *t != PosTag::PUNCT && *t != PosTag::POS {
                text.push(' ');
            }
            text.push_str(word);
        }
        let tagged = tag(&tokenize_str(&text), &lexicon);
        let surfaces: Vec<&str> = tagged.iter().map(|t| t.surface()).collect();
        assert_eq!(surfaces, sentence, "tokenization differs");
        for ((word, expected), got) in gold.iter().zip(&tagged) {
            if *expected == PosTag::PUNCT {
                continue;
            }
            score.words += 1;
            if got.tag == *expected {
                score.correct += 1;
            } else {
                score.misses.push(format!("{word}: {} (expected {expected})", got.tag));
            }
        }
    }
    score
}
