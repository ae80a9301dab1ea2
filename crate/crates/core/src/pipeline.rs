//! End-to-end extraction: text → sentences → tags → chunks → clauses →
//! rules → refinement → class model.

use crate::chunker::{chunk, extract_clauses, Clause, Phrase};
use crate::ingest::{tokenize, Document, Sentence, SentenceSplitter};
use crate::model::{finalize, ClassModel};
use crate::ontology::{refine, Ontology, RefinementMode};
use crate::rules::{apply_rules_traced, CandidateModel, RuleConfig, RuleFiring};
use crate::tagger::{tag, TagLexicon, TaggedToken};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything the analysis block produces for one sentence.
#[derive(Debug, Clone)]
pub struct SentenceAnalysis {
    pub sentence: Sentence,
    pub tagged: Vec<TaggedToken>,
    pub phrases: Vec<Phrase>,
    pub clauses: Vec<Clause>,
}

#[derive(Debug, Clone)]
pub struct Extraction {
    pub candidates: CandidateModel,
    /// Candidates after ontology refinement (same as `candidates` without
    /// an ontology).
    pub refined: CandidateModel,
    pub model: ClassModel,
    pub firings: Vec<RuleFiring>,
}

#[derive(Debug, Clone)]
pub struct Extractor {
    pub lexicon: TagLexicon,
    pub rules: RuleConfig,
    pub splitter: SentenceSplitter,
    pub ontology: Option<Ontology>,
    pub mode: RefinementMode,
}

impl Default for Extractor {
    fn default() -> Self {
        Self::new()
    }
}

impl Extractor {
    pub fn new() -> Self {
        Self {
            lexicon: TagLexicon::bundled(),
            rules: RuleConfig::default(),
            splitter: SentenceSplitter::default(),
            ontology: None,
            mode: RefinementMode::default(),
        }
    }

    pub fn with_ontology(mut self, ontology: Ontology, mode: RefinementMode) -> Self {
        self.ontology = Some(ontology);
        self.mode = mode;
        self
    }

    pub fn analyze(&self, doc: &Document) -> Vec<SentenceAnalysis> {
        self.splitter
            .split(&doc.text)
            .into_iter()
            .map(|sentence| {
                let tagged = tag(&tokenize(&sentence), &self.lexicon);
                let phrases = chunk(&tagged);
                let clauses = extract_clauses(&phrases, sentence.index);
                SentenceAnalysis {
                    sentence,
                    tagged,
                    phrases,
                    clauses,
                }
            })
            .collect()
    }

    pub fn extract(&self, doc: &Document) -> Extraction {
        let clauses: Vec<Clause> = self
            .analyze(doc)
            .into_iter()
            .flat_map(|a| a.clauses)
            .collect();
        let mut firings = Vec::new();
        let candidates = apply_rules_traced(&clauses, &self.rules, &mut firings);
        let refined = match &self.ontology {
            Some(ont) => refine(&candidates, ont, self.mode),
            None => candidates.clone(),
        };
        let mut model = finalize(&refined);
        model.source = Some(doc.id.clone());
        model.mode = self.ontology.as_ref().map(|_| self.mode.to_string());
        model.tool = Some(format!("dcb {VERSION}"));
        Extraction {
            candidates,
            refined,
            model,
            firings,
        }
    }

    pub fn extract_text(&self, text: &str) -> ClassModel {
        self.extract(&Document::from_text("text", text)).model
    }
}
