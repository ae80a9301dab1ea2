//! Extraction of UML class models from English requirements text.
//!
//! The pipeline is plain functions over plain data:
//! [`ingest`] splits and tokenizes, [`tagger`] assigns part-of-speech tags,
//! [`chunker`] groups tags into phrases and clauses, [`rules`] turns clauses
//! into candidate classes, attributes and relationships, [`ontology`]
//! refines them, and [`model`] finalizes and serializes the result.
//! [`eval`] scores a model against a gold model.
//!
//! ```
//! use dcb_core::Extractor;
//!
//! let model = Extractor::new().extract_text("a doctor gives medicines to the patient");
//! assert_eq!(model.classes.len(), 3);
//! ```

pub mod chunker;
pub mod eval;
pub mod ingest;
pub mod model;
pub mod names;
pub mod ontology;
pub mod pipeline;
pub mod rules;
pub mod tagger;

pub use chunker::{chunk, extract_clauses, Clause, Phrase, PhraseKind};
pub use eval::{aggregate, compare, CompareOptions, EvalReport, MatchCounts};
pub use ingest::{
    load_document, split_sentences, tokenize, Document, IngestError, Sentence, SentenceSplitter,
    Token, TokenKind,
};
pub use model::{
    finalize, from_xml, to_plantuml, to_xml, ClassModel, ModelError, SourceRef, UmlAttribute,
    UmlClass, UmlRelationship,
};
pub use ontology::{
    load_ontology, match_concept, refine, Concept, Ontology, OntologyError, RefinementMode,
};
pub use pipeline::{Extraction, Extractor, SentenceAnalysis, VERSION};
pub use rules::{
    apply_rules, CandidateAssociation, CandidateAttribute, CandidateClass, CandidateModel,
    NounRole, Provenance, RelationKind, RuleConfig, RuleId, Status,
};
pub use tagger::{lemmatize, load_lexicon, tag, PosTag, TagLexicon, TaggedToken};
