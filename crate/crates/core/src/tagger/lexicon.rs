use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::LazyLock;

use thiserror::Error;

use super::lemma::lemmatize_with;
use super::PosTag;

const BUNDLED_OPEN_CLASS: &str = include_str!("../../data/lexicon.txt");

/// Function words. These cannot be redefined by a user lexicon.
const CLOSED_CLASS: &[(&str, PosTag)] = &[
    ("a", PosTag::DT),
    ("an", PosTag::DT),
    ("the", PosTag::DT),
    ("this", PosTag::DT),
    ("that", PosTag::DT),
    ("these", PosTag::DT),
    ("those", PosTag::DT),
    ("each", PosTag::DT),
    ("every", PosTag::DT),
    ("all", PosTag::DT),
    ("some", PosTag::DT),
    ("any", PosTag::DT),
    ("another", PosTag::DT),
    ("both", PosTag::DT),
    ("either", PosTag::DT),
    ("neither", PosTag::DT),
    ("my", PosTag::PRPS),
    ("your", PosTag::PRPS),
    ("his", PosTag::PRPS),
    ("her", PosTag::PRPS),
    ("its", PosTag::PRPS),
    ("our", PosTag::PRPS),
    ("their", PosTag::PRPS),
    ("whose", PosTag::PRPS),
    ("i", PosTag::PRP),
    ("you", PosTag::PRP),
    ("he", PosTag::PRP),
    ("she", PosTag::PRP),
    ("it", PosTag::PRP),
    ("we", PosTag::PRP),
    ("they", PosTag::PRP),
    ("me", PosTag::PRP),
    ("him", PosTag::PRP),
    ("us", PosTag::PRP),
    ("them", PosTag::PRP),
    ("itself", PosTag::PRP),
    ("themselves", PosTag::PRP),
    ("of", PosTag::IN),
    ("in", PosTag::IN),
    ("on", PosTag::IN),
    ("at", PosTag::IN),
    ("by", PosTag::IN),
    ("for", PosTag::IN),
    ("with", PosTag::IN),
    ("from", PosTag::IN),
    ("into", PosTag::IN),
    ("onto", PosTag::IN),
    ("about", PosTag::IN),
    ("after", PosTag::IN),
    ("before", PosTag::IN),
    ("between", PosTag::IN),
    ("during", PosTag::IN),
    ("through", PosTag::IN),
    ("under", PosTag::IN),
    ("over", PosTag::IN),
    ("within", PosTag::IN),
    ("without", PosTag::IN),
    ("via", PosTag::IN),
    ("per", PosTag::IN),
    ("than", PosTag::IN),
    ("if", PosTag::IN),
    ("because", PosTag::IN),
    ("while", PosTag::IN),
    ("whether", PosTag::IN),
    ("since", PosTag::IN),
    ("until", PosTag::IN),
    ("against", PosTag::IN),
    ("among", PosTag::IN),
    ("upon", PosTag::IN),
    ("across", PosTag::IN),
    ("behind", PosTag::IN),
    ("below", PosTag::IN),
    ("above", PosTag::IN),
    ("near", PosTag::IN),
    ("who", PosTag::IN),
    ("whom", PosTag::IN),
    ("which", PosTag::IN),
    ("what", PosTag::IN),
    ("to", PosTag::TO),
    ("and", PosTag::CC),
    ("or", PosTag::CC),
    ("but", PosTag::CC),
    ("nor", PosTag::CC),
    ("can", PosTag::MD),
    ("could", PosTag::MD),
    ("may", PosTag::MD),
    ("might", PosTag::MD),
    ("must", PosTag::MD),
    ("shall", PosTag::MD),
    ("should", PosTag::MD),
    ("will", PosTag::MD),
    ("would", PosTag::MD),
    ("cannot", PosTag::MD),
    ("be", PosTag::VB),
    ("is", PosTag::VBZ),
    ("are", PosTag::VBP),
    ("am", PosTag::VBP),
    ("was", PosTag::VBD),
    ("were", PosTag::VBD),
    ("been", PosTag::VBN),
    ("being", PosTag::VBG),
    ("have", PosTag::VBP),
    ("has", PosTag::VBZ),
    ("had", PosTag::VBD),
    ("having", PosTag::VBG),
    ("do", PosTag::VBP),
    ("does", PosTag::VBZ),
    ("did", PosTag::VBD),
    ("done", PosTag::VBN),
    ("doing", PosTag::VBG),
    ("not", PosTag::RB),
    ("n't", PosTag::RB),
    ("where", PosTag::RB),
    ("when", PosTag::RB),
    ("how", PosTag::RB),
    ("why", PosTag::RB),
    ("there", PosTag::RB),
];

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: malformed lexicon entry `{content}` (expected `word TAG`)")]
    MalformedLexiconLine { line: usize, content: String },
    #[error("line {line}: `{word}` is a closed-class word and cannot be redefined")]
    ClosedClassOverride { line: usize, word: String },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Word form → tag map. Closed-class entries are fixed; open-class entries
/// come from the bundled list and an optional user file.
#[derive(Debug, Clone)]
pub struct TagLexicon {
    closed: HashMap<&'static str, PosTag>,
    open: HashMap<String, PosTag>,
}

static BUNDLED: LazyLock<TagLexicon> = LazyLock::new(|| {
    let mut lexicon = TagLexicon {
        closed: CLOSED_CLASS.iter().copied().collect(),
        open: HashMap::new(),
    };
    lexicon
        .merge_entries(BUNDLED_OPEN_CLASS)
        .expect("bundled lexicon is well formed");
    lexicon
});

impl TagLexicon {
    /// Closed-class words plus the bundled open-class vocabulary.
    pub fn bundled() -> Self {
        BUNDLED.clone()
    }

    pub(crate) fn bundled_ref() -> &'static TagLexicon {
        &BUNDLED
    }

    /// Adds `word TAG` lines. Later entries for the same open-class word
    /// replace earlier ones.
    pub fn merge_entries(&mut self, text: &str) -> Result<(), LexiconError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let malformed = || LexiconError::MalformedLexiconLine {
                line,
                content: raw.trim().to_string(),
            };
            let mut fields = content.split_whitespace();
            let (Some(word), Some(tag), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(malformed());
            };
            let tag: PosTag = tag.parse().map_err(|_| malformed())?;
            let word = word.to_lowercase();
            if self.closed.contains_key(word.as_str()) {
                return Err(LexiconError::ClosedClassOverride { line, word });
            }
            self.open.insert(word, tag);
        }
        Ok(())
    }

    pub fn closed_tag(&self, word: &str) -> Option<PosTag> {
        self.closed.get(word).copied()
    }

    pub fn open_tag(&self, word: &str) -> Option<PosTag> {
        self.open.get(word).copied()
    }

    /// Tag recorded for a lowercase word form, closed class first.
    pub fn get(&self, word: &str) -> Option<PosTag> {
        self.closed_tag(word).or_else(|| self.open_tag(word))
    }

    pub fn is_closed_class(&self, word: &str) -> bool {
        self.closed.contains_key(word)
    }

    /// True when `lemma` is listed as a verb.
    pub fn is_verb_lemma(&self, lemma: &str) -> bool {
        matches!(
            self.get(lemma),
            Some(PosTag::VB | PosTag::VBP | PosTag::VBZ)
        )
    }

    pub fn lemmatize(&self, surface: &str, tag: PosTag) -> String {
        lemmatize_with(surface, tag, &|w| self.is_verb_lemma(w))
    }

    pub fn len(&self) -> usize {
        self.closed.len() + self.open.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Open-class entries, sorted by word.
    pub fn open_entries(&self) -> Vec<(&str, PosTag)> {
        let mut entries: Vec<_> = self.open.iter().map(|(w, t)| (w.as_str(), *t)).collect();
        entries.sort();
        entries
    }
}

/// Bundled lexicon, optionally extended with a user file.
pub fn load_lexicon(path: Option<&Path>) -> Result<TagLexicon, LexiconError> {
    let mut lexicon = TagLexicon::bundled();
    if let Some(path) = path {
        let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        lexicon.merge_entries(&text)?;
    }
    Ok(lexicon)
}
