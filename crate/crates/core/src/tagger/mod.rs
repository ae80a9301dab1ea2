//! Part-of-speech tagging with a word-form lexicon and suffix fallbacks.

mod lemma;
mod lexicon;

use std::fmt;
use std::str::FromStr;

pub use lemma::{lemmatize, singularize};
pub use lexicon::{load_lexicon, LexiconError, TagLexicon};

use crate::ingest::{Token, TokenKind};

/// Penn-Treebank-style tag subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosTag {
    DT,
    NN,
    NNS,
    NNP,
    VB,
    VBZ,
    VBP,
    VBD,
    VBN,
    VBG,
    MD,
    IN,
    TO,
    CC,
    JJ,
    RB,
    PRP,
    PRPS,
    POS,
    CD,
    PUNCT,
}

impl PosTag {
    pub const ALL: [PosTag; 21] = [
        PosTag::DT,
        PosTag::NN,
        PosTag::NNS,
        PosTag::NNP,
        PosTag::VB,
        PosTag::VBZ,
        PosTag::VBP,
        PosTag::VBD,
        PosTag::VBN,
        PosTag::VBG,
        PosTag::MD,
        PosTag::IN,
        PosTag::TO,
        PosTag::CC,
        PosTag::JJ,
        PosTag::RB,
        PosTag::PRP,
        PosTag::PRPS,
        PosTag::POS,
        PosTag::CD,
        PosTag::PUNCT,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PosTag::DT => "DT",
            PosTag::NN => "NN",
            PosTag::NNS => "NNS",
            PosTag::NNP => "NNP",
            PosTag::VB => "VB",
            PosTag::VBZ => "VBZ",
            PosTag::VBP => "VBP",
            PosTag::VBD => "VBD",
            PosTag::VBN => "VBN",
            PosTag::VBG => "VBG",
            PosTag::MD => "MD",
            PosTag::IN => "IN",
            PosTag::TO => "TO",
            PosTag::CC => "CC",
            PosTag::JJ => "JJ",
            PosTag::RB => "RB",
            PosTag::PRP => "PRP",
            PosTag::PRPS => "PRP$",
            PosTag::POS => "POS",
            PosTag::CD => "CD",
            PosTag::PUNCT => "PUNCT",
        }
    }

    /// NN, NNS or NNP.
    pub fn is_noun(self) -> bool {
        matches!(self, PosTag::NN | PosTag::NNS | PosTag::NNP)
    }

    /// Verb tags that can head a verb group (VBG excluded).
    pub fn is_finite_or_base_verb(self) -> bool {
        matches!(
            self,
            PosTag::VB | PosTag::VBZ | PosTag::VBP | PosTag::VBD | PosTag::VBN
        )
    }

    pub fn is_verb(self) -> bool {
        self.is_finite_or_base_verb() || self == PosTag::VBG
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownTag(pub String);

impl fmt::Display for UnknownTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown part-of-speech tag `{}`", self.0)
    }
}

impl std::error::Error for UnknownTag {}

impl FromStr for PosTag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PosTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: PosTag,
    pub lemma: String,
}

impl TaggedToken {
    pub fn surface(&self) -> &str {
        &self.token.surface
    }

    pub fn lower(&self) -> String {
        self.token.surface.to_lowercase()
    }
}

fn is_possessive_marker(surface: &str) -> bool {
    matches!(surface, "'s" | "'S" | "'" | "\u{2019}s" | "\u{2019}S" | "\u{2019}")
}

fn is_capitalized(surface: &str) -> bool {
    surface.chars().next().is_some_and(char::is_uppercase)
}

/// Where a token's base tag came from; contextual repairs only touch
/// open-class guesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Origin {
    Closed,
    Open,
    /// Open-class verb entry or an `-s` form whose stem is a known verb.
    OpenVerb,
    Fallback,
}

/// Tags one sentence worth of tokens.
///
/// A lexicon hit wins; unknown words fall back on digit, possessive and
/// suffix checks. Lexicon verbs become VBZ when they end in `-s` and VBP
/// otherwise. A small contextual pass then repairs frequent confusions:
///
/// - a verb form right after a determiner is a noun (an adjective for
///   `-ed` forms);
/// - a finite verb form right after another verb is a noun (`stores records`);
/// - a verb after a modal or `to` is a base form;
/// - an `-ed` form after `be`/`have` is a past participle;
/// - an unknown capitalized first word before `'s` is a proper noun.
pub fn tag(tokens: &[Token], lexicon: &TagLexicon) -> Vec<TaggedToken> {
    let mut tags: Vec<(PosTag, Origin)> = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| base_tag(t, i == 0, lexicon))
        .collect();

    for i in 0..tags.len() {
        let (current, origin) = tags[i];
        if origin == Origin::Closed {
            continue;
        }
        let prev = i.checked_sub(1).map(|p| tags[p].0);
        let word = tokens[i].surface.to_lowercase();

        // `John's ...` at the start of a sentence
        if i == 0
            && origin == Origin::Fallback
            && current == PosTag::NN
            && is_capitalized(&tokens[i].surface)
            && tokens.get(1).is_some_and(|t| is_possessive_marker(&t.surface))
        {
            tags[i].0 = PosTag::NNP;
            continue;
        }

        if matches!(
            prev,
            Some(PosTag::DT | PosTag::PRPS | PosTag::JJ | PosTag::POS | PosTag::CD)
        ) {
            if origin == Origin::OpenVerb {
                tags[i].0 = if word.ends_with('s') && !word.ends_with("ss") {
                    PosTag::NNS
                } else {
                    PosTag::NN
                };
                continue;
            }
            if matches!(current, PosTag::VBD | PosTag::VBN) {
                tags[i].0 = PosTag::JJ;
                continue;
            }
        }

        // `stores records`: a second finite verb form right after a verb is a noun
        if origin == Origin::OpenVerb
            && matches!(current, PosTag::VBZ | PosTag::VBP)
            && prev.is_some_and(|p| p.is_verb() && !matches!(p, PosTag::MD | PosTag::TO))
            && !is_do(&tokens[i - 1].surface.to_lowercase())
        {
            tags[i].0 = if word.ends_with('s') && !word.ends_with("ss") {
                PosTag::NNS
            } else {
                PosTag::NN
            };
            continue;
        }

        let governor = previous_skipping_adverbs(&tags, i);
        if let Some(g) = governor {
            let gword = tokens[g].surface.to_lowercase();
            if matches!(tags[g].0, PosTag::MD | PosTag::TO) && origin == Origin::OpenVerb {
                tags[i].0 = PosTag::VB;
            } else if current == PosTag::VBD && (is_be(&gword) || is_have(&gword)) {
                tags[i].0 = PosTag::VBN;
            }
        }
    }

    tokens
        .iter()
        .zip(tags)
        .map(|(t, (tag, _))| TaggedToken {
            lemma: match t.kind {
                TokenKind::Word => lexicon.lemmatize(&t.surface, tag),
                _ => t.surface.to_lowercase(),
            },
            token: t.clone(),
            tag,
        })
        .collect()
}

fn previous_skipping_adverbs(tags: &[(PosTag, Origin)], i: usize) -> Option<usize> {
    let mut j = i.checked_sub(1)?;
    while tags[j].0 == PosTag::RB {
        j = j.checked_sub(1)?;
    }
    Some(j)
}

pub(crate) fn is_be(word: &str) -> bool {
    matches!(
        word,
        "be" | "is" | "are" | "am" | "was" | "were" | "been" | "being"
    )
}

fn is_do(word: &str) -> bool {
    matches!(word, "do" | "does" | "did")
}

pub(crate) fn is_have(word: &str) -> bool {
    matches!(word, "have" | "has" | "had" | "having")
}

fn base_tag(token: &Token, sentence_initial: bool, lexicon: &TagLexicon) -> (PosTag, Origin) {
    match token.kind {
        TokenKind::Number => return (PosTag::CD, Origin::Fallback),
        TokenKind::Punctuation => return (PosTag::PUNCT, Origin::Closed),
        TokenKind::Word => {}
    }
    let surface = token.surface.as_str();
    let word = surface.to_lowercase();
    if let Some(tag) = lexicon.closed_tag(&word) {
        return (tag, Origin::Closed);
    }
    if let Some(tag) = lexicon.open_tag(&word) {
        if matches!(tag, PosTag::VB | PosTag::VBZ | PosTag::VBP) {
            let tag = if word.ends_with('s') {
                PosTag::VBZ
            } else {
                PosTag::VBP
            };
            return (tag, Origin::OpenVerb);
        }
        return (tag, Origin::Open);
    }

    if let Some(tag) = lemma::irregular_past_tag(&word) {
        return (tag, Origin::Open);
    }

    let fallback = if word.chars().all(|c| c.is_ascii_digit() || c == '.') {
        PosTag::CD
    } else if is_possessive_marker(surface) {
        PosTag::POS
    } else if word.ends_with("ing") && word.len() > 4 {
        PosTag::VBG
    } else if word.ends_with("ed") && word.len() > 3 {
        PosTag::VBD
    } else if word.ends_with("ly") && word.len() > 3 {
        PosTag::RB
    } else if !sentence_initial && is_capitalized(surface) {
        PosTag::NNP
    } else if word.ends_with('s') && !word.ends_with("ss") {
        if lexicon.is_verb_lemma(&lexicon.lemmatize(&word, PosTag::VBZ)) {
            return (PosTag::VBZ, Origin::OpenVerb);
        }
        PosTag::NNS
    } else {
        PosTag::NN
    };
    (fallback, Origin::Fallback)
}
