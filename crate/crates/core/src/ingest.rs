//! Document loading, sentence splitting and tokenization.
//!
//! All spans are byte offsets into UTF-8 text, so `&text[start..end]` always
//! lands on character boundaries.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Abbreviations whose trailing period never ends a sentence.
pub const DEFAULT_ABBREVIATIONS: &[&str] = &["e.g", "i.e", "etc", "mr", "mrs", "dr", "no"];

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("unsupported format for {}: only plain text (.txt) documents are supported", .0.display())]
    UnsupportedFormat(PathBuf),
    #[error("{}: invalid UTF-8 at byte {offset}", .path.display())]
    EncodingError { path: PathBuf, offset: usize },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub text: String,
    pub source_path: String,
}

impl Document {
    /// Builds a document from in-memory text, normalizing line endings.
    pub fn from_text(id: impl Into<String>, text: &str) -> Self {
        let id = id.into();
        let id = if id.is_empty() { "document".to_string() } else { id };
        Self {
            id,
            text: normalize_newlines(text.strip_prefix('\u{feff}').unwrap_or(text)),
            source_path: String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    pub index: usize,
    pub text: String,
    /// Byte range into `Document::text`.
    pub char_span: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub index: usize,
    pub kind: TokenKind,
    /// Byte range into `Sentence::text`.
    pub char_span: (usize, usize),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

/// Reads a `.txt` requirements document.
///
/// A leading byte-order mark is dropped and `\r\n` / `\r` become `\n`.
/// Invalid UTF-8 is an error, never replaced.
pub fn load_document(path: impl AsRef<Path>) -> Result<Document, IngestError> {
    let path = path.as_ref();
    let is_txt = path
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| e.eq_ignore_ascii_case("txt"));
    if !is_txt {
        return Err(IngestError::UnsupportedFormat(path.to_path_buf()));
    }
    if !path.is_file() {
        return Err(IngestError::FileNotFound(path.to_path_buf()));
    }
    let bytes = std::fs::read(path).map_err(|source| match source.kind() {
        std::io::ErrorKind::NotFound => IngestError::FileNotFound(path.to_path_buf()),
        _ => IngestError::Io {
            path: path.to_path_buf(),
            source,
        },
    })?;
    let bytes = bytes.strip_prefix(b"\xef\xbb\xbf").unwrap_or(&bytes);
    let text = std::str::from_utf8(bytes).map_err(|e| IngestError::EncodingError {
        path: path.to_path_buf(),
        offset: e.valid_up_to(),
    })?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .filter(|s| !s.is_empty())
        .unwrap_or_else(|| "document".to_string());
    Ok(Document {
        id,
        text: normalize_newlines(text),
        source_path: path.display().to_string(),
    })
}

fn normalize_newlines(text: &str) -> String {
    text.replace("\r\n", "\n").replace('\r', "\n")
}

/// Sentence splitter driven by terminal punctuation and an abbreviation list.
#[derive(Debug, Clone)]
pub struct SentenceSplitter {
    abbreviations: BTreeSet<String>,
}

impl Default for SentenceSplitter {
    fn default() -> Self {
        Self {
            abbreviations: DEFAULT_ABBREVIATIONS.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl SentenceSplitter {
    /// Adds abbreviations (without the trailing period, case-insensitive).
    pub fn with_abbreviations<I, S>(mut self, extra: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        for a in extra {
            let a = a.as_ref().trim().trim_end_matches('.').to_lowercase();
            if !a.is_empty() {
                self.abbreviations.insert(a);
            }
        }
        self
    }

    pub fn split(&self, text: &str) -> Vec<Sentence> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut sentences = Vec::new();
        let mut start: Option<usize> = None;
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            if start.is_none() {
                if c.is_whitespace() {
                    i += 1;
                    continue;
                }
                start = Some(pos);
            }
            if matches!(c, '.' | '!' | '?') {
                // absorb runs like "?!" or '."' before checking the boundary
                let mut j = i + 1;
                while j < chars.len() && is_trailing_closer(chars[j].1) {
                    j += 1;
                }
                let at_boundary = j == chars.len() || chars[j].1.is_whitespace();
                if at_boundary && !(c == '.' && self.is_abbreviation(text, pos)) {
                    let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
                    let s = start.take().expect("sentence start set");
                    push_sentence(&mut sentences, text, s, end);
                    i = j;
                    continue;
                }
            }
            i += 1;
        }
        if let Some(s) = start {
            let end = s + text[s..].trim_end().len();
            push_sentence(&mut sentences, text, s, end);
        }
        sentences
    }

    fn is_abbreviation(&self, text: &str, period_pos: usize) -> bool {
        let before = &text[..period_pos];
        let word_start = before
            .char_indices()
            .rev()
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '.'))
            .map_or(0, |(p, c)| p + c.len_utf8());
        let word = &before[word_start..];
        !word.is_empty() && self.abbreviations.contains(&word.to_lowercase())
    }
}

fn is_trailing_closer(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | '"' | '\'' | ')' | ']' | '\u{201d}' | '\u{2019}')
}

fn push_sentence(out: &mut Vec<Sentence>, text: &str, start: usize, end: usize) {
    if start < end && !text[start..end].trim().is_empty() {
        out.push(Sentence {
            index: out.len(),
            text: text[start..end].to_string(),
            char_span: (start, end),
        });
    }
}

/// Splits a document with the bundled abbreviation list.
pub fn split_sentences(doc: &Document) -> Vec<Sentence> {
    SentenceSplitter::default().split(&doc.text)
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Tokenizes a sentence into words, numbers and single-character punctuation.
///
/// Possessive markers are split off as their own word tokens:
/// `customer's` becomes `customer` + `'s`, `students'` becomes `students` + `'`.
pub fn tokenize(sentence: &Sentence) -> Vec<Token> {
    tokenize_str(&sentence.text)
}

pub fn tokenize_str(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let byte_at = |i: usize| chars.get(i).map_or(text.len(), |&(p, _)| p);
    let mut tokens = Vec::new();
    let push = |tokens: &mut Vec<Token>, start: usize, end: usize, kind: TokenKind| {
        tokens.push(Token {
            surface: text[start..end].to_string(),
            index: tokens.len(),
            kind,
            char_span: (start, end),
        });
    };

    let mut i = 0;
    while i < chars.len() {
        let c = chars[i].1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let next_is_word = j < chars.len() && is_word_char(chars[j].1);
            if !next_is_word {
                if j + 1 < chars.len() && chars[j].1 == '.' && chars[j + 1].1.is_ascii_digit() {
                    let mut k = j + 1;
                    while k < chars.len() && chars[k].1.is_ascii_digit() {
                        k += 1;
                    }
                    if !(k < chars.len() && is_word_char(chars[k].1)) {
                        j = k;
                    }
                }
                if !(j < chars.len() && is_word_char(chars[j].1)) {
                    push(&mut tokens, byte_at(i), byte_at(j), TokenKind::Number);
                    i = j;
                    continue;
                }
            }
        }
        if is_word_char(c) {
            let mut j = i;
            loop {
                while j < chars.len() && is_word_char(chars[j].1) {
                    j += 1;
                }
                // apostrophe between word characters stays inside the word
                if j + 1 < chars.len() && is_apostrophe(chars[j].1) && is_word_char(chars[j + 1].1) {
                    j += 1;
                    continue;
                }
                break;
            }
            let word = &text[byte_at(i)..byte_at(j)];
            let lower = word.to_lowercase();
            let split_s = j - i > 2
                && (lower.ends_with("'s") || lower.ends_with("\u{2019}s"));
            if split_s {
                push(&mut tokens, byte_at(i), byte_at(j - 2), TokenKind::Word);
                push(&mut tokens, byte_at(j - 2), byte_at(j), TokenKind::Word);
            } else {
                push(&mut tokens, byte_at(i), byte_at(j), TokenKind::Word);
            }
            // trailing bare apostrophe: plural possessive
            if j < chars.len()
                && is_apostrophe(chars[j].1)
                && !(j + 1 < chars.len() && is_word_char(chars[j + 1].1))
            {
                push(&mut tokens, byte_at(j), byte_at(j + 1), TokenKind::Word);
                j += 1;
            }
            i = j;
            continue;
        }
        push(&mut tokens, byte_at(i), byte_at(i + 1), TokenKind::Punctuation);
        i += 1;
    }
    tokens
}
