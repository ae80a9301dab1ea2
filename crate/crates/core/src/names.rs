//! Class-name conventions shared by the rule engine, ontology and scorer.

use crate::tagger::singularize;

/// `card_reader` → `CardReader`.
pub fn display_name(name: &str) -> String {
    name.split(|c: char| c == '_' || c.is_whitespace() || c == '-')
        .filter(|w| !w.is_empty())
        .map(|w| {
            let mut chars = w.chars();
            match chars.next() {
                Some(first) => first.to_uppercase().chain(chars.flat_map(char::to_lowercase)).collect(),
                None => String::new(),
            }
        })
        .collect()
}

/// Splits identifiers on `_`, `-`, whitespace and camel-case boundaries.
/// Acronym runs stay together: `ATMCard` → `ATM`, `Card`.
pub fn split_words(name: &str) -> Vec<String> {
    let mut words = Vec::new();
    for part in name.split(|c: char| c == '_' || c == '-' || c.is_whitespace()) {
        let chars: Vec<char> = part.chars().collect();
        let mut current = String::new();
        for (i, &c) in chars.iter().enumerate() {
            let boundary = i > 0 && c.is_uppercase() && {
                let prev = chars[i - 1];
                let next_lower = chars.get(i + 1).is_some_and(|n| n.is_lowercase());
                prev.is_lowercase() || prev.is_ascii_digit() || (prev.is_uppercase() && next_lower)
            };
            if boundary && !current.is_empty() {
                words.push(std::mem::take(&mut current));
            }
            current.push(c);
        }
        if !current.is_empty() {
            words.push(current);
        }
    }
    words
}

/// Lowercase, singular, underscore-joined form used for all name matching.
///
/// `CardReaders`, `card readers` and `card_reader` all normalize to
/// `card_reader`.
pub fn normalize_name(name: &str) -> String {
    split_words(name)
        .iter()
        .map(|w| singularize(&w.to_lowercase()))
        .collect::<Vec<_>>()
        .join("_")
}
