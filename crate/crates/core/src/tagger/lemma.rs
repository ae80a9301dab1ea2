use super::{PosTag, TagLexicon};

const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("children", "child"),
    ("people", "person"),
    ("men", "man"),
    ("women", "woman"),
    ("feet", "foot"),
    ("teeth", "tooth"),
    ("mice", "mouse"),
    ("geese", "goose"),
    ("shelves", "shelf"),
    ("lives", "life"),
    ("wives", "wife"),
    ("knives", "knife"),
    ("leaves", "leaf"),
    ("halves", "half"),
    ("analyses", "analysis"),
    ("criteria", "criterion"),
    ("indices", "index"),
    ("matrices", "matrix"),
    ("buses", "bus"),
    ("statuses", "status"),
    ("movies", "movie"),
    ("series", "series"),
    ("species", "species"),
    ("news", "news"),
];

const IRREGULAR_VERBS: &[(&str, &str)] = &[
    ("is", "be"),
    ("are", "be"),
    ("am", "be"),
    ("was", "be"),
    ("were", "be"),
    ("been", "be"),
    ("being", "be"),
    ("has", "have"),
    ("had", "have"),
    ("having", "have"),
    ("does", "do"),
    ("did", "do"),
    ("done", "do"),
    ("doing", "do"),
        ("goes", "go"),
    ("went", "go"),
    ("gone", "go"),
    ("gave", "give"),
    ("given", "give"),
    ("took", "take"),
    ("taken", "take"),
    ("made", "make"),
    ("kept", "keep"),
    ("held", "hold"),
    ("paid", "pay"),
    ("sent", "send"),
    ("bought", "buy"),
    ("sold", "sell"),
    ("chose", "choose"),
    ("chosen", "choose"),
    ("wrote", "write"),
    ("written", "write"),
    ("got", "get"),
    ("gotten", "get"),
    ("found", "find"),
    ("brought", "bring"),
    ("lent", "lend"),
    ("lost", "lose"),
    ("left", "leave"),
    ("began", "begin"),
    ("begun", "begin"),
    ("built", "build"),
    ("drew", "draw"),
    ("drawn", "draw"),
    ("knew", "know"),
    ("known", "know"),
    ("led", "lead"),
    ("meant", "mean"),
    ("met", "meet"),
    ("ran", "run"),
    ("said", "say"),
    ("saw", "see"),
    ("seen", "see"),
    ("shown", "show"),
    ("spent", "spend"),
    ("stood", "stand"),
    ("taught", "teach"),
    ("told", "tell"),
    ("thought", "think"),
    ("understood", "understand"),
    ("withdrew", "withdraw"),
    ("withdrawn", "withdraw"),
    ("won", "win"),
    ("forgot", "forget"),
    ("forgotten", "forget"),
    ("hidden", "hide"),
];

/// Tag for an irregular past form: `-n` forms are participles.
pub(super) fn irregular_past_tag(word: &str) -> Option<PosTag> {
    IRREGULAR_VERBS
        .iter()
        .find(|(form, base)| {
            *form == word && !form.ends_with('s') && !matches!(*base, "be" | "have" | "do")
        })
        .map(|_| if word.ends_with('n') { PosTag::VBN } else { PosTag::VBD })
}

fn lookup(table: &[(&str, &str)], word: &str) -> Option<String> {
    table
        .iter()
        .find(|(form, _)| *form == word)
        .map(|(_, base)| base.to_string())
}

/// Singular form of a (lowercase) plural noun. Idempotent.
pub fn singularize(word: &str) -> String {
    let stripped = strip_plural(&word.to_lowercase());
    lookup(IRREGULAR_PLURALS, &stripped).unwrap_or(stripped)
}

fn strip_plural(word: &str) -> String {
    let word = word.to_string();
    if let Some(base) = lookup(IRREGULAR_PLURALS, &word) {
        return base;
    }
    let n = word.len();
    if n <= 2 || word.ends_with("ss") || word.ends_with("us") || word.ends_with("is") {
        return word;
    }
    if word.ends_with("ies") && n > 4 {
        return format!("{}y", &word[..n - 3]);
    }
    if ["sses", "xes", "zes", "ches", "shes"]
        .iter()
        .any(|suffix| word.ends_with(suffix))
    {
        return word[..n - 2].to_string();
    }
    match word.strip_suffix('s') {
        Some(stem) if !stem.is_empty() => stem.to_string(),
        _ => word,
    }
}

fn undouble(stem: &str) -> Option<String> {
    let bytes = stem.as_bytes();
    let n = bytes.len();
    (n >= 3 && bytes[n - 1] == bytes[n - 2] && !b"aeioulsz".contains(&bytes[n - 1]))
        .then(|| stem[..n - 1].to_string())
}

fn verb_base(word: &str, tag: PosTag, known: &dyn Fn(&str) -> bool) -> String {
    if let Some(base) = lookup(IRREGULAR_VERBS, word) {
        return base;
    }
    let pick = |candidates: Vec<String>, fallback: String| -> String {
        candidates
            .iter()
            .find(|c| !c.is_empty() && known(c))
            .cloned()
            .unwrap_or(fallback)
    };
    let n = word.len();
    match tag {
        PosTag::VBZ => {
            if word.ends_with("ies") && n > 4 {
                return format!("{}y", &word[..n - 3]);
            }
            let Some(stem) = word.strip_suffix('s') else {
                return word.to_string();
            };
            let es_stem = word.strip_suffix("es").map(str::to_string);
            let fallback = if ["sses", "xes", "zes", "ches", "shes", "oes"]
                .iter()
                .any(|s| word.ends_with(s))
            {
                word[..n - 2].to_string()
            } else {
                stem.to_string()
            };
            let mut candidates = vec![stem.to_string()];
            candidates.extend(es_stem);
            pick(candidates, fallback)
        }
        PosTag::VBD | PosTag::VBN => {
            if word.ends_with("ied") && n > 4 {
                return format!("{}y", &word[..n - 3]);
            }
            let Some(stem) = word.strip_suffix("ed") else {
                return word.to_string();
            };
            let undoubled = undouble(stem);
            let mut candidates = vec![word[..n - 1].to_string(), stem.to_string()];
            candidates.extend(undoubled.clone());
            pick(candidates, undoubled.unwrap_or_else(|| stem.to_string()))
        }
        PosTag::VBG => {
            let Some(stem) = word.strip_suffix("ing") else {
                return word.to_string();
            };
            let undoubled = undouble(stem);
            let mut candidates = vec![stem.to_string(), format!("{stem}e")];
            candidates.extend(undoubled.clone());
            pick(candidates, undoubled.unwrap_or_else(|| stem.to_string()))
        }
        _ => word.to_string(),
    }
}

pub(super) fn lemmatize_with(
    surface: &str,
    tag: PosTag,
    known_verb: &dyn Fn(&str) -> bool,
) -> String {
    let word = surface.to_lowercase();
    match tag {
        PosTag::NNS => singularize(&word),
        PosTag::VBZ | PosTag::VBD | PosTag::VBN | PosTag::VBG => verb_base(&word, tag, known_verb),
        _ => word,
    }
}

/// Base form for a word under the given tag, using the bundled verb list
/// to choose between suffix-stripping candidates.
pub fn lemmatize(surface: &str, tag: PosTag) -> String {
    TagLexicon::bundled_ref().lemmatize(surface, tag)
}
