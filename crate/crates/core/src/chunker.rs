//! Shallow parsing: noun phrases, verb groups and prepositional phrases,
//! then subject/verb/object clauses over them.
//!
//! Patterns, matched greedily left to right:
//!
//! ```text
//! NP  (DT|PRP$)? (JJ|VBG)* (NN|NNS|NNP)+      VBG only as a prenominal modifier
//!     (DT)? VBG                               gerund not after `be`, not before an NP
//!     PRP                                     pronoun placeholder
//!     NP POS NP                               genitive: the second NP records its owner
//! VG  MD? (VB|VBZ|VBP|VBD|VBN|RB)+            VBG allowed right after a form of `be`
//! PP  (IN|TO) NP
//! ```

use std::fmt;

use crate::tagger::{is_be, PosTag, TaggedToken};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhraseKind {
    NP,
    VG,
    PP,
}

impl fmt::Display for PhraseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhraseKind::NP => "NP",
            PhraseKind::VG => "VG",
            PhraseKind::PP => "PP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phrase {
    pub kind: PhraseKind,
    /// Token range `[start, end)` within the sentence, owner included.
    pub span: (usize, usize),
    /// The phrase's own contiguous tokens. For a genitive NP these exclude
    /// the owner and the possessive marker.
    pub tokens: Vec<TaggedToken>,
    /// Index of the head within `tokens`.
    pub head: usize,
    /// Object NP of a PP.
    pub embedded_np: Option<Box<Phrase>>,
    /// Possessor of a genitive NP (`the customer` in `the customer's address`).
    pub owner: Option<Box<Phrase>>,
    /// Joined to the preceding phrase by `and`/`or`/comma only.
    pub coordinated: bool,
}

impl Phrase {
    pub fn head_token(&self) -> &TaggedToken {
        &self.tokens[self.head]
    }

    pub fn head_tag(&self) -> PosTag {
        self.head_token().tag
    }

    pub fn head_lemma(&self) -> &str {
        &self.head_token().lemma
    }

    /// Surface text of the phrase's own tokens.
    pub fn text(&self) -> String {
        join_surfaces(&self.tokens)
    }

    /// Surface text including the owner of a genitive NP.
    pub fn full_text(&self) -> String {
        match &self.owner {
            Some(owner) => format!("{}'s {}", owner.full_text(), self.text()),
            None => self.text(),
        }
    }

    pub fn is_pronoun(&self) -> bool {
        self.kind == PhraseKind::NP && self.head_tag() == PosTag::PRP
    }
}

fn join_surfaces(tokens: &[TaggedToken]) -> String {
    let mut out = String::new();
    for t in tokens {
        if !out.is_empty() && t.tag != PosTag::POS {
            out.push(' ');
        }
        out.push_str(t.surface());
    }
    out
}

impl fmt::Display for Phrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, &self.embedded_np) {
            (PhraseKind::PP, Some(np)) => {
                write!(f, "PP[{} -> {}]", self.head_token().surface(), np)
            }
            _ => write!(f, "{}[{}]", self.kind, self.full_text()),
        }
    }
}

fn tag_at(tagged: &[TaggedToken], i: usize) -> Option<PosTag> {
    tagged.get(i).map(|t| t.tag)
}

fn starts_np(tagged: &[TaggedToken], i: usize) -> bool {
    matches!(
        tag_at(tagged, i),
        Some(PosTag::DT | PosTag::PRPS | PosTag::JJ | PosTag::NN | PosTag::NNS | PosTag::NNP)
    )
}

fn after_be(tagged: &[TaggedToken], i: usize) -> bool {
    let mut j = i;
    while j > 0 {
        j -= 1;
        match tagged[j].tag {
            PosTag::RB => continue,
            _ => return is_be(&tagged[j].lower()),
        }
    }
    false
}

fn make_phrase(tagged: &[TaggedToken], kind: PhraseKind, start: usize, end: usize, head: usize) -> Phrase {
    Phrase {
        kind,
        span: (start, end),
        tokens: tagged[start..end].to_vec(),
        head: head - start,
        embedded_np: None,
        owner: None,
        coordinated: false,
    }
}

fn parse_simple_np(tagged: &[TaggedToken], i: usize) -> Option<Phrase> {
    let first = tag_at(tagged, i)?;
    if first == PosTag::PRP {
        return Some(make_phrase(tagged, PhraseKind::NP, i, i + 1, i));
    }
    let mut j = i;
    if matches!(first, PosTag::DT | PosTag::PRPS) {
        j += 1;
    }
    let nouns_from = |k: usize| {
        let mut e = k;
        while tag_at(tagged, e).is_some_and(PosTag::is_noun) {
            e += 1;
        }
        e
    };

    let mut m = j;
    loop {
        match tag_at(tagged, m) {
            Some(PosTag::JJ) => m += 1,
            Some(PosTag::VBG) if !after_be(tagged, m) => m += 1,
            _ => break,
        }
    }
    // modifiers must be followed by at least one noun
    let end = nouns_from(m);
    if end > m {
        return Some(make_phrase(tagged, PhraseKind::NP, i, end, end - 1));
    }

    // gerund used as a noun
    if first != PosTag::PRPS
        && tag_at(tagged, j) == Some(PosTag::VBG)
        && !after_be(tagged, j)
        && !starts_np(tagged, j + 1)
    {
        return Some(make_phrase(tagged, PhraseKind::NP, i, j + 1, j));
    }
    None
}

/// Simple NP, extended through any `'s` genitive chain.
fn parse_np(tagged: &[TaggedToken], i: usize) -> Option<Phrase> {
    let mut np = parse_simple_np(tagged, i)?;
    while tag_at(tagged, np.span.1) == Some(PosTag::POS) && !np.is_pronoun() {
        let Some(mut owned) = parse_simple_np(tagged, np.span.1 + 1) else {
            break;
        };
        if owned.is_pronoun() {
            break;
        }
        owned.span.0 = np.span.0;
        owned.owner = Some(Box::new(np));
        np = owned;
    }
    Some(np)
}

fn parse_vg(tagged: &[TaggedToken], i: usize) -> Option<Phrase> {
    let mut j = i;
    if tag_at(tagged, j) == Some(PosTag::MD) {
        j += 1;
    }
    let mut last_verb: Option<usize> = None;
    let mut end = j;
    while let Some(t) = tag_at(tagged, j) {
        let accept_verb = t.is_finite_or_base_verb()
            || (t == PosTag::VBG && last_verb.is_some_and(|v| is_be(&tagged[v].lower())));
        if accept_verb {
            last_verb = Some(j);
            j += 1;
            end = j;
        } else if t == PosTag::RB {
            j += 1;
        } else {
            break;
        }
    }
    let head = last_verb?;
    // keep at most one trailing adverb
    if j > end && tag_at(tagged, end) == Some(PosTag::RB) {
        end += 1;
    }
    Some(make_phrase(tagged, PhraseKind::VG, i, end, head))
}

/// Groups the tagged tokens of one sentence into phrases.
pub fn chunk(tagged: &[TaggedToken]) -> Vec<Phrase> {
    let mut phrases: Vec<Phrase> = Vec::new();
    let mut i = 0;
    while i < tagged.len() {
        let tag = tagged[i].tag;
        let phrase = if let Some(np) = parse_np(tagged, i) {
            Some(np)
        } else if matches!(tag, PosTag::IN | PosTag::TO) {
            parse_np(tagged, i + 1).map(|np| {
                let mut pp = make_phrase(tagged, PhraseKind::PP, i, np.span.1, i);
                pp.embedded_np = Some(Box::new(np));
                pp
            })
        } else {
            parse_vg(tagged, i)
        };
        match phrase {
            Some(mut p) => {
                let gap_start = phrases.last().map(|prev| prev.span.1);
                p.coordinated = gap_start.is_some_and(|g| {
                    g < p.span.0
                        && tagged[g..p.span.0]
                            .iter()
                            .all(|t| t.tag == PosTag::CC || t.surface() == ",")
                });
                i = p.span.1;
                phrases.push(p);
            }
            None => i += 1,
        }
    }
    phrases
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub sentence_index: usize,
    pub subject: Option<Phrase>,
    pub verb: Option<Phrase>,
    /// Direct object, plus any NPs coordinated with it.
    pub objects: Vec<Phrase>,
    /// `(preposition lemma, NP)` pairs following the verb.
    pub pp_complements: Vec<(String, Phrase)>,
    pub copular: bool,
    /// `(owner, owned)` genitive pairs of the sentence.
    pub possessed: Vec<(Phrase, Phrase)>,
    /// NPs of the sentence that fill no role in any clause.
    pub loose: Vec<Phrase>,
}

impl Clause {
    fn new(sentence_index: usize) -> Self {
        Self {
            sentence_index,
            subject: None,
            verb: None,
            objects: Vec::new(),
            pp_complements: Vec::new(),
            copular: false,
            possessed: Vec::new(),
            loose: Vec::new(),
        }
    }

    pub fn object(&self) -> Option<&Phrase> {
        self.objects.first()
    }

    pub fn verb_lemma(&self) -> Option<&str> {
        self.verb.as_ref().map(Phrase::head_lemma)
    }

    /// Every NP the clause mentions, in role order.
    pub fn noun_phrases(&self) -> Vec<&Phrase> {
        let mut out: Vec<&Phrase> = Vec::new();
        out.extend(self.subject.as_ref());
        out.extend(self.objects.iter());
        out.extend(self.pp_complements.iter().map(|(_, np)| np));
        out.extend(self.loose.iter());
        out
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |p: &Option<Phrase>| p.as_ref().map_or("-".to_string(), |p| p.full_text());
        let objects: Vec<String> = self.objects.iter().map(Phrase::full_text).collect();
        let pps: Vec<String> = self
            .pp_complements
            .iter()
            .map(|(prep, np)| format!("{prep}:{}", np.full_text()))
            .collect();
        let list = |v: &[String]| if v.is_empty() { "-".to_string() } else { v.join("|") };
        write!(
            f,
            "CLAUSE\ts{}\tsubj={}\tverb={}\tobj={}\tpp={}\tcopular={}",
            self.sentence_index,
            opt(&self.subject),
            self.verb_lemma().unwrap_or("-"),
            list(&objects),
            list(&pps),
            self.copular
        )
    }
}

fn collect_genitives(np: &Phrase, out: &mut Vec<(Phrase, Phrase)>) {
    if let Some(owner) = &np.owner {
        collect_genitives(owner, out);
        let mut owned = np.clone();
        owned.owner = None;
        out.push(((**owner).clone(), owned));
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    None,
    Object,
    Pp(usize),
}

/// Builds one clause per verb group.
///
/// The subject is the nearest preceding NP, or the previous clause's
/// subject when the verb group is coordinated (`... and returns it`). The
/// first following NP becomes the object; NPs coordinated with the object
/// or with a PP's NP extend that slot.
pub fn extract_clauses(phrases: &[Phrase], sentence_index: usize) -> Vec<Clause> {
    if phrases.is_empty() {
        return Vec::new();
    }
    let verb_positions: Vec<usize> = phrases
        .iter()
        .enumerate()
        .filter(|(_, p)| p.kind == PhraseKind::VG)
        .map(|(i, _)| i)
        .collect();
    let mut used = vec![false; phrases.len()];
    let mut clauses: Vec<Clause> = Vec::new();

    for (k, &v) in verb_positions.iter().enumerate() {
        let mut clause = Clause::new(sentence_index);
        let verb = phrases[v].clone();
        clause.copular = verb.head_lemma() == "be";

        if verb.coordinated && k > 0 {
            clause.subject = clauses[k - 1].subject.clone();
        } else if let Some(s) = (0..v).rev().find(|&i| phrases[i].kind == PhraseKind::NP) {
            clause.subject = Some(phrases[s].clone());
            used[s] = true;
        }

        let stop = verb_positions.get(k + 1).copied().unwrap_or(phrases.len());
        let mut slot = Slot::None;
        for (i, phrase) in phrases.iter().enumerate().take(stop).skip(v + 1) {
            match phrase.kind {
                PhraseKind::NP => {
                    if phrase.coordinated && slot == Slot::Object {
                        clause.objects.push(phrase.clone());
                    } else if let (true, Slot::Pp(p)) = (phrase.coordinated, slot) {
                        let prep = clause.pp_complements[p].0.clone();
                        clause.pp_complements.push((prep, phrase.clone()));
                    } else if clause.objects.is_empty() {
                        clause.objects.push(phrase.clone());
                        slot = Slot::Object;
                    } else {
                        continue;
                    }
                    used[i] = true;
                }
                PhraseKind::PP => {
                    if let Some(np) = &phrase.embedded_np {
                        clause
                            .pp_complements
                            .push((phrase.head_lemma().to_string(), (**np).clone()));
                        slot = Slot::Pp(clause.pp_complements.len() - 1);
                        used[i] = true;
                    }
                }
                PhraseKind::VG => {}
            }
        }
        clause.verb = Some(verb);
        clauses.push(clause);
    }

    if clauses.is_empty() {
        let mut clause = Clause::new(sentence_index);
        if let Some(s) = phrases.iter().position(|p| p.kind == PhraseKind::NP) {
            clause.subject = Some(phrases[s].clone());
            used[s] = true;
        }
        clauses.push(clause);
    }

    // unassigned NPs go to the clause whose verb precedes them
    for (i, phrase) in phrases.iter().enumerate() {
        if used[i] {
            continue;
        }
        let np = match (phrase.kind, &phrase.embedded_np) {
            (PhraseKind::NP, _) => phrase.clone(),
            (PhraseKind::PP, Some(np)) => (**np).clone(),
            _ => continue,
        };
        let k = verb_positions.iter().take_while(|&&v| v < i).count().saturating_sub(1);
        clauses[k].loose.push(np);
    }

    let mut possessed = Vec::new();
    for phrase in phrases {
        match (phrase.kind, &phrase.embedded_np) {
            (PhraseKind::NP, _) => collect_genitives(phrase, &mut possessed),
            (PhraseKind::PP, Some(np)) => collect_genitives(np, &mut possessed),
            _ => {}
        }
    }
    clauses[0].possessed = possessed;
    clauses
}
