//! Chord diagrams stored as double-occurrence words.
//!
//! A diagram with `n` chords is a cyclic word of length `2n` in which each
//! chord id occurs exactly twice. Chord ids are dense (`0..n`) and carry a
//! display label. The represented object is unoriented and unlabeled, so
//! two words describe the same diagram when they agree after a rotation,
//! a reflection and a relabeling; [`canonical_word`] picks one
//! representative per class.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type ChordId = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    word: Vec<ChordId>,
    labels: Vec<String>,
}

impl ChordDiagram {
    /// The empty diagram (a bare circle).
    pub fn empty() -> Self {
        ChordDiagram { word: Vec::new(), labels: Vec::new() }
    }

    /// Builds a diagram from label tokens, validating that every label
    /// occurs exactly twice.
    pub fn from_labels<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::parse(None, format!("odd token count {}", tokens.len())));
        }
        let mut index: HashMap<&str, ChordId> = HashMap::new();
        let mut labels = Vec::new();
        let mut counts = Vec::new();
        let mut word = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let tok = tok.as_ref();
            let id = *index.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                counts.push(0usize);
                (labels.len() - 1) as ChordId
            });
            counts[id as usize] += 1;
            word.push(id);
        }
        if let Some(bad) = counts.iter().position(|&c| c != 2) {
            return Err(Error::parse(
                None,
                format!("label {} occurs {} times", labels[bad], counts[bad]),
            ));
        }
        Ok(ChordDiagram { word, labels })
    }

    /// Builds a diagram from raw ids (any values, each occurring twice).
    /// Ids are compacted in order of first occurrence; labels are `1, 2, ...`
    /// in that order.
    pub fn from_ids(ids: &[ChordId]) -> Result<Self> {
        let mut remap: HashMap<ChordId, ChordId> = HashMap::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut word = Vec::with_capacity(ids.len());
        for &raw in ids {
            let next = remap.len() as ChordId;
            let id = *remap.entry(raw).or_insert(next);
            if id as usize == counts.len() {
                counts.push(0);
            }
            counts[id as usize] += 1;
            word.push(id);
        }
        if let Some(bad) = counts.iter().position(|&c| c != 2) {
            let raw = remap.iter().find(|(_, &v)| v as usize == bad).map(|(k, _)| *k).unwrap();
            return Err(Error::parse(None, format!("id {raw} occurs {} times", counts[bad])));
        }
        let labels = (1..=counts.len()).map(|i| i.to_string()).collect();
        Ok(ChordDiagram { word, labels })
    }

    /// Builds a diagram from a dense word and matching labels. The caller
    /// guarantees ids are `0..labels.len()`, each occurring twice.
    pub(crate) fn from_parts(word: Vec<ChordId>, labels: Vec<String>) -> Self {
        debug_assert_eq!(word.len(), 2 * labels.len());
        ChordDiagram { word, labels }
    }

    /// Same as [`from_parts`](Self::from_parts) but compacts ids that may
    /// be sparse, keeping each surviving chord's label.
    pub(crate) fn from_sparse(word: &[ChordId], labels: &[String]) -> Self {
        let mut remap = vec![ChordId::MAX; labels.len()];
        let mut new_labels = Vec::new();
        let mut new_word = Vec::with_capacity(word.len());
        for &c in word {
            if remap[c as usize] == ChordId::MAX {
                remap[c as usize] = new_labels.len() as ChordId;
                new_labels.push(labels[c as usize].clone());
            }
            new_word.push(remap[c as usize]);
        }
        ChordDiagram { word: new_word, labels: new_labels }
    }

    pub fn word(&self) -> &[ChordId] {
        &self.word
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, id: ChordId) -> &str {
        &self.labels[id as usize]
    }

    pub fn chord_count(&self) -> usize {
        self.labels.len()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn chord(&self, label: &str) -> Result<ChordId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as ChordId)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Both positions of every chord, first occurrence first.
    pub fn ends(&self) -> Vec<[usize; 2]> {
        chord_ends(&self.word, self.chord_count())
    }

    /// A label not used by this diagram.
    pub fn fresh_label(&self, taken: &[String]) -> String {
        (1..)
            .map(|k: usize| k.to_string())
            .find(|s| !self.labels.contains(s) && !taken.contains(s))
            .unwrap()
    }

    /// Word rendered with labels, e.g. `A B A B`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.labels[c as usize])?;
        }
        Ok(())
    }
}

pub(crate) fn chord_ends(word: &[ChordId], n: usize) -> Vec<[usize; 2]> {
    let mut ends = vec![[usize::MAX; 2]; n];
    for (pos, &c) in word.iter().enumerate() {
        let e = &mut ends[c as usize];
        if e[0] == usize::MAX {
            e[0] = pos;
        } else {
            e[1] = pos;
        }
    }
    ends
}

/// Parses whitespace-separated tokens into a diagram. An empty string is
/// the empty diagram.
pub fn parse_dow(text: &str) -> Result<ChordDiagram> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    ChordDiagram::from_labels(&tokens)
}

/// Parses the line-oriented DOW text format: one diagram per line, `#`
/// starts a comment, blank lines are skipped. A line holding only `-` (or
/// the literal `empty`) is the empty diagram.
pub fn parse_dow_file(text: &str) -> Result<Vec<ChordDiagram>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "-" || line == "empty" {
            out.push(ChordDiagram::empty());
            continue;
        }
        let cd = parse_dow(line).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(Some(i + 1), msg),
            other => other,
        })?;
        out.push(cd);
    }
    Ok(out)
}

/// Lexicographically least relabeled word over all rotations and both
/// reading directions; ids renamed `0, 1, ...` in order of first occurrence.
pub fn canonical_code(word: &[ChordId]) -> Vec<ChordId> {
    let m = word.len();
    if m == 0 {
        return Vec::new();
    }
    let n = m / 2;
    let max_id = word.iter().copied().max().unwrap() as usize;
    let mut best: Vec<ChordId> = Vec::new();
    let mut cand: Vec<ChordId> = Vec::with_capacity(m);
    let mut remap = vec![ChordId::MAX; max_id + 1];
    for reverse in [false, true] {
        for start in 0..m {
            remap.iter_mut().for_each(|r| *r = ChordId::MAX);
            cand.clear();
            let mut next = 0;
            // 0: still tied with best, -1: already smaller.
            let mut state = if best.is_empty() { -1 } else { 0 };
            let mut worse = false;
            for k in 0..m {
                let pos = if reverse { (start + m - k) % m } else { (start + k) % m };
                let c = word[pos] as usize;
                if remap[c] == ChordId::MAX {
                    remap[c] = next;
                    next += 1;
                }
                let v = remap[c];
                if state == 0 {
                    match v.cmp(&best[k]) {
                        std::cmp::Ordering::Less => state = -1,
                        std::cmp::Ordering::Greater => {
                            worse = true;
                            break;
                        }
                        std::cmp::Ordering::Equal => {}
                    }
                }
                cand.push(v);
            }
            if !worse && state == -1 {
                std::mem::swap(&mut best, &mut cand);
            }
        }
    }
    debug_assert_eq!(best.len(), 2 * n);
    best
}

/// Canonical representative of the diagram's isomorphism class, labeled
/// `1, 2, ...` in order of first occurrence.
pub fn canonical_word(cd: &ChordDiagram) -> ChordDiagram {
    let code = canonical_code(&cd.word);
    let labels = (1..=cd.chord_count()).map(|i| i.to_string()).collect();
    ChordDiagram { word: code, labels }
}

/// True when the two diagrams are equal up to rotation, reflection and
/// relabeling.
pub fn same_diagram(a: &ChordDiagram, b: &ChordDiagram) -> bool {
    a.len() == b.len() && canonical_code(&a.word) == canonical_code(&b.word)
}

/// Every diagram with exactly `n` chords, one canonical word per
/// isomorphism class, sorted.
pub fn all_diagrams(n: usize) -> Vec<ChordDiagram> {
    let m = 2 * n;
    let mut seen = std::collections::BTreeSet::new();
    let mut word = vec![ChordId::MAX; m];
    fn rec(
        word: &mut Vec<ChordId>,
        next: ChordId,
        seen: &mut std::collections::BTreeSet<Vec<ChordId>>,
    ) {
        let Some(first) = word.iter().position(|&c| c == ChordId::MAX) else {
            seen.insert(canonical_code(word));
            return;
        };
        word[first] = next;
        for j in first + 1..word.len() {
            if word[j] == ChordId::MAX {
                word[j] = next;
                rec(word, next + 1, seen);
                word[j] = ChordId::MAX;
            }
        }
        word[first] = ChordId::MAX;
    }
    rec(&mut word, 0, &mut seen);
    seen.into_iter()
        .map(|w| {
            let labels = (1..=n).map(|i| i.to_string()).collect();
            ChordDiagram { word: w, labels }
        })
        .collect()
}

/// All diagrams with at most `max_chords` chords, in order of size.
pub fn all_diagrams_up_to(max_chords: usize) -> Vec<ChordDiagram> {
    (0..=max_chords).flat_map(all_diagrams).collect()
}
