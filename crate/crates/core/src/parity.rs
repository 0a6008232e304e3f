//! Linking of chords and the even/odd classification.
//!
//! Two chords are linked when their endpoints alternate around the core.
//! A chord is even when it is linked with an even number of chords. The
//! raw-word helpers accept any ids below `n` so that callers holding a
//! vertex-numbered traversal can classify vertices without relabeling.

use std::fmt;

use crate::diagram::{chord_ends, ChordDiagram, ChordId};
use crate::error::Result;
use crate::moves;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    pub labels: Vec<String>,
    /// Linked pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(ChordId, ChordId)>,
}

impl InterlacementGraph {
    pub fn degree(&self, c: ChordId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == c || b == c).count()
    }
}

#[inline]
fn alternate(a: [usize; 2], b: [usize; 2]) -> bool {
    let inside = |p: usize| a[0] < p && p < a[1];
    inside(b[0]) != inside(b[1])
}

/// Interlacement degree of every id `< n` appearing in `word`.
pub(crate) fn degrees(word: &[ChordId], n: usize) -> Vec<usize> {
    let ends = chord_ends(word, n);
    let mut deg = vec![0; n];
    // Each chord's degree is the number of chords with exactly one end
    // strictly between its endpoints.
    let mut count_inside = vec![0u8; n];
    for c in 0..n {
        let [a, b] = ends[c];
        if a == usize::MAX {
            continue;
        }
        count_inside.iter_mut().for_each(|x| *x = 0);
        for &d in &word[a + 1..b] {
            count_inside[d as usize] += 1;
        }
        deg[c] = count_inside.iter().filter(|&&x| x == 1).count();
    }
    deg
}

pub fn linked(cd: &ChordDiagram, a: &str, b: &str) -> Result<bool> {
    let ia = cd.chord(a)?;
    let ib = cd.chord(b)?;
    Ok(linked_ids(cd, ia, ib))
}

pub fn linked_ids(cd: &ChordDiagram, a: ChordId, b: ChordId) -> bool {
    if a == b {
        return false;
    }
    let ends = cd.ends();
    alternate(ends[a as usize], ends[b as usize])
}

pub fn chord_parity(cd: &ChordDiagram, a: &str) -> Result<Parity> {
    let id = cd.chord(a)?;
    Ok(parity_of(degrees(cd.word(), cd.chord_count())[id as usize]))
}

pub(crate) fn parity_of(degree: usize) -> Parity {
    if degree.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Parity of every chord, indexed by chord id.
pub fn parities(cd: &ChordDiagram) -> Vec<Parity> {
    degrees(cd.word(), cd.chord_count()).into_iter().map(parity_of).collect()
}

pub fn is_odd(cd: &ChordDiagram) -> bool {
    degrees(cd.word(), cd.chord_count()).iter().all(|d| d % 2 == 1)
}

/// Odd, and no pair of chords has its endpoints pairwise adjacent at both
/// ends (so no decreasing second move applies).
pub fn is_irreducibly_odd(cd: &ChordDiagram) -> bool {
    is_odd(cd) && moves::r2_remove_pairs(cd.word()).is_empty()
}

/// Names the first failing condition, or `None` when irreducibly odd.
pub fn irreducibility_failure(cd: &ChordDiagram) -> Option<String> {
    let par = parities(cd);
    if let Some(c) = par.iter().position(|&p| p == Parity::Even) {
        return Some(format!("oddness fails: chord {} is even", cd.label(c as ChordId)));
    }
    if let Some(&(a, b)) = moves::r2_remove_pairs(cd.word()).first() {
        return Some(format!(
            "irreducibility fails: chords {} and {} admit a decreasing second move",
            cd.label(a),
            cd.label(b)
        ));
    }
    None
}

pub fn interlacement(cd: &ChordDiagram) -> InterlacementGraph {
    let ends = cd.ends();
    let n = cd.chord_count();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if alternate(ends[a], ends[b]) {
                edges.push((a as ChordId, b as ChordId));
            }
        }
    }
    InterlacementGraph { labels: cd.labels().to_vec(), edges }
}
