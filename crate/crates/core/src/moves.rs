//! Reidemeister moves on chord diagrams and reduction modulo the second
//! move.
//!
//! Positions are indices into the word; arc `i` is the core arc leaving
//! position `i` (between positions `i` and `i + 1`, cyclically). The empty
//! diagram has a single arc `0`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::diagram::{canonical_code, chord_ends, ChordDiagram, ChordId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum R2Version {
    /// New chords read `X Y ... Y X` (unlinked).
    Nested,
    /// New chords read `X Y ... X Y` (linked).
    Crossed,
}

impl fmt::Display for R2Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            R2Version::Nested => "nested",
            R2Version::Crossed => "crossed",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
}

/// An applicable move instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveSite {
    R1Add { arc: usize },
    R1Remove { chord: ChordId },
    /// `arcs.0 <= arcs.1`; equal arcs insert both chords on one arc.
    R2Add { arcs: (usize, usize), version: R2Version },
    R2Remove { chords: (ChordId, ChordId) },
    /// Start positions of the three adjacent endpoint pairs, sorted.
    R3 { pairs: [usize; 3] },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Add { .. } => MoveKind::R1Add,
            MoveSite::R1Remove { .. } => MoveKind::R1Remove,
            MoveSite::R2Add { .. } => MoveKind::R2Add,
            MoveSite::R2Remove { .. } => MoveKind::R2Remove,
            MoveSite::R3 { .. } => MoveKind::R3,
        }
    }

    /// Change in chord count.
    pub fn delta(&self) -> i32 {
        match self.kind() {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 => 0,
        }
    }

    /// Text form understood by [`MoveSite::parse`], using the diagram's
    /// labels: `r1+@3`, `r1-:A`, `r2+@1,4:nested`, `r2-:A,B`, `r3@0,2,4`.
    pub fn spec(&self, cd: &ChordDiagram) -> String {
        match self {
            MoveSite::R1Add { arc } => format!("r1+@{arc}"),
            MoveSite::R1Remove { chord } => format!("r1-:{}", cd.label(*chord)),
            MoveSite::R2Add { arcs, version } => format!("r2+@{},{}:{version}", arcs.0, arcs.1),
            MoveSite::R2Remove { chords } => {
                format!("r2-:{},{}", cd.label(chords.0), cd.label(chords.1))
            }
            MoveSite::R3 { pairs } => format!("r3@{},{},{}", pairs[0], pairs[1], pairs[2]),
        }
    }

    pub fn parse(spec: &str, cd: &ChordDiagram) -> Result<MoveSite> {
        let bad = || Error::InvalidSite(format!("cannot parse `{spec}`"));
        let nums = |s: &str| -> Result<Vec<usize>> {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        if let Some(rest) = spec.strip_prefix("r1+@") {
            let v = nums(rest)?;
            if v.len() != 1 {
                return Err(bad());
            }
            return Ok(MoveSite::R1Add { arc: v[0] });
        }
        if let Some(rest) = spec.strip_prefix("r1-:") {
            return Ok(MoveSite::R1Remove { chord: cd.chord(rest)? });
        }
        if let Some(rest) = spec.strip_prefix("r2+@") {
            let (arcs, version) = rest.split_once(':').ok_or_else(bad)?;
            let v = nums(arcs)?;
            if v.len() != 2 {
                return Err(bad());
            }
            let version = match version {
                "nested" => R2Version::Nested,
                "crossed" => R2Version::Crossed,
                _ => return Err(bad()),
            };
            return Ok(MoveSite::R2Add { arcs: (v[0].min(v[1]), v[0].max(v[1])), version });
        }
        if let Some(rest) = spec.strip_prefix("r2-:") {
            let (a, b) = rest.split_once(',').ok_or_else(bad)?;
            let (a, b) = (cd.chord(a)?, cd.chord(b)?);
            return Ok(MoveSite::R2Remove { chords: (a.min(b), a.max(b)) });
        }
        if let Some(rest) = spec.strip_prefix("r3@") {
            let mut v = nums(rest)?;
            if v.len() != 3 {
                return Err(bad());
            }
            v.sort_unstable();
            return Ok(MoveSite::R3 { pairs: [v[0], v[1], v[2]] });
        }
        Err(bad())
    }
}

#[inline]
fn adjacent(p: usize, q: usize, m: usize) -> bool {
    m >= 2 && ((p + 1) % m == q || (q + 1) % m == p)
}

/// Chords whose two endpoints are adjacent on the core.
pub(crate) fn r1_remove_chords(word: &[ChordId]) -> Vec<ChordId> {
    let m = word.len();
    let mut out: Vec<ChordId> = (0..m)
        .filter(|&i| word[i] == word[(i + 1) % m] && m >= 2)
        .map(|i| word[i])
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The two adjacent position pairs realizing an R2 removal of `(a, b)`,
/// each written as its start position `p` (covering `p`, `p + 1`).
fn r2_pairing(ends: &[[usize; 2]], a: ChordId, b: ChordId, m: usize) -> Option<[usize; 2]> {
    let ea = ends[a as usize];
    let eb = ends[b as usize];
    for (x, y) in [(0, 1), (1, 0)] {
        if adjacent(ea[0], eb[x], m) && adjacent(ea[1], eb[y], m) {
            let start = |p: usize, q: usize| if (p + 1) % m == q { p } else { q };
            return Some([start(ea[0], eb[x]), start(ea[1], eb[y])]);
        }
    }
    None
}

/// Every pair of distinct chords with endpoints pairwise adjacent at both
/// ends, as sorted `(a, b)` with `a < b`, listed in order of the leftmost
/// adjacency that witnesses them.
pub(crate) fn r2_remove_pairs(word: &[ChordId]) -> Vec<(ChordId, ChordId)> {
    let m = word.len();
    if m < 4 {
        return Vec::new();
    }
    let n = m / 2;
    let max_id = word.iter().copied().max().unwrap() as usize;
    let ends = chord_ends(word, max_id + 1);
    let mut out: Vec<(ChordId, ChordId)> = Vec::new();
    for i in 0..m {
        let (a, b) = (word[i], word[(i + 1) % m]);
        if a == b {
            continue;
        }
        let pair = (a.min(b), a.max(b));
        if out.contains(&pair) {
            continue;
        }
        if r2_pairing(&ends, a, b, m).is_some() {
            out.push(pair);
        }
    }
    debug_assert!(out.len() <= n * n);
    out
}

/// Start positions of R3 triangles: three position-disjoint adjacent pairs
/// whose chord pairs are the three 2-subsets of three chords.
fn r3_triangles(word: &[ChordId]) -> Vec<[usize; 3]> {
    let m = word.len();
    if m < 6 {
        return Vec::new();
    }
    let pairs: Vec<usize> = (0..m).filter(|&i| word[i] != word[(i + 1) % m]).collect();
    let key = |p: usize| {
        let (a, b) = (word[p], word[(p + 1) % m]);
        (a.min(b), a.max(b))
    };
    let disjoint = |p: usize, q: usize| p != q && (p + 1) % m != q && (q + 1) % m != p;
    let mut out = Vec::new();
    for (ii, &p) in pairs.iter().enumerate() {
        for (jj, &q) in pairs.iter().enumerate().skip(ii + 1) {
            if !disjoint(p, q) {
                continue;
            }
            let (kp, kq) = (key(p), key(q));
            if kp == kq {
                continue;
            }
            // kp and kq must share exactly one chord; the third pair is
            // the remaining 2-subset.
            let shared = [kp.0, kp.1].into_iter().find(|c| *c == kq.0 || *c == kq.1);
            let Some(s) = shared else { continue };
            let x = if kp.0 == s { kp.1 } else { kp.0 };
            let y = if kq.0 == s { kq.1 } else { kq.0 };
            let want = (x.min(y), x.max(y));
            for &r in pairs.iter().skip(jj + 1) {
                if key(r) == want && disjoint(p, r) && disjoint(q, r) {
                    out.push([p, q, r]);
                }
            }
        }
    }
    out
}

/// All applicable moves. Additions are enumerated once per arc (R1) and
/// once per unordered arc pair and version (R2).
pub fn find_moves(cd: &ChordDiagram) -> Vec<MoveSite> {
    let mut out = removal_and_r3_sites(cd);
    let arcs = cd.len().max(1);
    for arc in 0..arcs {
        out.push(MoveSite::R1Add { arc });
    }
    for i in 0..arcs {
        for j in i..arcs {
            for version in [R2Version::Nested, R2Version::Crossed] {
                out.push(MoveSite::R2Add { arcs: (i, j), version });
            }
        }
    }
    out
}

/// Moves that do not add chords.
pub fn removal_and_r3_sites(cd: &ChordDiagram) -> Vec<MoveSite> {
    let word = cd.word();
    let mut out: Vec<MoveSite> =
        r1_remove_chords(word).into_iter().map(|chord| MoveSite::R1Remove { chord }).collect();
    let mut r2 = r2_remove_pairs(word);
    r2.sort_unstable();
    out.extend(r2.into_iter().map(|chords| MoveSite::R2Remove { chords }));
    out.extend(r3_triangles(word).into_iter().map(|pairs| MoveSite::R3 { pairs }));
    out
}

fn delete_chords(cd: &ChordDiagram, gone: &[ChordId]) -> ChordDiagram {
    let word: Vec<ChordId> = cd.word().iter().copied().filter(|c| !gone.contains(c)).collect();
    ChordDiagram::from_sparse(&word, cd.labels())
}

/// Arc of the diagram left after deleting `removed` positions that the
/// gap at position `q` collapses to. `q` must be the linearly first
/// position of a contiguous removed block.
fn collapsed_arc(removed: &[bool], q: usize) -> usize {
    let remaining = removed.iter().filter(|r| !**r).count();
    if remaining == 0 {
        return 0;
    }
    let before = removed[..q].iter().filter(|r| !**r).count();
    (before + remaining - 1) % remaining
}

/// Applies a move after revalidating it against the diagram.
pub fn apply_move(cd: &ChordDiagram, site: &MoveSite) -> Result<ChordDiagram> {
    apply_move_with_inverse(cd, site).map(|(d, _)| d)
}

/// Applies a move and returns a site on the result that undoes it.
pub fn apply_move_with_inverse(cd: &ChordDiagram, site: &MoveSite) -> Result<(ChordDiagram, MoveSite)> {
    let word = cd.word();
    let m = word.len();
    let n = cd.chord_count();
    let stale = || Error::InvalidSite(format!("{} does not apply to `{cd}`", site.spec_or_debug(cd)));
    match *site {
        MoveSite::R1Remove { chord } => {
            if chord as usize >= n || !r1_remove_chords(word).contains(&chord) {
                return Err(stale());
            }
            let [a, b] = cd.ends()[chord as usize];
            let mut removed = vec![false; m];
            removed[a] = true;
            removed[b] = true;
            let q = if b == m - 1 && a == 0 { 0 } else { a };
            let arc = collapsed_arc(&removed, q);
            Ok((delete_chords(cd, &[chord]), MoveSite::R1Add { arc }))
        }
        MoveSite::R2Remove { chords: (a, b) } => {
            if a as usize >= n || b as usize >= n || a == b {
                return Err(stale());
            }
            let ends = cd.ends();
            let starts = r2_pairing(&ends, a, b, m).ok_or_else(stale)?;
            let mut removed = vec![false; m];
            for &c in &[a, b] {
                for &p in &ends[c as usize] {
                    removed[p] = true;
                }
            }
            let gap = |p: usize| if p == m - 1 { 0 } else { p };
            let x = collapsed_arc(&removed, gap(starts[0]));
            let y = collapsed_arc(&removed, gap(starts[1]));
            let version = if word[starts[0]] == word[starts[1]] {
                R2Version::Crossed
            } else {
                R2Version::Nested
            };
            let inverse = MoveSite::R2Add { arcs: (x.min(y), x.max(y)), version };
            Ok((delete_chords(cd, &[a, b]), inverse))
        }
        MoveSite::R3 { pairs } => {
            if !r3_triangles(word).contains(&pairs) {
                return Err(stale());
            }
            let mut w = word.to_vec();
            for p in pairs {
                w.swap(p, (p + 1) % m);
            }
            Ok((ChordDiagram::from_sparse(&w, cd.labels()), MoveSite::R3 { pairs }))
        }
        MoveSite::R1Add { arc } => {
            if arc >= m.max(1) {
                return Err(stale());
            }
            let x = n as ChordId;
            let mut w = word.to_vec();
            let at = if m == 0 { 0 } else { arc + 1 };
            w.splice(at..at, [x, x]);
            let mut labels = cd.labels().to_vec();
            labels.push(cd.fresh_label(&[]));
            let out = ChordDiagram::from_sparse(&w, &labels);
            let chord = out.chord(&labels[n]).unwrap();
            Ok((out, MoveSite::R1Remove { chord }))
        }
        MoveSite::R2Add { arcs: (i, j), version } => {
            if i > j || j >= m.max(1) {
                return Err(stale());
            }
            let (x, y) = (n as ChordId, n as ChordId + 1);
            let mut w = word.to_vec();
            let at = |arc: usize| if m == 0 { 0 } else { arc + 1 };
            if i == j {
                let block = match version {
                    R2Version::Crossed => [x, y, x, y],
                    R2Version::Nested => [x, y, y, x],
                };
                w.splice(at(i)..at(i), block);
            } else {
                let second = match version {
                    R2Version::Crossed => [x, y],
                    R2Version::Nested => [y, x],
                };
                w.splice(at(j)..at(j), second);
                w.splice(at(i)..at(i), [x, y]);
            }
            let mut labels = cd.labels().to_vec();
            let lx = cd.fresh_label(&[]);
            let ly = cd.fresh_label(std::slice::from_ref(&lx));
            labels.push(lx.clone());
            labels.push(ly.clone());
            let out = ChordDiagram::from_sparse(&w, &labels);
            let (a, b) = (out.chord(&lx).unwrap(), out.chord(&ly).unwrap());
            Ok((out, MoveSite::R2Remove { chords: (a.min(b), a.max(b)) }))
        }
    }
}

impl MoveSite {
    fn spec_or_debug(&self, cd: &ChordDiagram) -> String {
        let in_range = match self {
            MoveSite::R1Remove { chord } => (*chord as usize) < cd.chord_count(),
            MoveSite::R2Remove { chords } => {
                (chords.0 as usize) < cd.chord_count() && (chords.1 as usize) < cd.chord_count()
            }
            _ => true,
        };
        if in_range {
            self.spec(cd)
        } else {
            format!("{self:?}")
        }
    }
}

/// The R2-minimal representative: removes the leftmost R2 site of the
/// canonical word until none is left, and returns the canonical word.
pub fn reduce_r2(cd: &ChordDiagram) -> ChordDiagram {
    let n = cd.chord_count();
    let mut word = canonical_code(cd.word());
    loop {
        let pairs = r2_remove_pairs(&word);
        let Some(&(a, b)) = pairs.first() else { break };
        word.retain(|&c| c != a && c != b);
        word = canonical_code(&word);
    }
    let k = word.len() / 2;
    debug_assert!(k <= n);
    let labels = (1..=k).map(|i| i.to_string()).collect();
    ChordDiagram::from_parts(word, labels)
}

/// R2 reduction on a raw word, returning the canonical code.
pub(crate) fn reduce_r2_code(word: &[ChordId]) -> Vec<ChordId> {
    let mut word = canonical_code(word);
    loop {
        let pairs = r2_remove_pairs(&word);
        let Some(&(a, b)) = pairs.first() else { break };
        word.retain(|&c| c != a && c != b);
        word = canonical_code(&word);
    }
    word
}

/// Canonical words of every diagram reachable by maximal sequences of R2
/// removals, over all removal orders.
pub fn r2_terminals(cd: &ChordDiagram) -> BTreeSet<ChordDiagram> {
    let mut memo: HashMap<Vec<ChordId>, BTreeSet<Vec<ChordId>>> = HashMap::new();
    fn go(
        word: Vec<ChordId>,
        memo: &mut HashMap<Vec<ChordId>, BTreeSet<Vec<ChordId>>>,
    ) -> BTreeSet<Vec<ChordId>> {
        if let Some(t) = memo.get(&word) {
            return t.clone();
        }
        let pairs = r2_remove_pairs(&word);
        let mut out = BTreeSet::new();
        if pairs.is_empty() {
            out.insert(word.clone());
        }
        for (a, b) in pairs {
            let next: Vec<ChordId> = word.iter().copied().filter(|&c| c != a && c != b).collect();
            out.extend(go(canonical_code(&next), memo));
        }
        memo.insert(word, out.clone());
        out
    }
    go(canonical_code(cd.word()), &mut memo)
        .into_iter()
        .map(|w| {
            let labels = (1..=w.len() / 2).map(|i| i.to_string()).collect();
            ChordDiagram::from_parts(w, labels)
        })
        .collect()
}

/// [`reduce_r2`] after checking that every removal order ends in the same
/// class. A disagreement is reported as an inconsistency.
pub fn reduce_r2_checked(cd: &ChordDiagram) -> Result<ChordDiagram> {
    let terminals = r2_terminals(cd);
    let reduced = reduce_r2(cd);
    if terminals.len() != 1 || !terminals.contains(&reduced) {
        let list: Vec<String> = terminals.iter().map(|t| format!("[{t}]")).collect();
        return Err(Error::Inconsistency(format!(
            "R2 reduction of `{cd}` is not confluent: terminals {}",
            list.join(" ")
        )));
    }
    Ok(reduced)
}

/// True when the two diagrams have the same R2-minimal representative.
pub fn r2_equivalent(a: &ChordDiagram, b: &ChordDiagram) -> bool {
    reduce_r2(a) == reduce_r2(b)
}
