//! The parity bracket.
//!
//! For a one-component framed 4-graph, the bracket sums, over both
//! smoothings at every even vertex, those results that still form a
//! single unicursal component. Summands are classes modulo the second
//! Reidemeister move (decided by [`reduce_r2`]) and coefficients live in
//! Z/2, so the value is a set of canonical words with pairs cancelling.
//! When every chord is odd there is exactly one summand, the diagram
//! itself, which is what makes irreducibly odd diagrams minimal.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagram::{canonical_code, canonical_word, ChordDiagram, ChordId};
use crate::error::{Error, Result};
use crate::framed::{
    chord_diagram_to_framed, component_count, single_traversal, smooth_masked, FramedFourGraph,
    Smoothing, SmoothingChoice,
};
use crate::moves::{self, apply_move, find_moves, reduce_r2, reduce_r2_code, MoveKind, MoveSite};
use crate::parity::{self, degrees, irreducibility_failure};

/// Default cap on the number of even vertices the bracket will expand.
pub const DEFAULT_MAX_EVEN: usize = 24;

/// Assignments below this count are expanded on one thread.
const PARALLEL_THRESHOLD: u64 = 1 << 10;

/// An element of the Z/2 span of R2-classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketValue {
    /// Canonical, R2-reduced words with coefficient 1.
    pub classes: BTreeSet<ChordDiagram>,
    /// Number of smoothing assignments that produced one component, before
    /// cancellation.
    pub summands: usize,
}

impl BracketValue {
    /// The value `{Γ0}`.
    pub fn circle() -> Self {
        let mut classes = BTreeSet::new();
        classes.insert(ChordDiagram::empty());
        BracketValue { classes, summands: 1 }
    }

    pub fn is_circle(&self) -> bool {
        self.classes.len() == 1 && self.classes.iter().next().unwrap().is_empty()
    }

    /// Singleton containing exactly `cd`'s canonical word.
    pub fn is_singleton_of(&self, cd: &ChordDiagram) -> bool {
        self.classes.len() == 1 && self.classes.contains(&canonical_word(cd))
    }

    /// Same element of Z/2𝒢, ignoring the summand count.
    pub fn same_value(&self, other: &BracketValue) -> bool {
        self.classes == other.classes
    }
}

impl fmt::Display for BracketValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| if c.is_empty() { "()".to_string() } else { format!("({c})") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Vertices whose chord is even. Requires one unicursal component.
pub fn even_vertices(g: &FramedFourGraph) -> Result<Vec<usize>> {
    let word = single_traversal(g).ok_or_else(|| Error::ComponentCount(component_count(g)))?;
    let deg = degrees(&word, g.vertex_count());
    Ok((0..g.vertex_count()).filter(|&v| deg[v].is_multiple_of(2)).collect())
}

pub fn bracket(g: &FramedFourGraph) -> Result<BracketValue> {
    bracket_with_budget(g, DEFAULT_MAX_EVEN)
}

pub fn bracket_of(cd: &ChordDiagram) -> Result<BracketValue> {
    bracket(&chord_diagram_to_framed(cd))
}

/// The bracket, refusing inputs with more than `max_even` even vertices.
pub fn bracket_with_budget(g: &FramedFourGraph, max_even: usize) -> Result<BracketValue> {
    let even = even_vertices(g)?;
    let k = even.len();
    if k > max_even {
        return Err(Error::Budget(format!("{k} even vertices exceed the cap of {max_even}")));
    }
    let total: u64 = 1 << k;
    let eval = |mask: u64, acc: &mut (BTreeSet<Vec<ChordId>>, usize)| {
        let mut variant = vec![None; g.vertex_count()];
        for (bit, &v) in even.iter().enumerate() {
            variant[v] = Some(if mask >> bit & 1 == 0 { Smoothing::Join01 } else { Smoothing::Join03 });
        }
        let s = smooth_masked(g, &variant);
        if let Some(word) = single_traversal(&s) {
            let class = reduce_r2_code(&word);
            if !acc.0.remove(&class) {
                acc.0.insert(class);
            }
            acc.1 += 1;
        }
    };
    let (classes, summands) = if total <= PARALLEL_THRESHOLD {
        let mut acc = (BTreeSet::new(), 0);
        (0..total).for_each(|mask| eval(mask, &mut acc));
        acc
    } else {
        // Fixed chunking; symmetric difference makes the merge order-free.
        let chunk = PARALLEL_THRESHOLD;
        (0..total.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut acc = (BTreeSet::new(), 0);
                (c * chunk..((c + 1) * chunk).min(total)).for_each(|mask| eval(mask, &mut acc));
                acc
            })
            .reduce(
                || (BTreeSet::new(), 0),
                |(a, na), (b, nb)| (a.symmetric_difference(&b).cloned().collect(), na + nb),
            )
    };
    let classes = classes
        .into_iter()
        .map(|w| {
            let labels = (1..=w.len() / 2).map(|i| i.to_string()).collect();
            ChordDiagram::from_parts(w, labels)
        })
        .collect();
    Ok(BracketValue { classes, summands })
}

/// Checks re-verifiable from the diagram alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckedAssertion {
    pub name: &'static str,
    pub holds: bool,
}

/// Proof that a diagram has the fewest vertices among all representatives
/// of its free knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityCertificate {
    pub diagram: ChordDiagram,
    pub vertex_count: usize,
    pub basis: &'static str,
    pub checked_assertions: Vec<CheckedAssertion>,
}

impl MinimalityCertificate {
    /// Recomputes every assertion from the stored diagram.
    pub fn reverify(&self) -> bool {
        certify_minimal(&self.diagram).map(|c| c == *self).unwrap_or(false)
    }
}

impl fmt::Display for MinimalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "diagram: {}", self.diagram)?;
        writeln!(f, "vertices: {}", self.vertex_count)?;
        writeln!(f, "basis: {}", self.basis)?;
        for a in &self.checked_assertions {
            writeln!(f, "check {}: {}", a.name, if a.holds { "ok" } else { "FAILED" })?;
        }
        Ok(())
    }
}

pub const CERTIFICATE_BASIS: &str =
    "irreducibly odd; the bracket of any representative contains this diagram as a smoothing";

/// Issues a certificate for irreducibly odd diagrams and refuses anything
/// else, naming the failing predicate.
pub fn certify_minimal(cd: &ChordDiagram) -> Result<MinimalityCertificate> {
    if let Some(reason) = irreducibility_failure(cd) {
        return Err(Error::NotCertified(reason));
    }
    let canon = canonical_word(cd);
    let g = chord_diagram_to_framed(&canon);
    let one_component = component_count(&g) == 1;
    let fixed_point = bracket(&g)?.is_singleton_of(&canon);
    let checked_assertions = vec![
        CheckedAssertion { name: "oddness", holds: parity::is_odd(&canon) },
        CheckedAssertion { name: "irreducibility", holds: moves::r2_remove_pairs(canon.word()).is_empty() },
        CheckedAssertion { name: "one unicursal component", holds: one_component },
        CheckedAssertion { name: "bracket fixed point", holds: fixed_point },
    ];
    if let Some(bad) = checked_assertions.iter().find(|a| !a.holds) {
        return Err(Error::Inconsistency(format!("certificate check `{}` failed for {canon}", bad.name)));
    }
    Ok(MinimalityCertificate {
        vertex_count: canon.chord_count(),
        diagram: canon,
        basis: CERTIFICATE_BASIS,
        checked_assertions,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub moves: usize,
    pub seed: u64,
    /// Additions that would exceed this chord count are skipped.
    pub max_chords: usize,
}

impl FuzzConfig {
    pub fn new(cd: &ChordDiagram, moves: usize, seed: u64) -> Self {
        FuzzConfig { moves, seed, max_chords: (cd.chord_count() + 4).max(6) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzMismatch {
    pub step: usize,
    pub site: String,
    pub before: ChordDiagram,
    pub after: ChordDiagram,
    pub expected: BracketValue,
    pub found: BracketValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub initial: BracketValue,
    pub steps: usize,
    pub final_diagram: ChordDiagram,
    pub mismatch: Option<FuzzMismatch>,
    /// Steps where the size budget removed every addition from the choice.
    pub budget_limited: usize,
    pub kinds: Vec<(MoveKind, usize)>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Applies random Reidemeister moves and recomputes the bracket after each
/// one. Move kinds are drawn uniformly among those available, then a site
/// uniformly within the kind. Deterministic given the seed.
pub fn fuzz_invariance(cd: &ChordDiagram, config: &FuzzConfig) -> Result<FuzzReport> {
    if config.moves == 0 {
        return Err(Error::InvalidInput("move count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let initial = bracket_of(cd)?;
    let mut current = cd.clone();
    let mut budget_limited = 0;
    let mut kinds = vec![
        (MoveKind::R1Add, 0),
        (MoveKind::R1Remove, 0),
        (MoveKind::R2Add, 0),
        (MoveKind::R2Remove, 0),
        (MoveKind::R3, 0),
    ];
    for step in 0..config.moves {
        let all = find_moves(&current);
        let room = config.max_chords as i64 - current.chord_count() as i64;
        let allowed: Vec<&MoveSite> = all.iter().filter(|s| (s.delta() as i64) <= room).collect();
        if allowed.len() < all.len() && !allowed.iter().any(|s| s.delta() > 0) {
            budget_limited += 1;
        }
        let mut present: Vec<MoveKind> = allowed.iter().map(|s| s.kind()).collect();
        present.dedup();
        present.sort();
        present.dedup();
        let kind = *present.choose(&mut rng).expect("an addition or removal always applies");
        let of_kind: Vec<&MoveSite> = allowed.into_iter().filter(|s| s.kind() == kind).collect();
        let site = (*of_kind.choose(&mut rng).unwrap()).clone();
        let next = apply_move(&current, &site)?;
        kinds.iter_mut().find(|(k, _)| *k == kind).unwrap().1 += 1;
        let value = bracket_of(&next)?;
        if !value.same_value(&initial) {
            return Ok(FuzzReport {
                initial: initial.clone(),
                steps: step + 1,
                final_diagram: next.clone(),
                mismatch: Some(FuzzMismatch {
                    step,
                    site: site.spec(&current),
                    before: current,
                    after: next,
                    expected: initial,
                    found: value,
                }),
                budget_limited,
                kinds,
            });
        }
        current = next;
    }
    Ok(FuzzReport { initial, steps: config.moves, final_diagram: current, mismatch: None, budget_limited, kinds })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothingSearch {
    /// Smoothing at `choices` and then `r2_removals` decreasing second
    /// moves give the target's canonical word.
    Found { choices: Vec<SmoothingChoice>, r2_removals: usize },
    NotFound,
    /// The evaluation budget ran out after `evaluated` assignments.
    Exhausted { evaluated: usize },
}

/// Looks for smoothings of `big` equivalent (modulo the second move) to
/// `target`. Vertex subsets are tried by increasing size, each with all
/// smoothing variants.
pub fn find_smoothing_equivalent(
    big: &FramedFourGraph,
    target: &ChordDiagram,
    budget: usize,
) -> Result<SmoothingSearch> {
    if single_traversal(big).is_none() {
        return Err(Error::ComponentCount(component_count(big)));
    }
    let goal = canonical_code(target.word());
    let v = big.vertex_count();
    let t = target.chord_count();
    if t > v {
        return Ok(SmoothingSearch::NotFound);
    }
    let mut evaluated = 0usize;
    for size in 0..=v - t {
        if !(v - size - t).is_multiple_of(2) {
            continue;
        }
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            for mask in 0u64..(1u64 << size) {
                if evaluated >= budget {
                    return Ok(SmoothingSearch::Exhausted { evaluated });
                }
                evaluated += 1;
                let mut variant = vec![None; v];
                let mut choices = Vec::with_capacity(size);
                for (bit, &vx) in subset.iter().enumerate() {
                    let s = if mask >> bit & 1 == 0 { Smoothing::Join01 } else { Smoothing::Join03 };
                    variant[vx] = Some(s);
                    choices.push(SmoothingChoice { vertex: vx, variant: s });
                }
                let s = smooth_masked(big, &variant);
                if let Some(word) = single_traversal(&s) {
                    if reduce_r2_code(&word) == goal {
                        let r2_removals = (word.len() / 2 - t) / 2;
                        return Ok(SmoothingSearch::Found { choices, r2_removals });
                    }
                }
            }
            if !next_combination(&mut subset, v) {
                break;
            }
        }
    }
    Ok(SmoothingSearch::NotFound)
}

/// Advances to the next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Canonical R2-reduced class of a one-component framed graph.
pub fn r2_class(g: &FramedFourGraph) -> Result<ChordDiagram> {
    let word = single_traversal(g).ok_or_else(|| Error::ComponentCount(component_count(g)))?;
    Ok(reduce_r2(&ChordDiagram::from_sparse(&word, g.labels())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{all_diagrams, all_diagrams_up_to, parse_dow};
    use crate::framed::smooth_all;
    use crate::parity::is_irreducibly_odd;

    fn cd(s: &str) -> ChordDiagram {
        parse_dow(s).unwrap()
    }

    fn first_irreducibly_odd() -> ChordDiagram {
        all_diagrams_up_to(6).into_iter().find(|d| !d.is_empty() && is_irreducibly_odd(d)).unwrap()
    }

    #[test]
    fn even_vertex_examples() {
        assert_eq!(even_vertices(&chord_diagram_to_framed(&cd("A A B B"))).unwrap(), vec![0, 1]);
        assert!(even_vertices(&chord_diagram_to_framed(&cd("A B A B"))).unwrap().is_empty());
        assert_eq!(even_vertices(&chord_diagram_to_framed(&cd("A B C A B C"))).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn even_vertices_reject_multi_component() {
        let g = crate::framed::FramedFourGraph::from_edges(1, 0, &[((0, 0), (0, 2)), ((0, 1), (0, 3))]).unwrap();
        assert_eq!(even_vertices(&g), Err(Error::ComponentCount(2)));
        assert!(bracket(&g).is_err());
    }

    #[test]
    fn bracket_examples() {
        assert!(bracket_of(&cd("A B A B")).unwrap().is_circle());
        assert!(bracket_of(&cd("A A B B")).unwrap().is_circle());
        assert!(bracket_of(&cd("")).unwrap().is_circle());
        let odd = first_irreducibly_odd();
        assert!(bracket_of(&odd).unwrap().is_singleton_of(&odd));
    }

    #[test]
    fn bracket_budget() {
        let err = bracket_with_budget(&chord_diagram_to_framed(&cd("A A B B")), 1).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }

    #[test]
    fn bracket_members_are_reduced() {
        for d in all_diagrams(5) {
            let b = bracket_of(&d).unwrap();
            for c in &b.classes {
                assert_eq!(&reduce_r2(c), c);
                assert_eq!(&canonical_word(c), c);
            }
        }
    }

    #[test]
    fn parallel_and_serial_agree() {
        // Eleven even kinks force the parallel path (2^11 assignments).
        let word: Vec<String> = (0..11).flat_map(|i| [i.to_string(), i.to_string()]).collect();
        let d = ChordDiagram::from_labels(&word).unwrap();
        let b = bracket_of(&d).unwrap();
        assert!(b.is_circle());
        assert_eq!(b.summands % 2, 1);
    }

    #[test]
    fn certify_examples() {
        let odd = first_irreducibly_odd();
        let cert = certify_minimal(&odd).unwrap();
        assert!(cert.reverify());
        assert_eq!(cert.vertex_count, odd.chord_count());
        match certify_minimal(&cd("A B A B")) {
            Err(Error::NotCertified(m)) => assert!(m.contains("irreducibility"), "{m}"),
            other => panic!("{other:?}"),
        }
        match certify_minimal(&cd("A A B B")) {
            Err(Error::NotCertified(m)) => assert!(m.contains("oddness"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fuzz_examples() {
        let r = fuzz_invariance(&cd("A B A B"), &FuzzConfig::new(&cd("A B A B"), 100, 1)).unwrap();
        assert!(r.passed());
        assert!(r.initial.is_circle());
        let odd = first_irreducibly_odd();
        let r = fuzz_invariance(&odd, &FuzzConfig::new(&odd, 100, 1)).unwrap();
        assert!(r.passed(), "{:?}", r.mismatch);
        assert!(r.initial.is_singleton_of(&odd));
        let e = ChordDiagram::empty();
        let r = fuzz_invariance(&e, &FuzzConfig::new(&e, 50, 9)).unwrap();
        assert!(r.passed());
        assert!(fuzz_invariance(&e, &FuzzConfig::new(&e, 0, 9)).is_err());
    }

    #[test]
    fn fuzz_is_deterministic() {
        let d = cd("A B C A B C");
        let a = fuzz_invariance(&d, &FuzzConfig::new(&d, 40, 5)).unwrap();
        let b = fuzz_invariance(&d, &FuzzConfig::new(&d, 40, 5)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn smoothing_search_examples() {
        let abab = chord_diagram_to_framed(&cd("A B A B"));
        assert_eq!(
            find_smoothing_equivalent(&abab, &ChordDiagram::empty(), 1000).unwrap(),
            SmoothingSearch::Found { choices: vec![], r2_removals: 1 }
        );
        let aabb = chord_diagram_to_framed(&cd("A A B B"));
        assert_eq!(
            find_smoothing_equivalent(&aabb, &cd("A B C A B C"), 1000).unwrap(),
            SmoothingSearch::NotFound
        );
        let odd = first_irreducibly_odd();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut big = odd.clone();
        for _ in 0..5 {
            let sites = find_moves(&big);
            let s = sites.choose(&mut rng).unwrap();
            big = apply_move(&big, s).unwrap();
        }
        let g = chord_diagram_to_framed(&big);
        match find_smoothing_equivalent(&g, &odd, 1_000_000).unwrap() {
            SmoothingSearch::Found { choices, .. } => {
                let s = smooth_all(&g, &choices).unwrap();
                assert_eq!(r2_class(&s).unwrap(), canonical_word(&odd));
            }
            other => panic!("{other:?} for {big}"),
        }
        assert_eq!(
            find_smoothing_equivalent(&g, &odd, 0).unwrap(),
            SmoothingSearch::Exhausted { evaluated: 0 }
        );
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut c = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut c, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }
}
