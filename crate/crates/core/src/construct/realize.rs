//! From a trivalent graph to an irreducibly odd diagram.
//!
//! The vertices of `L` are paired off and joined by new edges, making a
//! connected 4-valent graph. An Euler circuit of that graph fixes the
//! framing (consecutive circuit edges are opposite) and its vertex
//! sequence is the chord diagram Γ′. Small chords are then attached to
//! every chord of Γ′ so that all chords become odd, giving Γ.
//!
//! A host that is even in Γ′ gets one small chord, at its first end. An
//! odd host gets two, one at each end. Each small chord `s` is written as
//! `s H s` around an endpoint of its host `H`, so it links `H` only.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TrivalentGraph;
use crate::diagram::{canonical_word, ChordDiagram, ChordId};
use crate::error::{Error, Result};
use crate::framed::{
    chord_diagram_to_framed, component_count, framed_to_chord_diagram, isomorphic, smooth_all,
    FramedFourGraph, Smoothing, SmoothingChoice,
};
use crate::parity::{irreducibility_failure, linked_ids, parities, Parity};

pub const DEFAULT_RETRIES: usize = 64;

/// Result of pairing and framing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framing {
    /// Chords are labeled by the vertex ids of `L`.
    pub gamma_prime: ChordDiagram,
    /// Pairing edges `(u, v)`, `u < v`, sorted.
    pub pairing: Vec<(usize, usize)>,
    /// Vertices visited by the Euler circuit, start vertex at both ends.
    pub euler_circuit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oddified {
    pub gamma: ChordDiagram,
    /// Host label and the labels of its small chords.
    pub small_chords: Vec<(String, Vec<String>)>,
}

impl Oddified {
    /// Vertices of Γ's framed graph that are small chords.
    pub fn small_vertices(&self) -> Vec<usize> {
        self.small_chords
            .iter()
            .flat_map(|(_, s)| s)
            .map(|l| self.gamma.chord(l).unwrap() as usize)
            .collect()
    }

    /// Γ's framed graph with every small-chord vertex smoothed.
    pub fn smooth_small(&self) -> Result<FramedFourGraph> {
        let choices: Vec<SmoothingChoice> = self
            .small_vertices()
            .into_iter()
            .map(|vertex| SmoothingChoice { vertex, variant: Smoothing::Join01 })
            .collect();
        smooth_all(&chord_diagram_to_framed(&self.gamma), &choices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizeStats {
    pub v_l: usize,
    pub chords_gamma_prime: usize,
    pub chords_gamma: usize,
    pub attempts: usize,
    /// Seed of the successful attempt.
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub gamma_prime: ChordDiagram,
    pub gamma: ChordDiagram,
    pub pairing: Vec<(usize, usize)>,
    pub euler_circuit: Vec<usize>,
    pub small_chords: Vec<(String, Vec<String>)>,
    pub stats: RealizeStats,
}

impl Realization {
    pub fn oddified(&self) -> Oddified {
        Oddified { gamma: self.gamma.clone(), small_chords: self.small_chords.clone() }
    }
}

pub fn pair_and_frame(l: &TrivalentGraph, seed: u64) -> Result<ChordDiagram> {
    Ok(pair_and_frame_detailed(l, seed)?.gamma_prime)
}

pub fn pair_and_frame_detailed(l: &TrivalentGraph, seed: u64) -> Result<Framing> {
    let n = l.vertex_count();
    if n % 2 == 1 {
        return Err(Error::InvalidInput("odd vertex count".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairing: Vec<(usize, usize)> =
        order.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    pairing.sort();

    let edges: Vec<(usize, usize)> = l.edges().iter().chain(&pairing).copied().collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    for list in &mut adj {
        list.shuffle(&mut rng);
    }

    // Hierholzer.
    let mut used = vec![false; edges.len()];
    let mut next = vec![0; n];
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        if let Some(&(w, e)) = adj[v].get(next[v]) {
            used[e] = true;
            stack.push(w);
        } else {
            circuit.push(v);
            stack.pop();
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), edges.len() + 1);

    let tokens: Vec<String> = circuit[1..].iter().map(|v| v.to_string()).collect();
    let gamma_prime = ChordDiagram::from_labels(&tokens)?;
    Ok(Framing { gamma_prime, pairing, euler_circuit: circuit })
}

/// Attaches small chords so that every chord becomes odd, then verifies
/// the result.
pub fn oddify(cd: &ChordDiagram) -> Result<Oddified> {
    let par = parities(cd);
    let ends = cd.ends();
    let mut taken: BTreeSet<String> = cd.labels().iter().cloned().collect();
    let mut fresh = |base: String| {
        let mut s = base;
        while taken.contains(&s) {
            s.push('\'');
        }
        taken.insert(s.clone());
        s
    };
    let mut small: Vec<[Option<String>; 2]> = vec![[None, None]; cd.chord_count()];
    let mut small_chords = Vec::new();
    for c in 0..cd.chord_count() {
        let host = cd.label(c as ChordId).to_string();
        let count = if par[c] == Parity::Odd { 2 } else { 1 };
        let mut names = Vec::new();
        for k in 0..count {
            let s = fresh(format!("{host}.{}", k + 1));
            small[c][k] = Some(s.clone());
            names.push(s);
        }
        small_chords.push((host, names));
    }
    let mut tokens: Vec<&str> = Vec::with_capacity(3 * cd.len());
    for (pos, &c) in cd.word().iter().enumerate() {
        let end = usize::from(ends[c as usize][0] != pos);
        let host = cd.label(c);
        match &small[c as usize][end] {
            Some(s) => tokens.extend([s.as_str(), host, s.as_str()]),
            None => tokens.push(host),
        }
    }
    let out = Oddified { gamma: ChordDiagram::from_labels(&tokens)?, small_chords };
    verify_oddified(cd, &out)?;
    Ok(out)
}

fn verify_oddified(cd: &ChordDiagram, out: &Oddified) -> Result<()> {
    let gamma = &out.gamma;
    if let Some(reason) = irreducibility_failure(gamma) {
        return Err(Error::Verification(reason));
    }
    if gamma.chord_count() > 3 * cd.chord_count() {
        return Err(Error::Verification(format!(
            "{} chords exceed three times {}",
            gamma.chord_count(),
            cd.chord_count()
        )));
    }
    let ids: Vec<ChordId> = cd.labels().iter().map(|l| gamma.chord(l).unwrap()).collect();
    for a in 0..ids.len() {
        for b in a + 1..ids.len() {
            if linked_ids(cd, a as ChordId, b as ChordId) != linked_ids(gamma, ids[a], ids[b]) {
                return Err(Error::Verification(format!(
                    "linkage of {} and {} changed",
                    cd.label(a as ChordId),
                    cd.label(b as ChordId)
                )));
            }
        }
    }
    let smoothed = out.smooth_small()?;
    let recovered = framed_to_chord_diagram(&smoothed)
        .map_err(|e| Error::Verification(format!("smoothing small chords: {e}")))?;
    if canonical_word(&recovered) != canonical_word(cd) || !isomorphic(&smoothed, &chord_diagram_to_framed(cd)) {
        return Err(Error::Verification("smoothing small chords does not recover the input".into()));
    }
    Ok(())
}

pub fn realize(l: &TrivalentGraph, seed: u64) -> Result<Realization> {
    realize_with_retries(l, seed, DEFAULT_RETRIES)
}

/// Pairs, frames and oddifies, re-checking every conclusion. Failed
/// attempts are retried with seeds drawn from a generator seeded by
/// `seed`; the first attempt uses `seed` itself.
pub fn realize_with_retries(l: &TrivalentGraph, seed: u64, retries: usize) -> Result<Realization> {
    if let Some(&(v, _)) = l.edges().iter().find(|&&(u, v)| u == v) {
        return Err(Error::Verification(format!(
            "loop at vertex {v}: the circuit passes it twice in a row, and the resulting kink stays reducible"
        )));
    }
    let mut seeds = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for attempt in 0..retries.max(1) {
        let s = if attempt == 0 { seed } else { seeds.next_u64() };
        match attempt_once(l, s, attempt + 1) {
            Ok(out) => return Ok(out),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::Verification(format!(
        "all {} attempts failed; last: {}",
        retries.max(1),
        last.unwrap()
    )))
}

fn attempt_once(l: &TrivalentGraph, seed: u64, attempts: usize) -> Result<Realization> {
    let framing = pair_and_frame_detailed(l, seed)?;
    let odd = oddify(&framing.gamma_prime)?;
    let out = Realization {
        stats: RealizeStats {
            v_l: l.vertex_count(),
            chords_gamma_prime: framing.gamma_prime.chord_count(),
            chords_gamma: odd.gamma.chord_count(),
            attempts,
            seed,
        },
        gamma_prime: framing.gamma_prime,
        gamma: odd.gamma,
        pairing: framing.pairing,
        euler_circuit: framing.euler_circuit,
        small_chords: odd.small_chords,
    };
    verify_output(l, &out)?;
    Ok(out)
}

/// Re-checks all four conclusions on a finished output.
pub(crate) fn verify_output(l: &TrivalentGraph, out: &Realization) -> Result<()> {
    for (name, cd) in [("gamma", &out.gamma), ("gamma_prime", &out.gamma_prime)] {
        let k = component_count(&chord_diagram_to_framed(cd));
        if k != 1 {
            return Err(Error::Verification(format!("{name} has {k} unicursal components")));
        }
    }
    if out.gamma_prime.chord_count() != l.vertex_count() {
        return Err(Error::Verification("gamma_prime must have one chord per vertex".into()));
    }
    verify_oddified(&out.gamma_prime, &out.oddified())?;
    if out.stats.chords_gamma > 3 * l.vertex_count() {
        return Err(Error::Verification("more than 3 v(L) chords".into()));
    }
    // Core arcs of Γ′ are the edges of the 4-valent graph; dropping the
    // pairing edges must leave exactly the edges of L.
    let gp = &out.gamma_prime;
    let vertex = |id: ChordId| -> Result<usize> {
        gp.label(id).parse().map_err(|_| Error::Verification(format!("label {} is not a vertex", gp.label(id))))
    };
    let m = gp.len();
    let mut arcs = Vec::with_capacity(m);
    for i in 0..m {
        let (u, v) = (vertex(gp.word()[i])?, vertex(gp.word()[(i + 1) % m])?);
        arcs.push((u.min(v), u.max(v)));
    }
    arcs.sort();
    for p in &out.pairing {
        match arcs.binary_search(p) {
            Ok(i) => {
                arcs.remove(i);
            }
            Err(_) => return Err(Error::Verification(format!("pairing edge {p:?} is not a core arc"))),
        }
    }
    let mut expected = l.edges().to_vec();
    expected.sort();
    if arcs != expected {
        return Err(Error::Verification("deleting pairing edges does not recover L".into()));
    }
    Ok(())
}
