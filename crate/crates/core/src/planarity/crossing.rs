//! Exact crossing numbers by crossing insertion.
//!
//! Level `k` of the search tries every set of `k` crossing edge pairs and
//! every order of the crossings along each edge, replaces each crossing by
//! a new vertex and tests planarity. The first level with a planar outcome
//! is the crossing number; when the budget (counted in planarity tests)
//! runs out at level `k`, all lower levels have failed and `k` is a lower
//! bound.
//!
//! Two edges cross at most once and no edge crosses itself. Ordinary
//! graphs only let independent edges cross. Framed graphs also let edges
//! sharing a vertex cross, since the fixed rotation at that vertex may
//! force it; the new vertex pairs the two strands as opposite slots.

use std::fmt;

use super::embed::{is_planar_framed, planar_simple};
use super::Graph;
use crate::bracket::{bracket, certify_minimal, find_smoothing_equivalent, next_combination, SmoothingSearch};
use crate::diagram::{canonical_word, ChordDiagram};
use crate::error::{Error, Result};
use crate::framed::{
    chord_diagram_to_framed, half_edge, single_traversal, smooth_all, FramedFourGraph, HalfEdge,
    Smoothing, SmoothingChoice,
};
use crate::moves::{apply_move, r2_remove_pairs, MoveSite};

/// Planarity tests allowed per search.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Exact,
    LowerBound,
    UpperBound,
    /// The search stopped early; `value` is still a lower bound.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingBound {
    pub kind: BoundKind,
    pub value: usize,
    pub witness: Option<Witness>,
    /// Planarity tests spent.
    pub tests: usize,
}

impl CrossingBound {
    /// The lower bound this result establishes.
    pub fn lower(&self) -> usize {
        match self.kind {
            BoundKind::UpperBound => 0,
            _ => self.value,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == BoundKind::Exact
    }
}

impl fmt::Display for CrossingBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoundKind::Exact => write!(f, "exact {}", self.value),
            BoundKind::LowerBound => write!(f, ">= {}", self.value),
            BoundKind::UpperBound => write!(f, "<= {}", self.value),
            BoundKind::Exhausted => write!(f, ">= {} (budget exhausted)", self.value),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Insertion(CrossingWitness),
    Chain { links: Vec<ChainLink>, path: PathCheck },
}

/// Crossings as pairs of edge indices, and for every edge with several
/// crossings their order from its first end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingWitness {
    pub crossings: Vec<(usize, usize)>,
    pub orders: Vec<(usize, Vec<usize>)>,
}

impl fmt::Display for CrossingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return f.write_str("planar as given");
        }
        let parts: Vec<String> = self.crossings.iter().map(|(a, b)| format!("e{a}xe{b}")).collect();
        f.write_str(&parts.join(" "))?;
        for (e, ord) in &self.orders {
            let o: Vec<String> = ord.iter().map(|c| format!("c{c}")).collect();
            write!(f, "; along e{e}: {}", o.join(","))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Link {
    Gamma,
    GammaPrime,
    L,
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Link::Gamma => "cr(Gamma)",
            Link::GammaPrime => "cr(Gamma')",
            Link::L => "cr(L)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    pub link: Link,
    pub bound: CrossingBound,
    pub reason: &'static str,
}

/// How the smoothing from `delta` down to `gamma` was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathCheck {
    /// Smoothing `smoothed` vertices and then `r2_steps` decreasing second
    /// moves reach gamma; `realized` of those moves were redone as two
    /// smoothings each.
    Verified { smoothed: usize, r2_steps: usize, realized: usize },
    Exhausted,
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Iterative deepening over crossing sets drawn from `pairs`.
fn search<F>(edge_count: usize, pairs: &[(usize, usize)], budget: usize, mut planar: F) -> CrossingBound
where
    F: FnMut(&[(usize, usize)], &[Vec<usize>]) -> bool,
{
    let mut tests = 0;
    for k in 0..=pairs.len() {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let crossings: Vec<(usize, usize)> = combo.iter().map(|&i| pairs[i]).collect();
            let mut orders: Vec<Vec<usize>> = vec![Vec::new(); edge_count];
            for (c, &(a, b)) in crossings.iter().enumerate() {
                orders[a].push(c);
                orders[b].push(c);
            }
            let multi: Vec<usize> = (0..edge_count).filter(|&e| orders[e].len() > 1).collect();
            loop {
                if tests >= budget {
                    return CrossingBound { kind: BoundKind::Exhausted, value: k, witness: None, tests };
                }
                tests += 1;
                if planar(&crossings, &orders) {
                    let witness = CrossingWitness {
                        crossings,
                        orders: multi.iter().map(|&e| (e, orders[e].clone())).collect(),
                    };
                    return CrossingBound {
                        kind: BoundKind::Exact,
                        value: k,
                        witness: Some(Witness::Insertion(witness)),
                        tests,
                    };
                }
                // Odometer over the orders of every multiply crossed edge.
                let mut advanced = false;
                for &e in &multi {
                    if next_permutation(&mut orders[e]) {
                        advanced = true;
                        break;
                    }
                }
                if !advanced {
                    break;
                }
            }
            if !next_combination(&mut combo, pairs.len()) {
                break;
            }
        }
    }
    unreachable!("crossing every candidate pair once always planarizes")
}

/// The framed graph with the given crossings inserted as new vertices.
pub(crate) fn insert_framed(
    g: &FramedFourGraph,
    crossings: &[(usize, usize)],
    orders: &[Vec<usize>],
) -> FramedFourGraph {
    let v = g.vertex_count();
    let mut mate: Vec<HalfEdge> = vec![0; 4 * (v + crossings.len())];
    let mut link = |a: HalfEdge, b: HalfEdge| {
        mate[a as usize] = b;
        mate[b as usize] = a;
    };
    for (e, (a, b)) in g.edges().into_iter().enumerate() {
        let mut prev = a;
        for &c in &orders[e] {
            let (inn, out) = if crossings[c].0 == e { (0, 2) } else { (1, 3) };
            link(prev, half_edge(v + c, inn));
            prev = half_edge(v + c, out);
        }
        link(prev, b);
    }
    let mut labels = g.labels().to_vec();
    labels.extend((1..=crossings.len()).map(|i| format!("x{i}")));
    FramedFourGraph::from_mate(mate, g.circles(), labels)
}

/// Least number of transversal crossings in a plane immersion that keeps
/// opposite half-edges opposite at every vertex.
pub fn cr_framed_exact(g: &FramedFourGraph, budget: usize) -> CrossingBound {
    let m = g.edge_count();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    search(m, &pairs, budget, |c, o| is_planar_framed(&insert_framed(g, c, o)))
}

/// Crossing number of an abstract graph. Loops and parallel edges are
/// dropped first; they never change the value.
pub fn cr_graph_exact(g: &Graph, budget: usize) -> CrossingBound {
    let mut edges: Vec<(usize, usize)> = g.edges().iter().filter(|(u, v)| u != v).copied().collect();
    edges.sort_unstable();
    edges.dedup();
    let n = g.vertex_count();
    let m = edges.len();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let (p, q) = (edges[a], edges[b]);
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                pairs.push((a, b));
            }
        }
    }
    search(m, &pairs, budget, |crossings, orders| {
        let mut out = Vec::with_capacity(m + 2 * crossings.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            let mut prev = u;
            for &c in &orders[e] {
                out.push((prev, n + c));
                prev = n + c;
            }
            out.push((prev, v));
        }
        planar_simple(n + crossings.len(), &out)
    })
}

/// Redoes a decreasing second move on chords `a`, `b` as two smoothings.
fn r2_as_smoothing(cd: &ChordDiagram, a: u32, b: u32) -> Result<ChordDiagram> {
    let target = canonical_word(&apply_move(cd, &MoveSite::R2Remove { chords: (a, b) })?);
    let g = chord_diagram_to_framed(cd);
    for sa in Smoothing::both() {
        for sb in Smoothing::both() {
            let s = smooth_all(
                &g,
                &[SmoothingChoice { vertex: a as usize, variant: sa }, SmoothingChoice { vertex: b as usize, variant: sb }],
            )?;
            if let Some(word) = single_traversal(&s) {
                let got = ChordDiagram::from_sparse(&word, s.labels());
                if canonical_word(&got) == target {
                    return Ok(target);
                }
            }
        }
    }
    Err(Error::Inconsistency(format!("second move on {cd} is not a smoothing")))
}

/// Lower bound on the crossings of any immersion of `delta`, via
/// `cr(delta) >= cr(gamma) >= cr(gamma_prime) >= cr(l)`. Each link gets
/// its own search budget.
pub fn vi_lower_bound(
    delta: &FramedFourGraph,
    gamma: &ChordDiagram,
    gamma_prime: Option<&ChordDiagram>,
    l: Option<&Graph>,
    budget: usize,
) -> Result<CrossingBound> {
    certify_minimal(gamma)?;
    if !bracket(delta)?.is_singleton_of(gamma) {
        return Err(Error::InvalidInput("delta's bracket is not {gamma}".into()));
    }

    let path = match find_smoothing_equivalent(delta, gamma, budget)? {
        SmoothingSearch::Found { choices, r2_removals } => {
            let s = smooth_all(delta, &choices)?;
            let mut cur = ChordDiagram::from_sparse(&single_traversal(&s).unwrap(), s.labels());
            let mut realized = 0;
            while let Some(&(a, b)) = r2_remove_pairs(cur.word()).first() {
                cur = r2_as_smoothing(&cur, a, b)?;
                realized += 1;
            }
            if canonical_word(&cur) != canonical_word(gamma) {
                return Err(Error::Inconsistency("smoothing path ends away from gamma".into()));
            }
            PathCheck::Verified { smoothed: choices.len(), r2_steps: r2_removals, realized }
        }
        SmoothingSearch::Exhausted { .. } => PathCheck::Exhausted,
        SmoothingSearch::NotFound => {
            return Err(Error::Inconsistency("gamma is in the bracket but no smoothing reaches it".into()))
        }
    };

    let mut links = Vec::new();
    if let Some(l) = l {
        links.push(ChainLink {
            link: Link::L,
            bound: cr_graph_exact(l, budget),
            reason: "L is a subgraph of Gamma'",
        });
    }
    if let Some(gp) = gamma_prime {
        links.push(ChainLink {
            link: Link::GammaPrime,
            bound: cr_framed_exact(&chord_diagram_to_framed(gp), budget),
            reason: "Gamma' is a smoothing of Gamma; smoothing never adds crossings",
        });
    }
    links.push(ChainLink {
        link: Link::Gamma,
        bound: cr_framed_exact(&chord_diagram_to_framed(gamma), budget),
        reason: "Gamma is a smoothing of Delta up to second moves",
    });
    let value = links.iter().map(|c| c.bound.lower()).max().unwrap();
    let tests = links.iter().map(|c| c.bound.tests).sum();
    Ok(CrossingBound {
        kind: BoundKind::LowerBound,
        value,
        witness: Some(Witness::Chain { links, path }),
        tests,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_dow;
    use crate::framed::tests::{fig6_left, fig6_right};

    fn of(w: &str) -> FramedFourGraph {
        chord_diagram_to_framed(&parse_dow(w).unwrap())
    }

    #[test]
    fn framed_examples() {
        assert_eq!(cr_framed_exact(&of("A A B B"), 100).value, 0);
        assert_eq!(cr_framed_exact(&of("A B A B"), 100).value, 1);
        let left = cr_framed_exact(&fig6_left(), 100);
        assert!(left.is_exact());
        assert_eq!(left.value, 1);
        assert_eq!(cr_framed_exact(&fig6_right(), 100).value, 0);
        assert_eq!(cr_framed_exact(&FramedFourGraph::circle(), 100).value, 0);
    }

    #[test]
    fn graph_examples() {
        assert_eq!(cr_graph_exact(&Graph::complete(4), 100).value, 0);
        let k5 = cr_graph_exact(&Graph::complete(5), 1000);
        assert_eq!((k5.kind, k5.value), (BoundKind::Exact, 1));
        assert_eq!(cr_graph_exact(&Graph::complete_bipartite(3, 3), 1000).value, 1);
    }

    #[test]
    fn budget_gives_lower_bound() {
        let b = cr_graph_exact(&Graph::complete(5), 1);
        assert_eq!((b.kind, b.value), (BoundKind::Exhausted, 1));
        assert_eq!(b.lower(), 1);
        let b = cr_graph_exact(&Graph::complete(5), 0);
        assert_eq!((b.kind, b.value), (BoundKind::Exhausted, 0));
    }

    #[test]
    fn witness_replays() {
        let g = of("A B C A B C");
        let b = cr_framed_exact(&g, 10_000);
        let Some(Witness::Insertion(w)) = &b.witness else { panic!() };
        assert_eq!(w.crossings.len(), b.value);
        let mut orders = vec![Vec::new(); g.edge_count()];
        for (c, &(x, y)) in w.crossings.iter().enumerate() {
            orders[x].push(c);
            orders[y].push(c);
        }
        for (e, o) in &w.orders {
            orders[*e] = o.clone();
        }
        assert!(is_planar_framed(&insert_framed(&g, &w.crossings, &orders)));
    }

    #[test]
    fn permutations() {
        let mut v = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!((n, v), (6, vec![0, 1, 2]));
    }

    #[test]
    fn vi_bound_on_minimal_odd() {
        let odd = crate::diagram::all_diagrams_up_to(6)
            .into_iter()
            .find(|d| !d.is_empty() && crate::parity::is_irreducibly_odd(d))
            .unwrap();
        let b = vi_lower_bound(&chord_diagram_to_framed(&odd), &odd, None, None, 10_000).unwrap();
        assert!(b.value >= 1);
        assert_eq!(b.kind, BoundKind::LowerBound);
        assert!(matches!(
            vi_lower_bound(&of("A B A B"), &parse_dow("A B A B").unwrap(), None, None, 100),
            Err(Error::NotCertified(_))
        ));
    }
}
