//! Framed 4-graphs.
//!
//! Every vertex has four half-edge slots `0..4`; slots `(0, 2)` and
//! `(1, 3)` are the two opposite pairs. A half-edge is encoded as
//! `4 * vertex + slot`, and the graph stores for every half-edge the
//! half-edge at the other end of its edge. Vertex-free circular
//! components carry no data and are kept as a count.

use std::fmt::Write as _;

use crate::diagram::{canonical_code, ChordDiagram};
use crate::error::{Error, Result};

pub type HalfEdge = u32;

#[inline]
pub fn half_edge(vertex: usize, slot: usize) -> HalfEdge {
    (4 * vertex + slot) as HalfEdge
}

#[inline]
pub fn vertex_of(h: HalfEdge) -> usize {
    (h / 4) as usize
}

#[inline]
pub fn slot_of(h: HalfEdge) -> usize {
    (h % 4) as usize
}

/// The formally opposite half-edge at the same vertex.
#[inline]
pub fn opposite(h: HalfEdge) -> HalfEdge {
    h ^ 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedFourGraph {
    mate: Vec<HalfEdge>,
    circles: usize,
    labels: Vec<String>,
}

/// The two ways to re-paste the four half-edges of a smoothed vertex, named
/// in the vertex's own slot frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Smoothing {
    /// Joins slot 0 with slot 1 and slot 2 with slot 3.
    Join01,
    /// Joins slot 0 with slot 3 and slot 1 with slot 2.
    Join03,
}

impl Smoothing {
    fn partner(self, slot: usize) -> usize {
        match (self, slot) {
            (Smoothing::Join01, 0) => 1,
            (Smoothing::Join01, 1) => 0,
            (Smoothing::Join01, 2) => 3,
            (Smoothing::Join01, 3) => 2,
            (Smoothing::Join03, 0) => 3,
            (Smoothing::Join03, 3) => 0,
            (Smoothing::Join03, 1) => 2,
            (Smoothing::Join03, 2) => 1,
            _ => unreachable!("slot out of range"),
        }
    }

    pub fn both() -> [Smoothing; 2] {
        [Smoothing::Join01, Smoothing::Join03]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmoothingChoice {
    pub vertex: usize,
    pub variant: Smoothing,
}

/// One unicursal component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Circle,
    /// Closed traversal. `edges[i]` is left through half-edge `edges[i].0`
    /// and entered through `edges[i].1`; `passes[i]` is the vertex entered.
    Traversal { edges: Vec<(HalfEdge, HalfEdge)>, passes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnicursalDecomposition {
    pub components: Vec<Component>,
}

impl UnicursalDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

impl FramedFourGraph {
    /// The crossingless circle.
    pub fn circle() -> Self {
        FramedFourGraph { mate: Vec::new(), circles: 1, labels: Vec::new() }
    }

    /// Builds a graph from explicit edges between `(vertex, slot)` ends.
    pub fn from_edges(
        vertices: usize,
        circles: usize,
        edges: &[((usize, usize), (usize, usize))],
    ) -> Result<Self> {
        let mut mate = vec![HalfEdge::MAX; 4 * vertices];
        for &((v1, s1), (v2, s2)) in edges {
            for &(v, s) in &[(v1, s1), (v2, s2)] {
                if v >= vertices {
                    return Err(Error::UnknownVertex(v));
                }
                if s > 3 {
                    return Err(Error::InvalidInput(format!("slot {s} out of range 0..3")));
                }
            }
            let a = half_edge(v1, s1);
            let b = half_edge(v2, s2);
            if a == b {
                return Err(Error::InvalidInput(format!("edge {v1}.{s1} joins a slot to itself")));
            }
            for h in [a, b] {
                if mate[h as usize] != HalfEdge::MAX {
                    return Err(Error::InvalidInput(format!(
                        "slot {}.{} used twice",
                        vertex_of(h),
                        slot_of(h)
                    )));
                }
            }
            mate[a as usize] = b;
            mate[b as usize] = a;
        }
        if let Some(h) = mate.iter().position(|&m| m == HalfEdge::MAX) {
            return Err(Error::InvalidInput(format!("slot {}.{} has no edge", h / 4, h % 4)));
        }
        let labels = (0..vertices).map(|v| v.to_string()).collect();
        Ok(FramedFourGraph { mate, circles, labels })
    }

    pub(crate) fn from_mate(mate: Vec<HalfEdge>, circles: usize, labels: Vec<String>) -> Self {
        debug_assert_eq!(mate.len(), 4 * labels.len());
        FramedFourGraph { mate, circles, labels }
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len() / 4
    }

    pub fn edge_count(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = labels;
        self
    }

    #[inline]
    pub fn mate(&self, h: HalfEdge) -> HalfEdge {
        self.mate[h as usize]
    }

    #[cfg(test)]
    pub(crate) fn mates(&self) -> &[HalfEdge] {
        &self.mate
    }

    /// Edges as half-edge pairs, each listed once with the smaller end first.
    pub fn edges(&self) -> Vec<(HalfEdge, HalfEdge)> {
        (0..self.mate.len() as HalfEdge)
            .filter(|&h| h < self.mate[h as usize])
            .map(|h| (h, self.mate[h as usize]))
            .collect()
    }

    /// Connected components of the underlying graph, as vertex sets.
    /// Circles are not included.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for slot in 0..4 {
                    let w = vertex_of(self.mate[4 * v + slot]);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced on `vertices` (which must be a union of
    /// connected components), without circles.
    pub fn restrict(&self, vertices: &[usize]) -> FramedFourGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut mate = Vec::with_capacity(4 * vertices.len());
        for &v in vertices {
            for slot in 0..4 {
                let m = self.mate[4 * v + slot];
                let w = index[vertex_of(m)];
                assert!(w != usize::MAX, "restriction cuts an edge");
                mate.push(half_edge(w, slot_of(m)));
            }
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        FramedFourGraph { mate, circles: 0, labels }
    }

    /// Parses the FG text format: `fg <V> <circles>` followed by one
    /// `e <v1>.<s1> <v2>.<s2>` line per edge. `#` starts a comment.
    pub fn parse_fg(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = Some(i + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (toks[0], header) {
                ("fg", None) => {
                    if toks.len() != 3 {
                        return Err(Error::parse(lineno, "expected `fg <V> <circles>`"));
                    }
                    let v = toks[1].parse().map_err(|_| Error::parse(lineno, "bad vertex count"))?;
                    let c = toks[2].parse().map_err(|_| Error::parse(lineno, "bad circle count"))?;
                    header = Some((v, c));
                }
                ("fg", Some(_)) => return Err(Error::parse(lineno, "duplicate header")),
                ("e", Some(_)) => {
                    if toks.len() != 3 {
                        return Err(Error::parse(lineno, "expected `e <v>.<s> <v>.<s>`"));
                    }
                    let end = |t: &str| -> Result<(usize, usize)> {
                        let (v, s) = t
                            .split_once('.')
                            .ok_or_else(|| Error::parse(lineno, format!("bad endpoint `{t}`")))?;
                        let v = v.parse().map_err(|_| Error::parse(lineno, format!("bad vertex `{v}`")))?;
                        let s = s.parse().map_err(|_| Error::parse(lineno, format!("bad slot `{s}`")))?;
                        Ok((v, s))
                    };
                    edges.push((end(toks[1])?, end(toks[2])?));
                }
                ("e", None) => return Err(Error::parse(lineno, "edge before header")),
                (other, _) => return Err(Error::parse(lineno, format!("unexpected `{other}`"))),
            }
        }
        let (v, c) = header.ok_or_else(|| Error::parse(None, "missing `fg` header"))?;
        if edges.len() != 2 * v {
            return Err(Error::parse(None, format!("expected {} edges, found {}", 2 * v, edges.len())));
        }
        FramedFourGraph::from_edges(v, c, &edges)
    }

    pub fn to_fg(&self) -> String {
        let mut s = format!("fg {} {}\n", self.vertex_count(), self.circles);
        for (a, b) in self.edges() {
            let _ = writeln!(s, "e {}.{} {}.{}", vertex_of(a), slot_of(a), vertex_of(b), slot_of(b));
        }
        s
    }
}

/// The framed 4-graph of a chord diagram: one vertex per chord, one edge
/// per core arc. The first pass through a chord enters at slot 0 and
/// leaves at slot 2, the second enters at slot 1 and leaves at slot 3.
pub fn chord_diagram_to_framed(cd: &ChordDiagram) -> FramedFourGraph {
    if cd.is_empty() {
        return FramedFourGraph::circle();
    }
    let word = cd.word();
    let m = word.len();
    let ends = cd.ends();
    let in_slot = |pos: usize| {
        let c = word[pos] as usize;
        half_edge(c, if ends[c][0] == pos { 0 } else { 1 })
    };
    let mut mate = vec![0; 2 * m];
    for pos in 0..m {
        let out = in_slot(pos) + 2;
        let next = in_slot((pos + 1) % m);
        mate[out as usize] = next;
        mate[next as usize] = out;
    }
    FramedFourGraph { mate, circles: 0, labels: cd.labels().to_vec() }
}

/// Walks every unicursal component.
pub fn unicursal_components(g: &FramedFourGraph) -> UnicursalDecomposition {
    let mut components = vec![Component::Circle; g.circles];
    let mut seen = vec![false; g.mate.len()];
    for start in 0..g.mate.len() as HalfEdge {
        if seen[start as usize] {
            continue;
        }
        let mut edges = Vec::new();
        let mut passes = Vec::new();
        let mut arrive = start;
        loop {
            seen[arrive as usize] = true;
            let leave = opposite(arrive);
            seen[leave as usize] = true;
            let next = g.mate[leave as usize];
            edges.push((leave, next));
            passes.push(vertex_of(next));
            arrive = next;
            if arrive == start {
                break;
            }
        }
        components.push(Component::Traversal { edges, passes });
    }
    UnicursalDecomposition { components }
}

/// Number of unicursal components, without materializing them.
pub fn component_count(g: &FramedFourGraph) -> usize {
    let mut seen = vec![false; g.mate.len()];
    let mut count = g.circles;
    for start in 0..g.mate.len() as HalfEdge {
        if seen[start as usize] {
            continue;
        }
        count += 1;
        let mut arrive = start;
        loop {
            seen[arrive as usize] = true;
            seen[opposite(arrive) as usize] = true;
            arrive = g.mate[opposite(arrive) as usize];
            if arrive == start {
                break;
            }
        }
    }
    count
}

/// Vertex sequence of the single unicursal component, or `None` when the
/// graph does not have exactly one component. The empty sequence stands
/// for the bare circle.
pub(crate) fn single_traversal(g: &FramedFourGraph) -> Option<Vec<u32>> {
    if g.mate.is_empty() {
        return (g.circles == 1).then(Vec::new);
    }
    if g.circles > 0 {
        return None;
    }
    let mut word = Vec::with_capacity(g.mate.len() / 2);
    let mut arrive: HalfEdge = 0;
    loop {
        word.push(vertex_of(arrive) as u32);
        arrive = g.mate[opposite(arrive) as usize];
        if arrive == 0 {
            break;
        }
    }
    (word.len() == g.mate.len() / 2).then_some(word)
}

/// Reads the single unicursal component off as a chord diagram whose chord
/// labels are the vertex labels.
pub fn framed_to_chord_diagram(g: &FramedFourGraph) -> Result<ChordDiagram> {
    match single_traversal(g) {
        Some(word) => Ok(ChordDiagram::from_sparse(&word, &g.labels)),
        None => Err(Error::ComponentCount(component_count(g))),
    }
}

/// Smooths one vertex.
pub fn smooth(g: &FramedFourGraph, choice: SmoothingChoice) -> Result<FramedFourGraph> {
    smooth_all(g, &[choice])
}

/// Smooths several distinct vertices at once. The result does not depend
/// on the order of `choices`.
pub fn smooth_all(g: &FramedFourGraph, choices: &[SmoothingChoice]) -> Result<FramedFourGraph> {
    let n = g.vertex_count();
    let mut variant: Vec<Option<Smoothing>> = vec![None; n];
    for c in choices {
        if c.vertex >= n {
            return Err(Error::UnknownVertex(c.vertex));
        }
        if variant[c.vertex].is_some() {
            return Err(Error::InvalidInput(format!("vertex {} smoothed twice", c.vertex)));
        }
        variant[c.vertex] = Some(c.variant);
    }
    Ok(smooth_masked(g, &variant))
}

pub(crate) fn smooth_masked(g: &FramedFourGraph, variant: &[Option<Smoothing>]) -> FramedFourGraph {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for v in 0..n {
        if variant[v].is_none() {
            index[v] = labels.len();
            labels.push(g.labels[v].clone());
        }
    }
    let renumber = |h: HalfEdge| half_edge(index[vertex_of(h)], slot_of(h));
    let partner = |h: HalfEdge| -> HalfEdge {
        let v = vertex_of(h);
        half_edge(v, variant[v].unwrap().partner(slot_of(h)))
    };
    let mut mate = vec![HalfEdge::MAX; 4 * labels.len()];
    let mut used = vec![false; g.mate.len()];
    for h in 0..g.mate.len() as HalfEdge {
        if variant[vertex_of(h)].is_some() || mate[renumber(h) as usize] != HalfEdge::MAX {
            continue;
        }
        // Follow the strand out of h through smoothed vertices until it
        // reaches a kept vertex.
        let mut cur = g.mate[h as usize];
        while variant[vertex_of(cur)].is_some() {
            used[cur as usize] = true;
            let p = partner(cur);
            used[p as usize] = true;
            cur = g.mate[p as usize];
        }
        let a = renumber(h);
        let b = renumber(cur);
        mate[a as usize] = b;
        mate[b as usize] = a;
    }
    // What is left inside smoothed vertices closes up into circles.
    let mut circles = g.circles;
    for h in 0..g.mate.len() as HalfEdge {
        if variant[vertex_of(h)].is_none() || used[h as usize] {
            continue;
        }
        circles += 1;
        let mut cur = h;
        loop {
            used[cur as usize] = true;
            let m = g.mate[cur as usize];
            used[m as usize] = true;
            let p = partner(m);
            used[p as usize] = true;
            cur = p;
            if cur == h {
                break;
            }
        }
    }
    FramedFourGraph { mate, circles, labels }
}

/// Canonical code of a framed graph up to framing-preserving isomorphism.
///
/// The graph is determined by its unicursal components read as cyclic
/// vertex sequences, so the code is the least concatenation of component
/// words over component orders, starting points, directions and vertex
/// relabelings. Candidates are grown one component at a time and only the
/// lexicographically least prefixes are kept.
pub fn graph_code(g: &FramedFourGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let comps: Vec<Vec<u32>> = unicursal_components(g)
        .components
        .into_iter()
        .filter_map(|c| match c {
            Component::Traversal { passes, .. } => {
                Some(passes.into_iter().map(|v| v as u32).collect())
            }
            Component::Circle => None,
        })
        .collect();

    #[derive(Clone)]
    struct State {
        code: Vec<u32>,
        remap: Vec<u32>,
        next: u32,
        used: Vec<bool>,
    }
    let mut states = vec![State {
        code: vec![g.circles as u32],
        remap: vec![u32::MAX; n],
        next: 0,
        used: vec![false; comps.len()],
    }];
    for _ in 0..comps.len() {
        let mut best: Option<Vec<u32>> = None;
        let mut next_states: Vec<State> = Vec::new();
        for st in &states {
            for (ci, comp) in comps.iter().enumerate() {
                if st.used[ci] {
                    continue;
                }
                let m = comp.len();
                for reverse in [false, true] {
                    for start in 0..m {
                        let mut s2 = st.clone();
                        s2.used[ci] = true;
                        let mut seg = vec![m as u32];
                        for k in 0..m {
                            let pos = if reverse { (start + m - k) % m } else { (start + k) % m };
                            let v = comp[pos] as usize;
                            if s2.remap[v] == u32::MAX {
                                s2.remap[v] = s2.next;
                                s2.next += 1;
                            }
                            seg.push(s2.remap[v]);
                        }
                        match &best {
                            Some(b) if seg > *b => continue,
                            Some(b) if seg == *b => {}
                            _ => {
                                best = Some(seg.clone());
                                next_states.clear();
                            }
                        }
                        s2.code.extend_from_slice(&seg);
                        next_states.push(s2);
                    }
                }
            }
        }
        // Identical partial states are interchangeable.
        next_states.sort_by(|a, b| (&a.code, &a.remap, &a.used).cmp(&(&b.code, &b.remap, &b.used)));
        next_states.dedup_by(|a, b| a.code == b.code && a.remap == b.remap && a.used == b.used);
        states = next_states;
    }
    states.into_iter().next().map(|s| s.code).unwrap_or_else(|| vec![g.circles as u32])
}

/// Framing-preserving isomorphism test. One-component graphs with vertices
/// are compared through the canonical chord-diagram word.
pub fn isomorphic(g1: &FramedFourGraph, g2: &FramedFourGraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.circles != g2.circles {
        return false;
    }
    match (single_traversal(g1), single_traversal(g2)) {
        (Some(w1), Some(w2)) => canonical_code(&w1) == canonical_code(&w2),
        (Some(_), None) | (None, Some(_)) => false,
        (None, None) => graph_code(g1) == graph_code(g2),
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::diagram::{canonical_word, parse_dow};

    fn fg(s: &str) -> FramedFourGraph {
        chord_diagram_to_framed(&parse_dow(s).unwrap())
    }

    /// One vertex, loop p on slots 0-2 (mutually opposite), loop q on 1-3.
    pub(crate) fn fig6_left() -> FramedFourGraph {
        FramedFourGraph::from_edges(1, 0, &[((0, 0), (0, 2)), ((0, 1), (0, 3))]).unwrap()
    }

    /// Same underlying graph, loops p on 0-1 and q on 2-3.
    pub(crate) fn fig6_right() -> FramedFourGraph {
        FramedFourGraph::from_edges(1, 0, &[((0, 0), (0, 1)), ((0, 2), (0, 3))]).unwrap()
    }

    #[test]
    fn abab_graph_shape() {
        let g = fg("A B A B");
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(unicursal_components(&g).count(), 1);
    }

    #[test]
    fn empty_is_circle() {
        let g = fg("");
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.circles(), 1);
        assert_eq!(unicursal_components(&g).count(), 1);
        assert!(framed_to_chord_diagram(&g).unwrap().is_empty());
    }

    #[test]
    fn aabb_has_loops_on_non_opposite_slots() {
        let g = fg("A A B B");
        let loops: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(a, b)| vertex_of(a) == vertex_of(b))
            .collect();
        assert_eq!(loops.len(), 2);
        for (a, b) in loops {
            assert_ne!(opposite(a), b);
        }
        // Hand trace: arc 0 leaves A at slot 2 and re-enters A at slot 1.
        assert_eq!(g.mate(half_edge(0, 2)), half_edge(0, 1));
        assert_eq!(g.mate(half_edge(1, 2)), half_edge(1, 1));
    }

    #[test]
    fn fig6_framings() {
        assert_eq!(unicursal_components(&fig6_left()).count(), 2);
        assert_eq!(unicursal_components(&fig6_right()).count(), 1);
        assert_eq!(framed_to_chord_diagram(&fig6_left()), Err(Error::ComponentCount(2)));
        assert_eq!(framed_to_chord_diagram(&fig6_right()).unwrap().to_string(), "0 0");
        assert!(!isomorphic(&fig6_left(), &fig6_right()));
    }

    #[test]
    fn round_trip_keeps_labels() {
        let cd = parse_dow("A B C A B C").unwrap();
        let back = framed_to_chord_diagram(&chord_diagram_to_framed(&cd)).unwrap();
        assert_eq!(back, cd);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(isomorphic(&fg("A B A B"), &fg("B A B A")));
        assert!(!isomorphic(&fg(""), &fg("A B A B")));
        assert!(isomorphic(&fg("A B C A C B"), &fg("X Y X Z Y Z")) == {
            let a = canonical_word(&parse_dow("A B C A C B").unwrap());
            let b = canonical_word(&parse_dow("X Y X Z Y Z").unwrap());
            a == b
        });
    }

    #[test]
    fn smoothing_abab() {
        let g = fg("A B A B");
        let one = smooth(&g, SmoothingChoice { vertex: 0, variant: Smoothing::Join01 }).unwrap();
        assert_eq!(one.vertex_count(), 1);
        assert_eq!(component_count(&one), 1);
        assert_eq!(canonical_word(&framed_to_chord_diagram(&one).unwrap()).to_string(), "1 1");
        let two = smooth(&g, SmoothingChoice { vertex: 0, variant: Smoothing::Join03 }).unwrap();
        assert_eq!(two.vertex_count(), 1);
        assert_eq!(two.circles(), 0);
        assert_eq!(component_count(&two), 2);
    }

    #[test]
    fn smoothing_single_kink() {
        let g = fg("A A");
        let a = smooth(&g, SmoothingChoice { vertex: 0, variant: Smoothing::Join01 }).unwrap();
        let b = smooth(&g, SmoothingChoice { vertex: 0, variant: Smoothing::Join03 }).unwrap();
        let mut circles = [a.circles(), b.circles()];
        circles.sort();
        assert_eq!(circles, [1, 2]);
        assert_eq!(a.vertex_count() + b.vertex_count(), 0);
    }

    #[test]
    fn smoothing_unknown_vertex() {
        let g = fg("A A");
        assert_eq!(
            smooth(&g, SmoothingChoice { vertex: 3, variant: Smoothing::Join01 }),
            Err(Error::UnknownVertex(3))
        );
    }

    #[test]
    fn fg_format_round_trip() {
        let g = fg("A B C A B C");
        let text = g.to_fg();
        let back = FramedFourGraph::parse_fg(&text).unwrap();
        assert!(isomorphic(&g, &back));
        assert_eq!(back.mates(), g.mates());
    }

    #[test]
    fn fg_parser_errors_carry_lines() {
        let err = FramedFourGraph::parse_fg("fg 1 0\ne 0.0 0.2 extra\n").unwrap_err();
        assert_eq!(err, Error::parse(Some(2), "expected `e <v>.<s> <v>.<s>`"));
        assert!(FramedFourGraph::parse_fg("fg 1 0\ne 0.0 0.2\n").is_err());
        assert!(FramedFourGraph::parse_fg("fg 1 0\ne 0.0 0.2\ne 0.1 0.2\n").is_err());
        assert!(FramedFourGraph::parse_fg("fg 1 0\ne 0.0 0.2\ne 0.1 0.3\nbogus\n").is_err());
    }

    #[test]
    fn graph_code_handles_multi_component() {
        let a = fig6_left();
        let relabeled = FramedFourGraph::from_edges(1, 0, &[((0, 3), (0, 1)), ((0, 2), (0, 0))]).unwrap();
        assert!(isomorphic(&a, &relabeled));
        let g = fg("A B A B");
        let split = smooth(&g, SmoothingChoice { vertex: 0, variant: Smoothing::Join03 }).unwrap();
        assert!(isomorphic(&split, &a));
    }
}
