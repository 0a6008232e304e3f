//! Planarity by path addition.
//!
//! Each block is embedded starting from a cycle. At every step the parts
//! of the block not yet drawn split into fragments, each attached to the
//! drawing at its contact vertices. A fragment fits a face when all its
//! contacts lie on that face. If some fragment fits nowhere the block is
//! not planar; otherwise a path through a fragment with the fewest fitting
//! faces is drawn into one of them, splitting it in two.

use super::Graph;
use crate::framed::{slot_of, vertex_of, FramedFourGraph};

/// Planarity of the underlying graph; loops and parallel edges are
/// ignored.
pub fn is_planar_graph(g: &Graph) -> bool {
    let (n, edges) = simplify(g.vertex_count(), g.edges());
    planar_simple(n, &edges)
}

/// The framed graph with every vertex replaced by a wheel: a hub joined to
/// four rim vertices in slot order, the rim vertex of slot `s` carrying
/// the edge at that slot. Circles are dropped.
pub fn framed_gadget(g: &FramedFourGraph) -> Graph {
    let v = g.vertex_count();
    let rim = |h: u32| 5 * vertex_of(h) + 1 + slot_of(h);
    let mut edges = Vec::with_capacity(8 * v + 2 * v);
    for x in 0..v {
        for s in 0..4 {
            edges.push((5 * x, 5 * x + 1 + s));
            edges.push((5 * x + 1 + s, 5 * x + 1 + (s + 1) % 4));
        }
    }
    for (a, b) in g.edges() {
        edges.push((rim(a), rim(b)));
    }
    Graph::new(5 * v, &edges).expect("gadget vertices are in range")
}

/// Planarity respecting the framing at every vertex.
pub fn is_planar_framed(g: &FramedFourGraph) -> bool {
    is_planar_graph(&framed_gadget(g))
}

fn simplify(n: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut e: Vec<(usize, usize)> =
        edges.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    e.dedup();
    (n, e)
}

pub(crate) fn planar_simple(n: usize, edges: &[(usize, usize)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    blocks(n, edges).into_iter().all(|b| planar_block(&b))
}

/// Edge sets of the biconnected components.
fn blocks(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next adjacency index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (u, pe, ref mut idx)) = stack.last_mut() {
            if let Some(&(w, e)) = adj[u].get(*idx) {
                *idx += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(edges[e]);
                            if e == pe {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn planar_block(block: &[(usize, usize)]) -> bool {
    // Relabel to 0..m.
    let mut ids: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let m = ids.len();
    if m <= 4 || block.len() <= m {
        return true;
    }
    if block.len() > 3 * m - 6 {
        return false;
    }
    let local = |x: usize| ids.binary_search(&x).unwrap();
    let edges: Vec<(usize, usize)> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let mut adj = vec![Vec::new(); m];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }

    let mut placed_v = vec![false; m];
    let mut placed_e = vec![false; edges.len()];
    let cycle = find_cycle(&adj);
    for (i, &x) in cycle.iter().enumerate() {
        placed_v[x] = true;
        let y = cycle[(i + 1) % cycle.len()];
        let e = adj[x].iter().find(|&&(w, _)| w == y).unwrap().1;
        placed_e[e] = true;
    }
    let mut faces = vec![cycle.clone(), cycle];

    loop {
        let frags = fragments(&adj, &edges, &placed_v, &placed_e);
        if frags.is_empty() {
            return true;
        }
        let on_face: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut mark = vec![false; m];
                f.iter().for_each(|&x| mark[x] = true);
                mark
            })
            .collect();
        let mut choice = None;
        for (fi, frag) in frags.iter().enumerate() {
            let fits: Vec<usize> =
                (0..faces.len()).filter(|&k| frag.contacts.iter().all(|&c| on_face[k][c])).collect();
            match fits.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, fits[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, fits[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.unwrap();
        let path = fragment_path(&adj, &placed_v, &frags[fi]);
        for w in path.windows(2) {
            let e = adj[w[0]].iter().find(|&&(x, e)| x == w[1] && !placed_e[e]).unwrap().1;
            placed_e[e] = true;
        }
        path.iter().for_each(|&x| placed_v[x] = true);

        let f = std::mem::take(&mut faces[face]);
        let k = f.len();
        let i = f.iter().position(|&x| x == path[0]).unwrap();
        let j = f.iter().position(|&x| x == *path.last().unwrap()).unwrap();
        let inner = &path[1..path.len() - 1];
        let mut f1: Vec<usize> = (0..).map(|t| f[(i + t) % k]).take((j + k - i) % k + 1).collect();
        f1.extend(inner.iter().rev());
        let mut f2: Vec<usize> = (0..).map(|t| f[(j + t) % k]).take((i + k - j) % k + 1).collect();
        f2.extend(inner.iter());
        faces[face] = f1;
        faces.push(f2);
    }
}

fn find_cycle(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let m = adj.len();
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![usize::MAX; m];
    let mut stack = vec![(0usize, usize::MAX)];
    depth[0] = 0;
    let mut it = vec![0usize; m];
    while let Some(&(u, pe)) = stack.last() {
        if let Some(&(w, e)) = adj[u].get(it[u]) {
            it[u] += 1;
            if e == pe {
                continue;
            }
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push((w, e));
            } else if depth[w] < depth[u] {
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        } else {
            stack.pop();
        }
    }
    unreachable!("a block with more edges than vertices has a cycle")
}

struct Fragment {
    contacts: Vec<usize>,
    /// A single undrawn edge between drawn vertices, or undrawn vertices.
    edge: Option<usize>,
    inner: Vec<usize>,
}

fn fragments(
    adj: &[Vec<(usize, usize)>],
    edges: &[(usize, usize)],
    placed_v: &[bool],
    placed_e: &[bool],
) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if !placed_e[e] && placed_v[u] && placed_v[v] {
            out.push(Fragment { contacts: vec![u, v], edge: Some(e), inner: Vec::new() });
        }
    }
    let mut comp = vec![false; m];
    for s in 0..m {
        if placed_v[s] || comp[s] {
            continue;
        }
        let mut inner = vec![s];
        let mut contacts = Vec::new();
        comp[s] = true;
        let mut k = 0;
        while k < inner.len() {
            let x = inner[k];
            k += 1;
            for &(w, _) in &adj[x] {
                if placed_v[w] {
                    contacts.push(w);
                } else if !comp[w] {
                    comp[w] = true;
                    inner.push(w);
                }
            }
        }
        contacts.sort_unstable();
        contacts.dedup();
        out.push(Fragment { contacts, edge: None, inner });
    }
    out
}

/// A path through the fragment between two distinct contacts.
fn fragment_path(adj: &[Vec<(usize, usize)>], placed_v: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.edge.is_some() {
        return frag.contacts.clone();
    }
    let start = frag.contacts[0];
    let m = adj.len();
    let mut prev = vec![usize::MAX; m];
    let mut queue = std::collections::VecDeque::new();
    for &(w, _) in &adj[start] {
        if !placed_v[w] && prev[w] == usize::MAX && frag.inner.contains(&w) {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&(end, _)) = adj[x].iter().find(|&&(w, _)| placed_v[w] && w != start) {
            let mut path = vec![end, x];
            let mut y = x;
            while prev[y] != start {
                y = prev[y];
                path.push(y);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &(w, _) in &adj[x] {
            if !placed_v[w] && prev[w] == usize::MAX {
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a block have two contacts")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{all_diagrams_up_to, parse_dow};
    use crate::framed::chord_diagram_to_framed;
    use crate::framed::tests::{fig6_left, fig6_right};
    use crate::parity::parities;
    use crate::planarity::genus_min;

    #[test]
    fn classical_graphs() {
        assert!(is_planar_graph(&Graph::complete(4)));
        assert!(!is_planar_graph(&Graph::complete(5)));
        assert!(!is_planar_graph(&Graph::complete_bipartite(3, 3)));
        assert!(!is_planar_graph(&Graph::petersen()));
        assert!(is_planar_graph(&Graph::prism()));
        assert!(is_planar_graph(&Graph::complete(5).without_edge(3)));
        assert!(is_planar_graph(&Graph::complete_bipartite(3, 3).without_edge(0)));
        assert!(!is_planar_graph(&Graph::petersen().without_edge(0)));
        assert!(is_planar_graph(&Graph::complete_bipartite(2, 7)));
    }

    #[test]
    fn wheels_and_grids() {
        // Wheel W_8 and a 4x4 grid are planar; adding a long diagonal pair
        // across the grid keeps it planar only on one side.
        let mut w = Vec::new();
        for i in 1..=8 {
            w.push((0, i));
            w.push((i, i % 8 + 1));
        }
        assert!(is_planar_graph(&Graph::new(9, &w).unwrap()));
        let mut grid = Vec::new();
        for r in 0..4 {
            for c in 0..4 {
                if c < 3 {
                    grid.push((4 * r + c, 4 * r + c + 1));
                }
                if r < 3 {
                    grid.push((4 * r + c, 4 * r + c + 4));
                }
            }
        }
        assert!(is_planar_graph(&Graph::new(16, &grid).unwrap()));
    }

    #[test]
    fn subdivided_k33_with_cut_vertex() {
        // K3,3 with every edge subdivided, plus a pendant triangle.
        let k = Graph::complete_bipartite(3, 3);
        let mut e = Vec::new();
        for (i, &(u, v)) in k.edges().iter().enumerate() {
            e.push((u, 6 + i));
            e.push((6 + i, v));
        }
        e.extend([(0, 15), (15, 16), (16, 0)]);
        assert!(!is_planar_graph(&Graph::new(17, &e).unwrap()));
    }

    #[test]
    fn framed_examples() {
        assert!(is_planar_framed(&fig6_right()));
        assert!(!is_planar_framed(&fig6_left()));
        assert!(is_planar_framed(&chord_diagram_to_framed(&parse_dow("A A B B").unwrap())));
        assert!(!is_planar_framed(&chord_diagram_to_framed(&parse_dow("A B A B").unwrap())));
        assert!(is_planar_framed(&FramedFourGraph::circle()));
    }

    #[test]
    fn gadget_agrees_with_genus() {
        for d in all_diagrams_up_to(6) {
            let g = chord_diagram_to_framed(&d);
            let planar = is_planar_framed(&g);
            assert_eq!(planar, genus_min(&g).unwrap() == 0, "{d}");
            if planar {
                assert!(parities(&d).iter().all(|p| *p == crate::parity::Parity::Even), "{d}");
            }
        }
    }
}
