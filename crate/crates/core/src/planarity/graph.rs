//! Abstract multigraphs.

use std::fmt::Write;

use crate::error::{Error, Result};

/// An undirected multigraph on `0..n`. Loops and parallel edges are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Edges `(u, v)` with `u <= v`, in input order.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            norm.push((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: norm })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut e = self.edges.clone();
        e.sort();
        !self.has_loops() && e.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Neighbor lists as `(neighbor, edge index)`. A loop appears twice.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph { n: self.n, edges }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph { n: a + b, edges }
    }

    /// Two triangles joined by a perfect matching.
    pub fn prism() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &e).unwrap()
    }

    /// `k4`, `k5`, `k33`, `prism` or `petersen`.
    pub fn named(name: &str) -> Result<Graph> {
        match name.to_ascii_lowercase().as_str() {
            "k4" => Ok(Graph::complete(4)),
            "k5" => Ok(Graph::complete(5)),
            "k33" | "k3,3" => Ok(Graph::complete_bipartite(3, 3)),
            "prism" => Ok(Graph::prism()),
            "petersen" => Ok(Graph::petersen()),
            other => Err(Error::InvalidInput(format!("unknown graph `{other}`"))),
        }
    }

    /// Parses `tg <n>` (or `g <n>`) followed by `e <u> <v>` lines. `#`
    /// starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::parse(Some(line_no), format!("bad number `{s}`")))
            };
            match (fields[0], n) {
                ("tg" | "g", None) if fields.len() == 2 => n = Some(num(fields[1])?),
                ("tg" | "g", _) => return Err(Error::parse(Some(line_no), "malformed or repeated header")),
                ("e", Some(count)) if fields.len() == 3 => {
                    let (u, v) = (num(fields[1])?, num(fields[2])?);
                    if u >= count || v >= count {
                        return Err(Error::parse(Some(line_no), format!("vertex out of range 0..{count}")));
                    }
                    edges.push((u, v));
                }
                ("e", None) => return Err(Error::parse(Some(line_no), "edge before header")),
                _ => return Err(Error::parse(Some(line_no), format!("unexpected `{line}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::parse(None, "missing `tg <n>` header"))?;
        Graph::new(n, &edges)
    }

    pub fn to_text(&self, header: &str) -> String {
        let mut s = format!("{header} {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }
}
