use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::planarity::Graph;

/// A connected multigraph in which every vertex has degree three.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrivalentGraph {
    graph: Graph,
}

impl TrivalentGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        if let Some(v) = graph.degrees().iter().position(|&d| d != 3) {
            return Err(Error::InvalidInput(format!(
                "vertex {v} has degree {}, expected 3",
                graph.degrees()[v]
            )));
        }
        if graph.vertex_count() == 0 || !graph.is_connected() {
            return Err(Error::InvalidInput("graph is not connected".into()));
        }
        Ok(TrivalentGraph { graph })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        TrivalentGraph::new(Graph::new(n, edges)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        TrivalentGraph::new(Graph::parse(text)?)
    }

    /// `k4`, `k33`, `prism` or `petersen`.
    pub fn named(name: &str) -> Result<Self> {
        TrivalentGraph::new(Graph::named(name)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn to_text(&self) -> String {
        self.graph.to_text("tg")
    }
}

/// A seeded random simple connected cubic graph from the pairing model.
/// Outcomes with loops, parallel edges or several components are redrawn.
pub fn random_cubic(n: usize, seed: u64) -> Result<TrivalentGraph> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidInput(format!("cubic graphs need an even n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).collect();
    loop {
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0] / 3, p[1] / 3)).collect();
        let g = Graph::new(n, &edges)?;
        if g.is_simple() && g.is_connected() {
            return TrivalentGraph::new(g);
        }
    }
}
