//! The left cover graph on `V × G`.

use std::fmt::Write as _;

use crate::error::Result;
use crate::graph::{GainGraph, SimpleGraph};
use crate::group::Element;

/// A cover graph together with the `(vertex, element)` label of each node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph {
    pub graph: SimpleGraph,
    pub labels: Vec<(usize, Element)>,
}

/// Vertex `(v, x)` has index `v·|G| + x`; edge `(u, v)` with gain `g` lifts to
/// `{(u, g·x), (v, x)}` for every `x`, which is the 0/1 pattern of the
/// regular-representation transform of the adjacency matrix.
pub fn cover_graph(g: &GainGraph) -> Result<CoverGraph> {
    let grp = g.group();
    let order = grp.order();
    let mut edges = Vec::with_capacity(g.edge_count() * order);
    for (u, v, gain) in g.oriented_edges() {
        for x in grp.elements() {
            edges.push((u * order + grp.mul(gain, x), v * order + x));
        }
    }
    let labels = (0..g.vertex_count())
        .flat_map(|v| grp.elements().map(move |x| (v, x)))
        .collect();
    Ok(CoverGraph {
        graph: SimpleGraph::new(g.vertex_count() * order, &edges)?,
        labels,
    })
}

impl CoverGraph {
    /// `v@name` using 1-based base vertices.
    pub fn label(&self, g: &GainGraph, index: usize) -> String {
        let (v, x) = self.labels[index];
        format!("{}@{}", v + 1, g.group().name(x))
    }

    /// Gain-graph file over the trivial group, with a comment naming each
    /// vertex.
    pub fn to_text(&self, base: &GainGraph) -> String {
        let mut s = String::from("group cyclic 1\n");
        writeln!(s, "vertices {}", self.graph.vertex_count()).unwrap();
        for i in 0..self.graph.vertex_count() {
            writeln!(s, "# {} = {}", i + 1, self.label(base, i)).unwrap();
        }
        for &(a, b) in self.graph.edges() {
            writeln!(s, "edge {} {}", a + 1, b + 1).unwrap();
        }
        s
    }
}
