use crate::calculus::MoveSite;
use crate::error::{Error, Result};
use crate::graph::{PlumbingGraph, VertexId};
use std::collections::BTreeMap;

/// A plumbing graph with arrowheads (link components) attached to some of
/// its vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecoratedGraph {
    graph: PlumbingGraph,
    arrows: BTreeMap<VertexId, usize>,
}

impl DecoratedGraph {
    pub fn new(graph: PlumbingGraph) -> Self {
        Self {
            graph,
            arrows: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    pub fn into_graph(self) -> PlumbingGraph {
        self.graph
    }

    pub fn add_arrows(&mut self, v: VertexId, count: usize) -> Result<()> {
        if !self.graph.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        if count > 0 {
            *self.arrows.entry(v).or_default() += count;
        }
        Ok(())
    }

    pub fn with_arrows(mut self, v: VertexId, count: usize) -> Result<Self> {
        self.add_arrows(v, count)?;
        Ok(self)
    }

    pub fn arrows_at(&self, v: VertexId) -> usize {
        self.arrows.get(&v).copied().unwrap_or(0)
    }

    /// `(vertex, count)` for every vertex carrying at least one arrowhead.
    pub fn arrow_counts(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.arrows.iter().map(|(&v, &n)| (v, n))
    }

    pub fn total_arrows(&self) -> usize {
        self.arrows.values().sum()
    }

    /// Supporting vertex of each arrowhead, in vertex-id order and, within a
    /// vertex, declaration order. Surgery coefficients are matched to
    /// arrowheads in this order.
    pub fn arrow_sites(&self) -> Vec<VertexId> {
        self.arrows
            .iter()
            .flat_map(|(&v, &n)| std::iter::repeat(v).take(n))
            .collect()
    }

    /// Blow up the underlying graph; arrowheads stay on their vertices.
    pub fn blow_up(&mut self, site: MoveSite) -> Result<VertexId> {
        self.graph.blow_up(site)
    }

    /// Blow down an undecorated vertex.
    pub fn blow_down(&mut self, v: VertexId) -> Result<()> {
        if self.arrows_at(v) > 0 {
            return Err(Error::BlowDown {
                vertex: v,
                reason: "vertex carries an arrowhead".into(),
            });
        }
        self.graph.blow_down(v)
    }
}
