//! Plumbing graphs: weighted forests of genus-0 vertices.

use crate::error::{Error, Result};
use crate::matrix::IntersectionMatrix;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Order of the first homology group of a plumbed 3-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum H1Order {
    Finite(u128),
    /// `b_1 > 0`: the intersection form is degenerate.
    Infinite,
}

impl H1Order {
    pub fn from_determinant(det: i128) -> Self {
        if det == 0 {
            H1Order::Infinite
        } else {
            H1Order::Finite(det.unsigned_abs())
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, H1Order::Finite(_))
    }

    pub fn finite(&self) -> Option<u128> {
        match *self {
            H1Order::Finite(n) => Some(n),
            H1Order::Infinite => None,
        }
    }
}

impl Mul for H1Order {
    type Output = H1Order;
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (H1Order::Finite(a), H1Order::Finite(b)) => {
                H1Order::Finite(a.checked_mul(b).expect("homology order overflow"))
            }
            _ => H1Order::Infinite,
        }
    }
}

impl std::iter::Product for H1Order {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(H1Order::Finite(1), |a, b| a * b)
    }
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => f.write_str("inf"),
        }
    }
}

/// A plumbing graph: vertices carry Euler numbers, edges are positive
/// transverse intersections, and the underlying graph is a forest.
///
/// The forest invariant is enforced on every insertion, so a value of this
/// type is always valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlumbingGraph {
    weights: BTreeMap<VertexId, i64>,
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(
        vertices: impl IntoIterator<Item = (u32, i64)>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for (id, w) in vertices {
            g.add_vertex(VertexId(id), w)?;
        }
        for (u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    /// Linear chain with the given weights, ids `0..n`.
    pub fn chain(weights: &[i64]) -> Self {
        let mut g = Self::new();
        let mut prev = None;
        for &w in weights {
            let v = g.push_vertex(w);
            if let Some(u) = prev {
                g.add_edge(u, v).expect("chain is a tree");
            }
            prev = Some(v);
        }
        g
    }

    /// Star with a central vertex (id 0) and one chain per leg, each leg
    /// listed from the centre outward.
    pub fn star(center: i64, legs: &[&[i64]]) -> Self {
        let mut g = Self::new();
        let c = g.push_vertex(center);
        for leg in legs {
            let mut prev = c;
            for &w in leg.iter() {
                let v = g.push_vertex(w);
                g.add_edge(prev, v).expect("star is a tree");
                prev = v;
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.weights.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.weights.keys().copied()
    }

    /// `(id, weight)` pairs in increasing id order.
    pub fn weighted_vertices(&self) -> impl Iterator<Item = (VertexId, i64)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn weight(&self, v: VertexId) -> Option<i64> {
        self.weights.get(&v).copied()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn valency(&self, v: VertexId) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Smallest id not yet in use (one past the current maximum).
    pub fn next_id(&self) -> VertexId {
        self.weights
            .keys()
            .next_back()
            .map_or(VertexId(0), |v| VertexId(v.0 + 1))
    }

    pub fn add_vertex(&mut self, id: VertexId, weight: i64) -> Result<()> {
        if self.weights.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        self.weights.insert(id, weight);
        self.adjacency.insert(id, BTreeSet::new());
        Ok(())
    }

    /// Add a vertex with a fresh id and return the id.
    pub fn push_vertex(&mut self, weight: i64) -> VertexId {
        let id = self.next_id();
        self.add_vertex(id, weight).expect("fresh id");
        id
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.connected(u, v) {
            return Err(Error::Cycle(u, v));
        }
        self.adjacency.get_mut(&u).unwrap().insert(v);
        self.adjacency.get_mut(&v).unwrap().insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        self.adjacency.get_mut(&u).unwrap().remove(&v);
        self.adjacency.get_mut(&v).unwrap().remove(&u);
        Ok(())
    }

    pub(crate) fn add_weight(&mut self, v: VertexId, delta: i64) {
        *self.weights.get_mut(&v).expect("vertex exists") += delta;
    }

    /// Remove a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<i64> {
        let w = self.weights.remove(&v).ok_or(Error::UnknownVertex(v))?;
        for u in self.adjacency.remove(&v).unwrap_or_default() {
            self.adjacency.get_mut(&u).unwrap().remove(&v);
        }
        Ok(w)
    }

    fn connected(&self, u: VertexId, v: VertexId) -> bool {
        self.component_of(u).contains(&v)
    }

    fn component_of(&self, start: VertexId) -> BTreeSet<VertexId> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.component_of(v).len() == self.len(),
        }
    }

    /// Subgraph induced on `keep`; ids and weights are preserved.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Self {
        let weights: BTreeMap<_, _> = self
            .weights
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, &w)| (v, w))
            .collect();
        let adjacency = weights
            .keys()
            .map(|&v| {
                let ns = self.adjacency[&v].iter().filter(|u| keep.contains(u)).copied().collect();
                (v, ns)
            })
            .collect();
        Self { weights, adjacency }
    }

    /// Connected components in order of their smallest vertex id. The empty
    /// graph has no components.
    pub fn components(&self) -> Vec<PlumbingGraph> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.component_of(v);
            seen.extend(comp.iter().copied());
            out.push(self.induced(&comp));
        }
        out
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let ids: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let mut entries = vec![0i64; n * n];
        for (i, &v) in ids.iter().enumerate() {
            entries[i * n + i] = self.weights[&v];
            for u in self.neighbors(v) {
                entries[i * n + index[&u]] = 1;
            }
        }
        IntersectionMatrix::from_parts(ids, entries)
    }

    pub fn determinant(&self) -> i128 {
        self.intersection_matrix().determinant()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.intersection_matrix().is_negative_definite()
    }

    /// `|H_1|` of the plumbed 3-manifold: `|det|`, with zero reported as
    /// [`H1Order::Infinite`]. The empty graph bounds `S^3`.
    pub fn h1_order(&self) -> H1Order {
        H1Order::from_determinant(self.determinant())
    }

    /// Isomorphism invariant of a weighted forest: sorted AHU encodings of
    /// its components, each rooted at its tree centre(s).
    pub fn canonical_form(&self) -> String {
        let mut parts: Vec<String> = self.components().iter().map(|c| c.tree_code()).collect();
        parts.sort();
        parts.join("|")
    }

    pub fn is_isomorphic(&self, other: &PlumbingGraph) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }

    fn tree_code(&self) -> String {
        self.centers()
            .into_iter()
            .map(|c| self.rooted_code(c, None))
            .min()
            .unwrap_or_default()
    }

    fn centers(&self) -> Vec<VertexId> {
        let mut degree: BTreeMap<VertexId, usize> = self.vertices().map(|v| (v, self.valency(v))).collect();
        let mut layer: Vec<VertexId> = degree.iter().filter(|(_, &d)| d <= 1).map(|(&v, _)| v).collect();
        let mut remaining = self.len();
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for u in self.neighbors(leaf) {
                    let d = degree.get_mut(&u).unwrap();
                    if *d > 0 {
                        *d -= 1;
                        if *d == 1 {
                            next.push(u);
                        }
                    }
                }
                degree.insert(leaf, 0);
            }
            layer = next;
        }
        layer
    }

    fn rooted_code(&self, v: VertexId, parent: Option<VertexId>) -> String {
        let mut children: Vec<String> = self
            .neighbors(v)
            .filter(|&u| Some(u) != parent)
            .map(|u| self.rooted_code(u, Some(v)))
            .collect();
        children.sort();
        format!("({}{})", self.weights[&v], children.concat())
    }
}
