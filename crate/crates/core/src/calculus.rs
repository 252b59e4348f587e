//! Plumbing calculus: blow-ups, blow-downs and the normalization rewrite
//! system.
//!
//! `normalize` applies four rewrites until none matches:
//!
//! * **R2** a weight-0 leaf is deleted together with its neighbour. The
//!   neighbour's remaining branches become separate components (connected
//!   summands).
//! * **R1** a leaf of weight `w >= 1` has its incident edge blown up `w`
//!   times in succession. This turns the leaf into a weight-0 leaf hanging
//!   off a fresh `-1` vertex, which R2 then removes; the net effect is a
//!   chain of `w - 1` vertices of weight `-2` and the old neighbour's weight
//!   lowered by one.
//! * **R3** a `±1` vertex of valency at most two is blown down.
//! * **R4** a weight-0 vertex of valency two is absorbed: it is deleted and
//!   its two neighbours are merged, weights adding.
//!
//! Priority is R2 > R1 > R3 > R4, ties broken by lowest vertex id. R1 has
//! to run as one macro step ahead of R3, otherwise R3 would immediately blow
//! down the `-1` vertex that R1 just created.
//!
//! Termination: R2, R3 and R4 each remove at least one vertex; R1 removes a
//! positive leaf and only lowers weights elsewhere. A step budget guards the
//! loop regardless.

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::graph::{PlumbingGraph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSite {
    AtVertex(VertexId),
    AtEdge(VertexId, VertexId),
}

/// Which rewrite a normalization step applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    ZeroLeaf,
    PositiveLeaf,
    BlowDown,
    ZeroAbsorb,
}

impl PlumbingGraph {
    /// Blow up at `site`, returning the id of the new `-1` vertex.
    pub fn blow_up(&mut self, site: MoveSite) -> Result<VertexId> {
        match site {
            MoveSite::AtVertex(v) => {
                if !self.contains(v) {
                    return Err(Error::UnknownVertex(v));
                }
                self.add_weight(v, -1);
                let n = self.push_vertex(-1);
                self.add_edge(v, n)?;
                Ok(n)
            }
            MoveSite::AtEdge(u, v) => {
                self.remove_edge(u, v)?;
                self.add_weight(u, -1);
                self.add_weight(v, -1);
                let n = self.push_vertex(-1);
                self.add_edge(u, n)?;
                self.add_edge(n, v)?;
                Ok(n)
            }
        }
    }

    /// Blow down a `±1` vertex of valency at most two. Neighbours shift by
    /// `∓1` and, for valency two, become adjacent.
    pub fn blow_down(&mut self, v: VertexId) -> Result<()> {
        let w = self.weight(v).ok_or(Error::UnknownVertex(v))?;
        if w != -1 && w != 1 {
            return Err(Error::BlowDown {
                vertex: v,
                reason: format!("weight {w} is not ±1"),
            });
        }
        let nbrs: Vec<VertexId> = self.neighbors(v).collect();
        if nbrs.len() > 2 {
            return Err(Error::BlowDown {
                vertex: v,
                reason: format!("valency {} exceeds 2", nbrs.len()),
            });
        }
        self.remove_vertex(v)?;
        for &u in &nbrs {
            self.add_weight(u, -w);
        }
        if let [a, b] = nbrs[..] {
            self.add_edge(a, b)?;
        }
        Ok(())
    }
}

pub fn blow_up(g: &PlumbingGraph, site: MoveSite) -> Result<PlumbingGraph> {
    let mut out = g.clone();
    out.blow_up(site)?;
    Ok(out)
}

pub fn blow_down(g: &PlumbingGraph, v: VertexId) -> Result<PlumbingGraph> {
    let mut out = g.clone();
    out.blow_down(v)?;
    Ok(out)
}

/// Normalize with the deterministic lowest-id tie-break.
pub fn normalize(g: &PlumbingGraph) -> Result<PlumbingGraph> {
    normalize_with(g, |_| 0)
}

/// Normalize, letting `pick` choose which of the (sorted) candidate vertices
/// the highest-priority applicable rule acts on.
pub fn normalize_with<F>(g: &PlumbingGraph, mut pick: F) -> Result<PlumbingGraph>
where
    F: FnMut(&[VertexId]) -> usize,
{
    let mut g = g.clone();
    let budget = 10_000 + 100 * (g.len() + g.weighted_vertices().map(|(_, w)| w.unsigned_abs() as usize).sum::<usize>());
    for _ in 0..budget {
        if step(&mut g, &mut pick)?.is_none() {
            return Ok(g);
        }
    }
    Err(Error::NoFixedPoint(budget))
}

/// Apply one rewrite, returning the rule used, or `None` at a fixed point.
fn step<F>(g: &mut PlumbingGraph, pick: &mut F) -> Result<Option<Rule>>
where
    F: FnMut(&[VertexId]) -> usize,
{
    let choose = |cands: &[VertexId], pick: &mut F| cands[pick(cands).min(cands.len() - 1)];

    let zero_leaves: Vec<_> = g
        .weighted_vertices()
        .filter(|&(v, w)| w == 0 && g.valency(v) == 1)
        .map(|(v, _)| v)
        .collect();
    if !zero_leaves.is_empty() {
        let v = choose(&zero_leaves, pick);
        let u = g.neighbors(v).next().expect("leaf has a neighbour");
        g.remove_vertex(v)?;
        g.remove_vertex(u)?;
        return Ok(Some(Rule::ZeroLeaf));
    }

    let positive_leaves: Vec<_> = g
        .weighted_vertices()
        .filter(|&(v, w)| w >= 1 && g.valency(v) == 1)
        .map(|(v, _)| v)
        .collect();
    if !positive_leaves.is_empty() {
        let leaf = choose(&positive_leaves, pick);
        let w = g.weight(leaf).unwrap();
        let mut inner = g.neighbors(leaf).next().unwrap();
        for _ in 0..w {
            inner = g.blow_up(MoveSite::AtEdge(inner, leaf))?;
        }
        return Ok(Some(Rule::PositiveLeaf));
    }

    let units: Vec<_> = g
        .weighted_vertices()
        .filter(|&(v, w)| (w == -1 || w == 1) && g.valency(v) <= 2)
        .map(|(v, _)| v)
        .collect();
    if !units.is_empty() {
        let v = choose(&units, pick);
        g.blow_down(v)?;
        return Ok(Some(Rule::BlowDown));
    }

    let zero_links: Vec<_> = g
        .weighted_vertices()
        .filter(|&(v, w)| w == 0 && g.valency(v) == 2)
        .map(|(v, _)| v)
        .collect();
    if !zero_links.is_empty() {
        let v = choose(&zero_links, pick);
        let nbrs: Vec<_> = g.neighbors(v).collect();
        let (keep, gone) = (nbrs[0].min(nbrs[1]), nbrs[0].max(nbrs[1]));
        g.remove_vertex(v)?;
        let others: Vec<_> = g.neighbors(gone).collect();
        let gone_weight = g.remove_vertex(gone)?;
        g.add_weight(keep, gone_weight);
        for x in others {
            g.add_edge(keep, x)?;
        }
        return Ok(Some(Rule::ZeroAbsorb));
    }

    if let Some((v, w)) = g.weighted_vertices().find(|&(v, w)| w > 0 && g.valency(v) >= 2) {
        return Err(Error::PositiveInterior {
            vertex: v,
            weight: w,
            valency: g.valency(v),
        });
    }
    Ok(None)
}

/// True iff repeatedly blowing down `-1` vertices of valency at most two
/// empties the graph.
pub fn is_smooth_graph(g: &PlumbingGraph) -> bool {
    let mut g = g.clone();
    loop {
        let Some(v) = g.vertices().find(|&v| g.weight(v) == Some(-1) && g.valency(v) <= 2) else {
            break;
        };
        g.blow_down(v).expect("candidate is a valid blow-down");
    }
    g.is_empty()
}

/// Pick a uniformly random vertex or edge of `g` as a blow-up site.
pub fn random_site<R: Rng>(g: &PlumbingGraph, rng: &mut R) -> Option<MoveSite> {
    let vertices: Vec<_> = g.vertices().collect();
    let edges: Vec<_> = g.edges().collect();
    let total = vertices.len() + edges.len();
    if total == 0 {
        return None;
    }
    let i = rng.gen_range(0..total);
    Some(if i < vertices.len() {
        MoveSite::AtVertex(vertices[i])
    } else {
        let (u, v) = edges[i - vertices.len()];
        MoveSite::AtEdge(u, v)
    })
}

/// Apply `steps` random blow-ups to `g`.
pub fn random_blowups<R: Rng>(g: &mut PlumbingGraph, steps: usize, rng: &mut R) {
    for _ in 0..steps {
        if let Some(site) = random_site(g, rng) {
            g.blow_up(site).expect("random site is valid");
        }
    }
}

/// Place `arrows` arrowheads on uniformly random vertices.
pub fn random_decoration<R: Rng>(g: PlumbingGraph, arrows: usize, rng: &mut R) -> DecoratedGraph {
    let vertices: Vec<_> = g.vertices().collect();
    let mut dg = DecoratedGraph::new(g);
    for _ in 0..arrows {
        let v = vertices[rng.gen_range(0..vertices.len())];
        dg.add_arrows(v, 1).expect("vertex exists");
    }
    dg
}

/// A smooth graph built from `[-1]` by `steps` pseudo-random blow-ups, with
/// `arrows` arrowheads on pseudo-random vertices. Deterministic in `seed`.
pub fn random_smooth_decorated(seed: u64, steps: usize, arrows: usize) -> DecoratedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = PlumbingGraph::chain(&[-1]);
    random_blowups(&mut g, steps, &mut rng);
    random_decoration(g, arrows, &mut rng)
}
