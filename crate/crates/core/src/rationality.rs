//! Rationality of negative definite plumbing graphs.
//!
//! A graph is rational iff its fundamental cycle `Z_min` has
//! `χ(Z_min) = 1`, where `χ(Z) = -(Z·Z + Z·K)/2` and, for genus-0 vertices,
//! `K·E_v = -E_v·E_v - 2`. `Z_min` is found by Laufer's computation
//! sequence: start from the reduced cycle `Σ E_v` and add `E_v` while some
//! `Z·E_v > 0`.

use crate::error::{Error, Result};
use crate::graph::{PlumbingGraph, VertexId};
use std::collections::BTreeMap;

/// Integer cycle `Σ z_v E_v` on the vertices of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Cycle(BTreeMap<VertexId, u64>);

impl Cycle {
    pub fn reduced(g: &PlumbingGraph) -> Self {
        Cycle(g.vertices().map(|v| (v, 1)).collect())
    }

    pub fn from_coefficients(coeffs: impl IntoIterator<Item = (VertexId, u64)>) -> Self {
        Cycle(coeffs.into_iter().collect())
    }

    pub fn coefficient(&self, v: VertexId) -> u64 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u64)> + '_ {
        self.0.iter().map(|(&v, &z)| (v, z))
    }

    /// `(Z, E_v)`.
    pub fn dot_vertex(&self, g: &PlumbingGraph, v: VertexId) -> i128 {
        let w = g.weight(v).expect("vertex of g") as i128;
        let own = w * self.coefficient(v) as i128;
        own + g.neighbors(v).map(|u| self.coefficient(u) as i128).sum::<i128>()
    }

    /// `(Z, Z)`.
    pub fn self_intersection(&self, g: &PlumbingGraph) -> i128 {
        self.iter().map(|(v, z)| z as i128 * self.dot_vertex(g, v)).sum()
    }

    /// `(Z, K)` with `K·E_v = -w_v - 2`.
    pub fn canonical_pairing(&self, g: &PlumbingGraph) -> i128 {
        self.iter()
            .map(|(v, z)| z as i128 * (-(g.weight(v).unwrap() as i128) - 2))
            .sum()
    }
}

fn check_connected_negative_definite(g: &PlumbingGraph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !g.is_negative_definite() {
        return Err(Error::NotNegativeDefinite);
    }
    Ok(())
}

/// Laufer's fundamental cycle, always stepping at the lowest eligible id.
pub fn fundamental_cycle(g: &PlumbingGraph) -> Result<Cycle> {
    fundamental_cycle_with(g, |_| 0)
}

/// Laufer's fundamental cycle; `pick` selects which of the vertices with
/// `Z·E_v > 0` is incremented next. The result does not depend on it.
pub fn fundamental_cycle_with<F>(g: &PlumbingGraph, mut pick: F) -> Result<Cycle>
where
    F: FnMut(&[VertexId]) -> usize,
{
    check_connected_negative_definite(g)?;
    let mut z = Cycle::reduced(g);
    loop {
        let positive: Vec<VertexId> = g.vertices().filter(|&v| z.dot_vertex(g, v) > 0).collect();
        if positive.is_empty() {
            return Ok(z);
        }
        let v = positive[pick(&positive).min(positive.len() - 1)];
        *z.0.get_mut(&v).unwrap() += 1;
    }
}

/// `χ(Z) = -(Z·Z + Z·K) / 2`.
pub fn euler_characteristic(g: &PlumbingGraph, z: &Cycle) -> i128 {
    let total = z.self_intersection(g) + z.canonical_pairing(g);
    debug_assert_eq!(total % 2, 0, "Z·Z + Z·K is always even");
    -total / 2
}

/// Artin's criterion `χ(Z_min) = 1`, evaluated on every component.
pub fn laufer_is_rational(g: &PlumbingGraph) -> Result<bool> {
    for comp in g.components() {
        let z = fundamental_cycle(&comp)?;
        if euler_characteristic(&comp, &z) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rationality of a negative definite graph. Valency bounds settle most
/// inputs; the rest go through Laufer's sequence.
pub fn is_rational(g: &PlumbingGraph) -> Result<bool> {
    for comp in g.components() {
        check_connected_negative_definite(&comp)?;
        let rational = match valency_bounds(&comp) {
            ValencyBounds::FailsNecessary => false,
            ValencyBounds::MinimalRational => true,
            ValencyBounds::Indeterminate => laufer_is_rational(&comp)?,
        };
        if !rational {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of comparing `w(v) = -weight` with the valency `γ(v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValencyBounds {
    /// Some `w(v) < γ(v) - 1`: not rational.
    FailsNecessary,
    /// Every `w(v) >= γ(v)`: minimal rational.
    MinimalRational,
    Indeterminate,
}

pub fn valency_bounds(g: &PlumbingGraph) -> ValencyBounds {
    let slack: Vec<i64> = g
        .weighted_vertices()
        .map(|(v, weight)| -weight - g.valency(v) as i64)
        .collect();
    if slack.iter().any(|&s| s < -1) {
        ValencyBounds::FailsNecessary
    } else if slack.iter().all(|&s| s >= 0) {
        ValencyBounds::MinimalRational
    } else {
        ValencyBounds::Indeterminate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4() -> PlumbingGraph {
        PlumbingGraph::star(-2, &[&[-2], &[-2], &[-2]])
    }

    #[test]
    fn fundamental_cycles() {
        let g = PlumbingGraph::chain(&[-2, -2]);
        assert_eq!(fundamental_cycle(&g).unwrap(), Cycle::reduced(&g));
        let z = fundamental_cycle(&d4()).unwrap();
        assert_eq!(z.coefficient(VertexId(0)), 2);
        assert!((1..4).all(|i| z.coefficient(VertexId(i)) == 1));
        assert!(d4().vertices().all(|v| z.dot_vertex(&d4(), v) <= 0));
    }

    #[test]
    fn euler_characteristics() {
        let g = PlumbingGraph::chain(&[-3]);
        assert_eq!(euler_characteristic(&g, &Cycle::reduced(&g)), 1);
        let g = PlumbingGraph::chain(&[-2, -2]);
        let z = Cycle::reduced(&g);
        assert_eq!(z.self_intersection(&g), -2);
        assert_eq!(z.canonical_pairing(&g), 0);
        assert_eq!(euler_characteristic(&g, &z), 1);
        let z = fundamental_cycle(&d4()).unwrap();
        assert_eq!(z.self_intersection(&d4()), -2);
        assert_eq!(euler_characteristic(&d4(), &z), 1);
    }

    #[test]
    fn single_vertex_cycles_have_chi_one() {
        let g = PlumbingGraph::star(-3, &[&[-2, -5], &[-4], &[-2]]);
        for v in g.vertices() {
            let e = Cycle::from_coefficients([(v, 1)]);
            assert_eq!(euler_characteristic(&g, &e), 1);
        }
    }

    #[test]
    fn rationality_examples() {
        let sigma237 = PlumbingGraph::star(-1, &[&[-2], &[-3], &[-7]]);
        assert!(!is_rational(&sigma237).unwrap());
        assert!(!laufer_is_rational(&sigma237).unwrap());
        assert_eq!(valency_bounds(&sigma237), ValencyBounds::FailsNecessary);
        for n in 1..8 {
            assert!(is_rational(&PlumbingGraph::chain(&vec![-2; n])).unwrap());
        }
        assert_eq!(valency_bounds(&PlumbingGraph::chain(&[-2, -2])), ValencyBounds::MinimalRational);
    }

    #[test]
    fn errors_on_bad_input() {
        let g = PlumbingGraph::chain(&[-1, -1]);
        assert_eq!(fundamental_cycle(&g), Err(Error::NotNegativeDefinite));
        let g = PlumbingGraph::from_parts([(0, -2), (1, -2)], []).unwrap();
        assert_eq!(fundamental_cycle(&g), Err(Error::NotConnected));
        assert_eq!(is_rational(&PlumbingGraph::chain(&[0])), Err(Error::NotNegativeDefinite));
    }
}
