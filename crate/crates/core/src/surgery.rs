//! Surgery plumbing graphs: torus-link resolution graphs, branch
//! multiplicities, and the leg construction turning a decorated graph plus
//! integral coefficients into the plumbing graph of the surgery manifold.
//!
//! Each arrowhead on a vertex `E_i` is replaced by a new leaf of weight
//! `k = d - m_i`, where `d` is the surgery coefficient of that component and
//! `m_i` its multiplicity on `E_i`.

use crate::calculus::MoveSite;
use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::graph::{PlumbingGraph, VertexId};
use crate::matrix::bareiss_determinant;
use num_integer::Integer;
use std::collections::BTreeMap;

/// Integral surgery on the `(pr, qr)` torus link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurgerySpec {
    pub p: i64,
    pub q: i64,
    pub d: Vec<i64>,
}

impl SurgerySpec {
    pub fn new(p: i64, q: i64, d: Vec<i64>) -> Result<Self> {
        validate_torus(p, q, d.len())?;
        Ok(Self { p, q, d })
    }

    /// Number of link components.
    pub fn r(&self) -> usize {
        self.d.len()
    }

    pub fn pq(&self) -> i64 {
        self.p * self.q
    }

    /// Shifted coefficients `k_i = d_i - pq`.
    pub fn k(&self) -> Vec<i64> {
        self.d.iter().map(|d| d - self.pq()).collect()
    }
}

fn validate_torus(p: i64, q: i64, r: usize) -> Result<()> {
    if p <= 1 || q <= 1 || r == 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidTorus { p, q, r });
    }
    Ok(())
}

/// A decorated graph together with the multiplicity vector of the branch
/// carried by each decorated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionData {
    pub decorated: DecoratedGraph,
    /// For each arrow-supporting vertex `v`: the multiplicities, over all
    /// vertices, of a branch whose strict transform meets `E_v`.
    pub multiplicities: BTreeMap<VertexId, BTreeMap<VertexId, i64>>,
}

impl ResolutionData {
    /// Compute multiplicities for every decorated vertex of `dg`.
    pub fn from_decorated(dg: DecoratedGraph) -> Result<Self> {
        let multiplicities = dg
            .arrow_counts()
            .map(|(v, _)| Ok((v, multiplicities(&dg, v)?)))
            .collect::<Result<_>>()?;
        Ok(Self {
            decorated: dg,
            multiplicities,
        })
    }

    /// `m_i`: multiplicity of a branch through `E_v` on `E_v` itself.
    pub fn own_multiplicity(&self, v: VertexId) -> Option<i64> {
        self.multiplicities.get(&v).map(|m| m[&v])
    }

    /// Linking number of branches through `E_u` and `E_v`.
    pub fn linking_number(&self, u: VertexId, v: VertexId) -> Option<i64> {
        self.multiplicities.get(&u).map(|m| m[&v])
    }

    /// Linking matrix of the surgery: coefficients on the diagonal,
    /// pairwise linking numbers off it. Rows follow
    /// [`DecoratedGraph::arrow_sites`].
    pub fn linking_matrix(&self, d: &[i64]) -> Result<Vec<Vec<i64>>> {
        let sites = self.decorated.arrow_sites();
        check_arity(sites.len(), d.len())?;
        Ok((0..sites.len())
            .map(|i| {
                (0..sites.len())
                    .map(|j| {
                        if i == j {
                            d[i]
                        } else {
                            self.linking_number(sites[i], sites[j]).unwrap()
                        }
                    })
                    .collect()
            })
            .collect())
    }

    pub fn linking_determinant(&self, d: &[i64]) -> Result<i128> {
        let m = self.linking_matrix(d)?;
        Ok(bareiss_determinant(
            m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect(),
        ))
    }
}

fn check_arity(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::Arity { expected, got });
    }
    Ok(())
}

/// Multiplicities of a branch meeting `E_site`: the solution of
/// `I m = -e_site`.
pub fn multiplicities(dg: &DecoratedGraph, site: VertexId) -> Result<BTreeMap<VertexId, i64>> {
    if dg.arrows_at(site) == 0 {
        return Err(Error::NoArrow(site));
    }
    let form = dg.graph().intersection_matrix();
    let rhs: Vec<i128> = form.ids().iter().map(|&v| if v == site { -1 } else { 0 }).collect();
    let solution = form.solve(&rhs).ok_or(Error::Singular)?;
    form.ids()
        .iter()
        .zip(solution)
        .map(|(&v, m)| {
            if !m.is_integer() {
                return Err(Error::NonIntegralMultiplicity(v));
            }
            Ok((v, i64::try_from(m.numer()).expect("multiplicity fits in i64")))
        })
        .collect()
}

/// Minimal embedded resolution of `x^p = y^q` with `r` arrowheads on the
/// final `-1` curve, i.e. the resolution graph of the `(pr, qr)` torus link.
///
/// Blow-ups are simulated along the subtractive Euclidean algorithm: at
/// each step the curve looks locally like `x^a = y^b` with the two axes
/// being earlier exceptional curves (or the original coordinate lines).
pub fn torus_resolution(p: i64, q: i64, r: usize) -> Result<ResolutionData> {
    validate_torus(p, q, r)?;
    let mut g = PlumbingGraph::new();
    let (mut a, mut b) = (p, q);
    let (mut x_axis, mut y_axis): (Option<VertexId>, Option<VertexId>) = (None, None);
    let last = loop {
        let e = g.push_vertex(-1);
        for axis in [x_axis, y_axis].into_iter().flatten() {
            g.add_weight(axis, -1);
        }
        if let (Some(u), Some(v)) = (x_axis, y_axis) {
            if g.has_edge(u, v) {
                g.remove_edge(u, v)?;
            }
        }
        for axis in [x_axis, y_axis].into_iter().flatten() {
            g.add_edge(axis, e)?;
        }
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => break e,
            std::cmp::Ordering::Less => {
                b -= a;
                y_axis = Some(e);
            }
            std::cmp::Ordering::Greater => {
                a -= b;
                x_axis = Some(e);
            }
        }
    };
    let dg = DecoratedGraph::new(g).with_arrows(last, r)?;
    ResolutionData::from_decorated(dg)
}

/// Plumbing graph of the surgery on the link encoded by `res`, with one
/// coefficient per arrowhead in [`DecoratedGraph::arrow_sites`] order.
pub fn surgery_graph(res: &ResolutionData, d: &[i64]) -> Result<PlumbingGraph> {
    let sites = res.decorated.arrow_sites();
    check_arity(sites.len(), d.len())?;
    let mut g = res.decorated.graph().clone();
    for (&site, &coefficient) in sites.iter().zip(d) {
        let k = coefficient - res.own_multiplicity(site).expect("multiplicities cover every site");
        let leg = g.push_vertex(k);
        g.add_edge(site, leg)?;
    }
    Ok(g)
}

/// Surgery graph for a torus-link surgery spec.
pub fn torus_surgery_graph(spec: &SurgerySpec) -> Result<PlumbingGraph> {
    let res = torus_resolution(spec.p, spec.q, spec.r())?;
    surgery_graph(&res, &spec.d)
}

/// The `E_8` plumbing (all weights `-2`), bounding the Poincaré homology
/// sphere `Σ(2,3,5)`.
pub fn poincare_graph() -> PlumbingGraph {
    PlumbingGraph::star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]])
}

/// Blow up `g` at each of `sites` in turn.
pub fn blown_up(mut g: PlumbingGraph, sites: &[MoveSite]) -> Result<PlumbingGraph> {
    for &site in sites {
        g.blow_up(site)?;
    }
    Ok(g)
}
