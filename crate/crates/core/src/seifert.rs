//! Seifert invariants of star-shaped graphs and the L-space test for
//! Seifert fibred rational homology spheres over `S^2`.
//!
//! A leg with weights `-a_1, …, -a_s` (read from the centre outward)
//! contributes `1 / [a_1, …, a_s]` to the orbifold Euler number, where
//! `[a_1, …, a_s] = a_1 - 1/(a_2 - 1/(…))` is the negative continued
//! fraction. Integer parts of the contributions are absorbed into the central
//! weight `e_0`, leaving fibre invariants `0 < α_i < 1`.
//!
//! With `k` fibres and the orientation chosen so that `e_orb < 0`, the
//! manifold is an L-space exactly when
//!
//! * `k <= 2` (a lens space), or
//! * `e_0 <= -k`, or
//! * `e_0 = -1` and there is no coprime `(l, m)` with
//!   `m α_1 < l < m (1 - α_2)` and `m α_i < 1` for `i >= 3`, or
//! * `e_0 = 1 - k`, and the same inequality has no solution for the reversed
//!   orientation, whose invariants are `e_0 = -1`, `1 - α_i`.
//!
//! For `-k < e_0 < -1` outside the last case it is not an L-space.

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::graph::{H1Order, PlumbingGraph, VertexId};
use crate::verdict::Verdict;

/// Shape of a connected graph as seen by the Seifert machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarShape {
    /// The unique vertex of valency at least three.
    Star(VertexId),
    /// No branch vertex; the id is the lowest vertex, used as a nominal
    /// centre.
    Chain(VertexId),
}

impl StarShape {
    pub fn center(&self) -> VertexId {
        match *self {
            StarShape::Star(v) | StarShape::Chain(v) => v,
        }
    }
}

/// `None` for the empty graph or when two or more branch vertices exist.
pub fn star_center(g: &PlumbingGraph) -> Option<StarShape> {
    let mut branches = g.vertices().filter(|&v| g.valency(v) >= 3);
    match (branches.next(), branches.next()) {
        (Some(c), None) => Some(StarShape::Star(c)),
        (None, _) => g.vertices().next().map(StarShape::Chain),
        _ => None,
    }
}

/// Normalized Seifert invariants, in the orientation with `e_orb < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    /// Central weight `e_0` after absorbing integer parts.
    pub central: i64,
    /// Fibre invariants `α_i`, all in `(0, 1)`, sorted descending.
    pub fibers: Vec<Fraction>,
    /// Orbifold Euler number `e_0 + Σ α_i`, always negative.
    pub e_orb: Fraction,
    /// Whether the orientation of the input graph had to be reversed.
    pub flipped: bool,
}

impl SeifertData {
    /// Invariants of the same manifold with the opposite orientation. The
    /// result has `e_orb > 0`, so it is no longer in normal form.
    pub fn reversed(&self) -> SeifertData {
        let mut fibers: Vec<Fraction> = self.fibers.iter().map(|&a| Fraction::ONE - a).collect();
        fibers.sort_by(|a, b| b.cmp(a));
        SeifertData {
            central: -self.central - self.fibers.len() as i64,
            fibers,
            e_orb: -self.e_orb,
            flipped: !self.flipped,
        }
    }

    /// `|H_1| = (Π denominators of α_i) · |e_orb|`.
    pub fn h1_order(&self) -> H1Order {
        let denominators = self.fibers.iter().fold(Fraction::ONE, |acc, a| acc * Fraction::integer(a.denom()));
        let value = denominators * self.e_orb;
        debug_assert!(value.is_integer());
        H1Order::from_determinant(value.numer())
    }

    /// Fibre invariants of whichever orientation has central weight `-1`,
    /// if either does.
    pub fn minus_one_form(&self) -> Option<Vec<Fraction>> {
        if self.central == -1 {
            Some(self.fibers.clone())
        } else {
            let rev = self.reversed();
            (rev.central == -1).then_some(rev.fibers)
        }
    }
}

/// Continuant pair `(K(a_1..a_s), K(a_2..a_s))` for a leg, so that the leg's
/// continued fraction equals their ratio.
fn leg_continuants(a: &[i128]) -> (i128, i128) {
    let (mut hi, mut lo) = (1i128, 0i128);
    for &x in a.iter().rev() {
        let next = x.checked_mul(hi).and_then(|t| t.checked_sub(lo)).expect("continuant overflow");
        lo = hi;
        hi = next;
    }
    (hi, lo)
}

fn legs(g: &PlumbingGraph, center: VertexId) -> Vec<(VertexId, Vec<i64>)> {
    g.neighbors(center)
        .map(|first| {
            let mut weights = Vec::new();
            let (mut prev, mut cur) = (center, first);
            loop {
                weights.push(g.weight(cur).unwrap());
                match g.neighbors(cur).find(|&u| u != prev) {
                    Some(next) => {
                        prev = cur;
                        cur = next;
                    }
                    None => break,
                }
            }
            (first, weights)
        })
        .collect()
}

/// Contribution `1 / [a_1, …, a_s]` of every leg at `center`, keyed by the
/// leg's first vertex.
pub fn leg_contributions(g: &PlumbingGraph, center: VertexId) -> Result<Vec<(VertexId, Fraction)>> {
    legs(g, center)
        .into_iter()
        .map(|(first, weights)| {
            let a: Vec<i128> = weights.iter().map(|&w| -(w as i128)).collect();
            let (num, den) = leg_continuants(&a);
            if num == 0 {
                return Err(Error::DegenerateLeg(first));
            }
            Ok((first, Fraction::new(den, num)))
        })
        .collect()
}

/// Seifert invariants of a connected star-shaped graph (or chain), or
/// `None` when `e_orb = 0`.
pub fn seifert_data(g: &PlumbingGraph) -> Result<Option<SeifertData>> {
    if !g.is_connected() || g.is_empty() {
        return Err(Error::NotConnected);
    }
    let center = star_center(g).ok_or(Error::NotStarShaped)?.center();
    let mut central = g.weight(center).unwrap() as i128;
    let mut e_orb = Fraction::integer(central);
    let mut fibers = Vec::new();
    for (_, contribution) in leg_contributions(g, center)? {
        e_orb = e_orb + contribution;
        central += contribution.floor();
        let alpha = contribution.fract();
        if !alpha.is_zero() {
            fibers.push(alpha);
        }
    }
    if e_orb.is_zero() {
        return Ok(None);
    }
    fibers.sort_by(|a, b| b.cmp(a));
    let data = SeifertData {
        central: i64::try_from(central).expect("central weight fits in i64"),
        fibers,
        e_orb,
        flipped: false,
    };
    Ok(Some(if e_orb > Fraction::ZERO { data.reversed() } else { data }))
}

/// Reduced fraction of least denominator strictly between `lo` and `hi`,
/// found by descending the Stern–Brocot tree. `None` iff `lo >= hi`.
///
/// When the interval contains integers, the smallest one is returned.
pub fn min_denominator_fraction(lo: Fraction, hi: Fraction) -> Option<Fraction> {
    (lo < hi).then(|| simplest_between(lo, hi))
}

fn simplest_between(lo: Fraction, hi: Fraction) -> Fraction {
    let n = lo.floor();
    let next = Fraction::integer(n + 1);
    if next < hi {
        return next;
    }
    // lo and hi lie in [n, n + 1]; recurse on reciprocals of the offsets.
    let base = Fraction::integer(n);
    let (lo_off, hi_off) = (lo - base, hi - base);
    let upper = hi_off.recip();
    let y = if lo_off.is_zero() {
        Fraction::integer(upper.floor() + 1)
    } else {
        simplest_between(upper, lo_off.recip())
    };
    base + y.recip()
}

/// A coprime witness `(l, m)` to `m α_1 < l < m (1 - α_2)` with
/// `m α_i < 1` for `i >= 3`, for fibres sorted descending around a central
/// `-1` vertex. `None` when no such pair exists.
///
/// Only the least-denominator fraction in `(α_1, 1 - α_2)` needs checking:
/// every other candidate has a larger `m`, which makes `m α_i < 1` harder.
pub fn ls_obstruction(fibers: &[Fraction]) -> Option<(i128, i128)> {
    let a1 = fibers.first().copied().unwrap_or(Fraction::ZERO);
    let a2 = fibers.get(1).copied().unwrap_or(Fraction::ZERO);
    let candidate = min_denominator_fraction(a1, Fraction::ONE - a2)?;
    let m = candidate.denom();
    fibers
        .iter()
        .skip(2)
        .all(|&a| Fraction::integer(m) * a < Fraction::ONE)
        .then_some((candidate.numer(), m))
}

/// Decide whether the Seifert fibred manifold of `data` is an L-space.
pub fn lspace_from_invariants(data: &SeifertData) -> Verdict {
    let k = data.fibers.len() as i64;
    if k <= 2 || data.central <= -k {
        return Verdict::LSpace;
    }
    match data.minus_one_form() {
        Some(fibers) if ls_obstruction(&fibers).is_none() => Verdict::LSpace,
        _ => Verdict::NotLSpace,
    }
}

/// L-space verdict for a connected star-shaped graph or chain.
pub fn is_lspace_star(g: &PlumbingGraph) -> Result<Verdict> {
    match star_center(g) {
        None if g.is_empty() => Ok(Verdict::LSpace),
        None => Err(Error::NotStarShaped),
        Some(StarShape::Chain(_)) => Ok(match g.h1_order() {
            H1Order::Infinite => Verdict::NotQHS,
            H1Order::Finite(_) => Verdict::LSpace,
        }),
        Some(StarShape::Star(_)) => Ok(match seifert_data(g)? {
            None => Verdict::NotQHS,
            Some(data) => lspace_from_invariants(&data),
        }),
    }
}
