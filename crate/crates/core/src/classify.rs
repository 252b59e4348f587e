//! L-space classification of torus-link surgeries, the general plumbing
//! graph oracle, and the harness comparing the two.

use crate::calculus::normalize;
use crate::error::Result;
use crate::fraction::Fraction;
use crate::graph::{H1Order, PlumbingGraph};
use crate::rationality::is_rational;
use crate::seifert::{is_lspace_star, leg_contributions, seifert_data, star_center, SeifertData};
use crate::surgery::{torus_resolution, torus_surgery_graph, SurgerySpec};
use crate::verdict::Verdict;
use std::fmt::Write as _;

/// Determinant of the linking matrix (diagonal `d_i`, off-diagonal `pq`),
/// evaluated in closed form as `Π k_i + pq Σ_j Π_{i≠j} k_i`.
pub fn linking_det(spec: &SurgerySpec) -> i128 {
    let k: Vec<i128> = spec.k().into_iter().map(i128::from).collect();
    let all: i128 = k.iter().product();
    let pq = spec.pq() as i128;
    let cross: i128 = (0..k.len())
        .map(|j| k.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &x)| x).product::<i128>())
        .sum();
    all + pq * cross
}

/// The torus-link classification. Coefficients equal to `pq ± 1` yield
/// [`Verdict::BoundaryCase`].
pub fn classify_torus(spec: &SurgerySpec) -> Verdict {
    let k = spec.k();
    if k.iter().any(|x| x.abs() == 1) {
        return Verdict::BoundaryCase;
    }
    match k.iter().filter(|&&x| x == 0).count() {
        0 => {}
        1 => return Verdict::LSpace,
        _ => return Verdict::NotQHS,
    }
    if k.iter().all(|&x| x >= 2) {
        return Verdict::LSpace;
    }
    if linking_det(spec) == 0 {
        return Verdict::NotQHS;
    }
    if k.iter().all(|&x| x <= -2) {
        let max = *k.iter().max().unwrap();
        if max >= -(spec.p + spec.q) {
            return Verdict::LSpace;
        }
    }
    Verdict::NotLSpace
}

/// What the oracle concluded about one connected summand.
#[derive(Debug, Clone)]
pub struct ComponentReport {
    pub graph: PlumbingGraph,
    pub h1: H1Order,
    pub negative_definite: bool,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub normalized: PlumbingGraph,
    pub components: Vec<ComponentReport>,
    pub h1: H1Order,
    pub verdict: Verdict,
}

fn component_verdict(g: &PlumbingGraph) -> Result<ComponentReport> {
    let h1 = g.h1_order();
    let negative_definite = g.is_negative_definite();
    let star = star_center(g).is_some();
    let verdict = if !h1.is_finite() {
        Verdict::NotQHS
    } else if negative_definite {
        if is_rational(g)? {
            Verdict::LSpace
        } else if star {
            Verdict::NotLSpace
        } else {
            Verdict::Unknown
        }
    } else if star {
        is_lspace_star(g)?
    } else {
        Verdict::Unknown
    };
    Ok(ComponentReport {
        graph: g.clone(),
        h1,
        negative_definite,
        verdict,
    })
}

/// Run the full oracle pipeline on a plumbing graph: normalize, split into
/// connected summands, and decide each summand.
pub fn oracle_report(g: &PlumbingGraph) -> Result<OracleReport> {
    let normalized = normalize(g)?;
    let components = normalized
        .components()
        .iter()
        .map(component_verdict)
        .collect::<Result<Vec<_>>>()?;
    let verdicts: Vec<Verdict> = components.iter().map(|c| c.verdict).collect();
    let verdict = if verdicts.contains(&Verdict::NotQHS) {
        Verdict::NotQHS
    } else if verdicts.contains(&Verdict::Unknown) {
        Verdict::Unknown
    } else if verdicts.iter().all(|&v| v == Verdict::LSpace) {
        Verdict::LSpace
    } else {
        Verdict::NotLSpace
    };
    Ok(OracleReport {
        h1: normalized.h1_order(),
        normalized,
        components,
        verdict,
    })
}

/// L-space verdict for an arbitrary supported plumbing graph. Never
/// overclaims: negative definite graphs that are neither rational nor
/// star-shaped come back [`Verdict::Unknown`].
pub fn is_lspace_oracle(g: &PlumbingGraph) -> Result<Verdict> {
    Ok(oracle_report(g)?.verdict)
}

/// Fractions carried by the two arms of the torus resolution graph, read
/// from the `-1` vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyCheck {
    pub arm_p: Fraction,
    pub arm_q: Fraction,
    /// `arm_p` and `1 - arm_q` are Farey neighbours.
    pub neighbors: bool,
}

pub fn farey_check(p: i64, q: i64) -> Result<FareyCheck> {
    let res = torus_resolution(p, q, 1)?;
    let (center, _) = res.decorated.arrow_counts().next().expect("one arrowhead");
    let arms: Vec<Fraction> = leg_contributions(res.decorated.graph(), center)?
        .into_iter()
        .map(|(_, f)| f)
        .collect();
    let find = |den: i64| arms.iter().copied().find(|a| a.denom() == den as i128);
    let (arm_p, arm_q) = (find(p).expect("arm with denominator p"), find(q).expect("arm with denominator q"));
    let complement = Fraction::ONE - arm_q;
    let cross = arm_p.numer() * complement.denom() - complement.numer() * arm_p.denom();
    Ok(FareyCheck {
        arm_p,
        arm_q,
        neighbors: cross.abs() == 1,
    })
}

/// Side-by-side run of the closed-form classifier and the graph oracle.
#[derive(Debug, Clone)]
pub struct CrossReport {
    pub spec: SurgerySpec,
    pub classifier: Verdict,
    pub oracle: Verdict,
    pub agree: bool,
    pub linking_det: i128,
    pub h1: H1Order,
    pub h1_matches_linking: bool,
    pub farey: FareyCheck,
    /// Seifert invariants of the normalized surgery graph when it is a
    /// single star-shaped rational homology sphere.
    pub seifert: Option<SeifertData>,
}

pub fn cross_validate(spec: &SurgerySpec) -> Result<CrossReport> {
    let graph = torus_surgery_graph(spec)?;
    let report = oracle_report(&graph)?;
    let classifier = classify_torus(spec);
    let det = linking_det(spec);
    let h1 = graph.h1_order();
    let seifert = match report.components.as_slice() {
        [only] if star_center(&only.graph).is_some() && only.h1.is_finite() => seifert_data(&only.graph).ok().flatten(),
        _ => None,
    };
    Ok(CrossReport {
        spec: spec.clone(),
        classifier,
        oracle: report.verdict,
        agree: classifier == report.verdict,
        linking_det: det,
        h1,
        h1_matches_linking: h1 == H1Order::from_determinant(det),
        farey: farey_check(spec.p, spec.q)?,
        seifert,
    })
}

impl CrossReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let d: Vec<String> = self.spec.d.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "torus link ({}r, {}r), r = {}, d = {}", self.spec.p, self.spec.q, self.spec.r(), d.join(","));
        let _ = writeln!(s, "classifier: {}", self.classifier);
        let _ = writeln!(s, "oracle: {}", self.oracle);
        let _ = writeln!(s, "agree: {}", self.agree);
        let _ = writeln!(s, "linking_det: {}", self.linking_det);
        let _ = writeln!(s, "h1: {} (matches linking determinant: {})", self.h1, self.h1_matches_linking);
        let _ = writeln!(
            s,
            "arms: {} and {} (Farey neighbours: {})",
            self.farey.arm_p, self.farey.arm_q, self.farey.neighbors
        );
        if let Some(sd) = &self.seifert {
            let fibers: Vec<String> = sd.fibers.iter().map(Fraction::to_string).collect();
            let _ = writeln!(
                s,
                "seifert: e0 = {}, fibers = ({}), e_orb = {}, flipped = {}",
                sd.central,
                fibers.join(", "),
                sd.e_orb,
                sd.flipped
            );
        }
        s
    }
}
