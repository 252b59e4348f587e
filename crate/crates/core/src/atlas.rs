//! Two-component torus-link atlas: the verdict for every `(d_1, d_2)` in a
//! square window, with CSV and plain-PGM renderings.

use crate::classify::{classify_torus, is_lspace_oracle, linking_det};
use crate::error::Result;
use crate::graph::H1Order;
use crate::surgery::{torus_surgery_graph, SurgerySpec};
use crate::verdict::Verdict;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtlasCell {
    pub d1: i64,
    pub d2: i64,
    pub verdict: Verdict,
    pub h1: H1Order,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    pub p: i64,
    pub q: i64,
    pub lo: i64,
    pub hi: i64,
    /// Row-major: `d1` outer, `d2` inner, both increasing.
    pub cells: Vec<AtlasCell>,
}

/// Gray level of each verdict in the PGM rendering.
pub fn gray_level(v: Verdict) -> u8 {
    match v {
        Verdict::LSpace => 160,
        Verdict::NotLSpace => 255,
        Verdict::NotQHS => 0,
        Verdict::BoundaryCase => 64,
        Verdict::Unknown => 32,
    }
}

/// Verdicts of the classifier over `[lo, hi]^2`. With `resolve_boundary`,
/// cells the classifier leaves undecided are handed to the graph oracle;
/// they keep [`Verdict::BoundaryCase`] if the oracle cannot decide either.
pub fn atlas(p: i64, q: i64, lo: i64, hi: i64, resolve_boundary: bool) -> Result<Atlas> {
    let mut cells = Vec::new();
    for d1 in lo..=hi {
        for d2 in lo..=hi {
            let spec = SurgerySpec::new(p, q, vec![d1, d2])?;
            let mut verdict = classify_torus(&spec);
            if resolve_boundary && verdict == Verdict::BoundaryCase {
                let resolved = is_lspace_oracle(&torus_surgery_graph(&spec)?)?;
                if resolved != Verdict::Unknown {
                    verdict = resolved;
                }
            }
            cells.push(AtlasCell {
                d1,
                d2,
                verdict,
                h1: H1Order::from_determinant(linking_det(&spec)),
            });
        }
    }
    Ok(Atlas { p, q, lo, hi, cells })
}

impl Atlas {
    pub fn side(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn cell(&self, d1: i64, d2: i64) -> Option<&AtlasCell> {
        if d1 < self.lo || d1 > self.hi || d2 < self.lo || d2 > self.hi {
            return None;
        }
        let (i, j) = ((d1 - self.lo) as usize, (d2 - self.lo) as usize);
        self.cells.get(i * self.side() + j)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("d1,d2,verdict,h1\n");
        for c in &self.cells {
            let _ = writeln!(s, "{},{},{},{}", c.d1, c.d2, c.verdict, c.h1);
        }
        s
    }

    /// Plain PGM: `d2` increases left to right, `d1` top to bottom.
    pub fn to_pgm(&self) -> String {
        let n = self.side();
        let mut s = String::from("P2\n");
        let _ = writeln!(
            s,
            "# (2p,2q) torus link atlas p={} q={} d1,d2 in [{},{}]; d2 left-to-right, d1 top-to-bottom",
            self.p, self.q, self.lo, self.hi
        );
        for v in [
            Verdict::LSpace,
            Verdict::NotLSpace,
            Verdict::NotQHS,
            Verdict::BoundaryCase,
            Verdict::Unknown,
        ] {
            let _ = writeln!(s, "# {} = {}", v, gray_level(v));
        }
        let _ = writeln!(s, "{n} {n}\n255");
        for row in self.cells.chunks(n.max(1)) {
            let line: Vec<String> = row.iter().map(|c| gray_level(c.verdict).to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}
