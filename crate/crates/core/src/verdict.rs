use std::fmt;

/// Outcome of an L-space decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    LSpace,
    NotLSpace,
    /// The surgery manifold has `b_1 > 0`.
    NotQHS,
    /// Some coefficient equals `pq ± 1`; the torus-link classification does
    /// not decide these.
    BoundaryCase,
    /// The graph lies outside every class the oracle can decide.
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::LSpace => "LSPACE",
            Verdict::NotLSpace => "NOT_LSPACE",
            Verdict::NotQHS => "NOT_QHS",
            Verdict::BoundaryCase => "BOUNDARY",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Verdict {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "LSPACE" => Verdict::LSpace,
            "NOT_LSPACE" => Verdict::NotLSpace,
            "NOT_QHS" => Verdict::NotQHS,
            "BOUNDARY" => Verdict::BoundaryCase,
            "UNKNOWN" => Verdict::Unknown,
            other => return Err(format!("unknown verdict {other:?}")),
        })
    }
}
