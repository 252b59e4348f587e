use crate::graph::VertexId;
use thiserror::Error;

/// Errors raised by graph construction, plumbing moves and the invariant
/// computations built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge {0}-{1} would close a cycle (only forests are supported)")]
    Cycle(VertexId, VertexId),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),

    #[error("cannot blow down vertex {vertex}: {reason}")]
    BlowDown { vertex: VertexId, reason: String },
    #[error("unsupported graph: vertex {vertex} has positive weight {weight} and valency {valency}")]
    PositiveInterior {
        vertex: VertexId,
        weight: i64,
        valency: usize,
    },
    #[error("normalization did not terminate within {0} steps")]
    NoFixedPoint(usize),

    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not negative definite")]
    NotNegativeDefinite,
    #[error("graph is not star-shaped (two or more branch vertices)")]
    NotStarShaped,
    #[error("leg starting at vertex {0} has a degenerate continued fraction; normalize first")]
    DegenerateLeg(VertexId),

    #[error("invalid torus link parameters p={p}, q={q}, r={r}")]
    InvalidTorus { p: i64, q: i64, r: usize },
    #[error("expected {expected} surgery coefficients, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("vertex {0} carries no arrowhead")]
    NoArrow(VertexId),
    #[error("intersection form is singular")]
    Singular,
    #[error("multiplicity at vertex {0} is not an integer (start graph is not unimodular)")]
    NonIntegralMultiplicity(VertexId),
}

pub type Result<T> = std::result::Result<T, Error>;
