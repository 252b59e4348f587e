//! Exact L-space recognition for plumbed 3-manifolds.
//!
//! The crate builds plumbing graphs for integral surgeries on algebraic
//! links (torus links in particular), normalizes them with plumbing
//! calculus, and decides the L-space property by two independent routes:
//! rationality of negative definite graphs via Laufer's fundamental cycle,
//! and the Seifert-fibred inequality test for star-shaped graphs. A
//! closed-form classifier for torus-link surgeries is cross-checked against
//! both.
//!
//! All arithmetic is exact.

pub mod atlas;
pub mod calculus;
pub mod classify;
pub mod cli;
pub mod decorated;
pub mod error;
pub mod fraction;
pub mod graph;
pub mod matrix;
pub mod rationality;
pub mod seifert;
pub mod surgery;
pub mod verdict;

pub use atlas::{atlas, Atlas, AtlasCell};
pub use calculus::{blow_down, blow_up, is_smooth_graph, normalize, random_smooth_decorated, MoveSite};
pub use classify::{classify_torus, cross_validate, is_lspace_oracle, linking_det, CrossReport, OracleReport};
pub use decorated::DecoratedGraph;
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use graph::{H1Order, PlumbingGraph, VertexId};
pub use matrix::IntersectionMatrix;
pub use rationality::{euler_characteristic, fundamental_cycle, is_rational, valency_bounds, Cycle, ValencyBounds};
pub use seifert::{is_lspace_star, ls_obstruction, min_denominator_fraction, seifert_data, star_center, SeifertData, StarShape};
pub use surgery::{multiplicities, poincare_graph, surgery_graph, torus_resolution, ResolutionData, SurgerySpec};
pub use verdict::Verdict;
