//! Arrow ribbon graphs and their polynomial invariants.
//!
//! The crate has three layers:
//!
//! * [`ribbon`] and [`duality`] — a data model for ribbon graphs decorated
//!   with tangent arrows on boundary arcs, spanning-subgraph boundary
//!   tracing, deletion, contraction, partial duality and a small-graph
//!   canonical form.
//! * [`polyring`] and [`graphpoly`] — exact sparse Laurent polynomial
//!   arithmetic and the state-sum invariants built on it (arrow
//!   dichromatic, dichromatic, Tutte, arrow/signed Bollobás-Riordan).
//! * [`vlink`] and [`transfer`] — virtual link diagrams as signed Gauss
//!   codes, bracket/Jones/arrow polynomials, Reidemeister rewrites, and the
//!   state-graph construction that ties link brackets to graph state sums.
//!
//! The [`cli`] module backs the `arrowpoly` binary.

pub mod cli;
pub mod corpus;
pub mod duality;
pub mod graphpoly;
pub mod polyring;
pub mod random;
pub mod ribbon;
pub mod transfer;
pub mod vlink;

pub use polyring::{LaurentPoly, Monomial, PolyError, Var};
pub use ribbon::{ArrowDir, ArrowRibbonGraph, BoundaryReport, EdgeId, Sign, VertexId};
pub use vlink::VirtualLinkDiagram;
