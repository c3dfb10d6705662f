//! Self-linking invariants of virtual knots and links.
//!
//! This crate computes invariants extracted from the *binary bracket*, a
//! two-color state sum on virtual link diagrams given as extended Gauss
//! codes:
//!
//! - `J(K)` — the self-linking number of a virtual knot, the writhe
//!   restricted to its odd crossings,
//! - `{K}` — the binary bracket Laurent polynomial (loop value 2, state
//!   loops 2-colored with distinct colors at every smoothing site),
//! - `Inv(K) = A^{-w}{K}` — its ambient-isotopy normalization,
//! - `Λ(L) = {L} / Σ_O A^{w(L^O)}` — the ratio invariant for links, equal
//!   to 1 on classical links.
//!
//! Every bracket value can be cross-checked against an independent
//! brute-force state enumeration ([`statesum`]), and the crate also covers
//! the n-color shadow coloring problem on flat virtual diagrams
//! ([`shadowcolor`]) together with its bridge to perfect matchings and
//! proper 3-edge-colorings of cubic graphs ([`graphs`]).
//!
//! State sums and code searches run data-parallel under the default
//! `parallel` feature (rayon); disabling it yields a fully sequential
//! build with identical results.

pub mod cli;
pub mod exec;
pub mod gausscode;
pub mod graphs;
pub mod invariants;
pub mod polynomial;
pub mod shadowcolor;
pub mod statesum;

pub use gausscode::{DiagramCode, Mode, Pass, PassKind, Sign};
pub use polynomial::{BiLaurent, LaurentPoly, RationalExpr};
