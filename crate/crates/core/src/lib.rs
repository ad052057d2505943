//! Fiber detection for state surfaces of link diagrams.
//!
//! A Kauffman state of a link diagram resolves every crossing into an
//! `A` or `B` smoothing. The resulting circles, joined by half-twisted bands,
//! span a state surface. For homogeneous states this crate decides whether
//! that surface is a fiber of the link complement by testing whether the
//! reduced state graph is a tree, and cross-checks the answer against the
//! extreme coefficients of the Jones polynomial.
//!
//! ```
//! use statesurf::{diagram::LinkDiagram, fiber, state::KauffmanState};
//!
//! let trefoil: LinkDiagram = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".parse().unwrap();
//! let sigma = KauffmanState::all_a(&trefoil);
//! let verdict = fiber::detect_fiber(&trefoil, &sigma).unwrap();
//! assert!(verdict.is_fiber());
//! ```

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod export;
pub mod fiber;
pub mod jones;
pub mod poly;
pub mod report;
pub mod state;
mod union_find;

pub use error::{Error, Result};

/// Largest crossing count accepted by the exhaustive state enumeration.
pub const DEFAULT_CAP: usize = 20;
