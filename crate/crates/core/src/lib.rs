//! Exact certification that the negative region of a signomial,
//! `{x ∈ ℝⁿ₊ : f(x) < 0}`, has at most one connected component.
//!
//! The certifier works on the Newton polytope of `f` and only ever makes
//! exact rational decisions. A numerical grid oracle is provided
//! separately for cross-checking.

pub mod analysis;
pub mod certify;
pub mod criteria;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod polytope;
pub mod rational;
pub mod signomial;
pub mod svg;
pub mod text;
pub mod trace;

pub use error::{Error, Result};
pub use signomial::{ExponentVector, Sign, Signomial, Term};
pub use text::parse_signomial;
