//! Exact classical umbral calculus.
//!
//! Umbrae are represented by their truncated moment sequences over `Q[x, y]`.
//! The crate provides the dot-product algebra (dot-products, inverses,
//! adjoints, derivative umbrae), an evaluator for umbral expressions,
//! Sheffer sequences and their identities, and a small expression language.

pub mod combinatorics;
pub mod dsl;
pub mod error;
pub mod eval;
pub mod expr;
pub mod poly;
pub mod registry;
pub mod scalar;
pub mod series;
pub mod sheffer;
pub mod special;
pub mod umbra;
pub mod workspace;

pub use error::{Error, Position, Result, SyntaxError};
pub use eval::evaluate;
pub use expr::{Expr, ExprKind, Span};
pub use poly::{Poly, Var};
pub use registry::Registry;
pub use scalar::Rational;
pub use series::TruncatedEGF;
pub use sheffer::{PolySequence, ShefferPair};
pub use umbra::Umbra;
