//! Exact symbolic toolkit for degree-3 plane foliations and their dual 3-webs.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`]: rationals and a single quadratic extension `Q(t)`, `t^2 = u t + v`.
//! * [`poly`]: sparse polynomials in the fixed variables `x, y, z, p, q, t`,
//!   GCDs, reduced rational functions and small polynomial determinants.
//! * [`web`]: Legendre transform, Blaschke curvature of implicit cubic webs,
//!   inflection divisor, discriminants and holomorphy checks.
//! * [`singularities`]: local invariants at supplied points and the
//!   homogeneous-foliation toolkit.
//! * [`parse`]: the textual polynomial grammar shared by the CLI and the web demo.

pub mod error;
pub mod field;
pub mod parse;
pub mod poly;
pub mod singularities;
pub mod web;

pub use error::{Error, Result};
pub use field::{FieldScalar, FieldSpec, Rational};
pub use poly::{MPoly, PolyMatrix, RatFn, Var};
