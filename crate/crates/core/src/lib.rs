//! Numerical semigroups generated by binomial coefficients with a fixed upper index.
//!
//! * [`exactmath`]: binomials, factorizations, valuations and the congruences behind the closed forms.
//! * [`semigroup`]: a generic numerical-semigroup engine built on Apéry tables.
//! * [`family`]: closed forms for `S(B_n)` and decompositions of `C(n, m)` over its generators.
//! * [`cores`]: numerical sets, their partitions and hook sets, and admissible `(s, p)` pairs.

pub mod cores;
pub mod error;
pub mod exactmath;
pub mod family;
pub mod semigroup;

pub use error::{Error, Result};
pub use exactmath::{Factorization, Nat};
pub use semigroup::{AperyTable, NumericalSemigroup};
