//! Exact construction of Sheffer, Appell and Sheffer-Appell polynomial
//! sequences from a generating-function pair `(l, h)`, together with the
//! Pascal/Wronskian matrix calculus used to state and check their
//! differential equation and recurrences.
//!
//! Every identity is checked as an exact polynomial residual over the
//! rationals; nothing here uses floating point.

pub mod error;
pub mod audit;
pub mod catalog;
pub mod engine;
pub mod exact;
pub mod matrix;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Poly, Rational, Ring};
pub use series::{DeltaSeries, InvertibleSeries, TruncatedSeries};
