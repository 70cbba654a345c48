//! Dense exact polynomial arithmetic.
//!
//! [`IntPoly`] (integer coefficients, little-endian) carries the bulk of the
//! crate; [`RatPoly`] layers a single positive denominator on top for the
//! number-field work; [`QuadExtElem`] models elements (u + v*sqrt(delta))/2^k
//! of the quadratic closure used by Binet component extraction. Parsing and
//! the canonical text rendering live in [`parse`].

mod intpoly;
pub mod parse;
mod quadext;
mod ratpoly;

pub use intpoly::IntPoly;
pub use parse::{format_poly, parse_poly};
pub use quadext::QuadExtElem;
pub use ratpoly::RatPoly;
