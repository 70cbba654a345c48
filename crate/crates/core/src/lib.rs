//! Exact arithmetic and irreducibility machinery for generalized Fibonacci
//! and Lucas polynomial families.
//!
//! The crate is arranged bottom-up:
//!
//! * [`polycore`] — dense integer/rational polynomials, parsing, and the
//!   quadratic closure used for Binet component extraction;
//! * [`modarith`] — polynomial arithmetic and factorization over prime fields;
//! * [`qfactor`] — factorization over Q (Zassenhaus) plus an independent
//!   Kronecker oracle;
//! * [`numfield`] — arithmetic and Trager factorization over number fields
//!   Q[y]/(m(y));
//! * [`gfp`] — the polynomial families themselves: recurrences, closed forms,
//!   Binet components, and the built-in catalog;
//! * [`criteria`] — certificate-producing irreducibility/reducibility
//!   criteria and the verdict pipeline tying everything together.

pub mod criteria;
pub mod error;
pub mod gfp;
pub mod limits;
pub mod modarith;
pub mod numfield;
pub mod polycore;
pub mod primes;
pub mod qfactor;

pub use error::{Error, Result};
