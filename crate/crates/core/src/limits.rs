//! Global degree guard.
//!
//! Recurrences and factorizations fail fast once a polynomial would exceed
//! this bound instead of grinding through runaway arithmetic.

use crate::error::{Error, Result};

/// Default cap on polynomial degrees accepted by the heavy operations.
pub const DEFAULT_MAX_DEGREE: usize = 512;

/// Environment variable overriding [`DEFAULT_MAX_DEGREE`].
pub const MAX_DEGREE_ENV: &str = "GFP_MAX_DEGREE";

/// Current degree cap: `GFP_MAX_DEGREE` if set and parseable, else the default.
pub fn max_degree() -> usize {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(raw) => raw.trim().parse().unwrap_or(DEFAULT_MAX_DEGREE),
        Err(_) => DEFAULT_MAX_DEGREE,
    }
}

/// Errors when `degree` exceeds the configured cap.
pub fn check_degree(degree: usize) -> Result<()> {
    let max = max_degree();
    if degree > max {
        Err(Error::DegreeGuard { degree, max })
    } else {
        Ok(())
    }
}
