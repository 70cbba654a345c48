//! Elements `(u + v*sqrt(delta)) / 2^k` of a quadratic extension of the
//! polynomial ring, with `u`, `v`, `delta` integer polynomials.
//!
//! No reduction of the power-of-two denominator is performed: exponents add
//! under multiplication, which keeps the bookkeeping transparent for
//! closed-form root powers.

use std::fmt;

use num_bigint::BigInt;

use super::IntPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExtElem {
    u: IntPoly,
    v: IntPoly,
    k: u32,
    delta: IntPoly,
}

impl QuadExtElem {
    pub fn new(u: IntPoly, v: IntPoly, k: u32, delta: IntPoly) -> Self {
        QuadExtElem { u, v, k, delta }
    }

    /// `(d + sqrt(delta)) / 2` — the principal root of `y^2 - d*y - g` when
    /// `delta = d^2 + 4g`.
    pub fn principal_root(d: &IntPoly, delta: &IntPoly) -> Self {
        QuadExtElem { u: d.clone(), v: IntPoly::one(), k: 1, delta: delta.clone() }
    }

    pub fn rational_part(&self) -> &IntPoly {
        &self.u
    }

    pub fn radical_part(&self) -> &IntPoly {
        &self.v
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.k
    }

    pub fn delta(&self) -> &IntPoly {
        &self.delta
    }

    pub fn conjugate(&self) -> Self {
        QuadExtElem { u: self.u.clone(), v: self.v.neg(), k: self.k, delta: self.delta.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.delta != other.delta {
            return Err(Error::FieldMismatch);
        }
        let u = self.u.mul(&other.u).add(&self.v.mul(&other.v).mul(&self.delta));
        let v = self.u.mul(&other.v).add(&self.v.mul(&other.u));
        Ok(QuadExtElem { u, v, k: self.k + other.k, delta: self.delta.clone() })
    }

    /// `self^n` for `n >= 1`; the denominator exponent scales to `n * k`.
    pub fn pow(&self, n: u32) -> Result<Self> {
        assert!(n >= 1, "pow exponent must be positive");
        let mut acc = self.clone();
        for bit in (0..31 - n.leading_zeros()).rev() {
            acc = acc.mul(&acc)?;
            if n >> bit & 1 == 1 {
                acc = acc.mul(self)?;
            }
        }
        Ok(acc)
    }

    /// Rescales to denominator `2^target` by multiplying both parts through;
    /// errors if `target < k`.
    pub fn rescale_to(&self, target: u32) -> Result<Self> {
        if target < self.k {
            return Err(Error::ContractViolation(format!(
                "cannot lower denominator exponent {} to {}",
                self.k, target
            )));
        }
        let factor = BigInt::from(2u32).pow(target - self.k);
        Ok(QuadExtElem {
            u: self.u.scaled(&factor),
            v: self.v.scaled(&factor),
            k: target,
            delta: self.delta.clone(),
        })
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}) + ({})*sqrt({})) / 2^{}", self.u, self.v, self.delta, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_like() -> (IntPoly, IntPoly, IntPoly) {
        // d = x, g = 1, delta = x^2 + 4
        let d = IntPoly::x();
        let g = IntPoly::one();
        let delta = d.mul(&d).add(&g.scaled(&BigInt::from(4)));
        (d, g, delta)
    }

    #[test]
    fn product_with_conjugate_is_minus_g() {
        let (d, _g, delta) = fib_like();
        let a = QuadExtElem::principal_root(&d, &delta);
        let p = a.mul(&a.conjugate()).unwrap();
        // (d^2 - delta)/4 = -g, so the numerator pair is (-4g, 0) at k = 2.
        assert_eq!(p.rational_part(), &IntPoly::from_ints(&[-4]));
        assert!(p.radical_part().is_zero());
        assert_eq!(p.denominator_exponent(), 2);
    }

    #[test]
    fn square_matches_hand_expansion() {
        let (d, _g, delta) = fib_like();
        let a = QuadExtElem::principal_root(&d, &delta);
        let sq = a.pow(2).unwrap();
        // (d + sqrt(delta))^2 = (d^2 + delta) + 2d sqrt(delta), over 2^2.
        assert_eq!(sq.rational_part(), &d.mul(&d).add(&delta));
        assert_eq!(sq.radical_part(), &d.scaled(&BigInt::from(2)));
        assert_eq!(sq.denominator_exponent(), 2);
    }

    #[test]
    fn pow_exponent_tracks_n() {
        let (d, _g, delta) = fib_like();
        let a = QuadExtElem::principal_root(&d, &delta);
        for n in 1..=7u32 {
            assert_eq!(a.pow(n).unwrap().denominator_exponent(), n);
        }
        // Binary power equals iterated multiplication.
        let mut acc = a.clone();
        for _ in 1..5 {
            acc = acc.mul(&a).unwrap();
        }
        assert_eq!(acc, a.pow(5).unwrap());
    }

    #[test]
    fn mismatched_radicands_are_rejected() {
        let (d, _g, delta) = fib_like();
        let a = QuadExtElem::principal_root(&d, &delta);
        let b = QuadExtElem::principal_root(&d, &IntPoly::from_ints(&[5]));
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn rescale() {
        let (d, _g, delta) = fib_like();
        let a = QuadExtElem::principal_root(&d, &delta);
        let r = a.rescale_to(3).unwrap();
        assert_eq!(r.denominator_exponent(), 3);
        assert_eq!(r.rational_part(), &d.scaled(&BigInt::from(4)));
        assert!(a.rescale_to(0).is_err());
    }
}
