//! Polynomials over Q, stored as an integer polynomial with a positive
//! common denominator, kept reduced.
//!
//! Everything here is exact. The representation is convenient for clearing
//! denominators back into [`IntPoly`] after field computations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// `num / den` with `den > 0` and `gcd(content(num), den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    pub fn new(num: IntPoly, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(mut num: IntPoly, mut den: BigInt) -> Self {
        if den.is_negative() {
            num = num.neg();
            den = -den;
        }
        if num.is_zero() {
            return RatPoly { num, den: BigInt::one() };
        }
        let g = num.content().gcd(&den);
        if !g.is_one() {
            num = num.exact_scalar_div(&g);
            den /= &g;
        }
        RatPoly { num, den }
    }

    pub fn zero() -> Self {
        RatPoly { num: IntPoly::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        RatPoly { num: IntPoly::one(), den: BigInt::one() }
    }

    pub fn x() -> Self {
        RatPoly { num: IntPoly::x(), den: BigInt::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::reduced(IntPoly::constant(c.numer().clone()), c.denom().clone())
    }

    pub fn from_int(f: IntPoly) -> Self {
        RatPoly { num: f, den: BigInt::one() }
    }

    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let scaled: Vec<BigInt> =
            coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::reduced(IntPoly::from_coeffs(scaled), den)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn degree_or_zero(&self) -> usize {
        self.num.degree_or_zero()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num.coeff(i), self.den.clone())
    }

    pub fn coeffs_rational(&self) -> Vec<BigRational> {
        (0..self.num.coeffs().len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> BigRational {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => BigRational::zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading_coeff().is_one()
    }

    pub fn neg(&self) -> Self {
        RatPoly { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.scaled(&other.den).add(&other.num.scaled(&self.den));
        Self::reduced(num, &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), &self.den * &other.den)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::reduced(self.num.scaled(c.numer()), &self.den * c.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::reduced(self.num.derivative(), self.den.clone())
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.num.evaluate_rational(x) / BigRational::from(self.den.clone())
    }

    /// Quotient and remainder over Q; `divisor` must be nonzero.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().expect("nonzero");
        let lc_inv = divisor.leading_coeff().recip();
        let mut rem = self.coeffs_rational();
        let dv = divisor.coeffs_rational();
        if rem.len() < dd + 1 {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let q = &rem[i + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, dc) in dv.iter().enumerate() {
                let t = &rem[i + j] - &(q.clone() * dc);
                rem[i + j] = t;
            }
            quo[i] = q;
        }
        Ok((Self::from_rational_coeffs(&quo), Self::from_rational_coeffs(&rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Monic gcd over Q (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`,
    /// `g` the monic gcd.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Self::one();
        let mut u1 = Self::zero();
        let mut v0 = Self::zero();
        let mut v1 = Self::one();
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let s = r0.leading_coeff().recip();
        (r0.monic(), u0.scale(&s), v0.scale(&s))
    }

    /// Clears denominators: returns `(f, d)` with `self = f / d` and `f`
    /// integral.
    pub fn int_clear(&self) -> (IntPoly, BigInt) {
        (self.num.clone(), self.den.clone())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
