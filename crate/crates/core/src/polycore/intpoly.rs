use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes;

/// Products with both operands at least this many coefficients long go
/// through Karatsuba; everything smaller stays schoolbook.
const KARATSUBA_MIN: usize = 32;

/// Dense univariate polynomial over Z.
///
/// Coefficients are little-endian (index = power of x). The zero polynomial
/// is the empty vector; trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// c * x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::from_coeffs(coeffs)
    }

    /// Builds from little-endian coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Test convenience: little-endian machine-integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg(0) treated as 0; convenient for size estimates.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiply by x^k.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let coeffs = mul_slices(&self.coeffs, &other.coeffs);
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    /// f(h(x)) by Horner over polynomials.
    pub fn compose(&self, h: &Self) -> Self {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(h).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Homogenized composition: for f of degree n, computes
    /// sum_i f[i] * num^i * den^(n-i), i.e. den^n * f(num/den).
    pub fn homogeneous_compose(&self, num: &Self, den: &Self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.degree().unwrap();
        let mut acc = IntPoly::constant(self.coeffs[n].clone());
        let mut den_pow = IntPoly::one();
        for i in (0..n).rev() {
            den_pow = den_pow.mul(den);
            acc = acc.mul(num).add(&IntPoly::constant(self.coeffs[i].clone()).mul(&den_pow));
        }
        Ok(acc)
    }

    /// Coefficient reversal x^n * f(1/x); requires f(0) != 0.
    pub fn reverse(&self) -> Result<Self> {
        if self.constant_term().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// G with G(x^2) = f; errors on the first odd index holding a non-zero
    /// coefficient.
    pub fn even_part(&self) -> Result<Self> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 && !c.is_zero() {
                return Err(Error::OddCoefficient { index: i });
            }
        }
        let coeffs = self.coeffs.iter().step_by(2).cloned().collect();
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut c = BigInt::zero();
        for a in &self.coeffs {
            c = c.gcd(a);
            if c.is_one() {
                break;
            }
        }
        c
    }

    /// Splits f = c * p with c = content(f) > 0; p keeps the sign of f.
    /// The zero polynomial is (0, 0).
    pub fn content_primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let c = self.content();
        let p = IntPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() };
        (c, p)
    }

    /// Primitive part with positive leading coefficient, plus the rational
    /// unit u (content with sign) such that f = u * p.
    pub fn unit_primitive(&self) -> (BigRational, IntPoly) {
        if self.is_zero() {
            return (BigRational::zero(), IntPoly::zero());
        }
        let (c, p) = self.content_primitive();
        if p.leading_coeff().is_negative() {
            (BigRational::from_integer(-c), p.neg())
        } else {
            (BigRational::from_integer(c), p)
        }
    }

    /// Max |coefficient|.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Ceiling of the Euclidean norm of the coefficient vector.
    pub fn l2_norm_ceil(&self) -> BigInt {
        let sum: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let r = primes::isqrt(&sum);
        if &(&r * &r) == &sum {
            r
        } else {
            r + 1
        }
    }

    /// Pseudo-division: returns (q, r) with lc(g)^(deg f - deg g + 1) * f = q*g + r
    /// and deg r < deg g. Requires g non-zero and deg f >= deg g.
    pub fn pseudo_divmod(&self, g: &Self) -> (IntPoly, IntPoly) {
        assert!(!g.is_zero(), "pseudo-division by zero");
        let df = self.degree_or_zero();
        let dg = g.degree().unwrap();
        if self.is_zero() || df < dg {
            let k = df.saturating_sub(dg) as u32 + 1;
            return (IntPoly::zero(), self.scaled(&g.leading_coeff().pow(k)));
        }
        let lc = g.leading_coeff();
        let mut r = self.clone();
        let mut q = IntPoly::zero();
        let mut steps = df - dg + 1;
        while !r.is_zero() && r.degree().unwrap() >= dg {
            let dr = r.degree().unwrap();
            let t = IntPoly::monomial(r.leading_coeff(), dr - dg);
            q = q.scaled(&lc).add(&t);
            r = r.scaled(&lc).sub(&t.mul(g));
            steps -= 1;
        }
        // Keep the advertised scaling even when the degree drops early.
        if steps > 0 {
            let s = lc.pow(steps as u32);
            q = q.scaled(&s);
            r = r.scaled(&s);
        }
        (q, r)
    }

    /// Exact division over Q with an integer quotient. Errors carry the true
    /// rational remainder (or note a non-integral quotient).
    pub fn exact_divide(&self, g: &Self) -> Result<IntPoly> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let df = self.degree().unwrap();
        let dg = g.degree().unwrap();
        if df < dg {
            return Err(Error::InexactDivision { remainder: format!("{}", self) });
        }
        let (pq, pr) = self.pseudo_divmod(g);
        let scale = g.leading_coeff().pow((df - dg + 1) as u32);
        if !pr.is_zero() {
            let remainder = if scale.is_one() {
                format!("{}", pr)
            } else {
                format!("({}) / {}", pr, scale)
            };
            return Err(Error::InexactDivision { remainder });
        }
        let mut out = Vec::with_capacity(pq.coeffs.len());
        for c in &pq.coeffs {
            let (d, m) = c.div_rem(&scale);
            if !m.is_zero() {
                return Err(Error::InexactDivision {
                    remainder: "0 (quotient is not an integer polynomial)".into(),
                });
            }
            out.push(d);
        }
        Ok(IntPoly::from_coeffs(out))
    }

    /// True when g divides f exactly in Z[x].
    pub fn divides_exactly(&self, g: &Self) -> bool {
        self.exact_divide(g).is_ok()
    }

    /// Gcd in Z[x] (primitive pseudo-remainder sequence), normalized to a
    /// positive leading coefficient. gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> IntPoly {
        if self.is_zero() {
            return positive_lc(other.clone());
        }
        if other.is_zero() {
            return positive_lc(self.clone());
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.content_primitive().1;
        let mut b = other.content_primitive().1;
        if a.degree_or_zero() < b.degree_or_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_divmod(&b);
            a = b;
            b = r.content_primitive().1;
        }
        positive_lc(a).scaled(&content_gcd)
    }

    /// Resultant via the subresultant pseudo-remainder sequence.
    /// Both inputs must be non-zero.
    pub fn resultant(&self, other: &Self) -> Result<BigInt> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let df = self.degree().unwrap();
        let dg = other.degree().unwrap();
        if df < dg {
            let sign = if (df * dg) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            return Ok(sign * other.resultant(self)?);
        }
        if dg == 0 {
            return Ok(other.leading_coeff().pow(df as u32));
        }
        // deg f >= deg g >= 1 from here on.
        let (ca, pa) = self.content_primitive();
        let (cb, pb) = other.content_primitive();
        let t = ca.pow(dg as u32) * cb.pow(df as u32);
        let mut s = BigInt::one();
        let mut a = pa;
        let mut b = pb;
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let d = a.degree().unwrap();
            let e = b.degree().unwrap();
            let delta = d - e;
            if d % 2 == 1 && e % 2 == 1 {
                s = -s;
            }
            let (_, r) = a.pseudo_divmod(&b);
            a = b;
            let divisor = &g * h.pow(delta as u32);
            b = exact_scalar_div(&r, &divisor);
            g = a.leading_coeff();
            h = if delta == 0 {
                h
            } else {
                // h <- g^delta / h^(delta-1), exact by subresultant theory.
                let num = g.pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                let (q, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "subresultant h-update not exact");
                q
            };
            if b.is_zero() {
                // Non-trivial common factor (deg a >= 1 here).
                return Ok(BigInt::zero());
            }
            if b.degree().unwrap() == 0 {
                let d = a.degree().unwrap();
                let num = b.leading_coeff().pow(d as u32);
                let den = h.pow((d - 1) as u32);
                let (q, rem) = num.div_rem(&den);
                assert!(rem.is_zero(), "subresultant final division not exact");
                return Ok(s * t * q);
            }
        }
    }

    /// Canonical ordering for factor lists: by degree, then by coefficients
    /// compared from the leading term down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Divides every coefficient by `d`, asserting exactness.
    pub(crate) fn exact_scalar_div(&self, d: &BigInt) -> IntPoly {
        exact_scalar_div(self, d)
    }
}

/// Flips the sign if needed so the leading coefficient is positive.
fn positive_lc(p: IntPoly) -> IntPoly {
    if p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Divides every coefficient by `d`, asserting exactness (internal use by the
/// subresultant loop, where divisibility is guaranteed).
fn exact_scalar_div(p: &IntPoly, d: &BigInt) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    assert!(!d.is_zero(), "scalar division by zero");
    let coeffs = p
        .coeffs
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            assert!(r.is_zero(), "inexact scalar division in PRS");
            q
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

fn mul_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KARATSUBA_MIN {
        return mul_schoolbook(a, b);
    }
    let half = a.len().max(b.len()).div_ceil(2);
    let (a_lo, a_hi) = split_at_padded(a, half);
    let (b_lo, b_hi) = split_at_padded(b, half);
    let low = mul_slices(&a_lo, &b_lo);
    let high = mul_slices(&a_hi, &b_hi);
    let a_sum = add_slices(&a_lo, &a_hi);
    let b_sum = add_slices(&b_lo, &b_hi);
    let mut mid = mul_slices(&a_sum, &b_sum);
    sub_assign(&mut mid, &low);
    sub_assign(&mut mid, &high);
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in low.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in mid.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + half] += c;
        }
    }
    for (i, c) in high.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + 2 * half] += c;
        }
    }
    out
}

fn mul_schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn split_at_padded(a: &[BigInt], half: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    if a.len() <= half {
        (a.to_vec(), vec![BigInt::zero()])
    } else {
        (a[..half].to_vec(), a[half..].to_vec())
    }
}

fn add_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
            x + y
        })
        .collect()
}

fn sub_assign(a: &mut Vec<BigInt>, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i] -= c;
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::format_poly(self))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}
