//! Polynomial arithmetic over prime fields Z/p, with distinct-degree /
//! Cantor-Zassenhaus factorization.
//!
//! Residues are kept as `BigInt` in `[0, p)`. Randomized splitting is driven
//! by a caller-supplied seed, and factor lists come back in a canonical order
//! (degree ascending, then coefficients compared from the leading end), so
//! every public function is deterministic.

use std::fmt;

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polycore::IntPoly;
use crate::primes;

/// A polynomial over Z/p for a prime p; coefficients in `[0, p)`,
/// little-endian, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct ModPoly {
    coeffs: Vec<BigInt>,
    modulus: BigInt,
}

impl ModPoly {
    /// Reduces an integer polynomial mod `p`, validating that `p` is prime.
    pub fn reduce(f: &IntPoly, p: &BigInt) -> Result<Self> {
        if !primes::is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        let coeffs = f.coeffs().iter().map(|c| c.mod_floor(p)).collect();
        Ok(Self::from_residues(coeffs, p.clone()))
    }

    fn from_residues(mut coeffs: Vec<BigInt>, modulus: BigInt) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ModPoly { coeffs, modulus }
    }

    pub fn zero(p: &BigInt) -> Self {
        ModPoly { coeffs: Vec::new(), modulus: p.clone() }
    }

    pub fn one(p: &BigInt) -> Self {
        Self::constant(BigInt::one(), p)
    }

    pub fn x(p: &BigInt) -> Self {
        Self::from_residues(vec![BigInt::zero(), BigInt::one()], p.clone())
    }

    pub fn constant(c: BigInt, p: &BigInt) -> Self {
        Self::from_residues(vec![c.mod_floor(p)], p.clone())
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Representative with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    /// Representative with coefficients in `(-p/2, p/2]`.
    pub fn lift_symmetric(&self) -> IntPoly {
        let half = &self.modulus / BigInt::from(2);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| if c > &half { c - &self.modulus } else { c.clone() })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in ModPoly arithmetic");
    }

    pub fn neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| if c.is_zero() { c.clone() } else { &self.modulus - c })
            .collect();
        Self::from_residues(coeffs, self.modulus.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)).mod_floor(&self.modulus));
        Self::from_residues(coeffs.collect(), self.modulus.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.modulus);
        }
        let mut acc = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a * b;
            }
        }
        for c in &mut acc {
            *c = c.mod_floor(&self.modulus);
        }
        Self::from_residues(acc, self.modulus.clone())
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        let c = c.mod_floor(&self.modulus);
        let coeffs = self.coeffs.iter().map(|a| (a * &c).mod_floor(&self.modulus)).collect();
        Self::from_residues(coeffs, self.modulus.clone())
    }

    fn inverse_scalar(&self, c: &BigInt) -> BigInt {
        let c = c.mod_floor(&self.modulus);
        assert!(!c.is_zero(), "inverse of zero residue");
        c.modpow(&(&self.modulus - BigInt::from(2)), &self.modulus)
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(&self.inverse_scalar(&self.leading_coeff()))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (c * BigInt::from(i)).mod_floor(&self.modulus))
            .collect();
        Self::from_residues(coeffs, self.modulus.clone())
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().expect("nonzero");
        if self.coeffs.len() < dd + 1 {
            return Ok((Self::zero(&self.modulus), self.clone()));
        }
        let lc_inv = self.inverse_scalar(&divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let q = (&rem[i + dd] * &lc_inv).mod_floor(&self.modulus);
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = (&rem[i + j] - &q * dc).mod_floor(&self.modulus);
                rem[i + j] = t;
            }
            quo[i] = q;
        }
        Ok((
            Self::from_residues(quo, self.modulus.clone()),
            Self::from_residues(rem, self.modulus.clone()),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact division in factorization internals");
        q
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended Euclid: `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &Self) -> (Self, Self, Self) {
        self.check_same(other);
        let p = &self.modulus;
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut u0 = Self::one(p);
        let mut u1 = Self::zero(p);
        let mut v0 = Self::zero(p);
        let mut v1 = Self::one(p);
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
        let s = self.inverse_scalar(&r0.leading_coeff());
        (r0.mul_scalar(&s), u0.mul_scalar(&s), v0.mul_scalar(&s))
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigInt, m: &Self) -> Self {
        self.check_same(m);
        assert!(!e.is_negative(), "negative exponent");
        let mut base = self.rem(m).expect("nonzero modulus poly");
        let mut acc = Self::one(&self.modulus);
        let mut e = e.clone();
        while !e.is_zero() {
            if e.is_odd() {
                acc = acc.mul(&base).rem(m).expect("nonzero");
            }
            base = base.mul(&base).rem(m).expect("nonzero");
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree_or_zero() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).is_constant()
    }

    /// Rabin irreducibility test over Z/p.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.make_monic();
        let p = &self.modulus;
        let x = Self::x(p);
        // x^(p^n) must reduce to x...
        let mut h = x.clone();
        for _ in 0..n {
            h = h.pow_mod(p, &f);
        }
        if h != x.rem(&f).expect("nonzero") {
            return false;
        }
        // ...and x^(p^(n/r)) - x must be coprime to f for each prime r | n.
        for (r, _) in primes::factorize(&BigInt::from(n)) {
            let k = n / usize::try_from(&r).expect("small factor");
            let mut h = x.clone();
            for _ in 0..k {
                h = h.pow_mod(p, &f);
            }
            if !f.gcd(&h.sub(&x)).is_constant() {
                return false;
            }
        }
        true
    }

    /// Degree ascending, then coefficients compared from the leading end.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
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
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.modulus)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Factorization over Z/p: `unit` is the leading coefficient residue and the
/// monic irreducible `factors` carry multiplicities, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    pub unit: BigInt,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    /// Multiplies the factorization back together.
    pub fn product(&self, p: &BigInt) -> ModPoly {
        let mut acc = ModPoly::constant(self.unit.clone(), p);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Full factorization of `f` over Z/p. The `seed` drives the randomized
/// equal-degree splitting; the output is independent of it.
pub fn factor_modp(f: &IntPoly, p: &BigInt, seed: u64) -> Result<ModFactorization> {
    let reduced = ModPoly::reduce(f, p)?;
    factor_residue(&reduced, seed)
}

/// As [`factor_modp`] for an already reduced polynomial.
pub fn factor_residue(reduced: &ModPoly, seed: u64) -> Result<ModFactorization> {
    if reduced.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = reduced.modulus().clone();
    let unit = reduced.leading_coeff();
    let monic = reduced.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(ModPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decompose(&monic) {
        for (product, d) in distinct_degree(&part) {
            for factor in equal_degree(&product, d, &mut rng) {
                factors.push((factor, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(ModFactorization { unit: unit.mod_floor(&p), factors })
}

/// Monic squarefree decomposition in characteristic p: returns pairs
/// `(g, e)` with `g` monic squarefree, `product g^e = input`.
fn squarefree_decompose(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let p = f.modulus().clone();
    let pu = u32::try_from(&p).expect("characteristic fits u32 for p-th power descent");
    let deriv = f.derivative();
    if deriv.is_zero() {
        for (g, e) in squarefree_decompose(&pth_root(f)) {
            out.push((g, e * pu));
        }
        return out;
    }
    let mut c = f.gcd(&deriv);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        c = c.div_exact(&y);
        w = y;
    }
    if !c.is_constant() {
        for (g, e) in squarefree_decompose(&pth_root(&c)) {
            out.push((g, e * pu));
        }
    }
    out
}

/// For `f` with zero derivative mod p, the `g` with `g(x)^p = f(x)`.
fn pth_root(f: &ModPoly) -> ModPoly {
    let p = f.modulus().clone();
    let step = usize::try_from(&p).expect("characteristic fits usize");
    let coeffs: Vec<BigInt> =
        (0..=f.degree_or_zero() / step).map(|i| f.coeff(i * step)).collect();
    ModPoly::from_residues(coeffs, p)
}

/// Distinct-degree splitting of a monic squarefree polynomial: pairs
/// `(product of all irreducible factors of degree d, d)`, d ascending.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let p = f.modulus().clone();
    let mut out = Vec::new();
    let mut fs = f.clone();
    let x = ModPoly::x(&p);
    let mut h = x.clone();
    let mut d = 0u32;
    while fs.degree_or_zero() > 0 {
        d += 1;
        if 2 * d as usize > fs.degree_or_zero() {
            let deg = fs.degree_or_zero() as u32;
            out.push((fs, deg));
            break;
        }
        h = h.pow_mod(&p, &fs);
        let g = fs.gcd(&h.sub(&x));
        if !g.is_constant() {
            fs = fs.div_exact(&g);
            h = h.rem(&fs).expect("nonzero");
            out.push((g, d));
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: all monic irreducible factors
/// (each of degree `d`) of a monic squarefree product.
fn equal_degree(f: &ModPoly, d: u32, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let deg = f.degree_or_zero();
    if deg == d as usize {
        return vec![f.clone()];
    }
    let p = f.modulus().clone();
    let two = BigInt::from(2);
    loop {
        let a = random_poly(rng, &p, deg);
        if a.is_constant() {
            continue;
        }
        let t = if p == two {
            // Trace map a + a^2 + a^4 + ... over F_2.
            let mut acc = ModPoly::zero(&p);
            let mut term = a.rem(f).expect("nonzero");
            for _ in 0..d {
                acc = acc.add(&term);
                term = term.mul(&term).rem(f).expect("nonzero");
            }
            acc
        } else {
            let e = (p.pow(d) - BigInt::one()) / &two;
            a.pow_mod(&e, f).sub(&ModPoly::one(&p))
        };
        let g = f.gcd(&t);
        let k = g.degree_or_zero();
        if k > 0 && k < deg {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, p: &BigInt, below_degree: usize) -> ModPoly {
    let coeffs = (0..below_degree).map(|_| rng.gen_bigint_range(&BigInt::zero(), p)).collect();
    ModPoly::from_residues(coeffs, p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    fn mp(coeffs: &[i64], p: i64) -> ModPoly {
        ModPoly::reduce(&ip(coeffs), &BigInt::from(p)).unwrap()
    }

    #[test]
    fn reduction_normalizes_residues() {
        let f = mp(&[5, -5, 1], 3);
        assert_eq!(f.lift(), ip(&[2, 1, 1]));
        assert_eq!(mp(&[3, 6], 3), ModPoly::zero(&BigInt::from(3)));
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert!(matches!(
            ModPoly::reduce(&ip(&[1, 1]), &BigInt::from(6)),
            Err(Error::NotPrime(_))
        ));
        assert!(ModPoly::reduce(&ip(&[1, 1]), &BigInt::from(1)).is_err());
    }

    #[test]
    fn symmetric_lift() {
        let f = mp(&[4, 3, 1], 5);
        assert_eq!(f.lift_symmetric(), ip(&[-1, -2, 1]));
        let g = mp(&[1, 1], 2);
        assert_eq!(g.lift_symmetric(), ip(&[1, 1]));
    }

    #[test]
    fn division_invariant() {
        let f = mp(&[1, 0, 2, 4], 7);
        let g = mp(&[3, 5], 7);
        let (q, r) = f.divmod(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree_or_zero() < g.degree().unwrap());
    }

    #[test]
    fn gcd_and_bezout() {
        let a = mp(&[-1, 0, 1], 5);
        let b = mp(&[-1, 1], 5);
        assert_eq!(a.gcd(&b), mp(&[-1, 1], 5));
        let c = mp(&[1, 0, 1], 5);
        let d = mp(&[1, 1], 5);
        let (g, u, v) = c.extended_gcd(&d);
        assert!(g.is_one());
        assert_eq!(u.mul(&c).add(&v.mul(&d)), ModPoly::one(&BigInt::from(5)));
    }

    #[test]
    fn frobenius_power() {
        let p = BigInt::from(3);
        let f = mp(&[1, 0, 1], 3);
        let x = ModPoly::x(&p);
        assert_eq!(x.pow_mod(&p, &f), mp(&[0, 2], 3));
    }

    #[test]
    fn irreducibility_samples() {
        assert!(mp(&[1, 0, 1], 3).is_irreducible());
        assert!(!mp(&[1, 0, 1], 5).is_irreducible());
        assert!(mp(&[1, 1, 1], 2).is_irreducible());
        assert!(mp(&[1, 1, 0, 1], 2).is_irreducible());
        assert!(!mp(&[-2, 0, 1], 7).is_irreducible());
        assert!(mp(&[-2, 0, 1], 5).is_irreducible());
        assert!(mp(&[4, 1], 5).is_irreducible());
        assert!(!mp(&[3], 5).is_irreducible());
        assert!(!ModPoly::zero(&BigInt::from(5)).is_irreducible());
        // Non-monic inputs are normalized first.
        assert!(mp(&[2, 0, 2], 3).is_irreducible());
    }

    #[test]
    fn squarefree_checks() {
        assert!(mp(&[1, 1], 5).is_squarefree());
        assert!(!mp(&[1, 2, 1], 5).is_squarefree());
        // x^3 + 1 = (x+1)^3 mod 3.
        assert!(!mp(&[1, 0, 0, 1], 3).is_squarefree());
    }

    #[test]
    fn factor_linear_split() {
        let fac = factor_modp(&ip(&[-1, 0, 1]), &BigInt::from(7), 0).unwrap();
        assert_eq!(fac.unit, BigInt::one());
        assert_eq!(fac.factors, vec![(mp(&[1, 1], 7), 1), (mp(&[6, 1], 7), 1)]);
    }

    #[test]
    fn factor_with_multiplicity_and_unit() {
        // 2(x+1)^2 (x+2) mod 5
        let f = ip(&[2, 2]).mul(&ip(&[1, 1])).mul(&ip(&[2, 1]));
        let fac = factor_modp(&f, &BigInt::from(5), 0).unwrap();
        assert_eq!(fac.unit, BigInt::from(2));
        assert_eq!(fac.factors, vec![(mp(&[1, 1], 5), 2), (mp(&[2, 1], 5), 1)]);
        assert_eq!(fac.product(&BigInt::from(5)), ModPoly::reduce(&f, &BigInt::from(5)).unwrap());
    }

    #[test]
    fn factor_pth_power_descent() {
        // x^6 + 1 = (x^2 + 1)^3 mod 3.
        let fac = factor_modp(&ip(&[1, 0, 0, 0, 0, 0, 1]), &BigInt::from(3), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(&[1, 0, 1], 3), 3)]);
    }

    #[test]
    fn factor_over_f2_uses_trace_splitting() {
        // x^2 + x = x(x+1) mod 2.
        let fac = factor_modp(&ip(&[0, 1, 1]), &BigInt::from(2), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(&[0, 1], 2), 1), (mp(&[1, 1], 2), 1)]);
        // (x^2 + x + 1)(x^3 + x + 1) mod 2: distinct degrees.
        let f = ip(&[1, 1, 1]).mul(&ip(&[1, 1, 0, 1]));
        let fac = factor_modp(&f, &BigInt::from(2), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(&[1, 1, 1], 2), 1), (mp(&[1, 1, 0, 1], 2), 1)]);
    }

    #[test]
    fn factor_equal_degree_split() {
        // (x^2 + 1)(x^2 + x + 2) mod 3: both irreducible of degree 2.
        let f = ip(&[1, 0, 1]).mul(&ip(&[2, 1, 1]));
        let fac = factor_modp(&f, &BigInt::from(3), 0).unwrap();
        assert_eq!(fac.factors, vec![(mp(&[1, 0, 1], 3), 1), (mp(&[2, 1, 1], 3), 1)]);
    }

    #[test]
    fn factorization_is_seed_independent() {
        let f = ip(&[3, 1, 4, 1, 5, 9, 2, 6, 1]);
        let p = BigInt::from(13);
        let a = factor_modp(&f, &p, 0).unwrap();
        for seed in [1u64, 2, 42, 0xdead_beef] {
            assert_eq!(factor_modp(&f, &p, seed).unwrap(), a);
        }
        assert_eq!(a.product(&p), ModPoly::reduce(&f, &p).unwrap());
        for (g, _) in &a.factors {
            assert!(g.is_irreducible());
            assert!(g.is_monic());
        }
    }

    #[test]
    fn factor_zero_is_an_error() {
        assert!(matches!(
            factor_modp(&ip(&[5, 10]), &BigInt::from(5), 0),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn factor_constant_has_no_factors() {
        let fac = factor_modp(&ip(&[4]), &BigInt::from(7), 0).unwrap();
        assert_eq!(fac.unit, BigInt::from(4));
        assert!(fac.factors.is_empty());
    }
}
