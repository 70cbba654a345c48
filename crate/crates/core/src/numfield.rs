//! Arithmetic and factorization over number fields Q[y]/(m(y)).
//!
//! The minimal polynomial is validated irreducible on construction, so
//! nonzero elements always invert. Factorization over the field is Trager's
//! method: shift by a multiple of the generator until the norm (computed by
//! resultant interpolation) is squarefree, factor the norm over Q, and pull
//! each piece back with a field gcd.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{IntPoly, RatPoly};
use crate::qfactor;

/// How many generator shifts Trager tries before giving up.
pub const SHIFT_BUDGET: u32 = 20;

struct Inner {
    /// Minimal polynomial as given (integer, irreducible over Q).
    min_poly: IntPoly,
    /// The same polynomial made monic over Q; reduction modulus.
    monic: RatPoly,
}

/// A number field Q[y]/(m(y)). Cheap to clone.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

impl NumberField {
    pub fn new(min_poly: &IntPoly) -> Result<Self> {
        match min_poly.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(_) => {}
        }
        if !qfactor::is_irreducible_q(min_poly)? {
            return Err(Error::ReducibleMinimalPolynomial);
        }
        let monic = RatPoly::from_int(min_poly.clone()).monic();
        Ok(NumberField { inner: Arc::new(Inner { min_poly: min_poly.clone(), monic }) })
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.inner.min_poly
    }

    /// Extension degree over Q.
    pub fn degree(&self) -> usize {
        self.inner.monic.degree().expect("nonconstant modulus")
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.min_poly == other.inner.min_poly
    }

    pub fn elem(&self, value: RatPoly) -> NFElem {
        let value = value.rem(&self.inner.monic).expect("nonzero modulus");
        NFElem { field: self.clone(), value }
    }

    pub fn elem_from_int(&self, value: &IntPoly) -> NFElem {
        self.elem(RatPoly::from_int(value.clone()))
    }

    pub fn zero_elem(&self) -> NFElem {
        NFElem { field: self.clone(), value: RatPoly::zero() }
    }

    pub fn one_elem(&self) -> NFElem {
        self.elem(RatPoly::one())
    }

    /// The class of y.
    pub fn generator(&self) -> NFElem {
        self.elem(RatPoly::x())
    }

    pub fn poly(&self, coeffs: Vec<NFElem>) -> NFPoly {
        let coeffs = coeffs
            .into_iter()
            .map(|e| {
                assert!(self.same_field(&e.field), "element from a different field");
                e.value
            })
            .collect();
        NFPoly::from_reduced(self.clone(), coeffs)
    }

    /// Embeds a rational polynomial, coefficients as field constants.
    pub fn poly_from_rat(&self, f: &RatPoly) -> NFPoly {
        let coeffs = f.coeffs_rational().into_iter().map(RatPoly::constant).collect();
        NFPoly::from_reduced(self.clone(), coeffs)
    }

    pub fn poly_from_int(&self, f: &IntPoly) -> NFPoly {
        self.poly_from_rat(&RatPoly::from_int(f.clone()))
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[y]/({})", self.inner.min_poly)
    }
}

/// An element of a [`NumberField`]: a rational polynomial in the generator,
/// reduced below the field degree.
#[derive(Clone)]
pub struct NFElem {
    field: NumberField,
    value: RatPoly,
}

impl NFElem {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Reduced representative in y.
    pub fn value(&self) -> &RatPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    fn check(&self, other: &Self) {
        assert!(self.field.same_field(&other.field), "mixed number fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        self.field.elem(self.value.add(&other.value))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        self.field.elem(self.value.sub(&other.value))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        self.field.elem(self.value.mul(&other.value))
    }

    pub fn neg(&self) -> Self {
        NFElem { field: self.field.clone(), value: self.value.neg() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.field.one_elem();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let (g, u, _) = self.value.extended_gcd(&self.field.inner.monic);
        assert!(g.is_one(), "nonzero element coprime to an irreducible modulus");
        Ok(self.field.elem(u))
    }
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.value == other.value
    }
}

impl Eq for NFElem {}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.value)
    }
}

/// A univariate polynomial over a number field; little-endian coefficients,
/// each reduced in y.
#[derive(Clone)]
pub struct NFPoly {
    field: NumberField,
    coeffs: Vec<RatPoly>,
}

impl NFPoly {
    fn from_reduced(field: NumberField, mut coeffs: Vec<RatPoly>) -> Self {
        while coeffs.last().is_some_and(RatPoly::is_zero) {
            coeffs.pop();
        }
        NFPoly { field, coeffs }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
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

    pub fn coeff(&self, i: usize) -> NFElem {
        NFElem {
            field: self.field.clone(),
            value: self.coeffs.get(i).cloned().unwrap_or_else(RatPoly::zero),
        }
    }

    pub fn leading_coeff(&self) -> NFElem {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => self.field.zero_elem(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RatPoly::is_one)
    }

    fn check(&self, other: &Self) {
        assert!(self.field.same_field(&other.field), "mixed number fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = RatPoly::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs
                    .get(i)
                    .unwrap_or(&zero)
                    .add(other.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        Self::from_reduced(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(RatPoly::neg).collect();
        NFPoly { field: self.field.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return NFPoly { field: self.field.clone(), coeffs: Vec::new() };
        }
        let modulus = &self.field.inner.monic;
        let mut acc = vec![RatPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                acc[i + j] = acc[i + j].add(&a.mul(b));
            }
        }
        let coeffs = acc.into_iter().map(|c| c.rem(modulus).expect("nonzero modulus")).collect();
        Self::from_reduced(self.field.clone(), coeffs)
    }

    pub fn mul_elem(&self, c: &NFElem) -> Self {
        let modulus = &self.field.inner.monic;
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(&c.value).rem(modulus).expect("nonzero modulus"))
            .collect();
        Self::from_reduced(self.field.clone(), coeffs)
    }

    pub fn make_monic(&self) -> Result<Self> {
        if self.is_zero() || self.is_monic() {
            return Ok(self.clone());
        }
        Ok(self.mul_elem(&self.leading_coeff().inverse()?))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&BigRational::from(BigInt::from(i))))
            .collect();
        Self::from_reduced(self.field.clone(), coeffs)
    }

    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().expect("nonzero");
        if self.coeffs.len() < dd + 1 {
            return Ok((NFPoly { field: self.field.clone(), coeffs: Vec::new() }, self.clone()));
        }
        let modulus = &self.field.inner.monic;
        let lc_inv = divisor.leading_coeff().inverse()?.value;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![RatPoly::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let q = rem[i + dd].mul(&lc_inv).rem(modulus).expect("nonzero modulus");
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] =
                    rem[i + j].sub(&q.mul(dc)).rem(modulus).expect("nonzero modulus");
            }
            quo[i] = q;
        }
        Ok((
            Self::from_reduced(self.field.clone(), quo),
            Self::from_reduced(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divmod(divisor).expect("exact division");
        assert!(r.is_zero(), "inexact division over the field");
        q
    }

    /// Monic gcd over the field.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `f(x + c*y)` where y is the field generator.
    pub fn shift_generator(&self, c: &BigInt) -> Self {
        let shift = Self::from_reduced(
            self.field.clone(),
            vec![RatPoly::from_int(IntPoly::monomial(c.clone(), 1)), RatPoly::one()],
        );
        let mut acc = NFPoly { field: self.field.clone(), coeffs: Vec::new() };
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift);
            acc = acc.add(&NFPoly::from_reduced(self.field.clone(), vec![c.clone()]));
        }
        acc
    }

    /// Value at a rational point, as a reduced element.
    pub fn evaluate_rat(&self, x: &BigRational) -> NFElem {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        self.field.elem(acc)
    }

    /// Deterministic total order: degree first, then coefficients from the
    /// leading end (denominator, then numerator order).
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.coeffs.iter().rev().zip(other.coeffs.iter().rev()) {
            match a.den().cmp(b.den()).then_with(|| a.num().canonical_cmp(b.num())) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for NFPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for NFPoly {}

impl fmt::Debug for NFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("[{c}]*x^{i}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `unit * product(factors[i].0 ^ factors[i].1)` reconstructs the input;
/// factors are monic irreducible over the field, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NFFactorization {
    pub unit: NFElem,
    pub factors: Vec<(NFPoly, u32)>,
}

/// Trager factorization over the coefficient field of `f`.
pub fn trager_factor(f: &NFPoly) -> Result<NFFactorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading_coeff();
    let monic = f.make_monic()?;
    let mut factors: Vec<(NFPoly, u32)> = Vec::new();
    if !monic.is_constant() {
        for (part, mult) in squarefree_decompose_nf(&monic)? {
            for g in trager_split(&part)? {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(NFFactorization { unit, factors })
}

/// Irreducibility over the field: degree at least 1, one factor,
/// multiplicity one.
pub fn is_irreducible_over_nf(f: &NFPoly) -> Result<bool> {
    let fac = trager_factor(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Yun squarefree decomposition over the field (characteristic zero);
/// input monic nonconstant, parts monic squarefree.
fn squarefree_decompose_nf(f: &NFPoly) -> Result<Vec<(NFPoly, u32)>> {
    let deriv = f.derivative();
    let g = f.gcd(&deriv)?;
    if g.is_constant() {
        return Ok(vec![(f.clone(), 1)]);
    }
    let mut out = Vec::new();
    let mut w = f.div_exact(&g);
    let mut z = deriv.div_exact(&g).sub(&w.derivative());
    let mut i = 1u32;
    loop {
        let h = w.gcd(&z)?;
        if !h.is_constant() {
            out.push((h.clone(), i));
        }
        w = w.div_exact(&h);
        let y = z.div_exact(&h);
        z = y.sub(&w.derivative());
        i += 1;
        if w.is_constant() {
            break;
        }
    }
    Ok(out)
}

/// Interpolation points 0, 1, -1, 2, -2, ...
fn eval_point(i: usize) -> BigInt {
    let m = BigInt::from(i.div_ceil(2));
    if i % 2 == 1 {
        m
    } else {
        -m
    }
}

/// Norm of `f` down to Q[x]: the product of `f` over the conjugates of the
/// generator, computed by resultant interpolation. Exact; degree is
/// `[K:Q] * deg f` for monic `f`.
pub fn norm_poly(f: &NFPoly) -> Result<RatPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let n = field.degree();
    let m_int = field.min_poly();
    let m_lc = m_int.leading_coeff();
    let target_deg = n * f.degree_or_zero();
    let points: Vec<BigRational> =
        (0..=target_deg).map(|i| BigRational::from(eval_point(i))).collect();
    let mut values = Vec::with_capacity(points.len());
    for x0 in &points {
        // Value of the norm at x0: product of f(x0) over conjugates.
        let g = f.evaluate_rat(x0);
        let (g_int, dg) = g.value().int_clear();
        let value = if g_int.is_zero() {
            BigRational::zero()
        } else {
            let deg_g = g_int.degree_or_zero();
            let r = m_int.resultant(&g_int).expect("nonconstant modulus");
            let denom = m_lc.pow(u32::try_from(deg_g).expect("small degree"))
                * dg.pow(u32::try_from(n).expect("small degree"));
            BigRational::new(r, denom)
        };
        values.push(value);
    }
    // Lagrange interpolation through the sampled values.
    let mut out = RatPoly::zero();
    for (j, xj) in points.iter().enumerate() {
        if values[j].is_zero() {
            continue;
        }
        let mut num = RatPoly::one();
        let mut den = BigRational::one();
        for (i, xi) in points.iter().enumerate() {
            if i != j {
                num = num.mul(&RatPoly::x().sub(&RatPoly::constant(xi.clone())));
                den *= xj - xi;
            }
        }
        out = out.add(&num.scale(&(&values[j] / den)));
    }
    Ok(out)
}

/// Splits a monic squarefree polynomial into monic irreducible factors.
fn trager_split(f: &NFPoly) -> Result<Vec<NFPoly>> {
    if f.degree_or_zero() == 1 {
        return Ok(vec![f.clone()]);
    }
    for k in 0..SHIFT_BUDGET {
        let s = eval_point(k as usize);
        let shifted = f.shift_generator(&-&s); // f(x - s*y)
        let norm = norm_poly(&shifted)?;
        let (norm_int, _) = norm.int_clear();
        let deriv = norm_int.derivative();
        if !norm_int.gcd(&deriv).is_constant() {
            continue; // norm not squarefree; try the next shift
        }
        let fac = qfactor::factor_q(&norm_int)?;
        if fac.factors.len() == 1 {
            return Ok(vec![f.clone()]);
        }
        let mut out = Vec::with_capacity(fac.factors.len());
        for (ni, mult) in &fac.factors {
            debug_assert_eq!(*mult, 1, "squarefree norm has squarefree factors");
            let ni_k = f.field().poly_from_int(ni);
            let piece = shifted.gcd(&ni_k)?;
            debug_assert!(piece.degree_or_zero() >= 1, "norm factor must pull back");
            out.push(piece.shift_generator(&s));
        }
        debug_assert_eq!(
            out.iter().map(NFPoly::degree_or_zero).sum::<usize>(),
            f.degree_or_zero(),
            "pulled-back factors must cover the degree"
        );
        return Ok(out);
    }
    Err(Error::ShiftBudgetExhausted(SHIFT_BUDGET))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    fn sqrt2_field() -> NumberField {
        NumberField::new(&ip(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn construction_guards() {
        assert!(matches!(
            NumberField::new(&ip(&[-1, 0, 1])),
            Err(Error::ReducibleMinimalPolynomial)
        ));
        assert!(matches!(NumberField::new(&ip(&[5])), Err(Error::ConstantPolynomial)));
        assert!(matches!(NumberField::new(&IntPoly::zero()), Err(Error::ZeroPolynomial)));
        assert_eq!(sqrt2_field().degree(), 2);
        // Non-monic minimal polynomials are fine.
        assert_eq!(NumberField::new(&ip(&[-2, 0, 3])).unwrap().degree(), 2);
    }

    #[test]
    fn element_arithmetic_in_sqrt2() {
        let k = sqrt2_field();
        let y = k.generator();
        // y^2 = 2
        assert_eq!(y.mul(&y), k.elem_from_int(&ip(&[2])));
        // (1+y)(1-y) = -1
        let a = k.elem_from_int(&ip(&[1, 1]));
        let b = k.elem_from_int(&ip(&[1, -1]));
        assert_eq!(a.mul(&b), k.elem_from_int(&ip(&[-1])));
        // y^{-1} = y/2
        let inv = y.inverse().unwrap();
        assert_eq!(inv.mul(&y), k.one_elem());
        assert_eq!(inv.value(), &RatPoly::new(IntPoly::x(), BigInt::from(2)).unwrap());
        assert!(matches!(k.zero_elem().inverse(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn norm_of_linear_is_minimal_polynomial() {
        // N(x - y) over Q(sqrt 2) = x^2 - 2.
        let k = sqrt2_field();
        let f = k.poly(vec![k.generator().neg(), k.one_elem()]);
        let n = norm_poly(&f).unwrap();
        assert_eq!(n, RatPoly::from_int(ip(&[-2, 0, 1])));
    }

    #[test]
    fn splits_x2_minus_2_over_sqrt2() {
        let k = sqrt2_field();
        let f = k.poly_from_int(&ip(&[-2, 0, 1]));
        let fac = trager_factor(&f).unwrap();
        assert!(fac.unit.is_one());
        let minus = k.poly(vec![k.generator().neg(), k.one_elem()]);
        let plus = k.poly(vec![k.generator(), k.one_elem()]);
        assert_eq!(fac.factors, vec![(minus, 1), (plus, 1)]);
        assert!(!is_irreducible_over_nf(&f).unwrap());
    }

    #[test]
    fn x2_minus_3_stays_irreducible_over_sqrt2() {
        let k = sqrt2_field();
        let f = k.poly_from_int(&ip(&[-3, 0, 1]));
        assert!(is_irreducible_over_nf(&f).unwrap());
    }

    #[test]
    fn multiplicities_over_the_field() {
        let k = sqrt2_field();
        let minus = k.poly(vec![k.generator().neg(), k.one_elem()]);
        let plus = k.poly(vec![k.generator(), k.one_elem()]);
        let f = minus.mul(&minus).mul(&plus);
        let fac = trager_factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(minus, 2), (plus, 1)]);
    }

    #[test]
    fn non_monic_unit_is_reported() {
        let k = sqrt2_field();
        // (2y) * (x - y): unit 2y, monic linear factor.
        let f = k.poly(vec![k.elem_from_int(&ip(&[2])), k.elem_from_int(&ip(&[0, 2]))]);
        let fac = trager_factor(&f).unwrap();
        assert_eq!(fac.unit, k.elem_from_int(&ip(&[0, 2])));
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].0.degree(), Some(1));
    }

    #[test]
    fn degree_one_field_degenerates_to_q() {
        // Q[y]/(y+1) is just Q with y = -1.
        let k = NumberField::new(&ip(&[1, 1])).unwrap();
        assert_eq!(k.degree(), 1);
        let y = k.generator();
        assert_eq!(y, k.elem_from_int(&ip(&[-1])));
        let f = k.poly_from_int(&ip(&[-1, 0, 1]));
        let fac = trager_factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(is_irreducible_over_nf(&k.poly_from_int(&ip(&[1, 0, 1]))).unwrap());
    }

    #[test]
    fn division_and_gcd_over_field() {
        let k = sqrt2_field();
        let minus = k.poly(vec![k.generator().neg(), k.one_elem()]);
        let f = k.poly_from_int(&ip(&[-2, 0, 1]));
        let (q, r) = f.divmod(&minus).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&minus), f);
        let g = f.gcd(&minus).unwrap();
        assert_eq!(g, minus);
    }

    #[test]
    fn shift_round_trip() {
        let k = sqrt2_field();
        let f = k.poly(vec![k.generator(), k.elem_from_int(&ip(&[3])), k.one_elem()]);
        let s = BigInt::from(2);
        let back = f.shift_generator(&s).shift_generator(&-&s);
        assert_eq!(back, f);
    }

    #[test]
    #[should_panic(expected = "mixed number fields")]
    fn mixing_fields_panics() {
        let k1 = sqrt2_field();
        let k2 = NumberField::new(&ip(&[-3, 0, 1])).unwrap();
        let _ = k1.generator().add(&k2.generator());
    }
}
