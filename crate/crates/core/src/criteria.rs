//! Irreducibility analysis for family terms.
//!
//! `analyze` picks the canonical object for an index (the term itself, or
//! the term divided by `p1` at odd Lucas-type indices), then walks a fixed
//! ladder of criteria: index-divisibility shortcuts for composite indices,
//! shape-specific reducibility and irreducibility tests, then the generic
//! Eisenstein and prime-power lifting tests, and finally — in `Full` mode —
//! an actual factorization over Q. Every verdict carries a certificate
//! that `revalidate` can check from scratch, independently of how it was
//! found; a criterion whose literal witness fails to check out is skipped
//! rather than trusted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gfp::{Family, FamilySpec, Kind, Validation};
use crate::modarith::{factor_modp, ModPoly};
use crate::numfield::{is_irreducible_over_nf, NumberField};
use crate::polycore::IntPoly;
use crate::primes;
use crate::qfactor::{factor_q_seeded, is_irreducible_q};

/// Whether `analyze` may fall back to a full factorization.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    CriteriaOnly,
    Full,
}

/// Checkable evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A nonconstant proper divisor of the object.
    ProperFactor { factor: IntPoly },
    /// Irreducible factors with multiplicities, covering the object.
    FactorList { factors: Vec<(IntPoly, u32)> },
    /// The object satisfies the Eisenstein conditions at this prime.
    Eisenstein { prime: BigInt },
    /// `object = lc * base^exponent + prime * m` with `base` monic and
    /// irreducible mod `prime`, and `base` not dividing `m` mod `prime`.
    PrimePowerShape { prime: BigInt, base: IntPoly, exponent: u32 },
    /// `object = base(scale * x + offset)` with `base` irreducible over Q.
    LinearComposition { base: IntPoly, scale: BigInt, offset: BigInt },
    /// The object has degree one.
    LinearObject,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible { criterion: String, certificate: Certificate },
    Reducible { criterion: String, certificate: Certificate },
    Unknown { reason: String },
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, Verdict::Reducible { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn criterion(&self) -> Option<&str> {
        match self {
            Verdict::Irreducible { criterion, .. } | Verdict::Reducible { criterion, .. } => {
                Some(criterion)
            }
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Irreducible { certificate, .. } | Verdict::Reducible { certificate, .. } => {
                Some(certificate)
            }
            Verdict::Unknown { .. } => None,
        }
    }
}

/// Outcome of analyzing one index of a family.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub kind: Kind,
    pub index: usize,
    pub object: IntPoly,
    /// "term", or "term_over_p1" at odd Lucas-type indices.
    pub object_label: &'static str,
    pub verdict: Verdict,
}

fn irr(criterion: &str, certificate: Certificate) -> Verdict {
    Verdict::Irreducible { criterion: criterion.to_string(), certificate }
}

fn red(criterion: &str, certificate: Certificate) -> Verdict {
    Verdict::Reducible { criterion: criterion.to_string(), certificate }
}

fn unknown(reason: &str) -> Verdict {
    Verdict::Unknown { reason: reason.to_string() }
}

/// Judge the canonical object at index n.
pub fn analyze(family: &Family, n: usize, mode: Mode, seed: u64) -> Result<Analysis> {
    match family.spec().kind() {
        Kind::Fibonacci => analyze_fib(family, n, mode, seed),
        Kind::Lucas => analyze_lucas(family, n, mode, seed),
    }
}

fn finish(kind: Kind, index: usize, object: IntPoly, label: &'static str, verdict: Verdict) -> Analysis {
    Analysis { kind, index, object, object_label: label, verdict }
}

fn analyze_fib(family: &Family, n: usize, mode: Mode, seed: u64) -> Result<Analysis> {
    let object = family.term(n)?;
    let done = |v| Ok(finish(Kind::Fibonacci, n, object.clone(), "term", v));
    if n == 0 {
        return done(unknown("the object is zero"));
    }
    if n == 1 {
        return done(unknown("the object is a unit"));
    }
    let spf = smallest_prime_factor(n);
    if spf < n {
        let factor = family.term(spf)?;
        if proper_nonconstant_divisor(&object, &factor) {
            return done(red("composite_index", Certificate::ProperFactor { factor }));
        }
    }
    // n is prime from here on.
    if n % 2 == 1 {
        if let Some(cert) = crit_fib_neg_square(family, &object, n)? {
            return done(red("fib_neg_square", cert));
        }
    }
    if object.degree() == Some(1) {
        return done(irr("linear_object", Certificate::LinearObject));
    }
    if let Some(cert) = crit_fib_linear(family, &object, n)? {
        return done(irr("fib_linear", cert));
    }
    if let Some(cert) = crit_fib_monomial(family, &object, n)? {
        return done(irr("fib_monomial", cert));
    }
    if let Some(cert) = crit_eisenstein(&object) {
        return done(irr("eisenstein", cert));
    }
    if let Some(cert) = crit_schonemann(&object, &BigInt::from(n))? {
        return done(irr("schonemann", cert));
    }
    done(fallback(&object, mode, seed)?)
}

fn analyze_lucas(family: &Family, n: usize, mode: Mode, seed: u64) -> Result<Analysis> {
    if n == 0 {
        let object = family.term(0)?;
        return Ok(finish(Kind::Lucas, n, object, "term", unknown("the object is constant")));
    }
    if n % 2 == 1 {
        let object = family.over_p1(n)?;
        let done = |v| Ok(finish(Kind::Lucas, n, object.clone(), "term_over_p1", v));
        if n == 1 {
            return done(unknown("the object is a unit"));
        }
        let spf = smallest_prime_factor(n);
        if spf < n {
            let factor = family.over_p1(spf)?;
            if proper_nonconstant_divisor(&object, &factor) {
                return done(red("composite_index", Certificate::ProperFactor { factor }));
            }
        }
        // n is an odd prime from here on.
        let q = BigInt::from(n);
        if let Some(cert) = crit_lucas_negq(family, &object, &q, seed)? {
            return done(red("lucas_negq_reducible", cert));
        }
        if object.degree() == Some(1) {
            return done(irr("linear_object", Certificate::LinearObject));
        }
        if let Some(cert) = crit_lucas_monomial(family.spec(), &object, &q) {
            return done(irr("lucas_monomial", cert));
        }
        if let Some(cert) = crit_lucas_linear(family.spec(), &object, n)? {
            return done(irr("lucas_linear", cert));
        }
        if let Some(cert) = crit_lucas_modq(family.spec(), &object, n)? {
            return done(irr("lucas_modq_irreducible", cert));
        }
        if let Some(cert) = crit_lucas_eisenstein_shape(family.spec(), &object, &q) {
            return done(irr("lucas_eisenstein_shape", cert));
        }
        if let Some(cert) = crit_eisenstein(&object) {
            return done(irr("eisenstein", cert));
        }
        if let Some(cert) = crit_schonemann(&object, &q)? {
            return done(irr("schonemann", cert));
        }
        done(fallback(&object, mode, seed)?)
    } else {
        let object = family.term(n)?;
        let done = |v| Ok(finish(Kind::Lucas, n, object.clone(), "term", v));
        let odd_part = n >> n.trailing_zeros();
        if odd_part > 1 {
            let r = smallest_prime_factor(odd_part);
            let factor = family.term(n / r)?;
            if proper_nonconstant_divisor(&object, &factor) {
                return done(red("composite_index", Certificate::ProperFactor { factor }));
            }
        } else {
            if object.degree() == Some(1) {
                return done(irr("linear_object", Certificate::LinearObject));
            }
            if let Some(cert) = crit_lucas_power2(family.spec(), &object) {
                return done(irr("lucas_power2", cert));
            }
        }
        if let Some(cert) = crit_eisenstein(&object) {
            return done(irr("eisenstein", cert));
        }
        if let Some(cert) = crit_schonemann(&object, &BigInt::from(2))? {
            return done(irr("schonemann", cert));
        }
        done(fallback(&object, mode, seed)?)
    }
}

fn fallback(object: &IntPoly, mode: Mode, seed: u64) -> Result<Verdict> {
    match mode {
        Mode::CriteriaOnly => Ok(unknown("no criterion applied")),
        Mode::Full => {
            let fac = factor_q_seeded(object, seed)?;
            let nonconstant: u32 = fac
                .factors
                .iter()
                .filter(|(f, _)| f.degree_or_zero() >= 1)
                .map(|(_, m)| *m)
                .sum();
            let cert = Certificate::FactorList { factors: fac.factors };
            if nonconstant == 1 {
                Ok(irr("factorization", cert))
            } else {
                Ok(red("factorization", cert))
            }
        }
    }
}

// ---- criteria ----

/// g = -m^2 splits odd-index terms as a difference of squares.
fn crit_fib_neg_square(family: &Family, object: &IntPoly, n: usize) -> Result<Option<Certificate>> {
    let m = match poly_sqrt(&family.spec().g().neg()) {
        Some(m) => m,
        None => return Ok(None),
    };
    let k = (n - 1) / 2;
    let factor = family.term(k + 1)?.sub(&m.mul(&family.term(k)?));
    if proper_nonconstant_divisor(object, &factor) {
        Ok(Some(Certificate::ProperFactor { factor }))
    } else {
        Ok(None)
    }
}

/// g = 1 and d affine: the term is the classical term composed with d.
fn crit_fib_linear(family: &Family, object: &IntPoly, n: usize) -> Result<Option<Certificate>> {
    let spec = family.spec();
    if !spec.g().is_one() || spec.d().degree() != Some(1) {
        return Ok(None);
    }
    composition_certificate(IntPoly::one(), spec.d(), object, n, Kind::Fibonacci)
}

/// Constant g and d a linear monomial. The base term's irreducibility is
/// verified over Q rather than assumed, so negative constants are admitted
/// too; when the base splits (g = -m^2, say) the certificate declines.
fn crit_fib_monomial(family: &Family, object: &IntPoly, n: usize) -> Result<Option<Certificate>> {
    let spec = family.spec();
    let k = match const_value(spec.g()) {
        Some(k) if !k.is_zero() => k,
        _ => return Ok(None),
    };
    match monomial_parts(spec.d()) {
        Some((_, 1)) => {}
        _ => return Ok(None),
    }
    composition_certificate(IntPoly::constant(k), spec.d(), object, n, Kind::Fibonacci)
}

/// Certify `object = base(d)` with base the classical (d = x) term, by
/// checking the composition exactly and factoring the base over Q.
fn composition_certificate(
    g: IntPoly,
    d: &IntPoly,
    object: &IntPoly,
    n: usize,
    kind: Kind,
) -> Result<Option<Certificate>> {
    let base = match kind {
        Kind::Fibonacci => {
            let fam = match Family::new(FamilySpec::fibonacci(IntPoly::x(), g), Validation::Relaxed)
            {
                Ok(fam) => fam,
                Err(_) => return Ok(None),
            };
            fam.term(n)?
        }
        Kind::Lucas => {
            let spec = match FamilySpec::lucas(BigInt::from(2), IntPoly::x(), g) {
                Ok(spec) => spec,
                Err(_) => return Ok(None),
            };
            let fam = match Family::new(spec, Validation::Relaxed) {
                Ok(fam) => fam,
                Err(_) => return Ok(None),
            };
            fam.over_p1(n)?
        }
    };
    if base.compose(d) != *object || !is_irreducible_q(&base)? {
        return Ok(None);
    }
    Ok(Some(Certificate::LinearComposition {
        base,
        scale: d.leading_coeff(),
        offset: d.coeff(0),
    }))
}

/// g = -q h^2 with q = 3 mod 4 forces an odd-prime-index split; the
/// certificate is an actual factorization.
fn crit_lucas_negq(
    family: &Family,
    object: &IntPoly,
    q: &BigInt,
    seed: u64,
) -> Result<Option<Certificate>> {
    if (q % BigInt::from(4)) != BigInt::from(3) {
        return Ok(None);
    }
    let scaled = match try_scalar_div(family.spec().g(), &-q.clone()) {
        Some(s) => s,
        None => return Ok(None),
    };
    if poly_sqrt(&scaled).is_none() {
        return Ok(None);
    }
    let fac = factor_q_seeded(object, seed)?;
    let nonconstant: u32 = fac
        .factors
        .iter()
        .filter(|(f, _)| f.degree_or_zero() >= 1)
        .map(|(_, m)| *m)
        .sum();
    if nonconstant >= 2 {
        Ok(Some(Certificate::FactorList { factors: fac.factors }))
    } else {
        Ok(None)
    }
}

/// d a monomial with the index prime q dividing neither its coefficient
/// nor the content of g: the object is Eisenstein at q.
fn crit_lucas_monomial(spec: &FamilySpec, object: &IntPoly, q: &BigInt) -> Option<Certificate> {
    let (a, _) = monomial_parts(spec.d())?;
    if !q.gcd(&a).is_one() || (spec.g().content() % q).is_zero() {
        return None;
    }
    eisenstein_witness(object, q).then(|| Certificate::Eisenstein { prime: q.clone() })
}

/// d affine and g a constant prime to the index: the object is the
/// composition of an Eisenstein base (the d = x object) with d.
fn crit_lucas_linear(spec: &FamilySpec, object: &IntPoly, n: usize) -> Result<Option<Certificate>> {
    if spec.d().degree() != Some(1) {
        return Ok(None);
    }
    let gv = match const_value(spec.g()) {
        Some(v) => v,
        None => return Ok(None),
    };
    if (&gv % BigInt::from(n)).is_zero() {
        return Ok(None);
    }
    composition_certificate(IntPoly::constant(gv), spec.d(), object, n, Kind::Lucas)
}

/// d irreducible mod the index prime q: the object is d^(q-1) plus q
/// times a cofactor prime to d, a prime-power shape at base d.
fn crit_lucas_modq(spec: &FamilySpec, object: &IntPoly, n: usize) -> Result<Option<Certificate>> {
    let q = BigInt::from(n);
    let d = spec.d();
    if (d.leading_coeff() % &q).is_zero() {
        return Ok(None);
    }
    let dbar = ModPoly::reduce(d, &q)?;
    if !dbar.is_irreducible() {
        return Ok(None);
    }
    let diff = object.sub(&d.pow((n - 1) as u32));
    let h = match try_scalar_div(&diff, &q) {
        Some(h) => h,
        None => return Ok(None),
    };
    let hbar = ModPoly::reduce(&h, &q)?;
    if !dbar.gcd(&hbar).is_one() {
        return Ok(None);
    }
    let base = dbar.make_monic().lift_symmetric();
    let e = (n - 1) as u32;
    if !schonemann_witness(object, &q, &base, e) {
        return Ok(None);
    }
    Ok(Some(Certificate::PrimePowerShape { prime: q, base, exponent: e }))
}

/// d congruent to a monomial mod the index prime q, with g(0) a unit
/// mod q: the object is Eisenstein at q. Also accepts the shape through
/// the proxy w = d^(q-1) + q g^((q-1)/2).
fn crit_lucas_eisenstein_shape(
    spec: &FamilySpec,
    object: &IntPoly,
    q: &BigInt,
) -> Option<Certificate> {
    let d = spec.d();
    let g = spec.g();
    let deg = d.degree()?;
    let monomial_mod_q = !(d.leading_coeff() % q).is_zero()
        && (0..deg).all(|i| (d.coeff(i) % q).is_zero())
        && !(g.coeff(0) % q).is_zero();
    let shape = monomial_mod_q || {
        let n = usize::try_from(q).ok()?;
        let w = d.pow((n - 1) as u32).add(&g.pow(((n - 1) / 2) as u32).scaled(q));
        eisenstein_witness(&w, q)
    };
    (shape && eisenstein_witness(object, q)).then(|| Certificate::Eisenstein { prime: q.clone() })
}

/// Power-of-two index: with p0 = ±2, d a monomial mod 2, and g(0) odd,
/// the term is Eisenstein at 2.
fn crit_lucas_power2(spec: &FamilySpec, object: &IntPoly) -> Option<Certificate> {
    let two = BigInt::from(2);
    let p0 = spec.p0()?;
    if p0.abs() != two {
        return None;
    }
    let d = spec.d();
    let deg = d.degree()?;
    if (d.leading_coeff() % &two).is_zero()
        || (0..deg).any(|i| !(d.coeff(i) % &two).is_zero())
        || (spec.g().coeff(0) % &two).is_zero()
    {
        return None;
    }
    eisenstein_witness(object, &two).then(|| Certificate::Eisenstein { prime: two })
}

/// Smallest usable Eisenstein prime, scanning the factored gcd of the
/// non-leading coefficients of the primitive part.
fn crit_eisenstein(object: &IntPoly) -> Option<Certificate> {
    let (_, pp) = object.content_primitive();
    let deg = pp.degree()?;
    if deg < 1 {
        return None;
    }
    let mut g = BigInt::zero();
    for i in 0..deg {
        g = g.gcd(&pp.coeff(i));
    }
    if g <= BigInt::one() {
        return None;
    }
    let mut primes: Vec<BigInt> = primes::factorize(&g).into_iter().map(|(p, _)| p).collect();
    primes.sort();
    primes
        .into_iter()
        .find(|q| eisenstein_witness(&pp, q))
        .map(|prime| Certificate::Eisenstein { prime })
}

/// The object mod q is a proper power of a single irreducible, and the
/// lift certifies it.
fn crit_schonemann(object: &IntPoly, q: &BigInt) -> Result<Option<Certificate>> {
    let (_, pp) = object.content_primitive();
    if pp.degree_or_zero() < 2 || (pp.leading_coeff() % q).is_zero() {
        return Ok(None);
    }
    let fac = factor_modp(&pp, q, 0)?;
    if fac.factors.len() != 1 {
        return Ok(None);
    }
    let (phi, e) = &fac.factors[0];
    if *e < 2 || phi.degree_or_zero() < 1 {
        return Ok(None);
    }
    let base = phi.lift_symmetric();
    if !schonemann_witness(&pp, q, &base, *e) {
        return Ok(None);
    }
    Ok(Some(Certificate::PrimePowerShape { prime: q.clone(), base, exponent: *e }))
}

// ---- witnesses and helpers ----

/// Literal Eisenstein check at q on the primitive part.
pub fn eisenstein_witness(f: &IntPoly, q: &BigInt) -> bool {
    let (_, pp) = f.content_primitive();
    let deg = match pp.degree() {
        Some(deg) if deg >= 1 => deg,
        _ => return false,
    };
    if (pp.leading_coeff() % q).is_zero() {
        return false;
    }
    if (0..deg).any(|i| !(pp.coeff(i) % q).is_zero()) {
        return false;
    }
    !(pp.coeff(0) % (q * q)).is_zero()
}

/// Check `f = lc * base^e + q * m` with base monic, irreducible mod q of
/// matching degree, and `base` not dividing `m` mod q. Works on the
/// primitive part of f.
pub fn schonemann_witness(f: &IntPoly, q: &BigInt, base: &IntPoly, e: u32) -> bool {
    let (_, pp) = f.content_primitive();
    let deg = pp.degree_or_zero();
    let base_deg = base.degree_or_zero();
    if base_deg < 1 || e < 2 || base_deg * e as usize != deg {
        return false;
    }
    if !base.leading_coeff().is_one() || (pp.leading_coeff() % q).is_zero() {
        return false;
    }
    let base_bar = match ModPoly::reduce(base, q) {
        Ok(b) => b,
        Err(_) => return false,
    };
    if base_bar.degree() != Some(base_deg) || !base_bar.is_irreducible() {
        return false;
    }
    let diff = pp.sub(&base.pow(e).scaled(&pp.leading_coeff()));
    let m = match try_scalar_div(&diff, q) {
        Some(m) => m,
        None => return false,
    };
    let m_bar = match ModPoly::reduce(&m, q) {
        Ok(m) => m,
        Err(_) => return false,
    };
    match m_bar.rem(&base_bar) {
        Ok(r) => !r.is_zero(),
        Err(_) => false,
    }
}

/// n itself when n is prime or < 2.
fn smallest_prime_factor(n: usize) -> usize {
    if n < 2 {
        return n;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

fn proper_nonconstant_divisor(object: &IntPoly, factor: &IntPoly) -> bool {
    factor.degree_or_zero() >= 1
        && factor.degree_or_zero() < object.degree_or_zero()
        && object.divides_exactly(factor)
}

fn const_value(f: &IntPoly) -> Option<BigInt> {
    (f.degree() == Some(0)).then(|| f.coeff(0))
}

fn monomial_parts(d: &IntPoly) -> Option<(BigInt, usize)> {
    let deg = d.degree()?;
    if deg == 0 || (0..deg).any(|i| !d.coeff(i).is_zero()) {
        return None;
    }
    Some((d.leading_coeff(), deg))
}

/// Coefficient-wise exact division by a scalar, None on any remainder.
fn try_scalar_div(f: &IntPoly, divisor: &BigInt) -> Option<IntPoly> {
    if divisor.is_zero() {
        return None;
    }
    let mut out = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        let (quo, rem) = c.div_rem(divisor);
        if !rem.is_zero() {
            return None;
        }
        out.push(quo);
    }
    Some(IntPoly::from_coeffs(out))
}

/// Integer-coefficient square root of a polynomial, if one exists.
fn poly_sqrt(f: &IntPoly) -> Option<IntPoly> {
    if f.is_zero() {
        return Some(IntPoly::zero());
    }
    let deg = f.degree()?;
    if deg % 2 != 0 {
        return None;
    }
    let m = deg / 2;
    let lead = primes::perfect_sqrt(&f.leading_coeff())?;
    let mut s = vec![BigInt::zero(); m + 1];
    s[m] = lead.clone();
    let denom = BigInt::from(2) * &lead;
    for k in 1..=m {
        let mut acc = f.coeff(deg - k);
        for i in (m - k + 1)..m {
            acc -= &s[i] * &s[2 * m - k - i];
        }
        let (quo, rem) = acc.div_rem(&denom);
        if !rem.is_zero() {
            return None;
        }
        s[m - k] = quo;
    }
    let cand = IntPoly::from_coeffs(s);
    (cand.mul(&cand) == *f).then_some(cand)
}

// ---- certificate re-validation ----

/// Re-check a verdict's certificate against the object from scratch.
pub fn revalidate(object: &IntPoly, verdict: &Verdict) -> Result<()> {
    let invalid = |msg: &str| Err(Error::CertificateInvalid(msg.to_string()));
    match verdict {
        Verdict::Unknown { .. } => Ok(()),
        Verdict::Reducible { certificate, .. } => match certificate {
            Certificate::ProperFactor { factor } => {
                if proper_nonconstant_divisor(object, factor) {
                    Ok(())
                } else {
                    invalid("claimed factor is not a proper nonconstant divisor")
                }
            }
            Certificate::FactorList { factors } => {
                check_factor_list(object, factors, false)
            }
            _ => invalid("certificate does not witness reducibility"),
        },
        Verdict::Irreducible { certificate, .. } => match certificate {
            Certificate::Eisenstein { prime } => {
                if !primes::is_prime(prime) {
                    return invalid("Eisenstein witness is not prime");
                }
                if eisenstein_witness(object, prime) {
                    Ok(())
                } else {
                    invalid("Eisenstein conditions do not hold")
                }
            }
            Certificate::PrimePowerShape { prime, base, exponent } => {
                if !primes::is_prime(prime) {
                    return invalid("prime-power witness is not prime");
                }
                if schonemann_witness(object, prime, base, *exponent) {
                    Ok(())
                } else {
                    invalid("prime-power shape does not check out")
                }
            }
            Certificate::LinearComposition { base, scale, offset } => {
                if scale.is_zero() || base.degree_or_zero() < 1 {
                    return invalid("degenerate composition");
                }
                let inner = IntPoly::from_coeffs(vec![offset.clone(), scale.clone()]);
                if base.compose(&inner) != *object {
                    return invalid("composition does not reproduce the object");
                }
                if is_irreducible_q(base)? {
                    Ok(())
                } else {
                    invalid("composition base is reducible")
                }
            }
            Certificate::LinearObject => {
                if object.degree() == Some(1) {
                    Ok(())
                } else {
                    invalid("object is not linear")
                }
            }
            Certificate::FactorList { factors } => check_factor_list(object, factors, true),
            Certificate::ProperFactor { .. } => {
                invalid("a proper factor cannot witness irreducibility")
            }
        },
    }
}

fn check_factor_list(object: &IntPoly, factors: &[(IntPoly, u32)], single: bool) -> Result<()> {
    let invalid = |msg: &str| Err(Error::CertificateInvalid(msg.to_string()));
    let mut product = IntPoly::one();
    let mut nonconstant = 0u32;
    for (f, mult) in factors {
        if *mult == 0 {
            return invalid("zero multiplicity in factor list");
        }
        if f.degree_or_zero() >= 1 {
            nonconstant += mult;
        }
        product = product.mul(&f.pow(*mult));
    }
    let pp_obj = positive_primitive(object);
    let pp_prod = positive_primitive(&product);
    if pp_obj != pp_prod {
        return invalid("factor list does not multiply back to the object");
    }
    if single && nonconstant != 1 {
        return invalid("factor list is not a single irreducible");
    }
    if !single && nonconstant < 2 {
        return invalid("factor list has fewer than two nonconstant parts");
    }
    Ok(())
}

fn positive_primitive(f: &IntPoly) -> IntPoly {
    let (_, pp) = f.content_primitive();
    if pp.leading_coeff().is_negative() {
        pp.neg()
    } else {
        pp
    }
}

// ---- lifted equivalence checks ----

/// Direct and lifted irreducibility answers, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapelliCheck {
    pub direct: bool,
    pub lifted: bool,
}

impl CapelliCheck {
    pub fn agrees(&self) -> bool {
        self.direct == self.lifted
    }
}

/// Decide irreducibility of `d(x)^2 - y g(x)` over Q[y]/(base), with the
/// convention that a reducible base makes the answer false.
fn capelli_lift(d: &IntPoly, g: &IntPoly, base: &IntPoly) -> Result<bool> {
    if !is_irreducible_q(base)? {
        return Ok(false);
    }
    let field = NumberField::new(base)?;
    let d2 = d.mul(d);
    let top = d2.degree_or_zero().max(g.degree_or_zero());
    let mut coeffs = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let value = IntPoly::from_coeffs(vec![d2.coeff(j), -g.coeff(j)]);
        coeffs.push(field.elem_from_int(&value));
    }
    let f = field.poly(coeffs);
    is_irreducible_over_nf(&f)
}

/// Compare factoring the odd-prime-index term directly against lifting
/// to the field cut out by the classical even part.
pub fn capelli_fib_equiv(family: &Family, p: usize) -> Result<CapelliCheck> {
    let spec = family.spec();
    if spec.kind() != Kind::Fibonacci {
        return Err(Error::ContractViolation("expected a Fibonacci-type family".into()));
    }
    if p < 3 || p % 2 == 0 || smallest_prime_factor(p) != p {
        return Err(Error::ContractViolation("index must be an odd prime".into()));
    }
    let object = family.term(p)?;
    let direct = is_irreducible_q(&object)?;
    let classical =
        Family::new(FamilySpec::fibonacci(IntPoly::x(), IntPoly::one()), Validation::Strict)?;
    let base = classical.term(p)?.even_part()?;
    let lifted = capelli_lift(spec.d(), spec.g(), &base)?;
    Ok(CapelliCheck { direct, lifted })
}

/// Same comparison for the odd-prime-index Lucas-type object.
pub fn capelli_lucas_equiv(family: &Family, p: usize) -> Result<CapelliCheck> {
    let spec = family.spec();
    if spec.kind() != Kind::Lucas {
        return Err(Error::ContractViolation("expected a Lucas-type family".into()));
    }
    if p < 3 || p % 2 == 0 || smallest_prime_factor(p) != p {
        return Err(Error::ContractViolation("index must be an odd prime".into()));
    }
    let object = family.over_p1(p)?;
    let direct = is_irreducible_q(&object)?;
    let classical = Family::new(
        FamilySpec::lucas(BigInt::from(2), IntPoly::x(), IntPoly::one())?,
        Validation::Strict,
    )?;
    let base = classical.over_p1(p)?.even_part()?;
    let lifted = capelli_lift(spec.d(), spec.g(), &base)?;
    Ok(CapelliCheck { direct, lifted })
}

/// Same comparison for power-of-two Lucas-type indices.
pub fn capelli_pow2_equiv(family: &Family, n: usize) -> Result<CapelliCheck> {
    let spec = family.spec();
    if spec.kind() != Kind::Lucas {
        return Err(Error::ContractViolation("expected a Lucas-type family".into()));
    }
    if n < 2 || n & (n - 1) != 0 {
        return Err(Error::ContractViolation("index must be a power of two, at least 2".into()));
    }
    let object = family.term(n)?;
    let direct = is_irreducible_q(&object)?;
    let classical = Family::new(
        FamilySpec::lucas(BigInt::from(2), IntPoly::x(), IntPoly::one())?,
        Validation::Strict,
    )?;
    let base = classical.term(n)?.even_part()?;
    let lifted = capelli_lift(spec.d(), spec.g(), &base)?;
    Ok(CapelliCheck { direct, lifted })
}

/// For g = 1 the term is a plain composition with d, so the lift uses
/// `d(x) - y` over the field cut out by the full classical term.
pub fn capelli_linear_g1(family: &Family, p: usize) -> Result<CapelliCheck> {
    let spec = family.spec();
    if spec.kind() != Kind::Fibonacci || !spec.g().is_one() {
        return Err(Error::ContractViolation("expected a Fibonacci-type family with g = 1".into()));
    }
    if p < 2 || smallest_prime_factor(p) != p {
        return Err(Error::ContractViolation("index must be prime".into()));
    }
    let object = family.term(p)?;
    let direct = is_irreducible_q(&object)?;
    let classical =
        Family::new(FamilySpec::fibonacci(IntPoly::x(), IntPoly::one()), Validation::Strict)?;
    let base = classical.term(p)?;
    let lifted = if !is_irreducible_q(&base)? {
        false
    } else {
        let field = NumberField::new(&base)?;
        let d = spec.d();
        let mut coeffs = Vec::with_capacity(d.degree_or_zero() + 1);
        for j in 0..=d.degree_or_zero() {
            let value = if j == 0 {
                IntPoly::from_coeffs(vec![d.coeff(0), BigInt::from(-1)])
            } else {
                IntPoly::constant(d.coeff(j))
            };
            coeffs.push(field.elem_from_int(&value));
        }
        is_irreducible_over_nf(&field.poly(coeffs))?
    };
    Ok(CapelliCheck { direct, lifted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfp::builtin;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    fn custom_fib(d: &[i64], g: &[i64]) -> Family {
        Family::new(FamilySpec::fibonacci(ip(d), ip(g)), Validation::Strict).unwrap()
    }

    fn custom_lucas(p0: i64, p1: &[i64], g: &[i64]) -> Family {
        let spec = FamilySpec::lucas(BigInt::from(p0), ip(p1), ip(g)).unwrap();
        Family::new(spec, Validation::Strict).unwrap()
    }

    #[test]
    fn composite_fibonacci_index_splits() {
        let fam = builtin("fibonacci").unwrap();
        let a = analyze(&fam, 6, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("composite_index"));
        assert!(a.verdict.is_reducible());
        match a.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => assert_eq!(*factor, ip(&[0, 1])),
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();
    }

    #[test]
    fn composite_lucas_indices_split() {
        let fam = builtin("lucas").unwrap();
        let odd = analyze(&fam, 9, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(odd.verdict.criterion(), Some("composite_index"));
        assert_eq!(odd.object_label, "term_over_p1");
        match odd.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => assert_eq!(*factor, ip(&[3, 0, 1])),
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&odd.object, &odd.verdict).unwrap();

        let even = analyze(&fam, 6, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(even.verdict.criterion(), Some("composite_index"));
        assert_eq!(even.object_label, "term");
        match even.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => assert_eq!(*factor, ip(&[2, 0, 1])),
            other => panic!("unexpected certificate {other:?}"),
        }

        let twelve = analyze(&fam, 12, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(twelve.verdict.criterion(), Some("composite_index"));
        match twelve.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => {
                assert_eq!(*factor, fam.term(4).unwrap());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn trivial_indices_stay_unknown() {
        let fib = builtin("fibonacci").unwrap();
        assert!(analyze(&fib, 0, Mode::Full, 0).unwrap().verdict.is_unknown());
        assert!(analyze(&fib, 1, Mode::Full, 0).unwrap().verdict.is_unknown());
        let luc = builtin("lucas").unwrap();
        assert!(analyze(&luc, 0, Mode::Full, 0).unwrap().verdict.is_unknown());
        let unit = analyze(&luc, 1, Mode::Full, 0).unwrap();
        assert!(unit.verdict.is_unknown());
        assert_eq!(unit.object_label, "term_over_p1");
        assert!(unit.object.is_one());
    }

    #[test]
    fn neg_square_g_splits_odd_primes() {
        let fam = builtin("chebyshevU").unwrap();
        let a = analyze(&fam, 5, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("fib_neg_square"));
        match a.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => assert_eq!(*factor, ip(&[-1, -2, 4])),
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();

        let wide = custom_fib(&[0, 1], &[-4]);
        let b = analyze(&wide, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("fib_neg_square"));
        match b.verdict.certificate().unwrap() {
            Certificate::ProperFactor { factor } => assert_eq!(*factor, ip(&[-2, 1])),
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn linear_g1_composition_fires() {
        let fib = builtin("fibonacci").unwrap();
        let a = analyze(&fib, 5, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("fib_linear"));
        match a.verdict.certificate().unwrap() {
            Certificate::LinearComposition { base, scale, offset } => {
                assert_eq!(*base, ip(&[1, 0, 3, 0, 1]));
                assert_eq!(*scale, BigInt::one());
                assert!(offset.is_zero());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();

        let affine = custom_fib(&[1, 1], &[1]);
        let b = analyze(&affine, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("fib_linear"));
        assert_eq!(b.object, ip(&[2, 2, 1]));

        let pell = builtin("pell").unwrap();
        let c = analyze(&pell, 7, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(c.verdict.criterion(), Some("fib_linear"));
    }

    #[test]
    fn monomial_d_with_constant_g_fires() {
        let fam = custom_fib(&[0, 3], &[2]);
        let a = analyze(&fam, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("fib_monomial"));
        assert_eq!(a.object, ip(&[2, 0, 9]));
        match a.verdict.certificate().unwrap() {
            Certificate::LinearComposition { base, scale, .. } => {
                assert_eq!(*base, ip(&[2, 0, 1]));
                assert_eq!(*scale, BigInt::from(3));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();

        // A negative square as g sinks the base itself, so the criterion
        // declines and the reducibility route wins instead.
        let neg = custom_fib(&[0, 2], &[-1]);
        let b = analyze(&neg, 5, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("fib_neg_square"));
    }

    #[test]
    fn second_index_linear_object() {
        let fam = builtin("vieta").unwrap();
        let a = analyze(&fam, 2, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("linear_object"));
        revalidate(&a.object, &a.verdict).unwrap();
    }

    #[test]
    fn fermat_small_primes() {
        let fam = builtin("fermat").unwrap();
        for p in [3usize, 5, 7, 11, 13] {
            let a = analyze(&fam, p, Mode::CriteriaOnly, 0).unwrap();
            assert_eq!(a.verdict.criterion(), Some("fib_monomial"), "index {p}");
            match a.verdict.certificate().unwrap() {
                Certificate::LinearComposition { scale, offset, .. } => {
                    assert_eq!(*scale, BigInt::from(3));
                    assert!(offset.is_zero());
                }
                other => panic!("unexpected certificate {other:?}"),
            }
            revalidate(&a.object, &a.verdict).unwrap();
        }

        // The index-5 term also carries a prime-power witness at 5 (it is
        // the square of x^2 - 2 mod 5 and the lift checks out), so the
        // generic ladder would still catch it without the monomial route.
        let object = fam.term(5).unwrap();
        assert_eq!(object, ip(&[4, 0, -54, 0, 81]));
        match crit_schonemann(&object, &BigInt::from(5)).unwrap().unwrap() {
            Certificate::PrimePowerShape { prime, base, exponent } => {
                assert_eq!(prime, BigInt::from(5));
                assert_eq!(base, ip(&[-2, 0, 1]));
                assert_eq!(exponent, 2);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(is_irreducible_q(&object).unwrap());
    }

    #[test]
    fn negative_prime_square_g_is_reducible() {
        let fam = custom_lucas(2, &[0, 1], &[-3]);
        let a = analyze(&fam, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_negq_reducible"));
        assert_eq!(a.object, ip(&[-9, 0, 1]));
        match a.verdict.certificate().unwrap() {
            Certificate::FactorList { factors } => {
                assert_eq!(factors.len(), 2);
                assert_eq!(factors[0].0, ip(&[-3, 1]));
                assert_eq!(factors[1].0, ip(&[3, 1]));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();
    }

    #[test]
    fn monomial_lucas_eisenstein_at_index() {
        let fam = builtin("vietaLucas").unwrap();
        let a = analyze(&fam, 5, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_monomial"));
        assert_eq!(a.object, ip(&[5, 0, -5, 0, 1]));
        match a.verdict.certificate().unwrap() {
            Certificate::Eisenstein { prime } => assert_eq!(*prime, BigInt::from(5)),
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();

        let fl = builtin("fermatLucas").unwrap();
        let b = analyze(&fl, 5, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("lucas_monomial"));
        assert_eq!(b.object, ip(&[20, 0, -90, 0, 81]));
    }

    #[test]
    fn affine_lucas_composes_eisenstein_base() {
        let fl = builtin("fermatLucas").unwrap();
        let a = analyze(&fl, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_linear"));
        assert_eq!(a.object, ip(&[-6, 0, 9]));
        match a.verdict.certificate().unwrap() {
            Certificate::LinearComposition { base, scale, offset } => {
                assert_eq!(*base, ip(&[-6, 0, 1]));
                assert_eq!(*scale, BigInt::from(3));
                assert!(offset.is_zero());
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();

        let shifted = custom_lucas(2, &[1, 1], &[-1]);
        let b = analyze(&shifted, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("lucas_linear"));
        assert_eq!(b.object, ip(&[-2, 2, 1]));
    }

    #[test]
    fn mod_index_irreducible_d_lifts() {
        let fam = custom_lucas(2, &[1, 0, 1], &[0, 1]);
        let a = analyze(&fam, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_modq_irreducible"));
        assert_eq!(a.object, ip(&[1, 3, 2, 0, 1]));
        match a.verdict.certificate().unwrap() {
            Certificate::PrimePowerShape { prime, base, exponent } => {
                assert_eq!(*prime, BigInt::from(3));
                assert_eq!(*base, ip(&[1, 0, 1]));
                assert_eq!(*exponent, 2);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();
        assert!(is_irreducible_q(&a.object).unwrap());
    }

    #[test]
    fn monomial_mod_index_shape_fires() {
        let fam = custom_lucas(2, &[3, 0, 1], &[1]);
        let a = analyze(&fam, 3, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_eisenstein_shape"));
        assert_eq!(a.object, ip(&[12, 0, 6, 0, 1]));
        match a.verdict.certificate().unwrap() {
            Certificate::Eisenstein { prime } => assert_eq!(*prime, BigInt::from(3)),
            other => panic!("unexpected certificate {other:?}"),
        }
        revalidate(&a.object, &a.verdict).unwrap();
    }

    #[test]
    fn power_of_two_indices() {
        let luc = builtin("lucas").unwrap();
        let a = analyze(&luc, 4, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(a.verdict.criterion(), Some("lucas_power2"));
        assert_eq!(a.object, ip(&[2, 0, 4, 0, 1]));
        revalidate(&a.object, &a.verdict).unwrap();

        let vl = builtin("vietaLucas").unwrap();
        let b = analyze(&vl, 8, Mode::CriteriaOnly, 0).unwrap();
        assert_eq!(b.verdict.criterion(), Some("lucas_power2"));

        let t = builtin("chebyshevT").unwrap();
        let c = analyze(&t, 4, Mode::CriteriaOnly, 0).unwrap();
        assert!(c.verdict.is_unknown());
        let d = analyze(&t, 4, Mode::Full, 0).unwrap();
        assert_eq!(d.verdict.criterion(), Some("factorization"));
        assert!(d.verdict.is_irreducible());
        assert_eq!(d.object, ip(&[1, 0, -8, 0, 8]));

        let fl = builtin("fermatLucas").unwrap();
        let e = analyze(&fl, 2, Mode::Full, 0).unwrap();
        assert!(e.verdict.is_reducible());
        assert_eq!(e.verdict.criterion(), Some("factorization"));
        revalidate(&e.object, &e.verdict).unwrap();
    }

    #[test]
    fn revalidation_rejects_mismatched_certificates() {
        let fam = builtin("vietaLucas").unwrap();
        let a = analyze(&fam, 5, Mode::CriteriaOnly, 0).unwrap();
        let wrong = ip(&[7, 0, -5, 0, 1]);
        assert!(matches!(
            revalidate(&wrong, &a.verdict),
            Err(Error::CertificateInvalid(_))
        ));
        let bogus = Verdict::Reducible {
            criterion: "composite_index".into(),
            certificate: Certificate::ProperFactor { factor: ip(&[1, 1]) },
        };
        assert!(matches!(
            revalidate(&a.object, &bogus),
            Err(Error::CertificateInvalid(_))
        ));
    }

    #[test]
    fn schonemann_direct_witness() {
        let f = ip(&[1, 3, 2, 0, 1]);
        let cert = crit_schonemann(&f, &BigInt::from(3)).unwrap().unwrap();
        match &cert {
            Certificate::PrimePowerShape { prime, base, exponent } => {
                assert_eq!(*prime, BigInt::from(3));
                assert_eq!(*base, ip(&[1, 0, 1]));
                assert_eq!(*exponent, 2);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(crit_schonemann(&ip(&[1, 0, 1]), &BigInt::from(3)).unwrap().is_none());
    }

    #[test]
    fn poly_sqrt_recovers_squares() {
        let s = ip(&[-1, 2, 3]);
        assert_eq!(poly_sqrt(&s.mul(&s)), Some(ip(&[1, -2, -3]).neg()));
        assert_eq!(poly_sqrt(&ip(&[4])), Some(ip(&[2])));
        assert_eq!(poly_sqrt(&ip(&[0, 1])), None);
        assert_eq!(poly_sqrt(&ip(&[-4])), None);
        assert_eq!(poly_sqrt(&ip(&[1, 2, 1])), Some(ip(&[1, 1])));
        assert_eq!(poly_sqrt(&ip(&[2, 2, 1])), None);
    }

    #[test]
    fn capelli_fib_agreement() {
        let fib = builtin("fibonacci").unwrap();
        let c5 = capelli_fib_equiv(&fib, 5).unwrap();
        assert!(c5.direct && c5.lifted && c5.agrees());
        let c3 = capelli_fib_equiv(&fib, 3).unwrap();
        assert!(c3.agrees());

        let u = builtin("chebyshevU").unwrap();
        let u5 = capelli_fib_equiv(&u, 5).unwrap();
        assert!(!u5.direct, "the index-5 term splits");
        assert!(u5.agrees(), "lift must see the same split");
    }

    #[test]
    fn capelli_lucas_agreement() {
        let luc = builtin("lucas").unwrap();
        let c = capelli_lucas_equiv(&luc, 5).unwrap();
        assert!(c.direct && c.agrees());
        let t = builtin("chebyshevT").unwrap();
        let ct = capelli_lucas_equiv(&t, 5).unwrap();
        assert!(ct.agrees());
    }

    #[test]
    fn capelli_pow2_agreement() {
        let luc = builtin("lucas").unwrap();
        let c = capelli_pow2_equiv(&luc, 4).unwrap();
        assert!(c.direct && c.agrees());
        let t = builtin("chebyshevT").unwrap();
        let ct = capelli_pow2_equiv(&t, 4).unwrap();
        assert!(ct.direct && ct.agrees());
    }

    #[test]
    fn capelli_linear_agreement() {
        let pell = builtin("pell").unwrap();
        let c = capelli_linear_g1(&pell, 5).unwrap();
        assert!(c.direct && c.agrees());
        let vieta = builtin("vieta").unwrap();
        assert!(capelli_linear_g1(&vieta, 5).is_err());
    }
}
