//! Generalized Fibonacci and Lucas polynomial families.
//!
//! A Fibonacci-type family starts 0, 1 and follows
//! `t_n = d*t_{n-1} + g*t_{n-2}`; a Lucas-type family starts `p0, p1(x)`
//! with the same recurrence, where `p0` is `1` or `2` up to sign and
//! `d = (2/p0) * p1`. Closed-form binomial expansions, the even/odd
//! conjugate identity, and Binet components over the quadratic closure are
//! all provided and cross-checkable against the recurrence.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits;
use crate::polycore::{IntPoly, QuadExtElem};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Fibonacci,
    Lucas,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Fibonacci => write!(f, "fibonacci"),
            Kind::Lucas => write!(f, "lucas"),
        }
    }
}

/// How strictly the defining conditions are enforced.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    /// All conditions: `gcd(d, g) = 1`, `deg d > deg g`, and for
    /// Lucas-type `p0` coprime to `p1`, `d`, and `g`.
    Strict,
    /// Permits `deg d = deg g` and waives the Lucas-type coprimality
    /// side conditions. Needed by a couple of classical families.
    Relaxed,
}

/// Defining data of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    kind: Kind,
    d: IntPoly,
    g: IntPoly,
    /// Lucas-type only: the seeds (p0, p1).
    lucas_seed: Option<(BigInt, IntPoly)>,
}

impl FamilySpec {
    pub fn fibonacci(d: IntPoly, g: IntPoly) -> Self {
        FamilySpec { kind: Kind::Fibonacci, d, g, lucas_seed: None }
    }

    /// Lucas-type from seeds; `|p0|` must be 1 or 2, and then
    /// `d = (2/p0) * p1` is integral.
    pub fn lucas(p0: BigInt, p1: IntPoly, g: IntPoly) -> Result<Self> {
        let d = match i64::try_from(&p0) {
            Ok(1) => p1.scaled(&BigInt::from(2)),
            Ok(-1) => p1.scaled(&BigInt::from(-2)),
            Ok(2) => p1.clone(),
            Ok(-2) => p1.neg(),
            _ => {
                return Err(Error::ContractViolation(format!(
                    "Lucas-type p0 must be 1 or 2 up to sign, got {p0}"
                )))
            }
        };
        Ok(FamilySpec { kind: Kind::Lucas, d, g, lucas_seed: Some((p0, p1)) })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn d(&self) -> &IntPoly {
        &self.d
    }

    pub fn g(&self) -> &IntPoly {
        &self.g
    }

    pub fn p0(&self) -> Option<&BigInt> {
        self.lucas_seed.as_ref().map(|(p0, _)| p0)
    }

    pub fn p1(&self) -> Option<&IntPoly> {
        self.lucas_seed.as_ref().map(|(_, p1)| p1)
    }

    /// `d^2 + 4g`, the discriminant of `y^2 - d*y - g`.
    pub fn delta(&self) -> IntPoly {
        self.d.mul(&self.d).add(&self.g.scaled(&BigInt::from(4)))
    }

    /// The Fibonacci-type family with the same recurrence.
    pub fn associated_fibonacci(&self) -> FamilySpec {
        FamilySpec::fibonacci(self.d.clone(), self.g.clone())
    }

    /// Violated conditions under the given mode; empty means valid.
    pub fn violations(&self, mode: Validation) -> Vec<String> {
        let mut out = Vec::new();
        if self.d.degree_or_zero() < 1 {
            out.push("d must be nonconstant".to_string());
        }
        if self.g.is_zero() {
            out.push("g must be nonzero".to_string());
        }
        if !self.d.is_zero() && !self.g.is_zero() && !self.d.gcd(&self.g).is_one() {
            out.push("d and g must be coprime".to_string());
        }
        let dd = self.d.degree_or_zero();
        let dg = self.g.degree_or_zero();
        match mode {
            Validation::Strict if dd <= dg && !self.g.is_zero() => {
                out.push("deg d must exceed deg g".to_string());
            }
            Validation::Relaxed if dd < dg => {
                out.push("deg d must be at least deg g".to_string());
            }
            _ => {}
        }
        if let Some((p0, p1)) = &self.lucas_seed {
            if p1.degree_or_zero() < 1 {
                out.push("p1 must be nonconstant".to_string());
            }
            if mode == Validation::Strict {
                for (other, label) in
                    [(p1, "p1"), (&self.d, "d"), (&self.g, "g")]
                {
                    if !other.is_zero() && !p0.gcd(&other.content()).is_one() {
                        out.push(format!("p0 and {label} must be coprime"));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self, mode: Validation) -> Result<()> {
        let violations = self.violations(mode);
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidFamily { violations })
        }
    }
}

/// A validated family with a term cache.
#[derive(Debug)]
pub struct Family {
    name: Option<String>,
    spec: FamilySpec,
    mode: Validation,
    cache: Mutex<Vec<IntPoly>>,
}

impl Family {
    pub fn new(spec: FamilySpec, mode: Validation) -> Result<Self> {
        spec.validate(mode)?;
        Ok(Family { name: None, spec, mode, cache: Mutex::new(Vec::new()) })
    }

    fn with_name(name: &str, spec: FamilySpec, mode: Validation) -> Result<Self> {
        let mut fam = Self::new(spec, mode)?;
        fam.name = Some(name.to_string());
        Ok(fam)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn mode(&self) -> Validation {
        self.mode
    }

    fn degree_bound(&self, n: usize) -> usize {
        let dd = self.spec.d.degree_or_zero();
        match self.spec.kind {
            Kind::Fibonacci => n.saturating_sub(1) * dd,
            Kind::Lucas => n * dd,
        }
    }

    /// n-th term by the recurrence (cached).
    pub fn term(&self, n: usize) -> Result<IntPoly> {
        limits::check_degree(self.degree_bound(n))?;
        let mut cache = self.cache.lock().expect("cache lock");
        if cache.is_empty() {
            match &self.spec.lucas_seed {
                None => {
                    cache.push(IntPoly::zero());
                    cache.push(IntPoly::one());
                }
                Some((p0, p1)) => {
                    cache.push(IntPoly::constant(p0.clone()));
                    cache.push(p1.clone());
                }
            }
        }
        while cache.len() <= n {
            let k = cache.len();
            let next = self.spec.d.mul(&cache[k - 1]).add(&self.spec.g.mul(&cache[k - 2]));
            cache.push(next);
        }
        Ok(cache[n].clone())
    }

    /// n-th term by the binomial expansion, no recurrence involved.
    pub fn closed_form(&self, n: usize) -> Result<IntPoly> {
        limits::check_degree(self.degree_bound(n))?;
        match self.spec.kind {
            Kind::Fibonacci => Ok(fib_expansion(&self.spec.d, &self.spec.g, n)),
            Kind::Lucas => {
                let (p0, _) = self.spec.lucas_seed.as_ref().expect("lucas seeds");
                if n == 0 {
                    return Ok(IntPoly::constant(p0.clone()));
                }
                let doubled = alpha_lucas_expansion(&self.spec.d, &self.spec.g, n);
                // term = (p0 / 2) * (alpha * term expansion)
                Ok(match i64::try_from(p0).expect("validated p0") {
                    2 => doubled,
                    -2 => doubled.neg(),
                    1 => doubled.exact_scalar_div(&BigInt::from(2)),
                    -1 => doubled.exact_scalar_div(&BigInt::from(-2)),
                    _ => unreachable!("validated p0"),
                })
            }
        }
    }

    /// `(2/p0) *` the n-th term, as an integer polynomial.
    pub fn alpha_term(&self, n: usize) -> Result<IntPoly> {
        let (p0, _) = self
            .spec
            .lucas_seed
            .as_ref()
            .ok_or_else(|| Error::ContractViolation("alpha_term needs a Lucas-type family".into()))?;
        let t = self.term(n)?;
        Ok(match i64::try_from(p0).expect("validated p0") {
            2 => t,
            -2 => t.neg(),
            1 => t.scaled(&BigInt::from(2)),
            -1 => t.scaled(&BigInt::from(-2)),
            _ => unreachable!("validated p0"),
        })
    }

    /// For odd n, the quotient `term(n) / p1` — independent of p0.
    pub fn over_p1(&self, n: usize) -> Result<IntPoly> {
        if self.spec.kind != Kind::Lucas {
            return Err(Error::ContractViolation("over_p1 needs a Lucas-type family".into()));
        }
        if n % 2 == 0 {
            return Err(Error::IndexOutOfRange {
                n: n as u64,
                reason: "p1 divides only odd-index terms".into(),
            });
        }
        limits::check_degree(self.degree_bound(n))?;
        Ok(lucas_over_p1_expansion(&self.spec.d, &self.spec.g, n))
    }

    /// Binet components: the n-th power of `(d + sqrt(delta))/2` as
    /// `(A_n + B_n sqrt(delta)) / 2^n`. Returns `(A_n, B_n)`.
    pub fn binet_components(&self, n: u32) -> Result<(IntPoly, IntPoly)> {
        if n == 0 {
            return Err(Error::IndexOutOfRange {
                n: 0,
                reason: "Binet components start at n = 1".into(),
            });
        }
        limits::check_degree(self.degree_bound(n as usize))?;
        let root = QuadExtElem::principal_root(&self.spec.d, &self.spec.delta());
        let power = root.pow(n)?;
        debug_assert_eq!(power.denominator_exponent(), n);
        Ok((power.rational_part().clone(), power.radical_part().clone()))
    }
}

/// Binomial coefficient C(n, k) as a big integer (0 when k > n).
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `sum_i C(n-1-i, i) d^(n-1-2i) g^i` — the Fibonacci-type expansion.
fn fib_expansion(d: &IntPoly, g: &IntPoly, n: usize) -> IntPoly {
    if n == 0 {
        return IntPoly::zero();
    }
    let mut acc = IntPoly::zero();
    for i in 0..=(n - 1) / 2 {
        let c = binomial(n - 1 - i, i);
        let term = d.pow((n - 1 - 2 * i) as u32).mul(&g.pow(i as u32)).scaled(&c);
        acc = acc.add(&term);
    }
    acc
}

/// `sum_i (C(n-i, i) + C(n-i-1, i-1)) d^(n-2i) g^i` — the doubled
/// Lucas-type expansion (equals `(2/p0) *` the n-th term), n >= 1.
fn alpha_lucas_expansion(d: &IntPoly, g: &IntPoly, n: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    for i in 0..=n / 2 {
        let c = binomial(n - i, i)
            + if i > 0 { binomial(n - i - 1, i - 1) } else { BigInt::zero() };
        let term = d.pow((n - 2 * i) as u32).mul(&g.pow(i as u32)).scaled(&c);
        acc = acc.add(&term);
    }
    acc
}

/// `sum_i (C(n-i, i) + C(n-i-1, i-1)) d^(n-1-2i) g^i` for odd n — the
/// quotient of the n-th Lucas-type term by p1, which does not involve p0.
fn lucas_over_p1_expansion(d: &IntPoly, g: &IntPoly, n: usize) -> IntPoly {
    debug_assert!(n % 2 == 1);
    let mut acc = IntPoly::zero();
    for i in 0..=(n - 1) / 2 {
        let c = binomial(n - i, i)
            + if i > 0 { binomial(n - i - 1, i - 1) } else { BigInt::zero() };
        let term = d.pow((n - 1 - 2 * i) as u32).mul(&g.pow(i as u32)).scaled(&c);
        acc = acc.add(&term);
    }
    acc
}

/// Names of the built-in families.
pub const BUILTIN_NAMES: [&str; 13] = [
    "fibonacci",
    "lucas",
    "pell",
    "pellLucas",
    "pellLucasPrime",
    "fermat",
    "fermatLucas",
    "chebyshevU",
    "chebyshevT",
    "morganVoyceB",
    "morganVoyceC",
    "vieta",
    "vietaLucas",
];

/// Construct a built-in family by name.
pub fn builtin(name: &str) -> Option<Family> {
    fn fib(name: &str, d: IntPoly, g: IntPoly) -> Option<Family> {
        Family::with_name(name, FamilySpec::fibonacci(d, g), Validation::Strict).ok()
    }
    fn luc(name: &str, p0: i64, p1: IntPoly, g: IntPoly, mode: Validation) -> Option<Family> {
        let spec = FamilySpec::lucas(BigInt::from(p0), p1, g).ok()?;
        Family::with_name(name, spec, mode).ok()
    }
    let x = IntPoly::x();
    let c = |v: i64| IntPoly::constant(BigInt::from(v));
    let two_x = IntPoly::monomial(BigInt::from(2), 1);
    let three_x = IntPoly::monomial(BigInt::from(3), 1);
    let x_plus_2 = IntPoly::from_ints(&[2, 1]);
    match name {
        "fibonacci" => fib(name, x, c(1)),
        "lucas" => luc(name, 2, x, c(1), Validation::Strict),
        "pell" => fib(name, two_x, c(1)),
        "pellLucas" => luc(name, 2, two_x, c(1), Validation::Relaxed),
        "pellLucasPrime" => luc(name, 1, x, c(1), Validation::Strict),
        "fermat" => fib(name, three_x, c(-2)),
        "fermatLucas" => luc(name, 2, three_x, c(-2), Validation::Relaxed),
        "chebyshevU" => fib(name, two_x, c(-1)),
        "chebyshevT" => luc(name, 1, x, c(-1), Validation::Strict),
        "morganVoyceB" => fib(name, x_plus_2, c(-1)),
        "morganVoyceC" => luc(name, 2, x_plus_2, c(-1), Validation::Strict),
        "vieta" => fib(name, x, c(-1)),
        "vietaLucas" => luc(name, 2, x, c(-1), Validation::Strict),
        _ => None,
    }
}

/// The Lucas-type partner sharing (d, g) with a Fibonacci-type family and
/// vice versa, where one exists among the built-ins.
pub fn conjugate_partner(name: &str) -> Option<&'static str> {
    match name {
        "fibonacci" => Some("lucas"),
        "lucas" => Some("fibonacci"),
        "pell" => Some("pellLucas"),
        "pellLucas" => Some("pell"),
        "pellLucasPrime" => Some("pell"),
        "fermat" => Some("fermatLucas"),
        "fermatLucas" => Some("fermat"),
        "chebyshevU" => Some("chebyshevT"),
        "chebyshevT" => Some("chebyshevU"),
        "morganVoyceB" => Some("morganVoyceC"),
        "morganVoyceC" => Some("morganVoyceB"),
        "vieta" => Some("vietaLucas"),
        "vietaLucas" => Some("vieta"),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    #[test]
    fn all_builtins_construct() {
        for name in BUILTIN_NAMES {
            let fam = builtin(name).unwrap_or_else(|| panic!("{name} must construct"));
            assert_eq!(fam.name(), Some(name));
            assert!(conjugate_partner(name).is_some());
        }
        assert!(builtin("nope").is_none());
    }

    #[test]
    fn strictness_of_the_two_relaxed_families() {
        let pell_lucas = builtin("pellLucas").unwrap();
        assert_eq!(pell_lucas.mode(), Validation::Relaxed);
        let v = pell_lucas.spec().violations(Validation::Strict);
        assert_eq!(v, vec!["p0 and p1 must be coprime", "p0 and d must be coprime"]);
        let fermat_lucas = builtin("fermatLucas").unwrap();
        assert_eq!(fermat_lucas.mode(), Validation::Relaxed);
        let v = fermat_lucas.spec().violations(Validation::Strict);
        assert_eq!(v, vec!["p0 and g must be coprime"]);
        for name in BUILTIN_NAMES {
            if name != "pellLucas" && name != "fermatLucas" {
                assert_eq!(builtin(name).unwrap().mode(), Validation::Strict, "{name}");
            }
        }
    }

    #[test]
    fn spec_validation_catches_bad_input() {
        let bad = FamilySpec::fibonacci(ip(&[0, 2]), ip(&[2]));
        assert!(bad
            .violations(Validation::Strict)
            .contains(&"d and g must be coprime".to_string()));
        let deg = FamilySpec::fibonacci(ip(&[0, 1]), ip(&[0, 0, 1]));
        assert!(!deg.violations(Validation::Relaxed).is_empty());
        assert!(FamilySpec::lucas(BigInt::from(3), IntPoly::x(), IntPoly::one()).is_err());
        let ok = FamilySpec::fibonacci(ip(&[0, 1]), ip(&[1]));
        assert!(ok.violations(Validation::Strict).is_empty());
    }

    #[test]
    fn fibonacci_terms() {
        let fam = builtin("fibonacci").unwrap();
        assert_eq!(fam.term(0).unwrap(), IntPoly::zero());
        assert_eq!(fam.term(1).unwrap(), IntPoly::one());
        assert_eq!(fam.term(2).unwrap(), ip(&[0, 1]));
        assert_eq!(fam.term(5).unwrap(), ip(&[1, 0, 3, 0, 1]));
        assert_eq!(fam.term(7).unwrap(), ip(&[1, 0, 6, 0, 5, 0, 1]));
    }

    #[test]
    fn lucas_terms() {
        let fam = builtin("lucas").unwrap();
        assert_eq!(fam.term(0).unwrap(), ip(&[2]));
        assert_eq!(fam.term(1).unwrap(), ip(&[0, 1]));
        assert_eq!(fam.term(2).unwrap(), ip(&[2, 0, 1]));
        assert_eq!(fam.term(5).unwrap(), ip(&[0, 5, 0, 5, 0, 1]));
    }

    #[test]
    fn chebyshev_and_pell_values() {
        let t = builtin("chebyshevT").unwrap();
        assert_eq!(t.term(2).unwrap(), ip(&[-1, 0, 2]));
        assert_eq!(t.term(3).unwrap(), ip(&[0, -3, 0, 4]));
        let u = builtin("chebyshevU").unwrap();
        assert_eq!(u.term(3).unwrap(), ip(&[-1, 0, 4]));
        let p = builtin("pell").unwrap();
        assert_eq!(p.term(3).unwrap(), ip(&[1, 0, 4]));
        let q = builtin("pellLucasPrime").unwrap();
        assert_eq!(q.term(0).unwrap(), ip(&[1]));
        assert_eq!(q.term(2).unwrap(), ip(&[1, 0, 2]));
        let b = builtin("morganVoyceB").unwrap();
        assert_eq!(b.term(2).unwrap(), ip(&[2, 1]));
        assert_eq!(b.term(3).unwrap(), ip(&[3, 4, 1]));
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for name in BUILTIN_NAMES {
            let fam = builtin(name).unwrap();
            for n in 0..=12 {
                assert_eq!(
                    fam.closed_form(n).unwrap(),
                    fam.term(n).unwrap(),
                    "family {name}, index {n}"
                );
            }
        }
    }

    #[test]
    fn over_p1_divides_odd_terms() {
        for name in ["lucas", "chebyshevT", "vietaLucas", "pellLucas", "morganVoyceC"] {
            let fam = builtin(name).unwrap();
            let p1 = fam.spec().p1().unwrap().clone();
            for n in [1usize, 3, 5, 7, 9] {
                let q = fam.over_p1(n).unwrap();
                assert_eq!(q.mul(&p1), fam.term(n).unwrap(), "family {name}, index {n}");
            }
        }
        let fam = builtin("lucas").unwrap();
        assert_eq!(fam.over_p1(5).unwrap(), ip(&[5, 0, 5, 0, 1]));
        assert!(fam.over_p1(4).is_err());
        let t = builtin("chebyshevT").unwrap();
        assert_eq!(t.over_p1(3).unwrap(), ip(&[-3, 0, 4]));
    }

    #[test]
    fn conjugate_identity_links_partners() {
        // (2/p0) * lucas_n = g * fib_{n-1} + fib_{n+1} for the partner pair.
        for name in ["lucas", "pellLucas", "fermatLucas", "chebyshevT", "morganVoyceC", "vietaLucas"]
        {
            let luc = builtin(name).unwrap();
            let fib_spec = luc.spec().associated_fibonacci();
            let fib = Family::new(fib_spec, Validation::Relaxed).unwrap();
            let g = luc.spec().g().clone();
            for n in 1..=10 {
                let lhs = luc.alpha_term(n).unwrap();
                let rhs = g.mul(&fib.term(n - 1).unwrap()).add(&fib.term(n + 1).unwrap());
                assert_eq!(lhs, rhs, "family {name}, index {n}");
            }
        }
    }

    #[test]
    fn binet_components_track_both_sequences() {
        for (fib_name, luc_name) in [("fibonacci", "lucas"), ("chebyshevU", "chebyshevT")] {
            let fib = builtin(fib_name).unwrap();
            let luc = builtin(luc_name).unwrap();
            for n in 1u32..=8 {
                let (a, b) = fib.binet_components(n).unwrap();
                let two_pow = BigInt::from(2).pow(n - 1);
                assert_eq!(b, fib.term(n as usize).unwrap().scaled(&two_pow));
                assert_eq!(a, luc.alpha_term(n as usize).unwrap().scaled(&two_pow));
            }
        }
    }

    #[test]
    fn degree_guard_trips() {
        let fam = builtin("fibonacci").unwrap();
        assert!(fam.term(513).is_ok());
        assert!(matches!(fam.term(514), Err(Error::DegreeGuard { degree: 513, max: 512 })));
        assert!(matches!(fam.closed_form(514), Err(Error::DegreeGuard { .. })));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(5, 5), BigInt::one());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(40, 20), BigInt::from(137_846_528_820u64));
    }
}
