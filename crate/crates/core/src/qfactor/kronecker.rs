//! Kronecker's interpolation method: an independent, slow factorization
//! oracle for cross-checking the main pipeline on small polynomials.
//!
//! A degree-k factor is determined by its values at k+1 integer points, and
//! each such value divides the value of the input there. Enumerating signed
//! divisor tuples with congruence pruning and interpolating recovers every
//! factor. Capped by degree and by an explicit work budget.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{squarefree_decompose_z, Factorization};
use crate::error::{Error, Result};
use crate::polycore::{IntPoly, RatPoly};
use crate::primes;

/// Largest input degree the oracle accepts.
pub const KRONECKER_MAX_DEGREE: usize = 8;

/// Divisor-tuple evaluations allowed per call.
pub const KRONECKER_BUDGET: u64 = 2_000_000;

/// Factors `f` over Q by divisor interpolation. Same output contract as the
/// main factorization. Errors with a degree-cap or budget error instead of
/// guessing.
pub fn kronecker_factor(f: &IntPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = f.degree_or_zero();
    if deg > KRONECKER_MAX_DEGREE {
        return Err(Error::OracleDegreeCap(deg, KRONECKER_MAX_DEGREE));
    }
    let (content, primitive) = f.content_primitive();
    let (unit, pp) = if primitive.leading_coeff().is_negative() {
        (-content, primitive.neg())
    } else {
        (content, primitive)
    };
    let mut budget = KRONECKER_BUDGET;
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    if !pp.is_constant() {
        for (part, mult) in squarefree_decompose_z(&pp) {
            for g in split_squarefree(part, &mut budget)? {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let out = Factorization { unit: BigRational::from(unit), factors };
    debug_assert_eq!(&out.product(), f);
    Ok(out)
}

/// Splits a primitive positive-lc squarefree polynomial into irreducibles:
/// rational roots first, then interpolation for the rest.
fn split_squarefree(mut g: IntPoly, budget: &mut u64) -> Result<Vec<IntPoly>> {
    let mut out = Vec::new();
    if g.constant_term().is_zero() {
        out.push(IntPoly::x());
        g = g.exact_divide(&IntPoly::x()).expect("root at zero");
    }
    // Rational root theorem: p/q with p | g(0), q | lc(g).
    'roots: while g.degree_or_zero() >= 1 {
        let c0 = g.constant_term().abs();
        let lc = g.leading_coeff().abs();
        for p in divisors(&c0) {
            for q in divisors(&lc) {
                if !p.gcd(&q).is_one() {
                    continue;
                }
                for sign in [1i32, -1] {
                    let num = if sign == 1 { p.clone() } else { -&p };
                    let root = BigRational::new(num.clone(), q.clone());
                    if g.evaluate_rational(&root).is_zero() {
                        // factor q*x - num, primitive by construction
                        let lin = IntPoly::from_coeffs(vec![-num, q.clone()]);
                        out.push(lin.clone());
                        g = g.exact_divide(&lin).expect("verified root");
                        continue 'roots;
                    }
                }
            }
        }
        break;
    }
    if g.degree_or_zero() >= 1 {
        out.extend(split_rootless(g, budget)?);
    } else {
        debug_assert!(g.is_one());
    }
    Ok(out)
}

fn split_rootless(g: IntPoly, budget: &mut u64) -> Result<Vec<IntPoly>> {
    let n = g.degree_or_zero();
    // Linear factors are gone, so any split needs a factor of degree >= 2.
    for k in 2..=n / 2 {
        if let Some(h) = search_degree_k(&g, k, budget)? {
            let cofactor = g.exact_divide(&h).expect("verified divisor");
            let mut out = split_rootless(h, budget)?;
            out.extend(split_rootless(cofactor, budget)?);
            return Ok(out);
        }
    }
    Ok(vec![g])
}

/// Integer points 0, 1, -1, 2, -2, ...
fn eval_point(i: usize) -> BigInt {
    let m = BigInt::from(i.div_ceil(2));
    if i % 2 == 1 {
        m
    } else {
        -m
    }
}

/// Looks for a divisor of `g` with degree in `1..=k` by interpolating signed
/// divisor tuples at k+1 points.
fn search_degree_k(g: &IntPoly, k: usize, budget: &mut u64) -> Result<Option<IntPoly>> {
    // Candidate points with their divisor counts; keep the k+1 cheapest.
    let pool: Vec<(BigInt, Vec<BigInt>)> = (0..k + 4)
        .map(|i| {
            let x = eval_point(i);
            let divs = divisors(&g.evaluate(&x).abs());
            (x, divs)
        })
        .collect();
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by_key(|&i| (pool[i].1.len(), i));
    let mut chosen: Vec<usize> = order[..k + 1].to_vec();
    chosen.sort_unstable();
    let points: Vec<&(BigInt, Vec<BigInt>)> = chosen.iter().map(|&i| &pool[i]).collect();

    // Lagrange basis for the chosen points, computed once.
    let xs: Vec<BigRational> =
        points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    let basis: Vec<RatPoly> = (0..xs.len())
        .map(|j| {
            let mut num = RatPoly::one();
            let mut den = BigRational::one();
            for (i, xi) in xs.iter().enumerate() {
                if i != j {
                    num = num.mul(&RatPoly::x().sub(&RatPoly::constant(xi.clone())));
                    den *= &xs[j] - xi;
                }
            }
            num.scale(&den.recip())
        })
        .collect();

    // Depth-first over signed divisor tuples; the first coordinate stays
    // positive (h and -h divide together). Congruence pruning: an integer
    // polynomial has h(a) = h(b) mod (a - b).
    let mut values: Vec<BigInt> = vec![BigInt::zero(); points.len()];
    search_tuples(g, &points, &xs, &basis, 0, &mut values, budget)
}

#[allow(clippy::too_many_arguments)]
fn search_tuples(
    g: &IntPoly,
    points: &[&(BigInt, Vec<BigInt>)],
    xs: &[BigRational],
    basis: &[RatPoly],
    depth: usize,
    values: &mut Vec<BigInt>,
    budget: &mut u64,
) -> Result<Option<IntPoly>> {
    if depth == points.len() {
        if *budget == 0 {
            return Err(Error::OracleBudget(KRONECKER_BUDGET));
        }
        *budget -= 1;
        let mut interp = RatPoly::zero();
        for (j, b) in basis.iter().enumerate() {
            interp = interp.add(&b.scale(&BigRational::from(values[j].clone())));
        }
        let (h, den) = interp.int_clear();
        if !den.is_one() || h.degree_or_zero() < 1 {
            return Ok(None);
        }
        let (_, mut h) = h.content_primitive();
        if h.leading_coeff().is_negative() {
            h = h.neg();
        }
        if h.degree_or_zero() >= 1 && g.divides_exactly(&h) && h.degree() < g.degree() {
            return Ok(Some(h));
        }
        return Ok(None);
    }
    let signs: &[i32] = if depth == 0 { &[1] } else { &[1, -1] };
    for d in &points[depth].1 {
        for &s in signs {
            let v = if s == 1 { d.clone() } else { -d };
            // prune on pairwise congruences with already fixed values
            let ok = (0..depth).all(|i| {
                let diff = &xs[depth] - &xs[i];
                debug_assert!(diff.is_integer());
                let m = diff.numer().abs();
                ((&v - &values[i]) % &m).is_zero()
            });
            if !ok {
                continue;
            }
            values[depth] = v;
            if let Some(h) = search_tuples(g, points, xs, basis, depth + 1, values, budget)? {
                return Ok(Some(h));
            }
        }
    }
    Ok(None)
}

/// Positive divisors of |n|, ascending; n must be nonzero.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut out = vec![BigInt::one()];
    for (p, e) in primes::factorize(n) {
        let current = out.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power *= &p;
            for d in &current {
                out.push(d * &power);
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = divisors(&BigInt::from(12))
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(-7)).len(), 2);
        assert_eq!(divisors(&BigInt::one()), vec![BigInt::one()]);
    }

    #[test]
    fn splits_a_quartic_into_quadratics() {
        let a = ip(&[1, 1, 1]);
        let b = ip(&[3, -1, 2]);
        let fac = kronecker_factor(&a.mul(&b)).unwrap();
        assert_eq!(fac.factors, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn finds_rational_roots_and_multiplicity() {
        // 3(2x - 1)^2 (x + 3)
        let f = ip(&[-1, 2]).mul(&ip(&[-1, 2])).mul(&ip(&[3, 1])).scaled(&BigInt::from(3));
        let fac = kronecker_factor(&f).unwrap();
        assert_eq!(fac.unit, BigRational::from(BigInt::from(3)));
        assert_eq!(fac.factors, vec![(ip(&[3, 1]), 1), (ip(&[-1, 2]), 2)]);
    }

    #[test]
    fn keeps_irreducibles_whole() {
        let f = ip(&[1, 0, 3, 0, 1]);
        let fac = kronecker_factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f, 1)]);
        let g = ip(&[1, 0, -10, 0, 1]);
        assert_eq!(kronecker_factor(&g).unwrap().factors.len(), 1);
    }

    #[test]
    fn handles_x_factor_and_sign() {
        let f = ip(&[0, -2, 0, -2]); // -2x(x^2 + 1)
        let fac = kronecker_factor(&f).unwrap();
        assert_eq!(fac.unit, BigRational::from(BigInt::from(-2)));
        assert_eq!(fac.factors, vec![(ip(&[0, 1]), 1), (ip(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let mut f = IntPoly::one();
        for r in 0..9i64 {
            f = f.mul(&ip(&[r + 1, 1]));
        }
        assert!(matches!(kronecker_factor(&f), Err(Error::OracleDegreeCap(9, 8))));
    }

    #[test]
    fn degree_eight_within_cap() {
        // (x^4 + x + 1)(x^4 - x^3 + 2): rootless degree-8 product.
        let a = ip(&[1, 1, 0, 0, 1]);
        let b = ip(&[2, 0, 0, -1, 1]);
        let fac = kronecker_factor(&a.mul(&b)).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), a.mul(&b));
    }
}
