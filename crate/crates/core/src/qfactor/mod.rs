//! Factorization over Q.
//!
//! The workhorse is Zassenhaus (factor mod p, Hensel lift, recombine); an
//! independent Kronecker-interpolation oracle lives alongside it for
//! cross-checking. The two share only the squarefree step here, so a bug in
//! one is visible against the other.

mod kronecker;
mod zassenhaus;

pub use kronecker::kronecker_factor;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::polycore::IntPoly;

/// `unit * product(factors[i].0 ^ factors[i].1)` reconstructs the input.
/// Factors are primitive with positive leading coefficient, irreducible
/// over Q, in canonical order (degree ascending, then coefficients from the
/// leading end).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e));
        }
        assert!(self.unit.is_integer(), "integer factorization unit");
        acc.scaled(self.unit.numer())
    }

    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

/// Factors `f` into irreducibles over Q. Zero is an error; a constant has an
/// empty factor list.
pub fn factor_q(f: &IntPoly) -> Result<Factorization> {
    factor_q_seeded(f, 0)
}

/// As [`factor_q`]; the seed feeds the randomized modular splitting and does
/// not change the result.
pub fn factor_q_seeded(f: &IntPoly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, primitive) = f.content_primitive();
    let (unit, pp) = if primitive.leading_coeff().is_negative() {
        (-content, primitive.neg())
    } else {
        (content, primitive)
    };
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    if !pp.is_constant() {
        for (part, mult) in squarefree_decompose_z(&pp) {
            for g in zassenhaus::factor_squarefree(&part, seed) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let out = Factorization { unit: BigRational::from(unit), factors };
    debug_assert_eq!(&out.product(), f, "factorization must reconstruct the input");
    Ok(out)
}

/// Irreducibility over Q: degree at least 1 and a single factor of
/// multiplicity one. The content is a unit of Q[x] and does not count
/// against irreducibility.
pub fn is_irreducible_q(f: &IntPoly) -> Result<bool> {
    let fac = factor_q(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Yun squarefree decomposition over Z. Input must be primitive with
/// positive leading coefficient; output parts are primitive, positive-lc,
/// squarefree, pairwise coprime, with `product part^mult = input`.
pub(crate) fn squarefree_decompose_z(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    assert!(
        !f.is_constant() && f.leading_coeff().is_positive() && f.content().is_one(),
        "squarefree decomposition expects a primitive positive-lc nonconstant input"
    );
    let deriv = f.derivative();
    let g = f.gcd(&deriv);
    if g.is_constant() {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut w = f.exact_divide(&g).expect("gcd divides");
    let mut z = deriv.exact_divide(&g).expect("gcd divides f'").sub(&w.derivative());
    let mut i = 1u32;
    loop {
        let h = w.gcd(&z);
        if !h.is_constant() {
            out.push((h.clone(), i));
        }
        w = w.exact_divide(&h).expect("gcd divides");
        let y = z.exact_divide(&h).expect("gcd divides");
        z = y.sub(&w.derivative());
        i += 1;
        if w.is_constant() {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn squarefree_decomposition() {
        // (x+1)(x-2)^2, primitive, positive lc.
        let f = ip(&[1, 1]).mul(&ip(&[-2, 1])).mul(&ip(&[-2, 1]));
        assert_eq!(squarefree_decompose_z(&f), vec![(ip(&[1, 1]), 1), (ip(&[-2, 1]), 2)]);
        let g = ip(&[0, 0, 0, 1]); // x^3
        assert_eq!(squarefree_decompose_z(&g), vec![(ip(&[0, 1]), 3)]);
        let h = ip(&[-1, 0, 1]);
        assert_eq!(squarefree_decompose_z(&h), vec![(h.clone(), 1)]);
    }

    #[test]
    fn factors_quadratic_split() {
        let f = ip(&[-1, 0, 1]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.unit, rat(1));
        assert_eq!(fac.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
    }

    #[test]
    fn content_and_sign_go_to_the_unit() {
        let f = ip(&[6, 0, -6]); // -6(x-1)(x+1)
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.unit, rat(-6));
        assert_eq!(fac.factors, vec![(ip(&[-1, 1]), 1), (ip(&[1, 1]), 1)]);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn irreducible_quartic_stays_whole() {
        let f = ip(&[1, 0, 3, 0, 1]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
        assert!(is_irreducible_q(&f).unwrap());
    }

    #[test]
    fn biquadratic_with_hidden_split() {
        // x^4 - 15x^2 + 25 = (x^2 - 5x + 5)(x^2 + 5x + 5): no rational
        // roots, splits only through cross terms.
        let f = ip(&[25, 0, -15, 0, 1]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors, vec![(ip(&[5, -5, 1]), 1), (ip(&[5, 5, 1]), 1)]);
        assert_eq!(kronecker_factor(&f).unwrap().factors, fac.factors);
    }

    #[test]
    fn cyclotomic_like_product() {
        // (x^2+x+1)(x^2-x+1) = x^4+x^2+1
        let f = ip(&[1, 0, 1, 0, 1]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors, vec![(ip(&[1, -1, 1]), 1), (ip(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn multiplicities_survive() {
        let f = ip(&[1, 1]).pow(3).mul(&ip(&[1, 0, 1]));
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors, vec![(ip(&[1, 1]), 3), (ip(&[1, 0, 1]), 1)]);
        assert_eq!(fac.factor_count(), 4);
        assert!(!is_irreducible_q(&f).unwrap());
    }

    #[test]
    fn non_monic_factors() {
        // (2x+1)(3x-5)
        let f = ip(&[1, 2]).mul(&ip(&[-5, 3]));
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.unit, rat(1));
        assert_eq!(fac.factors, vec![(ip(&[1, 2]), 1), (ip(&[-5, 3]), 1)]);
    }

    #[test]
    fn unit_content_does_not_block_irreducibility() {
        // 9x^2 - 6 = 3(3x^2 - 2): content is a Q-unit, one factor remains.
        let f = ip(&[-6, 0, 9]);
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.unit, rat(3));
        assert_eq!(fac.factors, vec![(ip(&[-2, 0, 3]), 1)]);
        assert!(is_irreducible_q(&f).unwrap());
    }

    #[test]
    fn constants_and_zero() {
        let fac = factor_q(&ip(&[-7])).unwrap();
        assert_eq!(fac.unit, rat(-7));
        assert!(fac.factors.is_empty());
        assert!(!is_irreducible_q(&ip(&[-7])).unwrap());
        assert!(matches!(factor_q(&IntPoly::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn wilkinson_style_linear_blowup() {
        // (x-1)(x-2)...(x-7): many linear factors, mixed subsets.
        let mut f = IntPoly::one();
        for r in 1..=7i64 {
            f = f.mul(&ip(&[-r, 1]));
        }
        let fac = factor_q(&f).unwrap();
        assert_eq!(fac.factors.len(), 7);
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn swinnerton_dyer_resists_modular_splitting() {
        // Minimal polynomial of sqrt(2)+sqrt(3): irreducible but splits into
        // quadratics mod every prime, forcing real recombination work. Same
        // story for x^4 + 1.
        let f = ip(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible_q(&f).unwrap());
        let g = ip(&[1, 0, 0, 0, 1]);
        for seed in [0u64, 7, 99] {
            assert!(is_irreducible_q(&g).unwrap());
            assert_eq!(factor_q_seeded(&f, seed).unwrap().factors, vec![(f.clone(), 1)]);
        }
    }

    #[test]
    fn big_coefficient_round_trip() {
        // (x^3 + 10^12 x - 1)(x^2 + 10^6): forces a tall Hensel tower.
        let a = IntPoly::from_coeffs(vec![
            BigInt::from(-1),
            BigInt::from(1_000_000_000_000i64),
            BigInt::from(0),
            BigInt::from(1),
        ]);
        let b = IntPoly::from_coeffs(vec![BigInt::from(1_000_000i64), BigInt::from(0), BigInt::from(1)]);
        let fac = factor_q(&a.mul(&b)).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.product(), a.mul(&b));
    }
}
