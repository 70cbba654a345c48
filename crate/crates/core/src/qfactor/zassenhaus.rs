//! Zassenhaus factorization of a squarefree primitive polynomial: factor
//! modulo a small prime, Hensel-lift the modular factors past the Mignotte
//! bound, then recombine subsets with the leading-coefficient trick.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::modarith::{factor_residue, ModPoly};
use crate::polycore::IntPoly;
use crate::primes;

/// Factors a squarefree primitive polynomial with positive leading
/// coefficient into primitive positive-lc irreducibles (unsorted).
pub(super) fn factor_squarefree(f: &IntPoly, seed: u64) -> Vec<IntPoly> {
    let n = f.degree().expect("nonconstant input");
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.leading_coeff();

    // Pick a prime keeping full degree and squarefreeness; among the first
    // few usable primes prefer the one with the fewest modular factors.
    let mut best: Option<(BigInt, Vec<ModPoly>)> = None;
    let mut usable = 0;
    let mut p = BigInt::from(2);
    while usable < 5 {
        if !(&lc % &p).is_zero() {
            let fp = ModPoly::reduce(f, &p).expect("small prime");
            if fp.degree() == Some(n) && fp.is_squarefree() {
                let fac = factor_residue(&fp, seed).expect("nonzero mod p");
                let count = fac.factors.len();
                debug_assert!(fac.factors.iter().all(|(_, e)| *e == 1));
                let hs: Vec<ModPoly> = fac.factors.into_iter().map(|(h, _)| h).collect();
                if count == 1 {
                    return vec![f.clone()];
                }
                if best.as_ref().is_none_or(|(_, b)| count < b.len()) {
                    best = Some((p.clone(), hs));
                }
                usable += 1;
            }
        }
        p = primes::next_prime(&p);
    }
    let (p, hs) = best.expect("a usable prime exists for a squarefree polynomial");

    // Modulus p^level must exceed twice the factor coefficient bound.
    let bound = (BigInt::one() << n) * f.l2_norm_ceil() * lc.abs();
    let mut modulus = p.clone();
    while modulus <= &bound * BigInt::from(2) {
        modulus *= &p;
    }

    // Hensel-lift the monic modular factors to the big modulus.
    let f_monic = make_monic_mod(f, &lc, &modulus);
    let lifted = lift_tree(&f_monic, &hs, &p, &modulus);
    debug_assert_eq!(
        reduce_mod(&product_mod(&lifted, &modulus), &modulus),
        f_monic,
        "lifted factors must multiply back mod p^level"
    );

    recombine(f.clone(), lifted, &modulus)
}

/// `lc^-1 * f` with coefficients canonical in `[0, m)`.
fn make_monic_mod(f: &IntPoly, lc: &BigInt, m: &BigInt) -> IntPoly {
    let inv = mod_inverse(lc, m);
    IntPoly::from_coeffs(f.coeffs().iter().map(|c| (c * &inv).mod_floor(m)).collect())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let eg = a.extended_gcd(m);
    assert!(eg.gcd.is_one(), "inverse requires coprimality");
    eg.x.mod_floor(m)
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::from_coeffs(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn product_mod(fs: &[IntPoly], m: &BigInt) -> IntPoly {
    let mut acc = IntPoly::one();
    for f in fs {
        acc = reduce_mod(&acc.mul(f), m);
    }
    acc
}

/// Coefficients mapped from `[0, m)` to `(-m/2, m/2]`.
fn symmetrize(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / BigInt::from(2);
    IntPoly::from_coeffs(
        f.coeffs().iter().map(|c| if c > &half { c - m } else { c.clone() }).collect(),
    )
}

/// Divide-and-conquer Hensel lifting: `target` is monic with coefficients
/// canonical mod `m = p^level` and factors as the given list mod `p`.
/// Returns monic lifts of each listed factor, multiplying to `target` mod `m`.
fn lift_tree(target: &IntPoly, hs: &[ModPoly], p: &BigInt, m: &BigInt) -> Vec<IntPoly> {
    if hs.len() == 1 {
        return vec![target.clone()];
    }
    let (left, right) = hs.split_at(hs.len() / 2);
    let g0 = left.iter().fold(ModPoly::one(p), |acc, h| acc.mul(h));
    let h0 = right.iter().fold(ModPoly::one(p), |acc, h| acc.mul(h));
    let (one, _, v) = g0.extended_gcd(&h0);
    assert!(one.is_one(), "modular factors must be pairwise coprime");

    let mut big_g = g0.lift();
    let mut big_h = h0.lift();
    let mut step = p.clone(); // p^k, current precision
    while step < *m {
        // error term e = (target - G*H) / p^k, taken mod p
        let e_int = target.sub(&big_g.mul(&big_h));
        let e_coeffs: Vec<BigInt> = e_int
            .coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&step);
                assert!(r.is_zero(), "Hensel invariant broken");
                q.mod_floor(p)
            })
            .collect();
        let e = ModPoly::reduce(&IntPoly::from_coeffs(e_coeffs), p).expect("prime");
        // Solve e = dg*h0 + dh*g0 with deg dg < deg g0, deg dh < deg h0.
        let (_, dg) = e.mul(&v).divmod(&g0).expect("nonzero");
        let (dh, rem) = e.sub(&dg.mul(&h0)).divmod(&g0).expect("nonzero");
        debug_assert!(rem.is_zero(), "Bezout correction must divide exactly");
        big_g = big_g.add(&dg.lift().scaled(&step));
        big_h = big_h.add(&dh.lift().scaled(&step));
        step *= p;
    }
    big_g = reduce_mod(&big_g, m);
    big_h = reduce_mod(&big_h, m);

    let mut out = lift_tree(&big_g, left, p, m);
    out.extend(lift_tree(&big_h, right, p, m));
    out
}

/// True-factor search over subsets of the lifted modular factors.
fn recombine(mut f: IntPoly, lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut remaining = lifted;
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = f.leading_coeff();
        let f0 = f.constant_term();
        let lc_f0 = &lc * &f0;
        for combo in Combinations::new(remaining.len(), size) {
            // Constant-term pre-filter: a true factor's scaled constant term
            // must divide lc * f(0).
            if !f0.is_zero() {
                let mut t = lc.mod_floor(m);
                for &i in &combo {
                    t = (t * remaining[i].constant_term()).mod_floor(m);
                }
                let t = {
                    let half = m / BigInt::from(2);
                    if t > half {
                        t - m
                    } else {
                        t
                    }
                };
                if t.is_zero() || !(&lc_f0 % &t).is_zero() {
                    continue;
                }
            }
            let mut cand = IntPoly::constant(lc.clone());
            for &i in &combo {
                cand = reduce_mod(&cand.mul(&remaining[i]), m);
            }
            let cand = symmetrize(&cand, m);
            let (_, mut g) = cand.content_primitive();
            if g.leading_coeff().is_negative() {
                g = g.neg();
            }
            if g.degree_or_zero() >= 1 && f.divides_exactly(&g) {
                f = f.exact_divide(&g).expect("tested divisor");
                out.push(g);
                let mut kept = Vec::with_capacity(remaining.len() - size);
                for (i, h) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        kept.push(h);
                    }
                }
                remaining = kept;
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.degree_or_zero() >= 1 {
        out.push(f);
    } else {
        debug_assert!(f.is_one(), "leftover unit after recombination");
    }
    out
}

/// Lexicographic k-subsets of 0..n.
struct Combinations {
    n: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        let k = current.len();
        // Advance: rightmost index that can still move up.
        let mut next = current.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] + 1 <= self.n - (k - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}
