//! Verification suites behind `gfp verify`: the pinned corpus, the
//! lifted-equivalence grids, and the structural identities.

use gfp_core::criteria::{capelli_fib_equiv, capelli_lucas_equiv, capelli_pow2_equiv, CapelliCheck};
use gfp_core::gfp::{builtin, Family, FamilySpec, Validation, BUILTIN_NAMES};
use gfp_core::polycore::IntPoly;
use gfp_core::Result;
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::{corpus, sweep};

/// Primes used by the equivalence grids.
pub const GRID_PRIMES: [usize; 3] = [3, 5, 7];
/// Power-of-two indices used by the even-index equivalence grid.
pub const GRID_POW2: [usize; 2] = [2, 4];
/// Seed for the randomized tail of the grids.
pub const GRID_SEED: u64 = 1;
/// Number of random specifications appended to the grids.
pub const GRID_RANDOM: usize = 10;

pub struct SuiteLine {
    pub label: String,
    pub pass: bool,
    pub detail: String,
    pub note: Option<String>,
}

pub struct SuiteReport {
    pub name: &'static str,
    pub lines: Vec<SuiteLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.lines.iter().filter(|l| l.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let tag = if line.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}", line.label, line.detail));
            if let Some(note) = &line.note {
                out.push_str(&format!(" (warn: {note})"));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "suite {}: {}/{} passed\n",
            self.name,
            self.passed(),
            self.lines.len()
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "passed": self.passed(),
            "total": self.lines.len(),
            "lines": self.lines
                .iter()
                .map(|l| json!({
                    "label": l.label,
                    "pass": l.pass,
                    "detail": l.detail,
                    "note": l.note,
                }))
                .collect::<Vec<_>>(),
        })
    }
}

/// Factor the pinned corpus and compare bit-for-bit.
pub fn corpus_suite(seed: u64) -> Result<SuiteReport> {
    let mut lines = Vec::new();
    for outcome in corpus::run(seed)? {
        lines.push(SuiteLine {
            label: outcome.id,
            pass: outcome.pass,
            detail: format!("{} [{}]", outcome.detail, outcome.source),
            note: outcome.note,
        });
    }
    Ok(SuiteReport { name: "corpus", lines })
}

/// (d, g) pairs exercised by the equivalence grids: every builtin plus a
/// seeded random tail.
fn grid_pairs() -> Vec<(String, IntPoly, IntPoly)> {
    let mut out = Vec::new();
    for name in BUILTIN_NAMES {
        let fam = builtin(name).expect("builtin exists");
        out.push((name.to_string(), fam.spec().d().clone(), fam.spec().g().clone()));
    }
    for (i, fam) in sweep::random_specs(GRID_RANDOM, 3, 5, GRID_SEED).into_iter().enumerate() {
        out.push((
            format!("random-{i:02}"),
            fam.spec().d().clone(),
            fam.spec().g().clone(),
        ));
    }
    out
}

fn fib_family(d: &IntPoly, g: &IntPoly) -> Result<Family> {
    Family::new(FamilySpec::fibonacci(d.clone(), g.clone()), Validation::Relaxed)
}

fn lucas_family(d: &IntPoly, g: &IntPoly) -> Result<Family> {
    // p0 = 2 makes p1 = d; irreducibility questions only depend on (d, g).
    let spec = FamilySpec::lucas(BigInt::from(2), d.clone(), g.clone())?;
    Family::new(spec, Validation::Relaxed)
}

fn check_blurb(index: usize, check: &CapelliCheck) -> String {
    format!("n = {index}: {}/{}", check.direct, check.lifted)
}

fn grid_line<F>(label: String, indices: &[usize], mut op: F) -> Result<SuiteLine>
where
    F: FnMut(usize) -> Result<CapelliCheck>,
{
    let mut pass = true;
    let mut parts = Vec::with_capacity(indices.len());
    for &n in indices {
        let check = op(n)?;
        pass &= check.agrees();
        parts.push(check_blurb(n, &check));
    }
    Ok(SuiteLine {
        label,
        pass,
        detail: format!("direct/lifted {}", parts.join(", ")),
        note: None,
    })
}

/// Direct-versus-lifted irreducibility over every grid pair.
pub fn capelli_suite() -> Result<SuiteReport> {
    let mut lines = Vec::new();
    for (name, d, g) in grid_pairs() {
        let fib = fib_family(&d, &g)?;
        lines.push(grid_line(format!("fib {name}"), &GRID_PRIMES, |p| {
            capelli_fib_equiv(&fib, p)
        })?);
        let lucas = lucas_family(&d, &g)?;
        lines.push(grid_line(format!("lucas {name}"), &GRID_PRIMES, |p| {
            capelli_lucas_equiv(&lucas, p)
        })?);
        lines.push(grid_line(format!("pow2 {name}"), &GRID_POW2, |n| {
            capelli_pow2_equiv(&lucas, n)
        })?);
    }
    Ok(SuiteReport { name: "capelli", lines })
}

/// Conjugate pairs sharing (d, g): Fibonacci-type name, Lucas-type name.
pub const CONJUGATE_PAIRS: [(&str, &str); 6] = [
    ("fibonacci", "lucas"),
    ("pell", "pellLucas"),
    ("fermat", "fermatLucas"),
    ("chebyshevU", "chebyshevT"),
    ("morganVoyceB", "morganVoyceC"),
    ("vieta", "vietaLucas"),
];

fn closed_form_line(name: &str, max_n: usize) -> Result<SuiteLine> {
    let fam = builtin(name).expect("builtin exists");
    let mut pass = true;
    for n in 0..=max_n {
        if fam.closed_form(n)? != fam.term(n)? {
            pass = false;
            break;
        }
    }
    Ok(SuiteLine {
        label: format!("closed-form {name}"),
        pass,
        detail: format!("expansion matches the recurrence for n = 0..={max_n}"),
        note: None,
    })
}

fn binet_line(fib_name: &str, lucas_name: &str, max_n: u32) -> Result<SuiteLine> {
    let fib = builtin(fib_name).expect("builtin exists");
    let lucas = builtin(lucas_name).expect("builtin exists");
    let mut pass = true;
    for n in 1..=max_n {
        let (a, b) = fib.binet_components(n)?;
        let scale = BigInt::one() << (n - 1);
        let want_b = fib.term(n as usize)?.scaled(&scale);
        let want_a = lucas.alpha_term(n as usize)?.scaled(&scale);
        if a != want_a || b != want_b {
            pass = false;
            break;
        }
    }
    Ok(SuiteLine {
        label: format!("binet {fib_name}/{lucas_name}"),
        pass,
        detail: format!("root-power components match the scaled terms for n = 1..={max_n}"),
        note: None,
    })
}

fn conjugate_line(fib_name: &str, lucas_name: &str, max_n: usize) -> Result<SuiteLine> {
    let fib = builtin(fib_name).expect("builtin exists");
    let lucas = builtin(lucas_name).expect("builtin exists");
    let g = fib.spec().g().clone();
    let mut pass = fib.spec().d() == lucas.spec().d() && fib.spec().g() == lucas.spec().g();
    for n in 1..=max_n {
        let lhs = lucas.alpha_term(n)?;
        let rhs = fib.term(n + 1)?.add(&g.mul(&fib.term(n - 1)?));
        if lhs != rhs {
            pass = false;
            break;
        }
    }
    Ok(SuiteLine {
        label: format!("conjugate {fib_name}/{lucas_name}"),
        pass,
        detail: format!("scaled Lucas term equals t(n+1) + g*t(n-1) for n = 1..={max_n}"),
        note: None,
    })
}

/// Structural identities: closed forms, Binet components, conjugacy.
pub fn identities_suite() -> Result<SuiteReport> {
    let mut lines = Vec::new();
    for name in BUILTIN_NAMES {
        lines.push(closed_form_line(name, 30)?);
    }
    for (f, l) in CONJUGATE_PAIRS {
        lines.push(binet_line(f, l, 20)?);
    }
    for (f, l) in CONJUGATE_PAIRS {
        lines.push(conjugate_line(f, l, 15)?);
    }
    lines.push(conjugate_line("pell", "pellLucasPrime", 15)?);
    Ok(SuiteReport { name: "identities", lines })
}
