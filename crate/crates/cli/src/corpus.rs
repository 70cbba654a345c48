//! The pinned factorization corpus: ten exact splits that the verifier
//! must reproduce bit-for-bit, embedded at compile time.

use gfp_core::gfp::{Family, FamilySpec, Validation};
use gfp_core::polycore::{format_poly, parse_poly, IntPoly};
use gfp_core::qfactor::factor_q_seeded;
use gfp_core::Result;
use num_bigint::BigInt;
use num_traits::One;
use serde::Deserialize;

use crate::render;

const CORPUS: &str = include_str!("../data/corpus.json");

#[derive(Deserialize)]
struct RawItem {
    id: String,
    kind: String,
    #[serde(default)]
    d: Option<String>,
    #[serde(default)]
    g: Option<String>,
    #[serde(default)]
    p0: Option<i64>,
    #[serde(default)]
    n: Option<usize>,
    object: String,
    #[serde(default)]
    poly: Option<String>,
    expected: RawExpected,
    source: String,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Deserialize)]
struct RawExpected {
    status: String,
    #[serde(default)]
    factors: Option<Vec<String>>,
}

pub struct CorpusItem {
    pub id: String,
    /// Human description of where the object came from.
    pub query: String,
    pub object: IntPoly,
    pub expect_irreducible: bool,
    /// Canonically sorted (factor, multiplicity) list; empty when the
    /// expectation is irreducibility.
    pub expected_factors: Vec<(IntPoly, u32)>,
    pub source: String,
    pub note: Option<String>,
}

fn need<'a, T>(field: &'a Option<T>, id: &str, name: &str) -> &'a T {
    field
        .as_ref()
        .unwrap_or_else(|| panic!("corpus item {id}: missing field {name}"))
}

fn item_object(raw: &RawItem) -> Result<(String, IntPoly)> {
    let id = &raw.id;
    match raw.kind.as_str() {
        "raw" => {
            let poly = parse_poly(need(&raw.poly, id, "poly"))?;
            Ok((format_poly(&poly), poly))
        }
        kind => {
            let d = parse_poly(need(&raw.d, id, "d"))?;
            let g = parse_poly(need(&raw.g, id, "g"))?;
            let n = *need(&raw.n, id, "n");
            let (family, query) = match kind {
                "fibonacci" => {
                    let query = format!("Ft_{n} for d = {}, g = {}", format_poly(&d), format_poly(&g));
                    (Family::new(FamilySpec::fibonacci(d, g), Validation::Relaxed)?, query)
                }
                "lucas" => {
                    let p0 = BigInt::from(*need(&raw.p0, id, "p0"));
                    // The file stores d; recover p1 = d * p0 / 2.
                    let p1 = d.scaled(&p0).exact_divide(&IntPoly::constant(BigInt::from(2)))?;
                    let query = format!(
                        "{} for d = {}, g = {}, p0 = {}",
                        raw.object.replace("_n", &format!("_{n}")),
                        format_poly(&d),
                        format_poly(&g),
                        p0
                    );
                    (Family::new(FamilySpec::lucas(p0, p1, g)?, Validation::Relaxed)?, query)
                }
                other => panic!("corpus item {id}: unknown kind {other}"),
            };
            let object = match raw.object.as_str() {
                "Ft_n" | "Lt_n" => family.term(n)?,
                "Lt_n_over_p1" => family.over_p1(n)?,
                other => panic!("corpus item {id}: unknown object {other}"),
            };
            Ok((query, object))
        }
    }
}

fn sorted_factors(strings: &[String]) -> Result<Vec<(IntPoly, u32)>> {
    let mut acc: Vec<(IntPoly, u32)> = Vec::new();
    for s in strings {
        let f = parse_poly(s)?;
        match acc.iter_mut().find(|(p, _)| *p == f) {
            Some(entry) => entry.1 += 1,
            None => acc.push((f, 1)),
        }
    }
    acc.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(acc)
}

/// Decode the embedded corpus. Malformed entries are a build defect, so
/// structural problems panic rather than error.
pub fn load() -> Result<Vec<CorpusItem>> {
    let raw: Vec<RawItem> = serde_json::from_str(CORPUS).expect("embedded corpus is well-formed JSON");
    let mut out = Vec::with_capacity(raw.len());
    for item in raw {
        let (query, object) = item_object(&item)?;
        let expect_irreducible = match item.expected.status.as_str() {
            "irreducible" => true,
            "reducible" => false,
            other => panic!("corpus item {}: unknown status {other}", item.id),
        };
        let expected_factors = match &item.expected.factors {
            Some(list) => sorted_factors(list)?,
            None => Vec::new(),
        };
        if !expect_irreducible && expected_factors.is_empty() {
            panic!("corpus item {}: reducible expectation without factors", item.id);
        }
        out.push(CorpusItem {
            id: item.id,
            query,
            object,
            expect_irreducible,
            expected_factors,
            source: item.source,
            note: item.note,
        });
    }
    Ok(out)
}

pub struct CorpusOutcome {
    pub id: String,
    pub pass: bool,
    pub detail: String,
    pub source: String,
    pub note: Option<String>,
}

/// Factor every corpus object and compare against the pinned expectation.
pub fn run(seed: u64) -> Result<Vec<CorpusOutcome>> {
    let mut out = Vec::new();
    for item in load()? {
        let fac = factor_q_seeded(&item.object, seed)?;
        let (pass, detail) = if item.expect_irreducible {
            if render::shows_irreducible(&fac) {
                (true, format!("{}: irreducible", item.query))
            } else {
                (
                    false,
                    format!(
                        "{}: expected irreducible, factored as {}",
                        item.query,
                        render::factor_list_text(&fac.factors)
                    ),
                )
            }
        } else if fac.unit.is_one() && fac.factors == item.expected_factors {
            (
                true,
                format!("{} = {}", item.query, render::factor_list_text(&fac.factors)),
            )
        } else {
            (
                false,
                format!(
                    "{}: expected {}, got unit {} and {}",
                    item.query,
                    render::factor_list_text(&item.expected_factors),
                    fac.unit,
                    render::factor_list_text(&fac.factors)
                ),
            )
        };
        out.push(CorpusOutcome {
            id: item.id,
            pass,
            detail,
            source: item.source,
            note: item.note,
        });
    }
    Ok(out)
}
