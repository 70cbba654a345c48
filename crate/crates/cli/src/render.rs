//! Text and JSON rendering shared by the commands and the suites.
//!
//! Polynomials travel in JSON as little-endian coefficient arrays of
//! decimal strings, so arbitrarily large coefficients survive the trip.

use gfp_core::criteria::{Analysis, Certificate, Verdict};
use gfp_core::gfp::Kind;
use gfp_core::polycore::{format_poly, IntPoly};
use gfp_core::qfactor::Factorization;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

pub fn poly_json(f: &IntPoly) -> Value {
    Value::Array(f.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

/// Inverse of [`poly_json`]; reports re-parse through this.
pub fn poly_from_json(v: &Value) -> Option<IntPoly> {
    let arr = v.as_array()?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        coeffs.push(c.as_str()?.parse::<BigInt>().ok()?);
    }
    Some(IntPoly::from_coeffs(coeffs))
}

/// Wire name of the canonical object at an index.
pub fn object_name(kind: Kind, label: &str) -> &'static str {
    match (kind, label) {
        (Kind::Fibonacci, _) => "Ft_n",
        (Kind::Lucas, "term_over_p1") => "Lt_n_over_p1",
        (Kind::Lucas, _) => "Lt_n",
    }
}

pub fn certificate_json(cert: &Certificate) -> Value {
    match cert {
        Certificate::ProperFactor { factor } => json!({
            "type": "proper_factor",
            "factor": poly_json(factor),
        }),
        Certificate::FactorList { factors } => json!({
            "type": "factor_list",
            "factors": factors
                .iter()
                .map(|(f, m)| json!({ "poly": poly_json(f), "multiplicity": m }))
                .collect::<Vec<_>>(),
        }),
        Certificate::Eisenstein { prime } => json!({
            "type": "eisenstein",
            "prime": prime.to_string(),
        }),
        Certificate::PrimePowerShape { prime, base, exponent } => json!({
            "type": "prime_power_shape",
            "prime": prime.to_string(),
            "base": poly_json(base),
            "exponent": exponent,
        }),
        Certificate::LinearComposition { base, scale, offset } => json!({
            "type": "linear_composition",
            "base": poly_json(base),
            "scale": scale.to_string(),
            "offset": offset.to_string(),
        }),
        Certificate::LinearObject => json!({ "type": "linear_object" }),
    }
}

pub fn certificate_text(cert: &Certificate) -> String {
    match cert {
        Certificate::ProperFactor { factor } => {
            format!("proper factor {}", format_poly(factor))
        }
        Certificate::FactorList { factors } => factor_list_text(factors),
        Certificate::Eisenstein { prime } => format!("eisenstein at {prime}"),
        Certificate::PrimePowerShape { prime, base, exponent } => {
            format!("({})^{} shape at {}", format_poly(base), exponent, prime)
        }
        Certificate::LinearComposition { base, scale, offset } => {
            format!("{} composed at {}*x + {}", format_poly(base), scale, offset)
        }
        Certificate::LinearObject => "degree-one object".to_string(),
    }
}

pub fn factor_list_text(factors: &[(IntPoly, u32)]) -> String {
    let mut out = String::new();
    for (f, m) in factors {
        out.push('(');
        out.push_str(&format_poly(f));
        out.push(')');
        if *m > 1 {
            out.push_str(&format!("^{m}"));
        }
    }
    out
}

/// Whether a factorization exhibits its input as irreducible: one factor,
/// multiplicity one, and a unit content.
pub fn shows_irreducible(fac: &Factorization) -> bool {
    fac.factors.len() == 1 && fac.factors[0].1 == 1 && fac.unit.abs().is_one()
}

pub fn factorization_text(input: &IntPoly, fac: &Factorization) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !fac.unit.is_one() || fac.factors.is_empty() {
        parts.push(fac.unit.to_string());
    }
    for (f, m) in &fac.factors {
        let s = format!("({})", format_poly(f));
        parts.push(if *m > 1 { format!("{s}^{m}") } else { s });
    }
    let status = if shows_irreducible(fac) { "  [irreducible]" } else { "" };
    format!("{} = {}{}", format_poly(input), parts.join(" * "), status)
}

pub fn factorization_json(input: &IntPoly, fac: &Factorization) -> Value {
    json!({
        "input": poly_json(input),
        "unit": fac.unit.to_string(),
        "factors": fac.factors
            .iter()
            .map(|(f, m)| json!({ "poly": poly_json(f), "multiplicity": m }))
            .collect::<Vec<_>>(),
        "irreducible": shows_irreducible(fac),
    })
}

pub fn verdict_json(analysis: &Analysis, family_name: Option<&str>) -> Value {
    let status = match &analysis.verdict {
        Verdict::Irreducible { .. } => "irreducible",
        Verdict::Reducible { .. } => "reducible",
        Verdict::Unknown { .. } => "unknown",
    };
    let mut out = json!({
        "query": {
            "family": family_name,
            "kind": analysis.kind.to_string(),
            "n": analysis.index,
            "object": object_name(analysis.kind, analysis.object_label),
        },
        "object": poly_json(&analysis.object),
        "status": status,
        "criterion": analysis.verdict.criterion(),
        "certificate": analysis.verdict.certificate().map(certificate_json),
    });
    if let Verdict::Unknown { reason } = &analysis.verdict {
        out["reason"] = Value::String(reason.clone());
    }
    out
}

pub fn verdict_text(analysis: &Analysis, family_name: Option<&str>) -> String {
    let object = object_name(analysis.kind, analysis.object_label);
    let who = family_name.map(|s| format!("{s} ")).unwrap_or_default();
    let head = format!("{who}{object} at n = {}", analysis.index);
    let poly = format_poly(&analysis.object);
    match &analysis.verdict {
        Verdict::Irreducible { criterion, certificate } => format!(
            "{head}: irreducible\n  object: {poly}\n  criterion: {criterion}\n  certificate: {}",
            certificate_text(certificate)
        ),
        Verdict::Reducible { criterion, certificate } => format!(
            "{head}: reducible\n  object: {poly}\n  criterion: {criterion}\n  certificate: {}",
            certificate_text(certificate)
        ),
        Verdict::Unknown { reason } => {
            format!("{head}: unknown\n  object: {poly}\n  reason: {reason}")
        }
    }
}
