//! Report records as JSON lines or whitespace-separated table rows.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use qcong::report::{CongruenceReport, FamilyParams, Witness};

/// Polynomials above this degree, and integers with more digits, are
/// summarised unless `--verbose` is given.
pub const WITNESS_LIMIT: usize = 40;

fn big(x: &BigInt, verbose: bool) -> String {
    let s = x.to_string();
    let digits = s.trim_start_matches('-').len();
    if verbose || digits <= WITNESS_LIMIT {
        s
    } else {
        format!("<{digits} digits>")
    }
}

fn poly(p: &impl ToString, degree: Option<i64>, verbose: bool) -> String {
    match degree {
        Some(d) if !verbose && d > WITNESS_LIMIT as i64 => format!("<degree {d}>"),
        _ => p.to_string(),
    }
}

pub fn witness_text(w: &Witness, verbose: bool) -> String {
    match w {
        Witness::Quotient(p) | Witness::Remainder(p) => poly(p, p.degree(), verbose),
        Witness::Residue(p) | Witness::Identity { difference: p } => {
            poly(p, p.degree().map(|d| d as i64), verbose)
        }
        Witness::Factorwise(checks) => checks
            .iter()
            .map(|c| {
                let den = if c.denominator_coprime { "" } else { "!den" };
                format!("Phi{}:{}/{}{den}", c.d, c.found, c.required)
            })
            .collect::<Vec<_>>()
            .join(","),
        Witness::Integer { value, modulus } => {
            format!("{} mod {}", big(value, verbose), big(modulus, verbose))
        }
        Witness::PAdic { difference, p, required } => format!(
            "({}/{}) mod {p}^{required}",
            big(difference.numer(), verbose),
            big(difference.denom(), verbose)
        ),
        Witness::Bracket { lower, upper, target, midpoint_error } => {
            format!("{lower} < {target} < {upper} (mid err {midpoint_error:e})")
        }
    }
}

fn params_json(p: &FamilyParams) -> Value {
    let mut m = Map::new();
    for (k, v) in p.fields() {
        m.insert(k.to_string(), json!(v));
    }
    Value::Object(m)
}

pub fn json_line(r: &CongruenceReport, verbose: bool) -> String {
    json!({
        "family": r.family,
        "params": params_json(&r.params),
        "holds": r.holds,
        "lhs_degree": r.lhs_degree,
        "modulus_degree": r.modulus_degree,
        "witness_degree": r.witness_degree(),
        "valuation": r.valuation,
        "witness": witness_text(&r.witness, verbose),
        "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
    })
    .to_string()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub const TABLE_HEADER: &str = "family          params                    holds  lhs_deg  mod_deg  wit_deg  val     elapsed_ms";

/// One row; every column is a single whitespace-free token.
pub fn table_row(r: &CongruenceReport) -> String {
    let params: Vec<String> = r.params.fields().iter().map(|(k, v)| format!("{k}={v}")).collect();
    let params = if params.is_empty() { "-".to_string() } else { params.join(",") };
    format!(
        "{:<15} {:<25} {:<6} {:>7}  {:>7}  {:>7}  {:>6}  {:>10.3}",
        r.family,
        params,
        r.holds,
        opt(r.lhs_degree),
        opt(r.modulus_degree),
        opt(r.witness_degree()),
        opt(r.valuation),
        r.elapsed.as_secs_f64() * 1e3,
    )
}
