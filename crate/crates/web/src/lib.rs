//! Browser bindings: each export takes a spec and returns a JSON string,
//! either the result or `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use tspread_core::cm::{classify_with, Rules};
use tspread_core::decomp::{decompose_with, ClosedForm};
use tspread_core::homological::{betti_for_spec, invariants};
use tspread_core::oracle::{hochster_betti, HOCHSTER_CAP};
use tspread_core::{build_segment, LexsegmentSpec};

/// Largest ambient the page accepts; keeps the oracle fallback interactive.
pub const WEB_MAX_N: usize = 12;

fn indices(s: &str) -> Result<Option<Vec<usize>>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad index `{p}`")))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

/// Empty `u` means the initial segment ending at `v`, empty `v` the final
/// segment starting at `u`, both empty the Veronese ideal.
fn parse_spec(n: usize, d: usize, t: usize, u: &str, v: &str) -> Result<LexsegmentSpec, String> {
    if n > WEB_MAX_N {
        return Err(format!("n is limited to {WEB_MAX_N} in the browser"));
    }
    let spec = match (indices(u)?, indices(v)?) {
        (Some(u), Some(v)) => LexsegmentSpec::from_indices(n, d, t, &u, &v),
        (None, Some(v)) => LexsegmentSpec::initial(n, d, t, &v),
        (Some(u), None) => LexsegmentSpec::final_segment(n, d, t, &u),
        (None, None) => LexsegmentSpec::veronese(n, d, t),
    };
    spec.map_err(|e| e.to_string())
}

fn render(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn form(repaired: bool) -> ClosedForm {
    if repaired {
        ClosedForm::Repaired
    } else {
        ClosedForm::Literal
    }
}

/// Minimal primes with provenance tags.
#[wasm_bindgen]
pub fn decompose(n: usize, d: usize, t: usize, u: &str, v: &str, repaired: bool) -> String {
    render((|| {
        let spec = parse_spec(n, d, t, u, v)?;
        let r = decompose_with(&spec, form(repaired)).map_err(|e| e.to_string())?;
        Ok(json!({
            "spec": spec.to_string(),
            "generators": build_segment(&spec).generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "route": r.method,
            "primes": r.decomposition.supports(),
            "provenance": r.decomposition.provenance(),
            "note": r.note,
        }))
    })())
}

/// Betti table of `I` with invariants; the oracle fills in when no formula applies.
#[wasm_bindgen]
pub fn betti(n: usize, d: usize, t: usize, u: &str, v: &str) -> String {
    render((|| {
        let spec = parse_spec(n, d, t, u, v)?;
        let ideal = build_segment(&spec);
        let err = |e: tspread_core::Error| e.to_string();
        let (table, source) = match betti_for_spec(&spec, &ideal).map_err(err)? {
            Some(b) => (b, "formula"),
            None if n <= HOCHSTER_CAP => (hochster_betti(&ideal).map_err(err)?, "oracle"),
            None => return Err("no formula applies and n is beyond the oracle".into()),
        };
        Ok(json!({
            "spec": spec.to_string(),
            "source": source,
            "grid": table.to_string(),
            "betti": table,
            "invariants": invariants(&spec).map_err(err)?,
        }))
    })())
}

/// Cohen-Macaulay verdict with branch and witness.
#[wasm_bindgen]
pub fn classify(n: usize, d: usize, t: usize, u: &str, v: &str, repaired: bool) -> String {
    render((|| {
        let spec = parse_spec(n, d, t, u, v)?;
        let rules = if repaired { Rules::Repaired } else { Rules::Literal };
        let verdict = classify_with(&spec, rules).map_err(|e| e.to_string())?;
        serde_json::to_value(&verdict).map_err(|e| e.to_string())
    })())
}
