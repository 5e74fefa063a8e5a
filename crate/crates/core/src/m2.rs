//! Self-checking Macaulay2 scripts for a lexsegment ideal.

use std::fmt::Write;

use crate::betti::BettiTable;
use crate::decomp::{decompose_with, ClosedForm, PrimeDecomposition};
use crate::error::Result;
use crate::homological::betti_for_spec;
use crate::ideal::MonomialIdeal;
use crate::lexseg::{build_segment, LexsegmentSpec};
use crate::monomial::SquarefreeMonomial;
use crate::oracle::{hochster_betti, oracle_cap, HOCHSTER_CAP};

fn monomial(m: &SquarefreeMonomial) -> String {
    m.iter().map(|i| format!("x_{i}")).collect::<Vec<_>>().join("*")
}

fn ideal_expr(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(monomial).collect();
    format!("ideal({})", gens.join(", "))
}

fn intersection_expr(dec: &PrimeDecomposition) -> String {
    let primes: Vec<String> = dec
        .primes()
        .iter()
        .map(|p| format!("ideal({})", p.iter().map(|i| format!("x_{i}")).collect::<Vec<_>>().join(", ")))
        .collect();
    if primes.len() == 1 {
        primes[0].clone()
    } else {
        format!("intersect({})", primes.join(", "))
    }
}

fn tally_expr(table: &BettiTable) -> String {
    let entries: Vec<String> = table
        .iter()
        .filter(|&(_, _, b)| b > 0)
        .map(|(i, j, b)| format!("({i},{{{j}}},{j}) => {b}"))
        .collect();
    format!("new BettiTally from {{{}}}", entries.join(", "))
}

/// Betti table from a closed formula when one applies, else from the oracle
/// when the ambient is small enough.
fn table_for(spec: &LexsegmentSpec, ideal: &MonomialIdeal) -> Result<Option<BettiTable>> {
    if let Some(t) = betti_for_spec(spec, ideal)? {
        return Ok(Some(t));
    }
    if spec.n() <= HOCHSTER_CAP.min(oracle_cap()) {
        return Ok(Some(hochster_betti(ideal)?));
    }
    Ok(None)
}

/// A script defining `I`, asserting that the computed primes intersect to it,
/// that `I` has that many minimal primes, and that its Betti table matches.
/// Principal ideals get only the intersection assertion.
pub fn export_m2(spec: &LexsegmentSpec, form: ClosedForm) -> Result<String> {
    let ideal = build_segment(spec);
    let report = decompose_with(spec, form)?;
    let dec = &report.decomposition;
    let mut s = String::new();
    let w = &mut s;
    // Writing to a String cannot fail.
    let _ = writeln!(w, "-- {spec}");
    let _ = writeln!(w, "-- decomposition route: {}", serde_json::to_value(report.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default());
    let _ = writeln!(w, "R = QQ[x_1..x_{}];", spec.n());
    let _ = writeln!(w, "I = {};", ideal_expr(&ideal));
    let _ = writeln!(w, "assert({} == I);", intersection_expr(dec));
    if ideal.is_principal() {
        return Ok(s);
    }
    let _ = writeln!(s, "assert(#minimalPrimes I == {});", dec.len());
    if let Some(table) = table_for(spec, &ideal)? {
        let _ = writeln!(s, "assert(betti res module I == {});", tally_expr(&table));
    }
    Ok(s)
}
