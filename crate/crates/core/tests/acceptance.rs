//! Runs every acceptance criterion and prints one PASS/FAIL line per
//! criterion. The process fails only when a result deviates from the
//! recorded expectation: criteria 4, 7 and 10 are known to FAIL for the
//! published statements, and the run asserts the exact failure signature
//! plus a clean result for the corrected variants.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use tspread_core::cm::{classify_with, Branch, Rules};
use tspread_core::decomp::{decompose_completely, decompose_final, decompose_initial, decompose_with, ClosedForm, Method};
use tspread_core::homological::{
    betti_completely_linear, betti_final, betti_splitting_check, betti_strongly_stable, invariants_final,
    invariants_initial, split_by_variable,
};
use tspread_core::lexseg::{all_specs, has_linear_resolution_completely, is_completely};
use tspread_core::monomial::{binom, count_m, enumerate_m, SquarefreeMonomial};
use tspread_core::oracle::{depth_oracle, hochster_betti, krull_dim_oracle, minimal_primes_bruteforce, reisner_cm_check};
use tspread_core::sweep::{dimension_bound_scan, SweepConfig};
use tspread_core::{build_segment, LexsegmentSpec};

struct Outcome {
    pass: bool,
    detail: String,
    /// Whether the verdict is the one recorded for this criterion.
    expected: bool,
}

impl Outcome {
    fn check(pass: bool, detail: String) -> Self {
        Self { pass, detail, expected: pass }
    }
}

fn specs(n: std::ops::RangeInclusive<usize>, d: &[usize], t: &[usize]) -> Vec<LexsegmentSpec> {
    let mut out = Vec::new();
    for n in n {
        for &d in d {
            for &t in t {
                out.extend(all_specs(n, d, t));
            }
        }
    }
    out
}

fn m(n: usize, s: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::new(n, s).unwrap()
}

fn supports(primes: &[tspread_core::monomial::IndexSet]) -> Vec<Vec<usize>> {
    primes.iter().map(|p| p.to_vec()).collect()
}

fn golden(expected: &[&[usize]], got: Vec<Vec<usize>>, elapsed: Duration) -> Outcome {
    let want: Vec<Vec<usize>> = expected.iter().map(|p| p.to_vec()).collect();
    Outcome::check(
        got == want && elapsed < Duration::from_secs(1),
        format!("{} primes in canonical order, {elapsed:.2?}", got.len()),
    )
}

fn c1() -> Outcome {
    let start = Instant::now();
    let dec = decompose_initial(7, 3, 2, &m(7, &[2, 5, 7])).unwrap();
    golden(
        &[&[1, 2], &[1, 4, 5], &[1, 4, 7], &[1, 6, 7], &[3, 4, 5], &[3, 4, 7], &[3, 6, 7], &[5, 6, 7]],
        dec.supports(),
        start.elapsed(),
    )
}

fn c2() -> Outcome {
    let start = Instant::now();
    let dec = decompose_final(7, 3, 2, &m(7, &[1, 4, 6])).unwrap();
    golden(
        &[&[4, 5], &[4, 7], &[6, 7], &[1, 2, 3], &[1, 2, 5], &[1, 2, 7]],
        dec.supports(),
        start.elapsed(),
    )
}

fn c3() -> Outcome {
    let start = Instant::now();
    let spec = LexsegmentSpec::from_indices(7, 3, 2, &[1, 4, 6], &[2, 5, 7]).unwrap();
    let c = decompose_completely(&spec).unwrap();
    let elapsed = start.elapsed();
    let mut out = golden(&[&[1, 2], &[4, 5], &[4, 7], &[6, 7]], c.decomposition.supports(), elapsed);
    let families_ok = c.families.i_set == vec![1] && c.families.f_tilde.is_empty();
    out.pass &= families_ok;
    out.expected = out.pass;
    out.detail += &format!(", I = {:?}, F~ = {:?}", c.families.i_set, supports(&c.families.f_tilde));
    out
}

/// Decomposition mismatches per route over the given specs.
fn decomposition_mismatches(all: &[LexsegmentSpec], form: ClosedForm) -> Vec<(LexsegmentSpec, Method)> {
    all.par_iter()
        .filter_map(|s| {
            let r = decompose_with(s, form).unwrap();
            let oracle = supports(&minimal_primes_bruteforce(&build_segment(s)).unwrap());
            (r.decomposition.supports() != oracle).then_some((*s, r.method))
        })
        .collect()
}

fn c4() -> Outcome {
    let start = Instant::now();
    let all: Vec<LexsegmentSpec> = specs(1..=9, &[2, 3], &[1, 2, 3])
        .into_iter()
        .filter(|s| s.is_initial() || s.is_final() || is_completely(s))
        .collect();
    let literal = decomposition_mismatches(&all, ClosedForm::Literal);
    let repaired = decomposition_mismatches(&all, ClosedForm::Repaired);
    let routes: BTreeSet<String> = literal.iter().map(|(_, m)| format!("{m:?}")).collect();
    let (finals, completely) = (
        literal.iter().filter(|(_, m)| *m == Method::Final).count(),
        literal.iter().filter(|(_, m)| *m == Method::Completely).count(),
    );
    let signature = !literal.is_empty()
        && literal.iter().all(|(_, m)| matches!(m, Method::Final | Method::Completely))
        && repaired.is_empty();
    if let Some((s, _)) = literal.first() {
        println!("    first literal mismatch: {s}");
    }
    println!(
        "    corrected final/completely forms: {} mismatches over the same {} specs",
        repaired.len(),
        all.len()
    );
    Outcome {
        pass: literal.is_empty(),
        detail: format!(
            "{} specs, {} literal mismatches (final {finals}, completely {completely}; routes {routes:?}), {:.1?}",
            all.len(),
            literal.len(),
            start.elapsed()
        ),
        expected: signature,
    }
}

fn c5() -> Outcome {
    let start = Instant::now();
    let all = specs(1..=8, &[1, 2, 3, 4], &[1, 2]);
    let entrywise: Vec<(bool, bool)> = all
        .par_iter()
        .filter(|s| s.is_initial() || s.is_final())
        .map(|s| {
            let ideal = build_segment(s);
            let oracle = hochster_betti(&ideal).unwrap();
            let mut ok = true;
            if s.is_initial() {
                ok &= betti_strongly_stable(&ideal, s.t()).unwrap() == oracle;
            }
            if s.is_final() {
                ok &= betti_final(&ideal, s.t()).unwrap() == oracle;
            }
            (ok, true)
        })
        .collect();
    let tables = entrywise.len();
    let table_bad = entrywise.iter().filter(|(ok, _)| !ok).count();
    let totals: Vec<bool> = all
        .par_iter()
        .filter(|s| is_completely(s) && s.d() >= 2 && has_linear_resolution_completely(s).unwrap_or(false))
        .map(|s| match betti_completely_linear(s) {
            Ok(t) => t == hochster_betti(&build_segment(s)).unwrap().totals(),
            Err(_) => false,
        })
        .collect();
    let totals_bad = totals.iter().filter(|ok| !**ok).count();
    Outcome::check(
        table_bad == 0 && totals_bad == 0 && tables > 0 && !totals.is_empty(),
        format!(
            "{tables} initial/final tables ({table_bad} bad), {} completely totals ({totals_bad} bad), {:.1?}",
            totals.len(),
            start.elapsed()
        ),
    )
}

fn c6() -> Outcome {
    let start = Instant::now();
    let all = specs(1..=9, &[2, 3, 4], &[1, 2, 3]);
    let results: Vec<(bool, bool)> = all
        .par_iter()
        .filter_map(|s| {
            let closed = if s.is_initial() && s.v().min() >= 2 {
                invariants_initial(s.n(), s.d(), s.t(), &s.v()).unwrap()
            } else if s.is_final() && s.u().min() == 1 {
                invariants_final(s.n(), s.d(), s.t(), &s.u()).unwrap()
            } else {
                return None;
            };
            let ideal = build_segment(s);
            let (dim, depth) = (krull_dim_oracle(&ideal).unwrap(), depth_oracle(&ideal).unwrap());
            let ok = closed.dim == dim && closed.depth == depth && closed.pd_quotient == s.n() - depth;
            Some((s.is_initial(), ok))
        })
        .collect();
    let initial = results.iter().filter(|(i, _)| *i).count();
    let bad = results.iter().filter(|(_, ok)| !ok).count();
    Outcome::check(
        bad == 0 && initial > 0 && results.len() > initial,
        format!(
            "{initial} initial and {} final specs, {bad} bad, {:.1?}",
            results.len() - initial,
            start.elapsed()
        ),
    )
}

struct Classified {
    literal: (bool, Branch),
    repaired: (bool, Branch),
    oracle: bool,
    gcd_failure: bool,
    intersection_failure: bool,
}

fn c7() -> Outcome {
    let start = Instant::now();
    let all = specs(1..=10, &[2, 3, 4], &[1, 2, 3]);
    let rows: Vec<Classified> = all
        .par_iter()
        .map(|s| {
            let lit = classify_with(s, Rules::Literal).unwrap();
            let rep = classify_with(s, Rules::Repaired).unwrap();
            let w = &lit.witness;
            Classified {
                literal: (lit.is_cm, lit.branch),
                repaired: (rep.is_cm, rep.branch),
                oracle: reisner_cm_check(&build_segment(s)).unwrap().is_cm,
                gcd_failure: lit.branch == Branch::HeightTwoSplitting
                    && w.residual_gcd.as_ref().is_some_and(|g| !g.is_empty()),
                intersection_failure: lit.branch == Branch::HeightTwoSplitting
                    && w.intersection_generators.as_ref().is_some_and(|g| g.len() > 1),
            }
        })
        .collect();
    let literal_bad: Vec<&Classified> = rows.iter().filter(|r| r.literal.0 != r.oracle).collect();
    let repaired_bad = rows.iter().filter(|r| r.repaired.0 != r.oracle).count();
    let bad_branches: BTreeSet<&str> = literal_bad.iter().map(|r| r.literal.1.name()).collect();
    let seen: std::collections::HashSet<Branch> = rows.iter().map(|r| r.literal.1).collect();
    let required = [
        Branch::Veronese,
        Branch::InitialNonVeronese,
        Branch::FinalNonVeronese,
        Branch::HeightTwoSplitting,
        Branch::HeightTwoCompleteIntersection,
        Branch::GeneralExtremal,
        Branch::GeneralSquarefree,
        Branch::GeneralSpread,
    ];
    let coverage = required.iter().all(|b| seen.contains(b));
    let gcd = rows.iter().filter(|r| r.gcd_failure).count();
    let inter = rows.iter().filter(|r| r.intersection_failure).count();
    let splitting_bad = literal_bad.iter().filter(|r| r.literal.1 == Branch::HeightTwoSplitting).count();
    let squarefree_bad = literal_bad.iter().filter(|r| r.literal.1 == Branch::GeneralSquarefree).count();
    let signature = coverage
        && gcd > 0
        && inter > 0
        && repaired_bad == 0
        && !literal_bad.is_empty()
        && splitting_bad + squarefree_bad == literal_bad.len();
    println!(
        "    corrected rules: {repaired_bad} mismatches; height-two failure modes: gcd {gcd}, non-principal P∩Q {inter}; all branches exercised: {coverage}"
    );
    Outcome {
        pass: literal_bad.is_empty() && coverage && gcd > 0 && inter > 0,
        detail: format!(
            "{} specs, {} literal mismatches (height-two-splitting {splitting_bad}, general-squarefree {squarefree_bad}; branches {bad_branches:?}), {:.1?}",
            rows.len(),
            literal_bad.len(),
            start.elapsed()
        ),
        expected: signature,
    }
}

fn c8() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for n in 1..=20usize {
        for d in 1..=6usize {
            for t in 1..=4usize {
                if n < 1 + (d - 1) * t {
                    continue;
                }
                checked += 1;
                let formula = binom((n - (t - 1) * (d - 1)) as i64, d as i64);
                let listed = enumerate_m(n, d, t).len() as u64;
                if listed != formula || count_m(n, d, t) != formula {
                    bad += 1;
                }
            }
        }
    }
    Outcome::check(bad == 0, format!("{checked} feasible (n, d, t), {bad} bad"))
}

fn c9() -> Outcome {
    let start = Instant::now();
    let cfg = SweepConfig {
        n: (1, 10),
        d: (2, 4),
        t: (1, 3),
        ..SweepConfig::default()
    };
    let s = dimension_bound_scan(&cfg).unwrap();
    let proven_side: Vec<_> = s
        .counterexamples
        .iter()
        .filter(|c| c.completely || c.spec.t() == 1)
        .collect();
    for c in &s.counterexamples {
        println!(
            "    potential counterexample: {} dim {} < {} (completely: {})",
            c.spec, c.dim, c.bound, c.completely
        );
    }
    let open = s.counterexamples.len() - proven_side.len();
    Outcome::check(
        proven_side.is_empty(),
        format!(
            "{} specs ({} completely, {} not), bound violated on {} completely/t=1 specs; recorded {open} potential counterexamples among the rest, {:.1?}",
            s.specs,
            s.completely,
            s.non_completely,
            proven_side.len(),
            start.elapsed()
        ),
    )
}

/// Spec, identity holds, some generator with minimum 1 is divisible by x2, Q is linear.
type SplitRow = (LexsegmentSpec, bool, bool, bool);

fn c10() -> Outcome {
    let start = Instant::now();
    let all: Vec<LexsegmentSpec> = specs(1..=9, &[2, 3, 4], &[1, 2, 3])
        .into_iter()
        .filter(|s| {
            let (n, d, t) = (s.n(), s.d(), s.t());
            s.u().min() == 1 && s.v().min() == 2 && 3 + (d - 1) * t <= n && n <= 3 + (2 * d - 3) * t
        })
        .collect();
    let results: Vec<SplitRow> = all
        .par_iter()
        .map(|s| {
            let ideal = build_segment(s);
            let x2_in_p = ideal.generators().iter().any(|g| g.min() == 1 && g.contains(2));
            let (p, q) = split_by_variable(&ideal, 2).unwrap();
            if p.is_zero() || q.is_zero() {
                return (*s, true, x2_in_p, true);
            }
            let r = betti_splitting_check(&ideal, &p, &q).unwrap();
            (*s, r.holds, x2_in_p, r.q.is_linear())
        })
        .collect();
    let bad: Vec<_> = results.iter().filter(|r| !r.1).collect();
    let x2_cases = results.iter().filter(|r| r.2).count();
    let bad_clean = bad.iter().filter(|r| !r.2).count();
    let bad_linear_q = bad.iter().filter(|r| r.3).count();
    if let Some(r) = bad.first() {
        println!("    first failing split: {}", r.0);
    }
    println!(
        "    failures with no min-1 generator divisible by x2: {bad_clean}; failures where Q has a linear resolution: {bad_linear_q}"
    );
    Outcome {
        pass: bad.is_empty() && !results.is_empty(),
        detail: format!(
            "{} specs in the height-two regime, {} bad (all among the {x2_cases} specs where x2 divides a generator with minimum 1), {:.1?}",
            results.len(),
            bad.len(),
            start.elapsed()
        ),
        expected: !results.is_empty() && bad_clean == 0 && bad_linear_q == 0,
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("golden initial decomposition (7,3,2), v = x2x5x7", c1),
        ("golden final decomposition (7,3,2), u = x1x4x6", c2),
        ("golden completely decomposition (7,3,2), u = x1x4x6, v = x2x5x7", c3),
        ("exhaustive decomposition equivalence, n <= 9, d in {2,3}, t <= 3", c4),
        ("Betti tables and completely totals against Hochster, n <= 8, t <= 2", c5),
        ("initial/final pd, depth and dim against the oracle, n <= 9", c6),
        ("CM classification against Reisner, n <= 10, d in {2,3,4}, t <= 3", c7),
        ("count identity |M_(n,d,t)|, n <= 20, d <= 6, t <= 4", c8),
        ("dimension bound dim(S/I) >= (d-1)t scan, n <= 10", c9),
        ("Betti splitting by x2 in the height-two regime, n <= 9", c10),
    ];
    let mut unexpected = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict}  {name}: {}", k + 1, o.detail);
        if !o.expected {
            unexpected.push(k + 1);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
