//! Closed-form graded Betti numbers and the invariants read off from them.

use serde::Serialize;

use crate::betti::BettiTable;
use crate::decomp::{decompose_with, ClosedForm};
use crate::error::{precondition, Error, Result};
use crate::ideal::{intersect_ideals, MonomialIdeal};
use crate::lexseg::{build_segment, has_linear_resolution_completely, is_completely, LexsegmentSpec};
use crate::monomial::{binom, enumerate_m, is_t_spread, max_m, slex, SquarefreeMonomial};
use crate::oracle::hochster_betti;

/// First generator `u` and swap `x_i u / x_j` that leaves the ideal, if any.
///
/// With `reversed`, swaps move toward larger indices (`i > j`).
fn exchange_violation(ideal: &MonomialIdeal, t: usize, reversed: bool) -> Option<String> {
    let n = ideal.ambient();
    for u in ideal.generators() {
        if !is_t_spread(u, t) {
            return Some(format!("{u} is not {t}-spread"));
        }
        for j in u.iter() {
            let base = u.without(j).expect("j in support");
            let range: Box<dyn Iterator<Item = usize>> = if reversed {
                Box::new(j + 1..=n)
            } else {
                Box::new(1..j)
            };
            for i in range {
                let Some(w) = base.with(i) else { continue };
                if is_t_spread(&w, t) && !ideal.contains(&w) {
                    return Some(format!("{u}: x{i}·{u}/x{j} = {w} is missing"));
                }
            }
        }
    }
    None
}

/// Whether `ideal` is t-spread strongly stable (for the reversed variable
/// order when `reversed`), checked by every admissible exchange on `G(I)`.
pub fn is_t_spread_strongly_stable(ideal: &MonomialIdeal, t: usize, reversed: bool) -> bool {
    exchange_violation(ideal, t, reversed).is_none()
}

fn guard_stable(ideal: &MonomialIdeal, t: usize, reversed: bool) -> Result<()> {
    match exchange_violation(ideal, t, reversed) {
        None => Ok(()),
        Some(witness) => Err(Error::NotStronglyStable { reversed, witness }),
    }
}

/// `β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(max(u) − t(j−1) − 1, i)` for a
/// t-spread strongly stable ideal.
pub fn betti_strongly_stable(ideal: &MonomialIdeal, t: usize) -> Result<BettiTable> {
    guard_stable(ideal, t, false)?;
    Ok(table_from(ideal, |u| u.max() as i64 - (t * (u.degree() - 1)) as i64 - 1))
}

/// `β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(n − min(u) − t(j−1), i)` for an ideal
/// that is t-spread strongly stable with the variable order reversed.
pub fn betti_final(ideal: &MonomialIdeal, t: usize) -> Result<BettiTable> {
    guard_stable(ideal, t, true)?;
    let n = ideal.ambient() as i64;
    Ok(table_from(ideal, |u| n - u.min() as i64 - (t * (u.degree() - 1)) as i64))
}

fn table_from(ideal: &MonomialIdeal, top: impl Fn(&SquarefreeMonomial) -> i64) -> BettiTable {
    let mut table = BettiTable::new();
    for u in ideal.generators() {
        let a = top(u);
        let j = u.degree();
        for i in 0..=a.max(0) as usize {
            table.add(i, i + j, binom(a, i as i64));
        }
    }
    table
}

/// Total Betti numbers `β_0 .. β_pd` of a completely lexsegment ideal with a
/// linear resolution:
/// `Σ_{w ≤ u} C(n − min(w) − (d−1)t, i) − Σ_{w < v} C(max(w) − (d−1)t − 1, i)`.
pub fn betti_completely_linear(spec: &LexsegmentSpec) -> Result<Vec<u64>> {
    const OP: &str = "betti_completely_linear";
    if !is_completely(spec) {
        return Err(precondition(OP, "not a completely lexsegment ideal"));
    }
    if !has_linear_resolution_completely(spec)? {
        return Err(precondition(OP, "the ideal has no linear resolution"));
    }
    let (n, d, t) = (spec.n() as i64, spec.d(), spec.t());
    let shift = ((d - 1) * t) as i64;
    let (u, v) = (spec.u(), spec.v());
    let all = enumerate_m(spec.n(), d, t);
    let upto_u: Vec<i64> = all
        .iter()
        .filter(|w| slex(w, &u).is_le())
        .map(|w| n - w.min() as i64 - shift)
        .collect();
    let below_v: Vec<i64> = all
        .iter()
        .filter(|w| slex(w, &v).is_lt())
        .map(|w| w.max() as i64 - shift - 1)
        .collect();
    let top = upto_u.iter().chain(&below_v).copied().max().unwrap_or(0).max(0);
    let mut totals = Vec::new();
    for i in 0..=top {
        let plus: i128 = upto_u.iter().map(|&a| binom(a, i) as i128).sum();
        let minus: i128 = below_v.iter().map(|&a| binom(a, i) as i128).sum();
        let b = plus - minus;
        if b < 0 {
            return Err(Error::Internal(format!("{OP}: negative β_{i} = {b} for {spec}")));
        }
        totals.push(b as u64);
    }
    while totals.last() == Some(&0) {
        totals.pop();
    }
    Ok(totals)
}

/// Where a reported value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Closed form for initial lexsegments.
    InitialFormula,
    /// Closed form for final lexsegments.
    FinalFormula,
    /// Read off a closed-form Betti table.
    BettiFormula,
    /// Height of the minimal primes from the decomposition routes.
    Decomposition,
    /// Hochster's formula on the Stanley-Reisner complex.
    Oracle,
    /// Auslander-Buchsbaum or `dim = n − height` from the other fields.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSources {
    pub pd: Source,
    pub depth: Source,
    pub dim: Source,
    pub height: Source,
}

/// `pd(I)`, `pd(S/I)`, `depth(S/I)`, `dim(S/I)` and `height(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub pd_ideal: usize,
    pub pd_quotient: usize,
    pub depth: usize,
    pub dim: usize,
    pub height: usize,
    pub is_cm: bool,
    pub source: InvariantSources,
}

impl InvariantReport {
    fn from_pd_and_dim(n: usize, pd_quotient: usize, dim: usize, source: InvariantSources) -> Self {
        let depth = n - pd_quotient;
        Self {
            n,
            pd_ideal: pd_quotient.saturating_sub(1),
            pd_quotient,
            depth,
            dim,
            height: n - dim,
            is_cm: dim == depth,
            source,
        }
    }
}

/// Initial lexsegment `(L^i(v))`, `v = x_{j1}···x_{jd}`, `j1 ≥ 2`, `d ≥ 2`:
/// `pd(S/J) = n − (d−1)t`, `depth = (d−1)t`, `dim = n − j1`.
pub fn invariants_initial(n: usize, d: usize, t: usize, v: &SquarefreeMonomial) -> Result<InvariantReport> {
    const OP: &str = "invariants_initial";
    check_endpoint(OP, n, d, t, v)?;
    if v.min() < 2 {
        return Err(precondition(OP, "min(v) = 1: x1 divides every generator; normalize first"));
    }
    let pd = n - (d - 1) * t;
    let dim = n - v.min();
    let s = Source::InitialFormula;
    Ok(InvariantReport::from_pd_and_dim(
        n,
        pd,
        dim,
        InvariantSources { pd: s, depth: s, dim: s, height: s },
    ))
}

/// Final lexsegment `(L^f(u))` with `min(u) = 1`, `d ≥ 2`:
/// `pd(S/T) = n − (d−1)t`, `depth = (d−1)t`, and `dim = (d−1)t` for the
/// Veronese ideal, `1 + (d−1)t` otherwise.
pub fn invariants_final(n: usize, d: usize, t: usize, u: &SquarefreeMonomial) -> Result<InvariantReport> {
    const OP: &str = "invariants_final";
    check_endpoint(OP, n, d, t, u)?;
    if u.min() != 1 {
        return Err(precondition(OP, format!("min(u) = {} must be 1", u.min())));
    }
    let pd = n - (d - 1) * t;
    let dim = if Some(*u) == max_m(n, d, t) { (d - 1) * t } else { 1 + (d - 1) * t };
    let s = Source::FinalFormula;
    Ok(InvariantReport::from_pd_and_dim(
        n,
        pd,
        dim,
        InvariantSources { pd: s, depth: s, dim: s, height: s },
    ))
}

fn check_endpoint(op: &'static str, n: usize, d: usize, t: usize, w: &SquarefreeMonomial) -> Result<()> {
    if d < 2 {
        return Err(precondition(op, "degree must be at least 2"));
    }
    if w.ambient() != n || w.degree() != d || !is_t_spread(w, t) {
        return Err(precondition(op, format!("{w} is not in M_({n},{d},{t})")));
    }
    Ok(())
}

/// Invariants of any lexsegment ideal, by the most specific route available:
/// the initial/final closed forms, then a closed-form Betti table, then the
/// oracle for `pd`. `dim` comes from the decomposition routes.
pub fn invariants(spec: &LexsegmentSpec) -> Result<InvariantReport> {
    let (n, d, t) = (spec.n(), spec.d(), spec.t());
    if d >= 2 {
        if spec.is_initial() && spec.v().min() >= 2 {
            return invariants_initial(n, d, t, &spec.v());
        }
        if spec.is_final() && spec.u().min() == 1 {
            return invariants_final(n, d, t, &spec.u());
        }
    }
    let ideal = build_segment(spec);
    let (pd_ideal, pd_source) = match betti_for_spec(spec, &ideal)? {
        Some(table) => (table.pd(), Source::BettiFormula),
        None => (hochster_betti(&ideal)?.pd(), Source::Oracle),
    };
    let pd_quotient = pd_ideal.map_or(0, |p| p + 1);
    let height = decompose_with(spec, ClosedForm::Repaired)?.decomposition.height();
    let source = InvariantSources {
        pd: pd_source,
        depth: Source::Derived,
        dim: Source::Derived,
        height: Source::Decomposition,
    };
    Ok(InvariantReport::from_pd_and_dim(n, pd_quotient, n - height, source))
}

/// A closed-form Betti table when one applies: either order of strong
/// stability, or a completely ideal with a linear resolution.
pub fn betti_for_spec(spec: &LexsegmentSpec, ideal: &MonomialIdeal) -> Result<Option<BettiTable>> {
    let t = spec.t();
    if is_t_spread_strongly_stable(ideal, t, false) {
        return betti_strongly_stable(ideal, t).map(Some);
    }
    if is_t_spread_strongly_stable(ideal, t, true) {
        return betti_final(ideal, t).map(Some);
    }
    let (u, v) = (spec.u(), spec.v());
    if u.min() == 1 && v.min() > 1 && is_completely(spec) && has_linear_resolution_completely(spec)? {
        let mut table = BettiTable::new();
        for (i, b) in betti_completely_linear(spec)?.into_iter().enumerate() {
            table.add(i, i + spec.d(), b);
        }
        return Ok(Some(table));
    }
    Ok(None)
}

/// Outcome of checking `β_{i,j}(I) = β_{i,j}(P) + β_{i,j}(Q) + β_{i−1,j}(P∩Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub holds: bool,
    /// `pd(I) = max{pd(P), pd(Q), pd(P∩Q) + 1}`.
    pub pd_identity: bool,
    pub ideal: BettiTable,
    pub p: BettiTable,
    pub q: BettiTable,
    pub intersection: BettiTable,
    pub intersection_generators: Vec<Vec<usize>>,
    /// `(i, j)` where the two sides differ.
    pub failures: Vec<(usize, usize)>,
}

/// Checks the Betti splitting identity for `I = P + Q` on oracle tables.
pub fn betti_splitting_check(i: &MonomialIdeal, p: &MonomialIdeal, q: &MonomialIdeal) -> Result<SplittingReport> {
    let n = i.ambient();
    if p.ambient() != n || q.ambient() != n {
        return Err(Error::InvalidPartition("ambients differ".into()));
    }
    let mut joint: Vec<SquarefreeMonomial> = p.generators().iter().chain(q.generators()).copied().collect();
    let total = joint.len();
    joint.sort_by(slex);
    joint.dedup();
    if joint.len() != total {
        return Err(Error::InvalidPartition("P and Q share a generator".into()));
    }
    let mut gi = i.generators().to_vec();
    gi.sort_by(slex);
    if gi != joint {
        return Err(Error::InvalidPartition("G(P) ∪ G(Q) differs from G(I)".into()));
    }
    let pq = intersect_ideals(p, q)?;
    let (bi, bp, bq, bpq) = (hochster_betti(i)?, hochster_betti(p)?, hochster_betti(q)?, hochster_betti(&pq)?);
    let rhs = bp.plus(&bq).plus(&bpq.shifted_homologically());
    let mut keys: Vec<(usize, usize)> = bi.iter().chain(rhs.iter()).map(|(a, b, _)| (a, b)).collect();
    keys.sort_unstable();
    keys.dedup();
    let failures: Vec<(usize, usize)> = keys.into_iter().filter(|&(a, b)| bi.get(a, b) != rhs.get(a, b)).collect();
    let expected_pd = [bp.pd(), bq.pd(), bpq.pd().map(|x| x + 1)].into_iter().flatten().max();
    Ok(SplittingReport {
        holds: failures.is_empty(),
        pd_identity: bi.pd() == expected_pd,
        ideal: bi,
        p: bp,
        q: bq,
        intersection: bpq,
        intersection_generators: pq.generators().iter().map(|g| g.support()).collect(),
        failures,
    })
}

/// `(P, Q)` with `Q` the generators divisible by `x_var` and `P` the rest.
pub fn split_by_variable(ideal: &MonomialIdeal, var: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let n = ideal.ambient();
    let (q, p): (Vec<SquarefreeMonomial>, Vec<SquarefreeMonomial>) =
        ideal.generators().iter().partition(|g| g.contains(var));
    Ok((MonomialIdeal::new(n, p)?, MonomialIdeal::new(n, q)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexseg::all_specs;
    use crate::oracle::{depth_oracle, krull_dim_oracle};

    fn m(n: usize, s: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::new(n, s).unwrap()
    }

    #[test]
    fn initial_example_table() {
        let s = LexsegmentSpec::initial(7, 3, 2, &[2, 5, 7]).unwrap();
        let j = build_segment(&s);
        let b = betti_strongly_stable(&j, 2).unwrap();
        assert_eq!(b.total(0), 9);
        assert_eq!(b.pd().map(|p| p + 1), Some(3));
        assert_eq!(b, hochster_betti(&j).unwrap());
    }

    #[test]
    fn principal_is_free() {
        let i = MonomialIdeal::new(7, [m(7, &[1, 3, 5])]).unwrap();
        let b = betti_strongly_stable(&i, 2).unwrap();
        assert_eq!(b.totals(), vec![1]);
    }

    #[test]
    fn final_example_and_small_veronese() {
        let s = LexsegmentSpec::final_segment(7, 3, 2, &[1, 4, 6]).unwrap();
        let tt = build_segment(&s);
        let b = betti_final(&tt, 2).unwrap();
        assert_eq!(b.pd().map(|p| p + 1), Some(3));
        assert_eq!(b, hochster_betti(&tt).unwrap());
        let v = build_segment(&LexsegmentSpec::veronese(5, 3, 2).unwrap());
        assert_eq!(betti_final(&v, 2).unwrap().totals(), vec![1]);
    }

    #[test]
    fn guard_rejects_unstable_input() {
        let i = MonomialIdeal::new(5, [m(5, &[2, 4])]).unwrap();
        assert!(matches!(betti_strongly_stable(&i, 2), Err(Error::NotStronglyStable { reversed: false, .. })));
        let i = MonomialIdeal::new(5, [m(5, &[1, 3])]).unwrap();
        assert!(matches!(betti_final(&i, 2), Err(Error::NotStronglyStable { reversed: true, .. })));
    }

    #[test]
    fn completely_linear_totals() {
        let s = LexsegmentSpec::from_indices(8, 3, 2, &[1, 6, 8], &[3, 6, 8]).unwrap();
        let totals = betti_completely_linear(&s).unwrap();
        assert_eq!(totals.len(), 3);
        assert_eq!(totals, hochster_betti(&build_segment(&s)).unwrap().totals());

        let v = LexsegmentSpec::veronese(7, 3, 2).unwrap();
        let ss = betti_strongly_stable(&build_segment(&v), 2).unwrap();
        assert_eq!(betti_completely_linear(&v).unwrap(), ss.totals());
    }

    #[test]
    fn initial_and_final_invariants() {
        let r = invariants_initial(7, 3, 2, &m(7, &[2, 5, 7])).unwrap();
        assert_eq!((r.dim, r.depth, r.pd_quotient, r.is_cm), (5, 4, 3, false));
        let r = invariants_initial(7, 3, 2, &m(7, &[3, 5, 7])).unwrap();
        assert_eq!((r.dim, r.depth, r.is_cm), (4, 4, true));
        let r = invariants_initial(9, 2, 3, &m(9, &[3, 6])).unwrap();
        assert_eq!((r.dim, r.depth), (6, 3));
        let r = invariants_final(7, 3, 2, &m(7, &[1, 4, 6])).unwrap();
        assert_eq!((r.dim, r.depth, r.is_cm), (5, 4, false));
        let r = invariants_final(7, 3, 2, &m(7, &[1, 3, 5])).unwrap();
        assert!(r.is_cm);
        let i = build_segment(&LexsegmentSpec::final_segment(8, 3, 2, &[1, 5, 7]).unwrap());
        let r = invariants_final(8, 3, 2, &m(8, &[1, 5, 7])).unwrap();
        assert_eq!(r.dim, krull_dim_oracle(&i).unwrap());
        assert_eq!(r.depth, depth_oracle(&i).unwrap());
    }

    #[test]
    fn formulas_match_oracle_sweep() {
        for n in 2..=8 {
            for d in 1..=3 {
                for t in 1..=2 {
                    for s in all_specs(n, d, t) {
                        let i = build_segment(&s);
                        let oracle = hochster_betti(&i).unwrap();
                        if let Some(b) = betti_for_spec(&s, &i).unwrap() {
                            assert_eq!(b, oracle, "{s}");
                        }
                        let r = invariants(&s).unwrap();
                        assert_eq!(r.dim, krull_dim_oracle(&i).unwrap(), "{s}");
                        assert_eq!(r.depth, depth_oracle(&i).unwrap(), "{s}");
                        assert_eq!(r.depth + r.pd_quotient, n);
                    }
                }
            }
        }
    }

    #[test]
    fn alternating_sums_match_lcm_inclusion_exclusion() {
        for n in 3..=7 {
            for s in all_specs(n, 2, 1).into_iter().chain(all_specs(n, 3, 2)) {
                let i = build_segment(&s);
                let g = i.generators();
                if g.len() > 14 {
                    continue;
                }
                let mut expected = vec![0i64; n + 1];
                for a in 1u32..1 << g.len() {
                    let l = (0..g.len())
                        .filter(|k| a >> k & 1 == 1)
                        .fold(SquarefreeMonomial::one(n), |acc, k| acc.lcm(&g[k]));
                    expected[l.degree()] += if a.count_ones() % 2 == 1 { 1 } else { -1 };
                }
                let b = hochster_betti(&i).unwrap();
                let mut got = vec![0i64; n + 1];
                for (k, j, beta) in b.iter() {
                    got[j] += if k % 2 == 0 { beta as i64 } else { -(beta as i64) };
                }
                assert_eq!(got, expected, "{s}");
            }
        }
    }

    #[test]
    fn splitting_by_second_variable() {
        let s = LexsegmentSpec::from_indices(7, 3, 2, &[1, 4, 6], &[2, 5, 7]).unwrap();
        let i = build_segment(&s);
        let (p, q) = split_by_variable(&i, 2).unwrap();
        let r = betti_splitting_check(&i, &p, &q).unwrap();
        assert!(r.holds && r.pd_identity);
        let r = betti_splitting_check(&i, &i, &MonomialIdeal::zero(7)).unwrap();
        assert!(r.holds);
        let bad = MonomialIdeal::new(7, [i.generators()[0]]).unwrap();
        assert!(matches!(betti_splitting_check(&i, &bad, &bad), Err(Error::InvalidPartition(_))));
    }
}
