//! Standard primary decompositions of t-spread lexsegment ideals.
//!
//! Every squarefree monomial ideal is an intersection of monomial primes
//! `p_A = (x_i : i ∈ A)`. The closed forms below list the minimal ones for
//! Veronese, initial, final and completely lexsegment ideals; anything else
//! goes through the Stanley-Reisner oracle.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{precondition, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lexseg::{build_segment, is_completely, normalize, LexsegmentSpec, NormalizationTrace, Outcome, ReductionStep};
use crate::monomial::{cosupp_t, enumerate_m, max_m, slex, supp_t, IndexSet, SquarefreeMonomial};
use crate::oracle::minimal_primes_bruteforce;

/// Which construction produced a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `p_{F_p}` for the given `p`.
    Fp(usize),
    /// `p_{[n] ∖ F}`, `F ∈ 𝓕`.
    F,
    /// `p_{[n] ∖ G}`, `G ∈ 𝓖`.
    G,
    /// `p_{[n] ∖ H}`, `H ∈ 𝓗`.
    H,
    /// `p_{[n] ∖ F}`, `F ∈ 𝓕̃`.
    FTilde,
    /// One prime per `w ∈ M_{n+1-t,d-1,t}`.
    Veronese,
    /// A variable of a principal ideal.
    Principal,
    /// The interval prime of a degree-one segment.
    Interval,
    /// `p_{[n] ∖ cosupp_t(w)}` with `min(w) = t`, from the repaired final form.
    HBoundary,
    /// A variable dividing every generator, split off during normalization.
    Factor,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Fp(p) => write!(f, "F_{p}"),
            Provenance::F => f.write_str("F"),
            Provenance::G => f.write_str("G"),
            Provenance::H => f.write_str("H"),
            Provenance::FTilde => f.write_str("F~"),
            Provenance::HBoundary => f.write_str("H'"),
            Provenance::Veronese => f.write_str("veronese-D"),
            Provenance::Principal => f.write_str("principal"),
            Provenance::Interval => f.write_str("interval"),
            Provenance::Factor => f.write_str("factor"),
            Provenance::Oracle => f.write_str("oracle"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An irredundant list of monomial primes, canonically ordered by height
/// and then by support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDecomposition {
    #[serde(skip)]
    ambient: usize,
    primes: Vec<IndexSet>,
    provenance: Vec<Provenance>,
}

fn prime_order(a: &IndexSet, b: &IndexSet) -> Ordering {
    (a.len(), a.to_vec()).cmp(&(b.len(), b.to_vec()))
}

impl PrimeDecomposition {
    /// Sorts canonically and rejects duplicate or nested supports.
    pub fn new(ambient: usize, mut tagged: Vec<(IndexSet, Provenance)>) -> Result<Self> {
        tagged.sort_by(|a, b| prime_order(&a.0, &b.0));
        for (k, (a, ta)) in tagged.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::RedundantPrime(format!("empty support from {ta}")));
            }
            for (b, tb) in &tagged[k + 1..] {
                if a.is_subset(b) {
                    return Err(Error::RedundantPrime(format!("{a} ({ta}) ⊆ {b} ({tb})")));
                }
            }
        }
        let (primes, provenance) = tagged.into_iter().unzip();
        Ok(Self {
            ambient,
            primes,
            provenance,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn primes(&self) -> &[IndexSet] {
        &self.primes
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, Provenance)> {
        self.primes.iter().zip(self.provenance.iter().copied())
    }

    /// `height(I)`: the smallest prime height.
    pub fn height(&self) -> usize {
        self.primes.iter().map(IndexSet::len).min().unwrap_or(0)
    }

    /// All minimal primes share one height.
    pub fn is_unmixed(&self) -> bool {
        self.primes.iter().all(|p| p.len() == self.height())
    }

    /// Supports as sorted index lists.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.primes.iter().map(IndexSet::to_vec).collect()
    }

    /// The monomial `x_A` lies in every prime.
    pub fn contains_mask(&self, mask: u32) -> bool {
        self.primes.iter().all(|p| p.mask() & mask != 0)
    }

    /// Exhaustive check over all `2^n` squarefree monomials that the
    /// intersection of the primes is `ideal`.
    pub fn intersects_to(&self, ideal: &MonomialIdeal) -> bool {
        let n = ideal.ambient();
        assert!(n <= 24, "exhaustive membership check is limited to 24 variables");
        (0u32..1u32 << n).all(|m| ideal.contains_mask(m) == self.contains_mask(m))
    }

    fn with_tag(ambient: usize, primes: Vec<IndexSet>, tag: Provenance) -> Result<Self> {
        Self::new(ambient, primes.into_iter().map(|p| (p, tag)).collect())
    }
}

impl fmt::Display for PrimeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.primes.iter().enumerate() {
            if k > 0 {
                f.write_str(" ∩ ")?;
            }
            f.write_str("(")?;
            for (r, i) in p.iter().enumerate() {
                if r > 0 {
                    f.write_str(",")?;
                }
                write!(f, "x{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn complement(set: IndexSet) -> IndexSet {
    set.complement()
}

fn check_degree(op: &'static str, d: usize) -> Result<()> {
    if d < 2 {
        Err(precondition(op, format!("degree must be at least 2, got {d}")))
    } else {
        Ok(())
    }
}

fn check_monomial(op: &'static str, w: &SquarefreeMonomial, n: usize, d: usize, t: usize) -> Result<()> {
    if w.ambient() != n || w.degree() != d || !crate::monomial::is_t_spread(w, t) {
        return Err(precondition(op, format!("{w} is not in M_(n={n},d={d},t={t})")));
    }
    Ok(())
}

/// `I_{n,d,t} = ∩_{w ∈ M_{n+1-t,d-1,t}} p_{[n] ∖ supp_t(w)}`.
pub fn decompose_veronese(n: usize, d: usize, t: usize) -> Result<PrimeDecomposition> {
    const OP: &str = "decompose_veronese";
    if max_m(n, d, t).is_none() || t == 0 || d == 0 {
        return Err(precondition(OP, format!("M_(n={n},d={d},t={t}) is empty")));
    }
    let primes = enumerate_m(n + 1 - t, d - 1, t)
        .into_iter()
        .map(|w| Ok(complement(supp_t(&w.with_ambient(n)?, t)?)))
        .collect::<Result<Vec<_>>>()?;
    PrimeDecomposition::with_tag(n, primes, Provenance::Veronese)
}

/// `F_p = [j_p] ∖ supp_t(x_{j_1} ... x_{j_{p-1}})`, `p = 1..d`.
pub fn initial_f_p(v: &SquarefreeMonomial, t: usize) -> Result<Vec<IndexSet>> {
    let n = v.ambient();
    let j = v.support();
    (0..j.len())
        .map(|p| {
            let prefix = SquarefreeMonomial::new(n, &j[..p])?;
            Ok(IndexSet::interval(n, 1, j[p])?.difference(&supp_t(&prefix, t)?))
        })
        .collect()
}

/// `𝓕 = {supp_t(w) : w ∈ M_{n+1-t,d-1,t}, w >_slex v / x_max(v)}`, with the
/// generating `w` alongside each set.
pub fn initial_family_f(v: &SquarefreeMonomial, t: usize) -> Result<Vec<(SquarefreeMonomial, IndexSet)>> {
    let n = v.ambient();
    let d = v.degree();
    let cut = v.without(v.max()).expect("v has a maximum");
    enumerate_m(n + 1 - t, d - 1, t)
        .into_iter()
        .map(|w| w.with_ambient(n))
        .take_while(|w| w.as_ref().map_or(true, |w| slex(w, &cut) == Ordering::Greater))
        .map(|w| {
            let w = w?;
            Ok((w, supp_t(&w, t)?))
        })
        .collect()
}

/// Closed form for `J = (L_t^i(v))` with `d >= 2` and `min(v) >= 2`.
pub fn decompose_initial(n: usize, d: usize, t: usize, v: &SquarefreeMonomial) -> Result<PrimeDecomposition> {
    const OP: &str = "decompose_initial";
    check_degree(OP, d)?;
    check_monomial(OP, v, n, d, t)?;
    if v.min() < 2 {
        return Err(precondition(OP, format!("min(v) = {} must be at least 2; normalize first", v.min())));
    }
    let mut tagged: Vec<(IndexSet, Provenance)> = initial_f_p(v, t)?
        .into_iter()
        .enumerate()
        .map(|(p, f)| (f, Provenance::Fp(p + 1)))
        .collect();
    for (_, f) in initial_family_f(v, t)? {
        tagged.push((complement(f), Provenance::F));
    }
    PrimeDecomposition::new(n, tagged)
}

/// The `w` with `x_1 w ∈ M_{n,d,t}`, split at `u / x_1`: those slex-above
/// give `𝓖 = {cosupp_t(w) ∪ {1}}`, the rest `𝓗 = {cosupp_t(w)}`.
pub fn final_families(u: &SquarefreeMonomial, t: usize) -> Result<(Vec<IndexSet>, Vec<IndexSet>)> {
    let n = u.ambient();
    let d = u.degree();
    let tail = u.without(1).ok_or_else(|| precondition("final_families", "x_1 must divide u"))?;
    let mut g = Vec::new();
    let mut h = Vec::new();
    for w in enumerate_m(n, d - 1, t) {
        if d > 1 && w.min() < 1 + t {
            continue;
        }
        let co = cosupp_t(&w, t)?;
        if slex(&w, &tail) == Ordering::Greater {
            let mut with_one = co;
            with_one.insert(1)?;
            g.push(with_one);
        } else {
            h.push(co);
        }
    }
    Ok((g, h))
}

/// Closed form for `T = (L_t^f(u))` with `d >= 2` and `min(u) = 1`. The
/// Veronese case is answered by [`decompose_veronese`].
pub fn decompose_final(n: usize, d: usize, t: usize, u: &SquarefreeMonomial) -> Result<PrimeDecomposition> {
    const OP: &str = "decompose_final";
    check_degree(OP, d)?;
    check_monomial(OP, u, n, d, t)?;
    if u.min() != 1 {
        return Err(precondition(OP, format!("min(u) = {} must be 1; normalize first", u.min())));
    }
    if Some(*u) == max_m(n, d, t) {
        return decompose_veronese(n, d, t);
    }
    let (g, h) = final_families(u, t)?;
    let tagged = g
        .into_iter()
        .map(|s| (complement(s), Provenance::G))
        .chain(h.into_iter().map(|s| (complement(s), Provenance::H)))
        .collect();
    PrimeDecomposition::new(n, tagged)
}

/// The intermediate families of the completely-lexsegment decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletelyFamilies {
    /// `F_1 .. F_d`.
    pub f_p: Vec<IndexSet>,
    /// `𝓘 ⊆ [d]`: the `p` whose `p_{F_p}` survive.
    pub i_set: Vec<usize>,
    /// `𝓕`, built from `v`.
    pub family_f: Vec<IndexSet>,
    /// `𝓖` and `𝓗`, built from `u`.
    pub family_g: Vec<IndexSet>,
    pub family_h: Vec<IndexSet>,
    /// `𝓕̃ ⊆ 𝓕`.
    pub f_tilde: Vec<IndexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletelyDecomposition {
    pub decomposition: PrimeDecomposition,
    pub families: CompletelyFamilies,
}

/// Closed form for a completely lexsegment ideal with `min(u) = 1`,
/// `min(v) >= 2`, `d >= 2`. Initial, final and Veronese inputs are routed to
/// their own closed forms; the families are still reported.
pub fn decompose_completely(spec: &LexsegmentSpec) -> Result<CompletelyDecomposition> {
    const OP: &str = "decompose_completely";
    let (n, d, t, u, v) = (spec.n(), spec.d(), spec.t(), spec.u(), spec.v());
    check_degree(OP, d)?;
    if u.min() != 1 || v.min() < 2 {
        return Err(precondition(
            OP,
            format!("needs min(u) = 1 and min(v) >= 2, got {} and {}; normalize first", u.min(), v.min()),
        ));
    }
    if !is_completely(spec) {
        return Err(precondition(OP, "not a completely lexsegment ideal; use the oracle decomposition"));
    }
    let f_p = initial_f_p(&v, t)?;
    let family_f_w = initial_family_f(&v, t)?;
    let family_f: Vec<IndexSet> = family_f_w.iter().map(|(_, f)| *f).collect();
    let (family_g, family_h) = final_families(&u, t)?;
    let tail = u.without(1).expect("min(u) = 1");

    let i_set: Vec<usize> = (1..=d)
        .filter(|&p| {
            let big = n - f_p[p - 1].len() == (d - 1) * t;
            let jp = v.support()[p - 1];
            let above = slex(&v.without(jp).expect("j_p in v"), &tail) == Ordering::Greater;
            !(big && above)
        })
        .collect();

    let f_tilde: Vec<IndexSet> = family_f_w
        .iter()
        .filter(|(w, f)| {
            if !f.contains(1) {
                let shifted = w.shift_up(t - 1).and_then(|m| m.with_ambient(n));
                match shifted {
                    Ok(s) => slex(&s, &tail) != Ordering::Greater,
                    Err(_) => false,
                }
            } else {
                (1..=n)
                    .filter(|&j| !f.contains(j))
                    .all(|j| {
                        let mut grown = *f;
                        grown.insert(j).expect("in range");
                        !family_g.contains(&grown)
                    })
            }
        })
        .map(|(_, f)| *f)
        .collect();

    let families = CompletelyFamilies {
        f_p: f_p.clone(),
        i_set: i_set.clone(),
        family_f,
        family_g: family_g.clone(),
        family_h,
        f_tilde: f_tilde.clone(),
    };

    let decomposition = if spec.is_veronese() {
        decompose_veronese(n, d, t)?
    } else if spec.is_initial() {
        decompose_initial(n, d, t, &v)?
    } else if spec.is_final() {
        decompose_final(n, d, t, &u)?
    } else {
        let mut tagged: Vec<(IndexSet, Provenance)> =
            family_g.into_iter().map(|g| (complement(g), Provenance::G)).collect();
        tagged.extend(i_set.iter().map(|&p| (f_p[p - 1], Provenance::Fp(p))));
        tagged.extend(f_tilde.into_iter().map(|f| (complement(f), Provenance::FTilde)));
        PrimeDecomposition::new(n, tagged)?
    };
    Ok(CompletelyDecomposition {
        decomposition,
        families,
    })
}

/// Faces `cosupp_t(w)`, `w ∈ M_{n,d-1,t}` with `min(w) = t`, of the final complex.
///
/// They contain 1 yet `x_1 w` is not t-spread, so neither `𝓖` nor `𝓗`
/// accounts for them; the oracle shows some are facets.
pub fn final_boundary_candidates(u: &SquarefreeMonomial, t: usize) -> Result<Vec<IndexSet>> {
    let n = u.ambient();
    enumerate_m(n, u.degree() - 1, t)
        .into_iter()
        .filter(|w| w.min() == t)
        .map(|w| cosupp_t(&w, t))
        .collect()
}

/// Keeps the inclusion-maximal sets; for equal sets the first tag wins.
fn maximal_tagged(mut sets: Vec<(IndexSet, Provenance)>) -> Vec<(IndexSet, Provenance)> {
    let mut out: Vec<(IndexSet, Provenance)> = Vec::with_capacity(sets.len());
    sets.sort_by_key(|(s, _)| std::cmp::Reverse(s.len()));
    for (s, tag) in sets {
        if !out.iter().any(|(f, _)| s.is_subset(f)) {
            out.push((s, tag));
        }
    }
    out
}

fn final_facets_repaired(u: &SquarefreeMonomial, t: usize) -> Result<Vec<(IndexSet, Provenance)>> {
    let (g, h) = final_families(u, t)?;
    let mut all: Vec<(IndexSet, Provenance)> = g.into_iter().map(|s| (s, Provenance::G)).collect();
    all.extend(h.into_iter().map(|s| (s, Provenance::H)));
    all.extend(final_boundary_candidates(u, t)?.into_iter().map(|s| (s, Provenance::HBoundary)));
    Ok(maximal_tagged(all))
}

fn initial_facets(v: &SquarefreeMonomial, t: usize) -> Result<Vec<(IndexSet, Provenance)>> {
    let mut all: Vec<(IndexSet, Provenance)> = initial_f_p(v, t)?
        .into_iter()
        .enumerate()
        .map(|(p, f)| (complement(f), Provenance::Fp(p + 1)))
        .collect();
    all.extend(initial_family_f(v, t)?.into_iter().map(|(_, f)| (f, Provenance::F)));
    Ok(all)
}

fn from_facets(n: usize, facets: Vec<(IndexSet, Provenance)>) -> Result<PrimeDecomposition> {
    PrimeDecomposition::new(n, facets.into_iter().map(|(f, tag)| (complement(f), tag)).collect())
}

/// Final decomposition with `𝓖 ∪ 𝓗` completed by [`final_boundary_candidates`]
/// and reduced to its maximal members.
pub fn decompose_final_repaired(n: usize, d: usize, t: usize, u: &SquarefreeMonomial) -> Result<PrimeDecomposition> {
    const OP: &str = "decompose_final_repaired";
    check_degree(OP, d)?;
    check_monomial(OP, u, n, d, t)?;
    if u.min() != 1 {
        return Err(precondition(OP, format!("min(u) = {} must be 1; normalize first", u.min())));
    }
    if Some(*u) == max_m(n, d, t) {
        return decompose_veronese(n, d, t);
    }
    from_facets(n, final_facets_repaired(u, t)?)
}

/// Completely decomposition from `Δ(J ∩ T) = Δ(J) ∪ Δ(T)`: the maximal
/// members of the initial facets and the repaired final facets.
pub fn decompose_completely_repaired(spec: &LexsegmentSpec) -> Result<PrimeDecomposition> {
    const OP: &str = "decompose_completely_repaired";
    let (n, d, t, u, v) = (spec.n(), spec.d(), spec.t(), spec.u(), spec.v());
    check_degree(OP, d)?;
    if u.min() != 1 || v.min() < 2 {
        return Err(precondition(OP, "needs min(u) = 1 and min(v) >= 2; normalize first"));
    }
    if !is_completely(spec) {
        return Err(precondition(OP, "not a completely lexsegment ideal; use the oracle decomposition"));
    }
    if spec.is_veronese() {
        return decompose_veronese(n, d, t);
    }
    let mut all = initial_facets(&v, t)?;
    if !spec.is_initial() {
        all.extend(final_facets_repaired(&u, t)?);
    }
    from_facets(n, maximal_tagged(all))
}

/// Which family of closed forms [`decompose_with`] applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedForm {
    /// The published statements, unchanged.
    #[default]
    Literal,
    /// Final and completely cases completed by the boundary candidates.
    Repaired,
}

/// Which route produced a decomposition of the normalized residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Normalization alone finished the job.
    Reduction,
    Veronese,
    Initial,
    Final,
    Completely,
    /// Not a completely lexsegment: no closed form, brute force instead.
    Oracle,
}

pub const ORACLE_FALLBACK_NOTE: &str = "closed form unavailable (open question): decomposition computed by the oracle";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub spec: LexsegmentSpec,
    pub method: Method,
    pub form: ClosedForm,
    pub decomposition: PrimeDecomposition,
    pub trace: NormalizationTrace,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<CompletelyFamilies>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// [`decompose_with`] using the published closed forms.
pub fn decompose(spec: &LexsegmentSpec) -> Result<DecompositionReport> {
    decompose_with(spec, ClosedForm::Literal)
}

/// Normalizes, then decomposes the residual by the matching closed form (or
/// the oracle when none applies) and lifts the primes back.
pub fn decompose_with(spec: &LexsegmentSpec, form: ClosedForm) -> Result<DecompositionReport> {
    let trace = normalize(spec);
    let n = spec.n();
    let mut tagged: Vec<(IndexSet, Provenance)> = Vec::new();
    for step in &trace.steps {
        match step {
            ReductionStep::StripLeadingX1Factor { variable } => {
                tagged.push((IndexSet::from_indices(n, [*variable])?, Provenance::Factor));
            }
            ReductionStep::PrincipalIdeal { generator } => {
                for &i in generator {
                    tagged.push((IndexSet::from_indices(n, [i])?, Provenance::Principal));
                }
            }
            ReductionStep::DegreeOneInterval { low, high } => {
                tagged.push((IndexSet::interval(n, *low, *high)?, Provenance::Interval));
            }
            ReductionStep::RestrictAmbient { .. } => {}
        }
    }
    let mut families = None;
    let mut note = None;
    let method = match &trace.outcome {
        Outcome::Terminal(_) => Method::Reduction,
        Outcome::Residual(r) => {
            let (method, part) = if r.is_veronese() {
                (Method::Veronese, decompose_veronese(r.n(), r.d(), r.t())?)
            } else if r.is_initial() {
                (Method::Initial, decompose_initial(r.n(), r.d(), r.t(), &r.v())?)
            } else if r.is_final() {
                let part = match form {
                    ClosedForm::Literal => decompose_final(r.n(), r.d(), r.t(), &r.u())?,
                    ClosedForm::Repaired => decompose_final_repaired(r.n(), r.d(), r.t(), &r.u())?,
                };
                (Method::Final, part)
            } else if is_completely(r) {
                let c = decompose_completely(r)?;
                families = Some(c.families);
                let part = match form {
                    ClosedForm::Literal => c.decomposition,
                    ClosedForm::Repaired => decompose_completely_repaired(r)?,
                };
                (Method::Completely, part)
            } else {
                note = Some(ORACLE_FALLBACK_NOTE.to_string());
                let primes = minimal_primes_bruteforce(&build_segment(r))?;
                (Method::Oracle, PrimeDecomposition::with_tag(r.n(), primes, Provenance::Oracle)?)
            };
            for (p, tag) in part.iter() {
                tagged.push((trace.lift(p), tag));
            }
            method
        }
    };
    let decomposition = PrimeDecomposition::new(n, tagged)?;
    Ok(DecompositionReport {
        spec: *spec,
        method,
        form,
        decomposition,
        trace,
        families,
        note,
    })
}

/// The oracle's minimal primes as a decomposition.
pub fn decompose_by_oracle(ideal: &MonomialIdeal) -> Result<PrimeDecomposition> {
    PrimeDecomposition::with_tag(ideal.ambient(), minimal_primes_bruteforce(ideal)?, Provenance::Oracle)
}
