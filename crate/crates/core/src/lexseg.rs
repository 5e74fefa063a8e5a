//! t-spread lexsegments, the ideals they generate, and the reductions that
//! bring an arbitrary segment to the shape the closed forms expect.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{precondition, Error, Result};
use crate::ideal::{intersect_ideals, MonomialIdeal};
use crate::monomial::{
    enumerate_m, is_t_spread, lex_compare, max_m, min_m, slex, IndexSet, SquarefreeMonomial,
    TSpreadMonomials,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Initial,
    Final,
    Arbitrary,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Initial => "initial",
            Kind::Final => "final",
            Kind::Arbitrary => "arbitrary",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "initial" => Ok(Kind::Initial),
            "final" => Ok(Kind::Final),
            "arbitrary" => Ok(Kind::Arbitrary),
            other => Err(Error::InvalidSpec(format!("unknown kind `{other}`"))),
        }
    }
}

/// `L_t(u, v) ⊆ M_{n,d,t}` before materialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LexsegmentSpec {
    n: usize,
    d: usize,
    t: usize,
    u: SquarefreeMonomial,
    v: SquarefreeMonomial,
    kind: Kind,
}

/// Wire form: `{n, d, t, kind, u: [..], v: [..]}`.
///
/// `u` may be omitted for initial specs and `v` for final ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<usize>>,
}

impl LexsegmentSpec {
    /// Validates the endpoints; the kind is inferred (initial wins for the Veronese segment).
    pub fn new(
        n: usize,
        d: usize,
        t: usize,
        u: SquarefreeMonomial,
        v: SquarefreeMonomial,
    ) -> Result<Self> {
        let (top, bottom) = Self::validate(n, d, t, &u, &v)?;
        let kind = if u == top {
            Kind::Initial
        } else if v == bottom {
            Kind::Final
        } else {
            Kind::Arbitrary
        };
        Ok(Self { n, d, t, u, v, kind })
    }

    /// Like [`new`](Self::new) but with a declared kind that must match the endpoints.
    pub fn with_kind(
        n: usize,
        d: usize,
        t: usize,
        u: SquarefreeMonomial,
        v: SquarefreeMonomial,
        kind: Kind,
    ) -> Result<Self> {
        let (top, bottom) = Self::validate(n, d, t, &u, &v)?;
        match kind {
            Kind::Initial if u != top => {
                return Err(Error::InvalidSpec(format!("initial segment needs u = {top}, got {u}")))
            }
            Kind::Final if v != bottom => {
                return Err(Error::InvalidSpec(format!("final segment needs v = {bottom}, got {v}")))
            }
            _ => {}
        }
        Ok(Self { n, d, t, u, v, kind })
    }

    pub fn from_indices(n: usize, d: usize, t: usize, u: &[usize], v: &[usize]) -> Result<Self> {
        Self::new(
            n,
            d,
            t,
            SquarefreeMonomial::new(n, u)?,
            SquarefreeMonomial::new(n, v)?,
        )
    }

    /// `L_t^i(v)`.
    pub fn initial(n: usize, d: usize, t: usize, v: &[usize]) -> Result<Self> {
        let u = max_m(n, d, t).ok_or_else(|| infeasible(n, d, t))?;
        Self::with_kind(n, d, t, u, SquarefreeMonomial::new(n, v)?, Kind::Initial)
    }

    /// `L_t^f(u)`.
    pub fn final_segment(n: usize, d: usize, t: usize, u: &[usize]) -> Result<Self> {
        let v = min_m(n, d, t).ok_or_else(|| infeasible(n, d, t))?;
        Self::with_kind(n, d, t, SquarefreeMonomial::new(n, u)?, v, Kind::Final)
    }

    /// The segment generating the whole `I_{n,d,t}`.
    pub fn veronese(n: usize, d: usize, t: usize) -> Result<Self> {
        let u = max_m(n, d, t).ok_or_else(|| infeasible(n, d, t))?;
        let v = min_m(n, d, t).ok_or_else(|| infeasible(n, d, t))?;
        Self::new(n, d, t, u, v)
    }

    fn validate(
        n: usize,
        d: usize,
        t: usize,
        u: &SquarefreeMonomial,
        v: &SquarefreeMonomial,
    ) -> Result<(SquarefreeMonomial, SquarefreeMonomial)> {
        if t == 0 {
            return Err(Error::InvalidSpec("t must be at least 1".into()));
        }
        if d == 0 {
            return Err(Error::InvalidSpec("d must be at least 1".into()));
        }
        let top = max_m(n, d, t).ok_or_else(|| infeasible(n, d, t))?;
        let bottom = min_m(n, d, t).expect("feasible");
        for (name, w) in [("u", u), ("v", v)] {
            if w.ambient() != n {
                return Err(Error::InvalidSpec(format!("{name} = {w} lives in ambient {}, not {n}", w.ambient())));
            }
            if w.degree() != d {
                return Err(Error::InvalidSpec(format!("{name} = {w} has degree {}, expected {d}", w.degree())));
            }
            if !is_t_spread(w, t) {
                return Err(Error::InvalidSpec(format!("{name} = {w} is not {t}-spread")));
            }
        }
        if slex(u, v) == Ordering::Less {
            return Err(Error::InvalidSpec(format!("u = {u} is slex-smaller than v = {v}")));
        }
        Ok((top, bottom))
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn u(&self) -> SquarefreeMonomial {
        self.u
    }
    pub fn v(&self) -> SquarefreeMonomial {
        self.v
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_initial(&self) -> bool {
        Some(self.u) == max_m(self.n, self.d, self.t)
    }

    pub fn is_final(&self) -> bool {
        Some(self.v) == min_m(self.n, self.d, self.t)
    }

    /// The segment is all of `M_{n,d,t}`.
    pub fn is_veronese(&self) -> bool {
        self.is_initial() && self.is_final()
    }

    /// The monomials of the segment, slex-descending.
    pub fn segment(&self) -> Vec<SquarefreeMonomial> {
        TSpreadMonomials::new(self.n, self.d, self.t)
            .skip_while(|w| slex(w, &self.u) == Ordering::Greater)
            .take_while(|w| slex(w, &self.v) != Ordering::Less)
            .collect()
    }

    /// `L_t^i(v)` as a spec.
    pub fn initial_extension(&self) -> Self {
        let u = max_m(self.n, self.d, self.t).expect("feasible");
        Self {
            u,
            kind: Kind::Initial,
            ..*self
        }
    }

    /// `L_t^f(u)` as a spec.
    pub fn final_extension(&self) -> Self {
        let v = min_m(self.n, self.d, self.t).expect("feasible");
        let kind = if self.is_initial() { Kind::Initial } else { Kind::Final };
        Self { v, kind, ..*self }
    }

    pub fn to_json(&self) -> SpecJson {
        SpecJson {
            n: self.n,
            d: self.d,
            t: self.t,
            kind: self.kind,
            u: Some(self.u.support()),
            v: Some(self.v.support()),
        }
    }

    pub fn from_json(j: &SpecJson) -> Result<Self> {
        let u = match (&j.u, j.kind) {
            (Some(u), _) => SquarefreeMonomial::new(j.n, u)?,
            (None, Kind::Initial) => max_m(j.n, j.d, j.t).ok_or_else(|| infeasible(j.n, j.d, j.t))?,
            (None, _) => return Err(Error::InvalidSpec("missing u".into())),
        };
        let v = match (&j.v, j.kind) {
            (Some(v), _) => SquarefreeMonomial::new(j.n, v)?,
            (None, Kind::Final) => min_m(j.n, j.d, j.t).ok_or_else(|| infeasible(j.n, j.d, j.t))?,
            (None, _) => return Err(Error::InvalidSpec("missing v".into())),
        };
        Self::with_kind(j.n, j.d, j.t, u, v, j.kind)
    }
}

fn infeasible(n: usize, d: usize, t: usize) -> Error {
    Error::InvalidSpec(format!("M_(n={n},d={d},t={t}) is empty: need n >= 1 + (d-1)t"))
}

impl fmt::Display for LexsegmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} L(n={}, d={}, t={}; u={}, v={})",
            self.kind, self.n, self.d, self.t, self.u, self.v
        )
    }
}

impl fmt::Debug for LexsegmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LexsegmentSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LexsegmentSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SpecJson::deserialize(d)?;
        LexsegmentSpec::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// `(L_t(u, v))`.
pub fn build_segment(spec: &LexsegmentSpec) -> MonomialIdeal {
    MonomialIdeal::new(spec.n, spec.segment()).expect("segment monomials share the ambient")
}

/// Completely-lexsegment test.
///
/// Uses the exchange criterion [`exchange_criterion`] when `min(u) = 1 < min(v)`,
/// the only regime where it agrees with the definition; elsewhere falls back
/// to comparing with `J ∩ T` directly.
pub fn is_completely(spec: &LexsegmentSpec) -> bool {
    if spec.u.min() == 1 && spec.v.min() >= 2 {
        exchange_criterion(spec)
    } else {
        is_completely_by_intersection(spec)
    }
}

/// The exchange criterion: every `w <_slex v` admits `s ∈ supp(w)`, `s > min(u)`,
/// with `x_{min(u)} (w / x_s) <=_lex u`.
///
/// The product may repeat a variable, so the comparison is the full lex order.
/// Characterizes completely lexsegments only when `min(u) = 1 < min(v)`.
pub fn exchange_criterion(spec: &LexsegmentSpec) -> bool {
    let i1 = spec.u.min();
    let u = spec.u.support();
    TSpreadMonomials::new(spec.n, spec.d, spec.t)
        .filter(|w| slex(w, &spec.v) == Ordering::Less)
        .all(|w| {
            let support = w.support();
            support.iter().filter(|&&s| s > i1).any(|&s| {
                let mut product: Vec<usize> = support.iter().copied().filter(|&x| x != s).collect();
                product.push(i1);
                lex_compare(&product, &u) != Ordering::Greater
            })
        })
}

/// Completely-lexsegment test by definition: `(L_t(u,v)) = J ∩ T`.
pub fn is_completely_by_intersection(spec: &LexsegmentSpec) -> bool {
    let j = build_segment(&spec.initial_extension());
    let t = build_segment(&spec.final_extension());
    let meet = intersect_ideals(&j, &t).expect("same ambient");
    meet == build_segment(spec)
}

/// Linear-resolution criterion for a completely lexsegment ideal with
/// `min(v) > min(u) = 1`.
///
/// Either `i_2 = 1 + t`, or `i_2 > 1 + t` and the slex-successor `w` of `v`
/// in `M_{n,d,t}` satisfies `x_1 (w / x_max(w)) <=_lex x_1 x_{i_2 - t} ... x_{i_d - t}`.
/// When `v` is the minimum there is no successor and the ideal is final,
/// hence linear.
pub fn has_linear_resolution_completely(spec: &LexsegmentSpec) -> Result<bool> {
    const OP: &str = "has_linear_resolution_completely";
    if spec.u.min() != 1 {
        return Err(precondition(OP, format!("criterion inapplicable: min(u) = {} != 1", spec.u.min())));
    }
    if spec.v.min() <= 1 {
        return Err(precondition(OP, "criterion inapplicable: min(v) must exceed min(u) = 1"));
    }
    if spec.d < 2 {
        // Degree-one ideals are generated by variables.
        return Ok(true);
    }
    if !is_completely(spec) {
        return Err(precondition(OP, "ideal is not completely lexsegment"));
    }
    let u = spec.u.support();
    let i2 = u[1];
    let t = spec.t;
    if i2 == 1 + t {
        return Ok(true);
    }
    let successor = TSpreadMonomials::new(spec.n, spec.d, spec.t).find(|w| slex(w, &spec.v) == Ordering::Less);
    let Some(w) = successor else {
        return Ok(true);
    };
    let mut lhs: Vec<usize> = w.support();
    lhs.pop();
    lhs.insert(0, 1);
    let rhs: Vec<usize> = std::iter::once(1).chain(u[1..].iter().map(|&i| i - t)).collect();
    Ok(lex_compare(&lhs, &rhs) != Ordering::Greater)
}

/// One reduction applied by [`normalize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum ReductionStep {
    /// `u = v`: the ideal is `(u) = ∩ (x_i)`.
    PrincipalIdeal { generator: Vec<usize> },
    /// `d = 1`: the ideal is the prime on `[min(u), min(v)]`.
    DegreeOneInterval { low: usize, high: usize },
    /// Every generator is divisible by `x_variable` (original label): split off
    /// that prime and drop `x_variable .. x_{variable + t - 1}`.
    StripLeadingX1Factor { variable: usize },
    /// No generator involves the first `drop` variables; they are removed.
    RestrictAmbient { drop: usize },
}

/// Where normalization ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Closed form reached: the listed primes (original labels) are the whole decomposition.
    Terminal(Vec<IndexSet>),
    /// A residual segment with `u > v`, `d >= 2`, `min(u) = 1`, `min(v) >= 2`.
    Residual(LexsegmentSpec),
}

/// Record of the reductions that take a spec to its residual.
///
/// A residual label `i` corresponds to the original label `i + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub original: LexsegmentSpec,
    pub steps: Vec<ReductionStep>,
    pub outcome: Outcome,
    pub offset: usize,
}

impl NormalizationTrace {
    pub fn residual(&self) -> Option<&LexsegmentSpec> {
        match &self.outcome {
            Outcome::Residual(s) => Some(s),
            Outcome::Terminal(_) => None,
        }
    }

    /// Primes contributed by the reductions themselves (original labels).
    pub fn factor_primes(&self) -> Vec<IndexSet> {
        let n = self.original.n;
        let mut out: Vec<IndexSet> = self
            .steps
            .iter()
            .filter_map(|s| match s {
                ReductionStep::StripLeadingX1Factor { variable } => {
                    Some(IndexSet::from_indices(n, [*variable]).expect("in range"))
                }
                _ => None,
            })
            .collect();
        if let Outcome::Terminal(primes) = &self.outcome {
            out.extend(primes.iter().copied());
        }
        out
    }

    /// Maps a residual index set back to original labels.
    pub fn lift(&self, set: &IndexSet) -> IndexSet {
        IndexSet::from_indices(self.original.n, set.iter().map(|i| i + self.offset))
            .expect("residual ambient embeds in the original")
    }

    pub fn lift_monomial(&self, m: &SquarefreeMonomial) -> SquarefreeMonomial {
        self.lift(&m.to_index_set()).monomial()
    }
}

impl Serialize for NormalizationTrace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("NormalizationTrace", 4)?;
        st.serialize_field("original", &self.original)?;
        st.serialize_field("steps", &self.steps)?;
        st.serialize_field("offset", &self.offset)?;
        match &self.outcome {
            Outcome::Terminal(p) => st.serialize_field("terminal", p)?,
            Outcome::Residual(r) => st.serialize_field("residual", r)?,
        }
        st.end()
    }
}

/// Applies, until none fires: principal (`u = v`), degree one, ambient
/// restriction (`min(u) > 1`), and splitting off `x_1` when it divides
/// every generator (`min(v) = 1`).
pub fn normalize(spec: &LexsegmentSpec) -> NormalizationTrace {
    let mut steps = Vec::new();
    let mut offset = 0usize;
    let mut cur = *spec;
    let n0 = spec.n;
    let lift = |set: &[usize], offset: usize| {
        IndexSet::from_indices(n0, set.iter().map(|i| i + offset)).expect("in range")
    };
    loop {
        if cur.u == cur.v {
            steps.push(ReductionStep::PrincipalIdeal {
                generator: cur.u.iter().map(|i| i + offset).collect(),
            });
            let primes = cur.u.iter().map(|i| lift(&[i], offset)).collect();
            return NormalizationTrace {
                original: *spec,
                steps,
                outcome: Outcome::Terminal(primes),
                offset,
            };
        }
        if cur.d == 1 {
            let (lo, hi) = (cur.u.min(), cur.v.min());
            steps.push(ReductionStep::DegreeOneInterval {
                low: lo + offset,
                high: hi + offset,
            });
            let interval: Vec<usize> = (lo..=hi).collect();
            return NormalizationTrace {
                original: *spec,
                steps,
                outcome: Outcome::Terminal(vec![lift(&interval, offset)]),
                offset,
            };
        }
        let i1 = cur.u.min();
        if i1 > 1 {
            let drop = i1 - 1;
            steps.push(ReductionStep::RestrictAmbient { drop });
            offset += drop;
            cur = LexsegmentSpec::new(
                cur.n - drop,
                cur.d,
                cur.t,
                cur.u.shift_down(drop).expect("min(u) > drop"),
                cur.v.shift_down(drop).expect("min(v) >= min(u)"),
            )
            .expect("restriction preserves validity");
            continue;
        }
        if cur.v.min() == 1 {
            steps.push(ReductionStep::StripLeadingX1Factor { variable: 1 + offset });
            let t = cur.t;
            let strip = |w: SquarefreeMonomial| {
                w.without(1)
                    .expect("x1 divides")
                    .shift_down(t)
                    .expect("t-spread after x1")
            };
            offset += t;
            cur = LexsegmentSpec::new(cur.n - t, cur.d - 1, t, strip(cur.u), strip(cur.v))
                .expect("stripping preserves validity");
            continue;
        }
        return NormalizationTrace {
            original: *spec,
            steps,
            outcome: Outcome::Residual(cur),
            offset,
        };
    }
}

/// All specs `u >= v` in `M_{n,d,t}`, in slex order of `(u, v)`.
pub fn all_specs(n: usize, d: usize, t: usize) -> Vec<LexsegmentSpec> {
    let m = enumerate_m(n, d, t);
    let mut out = Vec::with_capacity(m.len() * (m.len() + 1) / 2);
    for (a, u) in m.iter().enumerate() {
        for v in &m[a..] {
            out.push(LexsegmentSpec::new(n, d, t, *u, *v).expect("valid by construction"));
        }
    }
    out
}
