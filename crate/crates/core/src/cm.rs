//! Cohen-Macaulay classification of t-spread lexsegment ideals by case
//! analysis on the normalized spec, with a checkable certificate.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homological::{betti_final, betti_strongly_stable};
use crate::ideal::{gcd_of_ideal, intersect_ideals, MonomialIdeal};
use crate::lexseg::{build_segment, normalize, LexsegmentSpec, Outcome, ReductionStep};
use crate::monomial::{max_m, min_m, slex, SquarefreeMonomial};

/// The case of the analysis that decided the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// A principal ideal: always CM.
    Principal,
    /// Generated by variables: always CM.
    DegreeOneInterval,
    /// `x_1` divides every generator of a non-principal ideal: never CM.
    CommonVariable,
    /// The Veronese ideal: CM.
    Veronese,
    /// Initial, not Veronese: not CM.
    InitialNonVeronese,
    /// Final, not Veronese: not CM.
    FinalNonVeronese,
    /// `n ≤ 2 + (d−1)t`, where the segment is forced to be final.
    SmallNForced,
    /// `min(v) = 2`, `n ≤ 3 + (2d−3)t`: CM iff `gcd(I) = 1` and `P ∩ Q` principal.
    HeightTwoSplitting,
    /// `min(v) = 2`, `n ≥ 4 + (2d−3)t`: CM iff `I` is a two-generator complete intersection.
    HeightTwoCompleteIntersection,
    /// `min(v) > 2`: the extremal pair `u = x_1 x_{n−(d−2)t}···x_n`, `v = v_{d−1}`.
    GeneralExtremal,
    /// `min(v) > 2`, `t = 1`: `v = v_ℓ` with `u` the matching monomial.
    GeneralSquarefree,
    /// `min(v) > 2`, `t > 1`: `v = v_ℓ` with `u` in the segment `[u_ℓ, x_1 x_{n−(d−2)t}···x_n]`.
    GeneralSpread,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Principal => "principal",
            Branch::DegreeOneInterval => "degree-one-interval",
            Branch::CommonVariable => "common-variable",
            Branch::Veronese => "veronese",
            Branch::InitialNonVeronese => "initial-non-veronese",
            Branch::FinalNonVeronese => "final-non-veronese",
            Branch::SmallNForced => "small-n-forced",
            Branch::HeightTwoSplitting => "height-two-splitting",
            Branch::HeightTwoCompleteIntersection => "height-two-complete-intersection",
            Branch::GeneralExtremal => "general-extremal",
            Branch::GeneralSquarefree => "general-squarefree",
            Branch::GeneralSpread => "general-spread",
        }
    }

    pub const ALL: [Branch; 12] = [
        Branch::Principal,
        Branch::DegreeOneInterval,
        Branch::CommonVariable,
        Branch::Veronese,
        Branch::InitialNonVeronese,
        Branch::FinalNonVeronese,
        Branch::SmallNForced,
        Branch::HeightTwoSplitting,
        Branch::HeightTwoCompleteIntersection,
        Branch::GeneralExtremal,
        Branch::GeneralSquarefree,
        Branch::GeneralSpread,
    ];
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Data behind a verdict. Monomials of the residual are in its own
/// coordinates; add `offset` to read them in the original ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    /// Support of `gcd(I)` of the original ideal.
    pub gcd: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<LexsegmentSpec>,
    pub offset: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_generators: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_generators: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersection_generators: Option<Vec<Vec<usize>>>,
    /// Support of `gcd` of the residual ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_gcd: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u_ell: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_ell: Option<Vec<usize>>,
    /// The endpoints the branch demands, when it names them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required_u: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required_v: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub branch: Branch,
    pub witness: CmWitness,
    pub spec: LexsegmentSpec,
}

fn mono(n: usize, support: impl IntoIterator<Item = usize>) -> Result<SquarefreeMonomial> {
    let mut s: Vec<usize> = support.into_iter().collect();
    s.sort_unstable();
    SquarefreeMonomial::new(n, &s)
}

/// `v_ℓ = (∏_{s=ℓ}^{d−1} x_{n−st−1})(∏_{s=0}^{ℓ−1} x_{n−st})`, `0 ≤ ℓ ≤ d`.
pub fn v_ell(n: usize, d: usize, t: usize, ell: usize) -> Result<SquarefreeMonomial> {
    mono(n, (0..d).map(|s| if s >= ell { n - s * t - 1 } else { n - s * t }))
}

/// `u_ℓ = x_1 (∏_{s=ℓ}^{d−2} x_{n−st−1})(∏_{s=0}^{ℓ−1} x_{n−st})`, `0 ≤ ℓ ≤ d−1`.
pub fn u_ell(n: usize, d: usize, t: usize, ell: usize) -> Result<SquarefreeMonomial> {
    mono(n, std::iter::once(1).chain((0..d - 1).map(|s| if s >= ell { n - s * t - 1 } else { n - s * t })))
}

/// `x_1 x_{n−(d−2)t} ··· x_{n−t} x_n`, the smallest degree-d monomial with minimum 1.
pub fn smallest_with_x1(n: usize, d: usize, t: usize) -> Result<SquarefreeMonomial> {
    mono(n, std::iter::once(1).chain((0..d - 1).map(|s| n - s * t)))
}

/// `x_2 x_{2+t} ··· x_{2+(d−1)t}`, the largest degree-d monomial with minimum 2.
pub fn largest_with_x2(n: usize, d: usize, t: usize) -> Result<SquarefreeMonomial> {
    mono(n, (0..d).map(|s| 2 + s * t))
}

fn supports(i: &MonomialIdeal) -> Vec<Vec<usize>> {
    i.generators().iter().map(SquarefreeMonomial::support).collect()
}

/// `pd(P) ≤ 1` and `pd(Q) ≤ 1` for the split by minimum, which is a Betti
/// splitting whenever `x_2` divides no generator of `P`.
///
/// `P = x_1 P'` with `P'` final and `Q` initial in `K[x_2..x_n]`, so both
/// tables come from the closed forms.
fn splitting_summands_linear(p: &MonomialIdeal, q: &MonomialIdeal, t: usize) -> Result<bool> {
    if p.generators().iter().any(|g| g.contains(2)) {
        return Ok(false);
    }
    let n = p.ambient();
    let p_rest = MonomialIdeal::new(n, p.generators().iter().map(|g| g.without(1).expect("x1 divides P")))?;
    let q_down = MonomialIdeal::new(n - 1, q.generators().iter().map(|g| g.shift_down(1)).collect::<Result<Vec<_>>>()?)?;
    let pd_p = betti_final(&p_rest, t)?.pd().unwrap_or(0);
    let pd_q = betti_strongly_stable(&q_down, t)?.pd().unwrap_or(0);
    Ok(pd_p <= 1 && pd_q <= 1)
}

/// Which statement of the case rules [`classify_with`] applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rules {
    /// The published criteria, unchanged.
    #[default]
    Literal,
    /// Height-two splitting also requires `x_2 ∤ G(P)` and `pd(P), pd(Q) ≤ 1`;
    /// for `t = 1` the general case accepts `u ∈ {u_ℓ, u_{ℓ+1}}`.
    Repaired,
}

/// [`classify_with`] under the published criteria.
pub fn classify(spec: &LexsegmentSpec) -> Result<CmVerdict> {
    classify_with(spec, Rules::Literal)
}

/// Decides whether `S/I` is Cohen-Macaulay for `I = (L_t(u, v))`.
pub fn classify_with(spec: &LexsegmentSpec, rules: Rules) -> Result<CmVerdict> {
    let ideal = build_segment(spec);
    let mut witness = CmWitness {
        gcd: gcd_of_ideal(&ideal)?.support(),
        ..CmWitness::default()
    };
    let verdict = |is_cm: bool, branch: Branch, witness: CmWitness| CmVerdict {
        is_cm,
        branch,
        witness,
        spec: *spec,
    };
    if ideal.is_principal() {
        return Ok(verdict(true, Branch::Principal, witness));
    }
    let trace = normalize(spec);
    witness.offset = trace.offset;
    if trace.steps.iter().any(|s| matches!(s, ReductionStep::StripLeadingX1Factor { .. })) {
        // x_1 J with J proper and not principal has primes of heights 1 and ≥ 2.
        return Ok(verdict(false, Branch::CommonVariable, witness));
    }
    let r = match &trace.outcome {
        Outcome::Residual(r) => *r,
        Outcome::Terminal(_) => {
            if ideal.generators().iter().all(|g| g.degree() == 1) {
                return Ok(verdict(true, Branch::DegreeOneInterval, witness));
            }
            return Err(Error::Internal(format!("classify: unexpected terminal outcome for {spec}")));
        }
    };
    witness.residual = Some(r);
    let (n, d, t) = (r.n(), r.d(), r.t());
    let (u, v) = (r.u(), r.v());
    if u.min() != 1 || v.min() < 2 || d < 2 {
        return Err(Error::Internal(format!("classify: residual {r} is not normalized")));
    }
    let spread = (d - 1) * t;
    let is_max = Some(u) == max_m(n, d, t);
    let is_min = Some(v) == min_m(n, d, t);
    if is_max && is_min {
        return Ok(verdict(true, Branch::Veronese, witness));
    }
    if n <= 2 + spread {
        return Ok(verdict(false, Branch::SmallNForced, witness));
    }
    if is_max {
        return Ok(verdict(false, Branch::InitialNonVeronese, witness));
    }
    if is_min {
        return Ok(verdict(false, Branch::FinalNonVeronese, witness));
    }
    let low = smallest_with_x1(n, d, t)?;
    if v.min() == 2 {
        if n <= 3 + (2 * d - 3) * t {
            let rideal = build_segment(&r);
            let (q, p): (Vec<SquarefreeMonomial>, Vec<SquarefreeMonomial>) =
                rideal.generators().iter().partition(|g| g.min() == 2);
            let p = MonomialIdeal::new(n, p)?;
            let q = MonomialIdeal::new(n, q)?;
            let pq = intersect_ideals(&p, &q)?;
            let g = gcd_of_ideal(&rideal)?;
            witness.residual_gcd = Some(g.support());
            witness.p_generators = Some(supports(&p));
            witness.q_generators = Some(supports(&q));
            witness.intersection_generators = Some(supports(&pq));
            let mut is_cm = g.is_one() && pq.is_principal();
            if rules == Rules::Repaired {
                is_cm &= splitting_summands_linear(&p, &q, t)?;
            }
            return Ok(verdict(is_cm, Branch::HeightTwoSplitting, witness));
        }
        let top = largest_with_x2(n, d, t)?;
        witness.required_u = Some(low.support());
        witness.required_v = Some(top.support());
        let is_cm = u == low && v == top;
        return Ok(verdict(is_cm, Branch::HeightTwoCompleteIntersection, witness));
    }
    let extremal_v = v_ell(n, d, t, d - 1)?;
    if u == low && v == extremal_v {
        witness.ell = Some(d - 1);
        witness.v_ell = Some(extremal_v.support());
        witness.required_u = Some(low.support());
        witness.required_v = Some(extremal_v.support());
        return Ok(verdict(true, Branch::GeneralExtremal, witness));
    }
    let branch = if t == 1 { Branch::GeneralSquarefree } else { Branch::GeneralSpread };
    for ell in 0..=d - 2 {
        let ve = v_ell(n, d, t, ell)?;
        if v != ve {
            continue;
        }
        witness.ell = Some(ell);
        witness.v_ell = Some(ve.support());
        let ue = u_ell(n, d, t, ell)?;
        witness.u_ell = Some(ue.support());
        let is_cm = if t == 1 {
            let required = u_ell(n, d, t, ell + 1)?;
            witness.required_u = Some(required.support());
            u == required || (rules == Rules::Repaired && u == ue)
        } else {
            slex(&u, &ue).is_le() && slex(&u, &low).is_ge()
        };
        return Ok(verdict(is_cm, branch, witness));
    }
    Ok(verdict(false, branch, witness))
}
