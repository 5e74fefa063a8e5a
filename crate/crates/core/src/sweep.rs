//! Exhaustive comparison of the closed forms against the oracle over a range
//! of `(n, d, t)`, and the dimension-bound scan.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::cm::{classify_with, Branch, Rules};
use crate::decomp::{decompose_with, ClosedForm, Method};
use crate::error::{Error, Result};
use crate::homological::betti_for_spec;
use crate::lexseg::{all_specs, build_segment, is_completely, normalize, Kind, LexsegmentSpec, NormalizationTrace};
use crate::oracle::{hochster_betti, krull_dim_oracle, minimal_primes_bruteforce, oracle_cap, reisner_cm_check, HOCHSTER_CAP};

/// Which specs a sweep visits and which checks it runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub n: (usize, usize),
    pub d: (usize, usize),
    pub t: (usize, usize),
    /// Empty means every kind.
    pub kinds: Vec<Kind>,
    /// Without the oracle only the closed forms run (a smoke test).
    pub oracle: bool,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    pub form: ClosedForm,
    pub rules: Rules,
    pub check_decomposition: bool,
    pub check_betti: bool,
    pub check_classification: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n: (1, 8),
            d: (1, 3),
            t: (1, 2),
            kinds: Vec::new(),
            oracle: true,
            threads: 0,
            form: ClosedForm::Literal,
            rules: Rules::Literal,
            check_decomposition: true,
            check_betti: true,
            check_classification: true,
        }
    }
}

impl SweepConfig {
    /// Refuses ranges the oracle cannot cover.
    pub fn validate(&self) -> Result<()> {
        let cap = oracle_cap();
        if self.oracle && self.n.1 > cap {
            return Err(Error::OracleCap { n: self.n.1, cap });
        }
        if self.n.0 == 0 || self.d.0 == 0 || self.t.0 == 0 {
            return Err(Error::InvalidSpec("n, d and t start at 1".into()));
        }
        Ok(())
    }

    /// Every spec in range, grouped by `(n, d, t)` in increasing order.
    pub fn specs(&self) -> Vec<LexsegmentSpec> {
        let mut out = Vec::new();
        for n in self.n.0..=self.n.1 {
            for d in self.d.0..=self.d.1 {
                for t in self.t.0..=self.t.1 {
                    out.extend(
                        all_specs(n, d, t)
                            .into_iter()
                            .filter(|s| self.kinds.is_empty() || self.kinds.contains(&s.kind())),
                    );
                }
            }
        }
        out
    }
}

/// One check on one spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionCheck {
    pub status: CheckStatus,
    pub method: Method,
    pub closed: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiCheck {
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed: Option<crate::betti::BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<crate::betti::BettiTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationCheck {
    pub status: CheckStatus,
    pub branch: Branch,
    pub closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

/// All checks on one spec; one JSON line of the report.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub spec: LexsegmentSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationCheck>,
    /// Present on mismatches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<NormalizationTrace>,
}

impl SweepRecord {
    pub fn has_mismatch(&self) -> bool {
        self.decomposition.as_ref().is_some_and(|c| c.status == CheckStatus::Mismatch)
            || self.betti.as_ref().is_some_and(|c| c.status == CheckStatus::Mismatch)
            || self.classification.as_ref().is_some_and(|c| c.status == CheckStatus::Mismatch)
    }
}

fn status(oracle: Option<bool>) -> CheckStatus {
    match oracle {
        None => CheckStatus::Skipped,
        Some(true) => CheckStatus::Match,
        Some(false) => CheckStatus::Mismatch,
    }
}

/// Runs the configured checks on one spec.
pub fn check_spec(spec: &LexsegmentSpec, cfg: &SweepConfig) -> Result<SweepRecord> {
    let ideal = build_segment(spec);
    let decomposition = if cfg.check_decomposition {
        let report = decompose_with(spec, cfg.form)?;
        let closed = report.decomposition.supports();
        let oracle = if cfg.oracle {
            Some(minimal_primes_bruteforce(&ideal)?.iter().map(|p| p.to_vec()).collect::<Vec<_>>())
        } else {
            None
        };
        Some(DecompositionCheck {
            status: status(oracle.as_ref().map(|o| *o == closed)),
            method: report.method,
            closed,
            oracle,
        })
    } else {
        None
    };
    let betti = if cfg.check_betti {
        let closed = betti_for_spec(spec, &ideal)?;
        let oracle = if cfg.oracle && closed.is_some() && spec.n() <= HOCHSTER_CAP {
            Some(hochster_betti(&ideal)?)
        } else {
            None
        };
        let st = match (&closed, &oracle) {
            (Some(c), Some(o)) => status(Some(c == o)),
            _ => CheckStatus::Skipped,
        };
        Some(BettiCheck {
            status: st,
            closed,
            oracle,
        })
    } else {
        None
    };
    let classification = if cfg.check_classification {
        let v = classify_with(spec, cfg.rules)?;
        let oracle = if cfg.oracle {
            Some(reisner_cm_check(&ideal)?.is_cm)
        } else {
            None
        };
        Some(ClassificationCheck {
            status: status(oracle.map(|o| o == v.is_cm)),
            branch: v.branch,
            closed: v.is_cm,
            oracle,
        })
    } else {
        None
    };
    let mut record = SweepRecord {
        spec: *spec,
        decomposition,
        betti,
        classification,
        trace: None,
    };
    if record.has_mismatch() {
        record.trace = Some(normalize(spec));
    }
    Ok(record)
}

/// Per-check counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub matched: usize,
    pub mismatched: usize,
    pub skipped: usize,
}

impl Tally {
    fn add(&mut self, s: &CheckStatus) {
        match s {
            CheckStatus::Match => self.matched += 1,
            CheckStatus::Mismatch => self.mismatched += 1,
            CheckStatus::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub specs: usize,
    pub decomposition: Tally,
    pub betti: Tally,
    pub classification: Tally,
    /// Decomposition tallies per route.
    pub by_method: BTreeMap<String, Tally>,
    /// Classification tallies per branch.
    pub by_branch: BTreeMap<String, Tally>,
}

impl SweepSummary {
    pub fn mismatches(&self) -> usize {
        self.decomposition.mismatched + self.betti.mismatched + self.classification.mismatched
    }

    fn absorb(&mut self, r: &SweepRecord) {
        self.specs += 1;
        if let Some(c) = &r.decomposition {
            self.decomposition.add(&c.status);
            let key = serde_json::to_value(c.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            self.by_method.entry(key).or_default().add(&c.status);
        }
        if let Some(c) = &r.betti {
            self.betti.add(&c.status);
        }
        if let Some(c) = &r.classification {
            self.classification.add(&c.status);
            self.by_branch.entry(c.branch.to_string()).or_default().add(&c.status);
        }
    }
}

/// Runs the sweep, handing every record to `sink` in deterministic order.
pub fn run_sweep(cfg: &SweepConfig, mut sink: impl FnMut(&SweepRecord) -> Result<()>) -> Result<SweepSummary> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let mut summary = SweepSummary::default();
    for n in cfg.n.0..=cfg.n.1 {
        for d in cfg.d.0..=cfg.d.1 {
            for t in cfg.t.0..=cfg.t.1 {
                let specs: Vec<LexsegmentSpec> = all_specs(n, d, t)
                    .into_iter()
                    .filter(|s| cfg.kinds.is_empty() || cfg.kinds.contains(&s.kind()))
                    .collect();
                let records: Vec<Result<SweepRecord>> =
                    pool.install(|| specs.par_iter().map(|s| check_spec(s, cfg)).collect());
                for r in records {
                    let r = r?;
                    summary.absorb(&r);
                    sink(&r)?;
                }
            }
        }
    }
    Ok(summary)
}

/// Writes every record as one JSON line.
pub fn json_lines_sink<W: Write>(out: &mut W) -> impl FnMut(&SweepRecord) -> Result<()> + '_ {
    move |r| {
        let line = serde_json::to_string(r).map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Error::Internal(e.to_string()))
    }
}

/// One spec of the dimension-bound scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub spec: LexsegmentSpec,
    pub dim: usize,
    pub bound: usize,
    pub holds: bool,
    pub completely: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundSummary {
    pub specs: usize,
    pub completely: usize,
    pub non_completely: usize,
    /// Specs with `dim(S/I) < (d−1)t`, reported verbatim.
    pub counterexamples: Vec<BoundRecord>,
}

/// Checks `dim(S/I) ≥ (d−1)t` on every spec with `d ≥ 2` in range.
pub fn dimension_bound_scan(cfg: &SweepConfig) -> Result<BoundSummary> {
    cfg.validate()?;
    let specs: Vec<LexsegmentSpec> = cfg.specs().into_iter().filter(|s| s.d() >= 2).collect();
    let records: Vec<Result<BoundRecord>> = specs
        .par_iter()
        .map(|s| {
            let dim = krull_dim_oracle(&build_segment(s))?;
            let bound = (s.d() - 1) * s.t();
            Ok(BoundRecord {
                spec: *s,
                dim,
                bound,
                holds: dim >= bound,
                completely: is_completely(s),
            })
        })
        .collect();
    let mut summary = BoundSummary::default();
    for r in records {
        let r = r?;
        summary.specs += 1;
        if r.completely {
            summary.completely += 1;
        } else {
            summary.non_completely += 1;
        }
        if !r.holds {
            summary.counterexamples.push(r);
        }
    }
    Ok(summary)
}
