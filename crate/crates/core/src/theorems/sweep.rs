//! Sweeps: run a set of checks over every complex on `n` vertices or over a
//! seeded random sample, and tally the outcomes.

use std::fmt;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{CheckId, CheckOutcome, Expectation, Status, Subject};
use super::enumerate::{enumerate_complexes, random_complex};
use crate::complex::SimplicialComplex;
use crate::depth::DEFAULT_VERTEX_CAP;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SweepMode {
    Exhaustive,
    Random { seed: u64, count: usize },
}

impl fmt::Display for SweepMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepMode::Exhaustive => write!(f, "exhaustive"),
            SweepMode::Random { seed, count } => write!(f, "random(seed={seed}, count={count})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n: usize,
    pub mode: SweepMode,
    pub fields: Vec<FieldSpec>,
    pub checks: Vec<CheckId>,
    /// Primes for the universal-coefficient check.
    pub uct_primes: Vec<u32>,
    pub vertex_cap: usize,
}

impl SweepConfig {
    /// All checks over ℚ, 𝔽_2 and 𝔽_3, UCT at p = 2, 3.
    pub fn new(n: usize, mode: SweepMode) -> Self {
        SweepConfig {
            n,
            mode,
            fields: vec![FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)],
            checks: CheckId::ALL.to_vec(),
            uct_primes: vec![2, 3],
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }

    /// One slot per (check, coefficients) pair actually evaluated.
    fn slots(&self) -> Vec<(CheckId, Option<FieldSpec>)> {
        let mut out = Vec::new();
        for &c in &self.checks {
            match c {
                CheckId::DeltaIsoNerve => out.push((c, None)),
                CheckId::Uct => {
                    out.extend(self.uct_primes.iter().map(|&p| (c, Some(FieldSpec::PrimeField(p)))))
                }
                _ => out.extend(self.fields.iter().map(|&f| (c, Some(f)))),
            }
        }
        out
    }

    fn validate(&self) -> Result<()> {
        if self.fields.is_empty() {
            return Err(Error::InvalidSweep("no coefficient fields given".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidSweep("no checks selected".into()));
        }
        if self.n == 0 {
            return Err(Error::InvalidSweep("n must be at least 1".into()));
        }
        for &p in &self.uct_primes {
            FieldSpec::prime(p as u64)?;
        }
        if let SweepMode::Random { .. } = self.mode {
            if self.n >= 64 {
                return Err(Error::InvalidSweep("random sampling supports n < 64".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: Option<CheckId>,
    pub field: Option<FieldSpec>,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub unexpected: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub mode: SweepMode,
    pub fields: Vec<FieldSpec>,
    pub checks: Vec<CheckId>,
    pub complexes: usize,
    pub tallies: Vec<Tally>,
    /// Failures contradicting their expectation.
    pub unexpected: Vec<CheckOutcome>,
    /// Failures that were expected or permitted (torsion sightings over ℤ).
    pub logged: Vec<CheckOutcome>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn all_expectations_met(&self) -> bool {
        self.unexpected.is_empty() && self.tallies.iter().all(|t| t.unexpected == 0)
    }

    pub fn tally(&self, check: CheckId, field: Option<FieldSpec>) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.check == Some(check) && t.field == field)
    }

    /// Failures (of any polarity) across all tallies.
    pub fn total_failures(&self) -> usize {
        self.tallies.iter().map(|t| t.fail).sum()
    }

    /// Report body without timing; identical across reruns of the same
    /// configuration.
    pub fn body_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.body_json();
        v["elapsed_ms"] = serde_json::Value::from(self.elapsed_ms as u64);
        v
    }

    /// Text table without the timing line.
    pub fn render_body(&self) -> String {
        let mut s = format!("sweep n={} mode={} complexes={}\n", self.n, self.mode, self.complexes);
        s.push_str(&format!(
            "{:<18} {:<6} {:>8} {:>6} {:>6} {:>10}\n",
            "check", "field", "pass", "fail", "n/a", "unexpected"
        ));
        for t in &self.tallies {
            s.push_str(&format!(
                "{:<18} {:<6} {:>8} {:>6} {:>6} {:>10}\n",
                t.check.map_or("-", CheckId::name),
                t.field.map_or("-".to_string(), |f| f.to_string()),
                t.pass,
                t.fail,
                t.not_applicable,
                t.unexpected
            ));
        }
        s.push_str(&format!("unexpected failures: {}\n", self.unexpected.len()));
        s.push_str(&format!("logged failures (expected or permitted): {}\n", self.logged.len()));
        for o in self.unexpected.iter().chain(&self.logged) {
            s.push_str(&format!(
                "  {} [{}] on {} -> {}\n",
                o.check,
                o.field.map_or("-".to_string(), |f| f.to_string()),
                crate::format::complex_to_json(&o.complex),
                o.witness.as_ref().map_or(String::new(), |w| w.to_string())
            ));
        }
        s
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}elapsed: {} ms", self.render_body(), self.elapsed_ms)
    }
}

fn corpus(cfg: &SweepConfig) -> Result<Vec<SimplicialComplex>> {
    match cfg.mode {
        SweepMode::Exhaustive => enumerate_complexes(cfg.n),
        SweepMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count).map(|_| random_complex(cfg.n, &mut rng)).collect())
        }
    }
}

/// Runs the configured checks over the corpus. Evaluation is parallel per
/// complex; results are merged in corpus order.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let start = Instant::now();
    let complexes = corpus(cfg)?;
    let slots = cfg.slots();

    let per_complex: Vec<Vec<CheckOutcome>> = complexes
        .par_iter()
        .map(|k| {
            let subject = Subject::with_vertex_cap(k, cfg.vertex_cap);
            slots
                .iter()
                .map(|&(check, field)| match field {
                    Some(f) => subject.run(check, f),
                    None => subject.delta_iso_nerve(),
                })
                .collect()
        })
        .collect();

    let mut tallies: Vec<Tally> = slots
        .iter()
        .map(|&(check, field)| Tally { check: Some(check), field, ..Tally::default() })
        .collect();
    let mut unexpected = Vec::new();
    let mut logged = Vec::new();
    for outcomes in per_complex {
        for (t, o) in tallies.iter_mut().zip(outcomes) {
            match o.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::NotApplicable => t.not_applicable += 1,
            }
            if o.unexpected() {
                t.unexpected += 1;
                unexpected.push(o);
            } else if o.status == Status::Fail {
                debug_assert_ne!(o.expected, Expectation::Pass);
                logged.push(o);
            }
        }
    }

    Ok(SweepReport {
        n: cfg.n,
        mode: cfg.mode,
        fields: cfg.fields.clone(),
        checks: cfg.checks.clone(),
        complexes: complexes.len(),
        tallies,
        unexpected,
        logged,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
