//! One executable check per combinatorial statement.
//!
//! Each check evaluates a single `(complex, coefficients)` instance and
//! reports pass, fail, or not-applicable, together with the polarity it was
//! expected to have. A failure always carries a JSON witness naming the
//! degrees and groups involved.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{nerve, SimplicialComplex};
use crate::depth::{depth_capped, DepthReport, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec, HomologyProfile};
use crate::stanley_reisner::{delta_of_complex, sr_generators};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// depth ≥ 2 ⟹ H̃_0(Δ) = 0.
    Hartshorne,
    /// depth ≥ d ⟹ H̃_j(Δ) = 0 for 0 ≤ j ≤ d - 2.
    DepthVanishing,
    /// μ facets ⟹ H̃_i(K) = 0 for i ≥ μ - 1.
    FewFacets,
    /// n - t generators ⟹ H̃_i(Δ) = 0 for 0 ≤ i ≤ t - 2.
    GeneratorCount,
    /// H̃_j(K) ≅ H̃_{n-3-j}(K*) over a field.
    AlexanderDuality,
    /// K and the nerve of its facets have equal homology.
    Nerve,
    /// Δ(S/I(K)) equals the facet nerve under the common facet labels.
    DeltaIsoNerve,
    /// 𝔽_p Betti numbers agree with the universal coefficient count.
    Uct,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Hartshorne,
        CheckId::DepthVanishing,
        CheckId::FewFacets,
        CheckId::GeneratorCount,
        CheckId::AlexanderDuality,
        CheckId::Nerve,
        CheckId::DeltaIsoNerve,
        CheckId::Uct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Hartshorne => "hartshorne",
            CheckId::DepthVanishing => "depth-vanishing",
            CheckId::FewFacets => "few-facets",
            CheckId::GeneratorCount => "generator-count",
            CheckId::AlexanderDuality => "alexander-duality",
            CheckId::Nerve => "nerve",
            CheckId::DeltaIsoNerve => "delta-iso-nerve",
            CheckId::Uct => "uct",
        }
    }

    /// Parses a comma separated list; `all` selects every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                return Ok(CheckId::ALL.to_vec());
            }
            let id = part.parse::<CheckId>()?;
            if !out.contains(&id) {
                out.push(id);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownCheck(s.to_string()));
        }
        Ok(out)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Pass,
    Fail,
    /// Either outcome is legitimate; failures are logged, not flagged.
    Either,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub check: CheckId,
    pub field: Option<FieldSpec>,
    pub complex: SimplicialComplex,
    pub status: Status,
    pub expected: Expectation,
    /// Present exactly when `status` is `Fail`.
    pub witness: Option<Value>,
    /// Why a check did not apply.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Outcome contradicts the expectation.
    pub fn unexpected(&self) -> bool {
        matches!(
            (self.status, self.expected),
            (Status::Fail, Expectation::Pass) | (Status::Pass, Expectation::Fail)
        )
    }

    pub fn expecting(mut self, e: Expectation) -> Self {
        self.expected = e;
        self
    }
}

/// A complex under test, with lazily computed and cached derived objects.
/// Not shared across threads; each worker builds its own.
pub struct Subject<'a> {
    k: &'a SimplicialComplex,
    vertex_cap: usize,
    delta: OnceCell<Option<SimplicialComplex>>,
    nerve: OnceCell<Option<SimplicialComplex>>,
    dual: OnceCell<SimplicialComplex>,
    depths: RefCell<HashMap<FieldSpec, std::result::Result<DepthReport, Error>>>,
    homology: RefCell<HashMap<(Which, FieldSpec), HomologyProfile>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Which {
    K,
    Delta,
    Nerve,
    Dual,
}

fn groups_json(h: &HomologyProfile, degrees: impl IntoIterator<Item = isize>) -> Value {
    Value::Array(
        degrees
            .into_iter()
            .map(|d| json!({"degree": d, "group": h.group(d).render(h.coefficients)}))
            .collect(),
    )
}

impl<'a> Subject<'a> {
    pub fn new(k: &'a SimplicialComplex) -> Self {
        Self::with_vertex_cap(k, DEFAULT_VERTEX_CAP)
    }

    pub fn with_vertex_cap(k: &'a SimplicialComplex, vertex_cap: usize) -> Self {
        Subject {
            k,
            vertex_cap,
            delta: OnceCell::new(),
            nerve: OnceCell::new(),
            dual: OnceCell::new(),
            depths: RefCell::new(HashMap::new()),
            homology: RefCell::new(HashMap::new()),
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.k
    }

    fn delta(&self) -> Option<&SimplicialComplex> {
        self.delta.get_or_init(|| delta_of_complex(self.k).ok()).as_ref()
    }

    fn facet_nerve(&self) -> Option<&SimplicialComplex> {
        self.nerve.get_or_init(|| nerve(self.k.facets()).ok()).as_ref()
    }

    fn dual(&self) -> &SimplicialComplex {
        self.dual.get_or_init(|| self.k.alexander_dual().complex)
    }

    fn homology(&self, which: Which, f: FieldSpec) -> HomologyProfile {
        if let Some(h) = self.homology.borrow().get(&(which, f)) {
            return h.clone();
        }
        let target = match which {
            Which::K => self.k,
            Which::Delta => self.delta().expect("caller checked non-void"),
            Which::Nerve => self.facet_nerve().expect("caller checked non-void"),
            Which::Dual => self.dual(),
        };
        let h = reduced_homology(target, f);
        self.homology.borrow_mut().insert((which, f), h.clone());
        h
    }

    /// Depth over `f`; ℤ is replaced by ℚ.
    pub fn depth(&self, f: FieldSpec) -> std::result::Result<DepthReport, Error> {
        let f = f.depth_field();
        self.depths
            .borrow_mut()
            .entry(f)
            .or_insert_with(|| depth_capped(self.k, f, self.vertex_cap))
            .clone()
    }

    fn outcome(&self, check: CheckId, field: Option<FieldSpec>, witness: Option<Value>) -> CheckOutcome {
        CheckOutcome {
            check,
            field,
            complex: self.k.clone(),
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            expected: Expectation::Pass,
            witness,
            note: None,
        }
    }

    fn not_applicable(&self, check: CheckId, field: Option<FieldSpec>, why: impl Into<String>) -> CheckOutcome {
        CheckOutcome {
            check,
            field,
            complex: self.k.clone(),
            status: Status::NotApplicable,
            expected: Expectation::Pass,
            witness: None,
            note: Some(why.into()),
        }
    }

    pub fn run(&self, check: CheckId, f: FieldSpec) -> CheckOutcome {
        match check {
            CheckId::Hartshorne => self.hartshorne(f),
            CheckId::DepthVanishing => self.depth_vanishing(f),
            CheckId::FewFacets => self.few_facets(f),
            CheckId::GeneratorCount => self.generator_count(f),
            CheckId::AlexanderDuality => self.alexander_duality(f),
            CheckId::Nerve => self.nerve_homology(f),
            CheckId::DeltaIsoNerve => self.delta_iso_nerve(),
            CheckId::Uct => match f {
                FieldSpec::PrimeField(p) => self.uct(p),
                other => self.not_applicable(check, Some(other), "needs a prime field"),
            },
        }
    }

    /// Zero-vanishing of Δ's homology in degrees `0..=top`, given the depth.
    fn vanishing_witness(&self, f: FieldSpec, d: &DepthReport, top: isize) -> Option<Value> {
        let h = self.homology(Which::Delta, f);
        let bad: Vec<isize> = (0..=top).filter(|&j| !h.group(j).is_zero()).collect();
        (!bad.is_empty()).then(|| {
            json!({
                "depth": d.depth,
                "depth_field": d.field,
                "required_zero_degrees": [0, top],
                "nonzero": groups_json(&h, bad),
            })
        })
    }

    pub fn hartshorne(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::Hartshorne;
        let d = match self.depth(f) {
            Ok(d) => d,
            Err(e) => return self.not_applicable(id, Some(f), e.to_string()),
        };
        if d.depth < 2 {
            return self.outcome(id, Some(f), None);
        }
        let w = self.vanishing_witness(f, &d, 0);
        self.outcome(id, Some(f), w)
    }

    /// Over a field the statement is a theorem. Over ℤ it can fail through
    /// torsion, so failures there are expected-possible.
    pub fn depth_vanishing(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::DepthVanishing;
        let d = match self.depth(f) {
            Ok(d) => d,
            Err(e) => return self.not_applicable(id, Some(f), e.to_string()),
        };
        let w = if d.depth >= 2 {
            self.vanishing_witness(f, &d, d.depth as isize - 2)
        } else {
            None
        };
        let out = self.outcome(id, Some(f), w);
        if f.is_field() {
            out
        } else {
            out.expecting(Expectation::Either)
        }
    }

    pub fn few_facets(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::FewFacets;
        if self.k.is_void() {
            return self.not_applicable(id, Some(f), "void complex");
        }
        let mu = self.k.facets().len() as isize;
        let h = self.homology(Which::K, f);
        let bad: Vec<isize> =
            (mu - 1..=h.max_degree()).filter(|&i| !h.group(i).is_zero()).collect();
        let w = (!bad.is_empty())
            .then(|| json!({"facets": mu, "nonzero": groups_json(&h, bad)}));
        self.outcome(id, Some(f), w)
    }

    pub fn generator_count(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::GeneratorCount;
        if !f.is_field() {
            return self.not_applicable(id, Some(f), "stated over a field");
        }
        let Ok(g) = sr_generators(self.k) else {
            return self.not_applicable(id, Some(f), "void complex");
        };
        let t = self.k.n() as isize - g.len() as isize;
        let h = self.homology(Which::Delta, f);
        let bad: Vec<isize> = (0..=t - 2).filter(|&i| !h.group(i).is_zero()).collect();
        let w = (!bad.is_empty()).then(|| {
            json!({"generators": g.len(), "t": t, "nonzero": groups_json(&h, bad)})
        });
        self.outcome(id, Some(f), w)
    }

    pub fn alexander_duality(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::AlexanderDuality;
        if !f.is_field() {
            return self.not_applicable(id, Some(f), "stated over a field");
        }
        if self.k.is_void() || self.k.is_full_simplex() {
            return self.not_applicable(id, Some(f), "void complex or full simplex");
        }
        let n = self.k.n() as isize;
        let hk = self.homology(Which::K, f);
        let hd = self.homology(Which::Dual, f);
        let bad: Vec<Value> = (-1..=n)
            .filter(|&j| hk.betti(j) != hd.betti(n - 3 - j))
            .map(|j| json!({"j": j, "betti_k": hk.betti(j), "dual_degree": n - 3 - j, "betti_dual": hd.betti(n - 3 - j)}))
            .collect();
        let w = (!bad.is_empty()).then(|| json!({"mismatches": bad}));
        self.outcome(id, Some(f), w)
    }

    pub fn nerve_homology(&self, f: FieldSpec) -> CheckOutcome {
        let id = CheckId::Nerve;
        if self.k.is_void() {
            return self.not_applicable(id, Some(f), "void complex");
        }
        let mut coeffs = vec![f];
        if f != FieldSpec::Integers {
            coeffs.push(FieldSpec::Integers);
        }
        let bad: Vec<Value> = coeffs
            .into_iter()
            .filter_map(|c| {
                let hk = self.homology(Which::K, c);
                let hn = self.homology(Which::Nerve, c);
                (!hk.same_groups(&hn)).then(|| {
                    json!({"coefficients": c, "complex": hk.to_string(), "nerve": hn.to_string()})
                })
            })
            .collect();
        let w = (!bad.is_empty()).then(|| json!({"mismatches": bad}));
        self.outcome(id, Some(f), w)
    }

    pub fn delta_iso_nerve(&self) -> CheckOutcome {
        let id = CheckId::DeltaIsoNerve;
        let (Some(d), Some(nv)) = (self.delta(), self.facet_nerve()) else {
            return self.not_applicable(id, None, "void complex");
        };
        let w = (d != nv).then(|| {
            json!({"delta": crate::format::complex_to_json(d), "nerve": crate::format::complex_to_json(nv)})
        });
        self.outcome(id, None, w)
    }

    pub fn uct(&self, p: u32) -> CheckOutcome {
        let id = CheckId::Uct;
        let fp = FieldSpec::PrimeField(p);
        let hz = self.homology(Which::K, FieldSpec::Integers);
        let hp = self.homology(Which::K, fp);
        let top = hz.max_degree().max(hp.max_degree()) + 1;
        let bad: Vec<Value> = (-1..=top)
            .filter_map(|i| {
                let predicted = hz.group(i).free_rank
                    + hz.group(i).p_torsion_count(p)
                    + hz.group(i - 1).p_torsion_count(p);
                let actual = hp.betti(i);
                (predicted != actual)
                    .then(|| json!({"degree": i, "predicted": predicted, "actual": actual}))
            })
            .collect();
        let w = (!bad.is_empty()).then(|| json!({"p": p, "mismatches": bad}));
        self.outcome(id, Some(fp), w)
    }
}

pub fn check_hartshorne(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).hartshorne(f)
}

pub fn check_depth_vanishing(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).depth_vanishing(f)
}

pub fn check_few_facets(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).few_facets(f)
}

pub fn check_generator_count(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).generator_count(f)
}

pub fn check_alexander_duality(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).alexander_duality(f)
}

pub fn check_nerve(k: &SimplicialComplex, f: FieldSpec) -> CheckOutcome {
    Subject::new(k).nerve_homology(f)
}

pub fn check_delta_iso_nerve(k: &SimplicialComplex) -> CheckOutcome {
    Subject::new(k).delta_iso_nerve()
}

pub fn check_uct(k: &SimplicialComplex, p: u32) -> CheckOutcome {
    Subject::new(k).uct(p)
}
