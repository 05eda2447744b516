//! Executable forms of the depth–homology statements, plus sweeps over
//! families of complexes.

mod checks;
mod enumerate;
mod sweep;

pub use checks::{
    check_alexander_duality, check_delta_iso_nerve, check_depth_vanishing, check_few_facets,
    check_generator_count, check_hartshorne, check_nerve, check_uct, CheckId, CheckOutcome,
    Expectation, Status, Subject,
};
pub use enumerate::{enumerate_complexes, random_complex, MAX_EXHAUSTIVE_N};
pub use sweep::{sweep, SweepConfig, SweepMode, SweepReport, Tally};

use serde::Serialize;

use crate::fixtures::{reisner_rp2, verify_rp2, FixtureCheck};
use crate::homology::{reduced_homology, FieldSpec};
use crate::stanley_reisner::delta_of_complex;
use crate::depth::is_cohen_macaulay_reisner;

/// Everything asserted about the RP² fixture: structural self-check,
/// field-dependent depth and homology, and every check with its expected
/// polarity.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureSuite {
    pub claims: Vec<FixtureCheck>,
    pub outcomes: Vec<CheckOutcome>,
}

impl FixtureSuite {
    pub fn all_met(&self) -> bool {
        self.claims.iter().all(|c| c.passed) && self.outcomes.iter().all(|o| !o.unexpected())
    }
}

pub fn rp2_fixture_suite() -> FixtureSuite {
    const Q: FieldSpec = FieldSpec::Rationals;
    const F2: FieldSpec = FieldSpec::PrimeField(2);
    const F3: FieldSpec = FieldSpec::PrimeField(3);
    const Z: FieldSpec = FieldSpec::Integers;

    let k = reisner_rp2();
    let mut claims = verify_rp2(&k).checks;
    let mut push = |name, passed, detail: String| claims.push(FixtureCheck { name, passed, detail });

    let subject = Subject::new(&k);
    match subject.depth(Q) {
        Ok(d) => push("depth over Q is 3, Cohen-Macaulay", d.depth == 3 && d.cohen_macaulay, d.to_string()),
        Err(e) => push("depth over Q is 3, Cohen-Macaulay", false, e.to_string()),
    }
    match subject.depth(F2) {
        Ok(d) => push(
            "depth over F2 is 2 (pdim 4), not Cohen-Macaulay",
            d.depth == 2 && d.pdim == 4 && !d.cohen_macaulay,
            d.to_string(),
        ),
        Err(e) => push("depth over F2 is 2 (pdim 4), not Cohen-Macaulay", false, e.to_string()),
    }
    let reisner = (is_cohen_macaulay_reisner(&k, Q), is_cohen_macaulay_reisner(&k, F2));
    push(
        "link criterion agrees (CM over Q, not over F2)",
        matches!(reisner, (Ok(true), Ok(false))),
        format!("{reisner:?}"),
    );

    match delta_of_complex(&k) {
        Ok(delta) => {
            let hz = reduced_homology(&delta, Z);
            let hq = reduced_homology(&delta, Q);
            let h2 = reduced_homology(&delta, F2);
            push("H~1(Delta; Z) = Z/2", hz.group(1).render(Z) == "Z/2", hz.to_string());
            push("H~1(Delta; Q) = 0", hq.group(1).is_zero(), hq.to_string());
            push("H~1(Delta; F2) != 0", !h2.group(1).is_zero(), h2.to_string());
        }
        Err(e) => push("Delta is defined", false, e.to_string()),
    }

    let mut outcomes = Vec::new();
    for f in [Q, F2, F3, Z] {
        for check in CheckId::ALL {
            if matches!(check, CheckId::DeltaIsoNerve | CheckId::Uct) {
                continue;
            }
            let o = subject.run(check, f);
            outcomes.push(if check == CheckId::DepthVanishing && f == Z {
                o.expecting(Expectation::Fail)
            } else {
                o
            });
        }
    }
    outcomes.push(subject.delta_iso_nerve());
    outcomes.extend([2, 3].map(|p| subject.uct(p)));
    FixtureSuite { claims, outcomes }
}
