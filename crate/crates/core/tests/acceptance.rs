//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use spectral_delta::depth::depth;
use spectral_delta::fixtures::{reisner_rp2, verify_rp2};
use spectral_delta::homology::{smith_normal_form, verify_snf, IntegerMatrix};
use spectral_delta::theorems::{
    check_alexander_duality, check_depth_vanishing, check_uct, enumerate_complexes, random_complex,
    sweep, CheckId, Status, SweepConfig, SweepMode, SweepReport,
};
use spectral_delta::{
    delta_of_complex, is_cohen_macaulay_reisner, nerve, reduced_homology, relative_homology,
    FieldSpec, SimplicialComplex,
};

const Q: FieldSpec = FieldSpec::Rationals;
const F2: FieldSpec = FieldSpec::PrimeField(2);
const F3: FieldSpec = FieldSpec::PrimeField(3);
const Z: FieldSpec = FieldSpec::Integers;
const FIELDS: [FieldSpec; 3] = [Q, F2, F3];

// Pinned budgets and corpus sizes.
const FIXTURE_BUDGET: Duration = Duration::from_secs(10);
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
const RANDOM_N: usize = 8;
const RANDOM_SEED: u64 = 1;
const RANDOM_COUNT: usize = 500;
const SNF_SEED: u64 = 2024;
const SNF_SAMPLES: usize = 1000;
const SNF_MAX_DIM: usize = 12;
const SNF_ENTRY_BOUND: i64 = 9;

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, id: u32, what: &str, ok: bool, detail: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id}: {what} — {detail}");
        self.failures += usize::from(!ok);
    }
}

fn small_corpus() -> Vec<SimplicialComplex> {
    (1..=5).flat_map(|n| enumerate_complexes(n).expect("n <= 5")).collect()
}

fn random_corpus() -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    (0..RANDOM_COUNT).map(|_| random_complex(RANDOM_N, &mut rng)).collect()
}

/// Sweeps over n = 1..=5 exhaustively and the seeded random sample.
fn corpus_sweeps() -> (Vec<SweepReport>, Duration) {
    let start = Instant::now();
    let mut reports = Vec::new();
    let modes = (1..=5)
        .map(|n| (n, SweepMode::Exhaustive))
        .chain([(RANDOM_N, SweepMode::Random { seed: RANDOM_SEED, count: RANDOM_COUNT })]);
    for (n, mode) in modes {
        let mut cfg = SweepConfig::new(n, mode);
        cfg.fields = vec![Q, F2, F3, Z];
        reports.push(sweep(&cfg).expect("valid sweep"));
    }
    (reports, start.elapsed())
}

/// Sums fail/unexpected counts of `check` over the given coefficient slots.
fn violations(reports: &[SweepReport], check: CheckId, fields: &[Option<FieldSpec>]) -> (usize, usize, usize) {
    let mut evaluated = 0;
    let mut failed = 0;
    let mut unexpected = 0;
    for r in reports {
        for &f in fields {
            let t = r.tally(check, f).expect("slot present");
            evaluated += t.pass + t.fail;
            failed += t.fail;
            unexpected += t.unexpected;
        }
    }
    (evaluated, failed, unexpected)
}

fn criterion_1(g: &mut Gate) {
    let start = Instant::now();
    let k = reisner_rp2();
    let q = depth(&k, Q);
    let f2 = depth(&k, F2);
    let elapsed = start.elapsed();
    let ok = matches!(&q, Ok(d) if d.depth == 3 && d.cohen_macaulay)
        && matches!(&f2, Ok(d) if d.depth == 2 && !d.cohen_macaulay)
        && verify_rp2(&k).passed()
        && elapsed < FIXTURE_BUDGET;
    g.report(
        1,
        "RP2 depth is characteristic dependent",
        ok,
        format!("Q: {}; F2: {}; {elapsed:.2?}", show(&q), show(&f2)),
    );
}

fn criterion_2(g: &mut Gate) {
    let k = reisner_rp2();
    let Ok(delta) = delta_of_complex(&k) else {
        g.report(2, "RP2 torsion witness", false, "delta undefined".into());
        return;
    };
    let hz = reduced_homology(&delta, Z).group(1);
    let hq = reduced_homology(&delta, Q).group(1);
    let h2 = reduced_homology(&delta, F2).group(1);
    let z_fails = check_depth_vanishing(&k, Z).status == Status::Fail;
    let fields_pass = FIELDS.iter().all(|&f| check_depth_vanishing(&k, f).status == Status::Pass);
    let ok = hz.render(Z) == "Z/2" && hq.is_zero() && !h2.is_zero() && z_fails && fields_pass;
    g.report(
        2,
        "RP2 torsion witness",
        ok,
        format!(
            "H~1(Z)={} H~1(Q)={} H~1(F2)={}; vanishing fails over Z: {z_fails}, holds over fields: {fields_pass}",
            hz.render(Z),
            hq.render(Q),
            h2.render(F2)
        ),
    );
}

fn field_slots() -> Vec<Option<FieldSpec>> {
    FIELDS.iter().copied().map(Some).collect()
}

fn criterion_3(g: &mut Gate, reports: &[SweepReport], elapsed: Duration) {
    let (evaluated, failed, unexpected) = violations(reports, CheckId::DepthVanishing, &field_slots());
    let ok = failed == 0 && unexpected == 0 && evaluated > 0 && elapsed < SWEEP_BUDGET;
    g.report(
        3,
        "depth bounds vanishing of low homology (n <= 5 exhaustive + random n = 8)",
        ok,
        format!("{evaluated} instances, {failed} violations, sweep time {elapsed:.1?}"),
    );
}

fn criterion_4(g: &mut Gate, reports: &[SweepReport]) {
    let (evaluated, failed, _) = violations(reports, CheckId::Hartshorne, &field_slots());
    g.report(
        4,
        "depth >= 2 forces connectedness",
        failed == 0 && evaluated > 0,
        format!("{evaluated} instances, {failed} violations"),
    );
}

fn criterion_5(g: &mut Gate, corpus: &[SimplicialComplex]) {
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|k| {
            let delta = delta_of_complex(k).ok()?;
            let nv = nerve(k.facets()).ok()?;
            if delta != nv {
                return Some(format!("delta != nerve on {:?}", k.facets()));
            }
            for f in [Z, Q, F2, F3] {
                let hk = reduced_homology(k, f);
                let hd = reduced_homology(&delta, f);
                let hn = reduced_homology(&nv, f);
                if !hk.same_groups(&hd) || !hk.same_groups(&hn) {
                    return Some(format!("homology mismatch over {f} on {:?}", k.facets()));
                }
            }
            None
        })
        .collect();
    g.report(
        5,
        "delta, facet nerve and complex share homology; delta equals the nerve",
        bad.is_empty(),
        format!("{} complexes, {} mismatches {}", corpus.len(), bad.len(), bad.first().cloned().unwrap_or_default()),
    );
}

fn criterion_6(g: &mut Gate, reports: &[SweepReport]) {
    let (e1, f1, _) = violations(reports, CheckId::FewFacets, &field_slots());
    let (e2, f2, _) = violations(reports, CheckId::GeneratorCount, &field_slots());
    g.report(
        6,
        "facet-count and generator-count vanishing",
        f1 == 0 && f2 == 0 && e1 > 0 && e2 > 0,
        format!("few-facets {e1} instances/{f1} violations; generator-count {e2}/{f2}"),
    );
}

fn criterion_7(g: &mut Gate, reports: &[SweepReport]) {
    let small = &reports[..5];
    let (evaluated, failed, _) = violations(small, CheckId::AlexanderDuality, &field_slots());
    let rp2 = reisner_rp2();
    let fixture_ok = FIELDS.iter().all(|&f| check_alexander_duality(&rp2, f).status == Status::Pass);
    g.report(
        7,
        "Alexander duality reflects reduced Betti numbers",
        failed == 0 && evaluated > 0 && fixture_ok,
        format!("{evaluated} instances, {failed} violations; RP2 over Q/F2/F3: {fixture_ok}"),
    );
}

fn criterion_8(g: &mut Gate, reports: &[SweepReport]) {
    let slots = [Some(F2), Some(F3)];
    let (evaluated, failed, _) = violations(reports, CheckId::Uct, &slots);
    let rp2 = reisner_rp2();
    let fixture_ok = [2, 3].iter().all(|&p| check_uct(&rp2, p).status == Status::Pass);
    g.report(
        8,
        "universal-coefficient bookkeeping at p = 2, 3",
        failed == 0 && evaluated > 0 && fixture_ok,
        format!("{evaluated} instances, {failed} violations; RP2: {fixture_ok}"),
    );
}

fn criterion_9(g: &mut Gate) {
    let mut rng = ChaCha8Rng::seed_from_u64(SNF_SEED);
    let mut failures = Vec::new();
    for i in 0..SNF_SAMPLES {
        let rows = rng.gen_range(1..=SNF_MAX_DIM);
        let cols = rng.gen_range(1..=SNF_MAX_DIM);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-SNF_ENTRY_BOUND..=SNF_ENTRY_BOUND)).collect())
            .collect();
        let a = IntegerMatrix::from_rows(&data);
        if let Err(e) = verify_snf(&a, &smith_normal_form(&a)) {
            failures.push(format!("sample {i}: {e}"));
        }
    }
    g.report(
        9,
        "Smith normal form certificates",
        failures.is_empty(),
        format!(
            "{SNF_SAMPLES} matrices up to {SNF_MAX_DIM}x{SNF_MAX_DIM}, {} failures {}",
            failures.len(),
            failures.first().cloned().unwrap_or_default()
        ),
    );
}

fn criterion_10(g: &mut Gate, small: &[SimplicialComplex]) {
    let bad: Vec<String> = small
        .par_iter()
        .flat_map_iter(|k| {
            FIELDS.iter().filter_map(move |&f| {
                let hochster = depth(k, f).map(|d| d.cohen_macaulay);
                let reisner = is_cohen_macaulay_reisner(k, f);
                (hochster != reisner).then(|| format!("{f} on {:?}: {hochster:?} vs {reisner:?}", k.facets()))
            })
        })
        .collect();
    g.report(
        10,
        "Hochster depth agrees with the link criterion for Cohen-Macaulayness",
        bad.is_empty(),
        format!("{} instances, {} disagreements {}", small.len() * FIELDS.len(), bad.len(), bad.first().cloned().unwrap_or_default()),
    );
}

fn criterion_11(g: &mut Gate, small: &[SimplicialComplex]) {
    let bad: Vec<String> = small
        .par_iter()
        .filter_map(|k| {
            let simplex = SimplicialComplex::full_simplex(k.n());
            let pair = match relative_homology(&simplex, k, Z) {
                Ok(h) => h,
                Err(e) => return Some(e.to_string()),
            };
            let reduced = reduced_homology(k, Z);
            let top = pair.max_degree().max(reduced.max_degree() + 1);
            (1..=top)
                .find(|&t| pair.group(t) != reduced.group(t - 1))
                .map(|t| format!("degree {t} on {:?}", k.facets()))
        })
        .collect();
    g.report(
        11,
        "pair homology against the full simplex shifts reduced homology",
        bad.is_empty(),
        format!("{} complexes, {} mismatches {}", small.len(), bad.len(), bad.first().cloned().unwrap_or_default()),
    );
}

fn main() -> ExitCode {
    let mut g = Gate { failures: 0 };
    criterion_1(&mut g);
    criterion_2(&mut g);
    let (reports, elapsed) = corpus_sweeps();
    criterion_3(&mut g, &reports, elapsed);
    criterion_4(&mut g, &reports);
    let small = small_corpus();
    let mut full = small.clone();
    full.extend(random_corpus());
    full.push(reisner_rp2());
    criterion_5(&mut g, &full);
    criterion_6(&mut g, &reports);
    criterion_7(&mut g, &reports);
    criterion_8(&mut g, &reports);
    criterion_9(&mut g);
    criterion_10(&mut g, &small);
    criterion_11(&mut g, &small);
    println!("acceptance: {} of 11 criteria failed", g.failures);
    if g.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn show<T: std::fmt::Display, E: std::fmt::Display>(r: &Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}
