//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always shown.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use isoperim::downset::{weight_stats, LatticeSet};
use isoperim::exact::{cmp_power_products, PowerProduct};
use isoperim::group::span;
use isoperim::harness::{
    build_example, run_verify, ExampleId, GeneratorPolicy, Mode, SplitMix64, Theorem,
    VerifyPlan, VerifyReport,
};
use isoperim::popular::{dim_dissociated, dim_independent};
use isoperim::{Frac, GeneratorSeq, GroupSet, GroupSpec, Outcome};

type Check = Result<String, String>;

const TIME_LIMIT: Duration = Duration::from_secs(60);

fn g(moduli: &[u32]) -> GroupSpec {
    GroupSpec::new(moduli.to_vec()).unwrap()
}

fn run(plan: VerifyPlan) -> Result<VerifyReport, String> {
    let label = plan.label();
    run_verify(&plan).map_err(|e| format!("{label}: {e}"))
}

fn no_violations(r: &VerifyReport, what: &str) -> Result<(), String> {
    if r.violation_count() == 0 && r.passed() {
        Ok(())
    } else {
        Err(format!(
            "{what}: {} violations, first {:?}",
            r.violation_count(),
            r.violations.first()
        ))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn claims_report() -> Result<(VerifyReport, Duration), String> {
    let start = Instant::now();
    let r = run(VerifyPlan::new(
        g(&[2, 2, 2, 2]),
        Theorem::ClaimsCompression,
        Mode::Exhaustive,
    ))?;
    Ok((r, start.elapsed()))
}

fn criterion_1(r: &VerifyReport, elapsed: Duration) -> Check {
    for key in [
        "claim-cardinality",
        "claim-boundary",
        "claim-boundary-per-generator",
        "claim-preservation",
    ] {
        let t = r.tally(key);
        ensure(t.violated == 0, || format!("{key}: {} violations", t.violated))?;
    }
    let sets = 65_535;
    ensure(r.tally("claim-cardinality").cases == sets * 4, || {
        format!("claim-cardinality covered {} cases", r.tally("claim-cardinality").cases)
    })?;
    ensure(elapsed <= TIME_LIMIT, || format!("took {elapsed:?}"))?;
    let pres = r.tally("claim-preservation");
    Ok(format!(
        "{sets} sets x 4 generators, {} per-generator checks, {} non-vacuous preservation checks, {:.1} s",
        r.tally("claim-boundary-per-generator").cases,
        pres.cases - pres.vacuous,
        elapsed.as_secs_f64()
    ))
}

fn criterion_2(r: &VerifyReport) -> Check {
    let t = r.tally("full-compress");
    ensure(t.violated == 0 && t.strict == 65_535, || {
        format!("full-compress tally {t:?}")
    })?;
    no_violations(r, "compression sweep")?;
    Ok(format!(
        "65535 single-pass results compressed along every generator; {} phi images are downsets",
        r.tally("phi-downset").strict
    ))
}

fn criterion_3() -> Check {
    let mut summary = Vec::new();
    let mut zero_witness = false;
    for moduli in [[2, 2, 2].as_slice(), &[3, 3], &[4, 4]] {
        let spec = g(moduli);
        let mut cases = 0;
        for theorem in [Theorem::BlBound, Theorem::Exp234] {
            for policy in [
                GeneratorPolicy::StandardBasis,
                GeneratorPolicy::RandomGenerating {
                    count: 50,
                    size: None,
                },
            ] {
                let plan = VerifyPlan::new(spec.clone(), theorem, Mode::Exhaustive)
                    .with_seed(0x5EED_0003)
                    .with_generators(policy.clone());
                let r = run(plan)?;
                no_violations(&r, &format!("{theorem} on {spec} ({policy})"))?;
                cases += r.cases_checked;
                if theorem == Theorem::BlBound
                    && moduli.len() == 3
                    && policy == GeneratorPolicy::StandardBasis
                {
                    zero_witness = r.equality_witnesses.iter().any(|w| {
                        w.outcome == Outcome::Equality
                            && w.set.as_ref().is_some_and(|a| a.len() == 1 && a.contains_index(0))
                            && w.lhs == "2^3"
                            && w.replay() == Ok(Outcome::Equality)
                    });
                }
            }
        }
        summary.push(format!("{spec}: {cases} cases"));
    }
    ensure(zero_witness, || "A = {0} in C_2^3 not among the equality witnesses".into())?;
    Ok(format!("{}; A={{0}} in C_2^3 is an equality witness", summary.join(", ")))
}

fn criterion_4() -> Check {
    let c2c4 = g(&[2, 4]);
    let exhaustive = run(VerifyPlan::new(c2c4.clone(), Theorem::Generalcase, Mode::Exhaustive))?;
    no_violations(&exhaustive, "generalcase on C_2×C_4")?;
    let mut cases = exhaustive.cases_checked;
    for moduli in [[2, 4, 4], [3, 3, 3]] {
        let plan = VerifyPlan::new(g(&moduli), Theorem::Generalcase, Mode::Sample)
            .with_seed(0x5EED_0004)
            .with_samples(100_000);
        let r = run(plan)?;
        no_violations(&r, "generalcase samples")?;
        cases += r.cases_checked;
    }
    // A = C_2^2 spanned by an independent S with d = 2: |A| = 4 = 4^{(1/2)·1·2}
    let basis = vec![vec![1, 0], vec![0, 2]];
    let plan = VerifyPlan::new(c2c4.clone(), Theorem::Generalcase, Mode::Exhaustive)
        .with_generators(GeneratorPolicy::FixedList {
            elements: basis.clone(),
        })
        .with_max_witnesses(1000);
    let r = run(plan)?;
    no_violations(&r, "generalcase on C_2×C_4 with S = {(1,0),(0,2)}")?;
    let s = GeneratorSeq::new(
        &c2c4,
        basis.iter().map(|c| c2c4.element(c).unwrap()).collect(),
    )
    .unwrap();
    let h = span(&s);
    let found = r.equality_witnesses.iter().any(|w| {
        w.set.as_ref() == Some(&h) && w.lhs == "4^1" && w.rhs == "4^1"
    });
    ensure(found, || "A = <(1,0),(0,2)> not among the equality witnesses".into())?;
    let square = run(VerifyPlan::new(g(&[2, 2]), Theorem::Generalcase, Mode::Exhaustive))?;
    let full = GroupSet::full(&g(&[2, 2]));
    ensure(
        square.equality_witnesses.iter().any(|w| w.set.as_ref() == Some(&full)),
        || "A = C_2^2 with its basis is not an equality case".into(),
    )?;
    Ok(format!(
        "{cases} cases; equality at A = C_2^2 (inside C_2×C_4 and as C_2^2 itself)"
    ))
}

fn criterion_5() -> Check {
    let plan = VerifyPlan::new(g(&[3, 3]), Theorem::Cosetdecomp, Mode::Exhaustive)
        .with_generators(GeneratorPolicy::AllSubsets);
    let r = run(plan)?;
    no_violations(&r, "cosetdecomp on C_3^2")?;
    ensure(r.cases_checked == 511 * 511, || {
        format!("{} cases instead of 511^2", r.cases_checked)
    })?;
    Ok(format!(
        "511 x 511 = {} cases, {} vacuous",
        r.cases_checked, r.vacuous
    ))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let r = run(VerifyPlan::new(g(&[3, 3, 3]), Theorem::Avweight, Mode::Exhaustive)
        .with_max_witnesses(10_000))?;
    no_violations(&r, "avweight on [0,2]^3")?;
    ensure(
        r.notes.iter().any(|n| n.contains("980 downsets")),
        || format!("downset count missing from notes {:?}", r.notes),
    )?;
    let found: BTreeSet<Vec<Vec<u32>>> = r
        .equality_witnesses
        .iter()
        .map(|w| w.lattice.as_ref().unwrap().points().cloned().collect())
        .collect();
    let mut expected = BTreeSet::new();
    for j in 0u32..8 {
        let bounds: Vec<u32> = (0..3).map(|i| j >> i & 1).collect();
        expected.insert(LatticeSet::boxed(&bounds).points().cloned().collect::<Vec<_>>());
    }
    ensure(found == expected && r.tally("avweight").equality == 8, || {
        format!("equality cases {found:?}")
    })?;
    for n in 1..=10usize {
        let cube = LatticeSet::boxed(&vec![1; n]);
        let s = weight_stats(&cube).map_err(|e| e.to_string())?;
        ensure(
            s.check.outcome == Outcome::Equality && s.mean_weight == Frac::new(n as i64, 2),
            || format!("{{0,1}}^{n}: {s:?}"),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "980 downsets (979 non-empty), equality exactly at the 8 sets {{0,1}}^J x {{0}}; {{0,1}}^n tight for n = 1..10; {:.1} s",
        elapsed.as_secs_f64()
    ))
}

fn criterion_7() -> Check {
    let plan = VerifyPlan::new(g(&[5, 5, 5]), Theorem::Lwplus, Mode::Sample)
        .with_seed(0x5EED_0007)
        .with_samples(10_000);
    let r = run(plan)?;
    no_violations(&r, "lwplus on [0,4]^3")?;
    ensure(
        r.tally("lwplus").cases == 10_000 && r.tally("loomis-whitney").cases == 10_000,
        || "wrong case count".into(),
    )?;
    // |A| = 5 in dimension 3 with every projection of size 3: LW+ would need
    // 4^{15−9} <= 5^5
    let needed = cmp_power_products(&PowerProduct::pow(5, 5), &PowerProduct::pow(4, 6));
    ensure(needed == std::cmp::Ordering::Less && 4096 > 3125, || {
        "4^6 > 5^5 not reproduced".into()
    })?;
    Ok("10000 random subsets pass LW+ and Loomis-Whitney; 4^6 = 4096 > 3125 = 5^5 rules out |A| = 5 with projections 3,3,3".into())
}

fn criterion_8() -> Check {
    let cases: [(ExampleId, [u64; 3], u64, u64); 3] = [
        (ExampleId::Ex2, [2, 4, 2], 7, 12),
        (ExampleId::Ex2, [3, 4, 2], 17, 32),
        (ExampleId::Ex3, [5, 2, 3], 8, 12),
    ];
    for (id, params, size, boundary) in cases {
        let e = build_example(id, &params).map_err(|e| e.to_string())?;
        ensure(
            e.computed.set_size == size
                && e.computed.boundary == boundary
                && e.computed == e.expected,
            || format!("{id} {params:?}: {:?}", e.computed),
        )?;
    }
    let e = build_example(ExampleId::Ex1, &[2, 2, 6]).map_err(|e| e.to_string())?;
    ensure(
        e.computed.gamma == Frac::new(1, 2)
            && e.computed.generator_count == 8
            && e.computed.boundary == 16,
        || format!("ex1: {:?}", e.computed),
    )?;
    Ok("ex2 (2,4,2): 7, 12; ex2 (3,4,2): 17, 32; ex3 (5,2,3): 8, 12; ex1 (2,2,6): |S| = 8, gamma = 1/2".into())
}

fn criterion_9() -> Check {
    let mut cases = 0;
    for moduli in [[2, 2, 2, 2, 2].as_slice(), &[3, 3, 3]] {
        let plan = VerifyPlan::new(g(moduli), Theorem::Repa, Mode::Sample)
            .with_seed(0x5EED_0009)
            .with_samples(100)
            .with_gammas(vec![Frac::new(1, 4), Frac::new(1, 2), Frac::new(1, 1)]);
        let r = run(plan)?;
        no_violations(&r, "repa")?;
        cases += r.cases_checked;
    }
    let e = build_example(ExampleId::Ex4, &[2, 4, 2]).map_err(|e| e.to_string())?;
    ensure(e.computed.popular_dim == Some(4), || {
        format!("ex4 dim {:?}", e.computed.popular_dim)
    })?;
    Ok(format!(
        "{cases} (A, gamma) cases without violation; ex4 (2,4,2) has dim_I(P_gamma(A)) = 4 at gamma = 4/7"
    ))
}

fn dims(p: &GroupSet) -> Result<(usize, usize), String> {
    let i = dim_independent(p).map_err(|e| e.to_string())?;
    let d = dim_dissociated(p).map_err(|e| e.to_string())?;
    Ok((i.value, d.value))
}

fn criterion_10() -> Check {
    let cube = g(&[2, 2, 2]);
    for mask in 0u64..256 {
        let p = GroupSet::from_mask(&cube, mask).without_zero();
        let (i, d) = dims(&p)?;
        ensure(i == d, || format!("C_2^3 mask {mask:#x}: dim_I {i}, dim_D {d}"))?;
    }
    let mut rng = SplitMix64::new(0x5EED_0010);
    let c3 = g(&[3, 3]);
    for _ in 0..1000 {
        let p = rng.subset(&c3).without_zero();
        let (i, d) = dims(&p)?;
        ensure(i == d, || format!("C_3^2 {p:?}: dim_I {i}, dim_D {d}"))?;
    }
    let c4 = g(&[4, 4]);
    let mut strict = 0;
    for _ in 0..1000 {
        let p = rng.subset(&c4).without_zero();
        let (i, d) = dims(&p)?;
        ensure(i <= d, || format!("C_4^2 {p:?}: dim_I {i}, dim_D {d}"))?;
        strict += (i < d) as u32;
    }
    Ok(format!(
        "256 subsets of C_2^3 and 1000 of C_3^2 have dim_I = dim_D; 1000 of C_4^2 have dim_I <= dim_D ({strict} strict)"
    ))
}

fn main() -> ExitCode {
    let mut failures = 0;
    let mut report = |id: u32, name: &str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("PASS {id:>2} {name}: {msg} [{secs:.2} s]"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {id:>2} {name}: {msg} [{secs:.2} s]");
            }
        }
    };
    let claims = claims_report();
    report(1, "compression claims, exhaustive C_2^4", &mut || {
        let (r, t) = claims.as_ref().map_err(Clone::clone)?;
        criterion_1(r, *t)
    });
    report(2, "single-pass compression", &mut || {
        let (r, _) = claims.as_ref().map_err(Clone::clone)?;
        criterion_2(r)
    });
    report(3, "exponent 2/3/4 bound and log bound", &mut criterion_3);
    report(4, "independent generators bound", &mut criterion_4);
    report(5, "coset decomposition, all S in C_3^2", &mut criterion_5);
    report(6, "average weight of downsets", &mut criterion_6);
    report(7, "LW+ and Loomis-Whitney", &mut criterion_7);
    report(8, "example reproductions", &mut criterion_8);
    report(9, "popular differences dimension bound", &mut criterion_9);
    report(10, "dimension coincidence", &mut criterion_10);
    if failures == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria fail");
        ExitCode::FAILURE
    }
}
