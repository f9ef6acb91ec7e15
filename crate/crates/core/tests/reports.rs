use isoperim::boundary::power_of_gamma_verdict;
use isoperim::harness::{
    emit_report, run_plans, run_verify, Format, GeneratorPolicy, Mode, Theorem, VerifyPlan,
    VerifyReport, Witness,
};
use isoperim::{Frac, GroupSpec, Outcome};

fn g(m: &[u32]) -> GroupSpec {
    GroupSpec::new(m.to_vec()).unwrap()
}

fn plans() -> Vec<VerifyPlan> {
    vec![
        VerifyPlan::new(g(&[2, 2, 2]), Theorem::BlBound, Mode::Exhaustive),
        VerifyPlan::new(g(&[3, 3]), Theorem::Exp234, Mode::Sample)
            .with_seed(11)
            .with_samples(300)
            .with_generators(GeneratorPolicy::RandomGenerating {
                count: 4,
                size: None,
            }),
        VerifyPlan::new(g(&[2, 4]), Theorem::Generalcase, Mode::Exhaustive),
        VerifyPlan::new(g(&[3, 3]), Theorem::Cosetdecomp, Mode::Exhaustive),
        VerifyPlan::new(g(&[2, 2, 2]), Theorem::ClaimsCompression, Mode::Exhaustive),
        VerifyPlan::new(g(&[3, 3, 2]), Theorem::Avweight, Mode::Sample).with_samples(100),
        VerifyPlan::new(g(&[3, 3]), Theorem::Avweight, Mode::Exhaustive),
        VerifyPlan::new(g(&[2, 2, 2]), Theorem::Lwplus, Mode::Exhaustive),
        VerifyPlan::new(g(&[3, 3]), Theorem::Repa, Mode::Sample)
            .with_samples(40)
            .with_gammas(vec![Frac::new(1, 3), Frac::new(2, 3)]),
    ]
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut r: VerifyReport| {
        r.wall_time_ms = 0;
        emit_report(&r, Format::Json)
    };
    let a = strip(run_plans(&plans()).unwrap());
    let b = strip(run_plans(&plans()).unwrap());
    assert_eq!(a, b);
}

#[test]
fn every_witness_replays_from_json() {
    let report = run_plans(&plans()).unwrap();
    assert!(report.passed());
    assert!(!report.equality_witnesses.is_empty());
    let json = emit_report(&report, Format::Json);
    let back: VerifyReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
    let kinds: std::collections::BTreeSet<&str> = back
        .equality_witnesses
        .iter()
        .map(|w| w.theorem.as_str())
        .collect();
    for key in ["bl-bound", "avweight", "lwplus", "loomis-whitney", "group-avweight"] {
        assert!(kinds.contains(key), "no {key} witness in {kinds:?}");
    }
    for w in back.violations.iter().chain(&back.equality_witnesses) {
        assert_eq!(w.replay().unwrap(), w.outcome, "{w:?}");
    }
}

#[test]
fn claim_witnesses_replay() {
    let spec = g(&[2, 4]);
    let a = isoperim::GroupSet::from_indices(&spec, [1, 6]);
    let gens = isoperim::GeneratorSeq::standard(&spec);
    for (key, indices) in [
        ("claim-boundary", vec![0]),
        ("claim-boundary-per-generator", vec![1, 0]),
        ("full-compress", vec![]),
        ("group-avweight", vec![]),
    ] {
        let w = Witness {
            theorem: key.into(),
            outcome: Outcome::Strict,
            set: Some(a.clone()),
            lattice: None,
            gens: Some(gens.clone()),
            indices,
            gamma: None,
            lhs: String::new(),
            rhs: String::new(),
        };
        assert!(w.replay().unwrap().holds(), "{key}");
    }
}

/// The checker must flag a bound that is false: `|A| >= |G|^γ` in `C_5^3`
/// fails for the cube `[0,1]^3` (|A| = 8 < 125^{1/2}).
#[test]
fn false_bound_is_reported_as_violation() {
    let check = power_of_gamma_verdict(12, 8, 3, 125);
    assert_eq!(check.gamma, Some(Frac::new(1, 2)));
    assert_eq!(check.outcome, Outcome::Violated);
    assert_eq!((check.lhs.as_str(), check.rhs.as_str()), ("8^2", "125^1"));
}

#[test]
fn tsv_rows_cover_every_class() {
    let r = run_verify(&VerifyPlan::new(g(&[2, 2]), Theorem::Lwplus, Mode::Exhaustive)).unwrap();
    let tsv = emit_report(&r, Format::Tsv);
    let rows: Vec<Vec<&str>> = tsv.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 2 * 4);
    let total: u64 = rows
        .iter()
        .filter(|r| r[0] == "lwplus")
        .map(|r| r[2].parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 15);
}
