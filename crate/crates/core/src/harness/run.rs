//! The plan runner.

use std::time::Instant;

use crate::boundary::{
    bl_bound_verdict, count_boundary, cosetdecomp_verdict, elementary_rank, generalcase_verdict,
    power_of_gamma_verdict,
};
use crate::compression::{
    compress_along, full_compress, group_avg_weight, is_compressed, per_generator_boundary,
    phi_embed, CompressionContext,
};
use crate::downset::{avg_weight_theorem, is_downset, loomis_whitney, lw_plus, LatticeSet};
use crate::error::{Error, Result};
use crate::group::{is_independent, span, GeneratorSeq, GroupSet, GroupSpec};
use crate::harness::downsets::enumerate_downsets;
use crate::harness::plan::{GeneratorPolicy, Mode, Theorem, VerifyPlan};
use crate::harness::report::{VerifyReport, Witness};
use crate::harness::rng::SplitMix64;
use crate::harness::sweep::{sweep_boundaries, sweep_subsets};
use crate::popular::theorem_repa_capped;
use crate::verdict::{BoundCheck, Outcome};

/// Attempts per random generator sequence before giving up.
const MAX_GENERATOR_ATTEMPTS: usize = 100_000;

/// Runs a plan. Sampled families depend only on the plan, so two runs of the
/// same plan give identical reports apart from `wall_time_ms`.
pub fn run_verify(plan: &VerifyPlan) -> Result<VerifyReport> {
    plan.validate()?;
    let start = Instant::now();
    let mut rec = Recorder::new(plan.max_witnesses);
    let mut rng = SplitMix64::new(plan.seed);
    match plan.theorem {
        Theorem::Exp234 | Theorem::BlBound | Theorem::Generalcase | Theorem::Cosetdecomp => {
            run_group_bound(plan, &mut rng, &mut rec)?
        }
        Theorem::ClaimsCompression => run_claims(plan, &mut rng, &mut rec)?,
        Theorem::Avweight => run_avweight(plan, &mut rng, &mut rec)?,
        Theorem::Lwplus => run_lwplus(plan, &mut rng, &mut rec),
        Theorem::Repa => run_repa(plan, &mut rng, &mut rec)?,
    }
    if !plan.theorem.uses_generators() && plan.generators != GeneratorPolicy::StandardBasis {
        rec.report
            .note(format!("{}: generator policy ignored", plan.theorem));
    }
    let mut report = rec.report;
    report.plans.push(plan.label());
    report.cases_checked = report.tallies.values().map(|t| t.cases).sum();
    report.vacuous = report.tallies.values().map(|t| t.vacuous).sum();
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs several plans and merges their reports.
pub fn run_plans(plans: &[VerifyPlan]) -> Result<VerifyReport> {
    let mut total = VerifyReport::default();
    for p in plans {
        total.merge(run_verify(p)?);
    }
    Ok(total)
}

struct Recorder {
    report: VerifyReport,
    max: usize,
}

impl Recorder {
    fn new(max: usize) -> Self {
        Recorder {
            report: VerifyReport::default(),
            max,
        }
    }

    /// Tallies an outcome; the witness is built only when it will be kept.
    fn record(
        &mut self,
        key: &str,
        outcome: Outcome,
        keep_equality: bool,
        witness: impl FnOnce() -> Witness,
    ) {
        self.report
            .tallies
            .entry(key.to_string())
            .or_default()
            .record(outcome);
        let list = match outcome {
            Outcome::Violated => &mut self.report.violations,
            Outcome::Equality if keep_equality => &mut self.report.equality_witnesses,
            _ => return,
        };
        if list.len() < self.max {
            list.push(witness());
        }
    }

    fn record_check(
        &mut self,
        key: &str,
        check: &BoundCheck,
        set: Option<&GroupSet>,
        lattice: Option<&LatticeSet>,
        gens: Option<&GeneratorSeq>,
    ) {
        self.record(key, check.outcome, true, || {
            bound_witness(key, check, set.cloned(), lattice.cloned(), gens)
        });
    }
}

fn bound_witness(
    key: &str,
    check: &BoundCheck,
    set: Option<GroupSet>,
    lattice: Option<LatticeSet>,
    gens: Option<&GeneratorSeq>,
) -> Witness {
    Witness {
        theorem: key.to_string(),
        outcome: check.outcome,
        set,
        lattice,
        gens: gens.cloned(),
        indices: vec![],
        gamma: check.gamma,
        lhs: check.lhs.clone(),
        rhs: check.rhs.clone(),
    }
}

#[derive(Clone, Copy)]
struct Needs {
    generating: bool,
    independent: bool,
}

impl Needs {
    fn of(theorem: Theorem) -> Self {
        let (generating, independent) = match theorem {
            Theorem::Exp234 | Theorem::BlBound => (true, false),
            Theorem::Generalcase => (false, true),
            Theorem::ClaimsCompression | Theorem::Avweight => (true, true),
            _ => (false, false),
        };
        Needs {
            generating,
            independent,
        }
    }

    fn check(self, gens: &GeneratorSeq) -> Result<()> {
        if self.generating && span(gens).len() != gens.spec().order() {
            return Err(Error::NotGenerating);
        }
        if self.independent && !is_independent(gens) {
            return Err(Error::Dependent);
        }
        Ok(())
    }
}

fn random_generators(
    spec: &GroupSpec,
    needs: Needs,
    size: Option<usize>,
    rng: &mut SplitMix64,
) -> Result<GeneratorSeq> {
    let order = spec.order() as u64;
    for _ in 0..MAX_GENERATOR_ATTEMPTS {
        let k = match size {
            Some(k) => k,
            None if needs.independent => spec.num_factors(),
            None => spec.num_factors() + rng.below(3) as usize,
        };
        if k == 0 || k as u64 > order - 1 {
            return Err(Error::InvalidParameter(format!(
                "cannot draw {k} distinct non-zero generators in {spec}"
            )));
        }
        let mut picked = GroupSet::empty(spec);
        let mut elements = Vec::with_capacity(k);
        while elements.len() < k {
            let x = 1 + rng.below(order - 1) as usize;
            if !picked.contains_index(x) {
                picked.insert_index(x);
                elements.push(spec.element_at(x));
            }
        }
        let gens = GeneratorSeq::new(spec, elements)?;
        if needs.check(&gens).is_ok() {
            return Ok(gens);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no admissible generator sequence found in {spec} after {MAX_GENERATOR_ATTEMPTS} draws"
    )))
}

fn resolve_generators(
    plan: &VerifyPlan,
    rng: &mut SplitMix64,
    report: &mut VerifyReport,
) -> Result<Vec<GeneratorSeq>> {
    let spec = &plan.group;
    let needs = Needs::of(plan.theorem);
    match &plan.generators {
        GeneratorPolicy::StandardBasis => {
            let gens = GeneratorSeq::standard(spec);
            needs.check(&gens)?;
            Ok(vec![gens])
        }
        GeneratorPolicy::FixedList { elements } => {
            let elements = elements
                .iter()
                .map(|c| spec.element(c))
                .collect::<Result<Vec<_>>>()?;
            let gens = GeneratorSeq::new(spec, elements)?;
            if gens.is_empty() {
                return Err(Error::InvalidParameter("generator list is empty".into()));
            }
            needs.check(&gens)?;
            Ok(vec![gens])
        }
        GeneratorPolicy::RandomGenerating { count, size } => {
            let needs = Needs {
                generating: true,
                ..needs
            };
            (0..*count)
                .map(|_| random_generators(spec, needs, *size, rng))
                .collect()
        }
        GeneratorPolicy::AllSubsets => {
            let total = (1u64 << spec.order()) - 1;
            let all: Vec<GeneratorSeq> = (1..=total)
                .map(|m| GeneratorSeq::from_set(&GroupSet::from_mask(spec, m)))
                .filter(|g| needs.check(g).is_ok())
                .collect();
            report.note(format!(
                "{}: {} of {total} non-empty generator subsets of {spec} meet the hypothesis",
                plan.theorem,
                all.len()
            ));
            if all.is_empty() {
                return Err(Error::Hypothesis(format!(
                    "no subset of {spec} meets the hypothesis of {}",
                    plan.theorem
                )));
            }
            Ok(all)
        }
    }
}

/// A boundary theorem reduced to a function of `(∂_S(A), |A|)` for fixed `S`.
enum Kernel {
    Exp234 { rank: u64, order: u64 },
    Bl { order: u64, m: u64 },
    General { n: u64, d: u64 },
    Coset { h_order: u64, h_rank: u64 },
}

impl Kernel {
    fn for_group(theorem: Theorem, spec: &GroupSpec) -> Result<()> {
        match theorem {
            Theorem::Exp234 | Theorem::BlBound => {
                let rank = spec.rank().unwrap_or(0);
                if rank == 0 || !(2..=4).contains(&spec.exponent()) {
                    return Err(Error::Hypothesis(format!(
                        "{spec} is not homocyclic of exponent 2, 3 or 4"
                    )));
                }
            }
            Theorem::Cosetdecomp if !matches!(spec.exponent(), 2 | 3) => {
                return Err(Error::Hypothesis(format!(
                    "exponent of {spec} is not 2 or 3"
                )));
            }
            _ => {}
        }
        Ok(())
    }

    fn new(theorem: Theorem, gens: &GeneratorSeq) -> Self {
        let spec = gens.spec();
        let order = spec.order() as u64;
        match theorem {
            Theorem::Exp234 => Kernel::Exp234 {
                rank: spec.rank().expect("homocyclic") as u64,
                order,
            },
            Theorem::BlBound => Kernel::Bl {
                order,
                m: spec.exponent(),
            },
            Theorem::Generalcase => Kernel::General {
                n: gens.len() as u64,
                d: gens.min_order().expect("non-empty"),
            },
            Theorem::Cosetdecomp => {
                let h = span(gens).len();
                Kernel::Coset {
                    h_order: h as u64,
                    h_rank: elementary_rank(h, spec.exponent()),
                }
            }
            _ => unreachable!("not a boundary theorem"),
        }
    }

    fn eval(&self, boundary: u64, size: u64) -> BoundCheck {
        match *self {
            Kernel::Exp234 { rank, order } => power_of_gamma_verdict(boundary, size, rank, order),
            Kernel::Bl { order, m } => bl_bound_verdict(boundary, size, order, m),
            Kernel::General { n, d } => generalcase_verdict(boundary, size, n, d),
            Kernel::Coset { h_order, h_rank } => {
                cosetdecomp_verdict(boundary, size, h_order, h_rank)
            }
        }
    }
}

fn run_group_bound(plan: &VerifyPlan, rng: &mut SplitMix64, rec: &mut Recorder) -> Result<()> {
    let spec = &plan.group;
    Kernel::for_group(plan.theorem, spec)?;
    let key = plan.theorem.as_str();
    let families = resolve_generators(plan, rng, &mut rec.report)?;
    for gens in &families {
        let kernel = Kernel::new(plan.theorem, gens);
        match plan.mode {
            Mode::Exhaustive => sweep_boundaries(gens, |mask, size, boundary| {
                let check = kernel.eval(boundary, size);
                rec.record(key, check.outcome, true, || {
                    let a = GroupSet::from_mask(spec, mask);
                    bound_witness(key, &check, Some(a), None, Some(gens))
                });
            }),
            Mode::Sample => {
                let tables = gens.translation_tables();
                for _ in 0..plan.sample_size {
                    let a = rng.nonempty_subset(spec);
                    let boundary = count_boundary(&a, &tables).iter().sum();
                    let check = kernel.eval(boundary, a.len() as u64);
                    rec.record_check(key, &check, Some(&a), None, Some(gens));
                }
            }
        }
    }
    if plan.theorem == Theorem::Cosetdecomp {
        rec.report
            .note("cosetdecomp: S ⊆ {0} gives rk⟨S⟩ = 0 and is counted as vacuous");
    }
    Ok(())
}

/// One evaluated statement about compressions of a single set.
pub(crate) struct ClaimCase {
    pub key: &'static str,
    pub indices: Vec<usize>,
    pub outcome: Outcome,
    pub lhs: String,
    pub rhs: String,
    /// Equality cases are worth keeping as witnesses.
    pub bound: bool,
}

/// Predicate checks record a pass as `strict`.
fn predicate(key: &'static str, indices: Vec<usize>, ok: bool) -> ClaimCase {
    ClaimCase {
        key,
        indices,
        outcome: if ok { Outcome::Strict } else { Outcome::Violated },
        lhs: String::new(),
        rhs: String::new(),
        bound: false,
    }
}

fn at_least(key: &'static str, indices: Vec<usize>, lhs: u64, rhs: u64) -> ClaimCase {
    ClaimCase {
        key,
        indices,
        outcome: Outcome::at_least(lhs.cmp(&rhs)),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        bound: false,
    }
}

/// Checks the compression claims for one set:
///
/// * `claim-cardinality [i]`: `|[A]_i| = |A|`
/// * `claim-boundary [i]`: `∂_S(A) >= ∂_S([A]_i)`
/// * `claim-boundary-per-generator [i, j]`: the same for the `s_j` edges only
/// * `claim-preservation [i, j]`: `A` `j`-compressed implies `[A]_i` is
/// * `compressed-iff-fixed [i]`: `is_compressed(A, i) ⇔ [A]_i = A`
/// * `full-compress`, `full-compress-boundary`: one pass yields a compressed
///   set of the same size and no larger boundary
/// * `phi-downset`, `group-avweight`: the lattice image of that set is a
///   downset and its mean weight is at most `½ log₂|A|`
pub(crate) fn check_claims(
    a: &GroupSet,
    ctx: &CompressionContext,
    visit: &mut dyn FnMut(ClaimCase),
) -> Result<()> {
    let n = ctx.len();
    let before = per_generator_boundary(a, ctx);
    let total: u64 = before.iter().sum();
    let compressed = (0..n)
        .map(|i| is_compressed(a, ctx, i))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..n {
        let c = compress_along(a, ctx, i)?;
        visit(ClaimCase {
            lhs: a.len().to_string(),
            rhs: c.len().to_string(),
            ..predicate("claim-cardinality", vec![i], c.len() == a.len())
        });
        let after = per_generator_boundary(&c, ctx);
        visit(at_least("claim-boundary", vec![i], total, after.iter().sum()));
        for j in 0..n {
            visit(at_least(
                "claim-boundary-per-generator",
                vec![i, j],
                before[j],
                after[j],
            ));
        }
        for (j, &was) in compressed.iter().enumerate() {
            if was {
                let still = is_compressed(&c, ctx, j)?;
                visit(predicate("claim-preservation", vec![i, j], still));
            } else {
                visit(ClaimCase {
                    outcome: Outcome::Vacuous,
                    ..predicate("claim-preservation", vec![i, j], true)
                });
            }
        }
        visit(predicate(
            "compressed-iff-fixed",
            vec![i],
            compressed[i] == (c == *a),
        ));
    }
    let full = full_compress(a, ctx)?;
    let mut ok = full.len() == a.len();
    for i in 0..n {
        ok &= is_compressed(&full, ctx, i)?;
    }
    visit(predicate("full-compress", vec![], ok));
    visit(at_least(
        "full-compress-boundary",
        vec![],
        total,
        per_generator_boundary(&full, ctx).iter().sum(),
    ));
    if ok {
        let image = phi_embed(&full, ctx)?;
        visit(predicate(
            "phi-downset",
            vec![],
            image.len() == full.len() && is_downset(&image),
        ));
        let check = group_avg_weight(&full, ctx)?;
        visit(ClaimCase {
            key: "group-avweight",
            indices: vec![],
            outcome: check.outcome,
            lhs: check.lhs,
            rhs: check.rhs,
            bound: true,
        });
    }
    Ok(())
}

fn record_claims(
    rec: &mut Recorder,
    a: &GroupSet,
    ctx: &CompressionContext,
) -> Result<()> {
    check_claims(a, ctx, &mut |case| {
        rec.record(case.key, case.outcome, case.bound, || Witness {
            theorem: case.key.to_string(),
            outcome: case.outcome,
            set: Some(a.clone()),
            lattice: None,
            gens: Some(ctx.gens().clone()),
            indices: case.indices.clone(),
            gamma: None,
            lhs: case.lhs.clone(),
            rhs: case.rhs.clone(),
        })
    })
}

fn run_claims(plan: &VerifyPlan, rng: &mut SplitMix64, rec: &mut Recorder) -> Result<()> {
    let spec = &plan.group;
    for gens in resolve_generators(plan, rng, &mut rec.report)? {
        let ctx = CompressionContext::new(&gens)?;
        match plan.mode {
            Mode::Exhaustive => {
                for mask in 1..1u64 << spec.order() {
                    record_claims(rec, &GroupSet::from_mask(spec, mask), &ctx)?;
                }
            }
            Mode::Sample => {
                for _ in 0..plan.sample_size {
                    let a = rng.nonempty_subset(spec);
                    record_claims(rec, &a, &ctx)?;
                }
            }
        }
    }
    rec.report
        .note("claims-compression: predicate checks count a pass as strict");
    Ok(())
}

fn box_bounds(spec: &GroupSpec) -> Vec<u32> {
    spec.moduli().iter().map(|m| m - 1).collect()
}

/// The points of the box named by `spec` that lie in `a`.
fn as_lattice(a: &GroupSet) -> LatticeSet {
    let dim = a.spec().num_factors();
    LatticeSet::new(dim, a.elements().map(|g| g.coords().to_vec())).expect("dimensions match")
}

fn run_avweight(plan: &VerifyPlan, rng: &mut SplitMix64, rec: &mut Recorder) -> Result<()> {
    let spec = &plan.group;
    match plan.mode {
        Mode::Exhaustive => {
            let bounds = box_bounds(spec);
            let mut count = 0u64;
            for d in enumerate_downsets(&bounds)? {
                count += 1;
                if d.is_empty() {
                    continue;
                }
                let check = avg_weight_theorem(&d)?;
                rec.record_check("avweight", &check, None, Some(&d), None);
            }
            rec.report.note(format!(
                "avweight: {count} downsets in the box {bounds:?}, the empty set included"
            ));
            if plan.generators != GeneratorPolicy::StandardBasis {
                rec.report
                    .note("avweight: exhaustive mode enumerates downsets and ignores generators");
            }
        }
        Mode::Sample => {
            for gens in resolve_generators(plan, rng, &mut rec.report)? {
                let ctx = CompressionContext::new(&gens)?;
                for _ in 0..plan.sample_size {
                    let a = rng.nonempty_subset(spec);
                    let full = full_compress(&a, &ctx)?;
                    let image = phi_embed(&full, &ctx)?;
                    let check = avg_weight_theorem(&image)?;
                    rec.record_check("avweight", &check, None, Some(&image), None);
                    let group = group_avg_weight(&full, &ctx)?;
                    rec.record_check("group-avweight", &group, Some(&full), None, Some(&gens));
                }
            }
            rec.report
                .note("avweight: samples are random sets compressed and embedded into the lattice");
        }
    }
    Ok(())
}

fn run_lwplus(plan: &VerifyPlan, rng: &mut SplitMix64, rec: &mut Recorder) {
    let spec = &plan.group;
    let check = |a: &GroupSet, rec: &mut Recorder| {
        let l = as_lattice(a);
        let plus = lw_plus(&l).expect("non-empty");
        rec.record_check("lwplus", &plus, None, Some(&l), None);
        let lw = loomis_whitney(&l).expect("non-empty");
        rec.record_check("loomis-whitney", &lw, None, Some(&l), None);
    };
    match plan.mode {
        Mode::Exhaustive => sweep_subsets(spec, |mask| check(&GroupSet::from_mask(spec, mask), rec)),
        Mode::Sample => {
            for _ in 0..plan.sample_size {
                let a = rng.nonempty_subset(spec);
                check(&a, rec);
            }
        }
    }
    rec.report.note(format!(
        "lwplus: subsets of the box {:?}",
        box_bounds(spec)
    ));
}

fn run_repa(plan: &VerifyPlan, rng: &mut SplitMix64, rec: &mut Recorder) -> Result<()> {
    let spec = &plan.group;
    let gammas = plan.gammas();
    let check = |a: &GroupSet, rec: &mut Recorder| -> Result<()> {
        for gamma in &gammas {
            let (repa, _) = theorem_repa_capped(a, gamma, plan.search_cap)?;
            let side = repa
                .exponent_three
                .as_ref()
                .filter(|c| c.outcome == repa.outcome)
                .unwrap_or(&repa.general);
            rec.record("repa", repa.outcome, true, || Witness {
                theorem: "repa".into(),
                outcome: repa.outcome,
                set: Some(a.clone()),
                lattice: None,
                gens: None,
                indices: vec![],
                gamma: Some(*gamma),
                lhs: side.lhs.clone(),
                rhs: side.rhs.clone(),
            });
        }
        Ok(())
    };
    match plan.mode {
        Mode::Exhaustive => {
            for mask in 1..1u64 << spec.order() {
                check(&GroupSet::from_mask(spec, mask), rec)?;
            }
        }
        Mode::Sample => {
            for _ in 0..plan.sample_size {
                let a = rng.nonempty_subset(spec);
                check(&a, rec)?;
            }
        }
    }
    rec.report
        .note("repa: 0 is removed from the popular set before the dimension search");
    rec.report.note(
        "repa: gamma is tested in (0,1], where popular sets are defined; the dimension bound is stated for [0,1)",
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Frac;

    fn g(m: Vec<u32>) -> GroupSpec {
        GroupSpec::new(m).unwrap()
    }

    #[test]
    fn exp234_exhaustive_on_cube() {
        let plan = VerifyPlan::new(g(vec![2, 2, 2]), Theorem::Exp234, Mode::Exhaustive);
        let r = run_verify(&plan).unwrap();
        assert_eq!(r.cases_checked, 255);
        assert!(r.passed());
        assert_eq!(r.violation_count(), 0);
        for w in &r.equality_witnesses {
            assert_eq!(w.replay().unwrap(), Outcome::Equality);
        }
    }

    #[test]
    fn claims_on_square() {
        let plan = VerifyPlan::new(g(vec![2, 2]), Theorem::ClaimsCompression, Mode::Exhaustive);
        let r = run_verify(&plan).unwrap();
        assert!(r.passed());
        assert_eq!(r.tally("claim-cardinality").cases, 15 * 2);
        assert_eq!(r.tally("claim-boundary").violated, 0);
        assert_eq!(r.tally("full-compress").strict, 15);
    }

    #[test]
    fn trivial_group_rejected() {
        let plan = VerifyPlan::new(g(vec![]), Theorem::Exp234, Mode::Exhaustive);
        assert_eq!(run_verify(&plan), Err(Error::TrivialGroup));
    }

    #[test]
    fn hypotheses_enforced() {
        let c5 = VerifyPlan::new(g(vec![5, 5]), Theorem::Exp234, Mode::Sample);
        assert!(matches!(run_verify(&c5), Err(Error::Hypothesis(_))));
        let dependent = VerifyPlan::new(g(vec![2, 2]), Theorem::Generalcase, Mode::Exhaustive)
            .with_generators(GeneratorPolicy::FixedList {
                elements: vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            });
        assert_eq!(run_verify(&dependent), Err(Error::Dependent));
    }

    #[test]
    fn sampling_is_deterministic() {
        let plan = VerifyPlan::new(g(vec![3, 3]), Theorem::Exp234, Mode::Sample)
            .with_seed(42)
            .with_samples(200)
            .with_generators(GeneratorPolicy::RandomGenerating {
                count: 3,
                size: None,
            });
        let mut a = run_verify(&plan).unwrap();
        let mut b = run_verify(&plan).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
        assert_eq!(a.cases_checked, 600);
        let other = run_verify(&plan.clone().with_seed(43)).unwrap();
        assert_ne!(other.equality_witnesses, a.equality_witnesses);
    }

    #[test]
    fn random_generators_meet_needs() {
        let spec = g(vec![2, 4, 4]);
        let mut rng = SplitMix64::new(5);
        let needs = Needs {
            generating: true,
            independent: true,
        };
        for _ in 0..20 {
            let s = random_generators(&spec, needs, None, &mut rng).unwrap();
            assert!(is_independent(&s));
            assert_eq!(span(&s).len(), spec.order());
            assert!(s.elements().iter().all(|x| !x.is_zero()));
        }
    }

    #[test]
    fn small_runs_of_every_theorem() {
        let cases = [
            (vec![2, 2], Theorem::BlBound),
            (vec![2, 4], Theorem::Generalcase),
            (vec![3, 3], Theorem::Cosetdecomp),
            (vec![3, 3], Theorem::Avweight),
            (vec![3, 2], Theorem::Lwplus),
            (vec![2, 2, 2], Theorem::Repa),
        ];
        for (m, t) in cases {
            let r = run_verify(&VerifyPlan::new(g(m.clone()), t, Mode::Exhaustive)).unwrap();
            assert!(r.passed(), "{t} on {m:?}");
            assert!(r.cases_checked > 0);
            let s = run_verify(&VerifyPlan::new(g(m.clone()), t, Mode::Sample).with_samples(30))
                .unwrap();
            assert!(s.passed(), "{t} sampled on {m:?}");
        }
    }

    #[test]
    fn repa_gammas_multiply_cases() {
        let plan = VerifyPlan::new(g(vec![3, 3]), Theorem::Repa, Mode::Sample)
            .with_samples(10)
            .with_gammas(vec![Frac::new(1, 2), Frac::new(1, 1)]);
        let r = run_verify(&plan).unwrap();
        assert_eq!(r.tally("repa").cases, 20);
    }
}
