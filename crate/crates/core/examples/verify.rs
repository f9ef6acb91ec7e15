//! Running verification plans from code and printing the reports.
//!
//! cargo run --release --example verify

use isoperim::harness::{
    emit_report, run_plans, Format, GeneratorPolicy, Mode, Theorem, VerifyPlan,
};
use isoperim::{GroupSpec, Result};

fn main() -> Result<()> {
    let cube = GroupSpec::homocyclic(2, 3)?;
    let plans = vec![
        VerifyPlan::new(cube.clone(), Theorem::Exp234, Mode::Exhaustive),
        VerifyPlan::new(cube.clone(), Theorem::BlBound, Mode::Exhaustive)
            .with_seed(3)
            .with_generators(GeneratorPolicy::RandomGenerating {
                count: 10,
                size: None,
            }),
        VerifyPlan::new(GroupSpec::new(vec![2, 4, 4])?, Theorem::Generalcase, Mode::Sample)
            .with_seed(7)
            .with_samples(5000),
        VerifyPlan::new(cube, Theorem::ClaimsCompression, Mode::Exhaustive),
    ];
    let report = run_plans(&plans)?;
    print!("{}", emit_report(&report, Format::Tsv));
    let text = emit_report(&report, Format::Text);
    for line in text.lines().take(12) {
        println!("{line}");
    }
    // the same plans as a JSON file for `isoperim verify --plan`
    println!("{}", serde_json::to_string(&plans[0]).expect("serializable"));
    Ok(())
}
