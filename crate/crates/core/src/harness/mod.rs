//! Verification harness: plans and reports, seeded sampling, exhaustive
//! sweeps, explicit constructions and downset enumeration.

pub mod constructions;
pub mod downsets;
pub mod plan;
pub mod report;
pub mod rng;
pub mod run;
pub mod sweep;

pub use constructions::{build_example, ExampleId, ExampleInstance, ExampleStats};
pub use downsets::enumerate_downsets;
pub use plan::{GeneratorPolicy, Mode, PlanFile, Theorem, VerifyPlan};
pub use report::{emit_report, Format, Tally, VerifyReport, Witness};
pub use rng::SplitMix64;
pub use run::{run_plans, run_verify};
