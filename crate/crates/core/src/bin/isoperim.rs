use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use isoperim::boundary::edge_boundary_with_rank;
use isoperim::compression::{compress_along, full_compress, CompressionContext};
use isoperim::downset::{loomis_whitney, lw_plus, projection_sizes, weight_stats, LatticeSet};
use isoperim::exact::{format_frac, parse_frac};
use isoperim::harness::{
    build_example, emit_report, enumerate_downsets, run_plans, ExampleId, Format, PlanFile,
};
use isoperim::io::{read_json, to_json_pretty};
use isoperim::popular::{dim_dissociated, dim_independent, diff_spectrum, theorem_repa};
use isoperim::{Error, GeneratorSeq, GroupSet, GroupSpec, Result};

/// Edge boundaries, compressions, downset weights and popular differences in
/// finite abelian groups. Group sizes are capped by ISOPERIM_MAX_GROUP.
#[derive(Parser)]
#[command(name = "isoperim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge boundary statistics of A with respect to S.
    Boundary {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        gens: PathBuf,
        /// Also report 1 − ∂/(n|A|) for this n.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Compress A along the generators (all in order, or one step).
    Compress {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// 0-based generator index for a single compression.
        #[arg(long)]
        step: Option<usize>,
    },
    /// Check a lattice set against a weight or projection inequality.
    DownsetCheck {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, value_enum)]
        check: DownsetCheck,
    },
    /// Difference spectrum, popular differences and their dimension.
    Popdiff {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// Threshold as p/q in (0, 1].
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum, default_value = "independent")]
        dim: DimKind,
    },
    /// Run a verification plan (one plan or a list).
    Verify {
        #[arg(long)]
        plan: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Build one of the explicit constructions and check its closed forms.
    Example {
        #[arg(long, value_enum)]
        id: ExampleArg,
        /// Three comma-separated integers, e.g. 2,4,2.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<u64>,
    },
    /// Enumerate every downset of the box [0,b_1] × … × [0,b_n].
    EnumerateDownsets {
        #[arg(long = "box", value_delimiter = ',', num_args = 1..)]
        bounds: Vec<u32>,
        /// Print only the number of downsets.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DownsetCheck {
    AvgWeight,
    LwPlus,
    LoomisWhitney,
}

#[derive(Clone, Copy, ValueEnum)]
enum DimKind {
    Independent,
    Dissociated,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Tsv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleArg {
    Ex1,
    Ex2,
    Ex3,
    Ex4,
}

/// Reads a group file and a set file and checks that they agree.
fn load_set(group: &PathBuf, set: &PathBuf) -> Result<(GroupSpec, GroupSet)> {
    let spec: GroupSpec = read_json(group)?;
    let a: GroupSet = read_json(set)?;
    if a.spec() != &spec {
        return Err(Error::SpecMismatch);
    }
    Ok((spec, a))
}

fn load_gens(spec: &GroupSpec, gens: &PathBuf) -> Result<GeneratorSeq> {
    let s: GeneratorSeq = read_json(gens)?;
    if s.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    Ok(s)
}

/// Prints the output and returns whether every checked statement held.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Boundary {
            group,
            set,
            gens,
            rank,
        } => {
            let (spec, a) = load_set(&group, &set)?;
            let s = load_gens(&spec, &gens)?;
            println!("{}", to_json_pretty(&edge_boundary_with_rank(&a, &s, rank)?));
            Ok(true)
        }
        Command::Compress {
            group,
            gens,
            set,
            step,
        } => {
            let (spec, a) = load_set(&group, &set)?;
            let s = load_gens(&spec, &gens)?;
            let ctx = CompressionContext::new(&s)?;
            let out = match step {
                Some(i) => compress_along(&a, &ctx, i)?,
                None => full_compress(&a, &ctx)?,
            };
            let before = edge_boundary_with_rank(&a, &s, None)?;
            let after = edge_boundary_with_rank(&out, &s, None)?;
            println!(
                "{}",
                to_json_pretty(&json!({ "set": out, "before": before, "after": after }))
            );
            Ok(true)
        }
        Command::DownsetCheck { set, check } => {
            let a: LatticeSet = read_json(&set)?;
            let (value, holds) = match check {
                DownsetCheck::AvgWeight => {
                    let stats = weight_stats(&a)?;
                    let holds = stats.check.holds();
                    (serde_json::to_value(stats).expect("serializable"), holds)
                }
                DownsetCheck::LwPlus | DownsetCheck::LoomisWhitney => {
                    let c = match check {
                        DownsetCheck::LwPlus => lw_plus(&a)?,
                        _ => loomis_whitney(&a)?,
                    };
                    let holds = c.holds();
                    let v = json!({
                        "size": a.len(),
                        "projections": projection_sizes(&a),
                        "check": c,
                    });
                    (v, holds)
                }
            };
            println!("{}", to_json_pretty(&value));
            Ok(holds)
        }
        Command::Popdiff {
            group,
            set,
            gamma,
            dim,
        } => {
            let (_, a) = load_set(&group, &set)?;
            let gamma = parse_frac(&gamma)?;
            let spectrum = diff_spectrum(&a)?;
            let popular = spectrum.popular(&gamma)?;
            let dimension = match dim {
                DimKind::Independent => dim_independent(&popular)?,
                DimKind::Dissociated => dim_dissociated(&popular)?,
            };
            let (repa, _) = theorem_repa(&a, &gamma)?;
            let nonzero = spectrum.counts().iter().skip(1).filter(|&&r| r > 0).count();
            println!(
                "{}",
                to_json_pretty(&json!({
                    "gamma": format_frac(&gamma),
                    "set_size": a.len(),
                    "distinct_nonzero_differences": nonzero,
                    "max_nonzero_r": spectrum.counts().iter().skip(1).max().copied().unwrap_or(0),
                    "popular": popular,
                    "dimension": dimension,
                    "bound": repa,
                }))
            );
            Ok(repa.holds())
        }
        Command::Verify { plan, format } => {
            let plans = read_json::<PlanFile>(&plan)?.into_plans();
            let report = run_plans(&plans)?;
            let format = match format {
                ReportFormat::Json => Format::Json,
                ReportFormat::Tsv => Format::Tsv,
                ReportFormat::Text => Format::Text,
            };
            print!("{}", emit_report(&report, format));
            Ok(report.passed())
        }
        Command::Example { id, params } => {
            let id = match id {
                ExampleArg::Ex1 => ExampleId::Ex1,
                ExampleArg::Ex2 => ExampleId::Ex2,
                ExampleArg::Ex3 => ExampleId::Ex3,
                ExampleArg::Ex4 => ExampleId::Ex4,
            };
            println!("{}", to_json_pretty(&build_example(id, &params)?));
            Ok(true)
        }
        Command::EnumerateDownsets { bounds, count } => {
            let iter = enumerate_downsets(&bounds)?;
            if count {
                println!("{}", iter.count());
            } else {
                let all: Vec<LatticeSet> = iter.collect();
                println!(
                    "{}",
                    to_json_pretty(&json!({ "box": bounds, "count": all.len(), "downsets": all }))
                );
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
