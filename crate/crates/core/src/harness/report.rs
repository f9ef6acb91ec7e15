//! Verification reports, witnesses and their text/TSV/JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boundary::{bl_lower_bound, corollary_cosetdecomp, theorem_exp234, theorem_generalcase};
use crate::compression::CompressionContext;
use crate::downset::{avg_weight_theorem, loomis_whitney, lw_plus, LatticeSet};
use crate::error::{Error, Result};
use crate::exact::{format_frac, opt_frac_string, Frac};
use crate::group::{GeneratorSeq, GroupSet};
use crate::harness::run::check_claims;
use crate::popular::theorem_repa_capped;
use crate::verdict::Outcome;

/// Outcome counts for one checked statement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub cases: u64,
    pub vacuous: u64,
    pub strict: u64,
    pub equality: u64,
    pub violated: u64,
}

impl Tally {
    pub fn record(&mut self, outcome: Outcome) {
        self.cases += 1;
        match outcome {
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Strict => self.strict += 1,
            Outcome::Equality => self.equality += 1,
            Outcome::Violated => self.violated += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.cases += other.cases;
        self.vacuous += other.vacuous;
        self.strict += other.strict;
        self.equality += other.equality;
        self.violated += other.violated;
    }

    pub fn count(&self, outcome: Outcome) -> u64 {
        match outcome {
            Outcome::Vacuous => self.vacuous,
            Outcome::Strict => self.strict,
            Outcome::Equality => self.equality,
            Outcome::Violated => self.violated,
        }
    }
}

/// A single evaluated case, serialized with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Tally key: a theorem id, `loomis-whitney`, or a compression claim.
    pub theorem: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<GroupSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<GeneratorSeq>,
    /// Generator indices a compression claim refers to.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub indices: Vec<usize>,
    #[serde(
        default,
        with = "opt_frac_string",
        skip_serializing_if = "Option::is_none"
    )]
    pub gamma: Option<Frac>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    fn need<'a, T>(x: &'a Option<T>, what: &str) -> Result<&'a T> {
        x.as_ref()
            .ok_or_else(|| Error::Parse(format!("witness lacks a {what}")))
    }

    /// Re-evaluates the case through the public predicates.
    pub fn replay(&self) -> Result<Outcome> {
        let set = || Self::need(&self.set, "set");
        let gens = || Self::need(&self.gens, "generator sequence");
        let lattice = || Self::need(&self.lattice, "lattice set");
        let outcome = match self.theorem.as_str() {
            "exp234" => theorem_exp234(set()?, gens()?)?.outcome,
            "bl-bound" => bl_lower_bound(set()?, gens()?)?.outcome,
            "generalcase" => theorem_generalcase(set()?, gens()?)?.outcome,
            "cosetdecomp" => corollary_cosetdecomp(set()?, gens()?)?.outcome,
            "avweight" => avg_weight_theorem(lattice()?)?.outcome,
            "lwplus" => lw_plus(lattice()?)?.outcome,
            "loomis-whitney" => loomis_whitney(lattice()?)?.outcome,
            "repa" => {
                let gamma = Self::need(&self.gamma, "gamma")?;
                let a = set()?;
                theorem_repa_capped(a, gamma, a.spec().order())?.0.outcome
            }
            key => {
                let ctx = CompressionContext::new(gens()?)?;
                let mut found = None;
                check_claims(set()?, &ctx, &mut |case| {
                    if case.key == key && case.indices == self.indices {
                        found = Some(case.outcome);
                    }
                })?;
                found.ok_or_else(|| Error::Parse(format!("unknown witness kind {key:?}")))?
            }
        };
        Ok(outcome)
    }
}

/// Result of one or more plans. Reports merge by adding counts and
/// concatenating witness lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub plans: Vec<String>,
    pub cases_checked: u64,
    pub vacuous: u64,
    pub tallies: BTreeMap<String, Tally>,
    pub violations: Vec<Witness>,
    pub equality_witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation_count(&self) -> u64 {
        self.tallies.values().map(|t| t.violated).sum()
    }

    pub fn equality_count(&self) -> u64 {
        self.tallies.values().map(|t| t.equality).sum()
    }

    pub fn tally(&self, key: &str) -> Tally {
        self.tallies.get(key).cloned().unwrap_or_default()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if let Err(pos) = self.notes.binary_search(&note) {
            self.notes.insert(pos, note);
        }
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.plans.extend(other.plans);
        self.cases_checked += other.cases_checked;
        self.vacuous += other.vacuous;
        for (k, t) in &other.tallies {
            self.tallies.entry(k.clone()).or_default().merge(t);
        }
        self.violations.extend(other.violations);
        self.equality_witnesses.extend(other.equality_witnesses);
        for n in other.notes {
            self.note(n);
        }
        self.wall_time_ms += other.wall_time_ms;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

const CLASSES: [Outcome; 4] = [
    Outcome::Vacuous,
    Outcome::Strict,
    Outcome::Equality,
    Outcome::Violated,
];

fn describe_witness(w: &Witness) -> String {
    let mut parts = vec![format!("{} {}", w.theorem, w.outcome)];
    if let Some(a) = &w.set {
        let elems: Vec<String> = a.elements().map(|g| g.to_string()).collect();
        parts.push(format!("A={{{}}}", elems.join(",")));
    }
    if let Some(l) = &w.lattice {
        let pts: Vec<String> = l
            .points()
            .map(|p| format!("({})", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        parts.push(format!("A={{{}}}", pts.join(",")));
    }
    if let Some(s) = &w.gens {
        let elems: Vec<String> = s.elements().iter().map(|g| g.to_string()).collect();
        parts.push(format!("S=[{}]", elems.join(",")));
    }
    if !w.indices.is_empty() {
        parts.push(format!("indices={:?}", w.indices));
    }
    if let Some(g) = &w.gamma {
        parts.push(format!("gamma={}", format_frac(g)));
    }
    if !w.lhs.is_empty() {
        parts.push(format!("{} vs {}", w.lhs, w.rhs));
    }
    parts.join(" ")
}

/// Renders a report. Text output starts with a `PASS` or `FAIL` summary line;
/// TSV has a header and one row per checked statement and outcome class.
pub fn emit_report(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = String::from("theorem\tclass\tcount\n");
            for (key, t) in &report.tallies {
                for class in CLASSES {
                    writeln!(s, "{key}\t{class}\t{}", t.count(class)).unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            writeln!(
                s,
                "{verdict}: {} cases, {} vacuous, {} equality, {} violations ({} ms)",
                report.cases_checked,
                report.vacuous,
                report.equality_count(),
                report.violation_count(),
                report.wall_time_ms
            )
            .unwrap();
            for p in &report.plans {
                writeln!(s, "plan: {p}").unwrap();
            }
            for (key, t) in &report.tallies {
                writeln!(
                    s,
                    "  {key}: {} cases, {} vacuous, {} strict, {} equality, {} violated",
                    t.cases, t.vacuous, t.strict, t.equality, t.violated
                )
                .unwrap();
            }
            for n in &report.notes {
                writeln!(s, "note: {n}").unwrap();
            }
            for w in &report.violations {
                writeln!(s, "violation: {}", describe_witness(w)).unwrap();
            }
            for w in &report.equality_witnesses {
                writeln!(s, "equality: {}", describe_witness(w)).unwrap();
            }
            s
        }
    }
}
