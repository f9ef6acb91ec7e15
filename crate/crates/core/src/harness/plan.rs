//! Verification plans as read from JSON.
//!
//! ```json
//! {"group":{"moduli":[2,2,2]},"theorem":"exp234","mode":"exhaustive",
//!  "seed":7,"generators":{"kind":"random-generating","count":50}}
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_frac, opt_frac_list, Frac};
use crate::group::GroupSpec;
use crate::harness::sweep::MAX_SWEEP_ORDER;

/// Default bound on `|G|` for exhaustive subset sweeps.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;
/// Hard bound on `|G|` for exhaustive sweeps, whatever the plan says.
pub const MAX_EXHAUSTIVE_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Exp234,
    Cosetdecomp,
    Generalcase,
    Avweight,
    Lwplus,
    Repa,
    ClaimsCompression,
    BlBound,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Exp234,
        Theorem::Cosetdecomp,
        Theorem::Generalcase,
        Theorem::Avweight,
        Theorem::Lwplus,
        Theorem::Repa,
        Theorem::ClaimsCompression,
        Theorem::BlBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::Exp234 => "exp234",
            Theorem::Cosetdecomp => "cosetdecomp",
            Theorem::Generalcase => "generalcase",
            Theorem::Avweight => "avweight",
            Theorem::Lwplus => "lwplus",
            Theorem::Repa => "repa",
            Theorem::ClaimsCompression => "claims-compression",
            Theorem::BlBound => "bl-bound",
        }
    }

    /// Whether the theorem quantifies over a generator sequence.
    pub fn uses_generators(self) -> bool {
        !matches!(self, Theorem::Lwplus | Theorem::Repa)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

/// Where the generator sequences `S` come from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorPolicy {
    /// `e_1, …, e_n` of the cyclic factors.
    #[default]
    StandardBasis,
    FixedList { elements: Vec<Vec<u64>> },
    /// `count` seeded sequences of distinct non-zero elements, rejected until
    /// they generate `G` (and are independent where the theorem needs it).
    RandomGenerating {
        count: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        size: Option<usize>,
    },
    /// Every non-empty subset of `G` meeting the theorem's hypothesis, in
    /// index order of the subset mask.
    AllSubsets,
}

impl fmt::Display for GeneratorPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorPolicy::StandardBasis => f.write_str("standard-basis"),
            GeneratorPolicy::FixedList { elements } => write!(f, "fixed-list({})", elements.len()),
            GeneratorPolicy::RandomGenerating { count, size } => match size {
                Some(k) => write!(f, "random-generating({count}, size {k})"),
                None => write!(f, "random-generating({count})"),
            },
            GeneratorPolicy::AllSubsets => f.write_str("all-subsets"),
        }
    }
}

fn default_sample_size() -> usize {
    1000
}

fn default_exhaustive_limit() -> usize {
    DEFAULT_EXHAUSTIVE_LIMIT
}

fn default_search_cap() -> usize {
    64
}

fn default_max_witnesses() -> usize {
    64
}

/// One verification run.
///
/// For the lattice theorems (`avweight`, `lwplus`) the group `C_{m_1} ⊕ … ⊕
/// C_{m_n}` stands for the box `[0, m_1 − 1] × … × [0, m_n − 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPlan {
    pub group: GroupSpec,
    pub theorem: Theorem,
    pub mode: Mode,
    #[serde(default = "default_sample_size")]
    pub sample_size: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub generators: GeneratorPolicy,
    /// Gamma values for `repa`; defaults to `1/4, 1/2, 1`.
    #[serde(default, with = "opt_frac_list", skip_serializing_if = "Option::is_none")]
    pub gammas: Option<Vec<Frac>>,
    #[serde(default = "default_exhaustive_limit")]
    pub exhaustive_limit: usize,
    /// Pool cap for the exact dimension search in `repa`.
    #[serde(default = "default_search_cap")]
    pub search_cap: usize,
    /// Witnesses kept per list (violations, equalities); counts stay exact.
    #[serde(default = "default_max_witnesses")]
    pub max_witnesses: usize,
}

/// A plan file holds one plan or a list of plans.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum PlanFile {
    One(Box<VerifyPlan>),
    Many(Vec<VerifyPlan>),
}

impl PlanFile {
    pub fn into_plans(self) -> Vec<VerifyPlan> {
        match self {
            PlanFile::One(p) => vec![*p],
            PlanFile::Many(v) => v,
        }
    }
}

impl VerifyPlan {
    pub fn new(group: GroupSpec, theorem: Theorem, mode: Mode) -> Self {
        VerifyPlan {
            group,
            theorem,
            mode,
            sample_size: default_sample_size(),
            seed: 0,
            generators: GeneratorPolicy::default(),
            gammas: None,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            search_cap: default_search_cap(),
            max_witnesses: default_max_witnesses(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.sample_size = n;
        self
    }

    pub fn with_generators(mut self, policy: GeneratorPolicy) -> Self {
        self.generators = policy;
        self
    }

    pub fn with_gammas(mut self, gammas: Vec<Frac>) -> Self {
        self.gammas = Some(gammas);
        self
    }

    pub fn with_max_witnesses(mut self, n: usize) -> Self {
        self.max_witnesses = n;
        self
    }

    pub fn gammas(&self) -> Vec<Frac> {
        self.gammas
            .clone()
            .unwrap_or_else(|| vec![Frac::new(1, 4), Frac::new(1, 2), Frac::new(1, 1)])
    }

    /// Checks sizes and parameters before any work is done.
    pub fn validate(&self) -> Result<()> {
        if self.group.order() < 2 {
            return Err(Error::TrivialGroup);
        }
        if self.max_witnesses == 0 {
            return Err(Error::InvalidParameter("max_witnesses must be positive".into()));
        }
        if self.exhaustive_limit > MAX_EXHAUSTIVE_LIMIT.min(MAX_SWEEP_ORDER) {
            return Err(Error::InvalidParameter(format!(
                "exhaustive_limit {} exceeds {MAX_EXHAUSTIVE_LIMIT}",
                self.exhaustive_limit
            )));
        }
        match self.mode {
            Mode::Sample if self.sample_size == 0 => {
                return Err(Error::InvalidParameter("sample_size must be positive".into()))
            }
            // downsets of the box are enumerated directly, not as subsets
            Mode::Exhaustive
                if self.theorem != Theorem::Avweight
                    && self.group.order() > self.exhaustive_limit =>
            {
                return Err(Error::ExhaustiveTooLarge {
                    order: self.group.order(),
                    limit: self.exhaustive_limit,
                });
            }
            _ => {}
        }
        if let GeneratorPolicy::RandomGenerating { count: 0, .. } = self.generators {
            return Err(Error::InvalidParameter("random-generating count must be positive".into()));
        }
        if self.generators == GeneratorPolicy::AllSubsets && self.group.order() > 16 {
            return Err(Error::ExhaustiveTooLarge {
                order: self.group.order(),
                limit: 16,
            });
        }
        if self.theorem == Theorem::Repa {
            for g in self.gammas() {
                if g <= Frac::from_integer(0) || g > Frac::from_integer(1) {
                    return Err(Error::GammaOutOfRange(format_frac(&g)));
                }
            }
        }
        Ok(())
    }

    /// One-line description used in reports.
    pub fn label(&self) -> String {
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive".to_string(),
            Mode::Sample => format!("{} samples", self.sample_size),
        };
        let mut s = format!("{} on {}, {mode}, seed {}", self.theorem, self.group, self.seed);
        if self.theorem.uses_generators() {
            s.push_str(&format!(", generators {}", self.generators));
        }
        if self.theorem == Theorem::Repa {
            let g: Vec<String> = self.gammas().iter().map(format_frac).collect();
            s.push_str(&format!(", gamma {}", g.join(" ")));
        }
        s
    }
}
