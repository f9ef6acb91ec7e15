use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{cmp_power_products, opt_frac_string, Frac, PowerProduct};

/// Classification of a single bound evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// The hypothesis admits no gamma in (0, 1]; the statement holds trivially.
    Vacuous,
    Strict,
    Equality,
    Violated,
}

impl Outcome {
    pub fn holds(self) -> bool {
        self != Outcome::Violated
    }

    /// Outcome of the claim `lhs >= rhs` given their ordering.
    pub fn at_least(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => Outcome::Strict,
            Ordering::Equal => Outcome::Equality,
            Ordering::Less => Outcome::Violated,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Vacuous => "vacuous",
            Outcome::Strict => "strict",
            Outcome::Equality => "equality",
            Outcome::Violated => "violated",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound `lhs >= rhs` evaluated exactly, with both sides kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub outcome: Outcome,
    /// The largest gamma admitted by the hypothesis, when the bound has one.
    #[serde(with = "opt_frac_string", default)]
    pub gamma: Option<Frac>,
    pub lhs: String,
    pub rhs: String,
}

impl BoundCheck {
    pub fn compare(lhs: &PowerProduct, rhs: &PowerProduct, gamma: Option<Frac>) -> Self {
        BoundCheck {
            outcome: Outcome::at_least(cmp_power_products(lhs, rhs)),
            gamma,
            lhs: lhs.render(),
            rhs: rhs.render(),
        }
    }

    pub fn vacuous(gamma: Option<Frac>) -> Self {
        BoundCheck {
            outcome: Outcome::Vacuous,
            gamma,
            lhs: String::new(),
            rhs: String::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.outcome.holds()
    }
}
