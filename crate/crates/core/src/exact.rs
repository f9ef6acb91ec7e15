//! Exact rationals and comparisons of products of integer powers.
//!
//! Every inequality that involves a logarithm is cleared into a comparison of
//! the form `b_1^e_1 * ... * b_k^e_k  <=>  c_1^f_1 * ... * c_l^f_l`. A
//! floating-point estimate of both logarithms decides the comparison only when
//! the gap is far outside the accumulated rounding error; otherwise the two
//! sides are expanded into big integers.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational used for gamma values, mean weights and bound exponents.
pub type Frac = Ratio<i64>;

/// Renders `p/q`, including `1/1` and `0/1`.
pub fn format_frac(x: &Frac) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_frac(s: &str) -> Result<Frac> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected a rational p/q, got {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Frac::new(p, q))
        }
        None => Ok(Frac::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serde adapter storing a [`Frac`] as a `"p/q"` string.
pub mod frac_string {
    use super::{format_frac, parse_frac, Frac};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Frac, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_frac(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Frac, D::Error> {
        let s = String::deserialize(d)?;
        parse_frac(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`frac_string`] for optional values.
pub mod opt_frac_string {
    use super::{format_frac, parse_frac, Frac};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Frac>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_some(&format_frac(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Frac>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_frac(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Optional list of [`Frac`] values stored as `"p/q"` strings.
pub mod opt_frac_list {
    use super::{format_frac, parse_frac, Frac};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<Vec<Frac>>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.collect_seq(v.iter().map(format_frac)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Frac>>, D::Error> {
        let v = Option::<Vec<String>>::deserialize(d)?;
        v.map(|v| {
            v.iter()
                .map(|s| parse_frac(s).map_err(serde::de::Error::custom))
                .collect()
        })
        .transpose()
    }
}

/// A product of non-negative integer powers, `Π base^exp`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PowerProduct {
    factors: Vec<(u64, u64)>,
}

impl PowerProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn pow(base: u64, exp: u64) -> Self {
        Self::one().times(base, exp)
    }

    pub fn times(mut self, base: u64, exp: u64) -> Self {
        if exp > 0 && base != 1 {
            self.factors.push((base, exp));
        }
        self
    }

    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    fn is_zero(&self) -> bool {
        self.factors.iter().any(|&(b, _)| b == 0)
    }

    /// Natural logarithm and an upper bound on its absolute rounding error.
    fn ln_estimate(&self) -> (f64, f64) {
        let mut sum = 0.0f64;
        let mut mag = 0.0f64;
        for &(b, e) in &self.factors {
            let t = (e as f64) * (b as f64).ln();
            sum += t;
            mag += t.abs();
        }
        (sum, mag)
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &(b, e) in &self.factors {
            if b == 0 {
                return BigUint::zero();
            }
            let e = u32::try_from(e).expect("exponent too large for exact expansion");
            acc *= BigUint::from(b).pow(e);
        }
        acc
    }

    /// Compact human-readable rendering such as `4^3*5^2`.
    pub fn render(&self) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.factors
            .iter()
            .map(|(b, e)| format!("{b}^{e}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Exact ordering of two power products.
pub fn cmp_power_products(lhs: &PowerProduct, rhs: &PowerProduct) -> Ordering {
    match (lhs.is_zero(), rhs.is_zero()) {
        (true, true) => return Ordering::Equal,
        (true, false) => return Ordering::Less,
        (false, true) => return Ordering::Greater,
        (false, false) => {}
    }
    let (l, lm) = lhs.ln_estimate();
    let (r, rm) = rhs.ln_estimate();
    let margin = 1e-9 * (lm + rm + 1.0);
    if l + margin < r {
        return Ordering::Less;
    }
    if r + margin < l {
        return Ordering::Greater;
    }
    lhs.to_biguint().cmp(&rhs.to_biguint())
}

/// Splits a non-negative rational exponent into `(p, q)` with `q > 0`, lowest terms.
pub fn parts(x: &Frac) -> (u64, u64) {
    debug_assert!(!x.is_negative());
    (x.numer().unsigned_abs(), x.denom().unsigned_abs())
}

/// Exact test of `base^x <= value` for a rational exponent `x = p/q >= 0`,
/// evaluated as `base^p <= value^q`.
pub fn rational_power_cmp(value: u64, base: u64, exponent: &Frac) -> Ordering {
    let (p, q) = parts(exponent);
    cmp_power_products(&PowerProduct::pow(value, q), &PowerProduct::pow(base, p))
}
