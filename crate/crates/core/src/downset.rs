//! Finite sets in `Z^n_{>=0}`: downsets, weights, coordinate-hyperplane
//! projections and the average-weight / projection inequalities.
//!
//! Inequalities with `log₂` are cleared into power comparisons, e.g.
//! `Σw(a) <= ½|A| log₂|A|` becomes `4^{Σw(a)} <= |A|^{|A|}`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{frac_string, parts, Frac, PowerProduct};
use crate::verdict::BoundCheck;

/// A finite set of points with non-negative integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLatticeSet")]
pub struct LatticeSet {
    dim: usize,
    points: BTreeSet<Vec<u32>>,
}

#[derive(Deserialize)]
struct RawLatticeSet {
    dim: usize,
    points: Vec<Vec<u32>>,
}

impl TryFrom<RawLatticeSet> for LatticeSet {
    type Error = Error;

    fn try_from(raw: RawLatticeSet) -> Result<Self> {
        LatticeSet::new(raw.dim, raw.points)
    }
}

impl LatticeSet {
    /// Builds a set; repeated points collapse.
    pub fn new(dim: usize, points: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(p));
            }
            set.insert(p);
        }
        Ok(Self { dim, points: set })
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            points: BTreeSet::new(),
        }
    }

    /// The box `[0,l_1] × … × [0,l_n]`.
    pub fn boxed(lengths: &[u32]) -> Self {
        let mut points = BTreeSet::new();
        let mut cur = vec![0u32; lengths.len()];
        loop {
            points.insert(cur.clone());
            let mut i = 0;
            loop {
                if i == lengths.len() {
                    return Self {
                        dim: lengths.len(),
                        points,
                    };
                }
                if cur[i] < lengths[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.points.contains(p)
    }

    /// Points in canonical (lexicographic) order.
    pub fn points(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.points.iter()
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, points: BTreeSet<Vec<u32>>) -> Self {
        Self { dim, points }
    }
}

/// Number of non-zero coordinates.
pub fn weight(z: &[u32]) -> usize {
    z.iter().filter(|&&c| c != 0).count()
}

/// Closure under coordinate-wise domination from below, checked through the
/// one-step predecessors `a − e_i`.
pub fn is_downset(a: &LatticeSet) -> bool {
    let mut q = Vec::with_capacity(a.dim);
    a.points.iter().all(|p| {
        (0..a.dim).all(|i| {
            if p[i] == 0 {
                return true;
            }
            q.clear();
            q.extend_from_slice(p);
            q[i] -= 1;
            a.points.contains(&q)
        })
    })
}

/// Summary of the weights in a downset against `½ log₂|A|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightStats {
    pub size: usize,
    pub total_weight: u64,
    #[serde(with = "frac_string")]
    pub mean_weight: Frac,
    /// The bound `½ log₂|A|` is kept symbolic; see `check`.
    pub bound: String,
    /// `|A|^{|A|} >= 4^{Σ w(a)}`.
    pub check: BoundCheck,
}

fn require_nonempty_downset(a: &LatticeSet) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if !is_downset(a) {
        return Err(Error::NotDownset);
    }
    Ok(())
}

pub(crate) fn avg_weight_verdict(size: u64, total_weight: u64) -> BoundCheck {
    BoundCheck::compare(
        &PowerProduct::pow(size, size),
        &PowerProduct::pow(4, total_weight),
        None,
    )
}

pub fn weight_stats(a: &LatticeSet) -> Result<WeightStats> {
    require_nonempty_downset(a)?;
    let total_weight: u64 = a.points().map(|p| weight(p) as u64).sum();
    Ok(WeightStats {
        size: a.len(),
        total_weight,
        mean_weight: Frac::new(total_weight as i64, a.len() as i64),
        bound: format!("log2({})/2", a.len()),
        check: avg_weight_verdict(a.len() as u64, total_weight),
    })
}

/// Mean weight of a finite non-empty downset is at most `½ log₂|A|`.
pub fn avg_weight_theorem(a: &LatticeSet) -> Result<BoundCheck> {
    weight_stats(a).map(|s| s.check)
}

pub fn avg_weight_theorem_holds(a: &LatticeSet) -> Result<bool> {
    avg_weight_theorem(a).map(|c| c.holds())
}

/// `|π_i(A)|` for each coordinate `i`, where `π_i` zeroes coordinate `i`.
pub fn projection_sizes(a: &LatticeSet) -> Vec<usize> {
    (0..a.dim)
        .map(|i| {
            let proj: HashSet<Vec<u32>> = a
                .points()
                .map(|p| {
                    let mut q = p.clone();
                    q[i] = 0;
                    q
                })
                .collect();
            proj.len()
        })
        .collect()
}

/// `n|A| <= Σ|π_i(A)| + ½|A| log₂|A|` for any finite non-empty set, tested as
/// `|A|^{|A|} >= 4^{n|A| − Σ|π_i(A)|}`.
pub fn lw_plus(a: &LatticeSet) -> Result<BoundCheck> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let size = a.len() as u64;
    let proj: u64 = projection_sizes(a).iter().map(|&x| x as u64).sum();
    // each |π_i(A)| <= |A|, so the exponent is non-negative
    let excess = a.dim as u64 * size - proj;
    Ok(BoundCheck::compare(
        &PowerProduct::pow(size, size),
        &PowerProduct::pow(4, excess),
        None,
    ))
}

pub fn lw_plus_holds(a: &LatticeSet) -> Result<bool> {
    lw_plus(a).map(|c| c.holds())
}

/// `|π_1(A)| ⋯ |π_n(A)| >= |A|^{n−1}`.
pub fn loomis_whitney(a: &LatticeSet) -> Result<BoundCheck> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let lhs = projection_sizes(a)
        .into_iter()
        .fold(PowerProduct::one(), |acc, x| acc.times(x as u64, 1));
    let rhs = PowerProduct::pow(a.len() as u64, a.dim.saturating_sub(1) as u64);
    Ok(BoundCheck::compare(&lhs, &rhs, None))
}

pub fn loomis_whitney_holds(a: &LatticeSet) -> Result<bool> {
    loomis_whitney(a).map(|c| c.holds())
}

/// Restacks every line parallel to `e_i` onto positions `0..count`.
pub fn lattice_compress_along(a: &LatticeSet, i: usize) -> Result<LatticeSet> {
    if i >= a.dim {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: a.dim,
        });
    }
    let mut lines: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for p in a.points() {
        let mut key = p.clone();
        key[i] = 0;
        *lines.entry(key).or_default() += 1;
    }
    let mut out = BTreeSet::new();
    for (key, count) in lines {
        for k in 0..count {
            let mut p = key.clone();
            p[i] = k;
            out.insert(p);
        }
    }
    Ok(LatticeSet::from_sorted_unchecked(a.dim, out))
}

/// A downset read as a monotonic family of multisets over the ground set `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultisetFamily {
    pub ground_size: usize,
    /// `|𝒜| = |A|`.
    pub family_size: usize,
    /// `Σ |supp A|` over the family, which equals `Σ w(a)`.
    pub support_sum: u64,
    /// `|𝒜|^{|𝒜|} >= 4^{Σ|supp A|}`.
    pub check: BoundCheck,
}

/// Each point `a` is the multiset with multiplicity `a_i` at ground element `i`;
/// monotonicity of the family is the downset property.
pub fn multiset_view(a: &LatticeSet) -> Result<MultisetFamily> {
    require_nonempty_downset(a)?;
    let support_sum: u64 = a
        .points()
        .map(|m| m.iter().filter(|&&mult| mult > 0).count() as u64)
        .sum();
    Ok(MultisetFamily {
        ground_size: a.dim,
        family_size: a.len(),
        support_sum,
        check: avg_weight_verdict(a.len() as u64, support_sum),
    })
}

/// `1 + ½τ log₂τ <= ½(τ+1) log₂(τ+1)` for rational `τ = p/q >= 1`, cleared to
/// `(p+q)^{p+q} >= 4^q · p^p · q^q`.
pub fn split_step_inequality(tau: &Frac) -> Result<BoundCheck> {
    if *tau < Frac::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "tau = {} must be at least 1",
            crate::exact::format_frac(tau)
        )));
    }
    let (p, q) = parts(tau);
    let lhs = PowerProduct::pow(p + q, p + q);
    let rhs = PowerProduct::pow(4, q).times(p, p).times(q, q);
    Ok(BoundCheck::compare(&lhs, &rhs, None))
}

/// The mean weight of `A`, or zero for an empty set.
pub fn mean_weight(a: &LatticeSet) -> Frac {
    if a.is_empty() {
        return Frac::zero();
    }
    let total: u64 = a.points().map(|p| weight(p) as u64).sum();
    Frac::new(total as i64, a.len() as i64)
}
