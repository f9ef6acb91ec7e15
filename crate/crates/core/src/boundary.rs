//! Edge boundaries in the directed Cayley graph and the boundary theorems.
//!
//! Every verdict is a cross-multiplied power comparison; the `*_verdict`
//! kernels take plain counts so the enumeration engine can feed them
//! incrementally maintained boundaries.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{frac_string, opt_frac_string, Frac, PowerProduct};
use crate::group::{is_independent, span, GeneratorSeq, GroupSet, GroupSpec};
use crate::verdict::BoundCheck;

/// Edge-boundary counts of a set with respect to a generator sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryStats {
    /// `∂_S(A)`.
    pub total: u64,
    /// `∂_S^{(i)}(A)` in generator order.
    pub per_generator: Vec<u64>,
    pub set_size: usize,
    pub generator_count: usize,
    /// `1 − ∂_S(A)/(|S||A|)`.
    #[serde(with = "frac_string")]
    pub gamma: Frac,
    /// `1 − ∂_S(A)/(n|A|)` for a supplied rank `n`; may be negative.
    #[serde(with = "opt_frac_string", skip_serializing_if = "Option::is_none")]
    pub gamma_rank: Option<Frac>,
}

/// `1 − boundary/(n·size)`.
pub fn slack(boundary: u64, n: u64, size: u64) -> Frac {
    Frac::from_integer(1) - Frac::new(boundary as i64, (n * size) as i64)
}

pub(crate) fn count_boundary(a: &GroupSet, tables: &[Vec<u32>]) -> Vec<u64> {
    tables
        .iter()
        .map(|t| a.indices().filter(|&x| !a.contains_index(t[x] as usize)).count() as u64)
        .collect()
}

pub fn edge_boundary(a: &GroupSet, gens: &GeneratorSeq) -> Result<BoundaryStats> {
    edge_boundary_with_rank(a, gens, None)
}

pub fn edge_boundary_with_rank(
    a: &GroupSet,
    gens: &GeneratorSeq,
    rank: Option<usize>,
) -> Result<BoundaryStats> {
    if a.spec() != gens.spec() {
        return Err(Error::SpecMismatch);
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if gens.is_empty() {
        return Err(Error::InvalidParameter("generator sequence is empty".into()));
    }
    if rank == Some(0) {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    let per_generator = count_boundary(a, &gens.translation_tables());
    let total = per_generator.iter().sum();
    let size = a.len() as u64;
    Ok(BoundaryStats {
        total,
        gamma: slack(total, gens.len() as u64, size),
        gamma_rank: rank.map(|n| slack(total, n as u64, size)),
        per_generator,
        set_size: a.len(),
        generator_count: gens.len(),
    })
}

/// `m^∂ · |A|^{|A|} >= |G|^{|A|}`, the cleared form of `∂ >= |A| log_m(|G|/|A|)`.
pub fn bl_bound_verdict(boundary: u64, size: u64, order: u64, m: u64) -> BoundCheck {
    let lhs = PowerProduct::pow(m, boundary).times(size, size);
    let rhs = PowerProduct::pow(order, size);
    BoundCheck::compare(&lhs, &rhs, None)
}

/// `|A| >= base^γ*` with `γ* = 1 − ∂/(n|A|)`, tested as `|A|^q >= base^p`.
pub fn power_of_gamma_verdict(boundary: u64, size: u64, n: u64, base: u64) -> BoundCheck {
    let gamma = slack(boundary, n, size);
    if gamma <= Frac::zero() {
        return BoundCheck::vacuous(Some(gamma));
    }
    let (p, q) = crate::exact::parts(&gamma);
    BoundCheck::compare(
        &PowerProduct::pow(size, q),
        &PowerProduct::pow(base, p),
        Some(gamma),
    )
}

/// `|A| >= 4^{(1−1/d)γ* n}`, tested as `|A|^q >= 4^p`.
pub fn generalcase_verdict(boundary: u64, size: u64, n: u64, d: u64) -> BoundCheck {
    let gamma = slack(boundary, n, size);
    if gamma <= Frac::zero() {
        return BoundCheck::vacuous(Some(gamma));
    }
    let exponent = (Frac::from_integer(1) - Frac::new(1, d as i64)) * gamma * Frac::from(n as i64);
    let (p, q) = crate::exact::parts(&exponent);
    BoundCheck::compare(&PowerProduct::pow(size, q), &PowerProduct::pow(4, p), Some(gamma))
}

fn require_homocyclic_234(spec: &GroupSpec) -> Result<usize> {
    let rank = spec
        .rank()
        .filter(|&r| r > 0)
        .ok_or_else(|| Error::Hypothesis(format!("{spec} is not a non-trivial homocyclic group")))?;
    if !(2..=4).contains(&spec.exponent()) {
        return Err(Error::Hypothesis(format!("exponent of {spec} is not in {{2,3,4}}")));
    }
    Ok(rank)
}

fn require_generating(gens: &GeneratorSeq) -> Result<()> {
    if span(gens).len() != gens.spec().order() {
        return Err(Error::NotGenerating);
    }
    Ok(())
}

fn require_same(a: &GroupSet, gens: &GeneratorSeq) -> Result<()> {
    if a.spec() != gens.spec() {
        return Err(Error::SpecMismatch);
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// The lower bound `∂_S(A) >= |A| log_m(|G|/|A|)` for homocyclic groups of
/// exponent `m ∈ {2,3,4}` and generating `S`.
pub fn bl_lower_bound(a: &GroupSet, gens: &GeneratorSeq) -> Result<BoundCheck> {
    require_same(a, gens)?;
    require_homocyclic_234(a.spec())?;
    require_generating(gens)?;
    let total: u64 = count_boundary(a, &gens.translation_tables()).iter().sum();
    Ok(bl_bound_verdict(
        total,
        a.len() as u64,
        a.spec().order() as u64,
        a.spec().exponent(),
    ))
}

pub fn bl_lower_bound_holds(a: &GroupSet, gens: &GeneratorSeq) -> Result<bool> {
    bl_lower_bound(a, gens).map(|c| c.holds())
}

/// `|A| >= |G|^γ` with `n = rk G`, for homocyclic `G` of exponent 2, 3 or 4.
pub fn theorem_exp234(a: &GroupSet, gens: &GeneratorSeq) -> Result<BoundCheck> {
    require_same(a, gens)?;
    let rank = require_homocyclic_234(a.spec())?;
    require_generating(gens)?;
    let total: u64 = count_boundary(a, &gens.translation_tables()).iter().sum();
    Ok(power_of_gamma_verdict(
        total,
        a.len() as u64,
        rank as u64,
        a.spec().order() as u64,
    ))
}

pub fn theorem_exp234_holds(a: &GroupSet, gens: &GeneratorSeq) -> Result<bool> {
    theorem_exp234(a, gens).map(|c| c.holds())
}

/// `|A| >= 4^{(1−1/d)γn}` with `n = |S|`, `d = min ord s`, `S` independent.
pub fn theorem_generalcase(a: &GroupSet, gens: &GeneratorSeq) -> Result<BoundCheck> {
    require_same(a, gens)?;
    if gens.is_empty() {
        return Err(Error::InvalidParameter("generator sequence is empty".into()));
    }
    if !is_independent(gens) {
        return Err(Error::Dependent);
    }
    let d = gens.min_order().expect("non-empty");
    let total: u64 = count_boundary(a, &gens.translation_tables()).iter().sum();
    Ok(generalcase_verdict(total, a.len() as u64, gens.len() as u64, d))
}

pub fn theorem_generalcase_holds(a: &GroupSet, gens: &GeneratorSeq) -> Result<bool> {
    theorem_generalcase(a, gens).map(|c| c.holds())
}

/// Rank of a subgroup of an elementary abelian `p`-group: `log_p |H|`.
pub(crate) fn elementary_rank(order: usize, p: u64) -> u64 {
    let mut r = 0;
    let mut x = order as u64;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        r += 1;
    }
    r
}

/// Kernel for the coset-decomposition corollary; `h_rank = 0` means `S ⊆ {0}`,
/// where the conclusion `|A| >= 1` is immediate.
pub fn cosetdecomp_verdict(boundary: u64, size: u64, h_order: u64, h_rank: u64) -> BoundCheck {
    if h_rank == 0 {
        return BoundCheck::vacuous(None);
    }
    power_of_gamma_verdict(boundary, size, h_rank, h_order)
}

/// `|A| >= |H|^γ` with `H = ⟨S⟩`, `n = rk H`, in groups of exponent 2 or 3.
pub fn corollary_cosetdecomp(a: &GroupSet, gens: &GeneratorSeq) -> Result<BoundCheck> {
    require_same(a, gens)?;
    if gens.is_empty() {
        return Err(Error::InvalidParameter("generator sequence is empty".into()));
    }
    let exp = a.spec().exponent();
    if exp != 2 && exp != 3 {
        return Err(Error::Hypothesis(format!(
            "exponent {exp} of {} is not in {{2,3}}",
            a.spec()
        )));
    }
    let h = span(gens);
    let total: u64 = count_boundary(a, &gens.translation_tables()).iter().sum();
    Ok(cosetdecomp_verdict(
        total,
        a.len() as u64,
        h.len() as u64,
        elementary_rank(h.len(), exp),
    ))
}

pub fn corollary_cosetdecomp_holds(a: &GroupSet, gens: &GeneratorSeq) -> Result<bool> {
    corollary_cosetdecomp(a, gens).map(|c| c.holds())
}
