//! Difference spectra, popular differences, and exact search for the largest
//! independent and dissociated subsets.

use num_traits::Zero;
use serde::Serialize;

use crate::boundary::count_boundary;
use crate::error::{Error, Result};
use crate::exact::{format_frac, frac_string, parts, Frac, PowerProduct};
use crate::group::{min_nonzero_order, GeneratorSeq, GroupSet, GroupSpec};
use crate::verdict::{BoundCheck, Outcome};

/// Default cap on the candidate pool of the dimension searches.
pub const DEFAULT_SEARCH_CAP: usize = 24;

/// `r_A(g) = |{(a, a′) ∈ A×A : g = a − a′}|` for every `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffSpectrum {
    spec: GroupSpec,
    size: usize,
    counts: Vec<u64>,
}

impl DiffSpectrum {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// `|A|`.
    pub fn set_size(&self) -> usize {
        self.size
    }

    /// `r_A` indexed by element index.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn r(&self, g: &crate::group::Element) -> u64 {
        self.counts[self.spec.index_of(g)]
    }

    /// `P_γ(A) = {g : r_A(g) >= γ|A|}`, compared as `r·q >= p·|A|`.
    pub fn popular(&self, gamma: &Frac) -> Result<GroupSet> {
        check_gamma(gamma)?;
        let (p, q) = parts(gamma);
        let threshold = p as u128 * self.size as u128;
        Ok(GroupSet::from_indices(
            &self.spec,
            (0..self.counts.len()).filter(|&g| self.counts[g] as u128 * q as u128 >= threshold),
        ))
    }
}

fn check_gamma(gamma: &Frac) -> Result<()> {
    if *gamma <= Frac::zero() || *gamma > Frac::from_integer(1) {
        return Err(Error::GammaOutOfRange(format_frac(gamma)));
    }
    Ok(())
}

pub fn diff_spectrum(a: &GroupSet) -> Result<DiffSpectrum> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let spec = a.spec();
    let members: Vec<usize> = a.indices().collect();
    let negs: Vec<usize> = a
        .elements()
        .map(|x| spec.index_of(&spec.neg(&x)))
        .collect();
    let mut counts = vec![0u64; spec.order()];
    for &x in &members {
        for &y in &negs {
            counts[spec.add_indices(x, y)] += 1;
        }
    }
    Ok(DiffSpectrum {
        spec: spec.clone(),
        size: members.len(),
        counts,
    })
}

pub fn popular_diffs(a: &GroupSet, gamma: &Frac) -> Result<GroupSet> {
    check_gamma(gamma)?;
    diff_spectrum(a)?.popular(gamma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DimensionKind {
    Independent,
    Dissociated,
}

/// A certified maximum: `witness` passes the predicate and the search was exhaustive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub value: usize,
    pub witness: GroupSet,
    pub kind: DimensionKind,
    /// `0` was present in the pool and removed before searching.
    pub zero_excluded: bool,
}

/// Subset sums of a growing dissociated set, kept as a list and a bitmap.
struct SubsetSums {
    list: Vec<usize>,
    member: Vec<bool>,
}

impl SubsetSums {
    fn new(order: usize) -> Self {
        let mut member = vec![false; order];
        member[0] = true;
        Self {
            list: vec![0],
            member,
        }
    }

    fn accepts(&self, spec: &GroupSpec, x: usize) -> bool {
        self.list.iter().all(|&s| !self.member[spec.add_indices(s, x)])
    }

    fn push(&mut self, spec: &GroupSpec, x: usize) -> usize {
        let old = self.list.len();
        for k in 0..old {
            let y = spec.add_indices(self.list[k], x);
            self.member[y] = true;
            self.list.push(y);
        }
        old
    }

    fn pop(&mut self, old: usize) {
        for &y in &self.list[old..] {
            self.member[y] = false;
        }
        self.list.truncate(old);
    }
}

pub fn is_dissociated(b: &GroupSet) -> Result<bool> {
    is_dissociated_capped(b, DEFAULT_SEARCH_CAP)
}

/// The `2^{|B|}` subset sums of `B` are pairwise distinct.
pub fn is_dissociated_capped(b: &GroupSet, cap: usize) -> Result<bool> {
    let size = b.len();
    if size > cap {
        return Err(Error::SearchCapExceeded { size, cap });
    }
    let spec = b.spec();
    let mut sums = SubsetSums::new(spec.order());
    for x in b.indices() {
        if !sums.accepts(spec, x) {
            return Ok(false);
        }
        sums.push(spec, x);
    }
    Ok(true)
}

fn candidate_pool(p: &GroupSet, cap: usize) -> Result<(Vec<usize>, bool)> {
    let zero_excluded = p.contains_index(0);
    let pool: Vec<usize> = p.indices().filter(|&x| x != 0).collect();
    if pool.len() > cap {
        return Err(Error::SearchCapExceeded {
            size: pool.len(),
            cap,
        });
    }
    Ok((pool, zero_excluded))
}

/// Largest `r` with `base^r <= bound`.
fn floor_log(bound: usize, base: usize) -> usize {
    let mut r = 0;
    let mut x = bound;
    while x >= base {
        x /= base;
        r += 1;
    }
    r
}

pub fn dim_independent(p: &GroupSet) -> Result<DimensionResult> {
    dim_independent_capped(p, DEFAULT_SEARCH_CAP)
}

/// Exact `dim_I(P \ {0})` by backtracking over spans.
///
/// Adding `c` to an independent set with span `H` keeps it independent iff
/// no `k·c` with `0 < k < ord(c)` lies in `H`. Every accepted element
/// multiplies `|H|` by at least the smallest non-zero order, which bounds the
/// remaining depth.
pub fn dim_independent_capped(p: &GroupSet, cap: usize) -> Result<DimensionResult> {
    let (pool, zero_excluded) = candidate_pool(p, cap)?;
    let spec = p.spec();
    let mut search = IndependentSearch {
        spec,
        pool: &pool,
        orders: pool
            .iter()
            .map(|&x| spec.order_of(&spec.element_at(x)) as usize)
            .collect(),
        min_step: min_nonzero_order(spec).unwrap_or(2) as usize,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    let mut span = vec![false; spec.order()];
    span[0] = true;
    search.run(0, &[0], &mut span);
    Ok(DimensionResult {
        value: search.best.len(),
        witness: GroupSet::from_indices(spec, search.best.iter().copied()),
        kind: DimensionKind::Independent,
        zero_excluded,
    })
}

struct IndependentSearch<'a> {
    spec: &'a GroupSpec,
    pool: &'a [usize],
    orders: Vec<usize>,
    min_step: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl IndependentSearch<'_> {
    fn run(&mut self, start: usize, members: &[usize], span: &mut [bool]) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let room = floor_log(self.spec.order() / members.len(), self.min_step);
        let bound = self.chosen.len() + room.min(self.pool.len() - start);
        if bound <= self.best.len() {
            return;
        }
        for j in start..self.pool.len() {
            let c = self.pool[j];
            let ord = self.orders[j];
            // multiples k·c for 0 < k < ord must avoid the current span
            let mut multiples = Vec::with_capacity(ord);
            multiples.push(0);
            let mut x = c;
            let mut free = true;
            for _ in 1..ord {
                if span[x] {
                    free = false;
                    break;
                }
                multiples.push(x);
                x = self.spec.add_indices(x, c);
            }
            if !free {
                continue;
            }
            let mut grown = Vec::with_capacity(members.len() * ord);
            for &h in members {
                for &m in &multiples {
                    grown.push(self.spec.add_indices(h, m));
                }
            }
            for &g in &grown {
                span[g] = true;
            }
            self.chosen.push(c);
            self.run(j + 1, &grown, span);
            self.chosen.pop();
            for &g in &grown {
                span[g] = false;
            }
            for &h in members {
                span[h] = true;
            }
            if self.best.len() >= self.chosen.len() + room.min(self.pool.len() - start) {
                return;
            }
        }
    }
}

pub fn dim_dissociated(p: &GroupSet) -> Result<DimensionResult> {
    dim_dissociated_capped(p, DEFAULT_SEARCH_CAP)
}

/// Exact `dim_D(P \ {0})` by backtracking over subset-sum sets; a dissociated
/// set of size `k` has `2^k` distinct sums, so `2^k <= |G|`.
pub fn dim_dissociated_capped(p: &GroupSet, cap: usize) -> Result<DimensionResult> {
    let (pool, zero_excluded) = candidate_pool(p, cap)?;
    let spec = p.spec();
    let mut search = DissociatedSearch {
        spec,
        pool: &pool,
        sums: SubsetSums::new(spec.order()),
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.run(0);
    Ok(DimensionResult {
        value: search.best.len(),
        witness: GroupSet::from_indices(spec, search.best.iter().copied()),
        kind: DimensionKind::Dissociated,
        zero_excluded,
    })
}

struct DissociatedSearch<'a> {
    spec: &'a GroupSpec,
    pool: &'a [usize],
    sums: SubsetSums,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl DissociatedSearch<'_> {
    fn run(&mut self, start: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let room = floor_log(self.spec.order() / self.sums.list.len(), 2);
        let bound = self.chosen.len() + room.min(self.pool.len() - start);
        if bound <= self.best.len() {
            return;
        }
        for j in start..self.pool.len() {
            let c = self.pool[j];
            if !self.sums.accepts(self.spec, c) {
                continue;
            }
            let mark = self.sums.push(self.spec, c);
            self.chosen.push(c);
            self.run(j + 1);
            self.chosen.pop();
            self.sums.pop(mark);
            if self.best.len() >= self.chosen.len() + room.min(self.pool.len() - j - 1) {
                return;
            }
        }
    }
}

/// Outcome of the popular-difference dimension bound for one `(A, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepaCheck {
    #[serde(with = "frac_string")]
    pub gamma: Frac,
    pub popular_size: usize,
    pub dimension: usize,
    /// Smallest order of a non-zero element.
    pub min_order: u64,
    /// `|A| >= 4^{(1−1/p)γ·dim}`, equivalent to the `log₂` form.
    pub general: BoundCheck,
    /// `|A| >= 3^{γ·dim}` when `exp(G) = 3`.
    pub exponent_three: Option<BoundCheck>,
    pub outcome: Outcome,
    /// Zero was removed from the popular set before the dimension search.
    pub zero_excluded: bool,
}

impl RepaCheck {
    pub fn holds(&self) -> bool {
        self.outcome.holds()
    }
}

pub fn theorem_repa(a: &GroupSet, gamma: &Frac) -> Result<(RepaCheck, DimensionResult)> {
    theorem_repa_capped(a, gamma, DEFAULT_SEARCH_CAP)
}

/// `dim_I(P_γ(A)) <= (2(1−1/p))^{-1} γ^{-1} log₂|A|`, and for `exp(G) = 3`
/// also `dim_I(P_γ(A)) <= γ^{-1} log₃|A|`, both cleared to power comparisons.
pub fn theorem_repa_capped(
    a: &GroupSet,
    gamma: &Frac,
    cap: usize,
) -> Result<(RepaCheck, DimensionResult)> {
    check_gamma(gamma)?;
    let spec = a.spec();
    let p = min_nonzero_order(spec)?;
    let popular = diff_spectrum(a)?.popular(gamma)?;
    let dim = dim_independent_capped(&popular, cap)?;
    let check = repa_verdict(a.len() as u64, gamma, dim.value as u64, p, spec.exponent());
    Ok((
        RepaCheck {
            popular_size: popular.len(),
            zero_excluded: dim.zero_excluded,
            ..check
        },
        dim,
    ))
}

pub(crate) fn repa_verdict(size: u64, gamma: &Frac, dim: u64, p: u64, exponent: u64) -> RepaCheck {
    let n = Frac::from_integer(dim as i64);
    let general_exp = (Frac::from_integer(1) - Frac::new(1, p as i64)) * gamma * n;
    let (gp, gq) = parts(&general_exp);
    let general = BoundCheck::compare(
        &PowerProduct::pow(size, gq),
        &PowerProduct::pow(4, gp),
        Some(*gamma),
    );
    let exponent_three = (exponent == 3).then(|| {
        let (tp, tq) = parts(&(gamma * n));
        BoundCheck::compare(
            &PowerProduct::pow(size, tq),
            &PowerProduct::pow(3, tp),
            Some(*gamma),
        )
    });
    let outcome = std::iter::once(general.outcome)
        .chain(exponent_three.as_ref().map(|c| c.outcome))
        .max()
        .expect("at least one bound");
    RepaCheck {
        gamma: *gamma,
        popular_size: 0,
        dimension: dim as usize,
        min_order: p,
        general,
        exponent_three,
        outcome,
        zero_excluded: false,
    }
}

/// For `S ⊆ P_γ(A)`, every `s` yields at least `γ|A|` pairs with `a + s ∈ A`,
/// so `∂_S(A) <= (1−γ)|S||A|`. Returns that verdict, exactly.
pub fn popular_boundary_bound(a: &GroupSet, gens: &GeneratorSeq, gamma: &Frac) -> Result<bool> {
    check_gamma(gamma)?;
    if !gens.as_set().is_subset(&popular_diffs(a, gamma)?) {
        return Err(Error::Hypothesis("generators are not all γ-popular".into()));
    }
    let total: u64 = count_boundary(a, &gens.translation_tables()).iter().sum();
    let (p, q) = parts(gamma);
    let rhs = (q - p) as u128 * gens.len() as u128 * a.len() as u128;
    Ok(total as u128 * q as u128 <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_independent, span, Element};

    fn el(spec: &GroupSpec, c: &[u64]) -> Element {
        spec.element(c).unwrap()
    }

    fn mask_set(spec: &GroupSpec, mask: u64) -> GroupSet {
        GroupSet::from_mask(spec, mask)
    }

    /// All subset sums distinct, by listing them.
    fn dissociated_brute(b: &GroupSet) -> bool {
        let spec = b.spec();
        let elems: Vec<Element> = b.elements().collect();
        let mut seen = std::collections::HashSet::new();
        for m in 0u32..1 << elems.len() {
            let mut s = spec.zero();
            for (i, e) in elems.iter().enumerate() {
                if m >> i & 1 == 1 {
                    s = spec.add(&s, e).unwrap();
                }
            }
            if !seen.insert(s) {
                return false;
            }
        }
        true
    }

    /// Maximum over all subsets of P \ {0}.
    fn dim_brute(p: &GroupSet, pred: impl Fn(&GroupSet) -> bool) -> usize {
        let pool: Vec<usize> = p.indices().filter(|&x| x != 0).collect();
        let mut best = 0;
        for m in 0u32..1 << pool.len() {
            let sub = GroupSet::from_indices(
                p.spec(),
                pool.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &x)| x),
            );
            if sub.len() > best && pred(&sub) {
                best = sub.len();
            }
        }
        best
    }

    #[test]
    fn spectra() {
        let g = GroupSpec::new(vec![2, 4]).unwrap();
        let zero = GroupSet::from_elements(&g, &[g.zero()]).unwrap();
        let sp = diff_spectrum(&zero).unwrap();
        assert_eq!(sp.counts()[0], 1);
        assert_eq!(sp.counts().iter().sum::<u64>(), 1);

        let h = span(&GeneratorSeq::new(&g, vec![el(&g, &[1, 2])]).unwrap());
        let sp = diff_spectrum(&h).unwrap();
        for x in g.elements() {
            assert_eq!(sp.r(&x), if h.contains(&x) { 2 } else { 0 });
        }
        assert_eq!(diff_spectrum(&GroupSet::empty(&g)).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn popular_examples() {
        let v = GroupSpec::homocyclic(2, 2).unwrap();
        let a = GroupSet::from_elements(&v, &[v.zero(), el(&v, &[1, 0])]).unwrap();
        let p = popular_diffs(&a, &Frac::from_integer(1)).unwrap();
        assert_eq!(p, a);
        assert!(matches!(
            popular_diffs(&a, &Frac::from_integer(0)),
            Err(Error::GammaOutOfRange(_))
        ));
        assert!(popular_diffs(&a, &Frac::new(3, 2)).is_err());
    }

    #[test]
    fn dissociativity() {
        let v = GroupSpec::homocyclic(2, 2).unwrap();
        assert!(is_dissociated(&GroupSet::from_elements(&v, &[el(&v, &[1, 0])]).unwrap()).unwrap());
        assert!(!is_dissociated(&GroupSet::full(&v).without_zero()).unwrap());
        let big = GroupSpec::new(vec![64]).unwrap();
        assert!(matches!(
            is_dissociated(&GroupSet::full(&big)),
            Err(Error::SearchCapExceeded { size: 64, cap: 24 })
        ));
        for moduli in [vec![2, 2, 2], vec![3, 3]] {
            let g = GroupSpec::new(moduli).unwrap();
            for m in 0u64..1 << g.order() {
                let b = mask_set(&g, m);
                let dis = is_dissociated(&b).unwrap();
                assert_eq!(dis, dissociated_brute(&b));
                if !b.contains_index(0) && is_independent(&GeneratorSeq::from_set(&b)) {
                    assert!(dis);
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let v = GroupSpec::homocyclic(2, 2).unwrap();
        let zero = GroupSet::from_elements(&v, &[v.zero()]).unwrap();
        let r = dim_independent(&zero).unwrap();
        assert_eq!((r.value, r.zero_excluded), (0, true));
        assert_eq!(dim_dissociated(&zero).unwrap().value, 0);
        assert_eq!(dim_independent(&GroupSet::full(&v).without_zero()).unwrap().value, 2);

        let g = GroupSpec::new(vec![2, 4]).unwrap();
        let r = dim_independent(&GroupSet::full(&g)).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.value, dim_brute(&GroupSet::full(&g), |s| is_independent(&GeneratorSeq::from_set(s))));
        assert!(is_independent(&GeneratorSeq::from_set(&r.witness)));
    }

    #[test]
    fn searches_match_brute_force() {
        for moduli in [vec![2, 2, 2], vec![3, 3], vec![2, 4], vec![6], vec![4, 4]] {
            let g = GroupSpec::new(moduli).unwrap();
            let order = g.order();
            let step = if order <= 9 { 1 } else { 997 };
            let mut m = 0u64;
            while m < 1 << order {
                let p = mask_set(&g, m);
                let di = dim_independent(&p).unwrap();
                let dd = dim_dissociated(&p).unwrap();
                if p.len() <= 12 {
                    assert_eq!(di.value, dim_brute(&p, |s| is_independent(&GeneratorSeq::from_set(s))));
                    assert_eq!(dd.value, dim_brute(&p, dissociated_brute));
                }
                assert!(is_independent(&GeneratorSeq::from_set(&di.witness)));
                assert!(dissociated_brute(&dd.witness));
                assert!(di.value <= dd.value);
                if g.exponent() <= 3 {
                    assert_eq!(di.value, dd.value);
                }
                m += step;
            }
        }
    }

    #[test]
    fn repa_trivial_and_bridge() {
        let g = GroupSpec::homocyclic(2, 3).unwrap();
        let zero = GroupSet::from_elements(&g, &[g.zero()]).unwrap();
        let (c, d) = theorem_repa(&zero, &Frac::new(1, 2)).unwrap();
        assert_eq!(d.value, 0);
        assert_eq!(c.popular_size, 1);
        assert!(c.holds());

        for m in 1u64..256 {
            let a = mask_set(&g, m);
            for gamma in [Frac::new(1, 4), Frac::new(1, 2), Frac::from_integer(1)] {
                let (c, d) = theorem_repa(&a, &gamma).unwrap();
                assert!(c.holds());
                if d.value > 0 {
                    let s = GeneratorSeq::from_set(&d.witness);
                    assert!(popular_boundary_bound(&a, &s, &gamma).unwrap());
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn setup() -> impl Strategy<Value = (GroupSpec, u64, usize)> {
            prop::collection::vec(2u32..6, 1..4)
                .prop_filter("small", |m| m.iter().product::<u32>() <= 64)
                .prop_flat_map(|m| {
                    let g = GroupSpec::new(m).unwrap();
                    let n = g.order();
                    (Just(g), 1u64.., 0..n)
                })
        }

        proptest! {
            #[test]
            fn spectrum_identities((g, mask, shift) in setup(), gp in 1i64..5, gq in 1i64..5) {
                let a = GroupSet::from_indices(&g, (0..g.order()).filter(|&i| mask >> (i % 64) & 1 == 1));
                prop_assume!(!a.is_empty());
                let sp = diff_spectrum(&a).unwrap();
                let n = a.len() as u64;
                prop_assert_eq!(sp.counts()[0], n);
                prop_assert_eq!(sp.counts().iter().sum::<u64>(), n * n);
                for x in g.elements() {
                    prop_assert_eq!(sp.r(&x), sp.r(&g.neg(&x)));
                }
                let moved = diff_spectrum(&a.translate(&g.element_at(shift))).unwrap();
                prop_assert_eq!(moved.counts(), sp.counts());

                let lo = Frac::new(gp.min(gq), gp.max(gq));
                let hi = Frac::from_integer(1);
                let p_lo = sp.popular(&lo).unwrap();
                let p_hi = sp.popular(&hi).unwrap();
                prop_assert!(p_hi.is_subset(&p_lo));
                prop_assert!(p_lo.contains_index(0));
                for x in p_lo.elements() {
                    prop_assert!(p_lo.contains(&g.neg(&x)));
                }
                let s = GeneratorSeq::from_set(&p_lo);
                prop_assert!(popular_boundary_bound(&a, &s, &lo).unwrap());
            }
        }
    }
}
