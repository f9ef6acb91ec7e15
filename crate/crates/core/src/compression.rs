//! Compression along the generators of an independent generating sequence.
//!
//! With `G = ⟨S_i⟩ ⊕ ⟨s_i⟩`, every `g` decomposes uniquely as
//! `g = h + k·s_i` with `h ∈ ⟨S_i⟩` and `0 <= k < ord(s_i)`. Compressing `A`
//! along `s_i` keeps the number of members in every coset `h + ⟨s_i⟩` and
//! moves them onto `k = 0, 1, …`.

use std::collections::BTreeSet;

use crate::boundary::count_boundary;
use crate::downset::{avg_weight_verdict, LatticeSet};
use crate::error::{Error, Result};
use crate::group::{is_independent, span, span_of, Element, GeneratorSeq, GroupSet, GroupSpec};
use crate::verdict::BoundCheck;

/// `P(g, v, k) = {g, g+v, …, g+(k−1)v}`.
pub fn progression(spec: &GroupSpec, g: &Element, v: &Element, k: u64) -> Result<GroupSet> {
    let mut out = GroupSet::empty(spec);
    if k == 0 {
        return Ok(out);
    }
    let order = spec.order_of(v);
    if k > order {
        return Err(Error::ProgressionTooLong { len: k, order });
    }
    let mut cur = g.clone();
    for _ in 0..k {
        out.insert(&cur)?;
        cur = spec.add(&cur, v)?;
    }
    Ok(out)
}

/// Precomputed decomposition tables for an independent generating sequence.
///
/// For each generator `s_i` the context stores, for every element index, the
/// coefficient `k` and the index of the `⟨S_i⟩`-component `h`.
#[derive(Clone, Debug)]
pub struct CompressionContext {
    gens: GeneratorSeq,
    orders: Vec<u64>,
    complements: Vec<GroupSet>,
    coeff: Vec<Vec<u32>>,
    base: Vec<Vec<u32>>,
    forward: Vec<Vec<u32>>,
    backward: Vec<Vec<u32>>,
}

impl CompressionContext {
    /// Fails unless `S` is independent and generates the group.
    pub fn new(gens: &GeneratorSeq) -> Result<Self> {
        let spec = gens.spec();
        if !is_independent(gens) {
            return Err(Error::Dependent);
        }
        if span(gens).len() != spec.order() {
            return Err(Error::NotGenerating);
        }
        let n = gens.len();
        let orders = gens.orders();
        let forward = gens.translation_tables();
        let backward: Vec<Vec<u32>> = gens
            .elements()
            .iter()
            .map(|s| spec.translation_table(&spec.neg(s)))
            .collect();
        let mut complements = Vec::with_capacity(n);
        let mut coeff = Vec::with_capacity(n);
        let mut base = Vec::with_capacity(n);
        for i in 0..n {
            let others: Vec<Element> = gens.without(i).elements().to_vec();
            let comp = span_of(spec, &others);
            let mut k_of = vec![u32::MAX; spec.order()];
            let mut h_of = vec![u32::MAX; spec.order()];
            for h in comp.indices() {
                let mut g = h;
                for k in 0..orders[i] {
                    if k_of[g] != u32::MAX {
                        return Err(Error::Dependent);
                    }
                    k_of[g] = k as u32;
                    h_of[g] = h as u32;
                    g = forward[i][g] as usize;
                }
            }
            if k_of.contains(&u32::MAX) {
                return Err(Error::NotGenerating);
            }
            complements.push(comp);
            coeff.push(k_of);
            base.push(h_of);
        }
        Ok(Self {
            gens: gens.clone(),
            orders,
            complements,
            coeff,
            base,
            forward,
            backward,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        self.gens.spec()
    }

    pub fn gens(&self) -> &GeneratorSeq {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `ord(s_i)`, the length of the window `K_i = [0, ord(s_i))`.
    pub fn window(&self, i: usize) -> u64 {
        self.orders[i]
    }

    /// `⟨S_i⟩`.
    pub fn complement(&self, i: usize) -> &GroupSet {
        &self.complements[i]
    }

    /// Coefficients `(z_1, …, z_n)` of `g = Σ z_i s_i`.
    pub fn coordinates(&self, g: &Element) -> Vec<u32> {
        let x = self.spec().index_of(g);
        self.coeff.iter().map(|c| c[x]).collect()
    }

    /// Translation tables `x ↦ x + s_i`.
    pub fn forward_tables(&self) -> &[Vec<u32>] {
        &self.forward
    }

    fn check(&self, a: &GroupSet, i: usize) -> Result<()> {
        if a.spec() != self.spec() {
            return Err(Error::SpecMismatch);
        }
        if i >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(())
    }

    fn coset_sizes(&self, a: &GroupSet, i: usize) -> Vec<u32> {
        let mut counts = vec![0u32; self.spec().order()];
        for x in a.indices() {
            counts[self.base[i][x] as usize] += 1;
        }
        counts
    }
}

/// `[A]_i`.
pub fn compress_along(a: &GroupSet, ctx: &CompressionContext, i: usize) -> Result<GroupSet> {
    ctx.check(a, i)?;
    let counts = ctx.coset_sizes(a, i);
    let (coeff, base) = (&ctx.coeff[i], &ctx.base[i]);
    Ok(GroupSet::from_indices(
        ctx.spec(),
        (0..ctx.spec().order()).filter(|&g| coeff[g] < counts[base[g] as usize]),
    ))
}

/// `A \ ⟨S_i⟩ ⊆ A + s_i`.
pub fn is_compressed(a: &GroupSet, ctx: &CompressionContext, i: usize) -> Result<bool> {
    ctx.check(a, i)?;
    let back = &ctx.backward[i];
    Ok(a
        .indices()
        .all(|x| ctx.coeff[i][x] == 0 || a.contains_index(back[x] as usize)))
}

/// True when `A` is `i`-compressed for every `i`.
pub fn is_fully_compressed(a: &GroupSet, ctx: &CompressionContext) -> Result<bool> {
    for i in 0..ctx.len() {
        if !is_compressed(a, ctx, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One pass `[…[[A]_1]_2…]_n` in generator order.
pub fn full_compress(a: &GroupSet, ctx: &CompressionContext) -> Result<GroupSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut cur = a.clone();
    for i in 0..ctx.len() {
        cur = compress_along(&cur, ctx, i)?;
    }
    Ok(cur)
}

/// `φ(z_1 s_1 + … + z_n s_n) = (z_1, …, z_n)` applied to a compressed set.
pub fn phi_embed(a: &GroupSet, ctx: &CompressionContext) -> Result<LatticeSet> {
    for i in 0..ctx.len() {
        if !is_compressed(a, ctx, i)? {
            return Err(Error::NotCompressed(i));
        }
    }
    let points: BTreeSet<Vec<u32>> = a
        .indices()
        .map(|x| ctx.coeff.iter().map(|c| c[x]).collect())
        .collect();
    Ok(LatticeSet::from_sorted_unchecked(ctx.len(), points))
}

/// `(N_i, N_i′)`: cosets of `⟨s_i⟩` meeting `A`, and cosets contained in `A`.
pub fn coset_counts(a: &GroupSet, ctx: &CompressionContext, i: usize) -> Result<(u64, u64)> {
    ctx.check(a, i)?;
    let counts = ctx.coset_sizes(a, i);
    let full = ctx.orders[i] as u32;
    let meet = counts.iter().filter(|&&c| c > 0).count() as u64;
    let inside = counts.iter().filter(|&&c| c == full).count() as u64;
    Ok((meet, inside))
}

/// `w(g) = |{i : g ∉ ⟨S_i⟩}|`, the number of non-zero coefficients of `g`.
pub fn group_weight(g: &Element, ctx: &CompressionContext) -> usize {
    let x = ctx.spec().index_of(g);
    ctx.coeff.iter().filter(|c| c[x] != 0).count()
}

/// `|{a ∈ A : a + s_j ∉ A}|` for every `j`.
pub fn per_generator_boundary(a: &GroupSet, ctx: &CompressionContext) -> Vec<u64> {
    count_boundary(a, &ctx.forward)
}

/// Mean group weight of a compressed non-empty set against `½ log₂|A|`,
/// via the lattice image.
pub fn group_avg_weight(a: &GroupSet, ctx: &CompressionContext) -> Result<BoundCheck> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let image = phi_embed(a, ctx)?;
    let total: u64 = a
        .indices()
        .map(|x| ctx.coeff.iter().filter(|c| c[x] != 0).count() as u64)
        .sum();
    debug_assert_eq!(
        total,
        image.points().map(|p| crate::downset::weight(p) as u64).sum::<u64>()
    );
    Ok(avg_weight_verdict(a.len() as u64, total))
}
