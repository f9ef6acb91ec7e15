//! Finite abelian groups `C_{m_1} ⊕ … ⊕ C_{m_n}` with mixed-radix element
//! indexing, dense subsets, and generator sequences.
//!
//! Element `g` has index `Σ g_i · Π_{j<i} m_j`; every set in the crate is a
//! bit array over these indices.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the group order.
pub const DEFAULT_MAX_GROUP: usize = 1 << 24;

/// Environment variable overriding [`DEFAULT_MAX_GROUP`].
pub const MAX_GROUP_ENV: &str = "ISOPERIM_MAX_GROUP";

/// The configured cap: `ISOPERIM_MAX_GROUP` when set and parseable, else 2^24.
pub fn max_group_size() -> usize {
    std::env::var(MAX_GROUP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP)
}

/// A finite abelian group given as a direct sum of cyclic groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    moduli: Vec<u32>,
    strides: Vec<usize>,
    order: usize,
}

impl GroupSpec {
    /// Builds the group with the configured size cap.
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        Self::with_cap(moduli, max_group_size())
    }

    pub fn with_cap(moduli: Vec<u32>, cap: usize) -> Result<Self> {
        let mut strides = Vec::with_capacity(moduli.len());
        let mut order: u128 = 1;
        for &m in &moduli {
            if m < 2 {
                return Err(Error::InvalidModulus(m as u64));
            }
            strides.push(order as usize);
            order *= m as u128;
            if order > cap as u128 {
                return Err(Error::GroupTooLarge { order, cap });
            }
        }
        Ok(Self {
            moduli,
            strides,
            order: order as usize,
        })
    }

    /// `C_m^n`.
    pub fn homocyclic(m: u32, n: usize) -> Result<Self> {
        Self::new(vec![m; n])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Number of cyclic factors.
    pub fn num_factors(&self) -> usize {
        self.moduli.len()
    }

    /// `|G|`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `exp(G) = lcm(m_i)`; 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1u64, |acc, &m| acc.lcm(&(m as u64)))
    }

    pub fn is_homocyclic(&self) -> bool {
        self.moduli.windows(2).all(|w| w[0] == w[1])
    }

    /// `rk G` for a homocyclic group, `None` otherwise.
    pub fn rank(&self) -> Option<usize> {
        self.is_homocyclic().then_some(self.moduli.len())
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.moduli.len()])
    }

    /// Standard generator `e_i` (0-based).
    pub fn basis_element(&self, i: usize) -> Element {
        let mut c = vec![0; self.moduli.len()];
        c[i] = 1;
        Element(c)
    }

    /// Validates coordinates, which must already be reduced.
    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.moduli.len()
            || coords.iter().zip(&self.moduli).any(|(&c, &m)| c >= m as u64)
        {
            return Err(Error::ElementMismatch {
                coords: coords.to_vec(),
                moduli: self.moduli.clone(),
            });
        }
        Ok(Element(coords.iter().map(|&c| c as u32).collect()))
    }

    /// Reduces arbitrary integer coordinates modulo the moduli.
    pub fn reduce(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.moduli.len() {
            return Err(Error::ElementMismatch {
                coords: coords.iter().map(|&c| c as u64).collect(),
                moduli: self.moduli.clone(),
            });
        }
        Ok(Element(
            coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u32)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &Element) -> bool {
        g.0.len() == self.moduli.len() && g.0.iter().zip(&self.moduli).all(|(&c, &m)| c < m)
    }

    fn check(&self, g: &Element) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Mixed-radix index of `g`.
    pub fn index_of(&self, g: &Element) -> usize {
        g.0.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    /// Inverse of [`GroupSpec::index_of`].
    pub fn element_at(&self, mut index: usize) -> Element {
        debug_assert!(index < self.order);
        let coords = self
            .moduli
            .iter()
            .map(|&m| {
                let c = index % m as usize;
                index /= m as usize;
                c as u32
            })
            .collect();
        Element(coords)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(|i| self.element_at(i))
    }

    pub fn add(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.add_unchecked(g, h))
    }

    pub(crate) fn add_unchecked(&self, g: &Element, h: &Element) -> Element {
        Element(
            g.0.iter()
                .zip(&h.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &m)| ((a as u64 + b as u64) % m as u64) as u32)
                .collect(),
        )
    }

    pub fn neg(&self, g: &Element) -> Element {
        Element(
            g.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| if a == 0 { 0 } else { m - a })
                .collect(),
        )
    }

    pub fn sub(&self, g: &Element, h: &Element) -> Result<Element> {
        self.add(g, &self.neg(h))
    }

    /// `k·g`.
    pub fn scale(&self, g: &Element, k: u64) -> Element {
        Element(
            g.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| ((a as u64 * (k % m as u64)) % m as u64) as u32)
                .collect(),
        )
    }

    /// Index of `element_at(a) + element_at(b)`.
    pub fn add_indices(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for (&m, &s) in self.moduli.iter().zip(&self.strides) {
            let m = m as usize;
            let c = (a % m + b % m) % m;
            out += c * s;
            a /= m;
            b /= m;
        }
        out
    }

    /// Table `x ↦ index(x + g)` over all element indices.
    pub fn translation_table(&self, g: &Element) -> Vec<u32> {
        let mut table = Vec::with_capacity(self.order);
        let mut coords = vec![0u32; self.moduli.len()];
        for _ in 0..self.order {
            let idx: usize = coords
                .iter()
                .zip(&g.0)
                .zip(self.moduli.iter().zip(&self.strides))
                .map(|((&c, &d), (&m, &s))| ((c + d) % m) as usize * s)
                .sum();
            table.push(idx as u32);
            // odometer step
            for (c, &m) in coords.iter_mut().zip(&self.moduli) {
                *c += 1;
                if *c < m {
                    break;
                }
                *c = 0;
            }
        }
        table
    }

    /// Least `k >= 1` with `k·g = 0`, i.e. `lcm_i m_i / gcd(g_i, m_i)`.
    pub fn order_of(&self, g: &Element) -> u64 {
        g.0.iter().zip(&self.moduli).fold(1u64, |acc, (&c, &m)| {
            let m = m as u64;
            acc.lcm(&(m / (c as u64).gcd(&m)))
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "C_1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("C_{m}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// A group element as reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(Vec<u32>);

impl Element {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A subset of a finite abelian group, stored as a dense bit indicator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSet {
    spec: GroupSpec,
    bits: Vec<u64>,
}

impl GroupSet {
    pub fn empty(spec: &GroupSpec) -> Self {
        Self {
            spec: spec.clone(),
            bits: vec![0; spec.order().div_ceil(64)],
        }
    }

    pub fn full(spec: &GroupSpec) -> Self {
        Self::from_indices(spec, 0..spec.order())
    }

    pub fn from_indices(spec: &GroupSpec, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(spec);
        for i in indices {
            s.insert_index(i);
        }
        s
    }

    pub fn from_elements<'a>(
        spec: &GroupSpec,
        elements: impl IntoIterator<Item = &'a Element>,
    ) -> Result<Self> {
        let mut s = Self::empty(spec);
        for g in elements {
            spec.check(g)?;
            s.insert_index(spec.index_of(g));
        }
        Ok(s)
    }

    /// Builds a subset of a group of order at most 64 from a bitmask over indices.
    pub fn from_mask(spec: &GroupSpec, mask: u64) -> Self {
        debug_assert!(spec.order() <= 64);
        let mut s = Self::empty(spec);
        if !s.bits.is_empty() {
            s.bits[0] = mask;
        }
        s
    }

    /// The bitmask of a subset of a group of order at most 64.
    pub fn mask(&self) -> Option<u64> {
        (self.spec.order() <= 64).then(|| self.bits.first().copied().unwrap_or(0))
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.spec.contains(g) && self.contains_index(self.spec.index_of(g))
    }

    #[inline]
    pub fn insert_index(&mut self, i: usize) {
        self.bits[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove_index(&mut self, i: usize) {
        self.bits[i >> 6] &= !(1 << (i & 63));
    }

    pub fn insert(&mut self, g: &Element) -> Result<()> {
        self.spec.check(g)?;
        self.insert_index(self.spec.index_of(g));
        Ok(())
    }

    /// Member indices in ascending (canonical) order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.indices().map(|i| self.spec.element_at(i))
    }

    pub fn is_subset(&self, other: &GroupSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &GroupSet) -> GroupSet {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        GroupSet {
            spec: self.spec.clone(),
            bits,
        }
    }

    pub fn intersection(&self, other: &GroupSet) -> GroupSet {
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        GroupSet {
            spec: self.spec.clone(),
            bits,
        }
    }

    /// `g + A`.
    pub fn translate(&self, g: &Element) -> GroupSet {
        let table = self.spec.translation_table(g);
        GroupSet::from_indices(&self.spec, self.indices().map(|i| table[i] as usize))
    }

    /// `A \ {0}`.
    pub fn without_zero(&self) -> GroupSet {
        let mut s = self.clone();
        if self.spec.order() > 0 {
            s.remove_index(0);
        }
        s
    }
}

/// An ordered sequence of pairwise distinct group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSeq {
    spec: GroupSpec,
    elements: Vec<Element>,
}

impl GeneratorSeq {
    pub fn new(spec: &GroupSpec, elements: Vec<Element>) -> Result<Self> {
        let mut seen = GroupSet::empty(spec);
        for g in &elements {
            spec.check(g)?;
            let i = spec.index_of(g);
            if seen.contains_index(i) {
                return Err(Error::DuplicateGenerator(g.0.clone()));
            }
            seen.insert_index(i);
        }
        Ok(Self {
            spec: spec.clone(),
            elements,
        })
    }

    /// `e_1, …, e_n` for the cyclic factors of the group.
    pub fn standard(spec: &GroupSpec) -> Self {
        Self {
            spec: spec.clone(),
            elements: (0..spec.num_factors()).map(|i| spec.basis_element(i)).collect(),
        }
    }

    /// Generators taken from a set in ascending index order.
    pub fn from_set(set: &GroupSet) -> Self {
        Self {
            spec: set.spec().clone(),
            elements: set.elements().collect(),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> Option<&Element> {
        self.elements.get(i)
    }

    /// `S_i = S \ {s_i}`.
    pub fn without(&self, i: usize) -> GeneratorSeq {
        let mut elements = self.elements.clone();
        elements.remove(i);
        GeneratorSeq {
            spec: self.spec.clone(),
            elements,
        }
    }

    pub fn orders(&self) -> Vec<u64> {
        self.elements.iter().map(|s| self.spec.order_of(s)).collect()
    }

    /// `d = min ord s`; `None` when empty.
    pub fn min_order(&self) -> Option<u64> {
        self.orders().into_iter().min()
    }

    pub fn as_set(&self) -> GroupSet {
        GroupSet::from_indices(&self.spec, self.elements.iter().map(|g| self.spec.index_of(g)))
    }

    pub fn translation_tables(&self) -> Vec<Vec<u32>> {
        self.elements
            .iter()
            .map(|s| self.spec.translation_table(s))
            .collect()
    }
}

/// `⟨S⟩` by breadth-first closure from `0` under adding generators.
pub fn span(gens: &GeneratorSeq) -> GroupSet {
    span_of(gens.spec(), gens.elements())
}

pub(crate) fn span_of(spec: &GroupSpec, gens: &[Element]) -> GroupSet {
    let gen_idx: Vec<usize> = gens.iter().map(|g| spec.index_of(g)).collect();
    let mut seen = GroupSet::empty(spec);
    seen.insert_index(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &s in &gen_idx {
            let y = spec.add_indices(x, s);
            if !seen.contains_index(y) {
                seen.insert_index(y);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// True iff `⊕_{s∈S} ⟨s⟩` is direct, tested as `|⟨S⟩| = Π ord(s)`.
///
/// `0` has order 1 and never breaks independence on its own.
pub fn is_independent(gens: &GeneratorSeq) -> bool {
    let spec = gens.spec();
    let mut product: u128 = 1;
    for s in gens.elements() {
        product *= spec.order_of(s) as u128;
        if product > spec.order() as u128 {
            return false;
        }
    }
    span(gens).len() as u128 == product
}

/// Smallest order of a non-zero element: the least prime dividing some modulus.
pub fn min_nonzero_order(spec: &GroupSpec) -> Result<u64> {
    spec.moduli()
        .iter()
        .map(|&m| smallest_prime_factor(m as u64))
        .min()
        .ok_or(Error::TrivialGroup)
}

fn smallest_prime_factor(m: u64) -> u64 {
    (2..)
        .take_while(|p| p * p <= m)
        .find(|p| m.is_multiple_of(*p))
        .unwrap_or(m)
}

/// True iff `H` contains `0` and is closed under addition.
pub fn is_subgroup(h: &GroupSet) -> bool {
    let spec = h.spec();
    if !h.contains_index(0) {
        return false;
    }
    let members: Vec<usize> = h.indices().collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| h.contains_index(spec.add_indices(a, b))))
}

/// Partition of `A` by the cosets of a subgroup `H`.
///
/// Each part is `A ∩ (r + H)` with representative `r` its smallest-index
/// member; parts are listed by ascending representative.
pub fn coset_decompose(a: &GroupSet, h: &GroupSet) -> Result<Vec<(Element, GroupSet)>> {
    if a.spec() != h.spec() {
        return Err(Error::SpecMismatch);
    }
    if !is_subgroup(h) {
        return Err(Error::NotSubgroup);
    }
    let spec = a.spec();
    let members: Vec<usize> = h.indices().collect();
    let mut label = vec![usize::MAX; spec.order()];
    let mut parts: Vec<(Element, GroupSet)> = Vec::new();
    for x in a.indices() {
        if label[x] == usize::MAX {
            let id = parts.len();
            for &m in &members {
                label[spec.add_indices(x, m)] = id;
            }
            parts.push((spec.element_at(x), GroupSet::empty(spec)));
        }
        parts[label[x]].1.insert_index(x);
    }
    Ok(parts)
}
