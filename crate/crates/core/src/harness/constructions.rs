//! Explicit constructions with closed-form statistics.
//!
//! * `ex1 (m, k, n)`: `A = ⟨e_1..e_k⟩ ≤ C_m^n`, `S = A ∪ {e_{k+1}..e_n}`.
//!   `|S| = m^k + n − k`, `∂_S(A) = (n−k)|A|`, `γ = m^k/(m^k + n − k)`.
//! * `ex2 (m, n, k)`, `k | n`: `A = H_1 ∪ … ∪ H_k` for the block decomposition
//!   `C_m^n = H_1 ⊕ … ⊕ H_k` with `H_i ≅ C_m^{n/k}`, `S` the standard basis.
//!   `|A| = (m^{n/k} − 1)k + 1`, `∂_S(A) = (m^{n/k} − 1)(k − 1)n`.
//! * `ex3 (m, t, n)`, `1 < t < m`: `A = [0, t−1]^n ⊆ C_m^n`, standard `S`.
//!   `|A| = t^n`, `∂_S(A) = n t^{n−1}`, slack `1 − 1/t`.
//! * `ex4 (m, n, k)`: the set of `ex2` seen through its difference counts:
//!   `r_A(a) = m^{n/k}` for every non-zero `a ∈ A`, so with
//!   `γ = m^{n/k}/|A|` the popular set contains `A` and `dim_I(P_γ(A)) >= n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::boundary::edge_boundary;
use crate::error::{Error, Result};
use crate::exact::{frac_string, Frac};
use crate::group::{span_of, GeneratorSeq, GroupSet, GroupSpec};
use crate::popular::{diff_spectrum, dim_independent_capped};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExampleId {
    Ex1,
    Ex2,
    Ex3,
    Ex4,
}

impl ExampleId {
    pub const ALL: [ExampleId; 4] = [ExampleId::Ex1, ExampleId::Ex2, ExampleId::Ex3, ExampleId::Ex4];

    pub fn as_str(self) -> &'static str {
        match self {
            ExampleId::Ex1 => "ex1",
            ExampleId::Ex2 => "ex2",
            ExampleId::Ex3 => "ex3",
            ExampleId::Ex4 => "ex4",
        }
    }

    /// Names of the three integer parameters, in order.
    pub fn params(self) -> [&'static str; 3] {
        match self {
            ExampleId::Ex1 => ["m", "k", "n"],
            ExampleId::Ex2 | ExampleId::Ex4 => ["m", "n", "k"],
            ExampleId::Ex3 => ["m", "t", "n"],
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|e| e.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown example id {s:?}")))
    }
}

/// Statistics of a construction; `ex4` fills the popular-difference fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleStats {
    pub set_size: u64,
    pub generator_count: u64,
    pub boundary: u64,
    /// `1 − ∂_S(A)/(|S||A|)`.
    #[serde(with = "frac_string")]
    pub gamma: Frac,
    /// `r_A(a)` for the non-zero `a ∈ A` (all equal).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representations: Option<u64>,
    /// `m^{n/k}/|A|`.
    #[serde(
        with = "crate::exact::opt_frac_string",
        skip_serializing_if = "Option::is_none"
    )]
    pub popular_gamma: Option<Frac>,
    /// `dim_I(P_γ(A))`: the lower bound `n` when expected, the exact value when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub popular_dim: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleInstance {
    pub id: ExampleId,
    pub params: Vec<u64>,
    pub group: GroupSpec,
    pub set: GroupSet,
    pub gens: GeneratorSeq,
    pub expected: ExampleStats,
    pub computed: ExampleStats,
    /// Inequalities the construction is meant to exhibit, with their truth value.
    pub remarks: Vec<(String, bool)>,
}

fn pow(base: u64, exp: u64) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::InvalidParameter(format!("{base}^{exp} overflows")))
}

fn param(p: &[u64], i: usize) -> Result<u32> {
    u32::try_from(p[i]).map_err(|_| Error::InvalidParameter(format!("parameter {} too large", p[i])))
}

fn gamma(boundary: u64, gens: u64, size: u64) -> Frac {
    Frac::from_integer(1) - Frac::new(boundary as i64, (gens * size) as i64)
}

fn homocyclic(m: u32, n: u32) -> Result<GroupSpec> {
    if m < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("need m >= 2 and n >= 1, got m={m}, n={n}")));
    }
    GroupSpec::homocyclic(m, n as usize)
}

/// The union of the `k` coordinate blocks of size `n/k`.
fn block_union(spec: &GroupSpec, n: usize, k: usize) -> GroupSet {
    let width = n / k;
    let mut a = GroupSet::empty(spec);
    for b in 0..k {
        let basis: Vec<_> = (b * width..(b + 1) * width)
            .map(|i| spec.basis_element(i))
            .collect();
        a = a.union(&span_of(spec, &basis));
    }
    a
}

/// Builds a construction and checks its statistics against the closed forms.
pub fn build_example(id: ExampleId, params: &[u64]) -> Result<ExampleInstance> {
    if params.len() != 3 {
        return Err(Error::InvalidParameter(format!(
            "{id} takes three parameters ({}), got {}",
            id.params().join(","),
            params.len()
        )));
    }
    let inst = match id {
        ExampleId::Ex1 => ex1(param(params, 0)?, param(params, 1)?, param(params, 2)?)?,
        ExampleId::Ex2 => ex2(param(params, 0)?, param(params, 1)?, param(params, 2)?, false)?,
        ExampleId::Ex3 => ex3(param(params, 0)?, param(params, 1)?, param(params, 2)?)?,
        ExampleId::Ex4 => ex2(param(params, 0)?, param(params, 1)?, param(params, 2)?, true)?,
    };
    let ExampleInstance {
        expected, computed, ..
    } = &inst;
    let dim_ok = match (expected.popular_dim, computed.popular_dim) {
        (Some(lower), Some(value)) => value >= lower,
        (e, c) => e == c,
    };
    let same = ExampleStats {
        popular_dim: None,
        ..expected.clone()
    } == ExampleStats {
        popular_dim: None,
        ..computed.clone()
    };
    if !same || !dim_ok || inst.remarks.iter().any(|(_, ok)| !ok) {
        return Err(Error::InvalidParameter(format!(
            "{id} self-check failed: expected {expected:?}, computed {computed:?}"
        )));
    }
    Ok(ExampleInstance {
        params: params.to_vec(),
        ..inst
    })
}

fn stats(a: &GroupSet, gens: &GeneratorSeq) -> Result<ExampleStats> {
    let b = edge_boundary(a, gens)?;
    Ok(ExampleStats {
        set_size: a.len() as u64,
        generator_count: gens.len() as u64,
        boundary: b.total,
        gamma: b.gamma,
        representations: None,
        popular_gamma: None,
        popular_dim: None,
    })
}

fn ex1(m: u32, k: u32, n: u32) -> Result<ExampleInstance> {
    if k < 1 || k > n {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let spec = homocyclic(m, n)?;
    let basis: Vec<_> = (0..k as usize).map(|i| spec.basis_element(i)).collect();
    let a = span_of(&spec, &basis);
    let mut elements: Vec<_> = a.elements().collect();
    elements.extend((k as usize..n as usize).map(|i| spec.basis_element(i)));
    let gens = GeneratorSeq::new(&spec, elements)?;
    let (m, k, n) = (m as u64, k as u64, n as u64);
    let size = pow(m, k)?;
    let expected = ExampleStats {
        set_size: size,
        generator_count: size + n - k,
        boundary: (n - k) * size,
        gamma: Frac::new(size as i64, (size + n - k) as i64),
        representations: None,
        popular_gamma: None,
        popular_dim: None,
    };
    let computed = stats(&a, &gens)?;
    let remarks = vec![(
        "∂_S(A) = (1−γ)|S||A|".to_string(),
        gamma(expected.boundary, expected.generator_count, size) == expected.gamma,
    )];
    Ok(ExampleInstance {
        id: ExampleId::Ex1,
        params: vec![],
        group: spec,
        set: a,
        gens,
        expected,
        computed,
        remarks,
    })
}

fn ex2(m: u32, n: u32, k: u32, popular: bool) -> Result<ExampleInstance> {
    if k < 1 || !n.is_multiple_of(k) {
        return Err(Error::InvalidParameter(format!("need k >= 1 dividing n, got n={n}, k={k}")));
    }
    let spec = homocyclic(m, n)?;
    let a = block_union(&spec, n as usize, k as usize);
    let gens = GeneratorSeq::standard(&spec);
    let (m, n, k) = (m as u64, n as u64, k as u64);
    let block = pow(m, n / k)?;
    let size = (block - 1) * k + 1;
    let boundary = (block - 1) * (k - 1) * n;
    let mut expected = ExampleStats {
        set_size: size,
        generator_count: n,
        boundary,
        gamma: gamma(boundary, n, size),
        representations: None,
        popular_gamma: None,
        popular_dim: None,
    };
    let mut computed = stats(&a, &gens)?;
    let id = if popular {
        ExampleId::Ex4
    } else {
        ExampleId::Ex2
    };
    let mut remarks = Vec::new();
    if popular {
        let spectrum = diff_spectrum(&a)?;
        let counts: Vec<u64> = a
            .indices()
            .filter(|&x| x != 0)
            .map(|x| spectrum.counts()[x])
            .collect();
        let pg = Frac::new(block as i64, size as i64);
        let pset = spectrum.popular(&pg)?;
        let dim = dim_independent_capped(&pset, spec.order())?;
        expected.representations = Some(block);
        expected.popular_gamma = Some(pg);
        expected.popular_dim = Some(n);
        computed.representations = match counts.first() {
            Some(&c) if counts.iter().all(|&x| x == c) => Some(c),
            _ => None,
        };
        computed.popular_gamma = Some(pg);
        computed.popular_dim = Some(dim.value as u64);
        remarks.push(("A ⊆ P_γ(A)".to_string(), a.is_subset(&pset)));
        remarks.push(("γ >= 1/k".to_string(), pg >= Frac::new(1, k as i64)));
    } else {
        let g = Frac::new(1, k as i64);
        let lhs = Frac::from_integer(boundary as i64);
        let rhs = (Frac::from_integer(1) - g) * Frac::from_integer((n * size) as i64);
        // equality when k = 1, where A is the whole group
        remarks.push(("∂_S(A) < (1−1/k)n|A|".to_string(), lhs < rhs || k == 1));
        remarks.push(("|A| <= k m^{n/k}".to_string(), size <= k * block));
    }
    Ok(ExampleInstance {
        id,
        params: vec![],
        group: spec,
        set: a,
        gens,
        expected,
        computed,
        remarks,
    })
}

fn ex3(m: u32, t: u32, n: u32) -> Result<ExampleInstance> {
    if t <= 1 || t >= m {
        return Err(Error::InvalidParameter(format!("need 1 < t < m, got t={t}, m={m}")));
    }
    let spec = homocyclic(m, n)?;
    let a = GroupSet::from_indices(
        &spec,
        (0..spec.order()).filter(|&x| spec.element_at(x).coords().iter().all(|&c| c < t)),
    );
    let gens = GeneratorSeq::standard(&spec);
    let (t, n) = (t as u64, n as u64);
    let size = pow(t, n)?;
    let boundary = n * pow(t, n - 1)?;
    let expected = ExampleStats {
        set_size: size,
        generator_count: n,
        boundary,
        gamma: Frac::new(t as i64 - 1, t as i64),
        representations: None,
        popular_gamma: None,
        popular_dim: None,
    };
    let computed = stats(&a, &gens)?;
    Ok(ExampleInstance {
        id: ExampleId::Ex3,
        params: vec![],
        group: spec,
        set: a,
        gens,
        expected,
        computed,
        remarks: vec![],
    })
}
