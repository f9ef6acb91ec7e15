//! Gray-code sweep over all non-empty subsets of a small group.
//!
//! Consecutive subsets differ in one element `x`, so `∂_S(A)` is updated in
//! `O(|S|)`: inserting `x` into `A` adds the generators with `x + s ∉ A ∪ {x}`
//! and removes those with `x − s ∈ A`.

use crate::group::{GeneratorSeq, GroupSpec};

/// Largest group order a sweep accepts (subsets are `u64` masks).
pub const MAX_SWEEP_ORDER: usize = 40;

/// Visits the `2^{|G|} − 1` non-empty subsets of `G` in reflected Gray-code
/// order, calling `visit(mask, |A|, ∂_S(A))`.
pub fn sweep_boundaries(gens: &GeneratorSeq, mut visit: impl FnMut(u64, u64, u64)) {
    let spec = gens.spec();
    let order = spec.order();
    assert!(order <= MAX_SWEEP_ORDER, "sweep over {order} elements");
    let forward: Vec<Vec<u32>> = gens.translation_tables();
    let backward: Vec<Vec<u32>> = gens
        .elements()
        .iter()
        .map(|s| spec.translation_table(&spec.neg(s)))
        .collect();
    let mut mask = 0u64;
    let mut size = 0u64;
    let mut boundary = 0i64;
    for step in 1u64..1 << order {
        let x = step.trailing_zeros() as usize;
        let bit = 1u64 << x;
        if mask & bit == 0 {
            let grown = mask | bit;
            for (f, b) in forward.iter().zip(&backward) {
                boundary += (grown >> f[x] & 1 == 0) as i64;
                boundary -= (mask >> b[x] & 1 == 1) as i64;
            }
            mask = grown;
            size += 1;
        } else {
            let shrunk = mask & !bit;
            for (f, b) in forward.iter().zip(&backward) {
                boundary -= (mask >> f[x] & 1 == 0) as i64;
                boundary += (shrunk >> b[x] & 1 == 1) as i64;
            }
            mask = shrunk;
            size -= 1;
        }
        debug_assert!(boundary >= 0);
        if size > 0 {
            visit(mask, size, boundary as u64);
        }
    }
}

/// Visits every non-empty subset mask of `G` in Gray-code order.
pub fn sweep_subsets(spec: &GroupSpec, mut visit: impl FnMut(u64)) {
    let order = spec.order();
    assert!(order <= MAX_SWEEP_ORDER, "sweep over {order} elements");
    let mut mask = 0u64;
    for step in 1u64..1 << order {
        mask ^= 1 << step.trailing_zeros();
        if mask != 0 {
            visit(mask);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::edge_boundary;
    use crate::group::GroupSet;
    use std::collections::HashSet;

    #[test]
    fn incremental_boundary_matches_direct_count() {
        for moduli in [vec![2, 4], vec![3, 3], vec![2, 2, 2]] {
            let g = GroupSpec::new(moduli).unwrap();
            let mut gens_list = vec![GeneratorSeq::standard(&g)];
            // a sequence containing zero and a repeated direction
            gens_list.push(
                GeneratorSeq::new(&g, vec![g.zero(), g.element_at(1), g.element_at(g.order() - 1)])
                    .unwrap(),
            );
            for gens in gens_list {
                let mut seen = HashSet::new();
                sweep_boundaries(&gens, |mask, size, b| {
                    let a = GroupSet::from_mask(&g, mask);
                    assert_eq!(a.len() as u64, size);
                    assert_eq!(edge_boundary(&a, &gens).unwrap().total, b);
                    assert!(seen.insert(mask));
                });
                assert_eq!(seen.len(), (1 << g.order()) - 1);
            }
        }
    }

    #[test]
    fn subset_sweep_is_complete() {
        let g = GroupSpec::new(vec![3, 3]).unwrap();
        let mut seen = HashSet::new();
        sweep_subsets(&g, |m| assert!(seen.insert(m)));
        assert_eq!(seen.len(), 511);
    }
}
