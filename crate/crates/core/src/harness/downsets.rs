//! Streaming enumeration of every downset inside a box `Π [0, b_i]`.
//!
//! Box points are visited in mixed-radix order, in which every one-step
//! predecessor `a − e_i` precedes `a`. Each point is either excluded, or
//! included when all its predecessors are; both branches always extend to a
//! downset, so every leaf of the decision tree is a distinct downset and the
//! iterator walks the leaves depth-first without dead ends.

use std::collections::BTreeSet;

use crate::downset::LatticeSet;
use crate::error::{Error, Result};

/// Maximum number of lattice points in an enumeration box.
pub const DOWNSET_POINT_BUDGET: usize = 1 << 20;

/// Iterator over all downsets in a box, the full box first and `∅` last.
pub struct DownsetIter {
    dim: usize,
    points: Vec<Vec<u32>>,
    preds: Vec<Vec<usize>>,
    included: Vec<bool>,
    state: IterState,
}

enum IterState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_downsets(bounds: &[u32]) -> Result<DownsetIter> {
    let count: u128 = bounds.iter().map(|&b| b as u128 + 1).product();
    if count > DOWNSET_POINT_BUDGET as u128 {
        return Err(Error::BoxTooLarge {
            points: count,
            budget: DOWNSET_POINT_BUDGET,
        });
    }
    let count = count as usize;
    let mut strides = Vec::with_capacity(bounds.len());
    let mut acc = 1usize;
    for &b in bounds {
        strides.push(acc);
        acc *= b as usize + 1;
    }
    let mut points = Vec::with_capacity(count);
    let mut preds = Vec::with_capacity(count);
    for idx in 0..count {
        let mut rest = idx;
        let p: Vec<u32> = bounds
            .iter()
            .map(|&b| {
                let c = rest % (b as usize + 1);
                rest /= b as usize + 1;
                c as u32
            })
            .collect();
        preds.push(
            p.iter()
                .zip(&strides)
                .filter(|(&c, _)| c > 0)
                .map(|(_, &s)| idx - s)
                .collect(),
        );
        points.push(p);
    }
    Ok(DownsetIter {
        dim: bounds.len(),
        included: vec![false; count],
        points,
        preds,
        state: IterState::Fresh,
    })
}

impl DownsetIter {
    fn fill_from(&mut self, start: usize) {
        for j in start..self.points.len() {
            let ok = self.preds[j].iter().all(|&p| self.included[p]);
            self.included[j] = ok;
        }
    }

    fn current(&self) -> LatticeSet {
        let pts: BTreeSet<Vec<u32>> = self
            .points
            .iter()
            .zip(&self.included)
            .filter(|(_, &inc)| inc)
            .map(|(p, _)| p.clone())
            .collect();
        LatticeSet::from_sorted_unchecked(self.dim, pts)
    }
}

impl Iterator for DownsetIter {
    type Item = LatticeSet;

    fn next(&mut self) -> Option<LatticeSet> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.fill_from(0);
                self.state = IterState::Running;
            }
            IterState::Running => match self.included.iter().rposition(|&b| b) {
                None => {
                    self.state = IterState::Done;
                    return None;
                }
                Some(j) => {
                    self.included[j] = false;
                    self.fill_from(j + 1);
                }
            },
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::downset::is_downset;
    use std::collections::HashSet;

    fn all(bounds: &[u32]) -> Vec<LatticeSet> {
        enumerate_downsets(bounds).unwrap().collect()
    }

    #[test]
    fn small_boxes() {
        let line = all(&[1]);
        assert_eq!(line.len(), 3);
        assert!(line.contains(&LatticeSet::empty(1)));
        assert_eq!(all(&[1, 1]).len(), 6);
        // lattice paths in a 3×3 square: C(6,3)
        assert_eq!(all(&[2, 2]).len(), 20);
        // plane partitions in a 3×3×3 box
        assert_eq!(all(&[2, 2, 2]).len(), 980);
        assert_eq!(all(&[]).len(), 2);
    }

    #[test]
    fn each_downset_once() {
        for bounds in [vec![2, 1, 1], vec![3, 2], vec![1, 1, 1, 1]] {
            let sets = all(&bounds);
            let unique: HashSet<_> = sets.iter().cloned().collect();
            assert_eq!(unique.len(), sets.len());
            assert!(sets.iter().all(is_downset));
            // brute force over all subsets of the box
            let pts: Vec<Vec<u32>> = LatticeSet::boxed(&bounds).points().cloned().collect();
            let mut brute = 0;
            for m in 0u64..1 << pts.len() {
                let a = LatticeSet::new(
                    bounds.len(),
                    pts.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, p)| p.clone()),
                )
                .unwrap();
                if is_downset(&a) {
                    brute += 1;
                    assert!(unique.contains(&a));
                }
            }
            assert_eq!(brute, sets.len());
        }
    }

    #[test]
    fn budget() {
        assert!(matches!(
            enumerate_downsets(&[1023, 1024]),
            Err(Error::BoxTooLarge { .. })
        ));
    }
}
