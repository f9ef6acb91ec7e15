//! Downsets of a box, the average-weight inequality and the projection inequalities.
//!
//! cargo run --example downsets -- 2 2 2

use std::cmp::Ordering;

use isoperim::downset::{
    lw_plus, loomis_whitney, multiset_view, split_step_inequality, weight_stats, LatticeSet,
};
use isoperim::exact::{cmp_power_products, format_frac, PowerProduct};
use isoperim::harness::enumerate_downsets;
use isoperim::{Frac, Outcome, Result};

fn main() -> Result<()> {
    let bounds: Vec<u32> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("box bounds are integers"))
        .collect();
    let bounds = if bounds.is_empty() { vec![2, 2, 2] } else { bounds };

    let mut count = 0;
    let mut tight = Vec::new();
    let mut worst = Frac::from_integer(0);
    for d in enumerate_downsets(&bounds)? {
        count += 1;
        if d.is_empty() {
            continue;
        }
        let s = weight_stats(&d)?;
        assert!(s.check.holds());
        if s.check.outcome == Outcome::Equality {
            tight.push(d.points().cloned().collect::<Vec<_>>());
        }
        worst = worst.max(s.mean_weight);
        assert!(multiset_view(&d)?.check.holds());
    }
    println!("box {bounds:?}: {count} downsets, largest mean weight {}", format_frac(&worst));
    println!("{} downsets meet 4^(sum of weights) = |A|^|A|:", tight.len());
    for t in &tight {
        println!("  {t:?}");
    }

    let plus = LatticeSet::new(2, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![3, 3]])?;
    println!("a scattered set: LW+ {} , Loomis-Whitney {}", lw_plus(&plus)?.outcome, loomis_whitney(&plus)?.outcome);

    // five points in dimension 3 whose projections all have three points
    let order = cmp_power_products(&PowerProduct::pow(5, 5), &PowerProduct::pow(4, 6));
    println!("5^5 vs 4^6: {order:?}, so no such set exists: {}", order == Ordering::Less);

    for tau in [Frac::from_integer(1), Frac::new(3, 2), Frac::from_integer(7)] {
        let c = split_step_inequality(&tau)?;
        println!("split step at tau = {}: {} ({} vs {})", format_frac(&tau), c.outcome, c.lhs, c.rhs);
    }
    Ok(())
}
