//! Difference counts, popular differences and their independent/dissociated dimension.
//!
//! cargo run --example popular

use isoperim::exact::format_frac;
use isoperim::harness::SplitMix64;
use isoperim::popular::{
    diff_spectrum, dim_dissociated_capped, dim_independent_capped, theorem_repa_capped,
};
use isoperim::{Frac, GroupSpec, Result};

fn main() -> Result<()> {
    let g = GroupSpec::homocyclic(3, 3)?;
    let mut rng = SplitMix64::new(2024);
    let a = rng.nonempty_subset(&g);
    println!("random A in {g} with |A| = {}", a.len());

    // the popular sets here can exceed the default candidate cap
    let cap = g.order();
    let spectrum = diff_spectrum(&a)?;
    let mut counts: Vec<u64> = spectrum.counts().iter().skip(1).copied().collect();
    counts.sort_unstable_by(|x, y| y.cmp(x));
    println!("largest non-zero r_A values: {:?}", &counts[..6]);

    for gamma in [Frac::new(1, 4), Frac::new(1, 2), Frac::new(2, 3)] {
        let p = spectrum.popular(&gamma)?;
        let di = dim_independent_capped(&p, cap)?;
        let dd = dim_dissociated_capped(&p, cap)?;
        let (check, _) = theorem_repa_capped(&a, &gamma, cap)?;
        println!(
            "gamma {}: |P| = {}, dim_I = {}, dim_D = {}, bound {}",
            format_frac(&gamma),
            p.len(),
            di.value,
            dd.value,
            check.outcome
        );
        let basis: Vec<String> = di.witness.elements().map(|e| e.to_string()).collect();
        println!("  independent witness {}", basis.join(" "));
    }
    Ok(())
}
