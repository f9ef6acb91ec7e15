//! Edge boundaries and the boundary theorems on a few hand-picked sets.
//!
//! cargo run --example boundary

use isoperim::boundary::{
    bl_lower_bound, corollary_cosetdecomp, edge_boundary, theorem_exp234, theorem_generalcase,
};
use isoperim::group::span;
use isoperim::{GeneratorSeq, GroupSet, GroupSpec, Result};

fn main() -> Result<()> {
    let cube = GroupSpec::homocyclic(2, 3)?;
    let basis = GeneratorSeq::standard(&cube);

    let face = span(&GeneratorSeq::new(
        &cube,
        vec![cube.element(&[1, 0, 0])?, cube.element(&[0, 1, 0])?],
    )?);
    let zero = GroupSet::from_indices(&cube, [0]);
    for (name, a) in [("{0}", &zero), ("a face", &face)] {
        let stats = edge_boundary(a, &basis)?;
        println!(
            "{name} in {cube}: |A| = {}, boundary = {} {:?}, gamma = {}",
            stats.set_size,
            stats.total,
            stats.per_generator,
            isoperim::exact::format_frac(&stats.gamma)
        );
        let bl = bl_lower_bound(a, &basis)?;
        println!("  log bound   {}: {} vs {}", bl.outcome, bl.lhs, bl.rhs);
        let t = theorem_exp234(a, &basis)?;
        println!("  |A| >= |G|^gamma {}: {} vs {}", t.outcome, t.lhs, t.rhs);
    }

    // the independent-generator bound in C_2 x C_4
    let g = GroupSpec::new(vec![2, 4])?;
    let s = GeneratorSeq::standard(&g);
    let a = GroupSet::from_elements(&g, &[g.element(&[0, 0])?, g.element(&[1, 0])?])?;
    let c = theorem_generalcase(&a, &s)?;
    println!("{{(0,0),(1,0)}} in {g}: |A| >= 4^((1-1/d) gamma n) is {} ({} vs {})", c.outcome, c.lhs, c.rhs);

    // a non-generating S in C_3^2: the bound uses H = <S>
    let plane = GroupSpec::homocyclic(3, 2)?;
    let line = GeneratorSeq::new(&plane, vec![plane.element(&[1, 0])?])?;
    let a = GroupSet::from_elements(&plane, &[plane.element(&[0, 0])?, plane.element(&[1, 0])?])?;
    let c = corollary_cosetdecomp(&a, &line)?;
    println!("two points of a line in {plane}: |A| >= |H|^gamma is {} ({} vs {})", c.outcome, c.lhs, c.rhs);
    Ok(())
}
