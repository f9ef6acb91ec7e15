//! Compressing a set along independent generators and embedding it into the lattice.
//!
//! cargo run --example compression

use isoperim::compression::{
    compress_along, coset_counts, full_compress, group_avg_weight, is_compressed,
    per_generator_boundary, phi_embed, CompressionContext,
};
use isoperim::downset::is_downset;
use isoperim::{GeneratorSeq, GroupSet, GroupSpec, Result};

fn show(label: &str, a: &GroupSet, ctx: &CompressionContext) {
    let elems: Vec<String> = a.elements().map(|g| g.to_string()).collect();
    println!(
        "{label:<14} {{{}}}  boundary per generator {:?}",
        elems.join(", "),
        per_generator_boundary(a, ctx)
    );
}

fn main() -> Result<()> {
    let g = GroupSpec::new(vec![2, 4, 3])?;
    let ctx = CompressionContext::new(&GeneratorSeq::standard(&g))?;
    let a = GroupSet::from_elements(
        &g,
        &[
            g.element(&[1, 3, 2])?,
            g.element(&[0, 2, 1])?,
            g.element(&[1, 1, 0])?,
            g.element(&[0, 2, 2])?,
            g.element(&[1, 2, 1])?,
        ],
    )?;
    show("A", &a, &ctx);

    let mut cur = a.clone();
    for i in 0..ctx.len() {
        cur = compress_along(&cur, &ctx, i)?;
        show(&format!("after [.]_{i}"), &cur, &ctx);
    }
    assert_eq!(cur, full_compress(&a, &ctx)?);
    for i in 0..ctx.len() {
        let (meet, inside) = coset_counts(&cur, &ctx, i)?;
        println!(
            "generator {i}: compressed = {}, cosets meeting A = {meet}, inside A = {inside}",
            is_compressed(&cur, &ctx, i)?
        );
    }

    let image = phi_embed(&cur, &ctx)?;
    let points: Vec<String> = image.points().map(|p| format!("{p:?}")).collect();
    println!("phi image {} is a downset: {}", points.join(" "), is_downset(&image));
    let c = group_avg_weight(&cur, &ctx)?;
    println!("mean weight <= log2|A| / 2: {} ({} vs {})", c.outcome, c.lhs, c.rhs);
    Ok(())
}
