//! The explicit constructions and their closed-form statistics.
//!
//! cargo run --example constructions

use isoperim::exact::format_frac;
use isoperim::harness::{build_example, ExampleId};
use isoperim::Result;

fn main() -> Result<()> {
    let cases = [
        (ExampleId::Ex1, [2, 2, 6]),
        (ExampleId::Ex2, [2, 4, 2]),
        (ExampleId::Ex2, [3, 4, 2]),
        (ExampleId::Ex3, [5, 2, 3]),
        (ExampleId::Ex4, [2, 4, 2]),
    ];
    for (id, params) in cases {
        let e = build_example(id, &params)?;
        let names = id.params();
        let args: Vec<String> = names
            .iter()
            .zip(params)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        let c = &e.computed;
        println!(
            "{id} ({}) in {}: |A| = {}, |S| = {}, boundary = {}, gamma = {}",
            args.join(", "),
            e.group,
            c.set_size,
            c.generator_count,
            c.boundary,
            format_frac(&c.gamma)
        );
        if let (Some(r), Some(pg), Some(d)) = (c.representations, c.popular_gamma, c.popular_dim) {
            println!("  r_A = {r} on A \\ {{0}}, popular at {}, dim_I = {d}", format_frac(&pg));
        }
        for (remark, ok) in &e.remarks {
            println!("  {remark}: {ok}");
        }
    }
    Ok(())
}
