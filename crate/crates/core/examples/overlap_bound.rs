//! `r_inf + 1` dimensions, tight on the six-vertex matching complement.

use cagbox::{boxicity_exact, build_overlap, gen_random, gen_roberts, parse_ratio, sweep_overlap};

fn main() -> cagbox::Result<()> {
    let f = gen_random(30, &parse_ratio("3/4")?, 1)?;
    let rep = build_overlap(&f)?;
    println!(
        "random family: r_inf = {}, dims = {}",
        sweep_overlap(&f)?.r_inf,
        rep.dims()
    );

    let f = gen_roberts(6)?.normalize(2)?;
    let dims = build_overlap(&f)?.dims();
    let exact = boxicity_exact(&f.intersection_graph())?;
    println!("six arcs of a third of the circle: dims = {dims}, boxicity = {exact}");
    Ok(())
}
