//! Sparse families need only `alpha` dimensions.

use cagbox::{build_degree, gen_random, min_alpha_for_degree, parse_ratio};

fn main() -> cagbox::Result<()> {
    let f = gen_random(64, &parse_ratio("1/6")?, 3)?;
    let delta = f.intersection_graph().max_degree();
    let Some(alpha) = min_alpha_for_degree(f.n(), delta) else {
        println!("max degree {delta} is too high for n = {}", f.n());
        return Ok(());
    };
    let rep = build_degree(&f, alpha)?;
    println!(
        "n = {}, max degree = {delta}, alpha = {alpha}, dims = {}",
        f.n(),
        rep.dims()
    );
    Ok(())
}
