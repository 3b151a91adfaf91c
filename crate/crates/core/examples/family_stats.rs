//! Minimum overlap, circular cover number and degree bound of a random family.

use cagbox::{family_stats, gen_random, min_circular_cover, parse_ratio, sweep_overlap};

fn main() -> cagbox::Result<()> {
    let f = gen_random(24, &parse_ratio("1/2")?, 7)?;
    let sweep = sweep_overlap(&f)?;
    println!("r_inf = {} at {}", sweep.r_inf, sweep.p_inf);
    match min_circular_cover(&f).cover {
        Some(c) => println!("smallest circular cover: {c:?}"),
        None => println!("the circle is not covered"),
    }
    println!("{}", serde_json::to_string_pretty(&family_stats(&f)?)?);
    Ok(())
}
