//! The family that shows the degree condition cannot be relaxed much.

use cagbox::{boxicity_exact, gen_tightness};

fn main() -> cagbox::Result<()> {
    let alpha = 2;
    for n in [12, 24] {
        let g = gen_tightness(alpha, n)?.intersection_graph();
        let long: Vec<usize> = (0..2 * alpha + 2).collect();
        let h = g.induced(&long);
        println!(
            "n = {n}: max degree {}, long arcs have boxicity {}",
            g.max_degree(),
            boxicity_exact(&h)?
        );
    }
    Ok(())
}
