//! Exact boxicity of small graphs.

use cagbox::{boxicity_exact, gen_roberts, is_interval, Graph};

fn main() -> cagbox::Result<()> {
    let c5 = Graph::from_index_edges(5, (0..5).map(|i| (i, (i + 1) % 5)));
    println!(
        "C5: interval = {}, boxicity = {}",
        is_interval(&c5)?,
        boxicity_exact(&c5)?
    );
    for n in [4, 6] {
        let g = gen_roberts(n)?.intersection_graph();
        println!(
            "complement of {}K2: boxicity = {}",
            n / 2,
            boxicity_exact(&g)?
        );
    }
    let k4 = Graph::complete((0..4).map(|i| format!("k{i}")).collect())?;
    println!("K4: boxicity = {}", boxicity_exact(&k4)?);
    Ok(())
}
