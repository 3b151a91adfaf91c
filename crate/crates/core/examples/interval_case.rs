//! A family that misses a point of the circle is an interval graph.

use cagbox::{build_interval_case, uncovered_point, Arc, ArcFamily};

fn main() -> cagbox::Result<()> {
    let f = ArcFamily::from_arcs(vec![
        Arc::frac((0, 1), (1, 4))?,
        Arc::frac((1, 8), (1, 2))?,
        Arc::frac((3, 8), (5, 8))?,
        Arc::frac((9, 16), (3, 4))?,
    ])?;
    println!(
        "uncovered point: {:?}",
        uncovered_point(&f).map(|p| p.to_string())
    );
    let rep = build_interval_case(&f)?;
    for (v, iv) in rep.vertices().iter().zip(&rep.intervals()[0]) {
        println!("{v}: [{}, {}]", iv.lo, iv.hi);
    }
    Ok(())
}
