//! Normalizes a family with shared endpoints and shows that the
//! intersection graph survives.

use cagbox::{Arc, ArcFamily};

fn main() -> cagbox::Result<()> {
    let f = ArcFamily::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![
            Arc::frac((0, 1), (1, 4))?,
            Arc::frac((1, 4), (1, 2))?,
            Arc::frac((1, 2), (0, 1))?,
        ],
    )?;
    println!("distinct endpoints before: {}", f.endpoints_distinct());

    let g = f.normalize(3)?;
    for (v, a) in g.vertices().iter().zip(g.arcs()) {
        println!("{v}: [{}, {}]", a.l(), a.r());
    }
    println!("normalized for alpha = 3: {}", g.is_normalized(3));
    assert_eq!(f.intersection_graph(), g.intersection_graph());
    Ok(())
}
