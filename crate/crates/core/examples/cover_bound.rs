//! Three dimensions when no four arcs cover the circle.

use cagbox::{build_cover, gen_consecutive_cover, min_circular_cover, Error};

fn main() -> cagbox::Result<()> {
    for k in [4, 7] {
        let f = gen_consecutive_cover(k, 5, 11)?;
        let l = min_circular_cover(&f).size();
        match build_cover(&f) {
            Ok(rep) => println!("L = {l:?}: {} dims", rep.dims()),
            Err(Error::CoverTooSmall(c)) => println!("L = {c}: cover construction does not apply"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
