//! Half-axes, sectors, reflections and projections for `alpha = 3`.

use cagbox::{Arc, AxisSystem, TurnPos};

fn main() -> cagbox::Result<()> {
    let sys = AxisSystem::new(3)?;
    for j in 0..sys.half_axes() {
        println!("H_{j} at {} turns", sys.half_axis_point(j));
    }

    let p = TurnPos::frac(1, 10);
    let k = sys.sector_of(&p)?;
    let im = sys.image_point(&p, 1);
    println!(
        "{p} lies in S_{k}; its mirror in A_1 is {im}, in S_{}",
        sys.sector_of(&im)?
    );
    println!(
        "projections onto A_1 agree: {}",
        sys.proj_value(&p, 1) == sys.proj_value(&im, 1)
    );

    let u = Arc::frac((5, 8), (1, 24))?;
    println!("interception of {u:?}: {:?}", sys.interception(&u)?);
    println!("median half-axis: H_{}", sys.median_half_axis(&u)?);
    let (head, tail) = sys.head_tail_sectors(&u)?;
    let (len_h, len_t) = sys.head_tail_lengths(&u)?;
    println!("head S_{head} ({len_h} turns), tail S_{tail} ({len_t} turns)");
    Ok(())
}
