//! Round-trips a family and a representation through JSON and re-verifies.

use cagbox::{build_overlap, gen_random, parse_ratio, verify, ArcFamily, BoxRep};

fn main() -> cagbox::Result<()> {
    let f = gen_random(5, &parse_ratio("1/2")?, 9)?;
    let text = serde_json::to_string_pretty(&f)?;
    println!("{text}");
    let f: ArcFamily = serde_json::from_str(&text)?;

    let rep = build_overlap(&f)?;
    let text = serde_json::to_string(&rep)?;
    println!("{text}");
    let rep: BoxRep = serde_json::from_str(&text)?;
    let report = verify(&rep, &f.intersection_graph())?;
    println!("{}", serde_json::to_string(&report)?);
    Ok(())
}
