//! Tries every construction and keeps the smallest.

use cagbox::{build_auto, gen_random, parse_ratio};

fn main() -> cagbox::Result<()> {
    for (n, len, seed) in [(10, "1/10", 0), (40, "1/8", 2), (16, "3/5", 4)] {
        let f = gen_random(n, &parse_ratio(len)?, seed)?;
        let report = build_auto(&f)?;
        println!(
            "n = {n}, max length {len}: {} with {} dims",
            report.method,
            report.rep.dims()
        );
        for c in &report.candidates {
            match &c.outcome {
                Ok(d) => println!("    {:<8} {d}", c.method),
                Err(why) => println!("    {:<8} {why}", c.method),
            }
        }
    }
    Ok(())
}
