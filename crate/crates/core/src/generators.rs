//! Arc families: the extremal complement-of-matching representation, the
//! tightness family for the degree bound, and seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{ratio, Arc, ArcFamily, TurnPos};

/// `n` equally spaced points; arc `i` runs clockwise from `p_i` to
/// `p_{i + n/2 - 1}`. The intersection graph is the complement of a perfect
/// matching, arc `i` missing only arc `i + n/2`.
pub fn gen_roberts(n: usize) -> Result<ArcFamily> {
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    if n < 4 {
        return Err(Error::TooFewVertices(n));
    }
    let p = |i: usize| TurnPos::frac((i % n) as i64, n as i64);
    let arcs = (0..n)
        .map(|i| Arc::new(p(i), p(i + n / 2 - 1)))
        .collect::<Result<_>>()?;
    ArcFamily::from_arcs(arcs)
}

/// The family with maximum degree `n alpha / (2 (alpha + 1)) + alpha + 2`
/// whose `u` arcs induce the complement of `(alpha + 1) K_2`.
///
/// With `t = 2 alpha + 2` anchor points, vertex `u_i` spans `p_i .. p_{i+alpha}`,
/// `v_i` spans `p_i .. p_{i+1}`, and `h{i}_{k}` for `k < n/t - 2` are short
/// pairwise disjoint arcs strictly inside `(p_i, p_{i+1})`.
pub fn gen_tightness(alpha: usize, n: usize) -> Result<ArcFamily> {
    if alpha < 2 {
        return Err(Error::BadAlpha(alpha));
    }
    let t = 2 * alpha + 2;
    if !n.is_multiple_of(t) || n < 2 * t {
        return Err(Error::BadDivisibility {
            n,
            modulus: t,
            min: 2 * t,
        });
    }
    let per_gap = n / t - 2;
    let p = |i: usize| TurnPos::frac((i % t) as i64, t as i64);
    let mut vertices = Vec::with_capacity(n);
    let mut arcs = Vec::with_capacity(n);
    for i in 0..t {
        vertices.push(format!("u{i}"));
        arcs.push(Arc::new(p(i), p(i + alpha))?);
    }
    for i in 0..t {
        vertices.push(format!("v{i}"));
        arcs.push(Arc::new(p(i), p(i + 1))?);
    }
    let len = ratio(1, 4 * n as i64);
    let step = ratio(1, (t * (per_gap + 1)) as i64);
    for i in 0..t {
        for k in 0..per_gap {
            let start = p(i).shifted(&(&step * BigInt::from(k + 1)));
            vertices.push(format!("h{i}_{k}"));
            arcs.push(Arc::new(start.clone(), start.shifted(&len))?);
        }
    }
    ArcFamily::new(vertices, arcs)
}

const GRID: i64 = 1 << 16;
const LENGTH_STEPS: i64 = 1 << 10;

/// `n` arcs with left endpoints on a `1/65536` grid and lengths uniform in
/// `(0, max_len]`, normalized for `alpha = 2`. Deterministic in `seed`.
pub fn gen_random(n: usize, max_len: &BigRational, seed: u64) -> Result<ArcFamily> {
    if n < 2 {
        return Err(Error::DegenerateFamily(n));
    }
    if *max_len <= BigRational::zero() || *max_len >= BigRational::one() {
        return Err(Error::BadLength);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..n)
        .map(|_| {
            let l = TurnPos::frac(rng.gen_range(0..GRID), GRID);
            let k = rng.gen_range(1..=LENGTH_STEPS);
            let len = max_len * ratio(k, LENGTH_STEPS);
            Arc::new(l.clone(), l.shifted(&len))
        })
        .collect::<Result<_>>()?;
    ArcFamily::from_arcs(arcs)?.normalize(2)
}

/// A ring of `k` arcs, each overlapping only its two neighbours, plus
/// `extras` short arcs. The ring is the only way to cover the circle, so the
/// circular cover number is `k` for `k >= 3`.
pub fn gen_consecutive_cover(k: usize, extras: usize, seed: u64) -> Result<ArcFamily> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k64 = k as i64;
    // anchors a_i in [i/k, i/k + 1/(4k))
    let anchors: Vec<TurnPos> = (0..k64)
        .map(|i| TurnPos::new(ratio(i, k64) + ratio(rng.gen_range(0..64), 256 * k64)))
        .collect();
    let overlap = ratio(1, 16 * k64);
    let mut arcs = Vec::with_capacity(k + extras);
    for i in 0..k {
        let l = anchors[i].shifted(&-overlap.clone());
        let r = anchors[(i + 1) % k].shifted(&overlap);
        arcs.push(Arc::new(l, r)?);
    }
    for _ in 0..extras {
        let l = TurnPos::frac(rng.gen_range(0..GRID), GRID);
        let len = &overlap * ratio(rng.gen_range(1..=LENGTH_STEPS), LENGTH_STEPS);
        arcs.push(Arc::new(l.clone(), l.shifted(&len))?);
    }
    ArcFamily::from_arcs(arcs)
}
