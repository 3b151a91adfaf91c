//! Statistics of a given arc representation: overlap sets, the minimum
//! overlap sweep, clockwise endpoint ranks and circular covers.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{cmp_from, ArcFamily, Graph, Side, TurnPos};

pub fn overlap_set(f: &ArcFamily, p: &TurnPos) -> Vec<usize> {
    f.arcs()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.contains(p))
        .map(|(v, _)| v)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCount {
    pub from: TurnPos,
    pub to: TurnPos,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepResult {
    pub r_inf: usize,
    /// Midpoint of the first gap attaining `r_inf`.
    pub p_inf: TurnPos,
    pub gap_counts: Vec<GapCount>,
}

/// Minimum number of arcs over any point of the circle, with a witness.
pub fn sweep_overlap(f: &ArcFamily) -> Result<SweepResult> {
    if !f.endpoints_distinct() {
        return Err(Error::CoincidentEndpoints);
    }
    let eps = f.endpoints();
    let m = eps.len();
    // the gap straddling R0 is covered exactly by the arcs that wrap past it
    let mut count = f.arcs().iter().filter(|a| a.l() > a.r()).count();
    let mut gap_counts = Vec::with_capacity(m);
    for (i, e) in eps.iter().enumerate() {
        match e.side {
            Side::Left => count += 1,
            Side::Right => count -= 1,
        }
        let next = &eps[(i + 1) % m];
        gap_counts.push(GapCount {
            from: e.pos.clone(),
            to: next.pos.clone(),
            count,
        });
    }
    let best = gap_counts
        .iter()
        .enumerate()
        .min_by_key(|(i, g)| (g.count, *i))
        .map(|(i, _)| i)
        .unwrap();
    let g = &gap_counts[best];
    Ok(SweepResult {
        r_inf: g.count,
        p_inf: g.from.midpoint_to(&g.to),
        gap_counts,
    })
}

/// 1-based clockwise ranks of every endpoint, read from a start point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaOrder {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn sigma_order(f: &ArcFamily, start: &TurnPos) -> Result<SigmaOrder> {
    if !f.endpoints_distinct() {
        return Err(Error::CoincidentEndpoints);
    }
    let mut eps = f.endpoints();
    if eps.iter().any(|e| &e.pos == start) {
        return Err(Error::StartOnEndpoint);
    }
    eps.sort_by(|a, b| cmp_from(start, &a.pos, &b.pos));
    let n = f.n();
    let mut order = SigmaOrder {
        left: vec![0; n],
        right: vec![0; n],
    };
    for (rank, e) in eps.iter().enumerate() {
        match e.side {
            Side::Left => order.left[e.vertex] = rank + 1,
            Side::Right => order.right[e.vertex] = rank + 1,
        }
    }
    Ok(order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    /// A minimum circular cover in clockwise order, `None` when no subset
    /// covers the circle.
    pub cover: Option<Vec<usize>>,
}

impl CoverResult {
    /// `L(F)`, with `None` standing for infinity.
    pub fn size(&self) -> Option<usize> {
        self.cover.as_ref().map(Vec::len)
    }
}

/// Greedy cover that starts with arc `s` and always extends as far
/// clockwise as possible from the current reach.
fn greedy_cover_from(f: &ArcFamily, s: usize) -> Option<Vec<usize>> {
    let origin = f.arc(s).l();
    let one = BigRational::one();
    let mut reach = f.arc(s).length();
    let mut cover = vec![s];
    while reach < one {
        let point = origin.shifted(&reach);
        let mut best: Option<(BigRational, usize)> = None;
        for (v, a) in f.arcs().iter().enumerate() {
            if !a.contains(&point) {
                continue;
            }
            let ext = &reach + (a.length() - point.offset_from(a.l()));
            if best.as_ref().is_none_or(|(b, _)| &ext > b) {
                best = Some((ext, v));
            }
        }
        let (ext, v) = best?;
        if ext <= reach {
            return None;
        }
        reach = ext;
        cover.push(v);
        if cover.len() > f.n() {
            return None;
        }
    }
    Some(cover)
}

/// Minimum circular cover: best greedy run over all starting arcs. Ties in
/// reach go to the lowest vertex index.
pub fn min_circular_cover(f: &ArcFamily) -> CoverResult {
    if uncovered_point(f).is_some() {
        return CoverResult { cover: None };
    }
    let cover = (0..f.n())
        .filter_map(|s| greedy_cover_from(f, s))
        .min_by_key(Vec::len);
    CoverResult { cover }
}

/// A point no arc contains, if there is one.
pub fn uncovered_point(f: &ArcFamily) -> Option<TurnPos> {
    f.gap_samples()
        .into_iter()
        .map(|(_, _, mid)| mid)
        .find(|p| f.arcs().iter().all(|a| !a.contains(p)))
}

/// `floor(n (alpha - 1) / (2 alpha))`.
pub fn degree_bound(n: usize, alpha: usize) -> usize {
    n * (alpha - 1) / (2 * alpha)
}

/// Smallest `alpha` in `[2, n]` with `delta < floor(n (alpha-1) / (2 alpha))`.
pub fn min_alpha_for_degree(n: usize, delta: usize) -> Option<usize> {
    (2..=n).find(|&alpha| delta < degree_bound(n, alpha))
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

/// Summary printed by `cag stats`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    pub n: usize,
    pub delta: usize,
    pub r_inf: usize,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub covered: bool,
    pub min_alpha: Option<usize>,
}

/// Computes [`FamilyStats`]; families with coincident endpoints are first
/// normalized, which leaves every reported value unchanged.
pub fn family_stats(f: &ArcFamily) -> Result<FamilyStats> {
    let owned;
    let f = if f.endpoints_distinct() {
        f
    } else {
        owned = f.normalize(2)?;
        &owned
    };
    let g = f.intersection_graph();
    let delta = g.max_degree();
    let sweep = sweep_overlap(f)?;
    let cover = min_circular_cover(f);
    Ok(FamilyStats {
        n: f.n(),
        delta,
        r_inf: sweep.r_inf,
        l: cover.size(),
        covered: cover.size().is_some(),
        min_alpha: min_alpha_for_degree(f.n(), delta),
    })
}
