//! Box representation builders. Each returns a representation only after it
//! has been checked against the intersection graph of the input family.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    degree_bound, min_alpha_for_degree, min_circular_cover, overlap_set, sigma_order,
    sweep_overlap, uncovered_point,
};
use crate::error::{Error, Result};
use crate::geometry::AxisSystem;
use crate::model::{format_ratio, parse_ratio, ArcFamily, Graph, TurnPos};
use crate::oracle::{first_non_supergraph, verify};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    fn ints(lo: usize, hi: usize) -> Self {
        Interval::new(
            BigRational::from_integer(lo.into()),
            BigRational::from_integer(hi.into()),
        )
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// One closed interval per vertex in each dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoxRepJson", into = "BoxRepJson")]
pub struct BoxRep {
    vertices: Vec<String>,
    intervals: Vec<Vec<Interval>>,
}

impl BoxRep {
    pub fn new(vertices: Vec<String>, intervals: Vec<Vec<Interval>>) -> Result<Self> {
        for dim in &intervals {
            if dim.len() != vertices.len() {
                return Err(Error::LengthMismatch {
                    vertices: vertices.len(),
                    arcs: dim.len(),
                });
            }
        }
        Ok(BoxRep {
            vertices,
            intervals,
        })
    }

    pub fn dims(&self) -> usize {
        self.intervals.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn intervals(&self) -> &[Vec<Interval>] {
        &self.intervals
    }

    pub fn interval_mut(&mut self, dim: usize, vertex: usize) -> &mut Interval {
        &mut self.intervals[dim][vertex]
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoxRepJson {
    pub dims: usize,
    pub vertices: Vec<String>,
    pub intervals: Vec<Vec<[String; 2]>>,
}

impl TryFrom<BoxRepJson> for BoxRep {
    type Error = Error;

    fn try_from(j: BoxRepJson) -> Result<Self> {
        if j.dims != j.intervals.len() {
            return Err(Error::BadDimension(j.dims));
        }
        let intervals = j
            .intervals
            .iter()
            .map(|dim| {
                dim.iter()
                    .map(|[lo, hi]| {
                        let (lo, hi) = (parse_ratio(lo)?, parse_ratio(hi)?);
                        if lo > hi {
                            return Err(Error::BadRational(format!("[{lo}, {hi}]")));
                        }
                        Ok(Interval { lo, hi })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BoxRep::new(j.vertices, intervals)
    }
}

impl From<BoxRep> for BoxRepJson {
    fn from(rep: BoxRep) -> Self {
        BoxRepJson {
            dims: rep.dims(),
            intervals: rep
                .intervals
                .iter()
                .map(|dim| {
                    dim.iter()
                        .map(|iv| [format_ratio(&iv.lo), format_ratio(&iv.hi)])
                        .collect()
                })
                .collect(),
            vertices: rep.vertices,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Interval,
    Cover,
    Overlap,
    Degree,
    Auto,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Interval => "interval",
            Method::Cover => "cover",
            Method::Overlap => "overlap",
            Method::Degree => "degree",
            Method::Auto => "auto",
        };
        f.write_str(s)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "interval" => Ok(Method::Interval),
            "cover" => Ok(Method::Cover),
            "overlap" => Ok(Method::Overlap),
            "degree" => Ok(Method::Degree),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::UnknownMethod(s.to_owned())),
        }
    }
}

fn checked(rep: BoxRep, g: &Graph) -> Result<BoxRep> {
    if let Some(d) = first_non_supergraph(&rep, g)? {
        return Err(Error::NotSupergraph(d));
    }
    let report = verify(&rep, g)?;
    if !report.ok {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    Ok(rep)
}

fn with_distinct_endpoints(f: &ArcFamily) -> Result<std::borrow::Cow<'_, ArcFamily>> {
    if f.endpoints_distinct() {
        Ok(std::borrow::Cow::Borrowed(f))
    } else {
        Ok(std::borrow::Cow::Owned(f.normalize(2)?))
    }
}

/// Clockwise-rank intervals from `start`; arcs through `start` get the
/// full range `[1, 2n]`.
fn sigma_dimension(f: &ArcFamily, start: &TurnPos) -> Result<Vec<Interval>> {
    let sigma = sigma_order(f, start)?;
    let through = overlap_set(f, start);
    let n = f.n();
    Ok((0..n)
        .map(|v| {
            if through.contains(&v) {
                Interval::ints(1, 2 * n)
            } else {
                Interval::ints(sigma.left[v], sigma.right[v])
            }
        })
        .collect())
}

/// One dimension for a family that leaves some point uncovered.
pub fn build_interval_case(f: &ArcFamily) -> Result<BoxRep> {
    let work = with_distinct_endpoints(f)?;
    let p = uncovered_point(&work).ok_or(Error::CircleCovered)?;
    let dim = sigma_dimension(&work, &p)?;
    let rep = BoxRep::new(f.vertices().to_vec(), vec![dim])?;
    checked(rep, &f.intersection_graph())
}

/// `alpha` dimensions from projections onto the reference axes; requires
/// max degree below `floor(n (alpha-1) / (2 alpha))`.
pub fn build_degree(f: &ArcFamily, alpha: usize) -> Result<BoxRep> {
    let sys = AxisSystem::new(alpha)?;
    let g = f.intersection_graph();
    let delta = g.max_degree();
    let bound = degree_bound(f.n(), alpha);
    if delta >= bound {
        return Err(Error::DegreeTooHigh { delta, bound });
    }
    let work = f.normalize(alpha)?;
    if !work.is_normalized(alpha) {
        return Err(Error::NotNormalized(alpha));
    }
    let intervals = (0..alpha)
        .map(|j| {
            work.arcs()
                .iter()
                .map(|a| {
                    let iv = sys.proj_interval(a, j);
                    Interval::new(iv.lo.coordinate(), iv.hi.coordinate())
                })
                .collect()
        })
        .collect();
    let rep = BoxRep::new(f.vertices().to_vec(), intervals)?;
    checked(rep, &g)
}

/// `r_inf + 1` dimensions: a three-step ladder for each arc through the
/// minimum overlap point, then clockwise ranks from that point.
pub fn build_overlap(f: &ArcFamily) -> Result<BoxRep> {
    let sweep = sweep_overlap(f)?;
    let g = f.intersection_graph();
    let n = f.n();
    let mut intervals: Vec<Vec<Interval>> = overlap_set(f, &sweep.p_inf)
        .into_iter()
        .map(|w| {
            (0..n)
                .map(|v| {
                    if v == w {
                        Interval::ints(0, 1)
                    } else if g.has_edge(v, w) {
                        Interval::ints(1, 2)
                    } else {
                        Interval::ints(2, 3)
                    }
                })
                .collect()
        })
        .collect();
    intervals.push(sigma_dimension(f, &sweep.p_inf)?);
    let rep = BoxRep::new(f.vertices().to_vec(), intervals)?;
    checked(rep, &g)
}

/// The three points whose overlap sets are pairwise disjoint, for a family
/// with circular cover number above 4 (or none at all).
pub fn cover_points(f: &ArcFamily) -> Result<[TurnPos; 3]> {
    if !f.endpoints_distinct() {
        return Err(Error::CoincidentEndpoints);
    }
    let cover = match min_circular_cover(f).cover {
        None => {
            // no arc meets an uncovered point
            let p = uncovered_point(f).ok_or(Error::CircleCovered)?;
            return Ok([p.clone(), p.clone(), p]);
        }
        Some(c) if c.len() <= 4 => return Err(Error::CoverTooSmall(c.len())),
        Some(c) => c,
    };
    let positions = f.positions();
    let before = |p: &TurnPos| {
        let i = positions.iter().position(|q| q == p).unwrap();
        let prev = &positions[(i + positions.len() - 1) % positions.len()];
        prev.midpoint_to(p)
    };
    let p0 = before(f.arc(cover[0]).l());
    let p1 = before(f.arc(cover[1]).r());
    let o0 = overlap_set(f, &p0);
    let o1 = overlap_set(f, &p1);
    if o0.iter().any(|v| o1.contains(v)) {
        return Err(Error::NoThirdPoint);
    }
    let p2 = f
        .gap_samples()
        .into_iter()
        .map(|(_, _, mid)| mid)
        .find(|p| {
            overlap_set(f, p)
                .iter()
                .all(|v| !o0.contains(v) && !o1.contains(v))
        })
        .ok_or(Error::NoThirdPoint)?;
    Ok([p0, p1, p2])
}

/// Three dimensions of clockwise ranks read from three points whose overlap
/// sets are pairwise disjoint.
pub fn build_cover(f: &ArcFamily) -> Result<BoxRep> {
    let work = with_distinct_endpoints(f)?;
    let points = cover_points(&work)?;
    let intervals = points
        .iter()
        .map(|p| sigma_dimension(&work, p))
        .collect::<Result<Vec<_>>>()?;
    let rep = BoxRep::new(f.vertices().to_vec(), intervals)?;
    checked(rep, &f.intersection_graph())
}

#[derive(Debug)]
pub struct Candidate {
    pub method: Method,
    /// Dimensions built, or why the method did not apply.
    pub outcome: std::result::Result<usize, String>,
}

#[derive(Debug)]
pub struct AutoReport {
    pub method: Method,
    pub rep: BoxRep,
    pub candidates: Vec<Candidate>,
}

/// Runs every applicable builder and keeps the fewest dimensions; ties go
/// to interval, cover, overlap, degree in that order.
pub fn build_auto(f: &ArcFamily) -> Result<AutoReport> {
    let work = with_distinct_endpoints(f)?.into_owned();
    let delta = work.intersection_graph().max_degree();
    let mut candidates = Vec::new();
    let mut best: Option<(Method, BoxRep)> = None;
    type Run<'a> = Box<dyn Fn() -> Result<BoxRep> + 'a>;
    let runs: [(Method, Run); 4] = [
        (Method::Interval, Box::new(|| build_interval_case(&work))),
        (Method::Cover, Box::new(|| build_cover(&work))),
        (Method::Overlap, Box::new(|| build_overlap(&work))),
        (
            Method::Degree,
            Box::new(|| match min_alpha_for_degree(work.n(), delta) {
                Some(alpha) => build_degree(&work, alpha),
                None => Err(Error::DegreeTooHigh {
                    delta,
                    bound: degree_bound(work.n(), work.n()),
                }),
            }),
        ),
    ];
    for (method, run) in runs.iter() {
        match run() {
            Ok(rep) => {
                candidates.push(Candidate {
                    method: *method,
                    outcome: Ok(rep.dims()),
                });
                if best.as_ref().is_none_or(|(_, b)| rep.dims() < b.dims()) {
                    best = Some((*method, rep));
                }
            }
            Err(e) if e.is_verification_failure() => return Err(e),
            Err(e) => candidates.push(Candidate {
                method: *method,
                outcome: Err(e.to_string()),
            }),
        }
    }
    // overlap always applies once endpoints are distinct
    let (method, rep) = best.expect("overlap construction applies");
    let rep = BoxRep::new(f.vertices().to_vec(), rep.intervals)?;
    Ok(AutoReport {
        method,
        rep,
        candidates,
    })
}

/// Dispatches on `method`; `alpha` defaults to the smallest feasible value.
pub fn build(f: &ArcFamily, method: Method, alpha: Option<usize>) -> Result<(Method, BoxRep)> {
    match method {
        Method::Interval => build_interval_case(f).map(|r| (method, r)),
        Method::Cover => build_cover(f).map(|r| (method, r)),
        Method::Overlap => build_overlap(&*with_distinct_endpoints(f)?).map(|r| (method, r)),
        Method::Degree => {
            let alpha = match alpha {
                Some(a) => a,
                None => {
                    let delta = f.intersection_graph().max_degree();
                    min_alpha_for_degree(f.n(), delta).ok_or(Error::DegreeTooHigh {
                        delta,
                        bound: degree_bound(f.n(), f.n()),
                    })?
                }
            };
            build_degree(f, alpha).map(|r| (method, r))
        }
        Method::Auto => build_auto(f).map(|r| (r.method, r.rep)),
    }
}
