//! Exact circle positions, arcs, arc families and graphs.
//!
//! Positions are measured in clockwise turns from the reference point `R0`,
//! the circle point on the positive x-axis. All predicates are exact.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces `x` into `[0, 1)`.
pub(crate) fn wrap(x: BigRational) -> BigRational {
    let floor = x.floor();
    x - floor
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as a reduced `"p/q"` string; integers keep the `/1`.
pub fn format_ratio(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(s.to_owned());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// A point on the unit circle, in clockwise turns from `R0`, kept in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TurnPos(BigRational);

impl TurnPos {
    pub fn new(value: BigRational) -> Self {
        TurnPos(wrap(value))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(ratio(num, den))
    }

    pub fn zero() -> Self {
        TurnPos(BigRational::zero())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// Clockwise distance from `origin` to `self`, in `[0, 1)`.
    pub fn offset_from(&self, origin: &TurnPos) -> BigRational {
        wrap(&self.0 - &origin.0)
    }

    pub fn shifted(&self, delta: &BigRational) -> TurnPos {
        TurnPos::new(&self.0 + delta)
    }

    /// Midpoint of the clockwise gap from `self` to `to`. The gap is the whole
    /// circle when the two points coincide.
    pub fn midpoint_to(&self, to: &TurnPos) -> TurnPos {
        let mut span = to.offset_from(self);
        if span.is_zero() {
            span = BigRational::one();
        }
        self.shifted(&(span / BigInt::from(2)))
    }

    /// Floating-point value, for display and sanity checks only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for TurnPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_ratio(&self.0))
    }
}

impl fmt::Display for TurnPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_ratio(&self.0))
    }
}

/// Closed arc traversed clockwise from `l` to `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    l: TurnPos,
    r: TurnPos,
}

impl Arc {
    /// Fails with [`Error::PointArc`] when both endpoints coincide.
    pub fn new(l: TurnPos, r: TurnPos) -> Result<Self> {
        if l == r {
            return Err(Error::PointArc(format!("{l}..{r}")));
        }
        Ok(Arc { l, r })
    }

    /// Shorthand for `Arc::new` on fractions of a turn.
    pub fn frac(l: (i64, i64), r: (i64, i64)) -> Result<Self> {
        Arc::new(TurnPos::frac(l.0, l.1), TurnPos::frac(r.0, r.1))
    }

    pub fn l(&self) -> &TurnPos {
        &self.l
    }

    pub fn r(&self) -> &TurnPos {
        &self.r
    }

    /// Clockwise length in turns, strictly inside `(0, 1)`.
    pub fn length(&self) -> BigRational {
        self.r.offset_from(&self.l)
    }

    pub fn contains(&self, p: &TurnPos) -> bool {
        if self.l <= self.r {
            self.l <= *p && *p <= self.r
        } else {
            *p >= self.l || *p <= self.r
        }
    }

    pub fn intersects(&self, other: &Arc) -> bool {
        self.contains(&other.l)
            || self.contains(&other.r)
            || other.contains(&self.l)
            || other.contains(&self.r)
    }

    pub fn rotated(&self, delta: &BigRational) -> Arc {
        Arc {
            l: self.l.shifted(delta),
            r: self.r.shifted(delta),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub vertex: usize,
    pub side: Side,
    pub pos: TurnPos,
}

/// A circular arc representation: one arc per labelled vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArcFamilyJson", into = "ArcFamilyJson")]
pub struct ArcFamily {
    vertices: Vec<String>,
    arcs: Vec<Arc>,
}

impl ArcFamily {
    pub fn new(vertices: Vec<String>, arcs: Vec<Arc>) -> Result<Self> {
        if vertices.len() != arcs.len() {
            return Err(Error::LengthMismatch {
                vertices: vertices.len(),
                arcs: arcs.len(),
            });
        }
        if arcs.len() < 2 {
            return Err(Error::DegenerateFamily(arcs.len()));
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        Ok(ArcFamily { vertices, arcs })
    }

    /// Labels vertices `v0, v1, ...`.
    pub fn from_arcs(arcs: Vec<Arc>) -> Result<Self> {
        let vertices = (0..arcs.len()).map(|i| format!("v{i}")).collect();
        Self::new(vertices, arcs)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, v: usize) -> &Arc {
        &self.arcs[v]
    }

    /// All `2n` endpoints sorted clockwise from `R0`; coincident positions put
    /// left endpoints before right ones, then order by vertex index.
    pub fn endpoints(&self) -> Vec<Endpoint> {
        let mut eps: Vec<Endpoint> = self
            .arcs
            .iter()
            .enumerate()
            .flat_map(|(v, a)| {
                [
                    Endpoint {
                        vertex: v,
                        side: Side::Left,
                        pos: a.l.clone(),
                    },
                    Endpoint {
                        vertex: v,
                        side: Side::Right,
                        pos: a.r.clone(),
                    },
                ]
            })
            .collect();
        eps.sort_by(|a, b| {
            a.pos
                .cmp(&b.pos)
                .then(a.side.cmp(&b.side))
                .then(a.vertex.cmp(&b.vertex))
        });
        eps
    }

    pub fn endpoints_distinct(&self) -> bool {
        let eps = self.endpoints();
        eps.windows(2).all(|w| w[0].pos != w[1].pos)
    }

    /// Distinct endpoint positions in clockwise order from `R0`.
    pub fn positions(&self) -> Vec<TurnPos> {
        let mut pos: Vec<TurnPos> = self.endpoints().into_iter().map(|e| e.pos).collect();
        pos.dedup();
        pos
    }

    /// One sample point strictly inside each gap between circularly
    /// consecutive endpoint positions, paired with the gap bounds.
    pub fn gap_samples(&self) -> Vec<(TurnPos, TurnPos, TurnPos)> {
        let pos = self.positions();
        (0..pos.len())
            .map(|i| {
                let a = &pos[i];
                let b = &pos[(i + 1) % pos.len()];
                (a.clone(), b.clone(), a.midpoint_to(b))
            })
            .collect()
    }

    pub fn intersection_graph(&self) -> Graph {
        let adj = self
            .arcs
            .iter()
            .enumerate()
            .map(|(u, a)| {
                self.arcs
                    .iter()
                    .enumerate()
                    .map(|(v, b)| u != v && a.intersects(b))
                    .collect()
            })
            .collect();
        Graph {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    pub fn rotated(&self, delta: &BigRational) -> ArcFamily {
        ArcFamily {
            vertices: self.vertices.clone(),
            arcs: self.arcs.iter().map(|a| a.rotated(delta)).collect(),
        }
    }

    /// Whether endpoints are distinct, left endpoints are spaced exactly
    /// `1/n` turn apart, and no endpoint sits on a half-axis point of the
    /// `alpha`-axis system.
    pub fn is_normalized(&self, alpha: usize) -> bool {
        if !self.endpoints_distinct() {
            return false;
        }
        let n = self.n() as i64;
        let step = ratio(1, n);
        let mut lefts: Vec<&TurnPos> = self.arcs.iter().map(|a| &a.l).collect();
        lefts.sort();
        let spaced = (0..lefts.len()).all(|i| {
            let next = lefts[(i + 1) % lefts.len()];
            next.offset_from(lefts[i]) == step
        });
        spaced && !self.touches_axes(alpha)
    }

    fn touches_axes(&self, alpha: usize) -> bool {
        let scale = BigInt::from(2 * alpha);
        self.arcs
            .iter()
            .flat_map(|a| [&a.l, &a.r])
            .any(|p| (p.value() * &scale).is_integer())
    }

    /// Rebuilds the family so that endpoints are distinct, left endpoints sit
    /// `1/n` turn apart, and no endpoint lies on a half-axis point of the
    /// `alpha`-axis system. The intersection graph is unchanged.
    pub fn normalize(&self, alpha: usize) -> Result<ArcFamily> {
        if alpha < 2 {
            return Err(Error::BadAlpha(alpha));
        }
        if self.is_normalized(alpha) {
            return Ok(self.clone());
        }
        let n = self.n();
        let mut eps = self.endpoints();
        // Every arc has a left endpoint, so one exists.
        let first_left = eps.iter().position(|e| e.side == Side::Left).unwrap();
        eps.rotate_left(first_left);

        let mut gaps: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for e in &eps {
            match e.side {
                Side::Left => order.push(e.vertex),
                Side::Right => gaps[order.len() - 1].push(e.vertex),
            }
        }

        let mut lefts = vec![TurnPos::zero(); n];
        let mut rights = vec![TurnPos::zero(); n];
        for (i, (&v, gap)) in order.iter().zip(&gaps).enumerate() {
            lefts[v] = TurnPos::frac(i as i64, n as i64);
            let k = gap.len() as i64;
            for (m, &w) in gap.iter().enumerate() {
                let sub = ratio(m as i64 + 1, n as i64 * (k + 1));
                rights[w] = lefts[v].shifted(&sub);
            }
        }
        let arcs = lefts
            .into_iter()
            .zip(rights)
            .map(|(l, r)| Arc { l, r })
            .collect();
        let spaced = ArcFamily {
            vertices: self.vertices.clone(),
            arcs,
        };
        if !spaced.touches_axes(alpha) {
            return Ok(spaced);
        }
        let mut denom = BigInt::from(2 * alpha);
        for a in &spaced.arcs {
            denom = denom.lcm(a.l.value().denom());
            denom = denom.lcm(a.r.value().denom());
        }
        let delta = BigRational::new(BigInt::one(), BigInt::from(4 * n * 2 * alpha) * denom);
        Ok(spaced.rotated(&delta))
    }
}

/// Simple undirected graph on labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    vertices: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new<I, S>(vertices: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut g = Graph::empty(vertices)?;
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = g
                .index_of(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_owned()))?;
            let j = g
                .index_of(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_owned()))?;
            if i == j {
                return Err(Error::SelfLoop(a.to_owned()));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    pub fn empty(vertices: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let n = vertices.len();
        Ok(Graph {
            vertices,
            adj: vec![vec![false; n]; n],
        })
    }

    /// Graph on `v0..v{n-1}` with edges given by index pairs.
    pub fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let vertices = (0..n).map(|i| format!("v{i}")).collect();
        let mut g = Graph {
            vertices,
            adj: vec![vec![false; n]; n],
        };
        for (i, j) in edges {
            assert!(i != j && i < n && j < n, "bad edge ({i}, {j})");
            g.add_edge(i, j);
        }
        g
    }

    pub fn complete(vertices: Vec<String>) -> Result<Self> {
        let mut g = Graph::empty(vertices)?;
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                g.add_edge(i, j);
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i][j] = true;
        self.adj[j][i] = true;
    }

    pub(crate) fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i][j] = false;
        self.adj[j][i] = false;
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i]
            .iter()
            .enumerate()
            .filter(|(_, &e)| e)
            .map(|(j, _)| j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|&&e| e).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(i, j)| self.adj[i][j]).collect()
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(i, j)| !self.adj[i][j]).collect()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    pub fn is_complete(&self) -> bool {
        self.non_edges().is_empty()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![vec![false; n]; n];
        for (i, j) in self.non_edges() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        Graph {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    /// Subgraph induced by `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.adj[i][j]).collect())
            .collect();
        Graph { vertices, adj }
    }

    /// Same edges on relabelled vertices.
    pub fn relabeled(&self, vertices: Vec<String>) -> Result<Graph> {
        assert_eq!(vertices.len(), self.n());
        let mut g = Graph::empty(vertices)?;
        g.adj = self.adj.clone();
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArcJson {
    pub l: String,
    pub r: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArcFamilyJson {
    pub vertices: Vec<String>,
    pub arcs: Vec<ArcJson>,
}

impl TryFrom<ArcFamilyJson> for ArcFamily {
    type Error = Error;

    fn try_from(j: ArcFamilyJson) -> Result<Self> {
        if j.vertices.len() != j.arcs.len() {
            return Err(Error::LengthMismatch {
                vertices: j.vertices.len(),
                arcs: j.arcs.len(),
            });
        }
        let mut arcs = Vec::with_capacity(j.arcs.len());
        for (label, a) in j.vertices.iter().zip(&j.arcs) {
            let l = parse_ratio(&a.l)?;
            let r = parse_ratio(&a.r)?;
            let span = (&r - &l).abs();
            if span >= BigRational::one() {
                return Err(Error::FullCircleArc(label.clone()));
            }
            let arc = Arc::new(TurnPos::new(l), TurnPos::new(r))
                .map_err(|_| Error::PointArc(label.clone()))?;
            arcs.push(arc);
        }
        ArcFamily::new(j.vertices, arcs)
    }
}

impl From<ArcFamily> for ArcFamilyJson {
    fn from(f: ArcFamily) -> Self {
        ArcFamilyJson {
            vertices: f.vertices,
            arcs: f
                .arcs
                .iter()
                .map(|a| ArcJson {
                    l: a.l.to_string(),
                    r: a.r.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.vertices, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|(i, j)| [g.vertices[i].clone(), g.vertices[j].clone()])
            .collect();
        GraphJson {
            vertices: g.vertices,
            edges,
        }
    }
}

/// Orders two positions by clockwise offset from `origin`.
pub(crate) fn cmp_from(origin: &TurnPos, a: &TurnPos, b: &TurnPos) -> Ordering {
    a.offset_from(origin).cmp(&b.offset_from(origin))
}
