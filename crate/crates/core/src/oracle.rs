//! Ground truth for small graphs: interval recognition, exact boxicity and
//! verification of box representations.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::constructions::BoxRep;
use crate::error::{Error, Result};
use crate::model::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    /// Edges of the graph missing from the intersection of all dimensions.
    pub missing_edges: Vec<(String, String)>,
    /// Pairs adjacent in every dimension but not in the graph.
    pub extra_edges: Vec<(String, String)>,
}

/// Interval graph of dimension `d`: closed intervals that meet are adjacent.
pub fn graph_of_dimension(rep: &BoxRep, d: usize) -> Result<Graph> {
    let dim = rep.intervals().get(d).ok_or(Error::BadDimension(d))?;
    let n = rep.vertices().len();
    let mut g = Graph::empty(rep.vertices().to_vec())?;
    for i in 0..n {
        for j in i + 1..n {
            if dim[i].intersects(&dim[j]) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Maps each representation vertex to its index in `g`.
fn align(rep: &BoxRep, g: &Graph) -> Result<Vec<usize>> {
    if rep.vertices().len() != g.n() {
        return Err(Error::VertexMismatch);
    }
    let map: Vec<usize> = rep
        .vertices()
        .iter()
        .map(|v| g.index_of(v).ok_or(Error::VertexMismatch))
        .collect::<Result<_>>()?;
    let distinct: HashSet<_> = map.iter().collect();
    if distinct.len() != map.len() {
        return Err(Error::VertexMismatch);
    }
    Ok(map)
}

/// Compares the intersection of all dimensions with `g`. Zero dimensions
/// stand for the complete graph.
pub fn verify(rep: &BoxRep, g: &Graph) -> Result<VerifyReport> {
    let map = align(rep, g)?;
    let n = g.n();
    let mut meet = Graph::complete(rep.vertices().to_vec())?;
    for d in 0..rep.dims() {
        let gd = graph_of_dimension(rep, d)?;
        for i in 0..n {
            for j in i + 1..n {
                if !gd.has_edge(i, j) {
                    meet.remove_edge(i, j);
                }
            }
        }
    }
    let names = rep.vertices();
    let mut missing_edges = Vec::new();
    let mut extra_edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let want = g.has_edge(map[i], map[j]);
            let have = meet.has_edge(i, j);
            let pair = (names[i].clone(), names[j].clone());
            match (want, have) {
                (true, false) => missing_edges.push(pair),
                (false, true) => extra_edges.push(pair),
                _ => {}
            }
        }
    }
    Ok(VerifyReport {
        ok: missing_edges.is_empty() && extra_edges.is_empty(),
        missing_edges,
        extra_edges,
    })
}

/// First dimension whose interval graph lacks an edge of `g`, if any.
pub fn first_non_supergraph(rep: &BoxRep, g: &Graph) -> Result<Option<usize>> {
    let map = align(rep, g)?;
    let n = g.n();
    for d in 0..rep.dims() {
        let gd = graph_of_dimension(rep, d)?;
        let bad =
            (0..n).any(|i| (i + 1..n).any(|j| g.has_edge(map[i], map[j]) && !gd.has_edge(i, j)));
        if bad {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_non_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 8,
            max_non_edges: 16,
        }
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|i| g.neighbors(i).fold(0u64, |m, j| m | 1 << j))
        .collect()
}

/// Searches for a vertex order in which `u < v < w` and `uw` an edge imply
/// `uv` an edge. A placed vertex stays "active" while it is adjacent to
/// everything placed after it; a new vertex may only see active vertices.
fn has_interval_order(adj: &[u64]) -> bool {
    fn go(
        placed: u64,
        active: u64,
        adj: &[u64],
        full: u64,
        dead: &mut HashSet<(u64, u64)>,
    ) -> bool {
        if placed == full {
            return true;
        }
        if dead.contains(&(placed, active)) {
            return false;
        }
        for (w, &nb) in adj.iter().enumerate() {
            let bit = 1u64 << w;
            if placed & bit != 0 || nb & placed & !active != 0 {
                continue;
            }
            if go(placed | bit, (active & nb) | bit, adj, full, dead) {
                return true;
            }
        }
        dead.insert((placed, active));
        false
    }
    let n = adj.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(0, 0, adj, full, &mut HashSet::new())
}

pub fn is_interval(g: &Graph) -> Result<bool> {
    is_interval_with_limit(g, OracleLimits::default().max_vertices)
}

pub fn is_interval_with_limit(g: &Graph, max_vertices: usize) -> Result<bool> {
    if g.n() > max_vertices.min(64) {
        return Err(Error::TooLarge(format!(
            "{} vertices, limit {max_vertices}",
            g.n()
        )));
    }
    Ok(has_interval_order(&adjacency_masks(g)))
}

pub fn boxicity_exact(g: &Graph) -> Result<usize> {
    boxicity_exact_with(g, OracleLimits::default())
}

/// Minimum number of interval supergraphs of `g` whose non-edge sets cover
/// the non-edges of `g`. The complete graph has boxicity 0.
pub fn boxicity_exact_with(g: &Graph, limits: OracleLimits) -> Result<usize> {
    let non_edges = g.non_edges();
    if g.n() > limits.max_vertices.min(64) || non_edges.len() > limits.max_non_edges.min(24) {
        return Err(Error::TooLarge(format!(
            "{} vertices and {} non-edges, limits {} and {}",
            g.n(),
            non_edges.len(),
            limits.max_vertices,
            limits.max_non_edges
        )));
    }
    let m = non_edges.len();
    if m == 0 {
        return Ok(0);
    }
    let full: u32 = (1u32 << m) - 1;
    let base = adjacency_masks(g);

    // Candidate masks: maximal sets of non-edges kept by an interval supergraph.
    let mut masks: Vec<u32> = (1..=full).collect();
    masks.sort_by_key(|k| std::cmp::Reverse(k.count_ones()));
    let mut candidates: Vec<u32> = Vec::new();
    for kept in masks {
        if candidates.iter().any(|&c| kept & c == kept) {
            continue;
        }
        let mut adj = base.clone();
        for (bit, &(i, j)) in non_edges.iter().enumerate() {
            if kept & (1 << bit) == 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        if has_interval_order(&adj) {
            candidates.push(kept);
        }
    }
    Ok(min_cover(full, &candidates, &mut HashMap::new()))
}

/// Exact set cover by branching on the lowest uncovered element.
fn min_cover(uncovered: u32, candidates: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
    if uncovered == 0 {
        return 0;
    }
    if let Some(&k) = memo.get(&uncovered) {
        return k;
    }
    let low = uncovered & uncovered.wrapping_neg();
    let best = candidates
        .iter()
        .filter(|&&c| c & low != 0)
        .map(|&c| 1 + min_cover(uncovered & !c, candidates, memo))
        .min()
        .expect("every non-edge lies in some interval supergraph");
    memo.insert(uncovered, best);
    best
}
