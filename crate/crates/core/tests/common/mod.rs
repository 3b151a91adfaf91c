#![allow(dead_code)]

use cagbox::{Arc, ArcFamily, AxisSystem, BoxRep, Graph, TurnPos};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational in the open interval `(0, 1)` with a random denominator.
pub fn unit_open(rng: &mut ChaCha8Rng) -> BigRational {
    let den = rng.gen_range(2..=5000i64);
    q(rng.gen_range(1..den), den)
}

pub fn random_pos(rng: &mut ChaCha8Rng) -> TurnPos {
    let den = rng.gen_range(1..=5000i64);
    TurnPos::frac(rng.gen_range(0..den), den)
}

pub fn off_axis_pos(rng: &mut ChaCha8Rng, sys: &AxisSystem) -> TurnPos {
    loop {
        let p = random_pos(rng);
        if !sys.is_on_axis(&p) {
            return p;
        }
    }
}

/// Arc with both endpoints off the axes and length in `(0, max_len)`.
pub fn off_axis_arc(rng: &mut ChaCha8Rng, sys: &AxisSystem, max_len: &BigRational) -> Arc {
    loop {
        let l = off_axis_pos(rng, sys);
        let r = l.shifted(&(max_len * unit_open(rng)));
        if !sys.is_on_axis(&r) {
            return Arc::new(l, r).unwrap();
        }
    }
}

/// An arc disjoint from `u` of length at least `len(u)`; `None` when the
/// complement of `u` is too short. Equal lengths are drawn a quarter of
/// the time.
pub fn disjoint_partner(rng: &mut ChaCha8Rng, u: &Arc) -> Option<Arc> {
    let len_u = u.length();
    let gap = BigRational::one() - &len_u;
    if gap <= len_u {
        return None;
    }
    let slack = &gap - &len_u;
    let len_v = if rng.gen_ratio(1, 4) {
        len_u.clone()
    } else {
        &len_u + &slack * unit_open(rng)
    };
    let start = (&gap - &len_v) * unit_open(rng);
    let l = u.r().shifted(&start);
    let r = l.shifted(&len_v);
    Some(Arc::new(l, r).unwrap())
}

#[derive(Debug, Default)]
pub struct Tally {
    /// Instances where the premise held.
    pub instances: usize,
    pub failed: usize,
    /// The first few counterexamples.
    pub failures: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }

    pub fn ok(&self, target: usize) -> bool {
        self.instances >= target && self.failed == 0
    }
}

pub fn random_alpha(rng: &mut ChaCha8Rng) -> AxisSystem {
    AxisSystem::new(rng.gen_range(2..=8)).unwrap()
}

/// Sector image formula: `P in S_k` implies `Im_j(P) in S_{2j-k-1}`.
pub fn sector_image(target: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    while t.instances < target {
        let sys = random_alpha(&mut rng);
        let p = off_axis_pos(&mut rng, &sys);
        let j = rng.gen_range(0..sys.alpha());
        let k = sys.sector_of(&p).unwrap() as i64;
        let got = sys.sector_of(&sys.image_point(&p, j)).unwrap();
        let want = sys.idx(2 * j as i64 - k - 1);
        t.record(got == want, || format!("alpha={} j={j} p={p}", sys.alpha()));
    }
    t
}

/// `Im_j(u)` is the pointwise image of `u`, with `l(Im_j u) = Im_j(r u)`.
pub fn endpoint_swap(target: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let one = BigRational::one();
    while t.instances < target {
        let sys = random_alpha(&mut rng);
        let u = off_axis_arc(&mut rng, &sys, &one);
        let j = rng.gen_range(0..sys.alpha());
        let im = sys.image_arc(&u, j);
        let x = random_pos(&mut rng);
        let ok = im.l() == &sys.image_point(u.r(), j)
            && im.r() == &sys.image_point(u.l(), j)
            && im.length() == u.length()
            && u.contains(&x) == im.contains(&sys.image_point(&x, j));
        t.record(ok, || format!("alpha={} j={j} u={u:?} x={x}", sys.alpha()));
    }
    t
}

/// Distinct points with equal projection onto `A_j` are mirror images, so
/// the second lies in `S_{2j-k-1}`.
pub fn projection_collision(target: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    while t.instances < target {
        let sys = random_alpha(&mut rng);
        let j = rng.gen_range(0..sys.alpha());
        let p = off_axis_pos(&mut rng, &sys);
        // half the time a mirror image, otherwise an unrelated point
        let p2 = if rng.gen_bool(0.5) {
            sys.image_point(&p, j)
        } else {
            off_axis_pos(&mut rng, &sys)
        };
        if p2 == p || sys.proj_value(&p, j) != sys.proj_value(&p2, j) {
            // premise fails; make sure an unrelated point really differs
            if p2 != p && p2 == sys.image_point(&p, j) {
                t.record(false, || {
                    format!("mirror with distinct projection {p} {p2}")
                });
            }
            continue;
        }
        let k = sys.sector_of(&p).unwrap() as i64;
        let ok = p2 == sys.image_point(&p, j)
            && sys.sector_of(&p2).unwrap() == sys.idx(2 * j as i64 - k - 1);
        t.record(ok, || format!("alpha={} j={j} p={p} p2={p2}", sys.alpha()));
    }
    t
}

/// An arc with its axis system relabeled so that its median half-axis is
/// `H_0`, together with `|Int|`, `p` and the head and tail lengths.
pub struct Centered {
    pub sys: AxisSystem,
    pub u: Arc,
    pub int: usize,
    pub p: i64,
    pub len_h: BigRational,
    pub len_t: BigRational,
}

pub fn center(sys: &AxisSystem, u: Arc) -> Option<Centered> {
    let m = sys.median_half_axis(&u).ok()?;
    let sys = sys.relabeled(m);
    assert_eq!(sys.median_half_axis(&u).unwrap(), 0);
    let int = sys.interception(&u).unwrap().len();
    let (len_h, len_t) = sys.head_tail_lengths(&u).unwrap();
    Some(Centered {
        sys,
        u,
        int,
        p: int.div_ceil(2) as i64,
        len_h,
        len_t,
    })
}

/// Expected sector numbers `(head, Im_j head, tail, Im_j tail)` for a
/// centered arc.
pub fn table_row(c: &Centered, j: usize) -> [i64; 4] {
    let p = c.p;
    match (c.int.is_multiple_of(2), j) {
        (true, 0) => [p, -(p + 1), -p, p - 1],
        (true, _) => [p, -p + 1, -p, p + 1],
        (false, 0) => [p - 1, -p, -p, p - 1],
        (false, _) => [p - 1, -p + 2, -p, p + 1],
    }
}

/// The four sector tables: even or odd interception, image in `A_0` or `A_1`.
pub fn sector_table(target: usize, seed: u64) -> [Tally; 4] {
    let mut rng = rng(seed);
    let mut tallies: [Tally; 4] = Default::default();
    let one = BigRational::one();
    while tallies.iter().any(|t| t.instances < target) {
        let sys = random_alpha(&mut rng);
        let u = off_axis_arc(&mut rng, &sys, &one);
        let Some(c) = center(&sys, u) else { continue };
        for j in 0..2 {
            let row = (c.int % 2) * 2 + j;
            let want = table_row(&c, j).map(|s| c.sys.idx(s));
            let s = &c.sys;
            let got = [
                s.sector_of(c.u.l()).unwrap(),
                s.sector_of(&s.image_point(c.u.l(), j)).unwrap(),
                s.sector_of(c.u.r()).unwrap(),
                s.sector_of(&s.image_point(c.u.r(), j)).unwrap(),
            ];
            tallies[row].record(got == want, || {
                format!(
                    "alpha={} |Int|={} u={:?}: got {got:?} want {want:?}",
                    s.alpha(),
                    c.int,
                    c.u
                )
            });
        }
    }
    tallies
}

/// Conditional adjacency properties of a disjoint pair `u`, `v` with
/// `len(u) <= len(v)` after centering `u`.
///
/// Slots: 0..=4 for the `|Int| >= 2` cases (even 1a, even 1b, odd 2a,
/// odd 2b, symmetric), 5..=7 for `|Int| = 1` (1a, 1b, symmetric).
pub const IMAGE_PARTS: [&str; 8] = [
    "|Int| even, Im_0",
    "|Int| even, Im_1",
    "|Int| odd >= 3, len_h > len_t, Im_0",
    "|Int| odd >= 3, len_h > len_t, Im_1",
    "|Int| odd >= 3, len_h = len_t",
    "|Int| = 1, len_h > len_t, Im_0",
    "|Int| = 1, len_h > len_t, Im_0 and Im_1",
    "|Int| = 1, len_h = len_t",
];

pub fn image_adjacency(target: usize, seed: u64) -> [Tally; 8] {
    let mut rng = rng(seed);
    let mut tallies: [Tally; 8] = Default::default();
    let half = q(1, 2);
    let mut attempts = 0u64;
    while tallies.iter().any(|t| t.instances < target) && attempts < 20_000_000 {
        attempts += 1;
        let sys = random_alpha(&mut rng);
        let symmetric = rng.gen_ratio(1, 4);
        let u = if symmetric {
            symmetric_arc(&mut rng, &sys)
        } else {
            off_axis_arc(&mut rng, &sys, &half)
        };
        let Some(c) = center(&sys, u) else { continue };
        let Some(v) = disjoint_partner(&mut rng, &c.u) else {
            continue;
        };
        let s = &c.sys;
        let im0 = s.image_arc(&c.u, 0);
        let im1 = s.image_arc(&c.u, 1);
        let hit0 = v.intersects(&im0);
        let hit1 = v.intersects(&im1);
        let describe = || format!("alpha={} |Int|={} u={:?} v={v:?}", s.alpha(), c.int, c.u);
        let even = c.int % 2 == 0;
        let longer_head = c.len_h > c.len_t;
        let balanced = c.len_h == c.len_t;
        if symmetric {
            let slot = if c.int == 1 { 7 } else { 4 };
            tallies[slot].record(balanced && im0 == c.u && !hit0, describe);
            continue;
        }
        match c.int {
            0 => {}
            1 if longer_head => {
                if hit0 {
                    tallies[5].record(v.contains(im0.r()), describe);
                    if hit1 {
                        tallies[6].record(v.contains(im1.l()), describe);
                    }
                }
            }
            1 => {}
            _ if even || longer_head => {
                let base = if even { 0 } else { 2 };
                if hit0 {
                    tallies[base].record(v.contains(im0.r()), describe);
                }
                if hit1 {
                    tallies[base + 1].record(v.contains(im1.l()), describe);
                }
            }
            _ => {}
        }
    }
    tallies
}

/// An arc centred on a random half-axis, so its head and tail lengths agree.
pub fn symmetric_arc(rng: &mut ChaCha8Rng, sys: &AxisSystem) -> Arc {
    let h = sys.half_axis_point(rng.gen_range(0..sys.half_axes()));
    // small radii are drawn often so that single interceptions occur
    let cap = if rng.gen_bool(0.5) {
        q(1, 2 * sys.half_axes() as i64)
    } else {
        q(1, 4)
    };
    loop {
        let x = &cap * unit_open(rng);
        let l = h.shifted(&-x.clone());
        if !sys.is_on_axis(&l) {
            return Arc::new(l, h.shifted(&x)).unwrap();
        }
    }
}

/// Arcs containing `p`, computed straight from the endpoint inequalities.
pub fn count_through(f: &ArcFamily, p: &BigRational) -> usize {
    f.arcs()
        .iter()
        .filter(|a| {
            let (l, r) = (a.l().value(), a.r().value());
            if l <= r {
                l <= p && p <= r
            } else {
                p >= l || p <= r
            }
        })
        .count()
}

/// Every endpoint and every midpoint between consecutive endpoints.
pub fn probe_points(f: &ArcFamily) -> Vec<BigRational> {
    let mut pts: Vec<BigRational> = f
        .arcs()
        .iter()
        .flat_map(|a| [a.l().value().clone(), a.r().value().clone()])
        .collect();
    pts.sort();
    pts.dedup();
    let m = pts.len();
    let mut out = pts.clone();
    for i in 0..m {
        let a = &pts[i];
        let b = if i + 1 < m {
            pts[i + 1].clone()
        } else {
            &pts[0] + BigRational::one()
        };
        let mid = (a + &b) / BigInt::from(2);
        out.push(if mid >= BigRational::one() {
            mid - BigRational::one()
        } else {
            mid
        });
    }
    out
}

pub fn brute_r_inf(f: &ArcFamily) -> usize {
    probe_points(f)
        .iter()
        .map(|p| count_through(f, p))
        .min()
        .unwrap()
}

/// Smallest subset covering the circle by exhaustive search.
pub fn brute_cover(f: &ArcFamily) -> Option<usize> {
    let n = f.n();
    assert!(n <= 16);
    let probes = probe_points(f);
    let covers: Vec<u32> = probes
        .iter()
        .map(|p| {
            f.arcs()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.contains(&TurnPos::new(p.clone())))
                .fold(0u32, |m, (v, _)| m | 1 << v)
        })
        .collect();
    (1u32..1 << n)
        .filter(|s| covers.iter().all(|c| c & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Maximal cliques by subset enumeration.
pub fn maximal_cliques(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let is_clique = |s: u32| {
        (0..n).all(|i| s >> i & 1 == 0 || (i + 1..n).all(|j| s >> j & 1 == 0 || g.has_edge(i, j)))
    };
    let cliques: Vec<u32> = (1u32..1 << n).filter(|&s| is_clique(s)).collect();
    cliques
        .iter()
        .copied()
        .filter(|&s| !cliques.iter().any(|&t| t != s && t & s == s))
        .collect()
}

/// Interval recognition through an ordering of maximal cliques in which the
/// cliques holding each vertex are consecutive.
pub fn interval_by_cliques(g: &Graph) -> bool {
    let cliques = maximal_cliques(g);
    let n = g.n();
    fn extend(order: &mut Vec<u32>, left: &mut Vec<u32>, n: usize) -> bool {
        if left.is_empty() {
            return true;
        }
        for i in 0..left.len() {
            let c = left.remove(i);
            order.push(c);
            // a vertex that has left the run may not come back
            let ok = (0..n).all(|v| {
                let hits: Vec<usize> = order
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| *s >> v & 1 == 1)
                    .map(|(k, _)| k)
                    .collect();
                hits.windows(2).all(|w| w[1] == w[0] + 1)
            });
            if ok && extend(order, left, n) {
                return true;
            }
            order.pop();
            left.insert(i, c);
        }
        false
    }
    extend(&mut Vec::new(), &mut cliques.clone(), n)
}

/// Boxicity by brute force: the fewest interval supergraphs whose non-edge
/// sets together hit every non-edge.
pub fn brute_boxicity(g: &Graph) -> usize {
    let non_edges = g.non_edges();
    let m = non_edges.len();
    if m == 0 {
        return 0;
    }
    assert!(m <= 12);
    let n = g.n();
    // kept non-edge masks whose supergraph is interval
    let good: Vec<u32> = (1u32..1 << m)
        .filter(|&keep| {
            let edges = g.edges().into_iter().chain(
                non_edges
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| keep >> k & 1 == 0)
                    .map(|(_, e)| *e),
            );
            interval_by_cliques(&Graph::from_index_edges(n, edges))
        })
        .collect();
    let full = (1u32 << m) - 1;
    for k in 1..=m {
        if covers_with(&good, full, k, 0) {
            return k;
        }
    }
    unreachable!("each single non-edge is an interval supergraph's only gap")
}

fn covers_with(good: &[u32], need: u32, k: usize, from: usize) -> bool {
    if need == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    (from..good.len())
        .any(|i| good[i] & need != 0 && covers_with(good, need & !good[i], k - 1, i + 1))
}

/// Adjacency of a representation recomputed from its intervals.
pub fn rep_graph(rep: &BoxRep) -> Vec<Vec<bool>> {
    let n = rep.vertices().len();
    let mut adj = vec![vec![true; n]; n];
    for dim in rep.intervals() {
        for i in 0..n {
            for j in 0..n {
                if i != j && !(dim[i].lo <= dim[j].hi && dim[j].lo <= dim[i].hi) {
                    adj[i][j] = false;
                }
            }
        }
    }
    adj
}

pub fn same_graph(rep: &BoxRep, g: &Graph) -> bool {
    let adj = rep_graph(rep);
    let n = g.n();
    rep.vertices() == g.vertices()
        && (0..n).all(|i| (0..n).all(|j| i == j || adj[i][j] == g.has_edge(i, j)))
}

pub fn zero() -> BigRational {
    BigRational::zero()
}
