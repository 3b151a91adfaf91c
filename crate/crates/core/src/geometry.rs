//! The `alpha`-axis reference system.
//!
//! Half-axis `H_j` sits at standard angle `pi j / alpha`, numbered
//! anticlockwise from the positive x-axis, so its circle point is at
//! `-j / (2 alpha)` clockwise turns. Sector `S_j` is the open arc between
//! `H_j` and `H_{j+1}`.
//!
//! An [`AxisSystem`] may carry a relabeling offset: in a system relabeled at
//! `h`, the half-axis formerly called `H_h` is called `H_0` and every other
//! index shifts with it. Arcs never move.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{ratio, wrap, Arc, TurnPos};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxisSystem {
    alpha: usize,
    offset: usize,
}

impl AxisSystem {
    pub fn new(alpha: usize) -> Result<Self> {
        if alpha < 2 {
            return Err(Error::BadAlpha(alpha));
        }
        Ok(AxisSystem { alpha, offset: 0 })
    }

    /// The same axes with `H_h` of this system renamed `H_0`.
    pub fn relabeled(&self, h: usize) -> AxisSystem {
        AxisSystem {
            alpha: self.alpha,
            offset: (self.offset + h) % (2 * self.alpha),
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn half_axes(&self) -> usize {
        2 * self.alpha
    }

    /// Reduces a signed index modulo `2 alpha`.
    pub fn idx(&self, j: i64) -> usize {
        j.rem_euclid(self.half_axes() as i64) as usize
    }

    fn absolute(&self, j: usize) -> usize {
        (j + self.offset) % self.half_axes()
    }

    pub fn half_axis_point(&self, j: usize) -> TurnPos {
        let m = self.half_axes();
        let k = self.absolute(j);
        TurnPos::frac(((m - k) % m) as i64, m as i64)
    }

    pub fn is_on_axis(&self, p: &TurnPos) -> bool {
        (p.value() * BigInt::from(self.half_axes())).is_integer()
    }

    pub fn sector_of(&self, p: &TurnPos) -> Result<usize> {
        let m = self.half_axes();
        // anticlockwise turns from R0
        let x = wrap(-p.value().clone()) * BigInt::from(m);
        if x.is_integer() {
            return Err(Error::OnAxis);
        }
        let k: usize = x.floor().to_integer().try_into().unwrap();
        Ok((k + m - self.offset) % m)
    }

    /// Sector `S_k` as an arc: clockwise from the point of `H_{k+1}` to the
    /// point of `H_k`.
    pub fn sector_arc(&self, k: usize) -> Arc {
        let l = self.half_axis_point((k + 1) % self.half_axes());
        let r = self.half_axis_point(k);
        Arc::new(l, r).expect("sector endpoints differ")
    }

    /// Reflection of `p` across reference axis `A_j`.
    pub fn image_point(&self, p: &TurnPos, j: usize) -> TurnPos {
        let shift = ratio((j + self.offset) as i64, self.alpha as i64);
        TurnPos::new(-p.value().clone() - shift)
    }

    /// Reflection of an arc across `A_j`; the endpoints swap roles.
    pub fn image_arc(&self, a: &Arc, j: usize) -> Arc {
        Arc::new(self.image_point(a.r(), j), self.image_point(a.l(), j))
            .expect("reflection keeps endpoints distinct")
    }

    /// Projection of `p` onto `A_j`, encoded by its folded distance to `H_j`.
    pub fn proj_value(&self, p: &TurnPos, j: usize) -> ProjValue {
        let d = p.offset_from(&self.half_axis_point(j));
        let half = ratio(1, 2);
        let d = if d > half { BigRational::one() - d } else { d };
        ProjValue { d }
    }

    /// `[inf Proj_j(a), sup Proj_j(a)]`.
    pub fn proj_interval(&self, a: &Arc, j: usize) -> AxisInterval {
        let pl = self.proj_value(a.l(), j);
        let pr = self.proj_value(a.r(), j);
        let (lo, hi) = if pl <= pr { (pl, pr) } else { (pr, pl) };
        let hi = if a.contains(&self.half_axis_point(j)) {
            ProjValue::max()
        } else {
            hi
        };
        let lo = if a.contains(&self.half_axis_point(j + self.alpha)) {
            ProjValue::min()
        } else {
            lo
        };
        AxisInterval { lo, hi }
    }

    fn check_off_axis(&self, a: &Arc) -> Result<()> {
        if self.is_on_axis(a.l()) || self.is_on_axis(a.r()) {
            Err(Error::OnAxis)
        } else {
            Ok(())
        }
    }

    /// Half-axes met by `a`, in the order an anticlockwise walk from `r(a)`
    /// to `l(a)` meets them.
    pub fn interception(&self, a: &Arc) -> Result<Vec<usize>> {
        self.check_off_axis(a)?;
        let mut hits: Vec<(BigRational, usize)> = (0..self.half_axes())
            .filter_map(|j| {
                let h = self.half_axis_point(j);
                a.contains(&h).then(|| (a.r().offset_from(&h), j))
            })
            .collect();
        hits.sort();
        Ok(hits.into_iter().map(|(_, j)| j).collect())
    }

    /// The `ceil(t/2)`-th entry of the interception list of length `t`.
    pub fn median_half_axis(&self, a: &Arc) -> Result<usize> {
        let int = self.interception(a)?;
        if int.is_empty() {
            return Err(Error::EmptyInterception);
        }
        Ok(int[int.len().div_ceil(2) - 1])
    }

    /// `(head, tail)`: the sectors holding `l(a)` and `r(a)`.
    pub fn head_tail_sectors(&self, a: &Arc) -> Result<(usize, usize)> {
        Ok((self.sector_of(a.l())?, self.sector_of(a.r())?))
    }

    /// Lengths of `a ∩ head(a)` and `a ∩ tail(a)` in turns.
    pub fn head_tail_lengths(&self, a: &Arc) -> Result<(BigRational, BigRational)> {
        if self.interception(a)?.is_empty() {
            return Err(Error::EmptyInterception);
        }
        let (head, tail) = self.head_tail_sectors(a)?;
        let len_h = self.half_axis_point(head).offset_from(a.l());
        let tail_start = self.half_axis_point((tail + 1) % self.half_axes());
        let len_t = a.r().offset_from(&tail_start);
        Ok((len_h, len_t))
    }
}

/// A point of a reference axis, stored as folded circular distance `d` in
/// `[0, 1/2]` turns from the positive half-axis point. Larger `d` means a
/// smaller projection.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjValue {
    d: BigRational,
}

impl ProjValue {
    pub fn from_distance(d: BigRational) -> Self {
        assert!(d >= BigRational::zero() && d <= ratio(1, 2));
        ProjValue { d }
    }

    /// Projection `+1`.
    pub fn max() -> Self {
        ProjValue {
            d: BigRational::zero(),
        }
    }

    /// Projection `-1`.
    pub fn min() -> Self {
        ProjValue { d: ratio(1, 2) }
    }

    pub fn distance(&self) -> &BigRational {
        &self.d
    }

    /// Order-preserving rational coordinate `1/2 - d`.
    pub fn coordinate(&self) -> BigRational {
        ratio(1, 2) - &self.d
    }

    /// `cos(2 pi d)`; display and sanity checks only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        (2.0 * std::f64::consts::PI * self.d.to_f64().unwrap_or(f64::NAN)).cos()
    }
}

impl Ord for ProjValue {
    fn cmp(&self, other: &Self) -> Ordering {
        other.d.cmp(&self.d)
    }
}

impl PartialOrd for ProjValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisInterval {
    pub lo: ProjValue,
    pub hi: ProjValue,
}

impl AxisInterval {
    pub fn intersects(&self, other: &AxisInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}
