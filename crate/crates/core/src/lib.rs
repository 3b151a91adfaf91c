//! Box representations of circular arc graphs.
//!
//! Given a family of closed arcs on a circle, this crate builds a set of
//! interval graphs whose intersection is the family's intersection graph,
//! using one of four constructions:
//!
//! * [`build_interval_case`]: one dimension when some point is uncovered;
//! * [`build_degree`]: `alpha` dimensions when the maximum degree is below
//!   `floor(n (alpha - 1) / (2 alpha))`;
//! * [`build_overlap`]: `r_inf + 1` dimensions, `r_inf` being the fewest arcs
//!   through any point;
//! * [`build_cover`]: three dimensions when no four arcs cover the circle.
//!
//! Every builder verifies its output exactly before returning it. All
//! coordinates are exact rationals measured in clockwise turns.
//!
//! ```
//! use cagbox::{build_overlap, gen_roberts, boxicity_exact};
//!
//! let family = gen_roberts(6).unwrap().normalize(2).unwrap();
//! let rep = build_overlap(&family).unwrap();
//! assert_eq!(rep.dims(), 3);
//! assert_eq!(boxicity_exact(&family.intersection_graph()).unwrap(), 3);
//! ```

pub mod analysis;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod model;
pub mod oracle;

pub use analysis::{
    family_stats, max_degree, min_alpha_for_degree, min_circular_cover, overlap_set, sigma_order,
    sweep_overlap, uncovered_point, CoverResult, FamilyStats, SigmaOrder, SweepResult,
};
pub use constructions::{
    build, build_auto, build_cover, build_degree, build_interval_case, build_overlap, AutoReport,
    BoxRep, Interval, Method,
};
pub use error::{Error, Result};
pub use generators::{gen_consecutive_cover, gen_random, gen_roberts, gen_tightness};
pub use geometry::{AxisInterval, AxisSystem, ProjValue};
pub use model::{format_ratio, parse_ratio, Arc, ArcFamily, Graph, TurnPos};
pub use oracle::{
    boxicity_exact, boxicity_exact_with, graph_of_dimension, is_interval, verify, OracleLimits,
    VerifyReport,
};
