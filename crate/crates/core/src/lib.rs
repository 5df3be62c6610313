//! Approximate matching distance between bi-filtered simplicial complexes.
//!
//! The matching distance is the supremum, over all lines of positive slope,
//! of the bottleneck distance between the persistence diagrams of the two
//! filtrations restricted to the line. [`solver::approximate`] computes it
//! up to an absolute or relative error by subdividing the space of lines
//! into boxes and discarding boxes whose upper bound cannot improve the
//! current estimate.
//!
//! ```
//! use matchdist::{approximate, validate_bifiltration, Point2, SolverConfig};
//!
//! let a = validate_bifiltration(vec![(vec![0], vec![Point2::new(0.0, 0.0)])]).unwrap();
//! let b = validate_bifiltration(vec![(vec![0], vec![Point2::new(1.0, 0.0)])]).unwrap();
//! let r = approximate(&a, &b, &SolverConfig::absolute(0.01)).unwrap();
//! assert!((r.delta - 1.0).abs() <= 0.01);
//! ```

pub mod bench;
pub mod bottleneck;
pub mod bounds;
pub mod cli;
pub mod complex;
pub mod error;
pub mod generators;
pub mod heatmap;
pub mod io;
mod matching;
pub mod persistence;
pub mod slice;
pub mod solver;

pub use bottleneck::bottleneck_distance;
pub use bounds::{bound_c, bound_g, bound_l, BoundKind};
pub use complex::{
    lower_star, normalize_pair, normalize_to_positive_quadrant, validate_bifiltration, BiFiltration, Complex,
    CriticalSet, MonoFiltration, Point2, Simplex,
};
pub use error::{Error, Result};
pub use persistence::{persistence, persistence_dim0, persistence_general, Diagram};
pub use slice::{initial_boxes, restrict, weighted_push, ParamBox, Slice, SliceType};
pub use solver::{approximate, budgeted_approximate, eval, ApproxResult, Mode, SolverConfig, Status, Traversal};
