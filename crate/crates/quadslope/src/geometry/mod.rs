//! Exact plane geometry over a formal ordered basis.
//!
//! Coordinates are rational linear combinations of basis symbols with a
//! lexicographic total order in which higher symbol ids dominate. Slopes are
//! canonical homogeneous rational pairs, so the vertical direction needs no
//! special casing anywhere.

mod point;
mod realize;
mod scalar;
mod slope;

pub use point::{
    directional_relation, rotate_pi_all, slope_between, translate_all, AffineMap, Direction, Point,
};
pub use realize::{numeric_realize, BasisAssignment};
pub use scalar::{rat, rat_from_str, rat_int, rat_to_string, Rat, SymScalar, UNIT_SYMBOL};
pub use slope::{basic_slopes, Slope, SlopeSet};
