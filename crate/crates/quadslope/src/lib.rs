//! Straight-line drawings of cubic graphs with the four basic slopes
//! `{0, π/4, π/2, 3π/4}`.
//!
//! The crate decomposes an arbitrary cubic graph along a suitable M-cut
//! (found from a short supercycle, a bridge, or a two-cut), draws the two
//! subcubic sides under prescribed x-coordinates by exact constraint
//! search, and composes them with vertical cut edges. Every coordinate is
//! an exact rational combination over a formal ordered symbol basis, so all
//! drawings are verified symbolically with no floating point anywhere in
//! the decision path. A separate module decides whether an arbitrary set of
//! four slopes is good (can draw every cubic graph), two independent ways.
//!
//! Entry points:
//! - [`pipeline::draw_cubic`] draws any cubic graph and returns the drawing
//!   with a trace of the decomposition branch taken.
//! - [`pipeline::verify_drawing`] checks any drawing against any slope set.
//! - [`slopes::is_good`] decides goodness of a four-slope set.
//! - [`document::DrawingDocument`] is the JSON interchange form;
//!   [`svg::render_svg`] renders presentation output.

pub mod document;
pub mod drawer;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod pipeline;
pub mod samples;
pub mod slopes;
pub mod structure;
pub mod svg;

mod verify;

pub use document::DrawingDocument;
pub use drawer::{draw_subcubic, fixture_drawing, Drawing, DrawConfig, FixtureName, XAssignment};
pub use geometry::{Point, Slope, SlopeSet, SymScalar};
pub use graph::{parse_edge_list, parse_graph6, to_graph6, Graph, VertexSet};
pub use pipeline::{draw_cubic, verify_drawing, PipelineConfig, PipelineOutcome, PipelineTrace};
pub use structure::{fmax, BoundReport};
