//! Exact validity checking of straight-line drawings.
//!
//! Independent of every construction path in this crate: works directly on
//! symbolic coordinates, so search routines can be checked against it.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::geometry::{slope_between, Point, Rat, Slope, SlopeSet, SymScalar};
use crate::graph::Graph;

/// A violation of drawing validity, with witnesses.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum DrawingViolation {
    /// The position list does not cover the vertex set bijectively.
    PlacementArity { expected: usize, got: usize },
    /// Two vertices share a point.
    CoincidentPoints { u: usize, v: usize },
    /// An edge's slope is not a member of the slope set (`None`: the
    /// segment direction is not even a rational slope).
    SlopeViolation {
        edge: (usize, usize),
        found: Option<Slope>,
    },
    /// A vertex lies strictly inside an edge segment.
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
}

impl fmt::Display for DrawingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingViolation::PlacementArity { expected, got } => {
                write!(f, "expected {expected} vertex positions, got {got}")
            }
            DrawingViolation::CoincidentPoints { u, v } => {
                write!(f, "vertices {u} and {v} share a point")
            }
            DrawingViolation::SlopeViolation { edge: (u, v), found } => match found {
                Some(s) => write!(f, "edge {u}-{v} has slope {s}, not in the slope set"),
                None => write!(f, "edge {u}-{v} has no rational slope"),
            },
            DrawingViolation::VertexOnEdge { vertex, edge: (u, v) } => {
                write!(f, "vertex {vertex} lies inside edge {u}-{v}")
            }
        }
    }
}

/// Result of a validity check; empty means valid.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct DrawingReport {
    pub violations: Vec<DrawingViolation>,
}

impl DrawingReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for DrawingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "valid");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

/// Checks a placement against a graph and slope set: bijective placement
/// with pairwise-distinct points, every edge slope in the set, and no vertex
/// strictly inside any edge segment.
pub(crate) fn check_drawing(g: &Graph, pos: &[Point], slopes: &SlopeSet) -> DrawingReport {
    let mut violations = Vec::new();
    if pos.len() != g.n() {
        violations.push(DrawingViolation::PlacementArity {
            expected: g.n(),
            got: pos.len(),
        });
        return DrawingReport { violations };
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if pos[u] == pos[v] {
                violations.push(DrawingViolation::CoincidentPoints { u, v });
            }
        }
    }
    for (u, v) in dedup_edges(g) {
        if pos[u] == pos[v] {
            continue; // already reported as coincident
        }
        let slope = slope_between(&pos[u], &pos[v]).expect("endpoints distinct");
        match slope {
            Some(ref s) if slopes.contains(s) => {
                for w in 0..g.n() {
                    if w != u && w != v && strictly_inside(&pos[w], &pos[u], &pos[v], s) {
                        violations.push(DrawingViolation::VertexOnEdge {
                            vertex: w,
                            edge: (u, v),
                        });
                    }
                }
            }
            found => violations.push(DrawingViolation::SlopeViolation {
                edge: (u, v),
                found,
            }),
        }
    }
    DrawingReport { violations }
}

fn dedup_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges = g.edges();
    edges.dedup();
    edges
}

/// Whether `w` lies strictly inside the segment from `p` to `q`, given the
/// segment's rational slope. Exact: the offset of `w` along the segment
/// direction must be strictly between zero and the offset of `q`.
fn strictly_inside(w: &Point, p: &Point, q: &Point, slope: &Slope) -> bool {
    let dx = slope.dx_rat();
    let dy = slope.dy_rat();
    let rel_x = &w.x - &p.x;
    let rel_y = &w.y - &p.y;
    // Collinearity with a rational direction: dy * rel_x == dx * rel_y.
    if rel_x.scale(&dy) != rel_y.scale(&dx) {
        return false;
    }
    let along = |vx: &SymScalar, vy: &SymScalar| -> SymScalar {
        if !dx.is_zero() {
            vx.scale(&(Rat::from_integer(1.into()) / &dx))
        } else {
            vy.scale(&(Rat::from_integer(1.into()) / &dy))
        }
    };
    let b = along(&rel_x, &rel_y);
    let a = along(&(&q.x - &p.x), &(&q.y - &p.y));
    let zero = SymScalar::zero();
    (b > zero && b < a) || (b < zero && b > a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn square_with_diagonals() -> (Graph, Vec<Point>) {
        let g = crate::samples::k4();
        let pos = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ];
        (g, pos)
    }

    #[test]
    fn unit_square_is_valid_with_basic_slopes() {
        let (g, pos) = square_with_diagonals();
        assert!(check_drawing(&g, &pos, &SlopeSet::basic()).ok());
    }

    #[test]
    fn three_slopes_reject_a_diagonal() {
        let (g, pos) = square_with_diagonals();
        let three = SlopeSet::new(vec![
            Slope::from_int(0),
            Slope::vertical(),
            Slope::from_int(1),
        ])
        .unwrap();
        let report = check_drawing(&g, &pos, &three);
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, DrawingViolation::SlopeViolation { .. })));
    }

    #[test]
    fn vertex_inside_edge_detected() {
        let g = Graph::simple(3, &[(0, 1), (1, 2)]).unwrap();
        let pos = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(1, 0),
        ];
        // Vertex 2 sits inside edge 0-1.
        let report = check_drawing(&g, &pos, &SlopeSet::basic());
        assert_eq!(
            report.violations,
            vec![DrawingViolation::VertexOnEdge {
                vertex: 2,
                edge: (0, 1)
            }]
        );
    }

    #[test]
    fn collinear_through_vertex_is_legal() {
        // A path drawn straight: the middle vertex is an endpoint of both
        // edges, not an interior point.
        let g = Graph::simple(3, &[(0, 1), (1, 2)]).unwrap();
        let pos = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(2, 0),
        ];
        assert!(check_drawing(&g, &pos, &SlopeSet::basic()).ok());
    }

    #[test]
    fn coincident_points_detected() {
        let g = Graph::simple(2, &[(0, 1)]).unwrap();
        let pos = vec![Point::from_ints(1, 1), Point::from_ints(1, 1)];
        let report = check_drawing(&g, &pos, &SlopeSet::basic());
        assert_eq!(
            report.violations,
            vec![DrawingViolation::CoincidentPoints { u: 0, v: 1 }]
        );
    }

    #[test]
    fn irrational_direction_reported() {
        let g = Graph::simple(2, &[(0, 1)]).unwrap();
        let pos = vec![
            Point::from_ints(0, 0),
            Point::new(SymScalar::symbol(1), SymScalar::symbol(2)),
        ];
        let report = check_drawing(&g, &pos, &SlopeSet::basic());
        assert_eq!(
            report.violations,
            vec![DrawingViolation::SlopeViolation {
                edge: (0, 1),
                found: None
            }]
        );
    }
}
