//! Points with symbolic coordinates, positional predicates, and plane maps.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::scalar::{Rat, SymScalar};
use super::slope::Slope;
use crate::error::GeometryError;

/// A point of the plane with exact symbolic coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Point {
    pub x: SymScalar,
    pub y: SymScalar,
}

impl Point {
    pub fn new(x: SymScalar, y: SymScalar) -> Point {
        Point { x, y }
    }

    /// A point with plain rational (integer) coordinates.
    pub fn from_ints(x: i64, y: i64) -> Point {
        Point {
            x: SymScalar::from_int(x),
            y: SymScalar::from_int(y),
        }
    }

    /// Central symmetry through the origin; fixes every slope.
    pub fn rotate_pi(&self) -> Point {
        Point {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn translate(&self, dx: &SymScalar, dy: &SymScalar) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    /// Highest basis symbol used by either coordinate.
    pub fn max_symbol(&self) -> Option<u32> {
        self.x.max_symbol().max(self.y.max_symbol())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Rotates every point by π around the origin.
pub fn rotate_pi_all(points: &[Point]) -> Vec<Point> {
    points.iter().map(Point::rotate_pi).collect()
}

/// Translates every point by `(dx, dy)`.
pub fn translate_all(points: &[Point], dx: &SymScalar, dy: &SymScalar) -> Vec<Point> {
    points.iter().map(|p| p.translate(dx, dy)).collect()
}

/// The slope of the segment `p q`.
///
/// Returns `Ok(None)` when the direction is not a rational multiple pair,
/// i.e. the segment has no rational slope and so belongs to no rational
/// slope set. Errors when `p == q`.
pub fn slope_between(p: &Point, q: &Point) -> Result<Option<Slope>, GeometryError> {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    if dx.is_zero() && dy.is_zero() {
        return Err(GeometryError::CoincidentPoints);
    }
    if dx.is_zero() {
        return Ok(Some(Slope::vertical()));
    }
    if dy.is_zero() {
        return Ok(Some(Slope::from_int(0)));
    }
    Ok(dy.try_ratio(&dx).map(|r| Slope::from_rat(&r)))
}

/// The two exact positional predicates of the drawing contract.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Same `x`, strictly larger `y`.
    North,
    /// Same `x + y`, strictly larger `y`.
    Northwest,
}

/// Whether `q` lies to the `which` of `p`.
pub fn directional_relation(p: &Point, q: &Point, which: Direction) -> bool {
    match which {
        Direction::North => q.x == p.x && q.y > p.y,
        Direction::Northwest => &q.x + &q.y == &p.x + &p.y && q.y > p.y,
    }
}

/// An invertible affine map of the plane with rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineMap {
    /// Linear part `[[a, b], [c, d]]`, row major.
    pub m: [[Rat; 2]; 2],
    /// Translation part.
    pub offset: (Rat, Rat),
}

impl AffineMap {
    /// Builds the map; rejects a singular linear part.
    pub fn new(m: [[Rat; 2]; 2], offset: (Rat, Rat)) -> Result<AffineMap, GeometryError> {
        let map = AffineMap { m, offset };
        if map.det().is_zero() {
            return Err(GeometryError::SingularMatrix);
        }
        Ok(map)
    }

    pub fn linear(m: [[Rat; 2]; 2]) -> Result<AffineMap, GeometryError> {
        AffineMap::new(m, (Rat::zero(), Rat::zero()))
    }

    pub fn identity() -> AffineMap {
        use super::scalar::rat_int;
        AffineMap {
            m: [
                [rat_int(1), rat_int(0)],
                [rat_int(0), rat_int(1)],
            ],
            offset: (Rat::zero(), Rat::zero()),
        }
    }

    pub fn det(&self) -> Rat {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// Linear action on symbolic coordinates plus the rational offset.
    pub fn apply(&self, p: &Point) -> Point {
        let x = &p.x.scale(&self.m[0][0]) + &p.y.scale(&self.m[0][1]);
        let y = &p.x.scale(&self.m[1][0]) + &p.y.scale(&self.m[1][1]);
        Point {
            x: &x + &SymScalar::from_rat(self.offset.0.clone()),
            y: &y + &SymScalar::from_rat(self.offset.1.clone()),
        }
    }

    /// Induced action on slopes: direction `(dx, dy)` maps under the linear
    /// part, so slope `s` goes to `(c + d·s) / (a + b·s)`.
    pub fn map_slope(&self, s: &Slope) -> Slope {
        let dx = s.dx_rat();
        let dy = s.dy_rat();
        let new_dx = &self.m[0][0] * &dx + &self.m[0][1] * &dy;
        let new_dy = &self.m[1][0] * &dx + &self.m[1][1] * &dy;
        // Invertibility keeps nonzero directions nonzero.
        let num = new_dy.numer() * new_dx.denom();
        let den = new_dx.numer() * new_dy.denom();
        Slope::from_direction(den, num).expect("invertible map preserves nonzero directions")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let mut m = [
            [Rat::zero(), Rat::zero()],
            [Rat::zero(), Rat::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = &self.m[i][0] * &other.m[0][j] + &self.m[i][1] * &other.m[1][j];
            }
        }
        let off_x =
            &self.m[0][0] * &other.offset.0 + &self.m[0][1] * &other.offset.1 + &self.offset.0;
        let off_y =
            &self.m[1][0] * &other.offset.0 + &self.m[1][1] * &other.offset.1 + &self.offset.1;
        AffineMap {
            m,
            offset: (off_x, off_y),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{rat, rat_int};
    use super::super::slope::basic_slopes;
    use super::*;

    fn sym(id: u32) -> SymScalar {
        SymScalar::symbol(id)
    }

    #[test]
    fn slope_between_examples() {
        let origin = Point::from_ints(0, 0);
        assert_eq!(
            slope_between(&origin, &Point::from_ints(1, 1)).unwrap(),
            Some(Slope::from_int(1))
        );
        // Equal x forced symbolically: vertical.
        let p = Point::new(sym(1), SymScalar::zero());
        let q = Point::new(sym(1), sym(2));
        assert_eq!(slope_between(&p, &q).unwrap(), Some(Slope::vertical()));
        // (0,0) -> (s1, 2 s1): proportional with ratio 2.
        let r = Point::new(sym(1), sym(1).scale(&rat_int(2)));
        assert_eq!(
            slope_between(&origin, &r).unwrap(),
            Some(Slope::from_int(2))
        );
        // (0,0) -> (s1, s2): no rational slope.
        let t = Point::new(sym(1), sym(2));
        assert_eq!(slope_between(&origin, &t).unwrap(), None);
        assert!(slope_between(&origin, &origin).is_err());
    }

    #[test]
    fn directional_relations() {
        let p = Point::from_ints(1, 2);
        assert!(directional_relation(&p, &Point::from_ints(1, 5), Direction::North));
        assert!(directional_relation(&p, &Point::from_ints(0, 3), Direction::Northwest));
        assert!(!directional_relation(&p, &Point::from_ints(2, 5), Direction::North));
        assert!(!directional_relation(&p, &Point::from_ints(1, 1), Direction::North));
        assert!(!directional_relation(&p, &Point::from_ints(2, 1), Direction::Northwest));
    }

    #[test]
    fn rotation_and_translation() {
        let p = Point::from_ints(2, 3);
        assert_eq!(p.rotate_pi(), Point::from_ints(-2, -3));
        let q = Point::new(sym(1), SymScalar::zero());
        let moved = q.translate(&SymScalar::zero(), &sym(9));
        assert_eq!(moved, Point::new(sym(1), sym(9)));
    }

    #[test]
    fn rotation_preserves_slopes() {
        let p = Point::new(sym(1), &sym(2) + &SymScalar::from_int(1));
        let q = Point::new(&sym(1) + &sym(3), sym(2));
        let before = slope_between(&p, &q).unwrap();
        let after = slope_between(&p.rotate_pi(), &q.rotate_pi()).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn affine_stretch_maps_basic_slopes() {
        let stretch =
            AffineMap::linear([[rat_int(1), rat_int(0)], [rat_int(0), rat_int(2)]]).unwrap();
        assert_eq!(stretch.map_slope(&Slope::from_int(1)), Slope::from_int(2));
        let image: Vec<Slope> = basic_slopes().iter().map(|s| stretch.map_slope(s)).collect();
        assert_eq!(
            image,
            vec![
                Slope::from_int(0),
                Slope::from_int(2),
                Slope::vertical(),
                Slope::from_int(-2),
            ]
        );
    }

    #[test]
    fn identity_fixes_points() {
        let id = AffineMap::identity();
        let p = Point::new(sym(1), &sym(2) + &SymScalar::from_int(3));
        assert_eq!(id.apply(&p), p);
    }

    #[test]
    fn singular_rejected() {
        assert!(AffineMap::linear([[rat_int(1), rat_int(2)], [rat_int(2), rat_int(4)]]).is_err());
    }

    #[test]
    fn composition_matches_sequential_application() {
        let f = AffineMap::new(
            [[rat_int(2), rat(1, 3)], [rat_int(0), rat_int(1)]],
            (rat_int(5), rat(-1, 2)),
        )
        .unwrap();
        let g = AffineMap::new(
            [[rat_int(1), rat_int(-1)], [rat_int(2), rat_int(3)]],
            (rat_int(0), rat_int(7)),
        )
        .unwrap();
        let p = Point::new(&sym(1) + &SymScalar::from_int(2), sym(4));
        assert_eq!(f.compose(&g).apply(&p), f.apply(&g.apply(&p)));
    }
}
