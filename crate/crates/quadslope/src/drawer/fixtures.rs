//! Stored reference drawings with integer coordinates for the four named
//! graphs that ship with exact four-slope layouts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Drawing;
use crate::geometry::{Point, SlopeSet};
use crate::graph::Graph;

/// The named reference drawings.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureName {
    Petersen,
    K33,
    Heawood,
    Tietze,
}

impl FixtureName {
    pub fn all() -> [FixtureName; 4] {
        [
            FixtureName::Petersen,
            FixtureName::K33,
            FixtureName::Heawood,
            FixtureName::Tietze,
        ]
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FixtureName::Petersen => "petersen",
            FixtureName::K33 => "k33",
            FixtureName::Heawood => "heawood",
            FixtureName::Tietze => "tietze",
        };
        write!(f, "{name}")
    }
}

impl FromStr for FixtureName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "petersen" => Ok(FixtureName::Petersen),
            "k33" | "k3,3" => Ok(FixtureName::K33),
            "heawood" => Ok(FixtureName::Heawood),
            "tietze" => Ok(FixtureName::Tietze),
            other => Err(format!("unknown fixture name: {other:?}")),
        }
    }
}

struct FixtureData {
    coords: &'static [(i64, i64)],
    edges: &'static [(usize, usize)],
}

// Outer pentagon 0..4, inner pentagram 5..9, all five spokes vertical.
const PETERSEN: FixtureData = FixtureData {
    coords: &[
        (0, 0), (1, 1), (2, 1), (3, 1), (4, 0),
        (0, 2), (1, 5), (2, 2), (3, 5), (4, 2),
    ],
    edges: &[
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (6, 8), (7, 9), (8, 5), (9, 6),
    ],
};

const K33: FixtureData = FixtureData {
    coords: &[(1, 0), (3, 0), (4, 1), (3, 2), (1, 2), (0, 1)],
    edges: &[
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
        (0, 3), (1, 4), (2, 5),
    ],
};

const HEAWOOD: FixtureData = FixtureData {
    coords: &[
        (0, 2), (1, 1), (2, 0), (3, 0), (4, 0), (6, 2), (6, 3),
        (5, 3), (0, 4), (3, 4), (6, 4), (1, 9), (4, 9), (5, 9),
    ],
    edges: &[
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
        (2, 7), (7, 6), (6, 5),
        (8, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 8),
        (0, 8), (1, 11), (3, 9), (4, 12), (6, 10), (7, 13),
    ],
};

const TIETZE: FixtureData = FixtureData {
    coords: &[
        (0, 1), (0, 2), (1, 2), (3, 2), (4, 2), (4, 1),
        (3, 0), (2, 0), (1, 0), (0, 3), (4, 3), (2, 5),
    ],
    edges: &[
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
        (0, 8), (8, 7), (7, 6), (6, 5),
        (9, 10), (10, 11), (11, 9),
        (8, 3), (6, 2), (1, 9), (7, 11), (4, 10),
    ],
};

/// The stored drawing for `name`: exact integer coordinates over the basic
/// slope set.
pub fn fixture_drawing(name: FixtureName) -> Drawing {
    let data = match name {
        FixtureName::Petersen => &PETERSEN,
        FixtureName::K33 => &K33,
        FixtureName::Heawood => &HEAWOOD,
        FixtureName::Tietze => &TIETZE,
    };
    let graph = Graph::simple(data.coords.len(), data.edges).expect("fixture edges are valid");
    let pos = data
        .coords
        .iter()
        .map(|&(x, y)| Point::from_ints(x, y))
        .collect();
    Drawing::new(graph, pos, SlopeSet::basic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{slope_between, Slope};
    use crate::samples;
    use crate::structure::are_isomorphic;

    #[test]
    fn all_fixtures_are_valid_cubic_drawings() {
        for name in FixtureName::all() {
            let d = fixture_drawing(name);
            assert!(d.graph.classify().is_cubic, "{name} graph not cubic");
            let report = d.validity();
            assert!(report.ok(), "{name}: {report}");
        }
    }

    #[test]
    fn fixtures_match_their_named_graphs() {
        assert!(are_isomorphic(
            &fixture_drawing(FixtureName::Petersen).graph,
            &samples::petersen()
        ));
        assert!(are_isomorphic(
            &fixture_drawing(FixtureName::K33).graph,
            &samples::k33()
        ));
        assert!(are_isomorphic(
            &fixture_drawing(FixtureName::Heawood).graph,
            &samples::heawood()
        ));
        assert!(are_isomorphic(
            &fixture_drawing(FixtureName::Tietze).graph,
            &samples::tietze()
        ));
    }

    #[test]
    fn petersen_spokes_are_vertical() {
        let d = fixture_drawing(FixtureName::Petersen);
        for i in 0..5 {
            assert!(d.graph.has_edge(i, 5 + i));
            let s = slope_between(&d.pos[i], &d.pos[5 + i]).unwrap().unwrap();
            assert_eq!(s, Slope::vertical(), "spoke {i} not vertical");
        }
        assert_eq!(d.pos[3], Point::from_ints(3, 1));
        assert_eq!(d.pos[8], Point::from_ints(3, 5));
        assert!(d.graph.classify().is_cubic);
    }

    #[test]
    fn k33_long_chord_is_horizontal() {
        let d = fixture_drawing(FixtureName::K33);
        assert!(d.graph.has_edge(2, 5));
        let s = slope_between(&d.pos[2], &d.pos[5]).unwrap().unwrap();
        assert_eq!(s, Slope::from_int(0));
        assert_eq!(d.pos[2], Point::from_ints(4, 1));
        assert_eq!(d.pos[5], Point::from_ints(0, 1));
    }

    #[test]
    fn tietze_tall_edge_is_vertical() {
        let d = fixture_drawing(FixtureName::Tietze);
        assert!(d.graph.has_edge(7, 11));
        assert_eq!(d.pos[7], Point::from_ints(2, 0));
        assert_eq!(d.pos[11], Point::from_ints(2, 5));
        let s = slope_between(&d.pos[7], &d.pos[11]).unwrap().unwrap();
        assert_eq!(s, Slope::vertical());
    }

    #[test]
    fn names_roundtrip() {
        for name in FixtureName::all() {
            let parsed: FixtureName = name.to_string().parse().unwrap();
            assert_eq!(parsed, name);
        }
        assert!("nope".parse::<FixtureName>().is_err());
    }
}
