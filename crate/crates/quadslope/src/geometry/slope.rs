//! Slopes as homogeneous rational directions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{rat_from_str, Rat};
use crate::error::GeometryError;

/// A slope as a canonical homogeneous pair `(dy : dx)`.
///
/// Canonical form: `gcd(|dy|, |dx|) = 1` and `dx > 0`, with the vertical
/// direction represented as `(1 : 0)`. Equal slopes compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    dy: BigInt,
    dx: BigInt,
}

// Serialized as the display string: `inf`, `p`, or `p/q`.
impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl Slope {
    /// Builds the canonical slope of direction `(dx, dy)`.
    ///
    /// Returns an error on the null direction `(0, 0)`.
    pub fn from_direction(dx: BigInt, dy: BigInt) -> Result<Slope, GeometryError> {
        if dx.is_zero() && dy.is_zero() {
            return Err(GeometryError::NullDirection);
        }
        if dx.is_zero() {
            return Ok(Slope {
                dy: BigInt::from(1),
                dx: BigInt::from(0),
            });
        }
        let g = dx.gcd(&dy);
        let (mut dx, mut dy) = (dx / &g, dy / &g);
        if dx.is_negative() {
            dx = -dx;
            dy = -dy;
        }
        Ok(Slope { dy, dx })
    }

    /// The slope of rational value `r` (i.e. `dy/dx = r`).
    pub fn from_rat(r: &Rat) -> Slope {
        Slope::from_direction(r.denom().clone(), r.numer().clone())
            .expect("rational denominators are nonzero")
    }

    pub fn from_int(v: i64) -> Slope {
        Slope::from_rat(&Rat::from_integer(BigInt::from(v)))
    }

    pub fn vertical() -> Slope {
        Slope {
            dy: BigInt::from(1),
            dx: BigInt::from(0),
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.dx.is_zero()
    }

    /// The value `dy/dx` when the slope is not vertical.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_vertical() {
            None
        } else {
            Some(Rat::new(self.dy.clone(), self.dx.clone()))
        }
    }

    /// Canonical direction components `(dx, dy)`.
    pub fn direction(&self) -> (&BigInt, &BigInt) {
        (&self.dx, &self.dy)
    }

    /// `dx` as an exact rational.
    pub fn dx_rat(&self) -> Rat {
        Rat::from_integer(self.dx.clone())
    }

    /// `dy` as an exact rational.
    pub fn dy_rat(&self) -> Rat {
        Rat::from_integer(self.dy.clone())
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_vertical() {
            write!(f, "inf")
        } else if self.dx == BigInt::from(1) {
            write!(f, "{}", self.dy)
        } else {
            write!(f, "{}/{}", self.dy, self.dx)
        }
    }
}

impl FromStr for Slope {
    type Err = GeometryError;

    /// Parses `inf` (vertical) or a rational `p` / `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Slope::vertical());
        }
        let r = rat_from_str(s).map_err(GeometryError::SlopeSyntax)?;
        Ok(Slope::from_rat(&r))
    }
}

/// The four basic slopes `{0, π/4, π/2, 3π/4}` as directions
/// `(0:1), (1:1), (1:0), (−1:1)`.
pub fn basic_slopes() -> [Slope; 4] {
    [
        Slope::from_int(0),
        Slope::from_int(1),
        Slope::vertical(),
        Slope::from_int(-1),
    ]
}

/// A set of pairwise-distinct slopes.
///
/// Drawings are verified against slope sets of any size; the four-slope
/// goodness deciders additionally require exactly four members.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct SlopeSet {
    slopes: Vec<Slope>,
}

impl<'de> Deserialize<'de> for SlopeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let slopes = Vec::<Slope>::deserialize(deserializer)?;
        SlopeSet::new(slopes).map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl SlopeSet {
    /// Builds a set from the given slopes, rejecting duplicates and emptiness.
    pub fn new(slopes: Vec<Slope>) -> Result<SlopeSet, GeometryError> {
        if slopes.is_empty() {
            return Err(GeometryError::EmptySlopeSet);
        }
        let mut sorted = slopes;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GeometryError::DuplicateSlope(pair[0].clone()));
            }
        }
        Ok(SlopeSet { slopes: sorted })
    }

    /// The four basic slopes.
    pub fn basic() -> SlopeSet {
        SlopeSet::new(basic_slopes().to_vec()).expect("basic slopes are distinct")
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn contains(&self, s: &Slope) -> bool {
        self.slopes.binary_search(s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Slope> {
        self.slopes.iter()
    }

    pub fn as_slice(&self) -> &[Slope] {
        &self.slopes
    }
}

impl fmt::Display for SlopeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slopes.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SlopeSet {
    type Err = GeometryError;

    /// Parses `basic` or a comma-separated slope list such as `0,1,inf,-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("basic") {
            return Ok(SlopeSet::basic());
        }
        let slopes = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Slope>, _>>()?;
        SlopeSet::new(slopes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(
            Slope::from_direction(BigInt::from(-2), BigInt::from(2)).unwrap(),
            Slope::from_int(-1)
        );
        assert_eq!(
            Slope::from_direction(BigInt::from(4), BigInt::from(6)).unwrap(),
            Slope::from_rat(&super::super::scalar::rat(3, 2))
        );
        assert_eq!(
            Slope::from_direction(BigInt::from(0), BigInt::from(-3)).unwrap(),
            Slope::vertical()
        );
        assert!(Slope::from_direction(BigInt::from(0), BigInt::from(0)).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<Slope>().unwrap(), Slope::vertical());
        assert_eq!("-1".parse::<Slope>().unwrap(), Slope::from_int(-1));
        assert_eq!(
            "3/2".parse::<Slope>().unwrap().to_string(),
            "3/2".to_string()
        );
        assert_eq!(Slope::vertical().to_string(), "inf");
        assert!("oops".parse::<Slope>().is_err());
    }

    #[test]
    fn slope_set_membership() {
        let basic = SlopeSet::basic();
        assert_eq!(basic.len(), 4);
        assert!(basic.contains(&Slope::vertical()));
        assert!(!basic.contains(&Slope::from_int(2)));
        assert!(SlopeSet::new(vec![Slope::from_int(0), Slope::from_int(0)]).is_err());
        assert!(SlopeSet::new(vec![]).is_err());
    }
}
