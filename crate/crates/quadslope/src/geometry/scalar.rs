//! Exact scalars over a formal ordered basis.
//!
//! A [`SymScalar`] is a finite rational linear combination of basis symbols.
//! Symbol 0 is the rational unit; symbols with higher ids dominate lower ones
//! in the total order, so a fresh high-id symbol behaves like an infinitely
//! large generic quantity. All predicates downstream (slope membership,
//! North/Northwest, betweenness) are linear, which is what makes this model
//! sound as a stand-in for reals that are linearly independent over the
//! rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The basis symbol reserved for the rational unit constant.
pub const UNIT_SYMBOL: u32 = 0;

/// `p` as a [`Rat`].
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// `p/q` as a [`Rat`]. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a rational as `p` or `p/q` (canonical, `q > 0`).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rat::new(p, q))
}

/// A rational linear combination over the formal symbol basis.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SymScalar {
    coeffs: BTreeMap<u32, Rat>,
}

impl SymScalar {
    pub fn zero() -> Self {
        SymScalar::default()
    }

    /// A pure rational value (coefficient on the unit symbol).
    pub fn from_rat(r: Rat) -> Self {
        let mut s = SymScalar::default();
        s.add_term(UNIT_SYMBOL, r);
        s
    }

    pub fn from_int(p: i64) -> Self {
        SymScalar::from_rat(rat_int(p))
    }

    /// The basis symbol `id` with coefficient one.
    pub fn symbol(id: u32) -> Self {
        let mut s = SymScalar::default();
        s.add_term(id, Rat::one());
        s
    }

    /// `±1 · symbol(id)`.
    pub fn signed_symbol(id: u32, negative: bool) -> Self {
        let mut s = SymScalar::symbol(id);
        if negative {
            s = -&s;
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when the value lies in the rational line (unit symbol only).
    pub fn is_rational(&self) -> bool {
        self.coeffs.keys().all(|&id| id == UNIT_SYMBOL)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeff(UNIT_SYMBOL))
        } else {
            None
        }
    }

    /// Coefficient of `id` (zero when absent).
    pub fn coeff(&self, id: u32) -> Rat {
        self.coeffs.get(&id).cloned().unwrap_or_else(Rat::zero)
    }

    /// Symbols with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(&id, c)| (id, c))
    }

    /// Highest symbol id in the support.
    pub fn max_symbol(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, id: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(id) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Rational multiple of the value.
    pub fn scale(&self, q: &Rat) -> SymScalar {
        if q.is_zero() {
            return SymScalar::zero();
        }
        let mut out = SymScalar::default();
        for (&id, c) in &self.coeffs {
            out.coeffs.insert(id, c * q);
        }
        out
    }

    /// Sign under the lexicographic order: decided by the coefficient of the
    /// highest symbol (higher-id symbols dominate all lower ones).
    pub fn sign(&self) -> Ordering {
        match self.coeffs.iter().next_back() {
            None => Ordering::Equal,
            Some((_, c)) => {
                if c.is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// If `self = q · other` for a rational `q` (with `other ≠ 0`), returns `q`.
    pub fn try_ratio(&self, other: &SymScalar) -> Option<Rat> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Rat::zero());
        }
        let (&pivot_id, pivot_c) = other.coeffs.iter().next()?;
        let own = self.coeffs.get(&pivot_id)?;
        let q = own / pivot_c;
        if &other.scale(&q) == self {
            Some(q)
        } else {
            None
        }
    }
}

impl std::ops::Add<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn add(self, rhs: &SymScalar) -> SymScalar {
        let mut out = self.clone();
        for (&id, c) in &rhs.coeffs {
            out.add_term(id, c.clone());
        }
        out
    }
}

impl std::ops::Sub<&SymScalar> for &SymScalar {
    type Output = SymScalar;
    fn sub(self, rhs: &SymScalar) -> SymScalar {
        let mut out = self.clone();
        for (&id, c) in &rhs.coeffs {
            out.add_term(id, -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &SymScalar {
    type Output = SymScalar;
    fn neg(self) -> SymScalar {
        let mut out = SymScalar::default();
        for (&id, c) in &self.coeffs {
            out.coeffs.insert(id, -c.clone());
        }
        out
    }
}

impl PartialOrd for SymScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl fmt::Debug for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&id, c) in &self.coeffs {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if id == UNIT_SYMBOL {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "s{id}")?;
            } else {
                write!(f, "{}*s{id}", rat_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

// Serialized form: a map from symbol id (as a string key) to "p/q".
impl Serialize for SymScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (&id, c) in &self.coeffs {
            map.serialize_entry(&id.to_string(), &rat_to_string(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SymScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(deserializer)?;
        let mut out = SymScalar::default();
        for (key, val) in raw {
            let id: u32 = key
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid symbol id {key:?}")))?;
            let c = rat_from_str(&val).map_err(D::Error::custom)?;
            out.add_term(id, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(id: u32) -> SymScalar {
        SymScalar::symbol(id)
    }

    #[test]
    fn high_symbol_dominates_unit() {
        // 3·s1 vs 2·s1 + 100: s1 dominates the unit.
        let a = s(1).scale(&rat_int(3));
        let b = &s(1).scale(&rat_int(2)) + &SymScalar::from_int(100);
        assert!(a > b);
    }

    #[test]
    fn add_sub_roundtrip() {
        let a = &s(1).scale(&rat(1, 2)) + &SymScalar::from_int(7);
        let b = &s(2) + &s(1);
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn scale_distributes() {
        let v = &s(1) + &s(2);
        let half = v.scale(&rat(1, 2));
        assert_eq!(&half + &half, v);
    }

    #[test]
    fn zero_iff_all_coefficients_zero() {
        let v = &s(3) - &s(3);
        assert!(v.is_zero());
        assert_eq!(v, SymScalar::zero());
        assert!(!(&s(3) - &s(2)).is_zero());
    }

    #[test]
    fn ratio_detects_proportionality() {
        let v = &s(1) + &s(2).scale(&rat_int(2));
        let w = v.scale(&rat(3, 4));
        assert_eq!(w.try_ratio(&v), Some(rat(3, 4)));
        assert_eq!(v.try_ratio(&v), Some(rat_int(1)));
        assert_eq!(s(1).try_ratio(&s(2)), None);
        assert_eq!(SymScalar::zero().try_ratio(&s(1)), Some(Rat::zero()));
        assert_eq!(s(1).try_ratio(&SymScalar::zero()), None);
    }

    #[test]
    fn rational_string_roundtrip() {
        for r in [rat(3, 2), rat_int(-4), rat(-7, 3), Rat::zero()] {
            assert_eq!(rat_from_str(&rat_to_string(&r)).unwrap(), r);
        }
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let v = &s(4).scale(&rat(-5, 3)) + &SymScalar::from_int(2);
        let json = serde_json::to_string(&v).unwrap();
        let back: SymScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
