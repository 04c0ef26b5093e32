//! Numeric realization of symbolic points for rendering.
//!
//! Output-only: no algorithmic decision consumes the resulting floats.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use super::point::Point;
use crate::error::RealizeError;

/// An assignment of real values to basis symbols.
#[derive(Clone, Debug)]
pub struct BasisAssignment {
    values: BTreeMap<u32, f64>,
}

impl BasisAssignment {
    pub fn new(values: BTreeMap<u32, f64>) -> BasisAssignment {
        BasisAssignment { values }
    }

    /// The default assignment: unit symbol to 1, symbol `i` to the square
    /// root of the i-th prime. Square roots of distinct primes are linearly
    /// independent over the rationals, so symbolically distinct values stay
    /// distinct in exact arithmetic.
    pub fn default_for(max_symbol: u32) -> BasisAssignment {
        let mut values = BTreeMap::new();
        values.insert(0, 1.0);
        let primes = first_primes(max_symbol as usize);
        for (i, p) in primes.iter().enumerate() {
            values.insert(i as u32 + 1, (*p as f64).sqrt());
        }
        BasisAssignment { values }
    }

    pub fn value(&self, symbol: u32) -> Option<f64> {
        self.values.get(&symbol).copied()
    }

    fn check_injective(&self, used: &[u32]) -> Result<(), RealizeError> {
        let mut seen: Vec<(f64, u32)> = Vec::new();
        for &id in used {
            let v = self
                .value(id)
                .ok_or(RealizeError::UnassignedSymbol(id))?;
            for &(w, other) in &seen {
                if w == v {
                    return Err(RealizeError::NonInjective(other, id));
                }
            }
            seen.push((v, id));
        }
        Ok(())
    }
}

/// Substitutes reals for symbols in every coordinate.
///
/// Two realized points closer than `min_separation` in either coordinate
/// count as a collision and are reported instead of silently emitted.
pub fn numeric_realize(
    points: &[Point],
    assignment: &BasisAssignment,
    min_separation: f64,
) -> Result<Vec<(f64, f64)>, RealizeError> {
    let mut used: Vec<u32> = points
        .iter()
        .flat_map(|p| p.x.support().chain(p.y.support()))
        .collect();
    used.sort_unstable();
    used.dedup();
    assignment.check_injective(&used)?;

    let mut out = Vec::with_capacity(points.len());
    for p in points {
        out.push((eval(&p.x, assignment)?, eval(&p.y, assignment)?));
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            let (xi, yi) = out[i];
            let (xj, yj) = out[j];
            if (xi - xj).abs() < min_separation && (yi - yj).abs() < min_separation {
                return Err(RealizeError::Collision(i, j));
            }
        }
    }
    Ok(out)
}

fn eval(
    value: &super::scalar::SymScalar,
    assignment: &BasisAssignment,
) -> Result<f64, RealizeError> {
    let mut acc = 0.0;
    for (id, coeff) in value.terms() {
        let base = assignment
            .value(id)
            .ok_or(RealizeError::UnassignedSymbol(id))?;
        let c = coeff
            .to_f64()
            .ok_or(RealizeError::UnassignedSymbol(id))?;
        acc += c * base;
    }
    Ok(acc)
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(count);
    let mut candidate: u64 = 2;
    while primes.len() < count {
        if primes.iter().all(|p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

#[cfg(test)]
mod tests {
    use super::super::scalar::SymScalar;
    use super::*;

    #[test]
    fn unit_only_coordinates_unchanged() {
        let pts = vec![Point::from_ints(3, -2), Point::from_ints(0, 7)];
        let assignment = BasisAssignment::default_for(0);
        let out = numeric_realize(&pts, &assignment, 1e-9).unwrap();
        assert_eq!(out, vec![(3.0, -2.0), (0.0, 7.0)]);
    }

    #[test]
    fn substitutes_sqrt_two_for_first_symbol() {
        let p = Point::new(SymScalar::symbol(1), SymScalar::symbol(1));
        let out = numeric_realize(&[p], &BasisAssignment::default_for(1), 1e-9).unwrap();
        assert!((out[0].0 - 2f64.sqrt()).abs() < 1e-12);
        assert!((out[0].1 - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn collision_reported() {
        let pts = vec![Point::from_ints(1, 1), Point::from_ints(1, 1)];
        let err = numeric_realize(&pts, &BasisAssignment::default_for(0), 1e-9).unwrap_err();
        assert!(matches!(err, RealizeError::Collision(0, 1)));
    }

    #[test]
    fn missing_symbol_reported() {
        let p = Point::new(SymScalar::symbol(5), SymScalar::zero());
        let err = numeric_realize(&[p], &BasisAssignment::default_for(1), 1e-9).unwrap_err();
        assert!(matches!(err, RealizeError::UnassignedSymbol(5)));
    }

    #[test]
    fn prime_table_starts_correctly() {
        assert_eq!(first_primes(5), vec![2, 3, 5, 7, 11]);
    }
}
