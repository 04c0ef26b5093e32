//! Linear systems over symbolic right-hand sides.
//!
//! Unknowns are coordinates; coefficients are rational; constants are affine
//! forms over basis symbols plus free parameters introduced for unsolved
//! unknowns. Gaussian elimination in reduced row-echelon form, smallest
//! unknown first, so solutions are deterministic.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::geometry::{Rat, SymScalar};

pub(crate) type VarId = usize;

/// An affine form: rational combination of basis symbols and free parameters.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct LinExpr {
    sym: BTreeMap<u32, Rat>,
    free: BTreeMap<usize, Rat>,
}

impl LinExpr {
    pub fn zero() -> LinExpr {
        LinExpr::default()
    }

    pub fn from_scalar(value: &SymScalar) -> LinExpr {
        let mut out = LinExpr::default();
        for (id, c) in value.terms() {
            out.sym.insert(id, c.clone());
        }
        out
    }

    pub fn free_param(index: usize) -> LinExpr {
        let mut out = LinExpr::default();
        out.free.insert(index, Rat::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.sym.is_empty() && self.free.is_empty()
    }

    pub fn add_scaled(&mut self, other: &LinExpr, factor: &Rat) {
        if factor.is_zero() {
            return;
        }
        for (&id, c) in &other.sym {
            merge(&mut self.sym, id, c * factor);
        }
        for (&k, c) in &other.free {
            merge(&mut self.free, k, c * factor);
        }
    }

    pub fn sub(&self, other: &LinExpr) -> LinExpr {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::one());
        out
    }

    pub fn add(&self, other: &LinExpr) -> LinExpr {
        let mut out = self.clone();
        out.add_scaled(other, &Rat::one());
        out
    }

    pub fn scale(&self, factor: &Rat) -> LinExpr {
        let mut out = LinExpr::default();
        out.add_scaled(self, factor);
        out
    }

    /// Highest free parameter with nonzero coefficient.
    pub fn dominant_free(&self) -> Option<(usize, &Rat)> {
        self.free.iter().next_back().map(|(&k, c)| (k, c))
    }

    /// Highest basis symbol with nonzero coefficient.
    pub fn dominant_sym(&self) -> Option<(u32, &Rat)> {
        self.sym.iter().next_back().map(|(&id, c)| (id, c))
    }

    /// Sign of the instantiated value: free parameters become fresh symbols
    /// above every basis symbol (ordered by index), with per-parameter signs.
    pub fn sign_under(&self, signs: &dyn Fn(usize) -> bool) -> std::cmp::Ordering {
        if let Some((k, c)) = self.dominant_free() {
            let positive = c.is_positive() == signs(k);
            return if positive {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Less
            };
        }
        if let Some((_, c)) = self.dominant_sym() {
            return if c.is_positive() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Less
            };
        }
        std::cmp::Ordering::Equal
    }

    /// Substitutes symbols for free parameters: parameter `k` becomes
    /// `±symbol(fresh_base + k)`.
    pub fn instantiate(&self, fresh_base: u32, signs: &dyn Fn(usize) -> bool) -> SymScalar {
        let mut out = SymScalar::zero();
        for (&id, c) in &self.sym {
            let term = SymScalar::symbol(id).scale(c);
            out = &out + &term;
        }
        for (&k, c) in &self.free {
            let id = fresh_base + k as u32;
            let coeff = if signs(k) { c.clone() } else { -c.clone() };
            let term = SymScalar::symbol(id).scale(&coeff);
            out = &out + &term;
        }
        out
    }
}

fn merge<K: Ord>(map: &mut BTreeMap<K, Rat>, key: K, delta: Rat) {
    if delta.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(delta);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &delta;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// One linear equation: `sum(coeff * var) = rhs`.
#[derive(Clone, Debug)]
pub(crate) struct Equation {
    pub coeffs: Vec<(VarId, Rat)>,
    pub rhs: LinExpr,
}

impl Equation {
    /// `var = value`.
    pub fn pin(var: VarId, value: &SymScalar) -> Equation {
        Equation {
            coeffs: vec![(var, Rat::one())],
            rhs: LinExpr::from_scalar(value),
        }
    }

    /// `sum(coeff * var) = 0`.
    pub fn homogeneous(coeffs: Vec<(VarId, Rat)>) -> Equation {
        Equation {
            coeffs,
            rhs: LinExpr::zero(),
        }
    }
}

/// Solved system: every unknown expressed over free parameters and symbols.
pub(crate) struct Solution {
    pub values: Vec<LinExpr>,
    pub free_count: usize,
}

/// Solves by reduced row echelon over the rationals.
///
/// Returns `None` on inconsistency. Unsolved unknowns receive free
/// parameters in ascending unknown order, so the outcome is deterministic.
pub(crate) fn solve(n_vars: usize, equations: &[Equation]) -> Option<Solution> {
    struct Row {
        pivot: VarId,
        coeffs: BTreeMap<VarId, Rat>,
        rhs: LinExpr,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut pivot_row: Vec<Option<usize>> = vec![None; n_vars];

    for eq in equations {
        let mut coeffs: BTreeMap<VarId, Rat> = BTreeMap::new();
        for (var, c) in &eq.coeffs {
            merge(&mut coeffs, *var, c.clone());
        }
        let mut rhs = eq.rhs.clone();
        // Reduce by existing pivots until none of the equation's variables
        // is a pivot. Stored rows hold only their pivot plus free variables,
        // so each elimination strictly shrinks the pivot support.
        loop {
            let Some(&var) = coeffs.keys().find(|&&v| pivot_row[v].is_some()) else {
                break;
            };
            let row_idx = pivot_row[var].expect("just checked");
            let factor = coeffs.remove(&var).expect("present");
            let row_coeffs = rows[row_idx].coeffs.clone();
            for (&v2, c2) in &row_coeffs {
                merge(&mut coeffs, v2, -(c2 * &factor));
            }
            let row_rhs = rows[row_idx].rhs.clone();
            rhs.add_scaled(&row_rhs, &-factor);
        }
        let Some((&pivot, _)) = coeffs.iter().next() else {
            if rhs.is_zero() {
                continue; // redundant equation
            }
            return None; // 0 = nonzero
        };
        // Normalize so the pivot coefficient is one.
        let lead = coeffs.remove(&pivot).expect("present");
        let inv = Rat::one() / lead;
        let mut norm_coeffs = BTreeMap::new();
        for (v, c) in coeffs {
            norm_coeffs.insert(v, c * &inv);
        }
        let norm_rhs = rhs.scale(&inv);
        // Eliminate the new pivot from all existing rows.
        for row in rows.iter_mut() {
            if let Some(factor) = row.coeffs.remove(&pivot) {
                for (&v2, c2) in &norm_coeffs {
                    merge(&mut row.coeffs, v2, -(c2 * &factor));
                }
                row.rhs.add_scaled(&norm_rhs, &-factor);
            }
        }
        pivot_row[pivot] = Some(rows.len());
        rows.push(Row {
            pivot,
            coeffs: norm_coeffs,
            rhs: norm_rhs,
        });
    }

    // Free parameters for unsolved unknowns, ascending.
    let mut free_index: Vec<Option<usize>> = vec![None; n_vars];
    let mut free_count = 0usize;
    for var in 0..n_vars {
        if pivot_row[var].is_none() {
            free_index[var] = Some(free_count);
            free_count += 1;
        }
    }
    let mut values: Vec<LinExpr> = (0..n_vars)
        .map(|var| match free_index[var] {
            Some(k) => LinExpr::free_param(k),
            None => LinExpr::zero(),
        })
        .collect();
    for row in &rows {
        let mut value = row.rhs.clone();
        for (&var, c) in &row.coeffs {
            let k = free_index[var].expect("non-pivot columns are free");
            value.add_scaled(&LinExpr::free_param(k), &-c.clone());
        }
        values[row.pivot] = value;
    }
    Some(Solution { values, free_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat_int;

    fn sym(id: u32) -> SymScalar {
        SymScalar::symbol(id)
    }

    #[test]
    fn pinned_chain_solves() {
        // x0 = s1; x1 - x0 = 0  =>  x1 = s1.
        let eqs = vec![
            Equation::pin(0, &sym(1)),
            Equation::homogeneous(vec![(1, rat_int(1)), (0, rat_int(-1))]),
        ];
        let sol = solve(2, &eqs).unwrap();
        assert_eq!(sol.free_count, 0);
        assert_eq!(sol.values[1], LinExpr::from_scalar(&sym(1)));
    }

    #[test]
    fn inconsistent_detected() {
        // x0 = s1; x0 = s2.
        let eqs = vec![Equation::pin(0, &sym(1)), Equation::pin(0, &sym(2))];
        assert!(solve(1, &eqs).is_none());
    }

    #[test]
    fn redundancy_tolerated() {
        let eqs = vec![
            Equation::pin(0, &sym(1)),
            Equation::pin(0, &sym(1)),
            Equation::homogeneous(vec![(0, rat_int(2)), (1, rat_int(-2))]),
        ];
        let sol = solve(2, &eqs).unwrap();
        assert_eq!(sol.free_count, 0);
        assert_eq!(sol.values[1], LinExpr::from_scalar(&sym(1)));
    }

    #[test]
    fn free_parameters_for_unsolved() {
        // Single equation x0 - x1 = 0 over three unknowns: x2 free, x1 free.
        let eqs = vec![Equation::homogeneous(vec![(0, rat_int(1)), (1, rat_int(-1))])];
        let sol = solve(3, &eqs).unwrap();
        assert_eq!(sol.free_count, 2);
        assert_eq!(sol.values[0], sol.values[1]);
        assert_ne!(sol.values[0], sol.values[2]);
    }

    #[test]
    fn instantiation_respects_signs() {
        let eqs: Vec<Equation> = Vec::new();
        let sol = solve(1, &eqs).unwrap();
        let plus = sol.values[0].instantiate(10, &|_| true);
        let minus = sol.values[0].instantiate(10, &|_| false);
        assert_eq!(plus, SymScalar::symbol(10));
        assert_eq!(minus, -&SymScalar::symbol(10));
        assert_eq!(sol.values[0].sign_under(&|_| true), std::cmp::Ordering::Greater);
        assert_eq!(sol.values[0].sign_under(&|_| false), std::cmp::Ordering::Less);
    }

    #[test]
    fn forms_difference_and_zero() {
        let a = LinExpr::from_scalar(&sym(1)).add(&LinExpr::free_param(0));
        let b = LinExpr::from_scalar(&sym(1)).add(&LinExpr::free_param(0));
        assert!(a.sub(&b).is_zero());
    }
}
