//! Constraint search for one connected component.
//!
//! Assigns one of the four basic slopes to every edge with per-vertex
//! all-different propagation, derives the linear constraints on symbolic
//! coordinates, solves them with free parameters instantiated as fresh
//! dominant symbols, and checks the full placement contract exactly,
//! backtracking on failure. Free-parameter signs are repaired greedily:
//! every violated strict inequality is decided by the highest fresh symbol
//! it involves, so flipping that symbol's sign either fixes the constraint
//! or proves the slope assignment infeasible.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::DrawError;
use crate::geometry::{rat_int, Point, Rat, SymScalar};
use crate::graph::Graph;

use super::linsys::{solve, Equation, LinExpr, Solution};

/// Directions of the four basic slopes as `(dx, dy)`:
/// horizontal, diagonal, vertical, antidiagonal.
const DIRECTIONS: [(i64, i64); 4] = [(1, 0), (1, 1), (0, 1), (1, -1)];

pub(crate) struct ComponentProblem<'a> {
    pub graph: &'a Graph,
    /// Prescribed x-coordinates (signed symbols) for low-degree vertices.
    pub pins: BTreeMap<usize, SymScalar>,
    /// First symbol id available for free parameters; must exceed every
    /// pin symbol so fresh values dominate.
    pub fresh_base: u32,
    pub seed: u64,
}

pub(crate) struct ComponentDrawing {
    pub points: Vec<Point>,
    pub next_symbol: u32,
}

pub(crate) fn draw_component(
    problem: &ComponentProblem,
    budget: &mut u64,
) -> Result<ComponentDrawing, DrawError> {
    let g = problem.graph;
    let order = edge_order(g);
    let closure = closure_flags(g.n(), &order);

    let mut base_equations: Vec<Equation> = Vec::new();
    for (&v, value) in &problem.pins {
        base_equations.push(Equation::pin(2 * v, value));
    }

    let mut state = SearchState {
        graph: g,
        order: &order,
        closure: &closure,
        equations: base_equations,
        used: vec![0u8; g.n()],
        slopes: vec![usize::MAX; order.len()],
        budget,
        seed: problem.seed,
        fresh_base: problem.fresh_base,
        protected_north: (0..g.n()).filter(|&v| g.degree(v) == 2).collect(),
        protected_full: (0..g.n()).filter(|&v| g.degree(v) <= 1).collect(),
    };
    match state.assign(0)? {
        Some(result) => Ok(result),
        None => Err(DrawError::SearchExhausted),
    }
}

struct SearchState<'a> {
    graph: &'a Graph,
    order: &'a [(usize, usize)],
    closure: &'a [bool],
    equations: Vec<Equation>,
    used: Vec<u8>,
    slopes: Vec<usize>,
    budget: &'a mut u64,
    seed: u64,
    fresh_base: u32,
    protected_north: Vec<usize>,
    protected_full: Vec<usize>,
}

impl SearchState<'_> {
    fn assign(&mut self, idx: usize) -> Result<Option<ComponentDrawing>, DrawError> {
        if idx == self.order.len() {
            return self.finalize();
        }
        let (u, v) = self.order[idx];
        let rotation = (self.seed as usize).wrapping_add(idx) % 4;
        for step in 0..4usize {
            let slope = (rotation + step) % 4;
            let bit = 1u8 << slope;
            if self.used[u] & bit != 0 || self.used[v] & bit != 0 {
                continue;
            }
            if *self.budget == 0 {
                return Err(DrawError::BudgetExhausted { budget: 0 });
            }
            *self.budget -= 1;

            self.equations.push(edge_equation(u, v, slope));
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.slopes[idx] = slope;

            let viable = if self.closure[idx] {
                self.closure_check(idx)
            } else {
                true
            };
            if viable {
                if let Some(found) = self.assign(idx + 1)? {
                    return Ok(Some(found));
                }
            }

            self.equations.pop();
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.slopes[idx] = usize::MAX;
        }
        Ok(None)
    }

    /// After a cycle closes: the partial system must stay consistent and
    /// must not force two placed vertices onto the same point.
    fn closure_check(&self, upto: usize) -> bool {
        let Some(sol) = solve(2 * self.graph.n(), &self.equations) else {
            return false;
        };
        let mut touched: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.graph.n()];
        for &(u, v) in &self.order[..=upto] {
            for w in [u, v] {
                if !seen[w] {
                    seen[w] = true;
                    touched.push(w);
                }
            }
        }
        for i in 0..touched.len() {
            for j in i + 1..touched.len() {
                let (p, q) = (touched[i], touched[j]);
                if sol.values[2 * p].sub(&sol.values[2 * q]).is_zero()
                    && sol.values[2 * p + 1].sub(&sol.values[2 * q + 1]).is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    fn finalize(&mut self) -> Result<Option<ComponentDrawing>, DrawError> {
        if *self.budget == 0 {
            return Err(DrawError::BudgetExhausted { budget: 0 });
        }
        *self.budget -= 1;
        let Some(sol) = solve(2 * self.graph.n(), &self.equations) else {
            return Ok(None);
        };
        let Some(constraints) = self.collect_constraints(&sol) else {
            return Ok(None);
        };
        let Some(signs) = resolve_signs(&constraints, sol.free_count) else {
            return Ok(None);
        };
        let lookup = |k: usize| signs.get(&k).copied().unwrap_or(true);
        let points: Vec<Point> = (0..self.graph.n())
            .map(|v| {
                Point::new(
                    sol.values[2 * v].instantiate(self.fresh_base, &lookup),
                    sol.values[2 * v + 1].instantiate(self.fresh_base, &lookup),
                )
            })
            .collect();
        Ok(Some(ComponentDrawing {
            points,
            next_symbol: self.fresh_base + sol.free_count as u32,
        }))
    }

    /// Builds the sign-dependent constraint set, or `None` when the
    /// assignment is structurally dead (coincident points).
    fn collect_constraints(&self, sol: &Solution) -> Option<Constraints> {
        let n = self.graph.n();
        let x = |v: usize| &sol.values[2 * v];
        let y = |v: usize| &sol.values[2 * v + 1];

        // Pairwise distinctness is sign-independent: a nonzero form never
        // instantiates to zero.
        for p in 0..n {
            for q in p + 1..n {
                if x(p).sub(x(q)).is_zero() && y(p).sub(y(q)).is_zero() {
                    return None;
                }
            }
        }

        let mut must_be_negative: Vec<LinExpr> = Vec::new();
        for &v in &self.protected_north {
            for w in 0..n {
                if w != v && x(w).sub(x(v)).is_zero() {
                    must_be_negative.push(y(w).sub(y(v)));
                }
            }
        }
        for &v in &self.protected_full {
            for w in 0..n {
                if w == v {
                    continue;
                }
                if x(w).sub(x(v)).is_zero() {
                    must_be_negative.push(y(w).sub(y(v)));
                }
                let sum_w = x(w).add(y(w));
                let sum_v = x(v).add(y(v));
                if sum_w.sub(&sum_v).is_zero() {
                    must_be_negative.push(y(w).sub(y(v)));
                }
            }
        }

        let mut not_between: Vec<(LinExpr, LinExpr)> = Vec::new();
        for (idx, &(u, v)) in self.order.iter().enumerate() {
            let (dx, dy) = DIRECTIONS[self.slopes[idx]];
            let (dx, dy) = (rat_int(dx), rat_int(dy));
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                let rel_x = x(w).sub(x(u));
                let rel_y = y(w).sub(y(u));
                let cross = rel_x.scale(&dy).sub(&rel_y.scale(&dx));
                if !cross.is_zero() {
                    continue;
                }
                let along = |fx: &LinExpr, fy: &LinExpr| -> LinExpr {
                    if dx != rat_int(0) {
                        fx.scale(&(Rat::from_integer(1.into()) / &dx))
                    } else {
                        fy.scale(&(Rat::from_integer(1.into()) / &dy))
                    }
                };
                let b = along(&rel_x, &rel_y);
                let a = along(&x(v).sub(x(u)), &y(v).sub(y(u)));
                not_between.push((b, a));
            }
        }

        Some(Constraints {
            must_be_negative,
            not_between,
        })
    }
}

struct Constraints {
    must_be_negative: Vec<LinExpr>,
    not_between: Vec<(LinExpr, LinExpr)>,
}

/// Greedy sign resolution: sweeps all constraints, forcing one fresh-symbol
/// sign per violation. Each sweep either finishes clean, forces a new sign,
/// or proves the assignment infeasible.
fn resolve_signs(constraints: &Constraints, free_count: usize) -> Option<BTreeMap<usize, bool>> {
    let mut forced: BTreeMap<usize, bool> = BTreeMap::new();
    for _ in 0..=free_count + 1 {
        match sweep(constraints, &forced) {
            Sweep::Clean => return Some(forced),
            Sweep::Force(k, sign) => {
                forced.insert(k, sign);
            }
            Sweep::Fail => return None,
        }
    }
    None
}

enum Sweep {
    Clean,
    Force(usize, bool),
    Fail,
}

fn sweep(constraints: &Constraints, forced: &BTreeMap<usize, bool>) -> Sweep {
    let signs = |k: usize| forced.get(&k).copied().unwrap_or(true);
    for form in &constraints.must_be_negative {
        match form.sign_under(&signs) {
            Ordering::Less => {}
            Ordering::Equal => return Sweep::Fail,
            Ordering::Greater => {
                let Some((k, c)) = form.dominant_free() else {
                    return Sweep::Fail; // decided by pins alone: structural
                };
                if forced.contains_key(&k) {
                    return Sweep::Fail;
                }
                use num_traits::Signed;
                return Sweep::Force(k, c.is_negative());
            }
        }
    }
    for (b, a) in &constraints.not_between {
        let sb = b.sign_under(&signs);
        let sa = a.sign_under(&signs);
        let diff = a.sub(b);
        let sd = diff.sign_under(&signs);
        let between = sb == sa && sd == sa && sb != Ordering::Equal;
        if !between {
            continue;
        }
        // Make b land outside (0, a): flip the dominant fresh sign of b,
        // or of a - b.
        let want_positive = sa == Ordering::Less;
        for form in [b, &diff] {
            if let Some((k, c)) = form.dominant_free() {
                if !forced.contains_key(&k) {
                    use num_traits::Signed;
                    return Sweep::Force(k, c.is_positive() == want_positive);
                }
            }
        }
        return Sweep::Fail;
    }
    Sweep::Clean
}

/// One equation per edge: the displacement must be parallel to the chosen
/// direction, i.e. `dy * (x_v - x_u) - dx * (y_v - y_u) = 0`.
fn edge_equation(u: usize, v: usize, slope: usize) -> Equation {
    let (dx, dy) = DIRECTIONS[slope];
    let mut coeffs = Vec::new();
    if dy != 0 {
        coeffs.push((2 * v, rat_int(dy)));
        coeffs.push((2 * u, rat_int(-dy)));
    }
    if dx != 0 {
        coeffs.push((2 * v + 1, rat_int(-dx)));
        coeffs.push((2 * u + 1, rat_int(dx)));
    }
    Equation::homogeneous(coeffs)
}

/// Depth-first edge order: tree edges on discovery, closing edges as soon
/// as both endpoints are known, so cycles constrain the search early.
fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut order = Vec::with_capacity(g.edge_count());
    let mut emitted = std::collections::HashSet::new();
    let mut visited = vec![false; n];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if visited[w] {
                    if emitted.insert((u.min(w), u.max(w))) {
                        order.push((u, w));
                    }
                } else {
                    visited[w] = true;
                    emitted.insert((u.min(w), u.max(w)));
                    order.push((u, w));
                    stack.push(w);
                }
            }
        }
    }
    order
}

/// `closure[i]` is true when both endpoints of edge `i` already occur among
/// earlier edges, so assigning it closes a cycle.
fn closure_flags(n: usize, order: &[(usize, usize)]) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut flags = Vec::with_capacity(order.len());
    for &(u, v) in order {
        flags.push(seen[u] && seen[v]);
        seen[u] = true;
        seen[v] = true;
    }
    flags
}
