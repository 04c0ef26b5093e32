//! Drawing connected subcubic components with the four basic slopes under
//! prescribed x-coordinates, verifying the full placement contract, and the
//! stored figure drawings.

mod fixtures;
mod linsys;
mod search;

pub use fixtures::{fixture_drawing, FixtureName};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DrawError;
use crate::geometry::{
    directional_relation, Direction, Point, SlopeSet, SymScalar, UNIT_SYMBOL,
};
use crate::graph::{Graph, VertexSet};
use crate::verify::{check_drawing, DrawingReport, DrawingViolation};

/// A straight-line drawing: a graph, one point per vertex, and the slope
/// set it claims to use.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Drawing {
    pub graph: Graph,
    pub pos: Vec<Point>,
    pub slope_set: SlopeSet,
}

impl Drawing {
    pub fn new(graph: Graph, pos: Vec<Point>, slope_set: SlopeSet) -> Drawing {
        Drawing {
            graph,
            pos,
            slope_set,
        }
    }

    /// Highest basis symbol used anywhere in the drawing.
    pub fn max_symbol(&self) -> u32 {
        self.pos
            .iter()
            .filter_map(Point::max_symbol)
            .max()
            .unwrap_or(UNIT_SYMBOL)
    }

    /// Validity of this drawing against its own slope set.
    pub fn validity(&self) -> DrawingReport {
        check_drawing(&self.graph, &self.pos, &self.slope_set)
    }
}

/// A prescribed x-coordinate: a basis symbol with a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SignedSymbol {
    pub id: u32,
    pub negative: bool,
}

impl SignedSymbol {
    pub fn value(&self) -> SymScalar {
        SymScalar::signed_symbol(self.id, self.negative)
    }
}

/// Assignment of signed basis symbols to the low-degree vertices.
///
/// Prescribed values must be pairwise distinct (two vertices may share a
/// symbol only with opposite signs) and never use the unit symbol.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct XAssignment {
    entries: BTreeMap<usize, SignedSymbol>,
}

impl XAssignment {
    pub fn new() -> XAssignment {
        XAssignment::default()
    }

    pub fn assign(&mut self, vertex: usize, id: u32, negative: bool) -> Result<(), DrawError> {
        if id == UNIT_SYMBOL {
            return Err(DrawError::UnitSymbolAssignment);
        }
        if self
            .entries
            .iter()
            .any(|(&v, s)| s.id == id && s.negative == negative && v != vertex)
        {
            return Err(DrawError::DuplicateAssignmentSymbol(id));
        }
        self.entries.insert(vertex, SignedSymbol { id, negative });
        Ok(())
    }

    pub fn get(&self, vertex: usize) -> Option<SignedSymbol> {
        self.entries.get(&vertex).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, SignedSymbol)> + '_ {
        self.entries.iter().map(|(&v, &s)| (v, s))
    }

    pub fn max_symbol(&self) -> u32 {
        self.entries
            .values()
            .map(|s| s.id)
            .max()
            .unwrap_or(UNIT_SYMBOL)
    }

    /// Restriction to a vertex subset, relabeled through `to_local`.
    fn restrict(&self, to_parent: &[usize]) -> XAssignment {
        let mut out = XAssignment::new();
        for (local, &parent) in to_parent.iter().enumerate() {
            if let Some(s) = self.entries.get(&parent) {
                out.entries.insert(local, *s);
            }
        }
        out
    }
}

/// Drawer configuration.
#[derive(Clone, Copy, Debug)]
pub struct DrawConfig {
    /// Search node budget per call; exhausting it is a hard error.
    pub budget: u64,
    /// Seed steering slope try-order; output is deterministic per seed.
    pub seed: u64,
    /// First basis symbol id available for fresh free parameters. Raised
    /// automatically above every assignment symbol.
    pub fresh_symbol_base: u32,
}

impl Default for DrawConfig {
    fn default() -> Self {
        DrawConfig {
            budget: 10_000_000,
            seed: 0,
            fresh_symbol_base: 1,
        }
    }
}

/// A drawing together with the next unused basis symbol id.
#[derive(Clone, Debug)]
pub struct DrawOutcome {
    pub drawing: Drawing,
    pub next_symbol: u32,
}

/// Draws a subcubic graph with the four basic slopes so that
///
/// 1. each assigned vertex gets exactly its prescribed x-coordinate,
/// 2. every edge has a basic slope,
/// 3. no vertex is to the North of any vertex of degree two, and
/// 4. no vertex is to the North or Northwest of any vertex of degree one,
///
/// with all points distinct and no vertex inside an edge. Components must
/// not be cycles; the assignment must cover exactly the vertices of degree
/// at most two. Components are laid out with disjoint private symbols and
/// separated vertically so they cannot interfere.
pub fn draw_subcubic(g: &Graph, xa: &XAssignment, cfg: &DrawConfig) -> Result<DrawOutcome, DrawError> {
    validate_input(g, xa)?;
    let fresh_base = cfg.fresh_symbol_base.max(xa.max_symbol() + 1).max(1);
    let mut budget = cfg.budget;

    let components = g.connected_components();
    let mut next_symbol = fresh_base;
    let mut pos: Vec<Option<Point>> = vec![None; g.n()];
    let mut parts: Vec<(Vec<Point>, Vec<usize>)> = Vec::new();
    for comp in &components {
        let (sub, to_parent) = g.induced(comp);
        let local_xa = xa.restrict(&to_parent);
        let pins: BTreeMap<usize, SymScalar> = local_xa
            .iter()
            .map(|(v, s)| (v, s.value()))
            .collect();
        let problem = search::ComponentProblem {
            graph: &sub,
            pins,
            fresh_base: next_symbol,
            seed: cfg.seed,
        };
        let drawn = search::draw_component(&problem, &mut budget).map_err(|e| match e {
            DrawError::BudgetExhausted { .. } => DrawError::BudgetExhausted { budget: cfg.budget },
            other => other,
        })?;
        next_symbol = drawn.next_symbol;
        parts.push((drawn.points, to_parent));
    }

    // Components that share no symbols are separated by multiples of one
    // extra dominant symbol so nothing interferes across components.
    if parts.len() > 1 {
        let separator = next_symbol;
        next_symbol += 1;
        for (index, (points, _)) in parts.iter_mut().enumerate() {
            if index == 0 {
                continue;
            }
            let lift = SymScalar::symbol(separator).scale(&crate::geometry::rat_int(index as i64));
            for p in points.iter_mut() {
                *p = p.translate(&SymScalar::zero(), &lift);
            }
        }
    }
    for (points, to_parent) in parts {
        for (local, point) in points.into_iter().enumerate() {
            pos[to_parent[local]] = Some(point);
        }
    }
    let pos: Vec<Point> = pos.into_iter().map(|p| p.expect("all placed")).collect();
    let drawing = Drawing::new(g.clone(), pos, SlopeSet::basic());

    // The search is never trusted: re-verify the full contract.
    let report = verify_subcubic_contract(g, xa, &drawing);
    if !report.ok() {
        return Err(DrawError::ContractViolation(report.to_string()));
    }
    Ok(DrawOutcome {
        drawing,
        next_symbol,
    })
}

fn validate_input(g: &Graph, xa: &XAssignment) -> Result<(), DrawError> {
    if g.allows_parallel() && g.edges().windows(2).any(|w| w[0] == w[1]) {
        return Err(DrawError::ParallelEdges);
    }
    for v in 0..g.n() {
        let d = g.degree(v);
        if d > 3 {
            return Err(DrawError::NotSubcubic { vertex: v, degree: d });
        }
        if d <= 2 && xa.get(v).is_none() {
            return Err(DrawError::MissingAssignment { vertex: v, degree: d });
        }
        if d == 3 && xa.get(v).is_some() {
            return Err(DrawError::AssignmentForDegreeThree(v));
        }
    }
    for comp in g.connected_components() {
        let (sub, to_parent) = g.induced(&comp);
        if sub.n() > 0 && sub.classify().is_cycle {
            return Err(DrawError::ComponentIsCycle(to_parent));
        }
    }
    Ok(())
}

/// Draws a connected graph with maximum degree three and no prescribed
/// coordinates (for whole cubic graphs, where no vertex has low degree).
pub(crate) fn draw_connected_free(g: &Graph, cfg: &DrawConfig) -> Result<DrawOutcome, DrawError> {
    let xa = XAssignment::new();
    draw_subcubic(g, &xa, cfg)
}

// ---------------------------------------------------------------------------
// Contract verification
// ---------------------------------------------------------------------------

/// A violation of the subcubic placement contract.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ContractViolation {
    /// The assignment domain is not exactly the degree <= 2 vertices.
    AssignmentDomain { vertex: usize },
    /// Property 1: a prescribed x-coordinate is not met exactly.
    PrescribedX { vertex: usize },
    /// Property 2 and general validity, from the drawing checker.
    Drawing(DrawingViolation),
    /// Property 3: `high` is North of the degree-two vertex `low`.
    NorthOfDegreeTwo { low: usize, high: usize },
    /// Property 4: `high` is North of the degree-one vertex `low`.
    NorthOfDegreeOne { low: usize, high: usize },
    /// Property 4: `high` is Northwest of the degree-one vertex `low`.
    NorthwestOfDegreeOne { low: usize, high: usize },
}

impl fmt::Display for ContractViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractViolation::AssignmentDomain { vertex } => {
                write!(f, "assignment domain mismatch at vertex {vertex}")
            }
            ContractViolation::PrescribedX { vertex } => {
                write!(f, "vertex {vertex} misses its prescribed x-coordinate")
            }
            ContractViolation::Drawing(v) => write!(f, "{v}"),
            ContractViolation::NorthOfDegreeTwo { low, high } => {
                write!(f, "vertex {high} is North of degree-2 vertex {low}")
            }
            ContractViolation::NorthOfDegreeOne { low, high } => {
                write!(f, "vertex {high} is North of degree-1 vertex {low}")
            }
            ContractViolation::NorthwestOfDegreeOne { low, high } => {
                write!(f, "vertex {high} is Northwest of degree-1 vertex {low}")
            }
        }
    }
}

/// Contract check result; lists every violated property with witnesses.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ContractReport {
    pub violations: Vec<ContractViolation>,
}

impl ContractReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether the numbered contract property (1 to 4) holds.
    pub fn property_ok(&self, property: u8) -> bool {
        !self.violations.iter().any(|v| match property {
            1 => matches!(v, ContractViolation::PrescribedX { .. }),
            2 => matches!(
                v,
                ContractViolation::Drawing(DrawingViolation::SlopeViolation { .. })
            ),
            3 => matches!(v, ContractViolation::NorthOfDegreeTwo { .. }),
            4 => matches!(
                v,
                ContractViolation::NorthOfDegreeOne { .. }
                    | ContractViolation::NorthwestOfDegreeOne { .. }
            ),
            _ => false,
        })
    }
}

impl fmt::Display for ContractReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "contract satisfied");
        }
        writeln!(f, "{} violation(s):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

/// Checks the full placement contract exactly with symbolic arithmetic:
/// prescribed x-coordinates, basic slopes, drawing validity, and the
/// North/Northwest exclusions at low-degree vertices.
pub fn verify_subcubic_contract(g: &Graph, xa: &XAssignment, d: &Drawing) -> ContractReport {
    let mut violations: Vec<ContractViolation> = Vec::new();

    for v in 0..g.n() {
        let has = xa.get(v).is_some();
        let wants = g.degree(v) <= 2;
        if has != wants {
            violations.push(ContractViolation::AssignmentDomain { vertex: v });
        }
    }

    let validity = check_drawing(g, &d.pos, &SlopeSet::basic());
    let placement_ok = validity.ok();
    violations.extend(validity.violations.into_iter().map(ContractViolation::Drawing));

    if d.pos.len() == g.n() {
        for (v, symbol) in xa.iter() {
            if v < g.n() && d.pos[v].x != symbol.value() {
                violations.push(ContractViolation::PrescribedX { vertex: v });
            }
        }
        if placement_ok {
            for low in 0..g.n() {
                let deg = g.degree(low);
                if deg > 2 {
                    continue;
                }
                for high in 0..g.n() {
                    if high == low {
                        continue;
                    }
                    if directional_relation(&d.pos[low], &d.pos[high], Direction::North) {
                        violations.push(if deg == 2 {
                            ContractViolation::NorthOfDegreeTwo { low, high }
                        } else {
                            ContractViolation::NorthOfDegreeOne { low, high }
                        });
                    }
                    if deg <= 1
                        && directional_relation(&d.pos[low], &d.pos[high], Direction::Northwest)
                    {
                        violations.push(ContractViolation::NorthwestOfDegreeOne { low, high });
                    }
                }
            }
        }
    }

    ContractReport { violations }
}

/// Convenience: the vertices of degree at most two, which an assignment
/// must cover.
pub fn low_degree_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) <= 2).collect()
}
