//! End-to-end drawing of cubic graphs with the four basic slopes.
//!
//! Dispatch for a connected cubic graph: a bridge or a two-cut yields a
//! suitable M-cut directly; otherwise a short supercycle seeds the M-cut
//! construction whenever its size bound admits one (always from eighteen
//! vertices up). The two sides are drawn as subcubic components with
//! opposite prescribed x-coordinates and composed with vertical cut edges.
//! Small graphs that resist decomposition fall back to stored drawings for
//! the two known hard cases or to exhaustive four-slope search. Every
//! drawing is re-verified before being returned.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::drawer::{
    draw_connected_free, draw_subcubic, fixture_drawing, verify_subcubic_contract, DrawConfig,
    Drawing, FixtureName, XAssignment,
};
use crate::error::{DrawError, McutError, StructureError};
use crate::geometry::{rat_int, Point, SlopeSet, SymScalar};
use crate::graph::Graph;
use crate::structure::{
    find_bridge_cut, find_hamiltonian_cycle, find_short_supercycle, find_suitable_m_cut,
    find_two_cut_split, isomorphism, SuitableMCut,
};
use crate::verify::check_drawing;

pub use crate::verify::{DrawingReport, DrawingViolation};

/// Checks a drawing of `g` against a slope set: bijective placement with
/// pairwise-distinct points, every edge slope in the set, no vertex
/// strictly inside any edge segment.
pub fn verify_drawing(g: &Graph, d: &Drawing, slopes: &SlopeSet) -> DrawingReport {
    check_drawing(g, &d.pos, slopes)
}

/// Which case of the decomposition drew the graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Disconnected,
    Bridge,
    TwoCut,
    BigMcut,
    SmallSearch,
    Fixture,
}

/// Cut evidence recorded in a trace.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct McutTrace {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub cut_edges: Vec<(usize, usize)>,
    /// Size of the supercycle seed when one was used.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed_size: Option<usize>,
}

/// The branch taken and the certificates used.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub branch: Branch,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_cut: Option<McutTrace>,
    /// Recorded on the exhaustive branch when the graph has one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hamiltonian: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fixture: Option<FixtureName>,
    /// Sub-traces, one per component, for disconnected input.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub components: Vec<PipelineTrace>,
}

impl PipelineTrace {
    fn leaf(branch: Branch) -> PipelineTrace {
        PipelineTrace {
            branch,
            m_cut: None,
            hamiltonian: None,
            fixture: None,
            components: Vec::new(),
        }
    }
}

/// One component drawing produced on the way to the final output, kept for
/// independent contract auditing.
#[derive(Clone, Debug)]
pub struct SubcubicPart {
    pub graph: Graph,
    pub xa: XAssignment,
    pub drawing: Drawing,
    /// Local vertex id to original vertex id.
    pub to_parent: Vec<usize>,
}

/// Pipeline configuration.
#[derive(Clone, Copy, Debug)]
pub struct PipelineConfig {
    /// Search node budget per drawn component.
    pub budget: u64,
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            budget: 10_000_000,
            seed: 0,
        }
    }
}

/// The drawing, the trace, and every component drawing behind it.
#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub drawing: Drawing,
    pub trace: PipelineTrace,
    pub parts: Vec<SubcubicPart>,
}

#[derive(Error, Debug)]
pub enum PipelineError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error(transparent)]
    Draw(#[from] DrawError),
    #[error("structure step failed: {0}")]
    Structure(#[from] StructureError),
    #[error("suitable M-cut unavailable: {0}")]
    Mcut(#[from] McutError),
    #[error("cut-side assignments disagree on cut edge {index}")]
    AssignmentMismatch { index: usize },
    #[error("side drawing does not match the cut side graph")]
    SideMismatch,
    #[error("separator symbol {separator} does not dominate the component symbols")]
    SeparatorTooLow { separator: u32 },
    #[error("component drawing failed contract re-verification: {0}")]
    ComponentContract(String),
    #[error("final drawing failed verification: {0}")]
    Verification(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

struct SymbolAllocator {
    next: u32,
}

impl SymbolAllocator {
    fn new() -> SymbolAllocator {
        SymbolAllocator { next: 1 }
    }

    fn take(&mut self) -> u32 {
        let id = self.next;
        self.next += 1;
        id
    }

    fn bump_past(&mut self, used: u32) {
        self.next = self.next.max(used + 1);
    }
}

/// Draws a cubic graph (every component) with the four basic slopes and
/// re-verifies the result before returning it.
pub fn draw_cubic(g: &Graph, cfg: &PipelineConfig) -> Result<PipelineOutcome, PipelineError> {
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(PipelineError::NotCubic {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    let mut alloc = SymbolAllocator::new();
    let mut parts: Vec<SubcubicPart> = Vec::new();

    let components = g.connected_components();
    let outcome = if components.len() == 1 {
        let (drawing, trace) = draw_connected(g, cfg, &mut alloc, &mut parts, None)?;
        PipelineOutcome {
            drawing,
            trace,
            parts: Vec::new(),
        }
    } else {
        let mut drawings = Vec::new();
        let mut traces = Vec::new();
        let mut maps = Vec::new();
        for comp in &components {
            let (sub, to_parent) = g.induced(comp);
            let (drawing, trace) =
                draw_connected(&sub, cfg, &mut alloc, &mut parts, Some(&to_parent))?;
            drawings.push(drawing);
            traces.push(trace);
            maps.push(to_parent);
        }
        let union = place_components(&drawings);
        // Map the disjoint-union labeling back onto the original ids.
        let mut pos: Vec<Option<Point>> = vec![None; g.n()];
        let mut offset = 0usize;
        for (drawing, map) in drawings.iter().zip(&maps) {
            for local in 0..drawing.graph.n() {
                pos[map[local]] = Some(union.pos[offset + local].clone());
            }
            offset += drawing.graph.n();
        }
        let pos: Vec<Point> = pos
            .into_iter()
            .map(|p| p.expect("components partition the vertices"))
            .collect();
        let mut trace = PipelineTrace::leaf(Branch::Disconnected);
        trace.components = traces;
        PipelineOutcome {
            drawing: Drawing::new(g.clone(), pos, SlopeSet::basic()),
            trace,
            parts: Vec::new(),
        }
    };

    let mut outcome = outcome;
    outcome.parts = parts;
    let report = verify_drawing(g, &outcome.drawing, &SlopeSet::basic());
    if !report.ok() {
        return Err(PipelineError::Verification(report.to_string()));
    }
    Ok(outcome)
}

fn draw_connected(
    g: &Graph,
    cfg: &PipelineConfig,
    alloc: &mut SymbolAllocator,
    parts: &mut Vec<SubcubicPart>,
    to_parent: Option<&[usize]>,
) -> Result<(Drawing, PipelineTrace), PipelineError> {
    let n = g.n();

    if let Some(cut) = find_bridge_cut(g)? {
        return decompose(g, cfg, alloc, parts, to_parent, cut, Branch::Bridge, None);
    }
    if let Some(cut) = find_two_cut_split(g)? {
        return decompose(g, cfg, alloc, parts, to_parent, cut, Branch::TwoCut, None);
    }

    // Supercycle route: guaranteed to apply from eighteen vertices up, and
    // used below that whenever the seed is small enough.
    let seed = find_short_supercycle(g)?;
    match find_suitable_m_cut(g, &seed) {
        Ok(cut) => {
            return decompose(
                g,
                cfg,
                alloc,
                parts,
                to_parent,
                cut,
                Branch::BigMcut,
                Some(seed.size),
            );
        }
        Err(McutError::SeedTooLarge { .. }) if n <= 16 => {}
        Err(e) => return Err(e.into()),
    }

    // The two known small graphs that resist every decomposition above ship
    // with stored drawings; matching is by isomorphism, not by name.
    for name in [FixtureName::Petersen, FixtureName::Tietze] {
        let fixture = fixture_drawing(name);
        if fixture.graph.n() != n {
            continue;
        }
        if let Some(map) = isomorphism(g, &fixture.graph) {
            let pos: Vec<Point> = (0..n).map(|v| fixture.pos[map[v]].clone()).collect();
            let drawing = Drawing::new(g.clone(), pos, SlopeSet::basic());
            record_part(parts, g, XAssignment::new(), &drawing, to_parent);
            let mut trace = PipelineTrace::leaf(Branch::Fixture);
            trace.fixture = Some(name);
            return Ok((drawing, trace));
        }
    }

    // Exhaustive four-slope search on the whole component.
    let draw_cfg = DrawConfig {
        budget: cfg.budget,
        seed: cfg.seed,
        fresh_symbol_base: alloc.next,
    };
    let out = draw_connected_free(g, &draw_cfg)?;
    alloc.bump_past(out.next_symbol.saturating_sub(1));
    record_part(parts, g, XAssignment::new(), &out.drawing, to_parent);
    let mut trace = PipelineTrace::leaf(Branch::SmallSearch);
    trace.hamiltonian = find_hamiltonian_cycle(g);
    Ok((out.drawing, trace))
}

#[allow(clippy::too_many_arguments)]
fn decompose(
    g: &Graph,
    cfg: &PipelineConfig,
    alloc: &mut SymbolAllocator,
    parts: &mut Vec<SubcubicPart>,
    to_parent: Option<&[usize]>,
    cut: SuitableMCut,
    branch: Branch,
    seed_size: Option<usize>,
) -> Result<(Drawing, PipelineTrace), PipelineError> {
    let pin_ids: Vec<u32> = cut.cut.cut_edges.iter().map(|_| alloc.take()).collect();

    let (sub_a, map_a) = g.induced(&cut.cut.side_a);
    let (sub_b, map_b) = g.induced(&cut.cut.side_b);
    let mut xa_a = XAssignment::new();
    let mut xa_b = XAssignment::new();
    for (i, &(a, b)) in cut.cut.cut_edges.iter().enumerate() {
        let local_a = map_a.binary_search(&a).expect("endpoint in side A");
        let local_b = map_b.binary_search(&b).expect("endpoint in side B");
        xa_a.assign(local_a, pin_ids[i], false)?;
        xa_b.assign(local_b, pin_ids[i], true)?;
    }

    let cfg_a = DrawConfig {
        budget: cfg.budget,
        seed: cfg.seed,
        fresh_symbol_base: alloc.next,
    };
    let out_a = draw_subcubic(&sub_a, &xa_a, &cfg_a)?;
    alloc.bump_past(out_a.next_symbol.saturating_sub(1));
    let cfg_b = DrawConfig {
        budget: cfg.budget,
        seed: cfg.seed,
        fresh_symbol_base: alloc.next,
    };
    let out_b = draw_subcubic(&sub_b, &xa_b, &cfg_b)?;
    alloc.bump_past(out_b.next_symbol.saturating_sub(1));

    let separator = alloc.take();
    let drawing = compose_via_m_cut(
        g,
        &cut,
        &out_a.drawing,
        &xa_a,
        &out_b.drawing,
        &xa_b,
        separator,
    )?;

    record_part(parts, &sub_a, xa_a, &out_a.drawing, to_parent_composed(&map_a, to_parent).as_deref());
    record_part(parts, &sub_b, xa_b, &out_b.drawing, to_parent_composed(&map_b, to_parent).as_deref());

    let mut trace = PipelineTrace::leaf(branch);
    trace.m_cut = Some(McutTrace {
        side_a: cut.cut.side_a.iter().collect(),
        side_b: cut.cut.side_b.iter().collect(),
        cut_edges: cut.cut.cut_edges.clone(),
        seed_size,
    });
    Ok((drawing, trace))
}

fn to_parent_composed(map: &[usize], outer: Option<&[usize]>) -> Option<Vec<usize>> {
    Some(match outer {
        Some(outer) => map.iter().map(|&m| outer[m]).collect(),
        None => map.to_vec(),
    })
}

fn record_part(
    parts: &mut Vec<SubcubicPart>,
    graph: &Graph,
    xa: XAssignment,
    drawing: &Drawing,
    to_parent: Option<&[usize]>,
) {
    let to_parent = match to_parent {
        Some(map) => map.to_vec(),
        None => (0..graph.n()).collect(),
    };
    parts.push(SubcubicPart {
        graph: graph.clone(),
        xa,
        drawing: drawing.clone(),
        to_parent,
    });
}

/// Composes two contract-satisfying side drawings across a suitable M-cut.
///
/// Side B is rotated by π (its prescribed x-coordinates flip from `-x_i` to
/// `x_i`) and translated upward by the separator symbol, which must dominate
/// every symbol in either side. Cut edges then run vertically between equal
/// x-coordinates, and the contract's North exclusion keeps their corridors
/// empty.
pub fn compose_via_m_cut(
    g: &Graph,
    cut: &SuitableMCut,
    drawing_a: &Drawing,
    xa_a: &XAssignment,
    drawing_b: &Drawing,
    xa_b: &XAssignment,
    separator: u32,
) -> Result<Drawing, PipelineError> {
    let (sub_a, map_a) = g.induced(&cut.cut.side_a);
    let (sub_b, map_b) = g.induced(&cut.cut.side_b);
    if drawing_a.graph != sub_a || drawing_b.graph != sub_b {
        return Err(PipelineError::SideMismatch);
    }

    // Component drawings are never trusted: re-verify their contracts.
    for (graph, xa, drawing) in [
        (&sub_a, xa_a, drawing_a),
        (&sub_b, xa_b, drawing_b),
    ] {
        let report = verify_subcubic_contract(graph, xa, drawing);
        if !report.ok() {
            return Err(PipelineError::ComponentContract(report.to_string()));
        }
    }

    // Per cut edge, the B endpoint must carry the negation of the A value.
    for (index, &(a, b)) in cut.cut.cut_edges.iter().enumerate() {
        let local_a = map_a
            .binary_search(&a)
            .map_err(|_| PipelineError::SideMismatch)?;
        let local_b = map_b
            .binary_search(&b)
            .map_err(|_| PipelineError::SideMismatch)?;
        let (sa, sb) = match (xa_a.get(local_a), xa_b.get(local_b)) {
            (Some(sa), Some(sb)) => (sa, sb),
            _ => return Err(PipelineError::AssignmentMismatch { index }),
        };
        if sa.id != sb.id || sa.negative == sb.negative {
            return Err(PipelineError::AssignmentMismatch { index });
        }
    }

    let used = drawing_a.max_symbol().max(drawing_b.max_symbol());
    if separator <= used {
        return Err(PipelineError::SeparatorTooLow { separator });
    }

    let lift = SymScalar::symbol(separator);
    let mut pos: Vec<Option<Point>> = vec![None; g.n()];
    for (local, &parent) in map_a.iter().enumerate() {
        pos[parent] = Some(drawing_a.pos[local].clone());
    }
    for (local, &parent) in map_b.iter().enumerate() {
        let rotated = drawing_b.pos[local].rotate_pi();
        pos[parent] = Some(rotated.translate(&SymScalar::zero(), &lift));
    }
    let pos: Vec<Point> = pos
        .into_iter()
        .map(|p| p.expect("cut sides partition the vertices"))
        .collect();
    Ok(Drawing::new(g.clone(), pos, SlopeSet::basic()))
}

/// Places component drawings far apart: component `k` is translated by `k`
/// times a fresh dominant symbol in both axes. Returns the disjoint-union
/// drawing (vertex ids offset component by component).
pub fn place_components(drawings: &[Drawing]) -> Drawing {
    let total: usize = drawings.iter().map(|d| d.graph.n()).sum();
    let separator = drawings.iter().map(Drawing::max_symbol).max().unwrap_or(0) + 1;
    let step = SymScalar::symbol(separator);

    let mut edges = Vec::new();
    let mut pos = Vec::with_capacity(total);
    let mut offset = 0usize;
    for (k, d) in drawings.iter().enumerate() {
        for (u, v) in d.graph.edges() {
            edges.push((offset + u, offset + v));
        }
        let shift = step.scale(&rat_int(k as i64));
        for p in &d.pos {
            pos.push(p.translate(&shift, &shift));
        }
        offset += d.graph.n();
    }
    let graph = Graph::simple(total, &edges).expect("disjoint union of simple graphs");
    Drawing::new(graph, pos, SlopeSet::basic())
}
