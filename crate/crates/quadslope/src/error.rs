//! Error types shared across the crate.

use thiserror::Error;

use crate::geometry::Slope;

/// Errors from exact geometry primitives.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("the null direction (0, 0) has no slope")]
    NullDirection,
    #[error("coincident points have no slope")]
    CoincidentPoints,
    #[error("singular linear part")]
    SingularMatrix,
    #[error("slope set must not be empty")]
    EmptySlopeSet,
    #[error("duplicate slope {0} in slope set")]
    DuplicateSlope(Slope),
    #[error("invalid slope syntax: {0}")]
    SlopeSyntax(String),
}

/// Errors from numeric realization.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("no value assigned to symbol {0}")]
    UnassignedSymbol(u32),
    #[error("assignment is not injective: symbols {0} and {1} share a value")]
    NonInjective(u32, u32),
    #[error("points {0} and {1} collide at the requested output precision")]
    Collision(usize, usize),
}

/// Errors constructing graphs.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// Errors parsing graph interchange formats.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed length prefix")]
    BadLengthPrefix,
    #[error("byte {0} outside the graph6 range 63..=126")]
    ByteOutOfRange(u8),
    #[error("graph6 body has wrong length: expected {expected} data bytes, got {got}")]
    BodyLength { expected: usize, got: usize },
    #[error("trailing padding bits are not zero")]
    TrailingBits,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the structural algorithms.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("vertex {vertex} has degree {degree} < 2")]
    MinDegreeBelowTwo { vertex: usize, degree: usize },
    #[error("order {0} outside the supported enumeration range (even, 4..=12)")]
    UnsupportedOrder(usize),
    #[error("cut edges do not form a matching")]
    NotMatching,
    #[error("cut side is not a supercycle: {0}")]
    SideNotSupercycle(String),
}

/// Refusal of the suitable M-cut construction.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum McutError {
    #[error("lemma precondition violated: n = {n} <= 2s - 2 with seed size s = {seed_size}")]
    SeedTooLarge { n: usize, seed_size: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Errors from the subcubic drawer.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DrawError {
    #[error("vertex {vertex} has degree {degree} > 3, input is not subcubic")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("parallel edges cannot be drawn with straight-line segments")]
    ParallelEdges,
    #[error("component {0:?} is a cycle, excluded by the drawing contract")]
    ComponentIsCycle(Vec<usize>),
    #[error("degree-{degree} vertex {vertex} has no x-coordinate assignment")]
    MissingAssignment { vertex: usize, degree: usize },
    #[error("vertex {0} has an x-assignment but degree three")]
    AssignmentForDegreeThree(usize),
    #[error("x-assignment reuses symbol {0}")]
    DuplicateAssignmentSymbol(u32),
    #[error("x-assignment uses the reserved unit symbol")]
    UnitSymbolAssignment,
    #[error("fresh symbol base {base} does not exceed assignment symbol {pin}")]
    FreshBaseTooLow { base: u32, pin: u32 },
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("search space exhausted without a drawing")]
    SearchExhausted,
    #[error("drawer output failed its own contract re-verification: {0}")]
    ContractViolation(String),
}
