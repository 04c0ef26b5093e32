//! Undirected graph representation, interchange formats, and the basic
//! predicates everything else relies on.
//!
//! Parsed input is always simple. Parallel edges are permitted only in
//! internally produced contracted graphs; self-loops never occur.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, ParseError};

/// An undirected (multi)graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    allows_parallel: bool,
}

impl Graph {
    /// Builds a simple graph; rejects loops, duplicate edges, and bad ids.
    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::build(n, edges, false)
    }

    /// Builds a multigraph (parallel edges allowed, loops still rejected).
    /// Only contraction produces these; parsers never do.
    pub fn multigraph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], allows_parallel: bool) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !allows_parallel && adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            allows_parallel,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor multiset of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn allows_parallel(&self) -> bool {
        self.allows_parallel
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, parallel edges repeated,
    /// in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_reach(0).iter().filter(|&&r| r).count() == self.n
    }

    fn bfs_reach(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Degree-based classification of the graph.
    pub fn classify(&self) -> Classification {
        let max_degree = self.max_degree();
        let is_cubic = self.n > 0 && self.adj.iter().all(|a| a.len() == 3);
        let connected = self.is_connected();
        Classification {
            is_cubic,
            is_subcubic: max_degree <= 3 && !is_cubic,
            is_cycle: connected && self.n > 0 && self.adj.iter().all(|a| a.len() == 2),
            is_connected: connected,
            max_degree,
        }
    }

    /// Partition into maximal connected pieces, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if assigned[start] {
                continue;
            }
            let reach = self.bfs_reach(start);
            let members: Vec<usize> = (0..self.n).filter(|&v| reach[v]).collect();
            for &v in &members {
                assigned[v] = true;
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    /// Induced subgraph on `set`, relabeled densely in sorted order.
    /// Returns the subgraph and the local-to-parent vertex map.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let to_parent: Vec<usize> = set.iter().collect();
        let mut to_local = vec![usize::MAX; self.n];
        for (local, &parent) in to_parent.iter().enumerate() {
            to_local[parent] = local;
        }
        let mut edges = Vec::new();
        for (local, &parent) in to_parent.iter().enumerate() {
            for &w in &self.adj[parent] {
                if to_local[w] != usize::MAX && parent < w {
                    edges.push((local, to_local[w]));
                }
            }
        }
        let g = Graph::build(to_parent.len(), &edges, self.allows_parallel)
            .expect("induced subgraph of a valid graph is valid");
        (g, to_parent)
    }
}

/// Result of [`Graph::classify`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Classification {
    /// Every degree is exactly three.
    pub is_cubic: bool,
    /// Max degree at most three and not cubic.
    pub is_subcubic: bool,
    /// Connected with every degree exactly two.
    pub is_cycle: bool,
    pub is_connected: bool,
    pub max_degree: usize,
}

/// A sorted set of vertex ids.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }

    /// Vertices of `0..n` not in the set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::new((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut members = self.members.clone();
        members.extend(other.iter());
        VertexSet::new(members)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Certificate that a vertex set induces a supercycle: connected, every
/// induced degree at least two, and some vertex of induced degree three.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuperCycleCert {
    pub vertices: VertexSet,
    pub size: usize,
    pub witness_deg3: usize,
}

/// Why a vertex set fails to induce a supercycle.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum SupercycleRefusal {
    #[error("empty vertex set")]
    EmptySet,
    #[error("induced subgraph is not connected")]
    NotConnected,
    #[error("vertex {vertex} has induced degree {degree} < 2")]
    DegreeBelowTwo { vertex: usize, degree: usize },
    #[error("all induced degrees are two")]
    AllDegreesTwo,
}

/// Checks the supercycle conditions on the subgraph induced by `set`.
pub fn is_supercycle(g: &Graph, set: &VertexSet) -> Result<SuperCycleCert, SupercycleRefusal> {
    if set.is_empty() {
        return Err(SupercycleRefusal::EmptySet);
    }
    let (induced, to_parent) = g.induced(set);
    if !induced.is_connected() {
        return Err(SupercycleRefusal::NotConnected);
    }
    let mut witness = None;
    for v in 0..induced.n() {
        let d = induced.degree(v);
        if d < 2 {
            return Err(SupercycleRefusal::DegreeBelowTwo {
                vertex: to_parent[v],
                degree: d,
            });
        }
        if d >= 3 && witness.is_none() {
            witness = Some(to_parent[v]);
        }
    }
    match witness {
        Some(witness_deg3) => Ok(SuperCycleCert {
            vertices: set.clone(),
            size: set.len(),
            witness_deg3,
        }),
        None => Err(SupercycleRefusal::AllDegreesTwo),
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

const G6_HEADER: &str = ">>graph6<<";

/// Parses a single graph6-encoded line into a simple graph.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let mut line = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = line.strip_prefix(G6_HEADER) {
        line = rest;
    }
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::ByteOutOfRange(b));
        }
    }
    let (n, body) = decode_g6_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::BodyLength {
            expected,
            got: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            if read_bit(body, bit_index) {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    // Padding bits up to the 6-bit boundary must be zero.
    for pad in bit_count..expected * 6 {
        if read_bit(body, pad) {
            return Err(ParseError::TrailingBits);
        }
    }
    Graph::simple(n, &edges).map_err(ParseError::Graph)
}

fn decode_g6_order(bytes: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(ParseError::BadLengthPrefix);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        return Ok((n, &bytes[4..]));
    }
    if bytes.len() < 8 {
        return Err(ParseError::BadLengthPrefix);
    }
    let mut n = 0usize;
    for &b in &bytes[2..8] {
        n = (n << 6) | (b - 63) as usize;
    }
    Ok((n, &bytes[8..]))
}

fn read_bit(body: &[u8], index: usize) -> bool {
    let byte = (body[index / 6] - 63) as usize;
    (byte >> (5 - index % 6)) & 1 == 1
}

/// Encodes a simple graph as a graph6 line (the inverse of [`parse_graph6`]).
pub fn to_graph6(g: &Graph) -> String {
    assert!(!g.allows_parallel(), "graph6 encodes simple graphs only");
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push(chunk + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

// ---------------------------------------------------------------------------
// plain edge list
// ---------------------------------------------------------------------------

/// Parses the plain edge-list format: a header line `n m` followed by
/// `m` lines `u v` with 0-based vertex ids.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
    let m: usize = parse_field(parts.next(), line_no, "edge count")?;
    if parts.next().is_some() {
        return Err(ParseError::EdgeList {
            line: line_no + 1,
            message: "expected exactly two header fields".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| ParseError::EdgeList {
            line: 0,
            message: format!("expected {m} edge lines"),
        })?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), line_no, "edge endpoint")?;
        let v: usize = parse_field(parts.next(), line_no, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(ParseError::EdgeList {
                line: line_no + 1,
                message: "expected exactly two endpoints".into(),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(ParseError::EdgeList {
            line: line_no + 1,
            message: "trailing content after last edge".into(),
        });
    }
    Graph::simple(n, &edges).map_err(ParseError::Graph)
}

fn parse_field(field: Option<&str>, line_no: usize, what: &str) -> Result<usize, ParseError> {
    field
        .ok_or_else(|| ParseError::EdgeList {
            line: line_no + 1,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| ParseError::EdgeList {
            line: line_no + 1,
            message: format!("invalid {what}"),
        })
}
