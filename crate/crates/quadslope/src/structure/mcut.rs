//! Suitable M-cuts: the absorption procedure from a supercycle seed, plus
//! the bridge and two-cut shortcuts for graphs of low connectivity.

use serde::{Deserialize, Serialize};

use crate::error::{McutError, StructureError};
use crate::graph::{is_supercycle, Graph, SuperCycleCert, VertexSet};
use crate::structure::{require_connected, require_cubic};

/// A vertex bipartition with its crossing edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Cut {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    /// Crossing edges as `(a, b)` with `a` in side A and `b` in side B.
    pub cut_edges: Vec<(usize, usize)>,
}

impl Cut {
    /// Builds the cut induced by `side_a` in `g`, with `side_b` the complement.
    pub fn from_side(g: &Graph, side_a: VertexSet) -> Cut {
        let side_b = side_a.complement(g.n());
        let mut cut_edges = Vec::new();
        for (u, v) in g.edges() {
            match (side_a.contains(u), side_a.contains(v)) {
                (true, false) => cut_edges.push((u, v)),
                (false, true) => cut_edges.push((v, u)),
                _ => {}
            }
        }
        Cut {
            side_a,
            side_b,
            cut_edges,
        }
    }

    pub fn size(&self) -> usize {
        self.cut_edges.len()
    }

    /// The cut-edges form a matching: all endpoint vertices pairwise distinct.
    pub fn is_m_cut(&self) -> bool {
        let mut seen = Vec::with_capacity(self.cut_edges.len() * 2);
        for &(a, b) in &self.cut_edges {
            seen.push(a);
            seen.push(b);
        }
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// An M-cut whose sides, after deleting the cut edges, are both supercycles.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuitableMCut {
    pub cut: Cut,
    pub cert_a: SuperCycleCert,
    pub cert_b: SuperCycleCert,
}

impl SuitableMCut {
    /// Certifies a cut as suitable, re-deriving both side certificates.
    pub fn certify(g: &Graph, cut: Cut) -> Result<SuitableMCut, StructureError> {
        if !cut.is_m_cut() {
            return Err(StructureError::NotMatching);
        }
        let cert_a = is_supercycle(g, &cut.side_a)
            .map_err(|e| StructureError::SideNotSupercycle(e.to_string()))?;
        let cert_b = is_supercycle(g, &cut.side_b)
            .map_err(|e| StructureError::SideNotSupercycle(e.to_string()))?;
        Ok(SuitableMCut {
            cut,
            cert_a,
            cert_b,
        })
    }

    /// Re-checks every invariant from scratch: partition, crossing edges,
    /// matching property, and both supercycle certificates.
    pub fn revalidate(&self, g: &Graph) -> bool {
        let rebuilt = Cut::from_side(g, self.cut.side_a.clone());
        if rebuilt.side_b != self.cut.side_b {
            return false;
        }
        let mut expected = rebuilt.cut_edges.clone();
        let mut actual = self.cut.cut_edges.clone();
        expected.sort_unstable();
        actual.sort_unstable();
        if expected != actual || !self.cut.is_m_cut() {
            return false;
        }
        is_supercycle(g, &self.cut.side_a).is_ok() && is_supercycle(g, &self.cut.side_b).is_ok()
    }
}

/// Runs the absorption procedure from a supercycle seed.
///
/// Refuses when `n <= 2s - 2` (the lemma precondition). Otherwise absorbs
/// common neighbors of cut edges into the seed side until the cut is a
/// matching, then keeps one component with more vertices than incident cut
/// edges as side B and merges every other component into side A. The result
/// has at most `s - 2` cut edges and both sides are supercycles.
pub fn find_suitable_m_cut(g: &Graph, seed: &SuperCycleCert) -> Result<SuitableMCut, McutError> {
    require_cubic(g).map_err(McutError::Structure)?;
    require_connected(g).map_err(McutError::Structure)?;
    let s = seed.size;
    let n = g.n();
    if n <= 2 * s - 2 {
        return Err(McutError::SeedTooLarge { n, seed_size: s });
    }

    let mut in_a = vec![false; n];
    for v in seed.vertices.iter() {
        in_a[v] = true;
    }

    // Absorb outside vertices incident to two or more cut edges,
    // lowest-numbered first.
    loop {
        let mut candidate = None;
        for v in 0..n {
            if in_a[v] {
                continue;
            }
            let incident = g.neighbors(v).iter().filter(|&&w| in_a[w]).count();
            if incident >= 2 {
                candidate = Some(v);
                break;
            }
        }
        match candidate {
            Some(v) => in_a[v] = true,
            None => break,
        }
    }

    // Components of the rest; keep one with more vertices than incident
    // cut edges (the lowest-numbered qualifying one), merge the others.
    let outside: VertexSet = (0..n).filter(|&v| !in_a[v]).collect();
    debug_assert!(!outside.is_empty(), "absorption cannot exhaust the graph");
    let (rest, to_parent) = g.induced(&outside);
    let mut keep = None;
    for comp in rest.connected_components() {
        let members: VertexSet = comp.iter().map(|v| to_parent[v]).collect();
        let incident: usize = members
            .iter()
            .map(|v| g.neighbors(v).iter().filter(|&&w| in_a[w]).count())
            .sum();
        if members.len() > incident {
            keep = Some(members);
            break;
        }
    }
    let side_b = keep.expect("a qualifying component exists when n > 2s - 2");
    for v in 0..n {
        if !in_a[v] && !side_b.contains(v) {
            in_a[v] = true;
        }
    }

    let side_a: VertexSet = (0..n).filter(|&v| in_a[v]).collect();
    let cut = Cut::from_side(g, side_a);
    debug_assert!(cut.size() <= s - 2, "cut size exceeds s - 2");
    debug_assert!(cut.is_m_cut());
    let suitable = SuitableMCut::certify(g, cut).map_err(McutError::Structure)?;
    Ok(suitable)
}

/// If the graph has a cut vertex, returns a bridge as a size-one suitable
/// M-cut; cubic graphs have a cut vertex exactly when they have a bridge.
pub fn find_bridge_cut(g: &Graph) -> Result<Option<SuitableMCut>, StructureError> {
    require_cubic(g)?;
    require_connected(g)?;
    let bridges = find_bridges(g);
    let Some(&(u, v)) = bridges.first() else {
        return Ok(None);
    };
    // Side A: the component of u once the bridge is removed.
    let side_a = component_avoiding_edge(g, u, v);
    let cut = Cut::from_side(g, side_a);
    debug_assert_eq!(cut.size(), 1);
    Ok(Some(
        SuitableMCut::certify(g, cut).expect("bridge sides of a cubic graph are supercycles"),
    ))
}

/// If the graph (connected, cubic, bridgeless) has a two-vertex disconnecting
/// set, returns a size-two M-cut with non-adjacent edges whose sides are
/// supercycles; otherwise `None`.
pub fn find_two_cut_split(g: &Graph) -> Result<Option<SuitableMCut>, StructureError> {
    require_cubic(g)?;
    require_connected(g)?;
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a1, b1) = edges[i];
            let (a2, b2) = edges[j];
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                continue; // adjacent edges never form an M-cut
            }
            let side = component_avoiding_edges(g, a1, &[(a1, b1), (a2, b2)]);
            if side.len() == g.n() {
                continue; // removal does not disconnect
            }
            let cut = Cut::from_side(g, side);
            if cut.size() != 2 {
                continue;
            }
            if let Ok(suitable) = SuitableMCut::certify(g, cut) {
                return Ok(Some(suitable));
            }
        }
    }
    Ok(None)
}

/// All bridges of a simple graph, lexicographically ordered, via
/// depth-first low-points (iterative).
fn find_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut timer = 0usize;
    // Stack frames: (vertex, parent, next neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while !stack.is_empty() {
            let top = stack.len() - 1;
            let (u, parent, idx) = stack[top];
            if idx < g.neighbors(u).len() {
                stack[top].2 += 1;
                let w = g.neighbors(u)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        bridges.push((parent.min(u), parent.max(u)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Vertices reachable from `start` without crossing one instance of `(u, v)`.
fn component_avoiding_edge(g: &Graph, start: usize, other_end: usize) -> VertexSet {
    component_avoiding_edges(g, start, &[(start, other_end)])
}

fn component_avoiding_edges(g: &Graph, start: usize, banned: &[(usize, usize)]) -> VertexSet {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            let blocked = banned
                .iter()
                .any(|&(a, b)| (u == a && w == b) || (u == b && w == a));
            if !blocked && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.n()).filter(|&v| seen[v]).collect()
}
