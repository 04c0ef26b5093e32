//! Exact girth with an explicit shortest cycle.

use std::collections::VecDeque;

use crate::error::StructureError;
use crate::graph::Graph;
use crate::structure::require_connected;

/// Returns the girth and one shortest cycle as a vertex list.
///
/// Works on multigraphs (a parallel pair is a cycle of length two). The
/// scan runs a breadth-first search per edge: the shortest cycle through
/// edge `(u, v)` is a shortest `u`-`v` path avoiding that edge instance,
/// plus the edge itself. The minimum over all edges is the exact girth.
pub fn girth_cycle(g: &Graph) -> Result<(usize, Vec<usize>), StructureError> {
    require_connected(g)?;
    for v in 0..g.n() {
        let d = g.degree(v);
        if d < 2 {
            return Err(StructureError::MinDegreeBelowTwo {
                vertex: v,
                degree: d,
            });
        }
    }

    let mut best: Option<(usize, Vec<usize>)> = None;
    for (u, v) in g.edges() {
        // Parallel pair: 2-cycle, nothing shorter exists.
        if g.allows_parallel() && g.neighbors(u).iter().filter(|&&w| w == v).count() >= 2 {
            return Ok((2, vec![u, v]));
        }
        let limit = best.as_ref().map(|(len, _)| *len);
        if let Some(path) = shortest_path_avoiding(g, u, v, limit) {
            let len = path.len();
            if best.as_ref().map_or(true, |(b, _)| len < *b) {
                best = Some((len, path));
            }
        }
    }
    best.ok_or(StructureError::Acyclic)
}

/// Shortest `u`-`v` path avoiding one instance of the edge `(u, v)`,
/// returned as the cycle it closes (path vertices; the edge closes it).
/// Abandons paths that cannot beat `limit`.
fn shortest_path_avoiding(
    g: &Graph,
    u: usize,
    v: usize,
    limit: Option<usize>,
) -> Option<Vec<usize>> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    let mut skipped_direct = false;
    while let Some(w) = queue.pop_front() {
        if w == v {
            break;
        }
        if let Some(lim) = limit {
            // A cycle through this edge has length dist[v] + 1.
            if dist[w] + 2 >= lim {
                continue;
            }
        }
        for &x in g.neighbors(w) {
            if w == u && x == v && !skipped_direct {
                skipped_direct = true;
                continue;
            }
            if dist[x] == usize::MAX {
                dist[x] = dist[w] + 1;
                parent[x] = w;
                queue.push_back(x);
            }
        }
    }
    if dist[v] == usize::MAX {
        return None;
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}
