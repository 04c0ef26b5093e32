//! Short supercycles via cycle contraction and breadth-first search.

use std::collections::VecDeque;

use crate::error::StructureError;
use crate::graph::{is_supercycle, Graph, SuperCycleCert, VertexSet};
use crate::structure::{girth_cycle, require_connected, require_cubic, supercycle_size_bound};

/// Finds a supercycle with at most `2*ceil(log2((n+1)/g)) + g - 1` vertices
/// in a connected cubic graph with girth `g`.
///
/// Construction: contract a shortest cycle into one vertex of degree `g`,
/// run a breadth-first search from it until the first non-tree edge appears,
/// trace the closed walk back (a cycle or a double edge in the contracted
/// multigraph), and expand the contracted vertex to the original cycle.
pub fn find_short_supercycle(g: &Graph) -> Result<SuperCycleCert, StructureError> {
    require_cubic(g)?;
    require_connected(g)?;

    let (girth, cycle) = girth_cycle(g)?;
    let (contracted, to_parent, z) = contract_cycle(g, &cycle);

    let closure = first_bfs_closure(&contracted, z);
    let (u, w) = (closure.from, closure.to);

    // Tree paths from both closure endpoints up to their lowest common
    // ancestor; the cycle through the non-tree edge consists of both path
    // segments. Everything between the ancestor and the root joins the
    // supercycle as a connecting path.
    let path_u = closure.path_to_root(u);
    let path_w = closure.path_to_root(w);
    let mut members: Vec<usize> = Vec::new();
    let lca_depth = {
        let mut i = path_u.len();
        let mut j = path_w.len();
        // Paths end at the root; strip the common suffix beyond the LCA.
        while i > 1 && j > 1 && path_u[i - 2] == path_w[j - 2] {
            i -= 1;
            j -= 1;
        }
        members.extend_from_slice(&path_u[..i]);
        members.extend_from_slice(&path_w[..j.saturating_sub(1)]);
        i - 1
    };
    // Path from the LCA down to the root (inclusive).
    members.extend_from_slice(&path_u[lca_depth..]);

    // Expand the contracted vertex back to the original cycle.
    let mut expanded: Vec<usize> = members
        .into_iter()
        .filter(|&v| v != z)
        .map(|v| to_parent[v])
        .collect();
    expanded.extend_from_slice(&cycle);
    let set = VertexSet::new(expanded);

    let cert = is_supercycle(g, &set)
        .expect("contraction construction always yields a supercycle");
    debug_assert!(
        cert.size <= supercycle_size_bound(g.n(), girth),
        "supercycle of size {} exceeds bound {} (n = {}, g = {})",
        cert.size,
        supercycle_size_bound(g.n(), girth),
        g.n(),
        girth
    );
    Ok(cert)
}

/// Contracts the vertices of `cycle` into a single vertex, producing a
/// multigraph, the local-to-parent map for the uncontracted vertices, and
/// the id of the contracted vertex.
pub(crate) fn contract_cycle(g: &Graph, cycle: &[usize]) -> (Graph, Vec<usize>, usize) {
    let in_cycle = {
        let mut mask = vec![false; g.n()];
        for &v in cycle {
            mask[v] = true;
        }
        mask
    };
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !in_cycle[v]).collect();
    let z = outside.len();
    let mut to_local = vec![usize::MAX; g.n()];
    for (local, &parent) in outside.iter().enumerate() {
        to_local[parent] = local;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        match (in_cycle[u], in_cycle[v]) {
            (true, true) => {} // internal cycle edge, dropped
            (true, false) => edges.push((z, to_local[v])),
            (false, true) => edges.push((to_local[u], z)),
            (false, false) => edges.push((to_local[u], to_local[v])),
        }
    }
    let mut to_parent = outside;
    to_parent.push(usize::MAX); // z has no single parent
    let contracted = Graph::multigraph(z + 1, &edges)
        .expect("contraction of a loop-free graph stays loop-free");
    (contracted, to_parent, z)
}

struct BfsClosure {
    from: usize,
    to: usize,
    parent: Vec<usize>,
}

impl BfsClosure {
    /// Vertices from `v` up to the root, inclusive.
    fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while self.parent[cur] != usize::MAX {
            cur = self.parent[cur];
            path.push(cur);
        }
        path
    }
}

/// Runs a breadth-first search from `root` and returns the first edge that
/// reaches an already-visited vertex (a parallel edge to the parent counts).
fn first_bfs_closure(g: &Graph, root: usize) -> BfsClosure {
    let mut parent = vec![usize::MAX; g.n()];
    let mut parent_edge = vec![usize::MAX; g.n()];
    let mut visited = vec![false; g.n()];
    let mut queue = VecDeque::new();
    visited[root] = true;
    queue.push_back(root);

    // Stable edge ids so one tree-edge instance can be skipped even among
    // parallel edges.
    let edges = g.edges();
    let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (eid, &(u, v)) in edges.iter().enumerate() {
        incidence[u].push((v, eid));
        incidence[v].push((u, eid));
    }

    while let Some(u) = queue.pop_front() {
        for &(w, eid) in &incidence[u] {
            if eid == parent_edge[u] {
                continue;
            }
            if visited[w] {
                return BfsClosure {
                    from: u,
                    to: w,
                    parent,
                };
            }
            visited[w] = true;
            parent[w] = u;
            parent_edge[w] = eid;
            queue.push_back(w);
        }
    }
    unreachable!("a contracted cubic graph always closes a cycle")
}
