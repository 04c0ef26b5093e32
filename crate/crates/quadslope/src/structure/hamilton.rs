//! Exact Hamiltonian cycle detection by backtracking.

use crate::graph::Graph;

/// Returns a Hamiltonian cycle as a vertex list, or `None` if none exists.
///
/// Backtracking from vertex 0 with a canonical tie-break (the second vertex
/// is smaller than the last) so each cycle is considered once per direction.
pub fn find_hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let mut path = vec![0usize];
    let mut visited = vec![false; n];
    visited[0] = true;
    if extend(g, &mut path, &mut visited) {
        Some(path)
    } else {
        None
    }
}

fn extend(g: &Graph, path: &mut Vec<usize>, visited: &mut Vec<bool>) -> bool {
    let n = g.n();
    if path.len() == n {
        let last = *path.last().unwrap();
        return g.has_edge(last, 0) && path[1] < last;
    }
    let current = *path.last().unwrap();
    for &w in g.neighbors(current) {
        if visited[w] {
            continue;
        }
        // Any unvisited vertex (other than the frontier) left with fewer
        // than two unvisited-or-terminal neighbors can never be toured.
        visited[w] = true;
        path.push(w);
        if prunable(g, path, visited) {
            path.pop();
            visited[w] = false;
            continue;
        }
        if extend(g, path, visited) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}

fn prunable(g: &Graph, path: &[usize], visited: &[bool]) -> bool {
    if path.len() + 2 > g.n() {
        return false;
    }
    let head = *path.last().unwrap();
    for v in 0..g.n() {
        if visited[v] {
            continue;
        }
        let usable = g
            .neighbors(v)
            .iter()
            .filter(|&&w| !visited[w] || w == head || w == 0)
            .count();
        if usable < 2 {
            return true;
        }
    }
    false
}
