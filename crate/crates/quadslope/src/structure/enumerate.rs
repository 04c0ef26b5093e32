//! Connected cubic graph enumeration up to isomorphism, exact isomorphism
//! testing, and pairing-model random generation.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::StructureError;
use crate::graph::Graph;

/// An isomorphism from `a` to `b` as a vertex map, if one exists.
///
/// Backtracking over vertex images in breadth-first order with exact
/// adjacency-pattern matching; fast at the orders this crate works with.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let n = a.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return None;
    }

    let order = bfs_order(a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Whether two simple graphs are isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn assign(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    'candidates: for w in 0..b.n() {
        if used[w] || a.degree(u) != b.degree(w) {
            continue;
        }
        for &x in &order[..depth] {
            if a.has_edge(u, x) != b.has_edge(w, map[x]) {
                continue 'candidates;
            }
        }
        map[u] = w;
        used[w] = true;
        if assign(a, b, order, depth + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[w] = false;
    }
    false
}

/// A relabeling-invariant fingerprint: the sorted multiset of sorted
/// distance-matrix rows. Distinguishes most small cubic graphs; exact
/// isomorphism settles the rest.
fn distance_profile(g: &Graph) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut rows = Vec::with_capacity(n);
    for start in 0..n {
        let mut dist = vec![u8::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == u8::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist.sort_unstable();
        rows.push(dist);
    }
    rows.sort_unstable();
    rows
}

/// Enumerates all connected cubic graphs on `n` vertices up to isomorphism,
/// each class appearing exactly once.
///
/// Supported for even `n` with `4 <= n <= 12`; the top of the range takes
/// minutes, the rest is fast.
pub fn enumerate_cubic_graphs(n: usize) -> Result<Vec<Graph>, StructureError> {
    if n % 2 != 0 || !(4..=12).contains(&n) {
        return Err(StructureError::UnsupportedOrder(n));
    }
    let mut buckets: HashMap<Vec<Vec<u8>>, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();

    // Labeled generation: repeatedly complete the lowest incomplete vertex
    // with a set of strictly larger partners, so every labeled cubic graph
    // appears exactly once. Relabeling freedom pins vertex 0's neighborhood
    // to {1, 2, 3}.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    adj[0] = vec![1, 2, 3];
    for v in 1..=3 {
        adj[v].push(0);
    }
    complete(&mut adj, n, &mut |adj| {
        let edges: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        let g = Graph::simple(n, &edges).expect("generator emits simple graphs");
        if !g.is_connected() {
            return;
        }
        let key = distance_profile(&g);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().all(|&i| !are_isomorphic(&out[i], &g)) {
            bucket.push(out.len());
            out.push(g);
        }
    });
    Ok(out)
}

fn complete(adj: &mut Vec<Vec<usize>>, n: usize, emit: &mut impl FnMut(&Vec<Vec<usize>>)) {
    let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
        emit(adj);
        return;
    };
    let missing = 3 - adj[v].len();
    let candidates: Vec<usize> = (v + 1..n)
        .filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w))
        .collect();
    choose_partners(adj, v, missing, 0, &candidates, n, emit);
}

fn choose_partners(
    adj: &mut Vec<Vec<usize>>,
    v: usize,
    missing: usize,
    from: usize,
    candidates: &[usize],
    n: usize,
    emit: &mut impl FnMut(&Vec<Vec<usize>>),
) {
    if missing == 0 {
        complete(adj, n, emit);
        return;
    }
    if candidates.len().saturating_sub(from) < missing {
        return;
    }
    for i in from..candidates.len() {
        let w = candidates[i];
        if adj[w].len() >= 3 {
            continue;
        }
        adj[v].push(w);
        adj[w].push(v);
        choose_partners(adj, v, missing - 1, i + 1, candidates, n, emit);
        adj[v].pop();
        adj[w].pop();
    }
}

/// Uniform random connected cubic graph by the pairing model: three points
/// per vertex, a uniform perfect matching on the points, rejected until the
/// projected graph is simple and connected.
pub fn random_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph, StructureError> {
    if n % 2 != 0 || n < 4 {
        return Err(StructureError::UnsupportedOrder(n));
    }
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut simple = true;
        let mut seen = HashSet::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0] / 3, pair[1] / 3);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                simple = false;
                break;
            }
            edges.push((u, v));
        }
        if !simple {
            continue;
        }
        let g = Graph::simple(n, &edges).expect("pairs checked simple");
        if g.is_connected() {
            return Ok(g);
        }
    }
}
