//! Named graphs used in tests, benchmarks, and documentation examples.

use crate::graph::Graph;

/// The complete graph on four vertices.
pub fn k4() -> Graph {
    Graph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// The complete bipartite graph with classes `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    Graph::simple(6, &edges).unwrap()
}

/// The triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Graph {
    Graph::simple(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

/// The 3-cube graph Q3.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::simple(8, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5usize {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::simple(10, &edges).unwrap()
}

/// The Heawood graph from its LCF notation `[5, -5]^7`.
pub fn heawood() -> Graph {
    let mut edges = Vec::new();
    for i in 0..14usize {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            let j = (i + 5) % 14;
            if i < j {
                edges.push((i, j));
            }
        } else {
            let j = (i + 9) % 14;
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::simple(14, &edges).unwrap()
}

/// Tietze's graph: a triangle joined to a 9-cycle core (12 vertices, girth 3,
/// 3-connected, not Hamiltonian).
pub fn tietze() -> Graph {
    Graph::simple(
        12,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
            (0, 8), (8, 7), (7, 6), (6, 5),
            (9, 10), (10, 11), (11, 9),
            (8, 3), (6, 2), (1, 9), (7, 11), (4, 10),
        ],
    )
    .unwrap()
}

/// Two copies of K4 minus an edge, joined by two edges across their
/// degree-two vertices. Cubic, 8 vertices, with a 2-edge cut.
pub fn two_gadget() -> Graph {
    Graph::simple(
        8,
        &[
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
            (4, 5), (4, 6), (4, 7), (5, 6), (5, 7),
            (2, 6), (3, 7),
        ],
    )
    .unwrap()
}

/// Two 5-vertex gadgets (K4 minus an edge plus an apex joined to both
/// degree-two vertices) linked by a bridge between the apexes.
pub fn bridged_gadget() -> Graph {
    Graph::simple(
        10,
        &[
            (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (4, 3),
            (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (9, 7), (9, 8),
            (4, 9),
        ],
    )
    .unwrap()
}

/// Two vertices joined by three internally disjoint paths of lengths 1, 2, 2.
pub fn theta_122() -> Graph {
    Graph::simple(4, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]).unwrap()
}
