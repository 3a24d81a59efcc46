//! Small labeled-graph constructors shared by unit and integration tests.

use crate::graph::Graph;

/// Path 1-2-...-n.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).unwrap()
}

/// Cycle 1-2-...-n-1.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::from_edges(n, edges).unwrap()
}

/// Star with center 1 and leaves 2..=n (K_{1,n-1}).
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (2..=n).map(|v| (1, v))).unwrap()
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)))).unwrap()
}

/// Spider: `legs` legs of length `len` hanging off center 1.
/// Vertices are numbered center-first, then leg by leg outward.
pub fn spider(legs: usize, len: usize) -> Graph {
    let n = 1 + legs * len;
    let mut edges = Vec::new();
    let mut next = 2;
    for _ in 0..legs {
        let mut prev = 1;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
