//! Harary graphs H_{r,n}: the minimum-edge r-connected graphs on n vertices,
//! built circulant-style around a circle.

use crate::error::{AugError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HararySpec {
    pub r: usize,
    pub n: usize,
}

impl HararySpec {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r < 2 || r >= n {
            return Err(AugError::InvalidTarget { r, n });
        }
        Ok(HararySpec { r, n })
    }
}

/// 1-based index arithmetic around the circle; residue 0 maps to n.
fn wrap(i: usize, n: usize) -> usize {
    let m = i % n;
    if m == 0 {
        n
    } else {
        m
    }
}

/// Construct H_{r,n}.
///
/// Even r: vertex i is adjacent to i±1,...,i±r/2 (mod n). Odd r, even n:
/// nearest (r-1)/2 each way plus the diametric i <-> i+n/2. Odd r, odd n:
/// H_{r-1,n} plus edges {i, i+(n-1)/2} for 1 <= i <= (n+1)/2.
pub fn harary_graph(spec: HararySpec) -> Graph {
    let HararySpec { r, n } = spec;
    let mut g = Graph::new(n);
    let half = r / 2;
    for i in 1..=n {
        for d in 1..=half {
            let j = wrap(i + d, n);
            if !g.has_edge(i, j) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    if r % 2 == 1 {
        if n % 2 == 0 {
            for i in 1..=n / 2 {
                let j = i + n / 2;
                if !g.has_edge(i, j) {
                    g.add_edge(i, j).unwrap();
                }
            }
        } else {
            for i in 1..=(n + 1) / 2 {
                let j = i + (n - 1) / 2;
                if !g.has_edge(i, j) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
    }
    g
}

/// Exact edge-set equality with H_{r,n} under the identity labeling.
pub fn is_harary(g: &Graph, spec: HararySpec) -> bool {
    if g.n() != spec.n {
        return false;
    }
    let h = harary_graph(spec);
    g.edge_count() == h.edge_count() && g.edges().all(|(u, v)| h.has_edge(u, v))
}
