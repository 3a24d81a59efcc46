//! Path augmentation: close the path into a cycle, add diameters when r is
//! odd, then circulant rounds. The output is the Harary graph H_{r,n} under
//! the path-order labeling.

use crate::aug::{AugmentationSet, RoundTag};
use crate::error::{AugError, Result};
use crate::graph::Graph;

/// Ordering v_1..v_n of a path's vertices along the path, starting from the
/// degree-1 endpoint with the smaller label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathOrder {
    sequence: Vec<usize>,
}

impl PathOrder {
    /// v_i for 1-based i.
    pub fn vertex(&self, i: usize) -> usize {
        self.sequence[i - 1]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Relabel `g` so that the vertex at path position i becomes label i.
    pub fn relabel_to_positions(&self, g: &Graph) -> Graph {
        let n = g.n();
        let mut pos = vec![0; n + 1];
        for (i, &v) in self.sequence.iter().enumerate() {
            pos[v] = i + 1;
        }
        Graph::from_edges(n, g.edges().map(|(u, v)| (pos[u], pos[v]))).unwrap()
    }
}

pub fn path_order(t: &Graph) -> Result<PathOrder> {
    if !t.is_path()? {
        return Err(AugError::NotAPath);
    }
    let n = t.n();
    if n == 1 {
        return Ok(PathOrder { sequence: vec![1] });
    }
    let start = *t.leaves().iter().min().unwrap();
    let mut sequence = Vec::with_capacity(n);
    sequence.push(start);
    let mut prev = 0;
    let mut cur = start;
    while sequence.len() < n {
        let next = t
            .neighbors(cur)
            .find(|&w| w != prev)
            .expect("path traversal cannot dead-end early");
        sequence.push(next);
        prev = cur;
        cur = next;
    }
    Ok(PathOrder { sequence })
}

/// Algorithm: step 2 closes the cycle; for odd r, add {v_i, v_{floor(n/2)+i}}
/// for i = 1..ceil(n/2); then for j = 2..floor(r/2) add {v_i, v_{(i+j) mod n}}
/// for every i. Already-present edges are skipped so the graph stays simple.
pub fn path_augmentation(t: &Graph, r: usize) -> Result<(Graph, AugmentationSet)> {
    let order = path_order(t)?;
    let n = t.n();
    if r < 2 || r >= n {
        return Err(AugError::InvalidTarget { r, n });
    }
    let mut h = t.clone();
    let mut eca = AugmentationSet::new();
    let mut add = |h: &mut Graph, u: usize, v: usize, tag: RoundTag| -> Result<()> {
        if !h.has_edge(u, v) {
            h.add_edge(u, v)?;
            eca.push(u, v, tag)?;
        }
        Ok(())
    };

    add(&mut h, order.vertex(1), order.vertex(n), RoundTag::CycleClosure)?;

    if r % 2 == 1 {
        for i in 1..=n.div_ceil(2) {
            add(
                &mut h,
                order.vertex(i),
                order.vertex(i + n / 2),
                RoundTag::Diameter,
            )?;
        }
    }

    for j in 2..=r / 2 {
        for i in 1..=n {
            let target = if i + j <= n { i + j } else { (i + j) % n };
            add(&mut h, order.vertex(i), order.vertex(target), RoundTag::Circulant { j })?;
        }
    }

    Ok((h, eca))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aug::RoundTag;
    use crate::bound::augmentation_lower_bound;
    use crate::harary::{is_harary, harary_graph, HararySpec};
    use crate::testutil::{complete, cycle, path, star};

    #[test]
    fn path_order_is_deterministic() {
        let t = Graph::from_edges(5, [(2, 5), (5, 1), (1, 3), (3, 4)]).unwrap();
        assert_eq!(path_order(&t).unwrap().sequence(), &[2, 5, 1, 3, 4]);
        let single = Graph::from_edges(2, [(1, 2)]).unwrap();
        assert_eq!(path_order(&single).unwrap().sequence(), &[1, 2]);
        assert_eq!(
            path_order(&path(7)).unwrap().sequence(),
            &[1, 2, 3, 4, 5, 6, 7]
        );
    }

    #[test]
    fn path_order_rejects_non_paths() {
        assert!(matches!(path_order(&star(4)), Err(AugError::NotAPath)));
        assert!(matches!(path_order(&cycle(4)), Err(AugError::NotATree)));
    }

    #[test]
    fn p4_r2_closes_the_cycle() {
        let (h, eca) = path_augmentation(&path(4), 2).unwrap();
        assert_eq!(eca.edges(), &[(1, 4)]);
        assert_eq!(eca.tags(), &[RoundTag::CycleClosure]);
        assert_eq!(h, cycle(4));
    }

    #[test]
    fn p5_r3_trace() {
        let (h, eca) = path_augmentation(&path(5), 3).unwrap();
        assert_eq!(eca.edges(), &[(1, 5), (1, 3), (2, 4), (3, 5)]);
        assert_eq!(eca.len(), 4);
        assert_eq!(
            eca.len(),
            augmentation_lower_bound(&path(5), 3).unwrap().bound
        );
        assert_eq!(h.vertex_connectivity().0, 3);
    }

    #[test]
    fn p7_r6_yields_k7() {
        let (h, eca) = path_augmentation(&path(7), 6).unwrap();
        assert_eq!(eca.len(), 15);
        assert_eq!(h, complete(7));
    }

    #[test]
    fn p7_r5_is_harary() {
        let (h, eca) = path_augmentation(&path(7), 5).unwrap();
        assert_eq!(
            eca.len(),
            augmentation_lower_bound(&path(7), 5).unwrap().bound
        );
        assert!(is_harary(&h, HararySpec::new(5, 7).unwrap()));
        assert_eq!(h.vertex_connectivity().0, 5);
    }

    #[test]
    fn invalid_targets() {
        assert!(matches!(
            path_augmentation(&path(4), 5),
            Err(AugError::InvalidTarget { .. })
        ));
        assert!(matches!(
            path_augmentation(&path(3), 3),
            Err(AugError::InvalidTarget { .. })
        ));
        assert!(path_augmentation(&path(3), 2).is_ok());
    }

    #[test]
    fn scrambled_labels_still_give_harary_output() {
        let t = Graph::from_edges(6, [(3, 1), (1, 6), (6, 2), (2, 5), (5, 4)]).unwrap();
        let order = path_order(&t).unwrap();
        let (h, eca) = path_augmentation(&t, 4).unwrap();
        assert_eq!(
            eca.len(),
            augmentation_lower_bound(&t, 4).unwrap().bound
        );
        let relabeled = order.relabel_to_positions(&h);
        assert_eq!(relabeled, harary_graph(HararySpec::new(4, 6).unwrap()));
    }

    #[test]
    fn duplicate_skip_only_fires_at_r_near_n() {
        for n in 4..=12 {
            for r in 2..n.min(9) {
                let t = path(n);
                let (h, eca) = path_augmentation(&t, r).unwrap();
                let expected_attempts = {
                    let mut count = 1; // cycle closure
                    if r % 2 == 1 {
                        count += n.div_ceil(2);
                    }
                    count + (r / 2 - 1) * n
                };
                if r < n - 1 {
                    assert_eq!(eca.len(), expected_attempts, "n={n} r={r}");
                } else {
                    assert_eq!(h, complete(n), "n={n} r={r}");
                }
            }
        }
    }
}
