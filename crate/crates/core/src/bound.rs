//! Minimum edge count needed to make a tree r-connected:
//! ceil(1/2 * sum over i < r of (r-i) * l_i), where l_i counts degree-i
//! vertices. Each deficient vertex must gain r - deg edges and one edge
//! serves two endpoints.

use crate::error::{AugError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundResult {
    pub bound: usize,
    pub deficiency_sum: usize,
}

pub fn augmentation_lower_bound(t: &Graph, r: usize) -> Result<BoundResult> {
    if !t.is_tree() {
        return Err(AugError::NotATree);
    }
    let n = t.n();
    if r < 2 || r >= n {
        return Err(AugError::InvalidTarget { r, n });
    }
    let deficiency_sum: usize = t
        .degree_histogram()
        .iter()
        .filter(|(&deg, _)| deg < r)
        .map(|(&deg, &count)| (r - deg) * count)
        .sum();
    Ok(BoundResult {
        bound: (deficiency_sum + 1) / 2,
        deficiency_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{cycle, path, star};

    #[test]
    fn path_bounds() {
        assert_eq!(augmentation_lower_bound(&path(4), 2).unwrap().bound, 1);
        // P7, r=6: l_1=2, l_2=5 -> ceil((5*2 + 4*5)/2) = 15 = |E(K7)| - |E(P7)|
        let b = augmentation_lower_bound(&path(7), 6).unwrap();
        assert_eq!(b.deficiency_sum, 30);
        assert_eq!(b.bound, 15);
        assert_eq!(b.bound, 21 - 6);
    }

    #[test]
    fn star_bound() {
        assert_eq!(augmentation_lower_bound(&star(4), 3).unwrap().bound, 3);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            augmentation_lower_bound(&cycle(5), 2),
            Err(AugError::NotATree)
        ));
        assert!(matches!(
            augmentation_lower_bound(&path(4), 4),
            Err(AugError::InvalidTarget { .. })
        ));
        assert!(augmentation_lower_bound(&path(4), 1).is_err());
    }

    #[test]
    fn monotone_in_r() {
        for tree in [path(9), star(7)] {
            let mut prev = 0;
            for r in 2..tree.n() {
                let b = augmentation_lower_bound(&tree, r).unwrap().bound;
                assert!(b >= prev);
                assert!(b >= 1); // trees always have l_1 >= 2
                prev = b;
            }
        }
    }
}
