//! Ordered augmentation edge sets with per-edge provenance.

use std::fmt;

use crate::error::{AugError, Result};
use crate::graph::Graph;

/// Where in the algorithm an augmentation edge came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundTag {
    /// Leaf chaining before block-tree rounds.
    LeafChain,
    /// The path-to-cycle edge {v_1, v_n}.
    CycleClosure,
    /// Odd-r diameter pass.
    Diameter,
    /// Circulant pass with step j.
    Circulant { j: usize },
    /// Main-loop pairing in block-tree round j.
    MainLoop { j: usize },
    /// Boundary-case handler k.
    Boundary { case: u8 },
    /// Dense-regime construction: all non-edges except a skipped matching.
    Complement,
    /// Edge found by the exhaustive oracle, not by the algorithm.
    Oracle,
}

impl fmt::Display for RoundTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RoundTag::LeafChain => write!(f, "leaf-chain"),
            RoundTag::CycleClosure => write!(f, "cycle-closure"),
            RoundTag::Diameter => write!(f, "diameter"),
            RoundTag::Circulant { j } => write!(f, "circulant-round-{j}"),
            RoundTag::MainLoop { j } => write!(f, "main-loop-round-{j}"),
            RoundTag::Boundary { case } => write!(f, "boundary-case-{case}"),
            RoundTag::Complement => write!(f, "complement"),
            RoundTag::Oracle => write!(f, "oracle"),
        }
    }
}

/// The edges added by an augmentation run, in addition order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AugmentationSet {
    edges: Vec<(usize, usize)>,
    tags: Vec<RoundTag>,
}

impl AugmentationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in addition order, normalized to u < v.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tags(&self) -> &[RoundTag] {
        &self.tags
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), RoundTag)> + '_ {
        self.edges.iter().copied().zip(self.tags.iter().copied())
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }

    pub fn push(&mut self, u: usize, v: usize, tag: RoundTag) -> Result<()> {
        if u == v {
            return Err(AugError::InvalidCandidate(u, v, "self-loop"));
        }
        if self.contains(u, v) {
            return Err(AugError::InvalidCandidate(u, v, "duplicate augmentation edge"));
        }
        self.edges.push((u.min(v), u.max(v)));
        self.tags.push(tag);
        Ok(())
    }

    /// Builds base + self. Fails if any edge already exists in `base`.
    pub fn apply_to(&self, base: &Graph) -> Result<Graph> {
        let mut h = base.clone();
        for &(u, v) in &self.edges {
            if base.has_edge(u, v) {
                return Err(AugError::InvalidCandidate(u, v, "edge already in input graph"));
            }
            h.add_edge(u, v)?;
        }
        Ok(h)
    }
}

impl FromIterator<((usize, usize), RoundTag)> for AugmentationSet {
    fn from_iter<I: IntoIterator<Item = ((usize, usize), RoundTag)>>(iter: I) -> Self {
        let mut set = AugmentationSet::new();
        for ((u, v), tag) in iter {
            set.push(u, v, tag).expect("invalid edge in collect");
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::path;

    #[test]
    fn rejects_duplicates_and_loops() {
        let mut set = AugmentationSet::new();
        set.push(1, 4, RoundTag::CycleClosure).unwrap();
        assert!(set.push(4, 1, RoundTag::Diameter).is_err());
        assert!(set.push(2, 2, RoundTag::Diameter).is_err());
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn apply_rejects_existing_edges() {
        let mut set = AugmentationSet::new();
        set.push(1, 2, RoundTag::CycleClosure).unwrap();
        assert!(set.apply_to(&path(4)).is_err());

        let mut ok = AugmentationSet::new();
        ok.push(1, 4, RoundTag::CycleClosure).unwrap();
        let h = ok.apply_to(&path(4)).unwrap();
        assert_eq!(h.edge_count(), 4);
    }

    #[test]
    fn tag_rendering() {
        assert_eq!(RoundTag::Circulant { j: 3 }.to_string(), "circulant-round-3");
        assert_eq!(RoundTag::Boundary { case: 4 }.to_string(), "boundary-case-4");
        assert_eq!(RoundTag::MainLoop { j: 2 }.to_string(), "main-loop-round-2");
    }
}
