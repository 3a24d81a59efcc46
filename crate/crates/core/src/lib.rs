//! Minimum r-vertex-connectivity augmentation of trees.
//!
//! Paths become Harary graphs H_{r,n} via cycle closure, diameters, and
//! circulant rounds; other trees go through leaf chaining and (C,j)-block-
//! tree pairing rounds. The edge count always meets the degree-deficiency
//! lower bound ceil(1/2 * sum_{i<r} (r-i) l_i), and an independent
//! flow-based connectivity checker plus a brute-force oracle verify the
//! results.

#![forbid(unsafe_code)]

pub mod aug;
pub mod block_tree;
pub mod bound;
pub mod error;
pub mod graph;
pub mod harary;
pub mod json;
pub mod nonpath;
pub mod path;
pub mod testutil;
pub mod verify;

pub use aug::{AugmentationSet, RoundTag};
pub use bound::{augmentation_lower_bound, BoundResult};
pub use error::{AugError, Result};
pub use graph::{Graph, SeparatorWitness};
pub use harary::{harary_graph, is_harary, HararySpec};
pub use nonpath::{nonpath_augmentation, nonpath_augmentation_with};
pub use path::{path_augmentation, path_order, PathOrder};
pub use verify::{
    brute_force_min_augmentation, random_tree, verify_augmentation, AugmentationReport,
    Optimality, OracleBudget,
};

/// Dispatch on the input shape: path augmentation for paths, block-tree
/// rounds otherwise.
pub fn augment_tree(t: &Graph, r: usize) -> Result<(Graph, AugmentationSet)> {
    if t.is_path()? {
        path_augmentation(t, r)
    } else {
        nonpath_augmentation(t, r)
    }
}
