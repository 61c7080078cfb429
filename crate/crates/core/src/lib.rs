//! Link patterns, the Temperley-Lieb action on them, and the Catalan
//! generating tree shared with Dyck paths and 123-avoiding permutations.
//!
//! The tree for link patterns inserts a strand `(2n-1, 0)` into a pattern of
//! `n - 1` strands and takes every preimage of the result under `e_{2n-1}`.
//! The children are ordered by exposure, which makes the tree obey the
//! succession rule `(k) -> (2)(3)...(k+1)` and gives bijections to the other
//! Catalan families through path codes.

pub mod enumeration;
pub mod error;
pub mod io;
pub mod link_pattern;
pub mod oracle;
pub mod stats;
pub mod temperley_lieb;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use link_pattern::{ArcDiagram, LinkPattern};
pub use temperley_lieb::{apply_generator, apply_word, preimages, ActionResult, GeneratorIndex};
pub use tree::{
    iterate_level, node_at, tree_root, DyckPath, Family, LevelIter, PathCode, Perm123,
    SuccessionRule, TreeNode,
};
