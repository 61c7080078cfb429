//! Generating trees obeying the Catalan succession rule `(k) -> (2)(3)...(k+1)`.
//!
//! A [`SuccessionRule`] describes one family: its root, the label of a node
//! (equal to its number of children), how to produce the child of a given
//! rank, and how to walk back up. Children are ranked from 1 in order of
//! ascending label, so the child of rank `r` always has label `r + 1`.
//!
//! Three rules are provided:
//!
//! * [`LinkPatternTree`]: insert a strand at the wrap position, then take the
//!   preimages of `e_{2n-1}`.
//! * [`DyckTree`]: add a peak at each point of the last descent.
//! * [`PermTree`]: insert the new maximum into a 123-avoiding permutation.
//!
//! [`LevelIter`] streams one level depth-first with an explicit stack, so it
//! never holds more than one root-to-leaf path in memory.

pub mod dyck;
pub mod lp;
pub mod perm;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;

pub use dyck::{DyckPath, DyckTree, Step};
pub use lp::{m_op, LinkPatternTree};
pub use perm::{Perm123, PermTree};

pub trait SuccessionRule {
    type Node: Clone;
    /// Whatever a node needs to produce its children cheaply, one at a time.
    type Expansion;

    fn root(&self) -> Self::Node;

    /// Level of a node; the root is level 1.
    fn level(&self, node: &Self::Node) -> usize;

    /// The node's label, which is also its number of children.
    fn label(&self, node: &Self::Node) -> usize;

    fn expand(&self, node: &Self::Node) -> Self::Expansion;

    /// Number of children of the expanded node.
    fn width(&self, expansion: &Self::Expansion) -> usize;

    /// The child of rank `rank` (1-based). Panics if the rank exceeds the width.
    fn child(&self, expansion: &Self::Expansion, rank: usize) -> Self::Node;

    fn parent(&self, node: &Self::Node) -> Result<Self::Node>;

    /// Rank of the node among its siblings.
    fn child_rank(&self, node: &Self::Node) -> Result<usize>;

    fn children(&self, node: &Self::Node) -> Vec<Self::Node> {
        let exp = self.expand(node);
        (1..=self.width(&exp))
            .map(|rank| self.child(&exp, rank))
            .collect()
    }

    fn path_code(&self, node: &Self::Node) -> PathCode {
        let mut ranks = Vec::with_capacity(self.level(node).saturating_sub(1));
        let mut current = node.clone();
        while let Ok(rank) = self.child_rank(&current) {
            ranks.push(rank);
            current = self
                .parent(&current)
                .expect("a node with a rank has a parent");
        }
        ranks.reverse();
        PathCode(ranks)
    }

    fn node_at(&self, code: &PathCode) -> Result<Self::Node> {
        let mut node = self.root();
        for &rank in code.ranks() {
            let exp = self.expand(&node);
            let width = self.width(&exp);
            if rank == 0 || rank > width {
                return Err(Error::RankOutOfRange {
                    rank,
                    children: width,
                });
            }
            node = self.child(&exp, rank);
        }
        Ok(node)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    Lp,
    Dyck,
    Perm,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Lp, Family::Dyck, Family::Perm];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lp => "lp",
            Family::Dyck => "dyck",
            Family::Perm => "perm",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lp" => Ok(Family::Lp),
            "dyck" => Ok(Family::Dyck),
            "perm" => Ok(Family::Perm),
            other => Err(Error::parse(1, format!("unknown family {other:?}"))),
        }
    }
}

/// Sibling ranks from the root down to a node.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PathCode(Vec<usize>);

impl PathCode {
    /// Validates `r_1 <= 2`, `r_{t+1} <= r_t + 1`, and that every rank is positive.
    pub fn new(ranks: Vec<usize>) -> Result<Self> {
        let mut bound = 2;
        for (t, &r) in ranks.iter().enumerate() {
            if r == 0 {
                return Err(Error::InvalidCode(format!(
                    "rank at step {} is zero",
                    t + 1
                )));
            }
            if r > bound {
                return Err(Error::InvalidCode(format!(
                    "rank {r} at step {} exceeds {bound}",
                    t + 1
                )));
            }
            bound = r + 1;
        }
        Ok(PathCode(ranks))
    }

    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    /// Level of the addressed node.
    pub fn level(&self) -> usize {
        self.0.len() + 1
    }
}

impl fmt::Display for PathCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

struct Frame<E> {
    expansion: E,
    width: usize,
    next: usize,
    level: usize,
}

/// Depth-first stream of every node at one level of a generating tree.
pub struct LevelIter<R: SuccessionRule> {
    rule: R,
    target: usize,
    stack: Vec<Frame<R::Expansion>>,
    pending: Option<R::Node>,
    peak_frames: usize,
}

impl<R: SuccessionRule> LevelIter<R> {
    /// All nodes at level `n` (empty for `n == 0`).
    pub fn new(rule: R, n: usize) -> Self {
        let root = rule.root();
        Self::from_node(rule, root, n)
    }

    /// All descendants of `start` at level `target`, in rank order.
    pub fn from_node(rule: R, start: R::Node, target: usize) -> Self {
        let mut iter = LevelIter {
            rule,
            target,
            stack: Vec::with_capacity(target),
            pending: None,
            peak_frames: 0,
        };
        let level = iter.rule.level(&start);
        if level == target {
            iter.pending = Some(start);
        } else if level < target {
            iter.push(&start, level);
        }
        iter
    }

    fn push(&mut self, node: &R::Node, level: usize) {
        let expansion = self.rule.expand(node);
        let width = self.rule.width(&expansion);
        self.stack.push(Frame {
            expansion,
            width,
            next: 1,
            level,
        });
        self.peak_frames = self.peak_frames.max(self.stack.len());
    }

    /// Largest number of stack frames held at any point so far.
    pub fn peak_frames(&self) -> usize {
        self.peak_frames
    }
}

impl<R: SuccessionRule> Iterator for LevelIter<R> {
    type Item = R::Node;

    fn next(&mut self) -> Option<R::Node> {
        if let Some(node) = self.pending.take() {
            return Some(node);
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next > top.width {
                self.stack.pop();
                continue;
            }
            let rank = top.next;
            top.next += 1;
            let level = top.level + 1;
            let child = self.rule.child(&top.expansion, rank);
            if level == self.target {
                return Some(child);
            }
            self.push(&child, level);
        }
    }
}

/// Nodes at a shallow level whose subtrees together cover level `n`, in
/// rank order. Each subtree can be streamed independently.
pub fn shards<R: SuccessionRule + Copy>(rule: R, n: usize, jobs: usize) -> Vec<R::Node> {
    let wanted = 8 * jobs.max(1);
    let mut level = 1;
    let mut nodes = vec![rule.root()];
    while level < n && nodes.len() < wanted {
        nodes = nodes.iter().flat_map(|node| rule.children(node)).collect();
        level += 1;
    }
    nodes
}

/// Folds every node at level `n` on `jobs` worker threads. `fold` and
/// `merge` must together be insensitive to grouping and order.
pub fn par_fold_level<R, T, F, M>(rule: R, n: usize, jobs: usize, fold: F, merge: M) -> T
where
    R: SuccessionRule + Copy + Send + Sync,
    R::Node: Send + Sync,
    T: Default + Send,
    F: Fn(T, R::Node) -> T + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n == 0 {
        return T::default();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let roots = shards(rule, n, jobs);
    pool.install(|| {
        roots
            .par_iter()
            .map(|root| LevelIter::from_node(rule, root.clone(), n).fold(T::default(), &fold))
            .reduce(T::default, &merge)
    })
}

/// A node of any of the three trees.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TreeNode {
    Lp(LinkPattern),
    Dyck(DyckPath),
    Perm(Perm123),
}

macro_rules! dispatch {
    ($node:expr, $rule:ident, $inner:ident => $body:expr, $wrap:ident) => {
        match $node {
            TreeNode::Lp($inner) => {
                let $rule = LinkPatternTree;
                let $wrap = TreeNode::Lp;
                $body
            }
            TreeNode::Dyck($inner) => {
                let $rule = DyckTree;
                let $wrap = TreeNode::Dyck;
                $body
            }
            TreeNode::Perm($inner) => {
                let $rule = PermTree;
                let $wrap = TreeNode::Perm;
                $body
            }
        }
    };
}

impl TreeNode {
    pub fn family(&self) -> Family {
        match self {
            TreeNode::Lp(_) => Family::Lp,
            TreeNode::Dyck(_) => Family::Dyck,
            TreeNode::Perm(_) => Family::Perm,
        }
    }

    pub fn level(&self) -> usize {
        dispatch!(self, rule, x => rule.level(x), _w)
    }

    pub fn label(&self) -> usize {
        dispatch!(self, rule, x => rule.label(x), _w)
    }

    pub fn children(&self) -> Vec<TreeNode> {
        dispatch!(self, rule, x => rule.children(x).into_iter().map(wrap).collect(), wrap)
    }

    pub fn parent(&self) -> Result<TreeNode> {
        dispatch!(self, rule, x => rule.parent(x).map(wrap), wrap)
    }

    pub fn child_rank(&self) -> Result<usize> {
        dispatch!(self, rule, x => rule.child_rank(x), _w)
    }

    pub fn path_code(&self) -> PathCode {
        dispatch!(self, rule, x => rule.path_code(x), _w)
    }

    pub fn as_link_pattern(&self) -> Option<&LinkPattern> {
        match self {
            TreeNode::Lp(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_dyck(&self) -> Option<&DyckPath> {
        match self {
            TreeNode::Dyck(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_perm(&self) -> Option<&Perm123> {
        match self {
            TreeNode::Perm(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeNode::Lp(p) => p.fmt(f),
            TreeNode::Dyck(d) => d.fmt(f),
            TreeNode::Perm(p) => p.fmt(f),
        }
    }
}

pub fn tree_root(family: Family) -> TreeNode {
    match family {
        Family::Lp => TreeNode::Lp(LinkPatternTree.root()),
        Family::Dyck => TreeNode::Dyck(DyckTree.root()),
        Family::Perm => TreeNode::Perm(PermTree.root()),
    }
}

pub fn node_at(family: Family, code: &PathCode) -> Result<TreeNode> {
    Ok(match family {
        Family::Lp => TreeNode::Lp(LinkPatternTree.node_at(code)?),
        Family::Dyck => TreeNode::Dyck(DyckTree.node_at(code)?),
        Family::Perm => TreeNode::Perm(PermTree.node_at(code)?),
    })
}

/// Level stream for any family.
pub enum LevelStream {
    Lp(LevelIter<LinkPatternTree>),
    Dyck(LevelIter<DyckTree>),
    Perm(LevelIter<PermTree>),
}

impl LevelStream {
    pub fn peak_frames(&self) -> usize {
        match self {
            LevelStream::Lp(it) => it.peak_frames(),
            LevelStream::Dyck(it) => it.peak_frames(),
            LevelStream::Perm(it) => it.peak_frames(),
        }
    }
}

impl Iterator for LevelStream {
    type Item = TreeNode;

    fn next(&mut self) -> Option<TreeNode> {
        match self {
            LevelStream::Lp(it) => it.next().map(TreeNode::Lp),
            LevelStream::Dyck(it) => it.next().map(TreeNode::Dyck),
            LevelStream::Perm(it) => it.next().map(TreeNode::Perm),
        }
    }
}

pub fn iterate_level(family: Family, n: usize) -> LevelStream {
    match family {
        Family::Lp => LevelStream::Lp(LevelIter::new(LinkPatternTree, n)),
        Family::Dyck => LevelStream::Dyck(LevelIter::new(DyckTree, n)),
        Family::Perm => LevelStream::Perm(LevelIter::new(PermTree, n)),
    }
}

/// Streams the level-`n` descendants of `start`.
pub fn iterate_from(start: &TreeNode, n: usize) -> LevelStream {
    match start {
        TreeNode::Lp(x) => LevelStream::Lp(LevelIter::from_node(LinkPatternTree, x.clone(), n)),
        TreeNode::Dyck(x) => LevelStream::Dyck(LevelIter::from_node(DyckTree, x.clone(), n)),
        TreeNode::Perm(x) => LevelStream::Perm(LevelIter::from_node(PermTree, x.clone(), n)),
    }
}

/// Family-erased version of [`shards`].
pub fn family_shards(family: Family, n: usize, jobs: usize) -> Vec<TreeNode> {
    match family {
        Family::Lp => shards(LinkPatternTree, n, jobs)
            .into_iter()
            .map(TreeNode::Lp)
            .collect(),
        Family::Dyck => shards(DyckTree, n, jobs)
            .into_iter()
            .map(TreeNode::Dyck)
            .collect(),
        Family::Perm => shards(PermTree, n, jobs)
            .into_iter()
            .map(TreeNode::Perm)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_code_validation() {
        assert!(PathCode::new(vec![]).is_ok());
        assert!(PathCode::new(vec![2, 3, 4, 1, 2]).is_ok());
        assert!(matches!(PathCode::new(vec![3]), Err(Error::InvalidCode(_))));
        assert!(matches!(
            PathCode::new(vec![1, 3]),
            Err(Error::InvalidCode(_))
        ));
        assert!(matches!(PathCode::new(vec![0]), Err(Error::InvalidCode(_))));
        assert_eq!(PathCode::new(vec![2, 3]).unwrap().to_string(), "2,3");
        assert_eq!(PathCode::default().to_string(), "");
        assert_eq!(PathCode::new(vec![1, 2]).unwrap().level(), 3);
    }

    #[test]
    fn roots() {
        assert_eq!(tree_root(Family::Lp).to_string(), "n=1;0-1");
        assert_eq!(tree_root(Family::Dyck).to_string(), "UD");
        assert_eq!(tree_root(Family::Perm).to_string(), "1");
        for family in Family::ALL {
            let root = tree_root(family);
            assert_eq!(root.label(), 2);
            assert_eq!(root.level(), 1);
            assert_eq!(root.parent(), Err(Error::AtRoot));
            assert_eq!(root.child_rank(), Err(Error::AtRoot));
            assert_eq!(root.path_code(), PathCode::default());
        }
        let kids: Vec<String> = tree_root(Family::Perm)
            .children()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(kids, vec!["1 2", "2 1"]);
    }

    #[test]
    fn levels_are_catalan_sized() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for family in Family::ALL {
            assert_eq!(iterate_level(family, 0).count(), 0);
            for (n, &expected) in catalan.iter().enumerate().skip(1) {
                assert_eq!(iterate_level(family, n).count(), expected, "{family} n={n}");
            }
        }
    }

    #[test]
    fn level_iter_order_matches_children() {
        for family in Family::ALL {
            let via_children: Vec<TreeNode> = tree_root(family)
                .children()
                .iter()
                .flat_map(|c| c.children())
                .flat_map(|c| c.children())
                .collect();
            let streamed: Vec<TreeNode> = iterate_level(family, 4).collect();
            assert_eq!(streamed, via_children);
        }
    }

    #[test]
    fn node_at_rejects_out_of_range_ranks() {
        let code = PathCode(vec![1, 3]);
        assert!(matches!(
            node_at(Family::Dyck, &code),
            Err(Error::RankOutOfRange {
                rank: 3,
                children: 2
            })
        ));
    }

    #[test]
    fn shards_cover_level() {
        for jobs in [1, 3] {
            let shards = family_shards(Family::Lp, 6, jobs);
            let total: usize = shards.iter().map(|s| iterate_from(s, 6).count()).sum();
            assert_eq!(total, 132);
            let mut seq: Vec<TreeNode> = shards.iter().flat_map(|s| iterate_from(s, 6)).collect();
            let direct: Vec<TreeNode> = iterate_level(Family::Lp, 6).collect();
            assert_eq!(seq, direct);
            seq.dedup();
            assert_eq!(seq.len(), 132);
        }
        let n = par_fold_level(LinkPatternTree, 7, 4, |acc: usize, _| acc + 1, |a, b| a + b);
        assert_eq!(n, 429);
    }
}
