//! Node statistics and the bijections induced by the shared tree shape.
//!
//! Two nodes of different families correspond when they have the same
//! [`PathCode`](crate::tree::PathCode). Under this correspondence the last
//! descent length of a Dyck path equals the exposure of the link pattern,
//! and its peak count equals the interaction number plus one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::temperley_lieb::{apply_generator, GeneratorIndex};
use crate::tree::{node_at, DyckPath, Family, TreeNode};

pub fn last_descent_length(d: &DyckPath) -> usize {
    d.last_descent_length()
}

pub fn peaks(d: &DyckPath) -> usize {
    d.peaks()
}

/// Exposure for the canonical cut between 0 and 1.
pub fn exposure(pi: &LinkPattern) -> usize {
    pi.exposure(0)
}

/// Number of edges on the root path that come from `M_r` with `r != 0`.
///
/// An ancestor at level `m` came through `M_0` exactly when it still carries
/// the freshly inserted link `(2m-1, 0)`.
pub fn interaction(pi: &LinkPattern) -> usize {
    let mut count = 0;
    let mut current = pi.clone();
    while current.strands() >= 2 {
        let last = current.points() - 1;
        let e = GeneratorIndex::last(current.strands());
        if !current.has_link(last, 0) {
            count += 1;
            current = apply_generator(&current, e).pattern;
        }
        current = current
            .delete_strand(last)
            .expect("link (2m-1, 0) is present after e_{2m-1}");
    }
    count
}

/// Maps a node to the node with the same path code in `target`.
pub fn convert(node: &TreeNode, target: Family) -> TreeNode {
    if node.family() == target {
        return node.clone();
    }
    node_at(target, &node.path_code()).expect("path codes of tree nodes are valid in every family")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Statistic {
    Exposure,
    Interaction,
    LastDescentLength,
    Peaks,
    FirstAscentLabel,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Exposure => "exposure",
            Statistic::Interaction => "interaction",
            Statistic::LastDescentLength => "ldl",
            Statistic::Peaks => "peaks",
            Statistic::FirstAscentLabel => "label",
        }
    }

    pub fn family(self) -> Family {
        match self {
            Statistic::Exposure | Statistic::Interaction => Family::Lp,
            Statistic::LastDescentLength | Statistic::Peaks => Family::Dyck,
            Statistic::FirstAscentLabel => Family::Perm,
        }
    }

    pub fn value(self, node: &TreeNode) -> Result<usize> {
        let unsupported = || Error::Unsupported {
            what: format!("statistic {}", self.name()),
            family: node.family(),
        };
        Ok(match (self, node) {
            (Statistic::Exposure, TreeNode::Lp(p)) => exposure(p),
            (Statistic::Interaction, TreeNode::Lp(p)) => interaction(p),
            (Statistic::LastDescentLength, TreeNode::Dyck(d)) => d.last_descent_length(),
            (Statistic::Peaks, TreeNode::Dyck(d)) => d.peaks(),
            (Statistic::FirstAscentLabel, TreeNode::Perm(p)) => p.first_ascent_label(),
            _ => return Err(unsupported()),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exposure" => Ok(Statistic::Exposure),
            "interaction" => Ok(Statistic::Interaction),
            "ldl" | "last-descent-length" => Ok(Statistic::LastDescentLength),
            "peaks" => Ok(Statistic::Peaks),
            "label" | "first-ascent-label" => Ok(Statistic::FirstAscentLabel),
            other => Err(Error::parse(1, format!("unknown statistic {other:?}"))),
        }
    }
}

/// Every statistic that applies to one node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatRecord {
    pub node: TreeNode,
    pub exposure: Option<usize>,
    pub interaction: Option<usize>,
    pub last_descent_length: Option<usize>,
    pub peaks: Option<usize>,
    pub first_ascent_label: Option<usize>,
}

impl StatRecord {
    pub fn of(node: &TreeNode) -> Self {
        let mut rec = StatRecord {
            node: node.clone(),
            exposure: None,
            interaction: None,
            last_descent_length: None,
            peaks: None,
            first_ascent_label: None,
        };
        match node {
            TreeNode::Lp(p) => {
                rec.exposure = Some(exposure(p));
                rec.interaction = Some(interaction(p));
            }
            TreeNode::Dyck(d) => {
                rec.last_descent_length = Some(d.last_descent_length());
                rec.peaks = Some(d.peaks());
            }
            TreeNode::Perm(p) => rec.first_ascent_label = Some(p.first_ascent_label()),
        }
        rec
    }

    fn fields(&self) -> impl Iterator<Item = (&'static str, usize)> {
        [
            ("exposure", self.exposure),
            ("interaction", self.interaction),
            ("ldl", self.last_descent_length),
            ("peaks", self.peaks),
            ("label", self.first_ascent_label),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
    }
}

/// The node record followed by tab-separated `key=value` fields.
impl fmt::Display for StatRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.node)?;
        for (k, v) in self.fields() {
            write!(f, "\t{k}={v}")?;
        }
        Ok(())
    }
}
