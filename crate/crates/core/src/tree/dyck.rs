use std::fmt;

use crate::error::{Error, Result};

use super::SuccessionRule;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Step {
    Up,
    Down,
}

/// A Dyck path: a sequence of up and down steps that never goes below zero
/// and ends at height zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidDyck("a path needs at least one step".into()));
        }
        let mut height: usize = 0;
        for (i, step) in steps.iter().enumerate() {
            match step {
                Step::Up => height += 1,
                Step::Down => {
                    height = height.checked_sub(1).ok_or_else(|| {
                        Error::InvalidDyck(format!("step {} goes below zero", i + 1))
                    })?
                }
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck(format!("path ends at height {height}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Length of the final run of descents.
    pub fn last_descent_length(&self) -> usize {
        self.steps
            .iter()
            .rev()
            .take_while(|&&s| s == Step::Down)
            .count()
    }

    /// Number of ascents immediately followed by a descent.
    pub fn peaks(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::Up && w[1] == Step::Down)
            .count()
    }

    /// Heights of the `2n + 1` lattice points.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut y = 0usize;
        for s in &self.steps {
            y = match s {
                Step::Up => y + 1,
                Step::Down => y - 1,
            };
            h.push(y);
        }
        h
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// Dyck paths grown by adding a peak at each point of the last descent.
///
/// The child of rank `r` gets its new peak at height `r - 1`, so its last
/// descent has length `r`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DyckTree;

impl SuccessionRule for DyckTree {
    type Node = DyckPath;
    type Expansion = DyckPath;

    fn root(&self) -> DyckPath {
        DyckPath {
            steps: vec![Step::Up, Step::Down],
        }
    }

    fn level(&self, node: &DyckPath) -> usize {
        node.semilength()
    }

    fn label(&self, node: &DyckPath) -> usize {
        node.last_descent_length() + 1
    }

    fn expand(&self, node: &DyckPath) -> DyckPath {
        node.clone()
    }

    fn width(&self, expansion: &DyckPath) -> usize {
        self.label(expansion)
    }

    fn child(&self, path: &DyckPath, rank: usize) -> DyckPath {
        let width = self.label(path);
        assert!(
            rank >= 1 && rank <= width,
            "rank {rank} out of range 1..={width}"
        );
        let at = path.steps.len() - (rank - 1);
        let mut steps = Vec::with_capacity(path.steps.len() + 2);
        steps.extend_from_slice(&path.steps[..at]);
        steps.push(Step::Up);
        steps.push(Step::Down);
        steps.extend_from_slice(&path.steps[at..]);
        DyckPath { steps }
    }

    fn parent(&self, node: &DyckPath) -> Result<DyckPath> {
        if node.semilength() < 2 {
            return Err(Error::AtRoot);
        }
        // The last up step starts the last peak.
        let top = node
            .steps
            .iter()
            .rposition(|&s| s == Step::Up)
            .expect("a nonempty Dyck path has an up step");
        let mut steps = node.steps.clone();
        steps.drain(top..top + 2);
        Ok(DyckPath { steps })
    }

    fn child_rank(&self, node: &DyckPath) -> Result<usize> {
        if node.semilength() < 2 {
            return Err(Error::AtRoot);
        }
        Ok(node.last_descent_length())
    }
}
