use std::fmt;

use crate::error::{Error, Result};

use super::SuccessionRule;

/// A 123-avoiding permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm123 {
    values: Vec<usize>,
}

impl Perm123 {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPerm("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPerm(format!(
                    "{values:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        if let Some((a, b, c)) = find_123(&values) {
            return Err(Error::InvalidPerm(format!(
                "positions {a}, {b}, {c} form an increasing subsequence"
            )));
        }
        Ok(Perm123 { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The 1-based index `i` of the first ascent `values[i] < values[i+1]`,
    /// or `None` when the permutation is decreasing.
    pub fn first_ascent(&self) -> Option<usize> {
        self.values
            .windows(2)
            .position(|w| w[0] < w[1])
            .map(|i| i + 1)
    }

    /// First ascent index plus one, taking `n` as the first ascent of a
    /// decreasing permutation.
    pub fn first_ascent_label(&self) -> usize {
        self.first_ascent().unwrap_or(self.len()) + 1
    }
}

/// 1-based positions of some increasing triple, if any.
fn find_123(values: &[usize]) -> Option<(usize, usize, usize)> {
    let n = values.len();
    if n < 3 {
        return None;
    }
    let mut prefix_min = vec![0; n];
    prefix_min[0] = 0;
    for j in 1..n {
        let m = prefix_min[j - 1];
        prefix_min[j] = if values[j] < values[m] { j } else { m };
    }
    let mut suffix_max = vec![n - 1; n];
    for j in (0..n - 1).rev() {
        let m = suffix_max[j + 1];
        suffix_max[j] = if values[j] > values[m] { j } else { m };
    }
    (1..n - 1).find_map(|j| {
        let a = prefix_min[j - 1];
        let c = suffix_max[j + 1];
        (values[a] < values[j] && values[j] < values[c]).then_some((a + 1, j + 1, c + 1))
    })
}

impl fmt::Display for Perm123 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// 123-avoiding permutations grown by inserting the new maximum.
///
/// With `i` the first ascent, the child of rank `r <= i` puts `n + 1` at
/// position `r + 1` and the child of rank `i + 1` puts it in front.
#[derive(Clone, Copy, Debug, Default)]
pub struct PermTree;

impl SuccessionRule for PermTree {
    type Node = Perm123;
    type Expansion = Perm123;

    fn root(&self) -> Perm123 {
        Perm123 { values: vec![1] }
    }

    fn level(&self, node: &Perm123) -> usize {
        node.len()
    }

    fn label(&self, node: &Perm123) -> usize {
        node.first_ascent_label()
    }

    fn expand(&self, node: &Perm123) -> Perm123 {
        node.clone()
    }

    fn width(&self, expansion: &Perm123) -> usize {
        self.label(expansion)
    }

    fn child(&self, perm: &Perm123, rank: usize) -> Perm123 {
        let width = self.label(perm);
        assert!(
            rank >= 1 && rank <= width,
            "rank {rank} out of range 1..={width}"
        );
        let at = if rank == width { 0 } else { rank };
        let mut values = perm.values.clone();
        values.insert(at, perm.len() + 1);
        Perm123 { values }
    }

    fn parent(&self, node: &Perm123) -> Result<Perm123> {
        if node.len() < 2 {
            return Err(Error::AtRoot);
        }
        let max = node.len();
        let values = node.values.iter().copied().filter(|&v| v != max).collect();
        Ok(Perm123 { values })
    }

    fn child_rank(&self, node: &Perm123) -> Result<usize> {
        if node.len() < 2 {
            return Err(Error::AtRoot);
        }
        Ok(self.label(node) - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Perm123 {
        Perm123::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Perm123::new(vec![]).is_err());
        assert!(Perm123::new(vec![1, 1]).is_err());
        assert!(Perm123::new(vec![0, 1]).is_err());
        assert!(matches!(
            Perm123::new(vec![1, 2, 3]),
            Err(Error::InvalidPerm(_))
        ));
        assert!(Perm123::new(vec![2, 4, 1, 3]).is_ok());
        assert!(Perm123::new(vec![1, 4, 2, 3]).is_err());
        assert_eq!(find_123(&[2, 4, 1, 3]), None);
        assert_eq!(find_123(&[5, 1, 4, 2, 6, 3]), Some((2, 3, 5)));
    }

    #[test]
    fn labels() {
        let t = PermTree;
        assert_eq!(t.label(&perm(&[2, 1])), 3);
        assert_eq!(t.label(&perm(&[1, 2])), 2);
        assert_eq!(t.label(&perm(&[3, 2, 1])), 4);
        assert_eq!(perm(&[2, 1]).first_ascent(), None);
        assert_eq!(perm(&[2, 1, 3]).first_ascent(), Some(2));
    }

    #[test]
    fn children_and_parent() {
        let t = PermTree;
        let kids = t.children(&perm(&[2, 1]));
        assert_eq!(
            kids,
            vec![perm(&[2, 3, 1]), perm(&[2, 1, 3]), perm(&[3, 2, 1])]
        );
        assert_eq!(
            kids.iter().map(|k| t.label(k)).collect::<Vec<_>>(),
            vec![2, 3, 4]
        );
        assert_eq!(
            t.children(&perm(&[1, 2])),
            vec![perm(&[1, 3, 2]), perm(&[3, 1, 2])]
        );
        assert_eq!(t.parent(&perm(&[3, 1, 2])).unwrap(), perm(&[1, 2]));
        assert_eq!(t.child_rank(&perm(&[3, 2, 1])).unwrap(), 3);
        assert_eq!(t.parent(&t.root()), Err(Error::AtRoot));
    }
}
