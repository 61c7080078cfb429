//! The Catalan tree of link patterns.
//!
//! A pattern `pi` of `n - 1` strands gets a new strand `(2n-1, 0)` by the
//! wrap insertion, giving `pi'`. Its children are the preimages of `pi'`
//! under `e_{2n-1}`: `M_1(pi'), ..., M_k(pi')` followed by `M_0(pi') = pi'`,
//! where `k` is the number of outermost links of `pi'` (cut after 0) other
//! than the new one. `M_r` drags the `r`-th outermost link onto the new
//! strand, so the children have exposures `1, ..., k + 1` in order.

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::temperley_lieb::{apply_generator, GeneratorIndex};

use super::SuccessionRule;

/// Outermost links of `pi_prime` for the cut after 0, minus the final link
/// `(2n-1, 0)`, left to right. Assumes that link is present.
pub(crate) fn drag_candidates(pi_prime: &LinkPattern) -> Vec<(usize, usize)> {
    let mut links = pi_prime.outermost_links(0);
    let last = links.pop();
    debug_assert_eq!(last, Some((pi_prime.points() - 1, 0)));
    links
}

fn drag(pi_prime: &LinkPattern, (a, b): (usize, usize)) -> LinkPattern {
    let last = pi_prime.points() - 1;
    let mut partner = pi_prime.partners().to_vec();
    partner[a] = 0;
    partner[0] = a;
    partner[b] = last;
    partner[last] = b;
    LinkPattern::from_partners_unchecked(partner)
}

/// `M_rank(pi_prime)`: the identity for rank 0, otherwise the surgery
/// replacing the `rank`-th outermost link `(a, b)` and `(2n-1, 0)` by
/// `(a, 0)` and `(b, 2n-1)`.
pub fn m_op(pi_prime: &LinkPattern, rank: usize) -> Result<LinkPattern> {
    let last = pi_prime.points() - 1;
    if !pi_prime.has_link(last, 0) {
        return Err(Error::MissingLink(last, 0));
    }
    if rank == 0 {
        return Ok(pi_prime.clone());
    }
    let candidates = drag_candidates(pi_prime);
    match candidates.get(rank - 1) {
        Some(&link) => Ok(drag(pi_prime, link)),
        None => Err(Error::RankOutOfRange {
            rank,
            children: candidates.len() + 1,
        }),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LinkPatternTree;

pub struct LpExpansion {
    prime: LinkPattern,
    candidates: Vec<(usize, usize)>,
}

impl SuccessionRule for LinkPatternTree {
    type Node = LinkPattern;
    type Expansion = LpExpansion;

    fn root(&self) -> LinkPattern {
        LinkPattern::unit()
    }

    fn level(&self, node: &LinkPattern) -> usize {
        node.strands()
    }

    fn label(&self, node: &LinkPattern) -> usize {
        node.exposure(0) + 1
    }

    fn expand(&self, node: &LinkPattern) -> LpExpansion {
        let prime = node
            .insert_strand(node.points() + 1)
            .expect("wrap insertion index is always in range");
        let candidates = drag_candidates(&prime);
        LpExpansion { prime, candidates }
    }

    fn width(&self, expansion: &LpExpansion) -> usize {
        expansion.candidates.len() + 1
    }

    fn child(&self, expansion: &LpExpansion, rank: usize) -> LinkPattern {
        let k = expansion.candidates.len();
        assert!(
            rank >= 1 && rank <= k + 1,
            "rank {rank} out of range 1..={}",
            k + 1
        );
        if rank == k + 1 {
            expansion.prime.clone()
        } else {
            drag(&expansion.prime, expansion.candidates[rank - 1])
        }
    }

    fn parent(&self, node: &LinkPattern) -> Result<LinkPattern> {
        if node.strands() < 2 {
            return Err(Error::AtRoot);
        }
        let e = GeneratorIndex::last(node.strands());
        let prime = apply_generator(node, e).pattern;
        prime.delete_strand(e.index())
    }

    fn child_rank(&self, node: &LinkPattern) -> Result<usize> {
        if node.strands() < 2 {
            return Err(Error::AtRoot);
        }
        Ok(node.exposure(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{node_at, Family, PathCode, TreeNode};

    fn lp(pairs: &[(usize, usize)]) -> LinkPattern {
        LinkPattern::from_pairs(pairs, pairs.len()).unwrap()
    }

    #[test]
    fn m_op_examples() {
        let p = lp(&[(1, 2), (3, 4), (5, 0)]);
        assert_eq!(m_op(&p, 1).unwrap(), lp(&[(0, 1), (2, 5), (3, 4)]));
        assert_eq!(m_op(&p, 2).unwrap(), lp(&[(1, 2), (3, 0), (4, 5)]));
        assert_eq!(m_op(&p, 0).unwrap(), p);
        assert!(matches!(
            m_op(&p, 3),
            Err(Error::RankOutOfRange {
                rank: 3,
                children: 3
            })
        ));

        let q = lp(&[(1, 4), (2, 3), (5, 0)]);
        assert_eq!(m_op(&q, 0).unwrap(), q);
        assert_eq!(q.exposure(0), 2);

        assert_eq!(
            m_op(&lp(&[(0, 1), (2, 3)]), 0),
            Err(Error::MissingLink(3, 0))
        );
    }

    #[test]
    fn m_op_is_a_preimage_with_given_exposure() {
        let p = lp(&[(1, 2), (3, 4), (5, 0)]);
        let e = GeneratorIndex::last(3);
        for rank in 1..=2 {
            let tau = m_op(&p, rank).unwrap();
            assert_eq!(apply_generator(&tau, e).pattern, p);
            assert_eq!(tau.exposure(0), rank);
        }
    }

    #[test]
    fn children_examples() {
        let t = LinkPatternTree;
        let root = t.root();
        assert_eq!(root, lp(&[(0, 1)]));
        assert_eq!(t.label(&root), 2);

        let kids = t.children(&root);
        assert_eq!(kids, vec![lp(&[(0, 1), (2, 3)]), lp(&[(1, 2), (3, 0)])]);
        assert_eq!(
            kids.iter().map(|k| t.label(k)).collect::<Vec<_>>(),
            vec![2, 3]
        );

        assert_eq!(
            t.children(&lp(&[(0, 1), (2, 3)])),
            vec![lp(&[(0, 1), (2, 3), (4, 5)]), lp(&[(1, 4), (2, 3), (5, 0)])]
        );
        assert_eq!(t.label(&lp(&[(1, 2), (3, 0)])), 3);
    }

    #[test]
    fn parent_examples() {
        let t = LinkPatternTree;
        assert_eq!(
            t.parent(&lp(&[(0, 1), (2, 3), (4, 5)])).unwrap(),
            lp(&[(0, 1), (2, 3)])
        );
        assert_eq!(
            t.parent(&lp(&[(1, 2), (3, 4), (5, 0)])).unwrap(),
            lp(&[(1, 2), (3, 0)])
        );
        assert_eq!(t.child_rank(&lp(&[(1, 2), (3, 0)])).unwrap(), 2);
        assert_eq!(t.parent(&t.root()), Err(Error::AtRoot));
    }

    #[test]
    fn path_codes() {
        let node = TreeNode::Lp(lp(&[(1, 2), (3, 4), (5, 0)]));
        assert_eq!(node.path_code().ranks(), &[2, 3]);
        assert_eq!(
            node_at(Family::Lp, &PathCode::new(vec![1, 2]).unwrap()).unwrap(),
            TreeNode::Lp(lp(&[(1, 4), (2, 3), (5, 0)]))
        );
    }
}
