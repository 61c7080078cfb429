//! Brute-force reference enumerations.
//!
//! Nothing here goes through the generating tree or the surgery code: link
//! patterns come from interval recursion (or from filtering every pairing),
//! preimages from scanning the whole basis, and 123-avoiders from filtering
//! all `n!` permutations with a triple loop.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::temperley_lieb::{apply_generator, GeneratorIndex};
use crate::tree::{DyckPath, Perm123, Step};

pub const PATTERN_LIMIT: usize = 10;
pub const PREIMAGE_LIMIT: usize = 8;
pub const AVOIDER_LIMIT: usize = 8;
pub const FILTER_LIMIT: usize = 5;

fn check_size(size: usize, limit: usize) -> Result<()> {
    if size == 0 {
        return Err(Error::DomainError("size must be positive".into()));
    }
    if size > limit {
        return Err(Error::SizeLimit { size, limit });
    }
    Ok(())
}

/// Noncrossing matchings of the points `lo..hi`: `lo` pairs with some
/// `lo + 2t + 1`, which splits the rest into two independent intervals.
fn interval_matchings(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for mate in (lo + 1..hi).step_by(2) {
        let inside = interval_matchings(lo + 1, mate);
        let outside = interval_matchings(mate + 1, hi);
        for a in &inside {
            for b in &outside {
                let mut pairs = Vec::with_capacity(1 + a.len() + b.len());
                pairs.push((lo, mate));
                pairs.extend_from_slice(a);
                pairs.extend_from_slice(b);
                out.push(pairs);
            }
        }
    }
    out
}

pub fn brute_patterns(n: usize) -> Result<BTreeSet<LinkPattern>> {
    check_size(n, PATTERN_LIMIT)?;
    interval_matchings(0, 2 * n)
        .into_iter()
        .map(|pairs| LinkPattern::from_pairs(&pairs, n))
        .collect()
}

fn all_pairings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, &mate) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &p)| p)
            .collect();
        for mut tail in all_pairings(&remaining) {
            tail.push((first, mate));
            out.push(tail);
        }
    }
    out
}

/// Two chords cross when exactly one endpoint of one lies strictly between
/// the endpoints of the other.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// Every perfect matching of `2n` points, filtered by a pairwise crossing test.
pub fn brute_patterns_by_filter(n: usize) -> Result<BTreeSet<LinkPattern>> {
    check_size(n, FILTER_LIMIT)?;
    let points: Vec<usize> = (0..2 * n).collect();
    Ok(all_pairings(&points)
        .into_iter()
        .filter(|pairs| {
            pairs
                .iter()
                .tuple_combinations()
                .all(|(&x, &y)| !chords_cross(x, y))
        })
        .map(|pairs| LinkPattern::from_pairs(&pairs, n).expect("filtered pairing is valid"))
        .collect())
}

/// All basis patterns sent to `pi_prime` by `e_i`.
pub fn brute_preimages(pi_prime: &LinkPattern, i: usize) -> Result<BTreeSet<LinkPattern>> {
    let n = pi_prime.strands();
    check_size(n, PREIMAGE_LIMIT)?;
    let e = GeneratorIndex::new(i, n)?;
    Ok(brute_patterns(n)?
        .into_iter()
        .filter(|tau| apply_generator(tau, e).pattern == *pi_prime)
        .collect())
}

fn has_increasing_triple(values: &[usize]) -> bool {
    let n = values.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if values[a] < values[b] && values[b] < values[c] {
                    return true;
                }
            }
        }
    }
    false
}

pub fn brute_avoiders(n: usize) -> Result<BTreeSet<Perm123>> {
    check_size(n, AVOIDER_LIMIT)?;
    Ok((1..=n)
        .permutations(n)
        .filter(|p| !has_increasing_triple(p))
        .map(|p| Perm123::new(p).expect("filtered permutation avoids 123"))
        .collect())
}

/// The classical bijection reading points `0..2n` left to right: the first
/// end of each link is an up step, the second a down step. Used only as a
/// comparison point for the tree-induced bijection.
pub fn parenthesis_dyck(pi: &LinkPattern) -> DyckPath {
    let steps = (0..pi.points())
        .map(|i| {
            if pi.partner(i) > i {
                Step::Up
            } else {
                Step::Down
            }
        })
        .collect();
    DyckPath::new(steps).expect("noncrossing matching reads as a Dyck word")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(usize, usize)]) -> LinkPattern {
        LinkPattern::from_pairs(pairs, pairs.len()).unwrap()
    }

    #[test]
    fn small_pattern_sets() {
        assert_eq!(
            brute_patterns(1).unwrap().into_iter().collect::<Vec<_>>(),
            vec![lp(&[(0, 1)])]
        );
        assert_eq!(brute_patterns(2).unwrap().len(), 2);
        let expected: BTreeSet<_> = [
            lp(&[(0, 1), (2, 3), (4, 5)]),
            lp(&[(0, 1), (2, 5), (3, 4)]),
            lp(&[(0, 3), (1, 2), (4, 5)]),
            lp(&[(0, 5), (1, 2), (3, 4)]),
            lp(&[(0, 5), (1, 4), (2, 3)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(brute_patterns(3).unwrap(), expected);
        assert_eq!(
            brute_patterns(11),
            Err(Error::SizeLimit {
                size: 11,
                limit: 10
            })
        );
    }

    #[test]
    fn filter_and_recursion_agree() {
        assert_eq!(all_pairings(&[0, 1, 2, 3]).len(), 3);
        assert_eq!(all_pairings(&(0..10).collect::<Vec<_>>()).len(), 945);
        for n in 1..=FILTER_LIMIT {
            assert_eq!(
                brute_patterns_by_filter(n).unwrap(),
                brute_patterns(n).unwrap()
            );
        }
    }

    #[test]
    fn crossing_test() {
        assert!(chords_cross((0, 2), (1, 3)));
        assert!(!chords_cross((0, 3), (1, 2)));
        assert!(!chords_cross((0, 1), (2, 3)));
        assert!(chords_cross((3, 1), (0, 2)));
    }

    #[test]
    fn preimage_scans() {
        assert_eq!(
            brute_preimages(&lp(&[(1, 2), (3, 4), (5, 0)]), 5)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(brute_preimages(&lp(&[(1, 2), (3, 0)]), 3).unwrap().len(), 2);
        assert_eq!(
            brute_preimages(&lp(&[(0, 1)]), 0)
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>(),
            vec![lp(&[(0, 1)])]
        );
    }

    #[test]
    fn avoiders() {
        let two: Vec<String> = brute_avoiders(2)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(two, vec!["1 2", "2 1"]);
        let three: BTreeSet<String> = brute_avoiders(3)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let expected: BTreeSet<String> = ["1 3 2", "3 1 2", "2 3 1", "2 1 3", "3 2 1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(three, expected);
        assert_eq!(brute_avoiders(4).unwrap().len(), 14);
        assert!(matches!(brute_avoiders(9), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn parenthesis_reading() {
        assert_eq!(parenthesis_dyck(&lp(&[(0, 3), (1, 2)])).to_string(), "UUDD");
        assert_eq!(parenthesis_dyck(&lp(&[(0, 1), (2, 3)])).to_string(), "UDUD");
    }
}
