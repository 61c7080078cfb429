//! The fixed-labeling reading of the succession step: the new strand is
//! inserted between the old last point and the old point 0, so it becomes
//! `(2n-1, 0)` with every old label shifted by one. This still partitions each
//! level but the labels stop following `(k) -> (2)...(k+1)`.

use std::collections::{BTreeMap, BTreeSet};

use catalan_tree::oracle::brute_patterns;
use catalan_tree::{preimages, GeneratorIndex, LinkPattern};

fn literal_children(pi: &LinkPattern) -> Vec<LinkPattern> {
    let n = pi.strands() + 1;
    let prime = pi.insert_strand(2 * pi.strands()).unwrap().rotate(1);
    assert!(prime.has_link(2 * n - 1, 0));
    preimages(&prime, GeneratorIndex::last(n)).unwrap()
}

/// Level by level: node -> (parent, came through a non-identity preimage).
fn literal_tree(depth: usize) -> Vec<BTreeMap<LinkPattern, (Option<LinkPattern>, bool)>> {
    let root = LinkPattern::unit();
    let mut levels = vec![BTreeMap::from([(root, (None, false))])];
    for _ in 1..depth {
        let mut next = BTreeMap::new();
        for parent in levels.last().unwrap().keys() {
            for child in literal_children(parent) {
                let last = child.points() - 1;
                let moved = !child.has_link(last, 0);
                let prev = next.insert(child, (Some(parent.clone()), moved));
                assert!(prev.is_none(), "two parents for one child");
            }
        }
        levels.push(next);
    }
    levels
}

fn interaction(
    levels: &[BTreeMap<LinkPattern, (Option<LinkPattern>, bool)>],
    pi: &LinkPattern,
) -> usize {
    let mut count = 0;
    let mut current = pi.clone();
    for level in levels[..pi.strands()].iter().rev() {
        let (parent, moved) = level[&current].clone();
        count += moved as usize;
        match parent {
            Some(p) => current = p,
            None => break,
        }
    }
    count
}

#[test]
fn literal_reading_partitions_each_level() {
    let levels = literal_tree(7);
    for (m, level) in levels.iter().enumerate() {
        let keys: BTreeSet<_> = level.keys().cloned().collect();
        assert_eq!(keys, brute_patterns(m + 1).unwrap(), "level {}", m + 1);
    }
}

#[test]
fn literal_reading_breaks_the_succession_rule() {
    let levels = literal_tree(4);
    let mut first_violation = None;
    for (m, level) in levels.iter().enumerate() {
        for pi in level.keys() {
            let label = literal_children(pi).len();
            let mut child_labels: Vec<usize> = literal_children(pi)
                .iter()
                .map(|c| literal_children(c).len())
                .collect();
            child_labels.sort_unstable();
            if child_labels != (2..=label + 1).collect::<Vec<_>>() && first_violation.is_none() {
                first_violation = Some((m + 1, pi.to_string(), label, child_labels));
            }
        }
    }
    assert_eq!(
        first_violation,
        Some((2, "n=2;0-1,2-3".to_string(), 3, vec![2, 3, 3]))
    );
}

#[test]
fn literal_reading_skews_interaction() {
    let levels = literal_tree(4);
    let hist: Vec<Vec<usize>> = (0..4)
        .map(|m| {
            let mut h = vec![0; m + 1];
            for pi in levels[m].keys() {
                h[interaction(&levels, pi)] += 1;
            }
            h
        })
        .collect();
    // the canonical tree gives Narayana rows 1 | 1 1 | 1 3 1 | 1 6 6 1
    assert_eq!(
        hist,
        vec![vec![1], vec![1, 1], vec![1, 2, 2], vec![1, 3, 6, 4]]
    );
}
