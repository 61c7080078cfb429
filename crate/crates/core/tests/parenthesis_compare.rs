//! The tree-induced link pattern to Dyck path map against the classical
//! reading (first end of a link is `U`, second end is `D`). Recorded data,
//! not a claim about either map.

use catalan_tree::oracle::parenthesis_dyck;
use catalan_tree::stats::convert;
use catalan_tree::{iterate_level, Family};

fn agreement(n: usize) -> (usize, Option<(String, String, String)>) {
    let mut agree = 0;
    let mut first = None;
    for node in iterate_level(Family::Lp, n) {
        let pi = node.as_link_pattern().unwrap();
        let tree = convert(&node, Family::Dyck).to_string();
        let paren = parenthesis_dyck(pi).to_string();
        if tree == paren {
            agree += 1;
        } else if first.is_none() {
            first = Some((pi.to_string(), tree, paren));
        }
    }
    (agree, first)
}

#[test]
fn maps_agree_only_up_to_two_strands() {
    let counts: Vec<usize> = (1..=8).map(|n| agreement(n).0).collect();
    assert_eq!(counts, vec![1, 2, 1, 2, 1, 1, 1, 1]);
    let (_, first) = agreement(3);
    assert_eq!(
        first,
        Some(("n=3;0-5,1-4,2-3".into(), "UDUUDD".into(), "UUUDDD".into()))
    );
}

#[test]
fn both_maps_are_bijections() {
    for n in 1..=7 {
        let paren: std::collections::HashSet<_> = iterate_level(Family::Lp, n)
            .map(|node| parenthesis_dyck(node.as_link_pattern().unwrap()))
            .collect();
        let tree: std::collections::HashSet<_> = iterate_level(Family::Lp, n)
            .map(|node| convert(&node, Family::Dyck).as_dyck().unwrap().clone())
            .collect();
        assert_eq!(paren, tree, "n={n}");
    }
}
