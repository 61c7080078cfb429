//! The Temperley-Lieb generators acting on the link-pattern basis.
//!
//! `e_i` joins points `i` and `i + 1 (mod 2n)`. Applied to a pattern that
//! already links them it closes a loop and leaves the pattern unchanged;
//! otherwise it reconnects the two former partners to each other. Loops are
//! weighted 1, but their count is still reported.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::tree::lp::{drag_candidates, m_op};
use crate::tree::{LevelIter, LinkPatternTree};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GeneratorIndex(usize);

impl GeneratorIndex {
    /// Index `i` of a generator acting on patterns of `strands` strands.
    pub fn new(i: usize, strands: usize) -> Result<Self> {
        if i >= 2 * strands {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: 2 * strands,
            });
        }
        Ok(GeneratorIndex(i))
    }

    /// `e_{2n-1}`, the generator used by the succession rule.
    pub fn last(strands: usize) -> Self {
        GeneratorIndex(2 * strands - 1)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ActionResult {
    pub pattern: LinkPattern,
    /// Closed loops removed while acting.
    pub loops: usize,
}

pub fn apply_generator(pi: &LinkPattern, e: GeneratorIndex) -> ActionResult {
    let points = pi.points();
    let i = e.index();
    assert!(i < points, "generator {e} does not act on {points} points");
    let j = (i + 1) % points;
    if pi.partner(i) == j {
        return ActionResult {
            pattern: pi.clone(),
            loops: 1,
        };
    }
    let x = pi.partner(i);
    let y = pi.partner(j);
    let mut partner = pi.partners().to_vec();
    partner[i] = j;
    partner[j] = i;
    partner[x] = y;
    partner[y] = x;
    ActionResult {
        pattern: LinkPattern::from_partners_unchecked(partner),
        loops: 0,
    }
}

/// Applies `word[0]` first, then `word[1]`, and so on.
pub fn apply_word(pi: &LinkPattern, word: &[GeneratorIndex]) -> ActionResult {
    let mut acc = ActionResult {
        pattern: pi.clone(),
        loops: 0,
    };
    for &e in word {
        let step = apply_generator(&acc.pattern, e);
        acc.pattern = step.pattern;
        acc.loops += step.loops;
    }
    acc
}

/// Every pattern sent to `pi_prime` by `e_i`, ordered by exposure (for the
/// cut after `i + 1`) ascending.
///
/// The pattern is rotated so that `e_i` becomes `e_{2n-1}`; the preimages
/// there are `pi_prime` itself and one surgery per outermost link.
pub fn preimages(pi_prime: &LinkPattern, e: GeneratorIndex) -> Result<Vec<LinkPattern>> {
    let points = pi_prime.points();
    let i = e.index();
    if i >= points {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: points,
        });
    }
    let j = (i + 1) % points;
    if !pi_prime.has_link(i, j) {
        return Err(Error::MissingLink(i, j));
    }
    let shift = (points - 1 - i) as isize;
    let rotated = pi_prime.rotate(shift);
    let k = drag_candidates(&rotated).len();
    (1..=k)
        .chain(std::iter::once(0))
        .map(|rank| m_op(&rotated, rank).map(|tau| tau.rotate(-shift)))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// `e_i e_i = e_i`
    Idempotent,
    /// `e_i e_{i±1} e_i = e_i`
    Braid,
    /// `e_i e_j = e_j e_i` for circular distance greater than 1.
    Commute,
    /// `e_i e_j = e_j e_i` for pairs with `|i - j| > 1` but circular
    /// distance 1; only `(0, 2n-1)`. Recorded, not required.
    LiteralCommute,
}

impl Relation {
    pub fn id(self) -> &'static str {
        match self {
            Relation::Idempotent => "idempotent",
            Relation::Braid => "braid",
            Relation::Commute => "commute",
            Relation::LiteralCommute => "literal-commute",
        }
    }

    pub fn required(self) -> bool {
        !matches!(self, Relation::LiteralCommute)
    }
}

/// A basis pattern on which the two sides of a relation disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub pattern: LinkPattern,
    pub left: LinkPattern,
    pub right: LinkPattern,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationRecord {
    pub relation: Relation,
    pub indices: Vec<usize>,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationReport {
    pub strands: usize,
    pub records: Vec<RelationRecord>,
}

impl RelationReport {
    /// True when every required relation instance holds.
    pub fn passed(&self) -> bool {
        self.records
            .iter()
            .all(|r| r.holds || !r.relation.required())
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationRecord> {
        self.records
            .iter()
            .filter(|r| !r.holds && r.relation.required())
    }

    /// The record for the literal pair `(e_0, e_{2n-1})`, absent for `n = 1`.
    pub fn literal_pair(&self) -> Option<&RelationRecord> {
        self.records
            .iter()
            .find(|r| r.relation == Relation::LiteralCommute)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "relations for n={}", self.strands).unwrap();
        writeln!(
            out,
            "{:<16} {:<10} {:<6} witness",
            "relation", "indices", "status"
        )
        .unwrap();
        for r in &self.records {
            let status = if r.holds { "holds" } else { "fails" };
            let witness = r
                .witness
                .as_ref()
                .map(|w| format!("{} -> {} vs {}", w.pattern, w.left, w.right))
                .unwrap_or_default();
            writeln!(
                out,
                "{:<16} {:<10} {:<6} {}",
                r.relation.id(),
                join_indices(&r.indices),
                status,
                witness
            )
            .unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "required relations: {verdict}").unwrap();
        out
    }

    /// One tab-separated `key=value` record per relation instance.
    pub fn to_records(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            write!(
                out,
                "n={}\trelation={}\tindices={}\tstatus={}",
                self.strands,
                r.relation.id(),
                join_indices(&r.indices),
                if r.holds { "holds" } else { "fails" }
            )
            .unwrap();
            if let Some(w) = &r.witness {
                write!(
                    out,
                    "\twitness={}\tleft={}\tright={}",
                    w.pattern, w.left, w.right
                )
                .unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn join_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Applies the operator product `e_{ops[0]} e_{ops[1]} ...`, rightmost first.
fn product(pi: &LinkPattern, ops: &[usize]) -> LinkPattern {
    ops.iter().rev().fold(pi.clone(), |acc, &i| {
        apply_generator(&acc, GeneratorIndex(i)).pattern
    })
}

fn compare(basis: &[LinkPattern], left: &[usize], right: &[usize]) -> Option<Witness> {
    basis.iter().find_map(|pi| {
        let l = product(pi, left);
        let r = product(pi, right);
        (l != r).then(|| Witness {
            pattern: pi.clone(),
            left: l,
            right: r,
        })
    })
}

/// Checks the defining relations extensionally on every basis pattern of
/// `n` strands.
pub fn check_relations(n: usize) -> RelationReport {
    assert!(n >= 1, "relations need at least one strand");
    let points = 2 * n;
    let mut basis: Vec<LinkPattern> = LevelIter::new(LinkPatternTree, n).collect();
    basis.sort();

    let mut records = Vec::new();
    let mut record = |relation, indices: Vec<usize>, left: Vec<usize>, right: Vec<usize>| {
        let witness = compare(&basis, &left, &right);
        records.push(RelationRecord {
            relation,
            indices,
            holds: witness.is_none(),
            witness,
        });
    };

    for i in 0..points {
        record(Relation::Idempotent, vec![i], vec![i, i], vec![i]);
    }
    for i in 0..points {
        for j in [(i + 1) % points, (i + points - 1) % points] {
            record(Relation::Braid, vec![i, j], vec![i, j, i], vec![i]);
        }
    }
    for i in 0..points {
        for j in i + 1..points {
            let circular = (j - i).min(points - (j - i));
            if circular > 1 {
                record(Relation::Commute, vec![i, j], vec![i, j], vec![j, i]);
            } else if j - i > 1 {
                record(Relation::LiteralCommute, vec![i, j], vec![i, j], vec![j, i]);
            }
        }
    }
    RelationReport {
        strands: n,
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(usize, usize)]) -> LinkPattern {
        LinkPattern::from_pairs(pairs, pairs.len()).unwrap()
    }

    fn g(i: usize) -> GeneratorIndex {
        GeneratorIndex(i)
    }

    #[test]
    fn generator_examples() {
        let two = lp(&[(0, 1), (2, 3)]);
        let r = apply_generator(&two, g(1));
        assert_eq!(r.pattern, lp(&[(1, 2), (3, 0)]));
        assert_eq!(r.loops, 0);

        let r = apply_generator(&two, g(0));
        assert_eq!(r.pattern, two);
        assert_eq!(r.loops, 1);

        let r = apply_generator(&lp(&[(0, 1), (2, 3), (4, 5)]), g(5));
        assert_eq!(r.pattern, lp(&[(5, 0), (1, 4), (2, 3)]));
        assert_eq!(r.loops, 0);
    }

    #[test]
    fn generator_index_range() {
        assert!(GeneratorIndex::new(3, 2).is_ok());
        assert!(matches!(
            GeneratorIndex::new(4, 2),
            Err(Error::IndexOutOfRange { index: 4, bound: 4 })
        ));
        assert_eq!(GeneratorIndex::last(3).index(), 5);
    }

    #[test]
    fn word_examples() {
        let two = lp(&[(0, 1), (2, 3)]);
        let r = apply_word(&two, &[g(1), g(1)]);
        assert_eq!(r.pattern, lp(&[(1, 2), (3, 0)]));
        assert_eq!(r.loops, 1);

        let r = apply_word(&two, &[]);
        assert_eq!(r.pattern, two);
        assert_eq!(r.loops, 0);

        let single = apply_word(&two, &[g(1)]);
        let braid = apply_word(&two, &[g(1), g(2), g(1)]);
        assert_eq!(braid.pattern, single.pattern);
        // no step finds its link already present
        assert_eq!(braid.loops, 0);
        let r = apply_word(&lp(&[(0, 3), (1, 2)]), &[g(1), g(1), g(1)]);
        assert_eq!(r.loops, 3);
    }

    #[test]
    fn preimage_examples() {
        assert_eq!(
            preimages(&lp(&[(1, 2), (3, 4), (5, 0)]), g(5)).unwrap(),
            vec![
                lp(&[(0, 1), (2, 5), (3, 4)]),
                lp(&[(1, 2), (3, 0), (4, 5)]),
                lp(&[(1, 2), (3, 4), (5, 0)]),
            ]
        );
        assert_eq!(
            preimages(&lp(&[(1, 2), (3, 0)]), g(3)).unwrap(),
            vec![lp(&[(0, 1), (2, 3)]), lp(&[(1, 2), (3, 0)])]
        );
        assert_eq!(
            preimages(&lp(&[(1, 4), (2, 3), (5, 0)]), g(5)).unwrap(),
            vec![lp(&[(0, 1), (2, 3), (4, 5)]), lp(&[(1, 4), (2, 3), (5, 0)])]
        );
        assert_eq!(
            preimages(&lp(&[(0, 1)]), g(0)).unwrap(),
            vec![lp(&[(0, 1)])]
        );
    }

    #[test]
    fn preimages_at_other_generators() {
        let pi = lp(&[(0, 1), (2, 5), (3, 4)]);
        for i in 0..6 {
            match preimages(&pi, g(i)) {
                Ok(pre) => {
                    for tau in &pre {
                        assert_eq!(apply_generator(tau, g(i)).pattern, pi);
                    }
                    let exposures: Vec<_> = pre.iter().map(|t| t.exposure((i + 1) % 6)).collect();
                    assert!(exposures.windows(2).all(|w| w[0] < w[1]));
                }
                Err(e) => assert!(matches!(e, Error::MissingLink(..))),
            }
        }
        assert_eq!(preimages(&pi, g(1)), Err(Error::MissingLink(1, 2)));
    }

    #[test]
    fn relations_small() {
        let report = check_relations(2);
        assert!(report.passed());
        let braid = report
            .records
            .iter()
            .find(|r| r.relation == Relation::Braid && r.indices == vec![1, 2])
            .unwrap();
        assert!(braid.holds);

        let literal = report.literal_pair().unwrap();
        assert_eq!(literal.indices, vec![0, 3]);
        assert!(!literal.holds);
        let w = literal.witness.as_ref().unwrap();
        assert_eq!(w.pattern, lp(&[(0, 1), (2, 3)]));
        assert_eq!(w.left, lp(&[(0, 1), (2, 3)]));
        assert_eq!(w.right, lp(&[(3, 0), (1, 2)]));

        let report = check_relations(3);
        let r = report
            .records
            .iter()
            .find(|r| r.relation == Relation::Commute && r.indices == vec![0, 3])
            .unwrap();
        assert!(r.holds);

        let report = check_relations(1);
        assert!(report.passed());
        assert!(report.literal_pair().is_none());
    }

    #[test]
    fn report_serialization() {
        let report = check_relations(2);
        let table = report.to_table();
        assert!(table.contains("literal-commute  0,3        fails"));
        assert!(table.ends_with("required relations: PASS\n"));
        let records = report.to_records();
        assert_eq!(records.lines().count(), report.records.len());
        assert!(records.contains(
            "n=2\trelation=literal-commute\tindices=0,3\tstatus=fails\twitness=n=2;0-1,2-3"
        ));
    }
}
