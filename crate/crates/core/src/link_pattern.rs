//! Link patterns: noncrossing perfect matchings of `2n` points on a circle.
//!
//! Points are labeled `0..2n` counterclockwise. A pattern is stored as its
//! partner table, so `partner[i]` is the point joined to `i`. Every value of
//! [`LinkPattern`] is a valid noncrossing matching; the constructors reject
//! anything else.
//!
//! Cutting the circle in the gap after point `g` and laying the points out on
//! a line gives an [`ArcDiagram`]. The arcs that are not enclosed by any other
//! arc are the outermost links, and their number is the exposure of the
//! pattern for that cut.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinkPattern {
    partner: Vec<usize>,
}

impl LinkPattern {
    /// The single pattern with one strand, `{(0,1)}`.
    pub fn unit() -> Self {
        LinkPattern {
            partner: vec![1, 0],
        }
    }

    /// Builds a pattern of `n` strands from its list of links.
    pub fn from_pairs(pairs: &[(usize, usize)], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAMatching(
                "a pattern needs at least one strand".into(),
            ));
        }
        let points = 2 * n;
        let mut partner = vec![usize::MAX; points];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p >= points {
                    return Err(Error::NotAMatching(format!(
                        "point {p} is not one of 0..{points}"
                    )));
                }
                if partner[p] != usize::MAX {
                    return Err(Error::NotAMatching(format!("point {p} is used twice")));
                }
            }
            if a == b {
                return Err(Error::NotAMatching(format!(
                    "point {a} is linked to itself"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if let Some(p) = partner.iter().position(|&q| q == usize::MAX) {
            return Err(Error::NotAMatching(format!("point {p} is not linked")));
        }
        check_noncrossing(&partner)?;
        Ok(LinkPattern { partner })
    }

    /// Builds a pattern from a partner table.
    pub fn from_partners(partner: Vec<usize>) -> Result<Self> {
        let points = partner.len();
        if points == 0 || !points.is_multiple_of(2) {
            return Err(Error::NotAMatching(format!(
                "a partner table needs a positive even length, got {points}"
            )));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= points || p == i || partner[p] != i {
                return Err(Error::NotAMatching(format!(
                    "partner table is not a fixed-point-free involution at {i}"
                )));
            }
        }
        check_noncrossing(&partner)?;
        Ok(LinkPattern { partner })
    }

    pub(crate) fn from_partners_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(
            LinkPattern::from_partners(partner.clone()).is_ok(),
            "invalid partner table {partner:?}"
        );
        LinkPattern { partner }
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn has_link(&self, a: usize, b: usize) -> bool {
        a < self.points() && self.partner[a] == b
    }

    /// Links as `(min, max)` pairs sorted by first coordinate.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i < p)
            .map(|(i, &p)| (i, p))
            .collect()
    }

    /// Cuts the circle between `gap` and `gap + 1` and unfolds it onto a line.
    ///
    /// Panics if `gap` is not a point label.
    pub fn linearize(&self, gap: usize) -> ArcDiagram {
        let points = self.points();
        assert!(gap < points, "gap {gap} out of range for {points} points");
        let order: Vec<usize> = (0..points).map(|pos| (gap + 1 + pos) % points).collect();
        let mut arcs = Vec::with_capacity(self.strands());
        let mut depth = Vec::with_capacity(self.strands());
        let mut open = 0usize;
        for (pos, &label) in order.iter().enumerate() {
            let other = position(self.partner[label], gap, points);
            if other > pos {
                arcs.push((pos, other));
                depth.push(open);
                open += 1;
            } else {
                open -= 1;
            }
        }
        ArcDiagram {
            order,
            arcs,
            depth,
            cut_gap: gap,
        }
    }

    /// Number of outermost links after cutting between `gap` and `gap + 1`.
    pub fn exposure(&self, gap: usize) -> usize {
        self.outermost_links(gap).len()
    }

    /// Outermost links for the cut after `gap`, as `(a, b)` point labels
    /// with `a` to the left of `b`, listed left to right.
    pub fn outermost_links(&self, gap: usize) -> Vec<(usize, usize)> {
        let points = self.points();
        assert!(gap < points, "gap {gap} out of range for {points} points");
        let mut links = Vec::new();
        let mut pos = 0;
        while pos < points {
            let a = (gap + 1 + pos) % points;
            let b = self.partner[a];
            links.push((a, b));
            pos = position(b, gap, points) + 1;
        }
        links
    }

    /// Inserts a new strand so that the new points carry labels `i` and
    /// `i + 1` (mod `2n + 2`) in the result.
    ///
    /// For `i <= 2n` the new points go into the gap just before old point
    /// `i` (before old 0 when `i == 2n`). The wrap case `i == 2n + 1` places
    /// them between old 0 and old 1 and relabels old 0 as `2n`, so the new
    /// link is `(2n + 1, 0)`.
    pub fn insert_strand(&self, i: usize) -> Result<LinkPattern> {
        let old = self.points();
        let new = old + 2;
        if i >= new {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: new,
            });
        }
        let relabel = |j: usize| -> usize {
            if i < old {
                if j < i {
                    j
                } else {
                    j + 2
                }
            } else if i == old || j != 0 {
                j
            } else {
                old
            }
        };
        let mut partner = vec![0; new];
        for (j, &p) in self.partner.iter().enumerate() {
            partner[relabel(j)] = relabel(p);
        }
        let (a, b) = (i, (i + 1) % new);
        partner[a] = b;
        partner[b] = a;
        Ok(LinkPattern::from_partners_unchecked(partner))
    }

    /// Removes the strand `(i, i + 1 mod 2n)`; the inverse of
    /// [`insert_strand`](Self::insert_strand) at `i`.
    pub fn delete_strand(&self, i: usize) -> Result<LinkPattern> {
        let old = self.points();
        if i >= old {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: old,
            });
        }
        let j = (i + 1) % old;
        if self.partner[i] != j {
            return Err(Error::NoSuchStrand(i, j));
        }
        if old == 2 {
            return Err(Error::DomainError(
                "cannot delete the only strand of a pattern".into(),
            ));
        }
        let new = old - 2;
        let relabel = |x: usize| -> usize {
            if i + 1 < old {
                if x < i {
                    x
                } else {
                    x - 2
                }
            } else if x == new {
                0
            } else {
                x
            }
        };
        let mut partner = vec![0; new];
        for (x, &p) in self.partner.iter().enumerate() {
            if x != i && x != j {
                partner[relabel(x)] = relabel(p);
            }
        }
        Ok(LinkPattern::from_partners_unchecked(partner))
    }

    /// Relabels every point `i` as `i + r (mod 2n)`.
    pub fn rotate(&self, r: isize) -> LinkPattern {
        let points = self.points();
        let shift = r.rem_euclid(points as isize) as usize;
        let mut partner = vec![0; points];
        for (j, &p) in self.partner.iter().enumerate() {
            partner[(j + shift) % points] = (p + shift) % points;
        }
        LinkPattern { partner }
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.strands())?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

/// Position of `label` on the line obtained by cutting after `gap`.
fn position(label: usize, gap: usize, points: usize) -> usize {
    (label + points - gap - 1) % points
}

fn check_noncrossing(partner: &[usize]) -> Result<()> {
    let mut open: Vec<usize> = Vec::with_capacity(partner.len() / 2);
    for (i, &p) in partner.iter().enumerate() {
        if p > i {
            open.push(i);
        } else {
            let top = open.pop().expect("closing point always has an opener");
            if top != p {
                return Err(Error::Crossing(p, i, top, partner[top]));
            }
        }
    }
    Ok(())
}

/// A link pattern cut open and laid out on a line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcDiagram {
    order: Vec<usize>,
    arcs: Vec<(usize, usize)>,
    depth: Vec<usize>,
    cut_gap: usize,
}

impl ArcDiagram {
    /// Point labels from left to right.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Arcs as `(left, right)` positions, sorted by left end.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of arcs strictly enclosing each arc.
    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    pub fn cut_gap(&self) -> usize {
        self.cut_gap
    }

    pub fn outermost(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs
            .iter()
            .zip(&self.depth)
            .filter(|&(_, &d)| d == 0)
            .map(|(&arc, _)| arc)
    }

    pub fn exposure(&self) -> usize {
        self.depth.iter().filter(|&&d| d == 0).count()
    }

    /// Drawing height of each arc: 1 for an arc enclosing nothing, otherwise
    /// one more than the tallest arc it encloses.
    pub fn heights(&self) -> Vec<usize> {
        let mut heights = vec![1; self.arcs.len()];
        // Arcs are sorted by left end, so every enclosed arc comes later.
        for a in (0..self.arcs.len()).rev() {
            let (l, r) = self.arcs[a];
            let inner = self.arcs[a + 1..]
                .iter()
                .zip(&heights[a + 1..])
                .take_while(|((p, _), _)| *p < r)
                .filter(|((p, q), _)| *p > l && *q < r)
                .map(|(_, &h)| h)
                .max();
            if let Some(h) = inner {
                heights[a] = h + 1;
            }
        }
        heights
    }
}
