//! Exact counting: Catalan numbers, the ballot-type counts by exposure (or
//! last descent length), and the Narayana counts by interaction number (or
//! peaks), together with empirical histograms taken over a tree level.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::stats::Statistic;
use crate::tree::{family_shards, iterate_from, iterate_level, Family};

pub type BigCount = BigUint;

/// Bucket value to exact count, sorted by value.
pub type Histogram = BTreeMap<usize, BigCount>;

/// `C(n, k)` by multiplicative accumulation; every partial product is an
/// exact binomial, so each division is exact.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc = exact_div(acc, BigCount::from(i));
    }
    acc
}

fn exact_div(num: BigCount, den: BigCount) -> BigCount {
    let rem = &num % &den;
    assert!(rem.is_zero(), "inexact division {num} / {den}");
    num / den
}

pub fn catalan(n: usize) -> BigCount {
    exact_div(binomial(2 * n, n), BigCount::from(n + 1))
}

/// Patterns of `n` strands with exposure `k`, `k/(2n-k) * C(2n-k, n)`.
pub fn count_by_exposure(n: usize, k: usize) -> Result<BigCount> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::DomainError(format!(
            "exposure count needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let m = 2 * n - k;
    Ok(exact_div(binomial(m, n) * k, BigCount::from(m)))
}

/// Patterns of `n` strands with interaction number `ell`,
/// `(1/n) * C(n, ell+1) * C(n, ell)`.
pub fn count_by_interaction(n: usize, ell: usize) -> Result<BigCount> {
    if n == 0 || ell >= n {
        return Err(Error::DomainError(format!(
            "interaction count needs 0 <= ell <= n-1, got n={n}, ell={ell}"
        )));
    }
    Ok(exact_div(
        binomial(n, ell + 1) * binomial(n, ell),
        BigCount::from(n),
    ))
}

fn check_family(family: Family, statistic: Statistic) -> Result<()> {
    if statistic.family() != family {
        return Err(Error::Unsupported {
            what: format!("statistic {statistic}"),
            family,
        });
    }
    Ok(())
}

fn to_histogram(counts: BTreeMap<usize, u64>) -> Histogram {
    counts
        .into_iter()
        .map(|(k, v)| (k, BigCount::from(v)))
        .collect()
}

/// Observed distribution of `statistic` over every level-`n` node.
pub fn histogram(family: Family, n: usize, statistic: Statistic) -> Result<Histogram> {
    check_family(family, statistic)?;
    let mut counts = BTreeMap::new();
    for node in iterate_level(family, n) {
        *counts.entry(statistic.value(&node)?).or_insert(0u64) += 1;
    }
    Ok(to_histogram(counts))
}

/// [`histogram`] computed over subtrees on `jobs` threads.
pub fn par_histogram(
    family: Family,
    n: usize,
    statistic: Statistic,
    jobs: usize,
) -> Result<Histogram> {
    check_family(family, statistic)?;
    if jobs <= 1 || n == 0 {
        return histogram(family, n, statistic);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let shards = family_shards(family, n, jobs);
    let counts = pool.install(|| {
        shards
            .par_iter()
            .map(|root| {
                let mut counts = BTreeMap::new();
                for node in iterate_from(root, n) {
                    let v = statistic.value(&node).expect("family checked above");
                    *counts.entry(v).or_insert(0u64) += 1;
                }
                counts
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            })
    });
    Ok(to_histogram(counts))
}

/// Closed-form distribution of `statistic` at level `n`.
pub fn formula_histogram(n: usize, statistic: Statistic) -> Result<Histogram> {
    if n == 0 {
        return Err(Error::DomainError("size must be positive".into()));
    }
    let mut out = Histogram::new();
    match statistic {
        Statistic::Exposure | Statistic::LastDescentLength => {
            for k in 1..=n {
                out.insert(k, count_by_exposure(n, k)?);
            }
        }
        Statistic::Interaction => {
            for ell in 0..n {
                out.insert(ell, count_by_interaction(n, ell)?);
            }
        }
        Statistic::Peaks => {
            for j in 1..=n {
                out.insert(j, count_by_interaction(n, j - 1)?);
            }
        }
        Statistic::FirstAscentLabel => {
            return Err(Error::Unsupported {
                what: "closed form for statistic label".into(),
                family: Family::Perm,
            })
        }
    }
    Ok(out)
}

pub fn histogram_total(h: &Histogram) -> BigCount {
    h.values().sum()
}

/// One `value<TAB>count` line per bucket, then `TOTAL<TAB>count`.
pub fn format_histogram(h: &Histogram) -> String {
    let mut out = String::new();
    for (k, v) in h {
        writeln!(out, "{k}\t{v}").unwrap();
    }
    writeln!(out, "TOTAL\t{}", histogram_total(h)).unwrap();
    out
}
