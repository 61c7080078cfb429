//! Self-checks run by the `verify` subcommand. Each suite returns one
//! [`Check`] per (property, level) pair.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::enumeration::catalan;
use crate::error::{Error, Result};
use crate::link_pattern::LinkPattern;
use crate::oracle::{brute_avoiders, brute_patterns, brute_preimages, PREIMAGE_LIMIT};
use crate::stats::{convert, interaction};
use crate::temperley_lieb::{apply_generator, check_relations, preimages, GeneratorIndex};
use crate::tree::{iterate_level, Family, TreeNode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Oracle,
    Relations,
    Succession,
    Transport,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "relations" => Ok(Suite::Relations),
            "succession" => Ok(Suite::Succession),
            "transport" => Ok(Suite::Transport),
            other => Err(Error::parse(1, format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}\t{}\t{}", self.name, self.detail)
    }
}

/// Runs `suite` for every level `1..=n`, levels spread over `jobs` threads.
pub fn run_suite(suite: Suite, n: usize, jobs: usize) -> Result<Vec<Check>> {
    if n == 0 {
        return Err(Error::DomainError("size must be positive".into()));
    }
    if suite == Suite::Oracle && n > PREIMAGE_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: PREIMAGE_LIMIT,
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let per_level: Vec<Vec<Check>> = pool.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|m| match suite {
                Suite::Oracle => oracle_level(m),
                Suite::Relations => Ok(relations_level(m)),
                Suite::Succession => Ok(succession_level(m)),
                Suite::Transport => Ok(transport_level(m)),
            })
            .collect::<Result<_>>()
    })?;
    Ok(per_level.into_iter().flatten().collect())
}

fn oracle_level(m: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let streamed: Vec<LinkPattern> = iterate_level(Family::Lp, m)
        .map(|n| n.as_link_pattern().cloned().expect("lp stream"))
        .collect();
    let set: BTreeSet<LinkPattern> = streamed.iter().cloned().collect();
    let brute = brute_patterns(m)?;
    checks.push(Check::new(
        format!("oracle/lp level {m}"),
        set.len() == streamed.len() && set == brute,
        format!(
            "{} streamed, {} by brute force",
            streamed.len(),
            brute.len()
        ),
    ));

    let perms: BTreeSet<_> = iterate_level(Family::Perm, m)
        .map(|n| n.as_perm().cloned().expect("perm stream"))
        .collect();
    let brute = brute_avoiders(m)?;
    checks.push(Check::new(
        format!("oracle/perm level {m}"),
        perms == brute,
        format!("{} streamed, {} by brute force", perms.len(), brute.len()),
    ));

    let last = 2 * m - 1;
    let mut compared = 0;
    let mut mismatch = None;
    for pi_prime in brute_patterns(m)?.iter().filter(|p| p.has_link(last, 0)) {
        let fast: BTreeSet<_> = preimages(pi_prime, GeneratorIndex::last(m))?
            .into_iter()
            .collect();
        let slow = brute_preimages(pi_prime, last)?;
        compared += 1;
        if fast != slow && mismatch.is_none() {
            mismatch = Some(pi_prime.to_string());
        }
    }
    checks.push(Check::new(
        format!("oracle/preimages level {m}"),
        mismatch.is_none(),
        match mismatch {
            None => format!("{compared} patterns agree"),
            Some(p) => format!("mismatch at {p}"),
        },
    ));
    Ok(checks)
}

fn relations_level(m: usize) -> Vec<Check> {
    let report = check_relations(m);
    let mut checks = vec![Check::new(
        format!("relations/required n={m}"),
        report.passed(),
        match report.failures().next() {
            None => format!("{} instances hold", report.records.len()),
            Some(r) => format!("{} {:?} fails", r.relation.id(), r.indices),
        },
    )];
    if let Some(lit) = report.literal_pair() {
        let detail = match &lit.witness {
            Some(w) => format!("witness {}: {} vs {}", w.pattern, w.left, w.right),
            None => "no witness".into(),
        };
        checks.push(Check::new(
            format!("relations/literal e0,e{} n={m}", 2 * m - 1),
            !lit.holds && lit.witness.is_some(),
            detail,
        ));
    }
    checks
}

fn succession_level(m: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for family in Family::ALL {
        let mut nodes = 0usize;
        let mut children_seen: HashSet<TreeNode> = HashSet::new();
        let mut failure: Option<String> = None;
        let mut fail = |msg: String| {
            failure.get_or_insert(msg);
        };
        for node in iterate_level(family, m) {
            nodes += 1;
            let label = node.label();
            let kids = node.children();
            let labels: Vec<usize> = kids.iter().map(|k| k.label()).collect();
            if labels != (2..=label + 1).collect::<Vec<_>>() {
                fail(format!("{node}: child labels {labels:?} for label {label}"));
            }
            for (r, kid) in kids.iter().enumerate() {
                if kid.child_rank() != Ok(r + 1) || kid.parent().as_ref() != Ok(&node) {
                    fail(format!("{kid}: rank or parent mismatch"));
                }
                if let (TreeNode::Lp(p), TreeNode::Lp(c)) = (&node, kid) {
                    let e = GeneratorIndex::last(c.strands());
                    let prime = p.insert_strand(p.points() + 1).expect("wrap index");
                    if apply_generator(c, e).pattern != prime {
                        fail(format!("{c}: e_{} does not return {prime}", e.index()));
                    }
                }
                if !children_seen.insert(kid.clone()) {
                    fail(format!("{kid}: produced by two parents"));
                }
            }
        }
        let expected = catalan(m + 1);
        if catalan(m) != nodes.into() || expected != children_seen.len().into() {
            fail(format!(
                "level {} has {} distinct children, expected {expected}",
                m + 1,
                children_seen.len()
            ));
        }
        checks.push(Check::new(
            format!("succession/{family} level {m}"),
            failure.is_none(),
            failure.unwrap_or_else(|| format!("{nodes} nodes, {} children", children_seen.len())),
        ));
    }
    checks
}

fn transport_level(m: usize) -> Vec<Check> {
    let mut failure: Option<String> = None;
    let mut dyck_images = HashSet::new();
    let mut perm_images = HashSet::new();
    let mut nodes = 0usize;
    for node in iterate_level(Family::Lp, m) {
        nodes += 1;
        let pi = node.as_link_pattern().expect("lp stream");
        let d = convert(&node, Family::Dyck);
        let p = convert(&node, Family::Perm);
        let dyck = d.as_dyck().expect("dyck image");
        let problem = if dyck.last_descent_length() != pi.exposure(0) {
            Some("last descent length differs from exposure")
        } else if dyck.peaks() != interaction(pi) + 1 {
            Some("peaks differ from interaction + 1")
        } else if convert(&d, Family::Perm) != p || convert(&p, Family::Lp) != node {
            Some("conversions do not compose")
        } else {
            None
        };
        if let Some(msg) = problem {
            failure.get_or_insert(format!("{node}: {msg}"));
        }
        dyck_images.insert(d);
        perm_images.insert(p);
    }
    if dyck_images.len() != nodes || perm_images.len() != nodes {
        failure.get_or_insert("conversion is not injective".into());
    }

    if m >= 2 {
        for node in iterate_level(Family::Dyck, m) {
            let parent = node.parent().expect("level >= 2");
            let d = node.as_dyck().expect("dyck").peaks();
            let pd = parent.as_dyck().expect("dyck").peaks();
            let rank = node.child_rank().expect("level >= 2");
            let expected = if rank == parent.label() { 0 } else { 1 };
            if d != pd + expected {
                failure.get_or_insert(format!("{node}: peak change {} on rank {rank}", d - pd));
            }
            let lp = convert(&node, Family::Lp);
            let lp_parent = convert(&parent, Family::Lp);
            let gain = interaction(lp.as_link_pattern().expect("lp"))
                - interaction(lp_parent.as_link_pattern().expect("lp"));
            if gain != expected {
                failure.get_or_insert(format!("{lp}: interaction change {gain} on rank {rank}"));
            }
        }
    }
    vec![Check::new(
        format!("transport level {m}"),
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{nodes} nodes")),
    )]
}
