use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};
use rayon::prelude::*;

use catalan_tree::enumeration::{
    catalan, format_histogram, formula_histogram, histogram, histogram_total, par_histogram,
    Histogram,
};
use catalan_tree::io::{encode, parse_index_list, parse_path_code, parse_record, render};
use catalan_tree::io::{RenderFormat, RenderSpec};
use catalan_tree::stats::{convert, StatRecord, Statistic};
use catalan_tree::tree::{family_shards, iterate_from};
use catalan_tree::verify::{run_suite, Suite};
use catalan_tree::{
    apply_word, iterate_level, node_at, preimages, Error, Family, GeneratorIndex, TreeNode,
};

#[derive(Parser)]
#[command(
    name = "catalan-tree",
    version,
    about = "Catalan generating trees and the Temperley-Lieb action on link patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every node at one level, in tree order.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        size: usize,
        /// Append statistics to each record.
        #[arg(long)]
        stats: bool,
        /// Stop after this many records.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Count a level, optionally split by a statistic.
    Count {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        by: Option<Statistic>,
        /// Compare observed counts against the closed forms.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Convert records between families along the shared tree.
    Map {
        #[arg(long)]
        from: Family,
        #[arg(long)]
        to: Family,
    },
    /// Children of each record, in rank order.
    Children {
        #[arg(long)]
        family: Family,
        records: Vec<String>,
    },
    /// Parent of each record.
    Parent {
        #[arg(long)]
        family: Family,
        records: Vec<String>,
    },
    /// Path code of each record, or the node at `--at`.
    Code {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        at: Option<String>,
        records: Vec<String>,
    },
    /// Apply a generator or a word of generators to link patterns.
    #[command(group(ArgGroup::new("action").required(true).args(["gen", "word"])))]
    Apply {
        #[arg(long)]
        gen: Option<usize>,
        /// Comma-separated indices, applied left to right.
        #[arg(long)]
        word: Option<String>,
        records: Vec<String>,
    },
    /// Every link pattern sent to each record by one generator.
    Preimages {
        #[arg(long)]
        gen: usize,
        records: Vec<String>,
    },
    /// Run a self-check suite on levels 1..=size.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw records as text or SVG.
    Render {
        #[arg(long)]
        format: RenderFormat,
        #[arg(long, default_value_t = Family::Lp)]
        family: Family,
        /// SVG width in user units.
        #[arg(long, default_value_t = 200)]
        size: u32,
        /// Cut position for arc layouts.
        #[arg(long, default_value_t = 0)]
        gap: usize,
        records: Vec<String>,
    },
    /// Time level enumeration for sizes 1..=size.
    Bench {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = Family::Lp)]
        family: Family,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// `Ok(false)` signals a verification failure.
type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Positional records, or stdin lines when none are given.
fn records(args: Vec<String>) -> io::Result<Vec<String>> {
    if !args.is_empty() {
        return Ok(args);
    }
    io::stdin()
        .lock()
        .lines()
        .filter(|l| !matches!(l, Ok(s) if s.trim().is_empty()))
        .collect()
}

fn nodes(family: Family, args: Vec<String>) -> Result<Vec<TreeNode>, Failure> {
    records(args)?
        .iter()
        .map(|line| parse_record(line, family).map_err(Failure::from))
        .collect()
}

fn write_node(out: &mut impl Write, node: &TreeNode, stats: bool) -> io::Result<()> {
    if stats {
        writeln!(out, "{}", StatRecord::of(node))
    } else {
        writeln!(out, "{}", encode(node))
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Generate {
            family,
            size,
            stats,
            limit,
            jobs,
        } => generate(out, family, size, stats, limit, jobs),
        Command::Count {
            family,
            size,
            by,
            verify,
            jobs,
        } => count(out, family, size, by, verify, jobs),
        Command::Map { from, to } => {
            for node in nodes(from, Vec::new())? {
                writeln!(out, "{}", encode(&convert(&node, to)))?;
            }
            Ok(true)
        }
        Command::Children { family, records } => {
            for node in nodes(family, records)? {
                for child in node.children() {
                    writeln!(out, "{}", encode(&child))?;
                }
            }
            Ok(true)
        }
        Command::Parent { family, records } => {
            for node in nodes(family, records)? {
                writeln!(out, "{}", encode(&node.parent()?))?;
            }
            Ok(true)
        }
        Command::Code {
            family,
            at,
            records,
        } => {
            if let Some(code) = at {
                writeln!(
                    out,
                    "{}",
                    encode(&node_at(family, &parse_path_code(&code)?)?)
                )?;
                return Ok(true);
            }
            for node in nodes(family, records)? {
                writeln!(out, "{}", node.path_code())?;
            }
            Ok(true)
        }
        Command::Apply { gen, word, records } => {
            let indices = match (gen, word) {
                (Some(i), _) => vec![i],
                (None, Some(w)) => parse_index_list(&w)?,
                (None, None) => unreachable!("clap requires one of --gen, --word"),
            };
            for node in nodes(Family::Lp, records)? {
                let pi = node.as_link_pattern().expect("parsed as lp");
                let word = indices
                    .iter()
                    .map(|&i| GeneratorIndex::new(i, pi.strands()))
                    .collect::<Result<Vec<_>, _>>()?;
                let r = apply_word(pi, &word);
                writeln!(out, "{}\tloops={}", r.pattern, r.loops)?;
            }
            Ok(true)
        }
        Command::Preimages { gen, records } => {
            for node in nodes(Family::Lp, records)? {
                let pi = node.as_link_pattern().expect("parsed as lp");
                for tau in preimages(pi, GeneratorIndex::new(gen, pi.strands())?)? {
                    writeln!(out, "{tau}")?;
                }
            }
            Ok(true)
        }
        Command::Verify { suite, size, jobs } => {
            let checks = run_suite(suite, size, jobs)?;
            let passed = checks.iter().filter(|c| c.passed).count();
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            writeln!(out, "{passed}/{} checks passed", checks.len())?;
            Ok(passed == checks.len())
        }
        Command::Render {
            format,
            family,
            size,
            gap,
            records,
        } => {
            let spec = RenderSpec { format, size, gap };
            for node in nodes(family, records)? {
                write!(out, "{}", render(&node, &spec)?)?;
            }
            Ok(true)
        }
        Command::Bench { size, family } => {
            writeln!(out, "n\tcount\tpeak_frames\tseconds")?;
            for n in 1..=size {
                let start = Instant::now();
                let mut stream = iterate_level(family, n);
                let count = stream.by_ref().count();
                let secs = start.elapsed().as_secs_f64();
                writeln!(out, "{n}\t{count}\t{}\t{secs:.3}", stream.peak_frames())?;
            }
            Ok(true)
        }
    }
}

fn generate(
    out: &mut impl Write,
    family: Family,
    size: usize,
    stats: bool,
    limit: Option<usize>,
    jobs: usize,
) -> Outcome {
    let limit = limit.unwrap_or(usize::MAX);
    if jobs <= 1 {
        for node in iterate_level(family, size).take(limit) {
            write_node(out, &node, stats)?;
        }
        return Ok(true);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let mut remaining = limit;
    // shards come in tree order, so printing chunk results in order keeps the stream order
    for chunk in family_shards(family, size, jobs).chunks(jobs) {
        let blocks: Vec<Vec<u8>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|root| {
                    let mut buf = Vec::new();
                    for node in iterate_from(root, size).take(remaining) {
                        write_node(&mut buf, &node, stats).expect("write to memory");
                    }
                    buf
                })
                .collect()
        });
        for block in blocks {
            if remaining == 0 {
                return Ok(true);
            }
            for line in block.split_inclusive(|&b| b == b'\n').take(remaining) {
                out.write_all(line)?;
                remaining -= 1;
            }
        }
        if remaining == 0 {
            break;
        }
    }
    Ok(true)
}

fn count(
    out: &mut impl Write,
    family: Family,
    size: usize,
    by: Option<Statistic>,
    verify: bool,
    jobs: usize,
) -> Outcome {
    if size == 0 {
        return Err(Error::DomainError("size must be positive".into()).into());
    }
    let Some(statistic) = by else {
        let observed = if jobs <= 1 {
            iterate_level(family, size).count()
        } else {
            let shards = family_shards(family, size, jobs);
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool")
                .install(|| {
                    shards
                        .par_iter()
                        .map(|r| iterate_from(r, size).count())
                        .sum()
                })
        };
        if !verify {
            writeln!(out, "TOTAL\t{observed}")?;
            return Ok(true);
        }
        let formula = catalan(size);
        let ok = formula == observed.into();
        writeln!(out, "value\tformula\tobserved\tstatus")?;
        writeln!(out, "TOTAL\t{formula}\t{observed}\t{}", status(ok))?;
        return Ok(ok);
    };
    let observed = if jobs <= 1 {
        histogram(family, size, statistic)?
    } else {
        par_histogram(family, size, statistic, jobs)?
    };
    if !verify {
        write!(out, "{}", format_histogram(&observed))?;
        return Ok(true);
    }
    let formula = formula_histogram(size, statistic)?;
    write_comparison(out, &formula, &observed)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "MISMATCH"
    }
}

fn write_comparison(out: &mut impl Write, formula: &Histogram, observed: &Histogram) -> Outcome {
    let zero = Default::default();
    let mut all_ok = true;
    writeln!(out, "value\tformula\tobserved\tstatus")?;
    let keys: std::collections::BTreeSet<usize> =
        formula.keys().chain(observed.keys()).copied().collect();
    for k in keys {
        let f = formula.get(&k).unwrap_or(&zero);
        let o = observed.get(&k).unwrap_or(&zero);
        all_ok &= f == o;
        writeln!(out, "{k}\t{f}\t{o}\t{}", status(f == o))?;
    }
    let ft = histogram_total(formula);
    let ot = histogram_total(observed);
    all_ok &= ft == ot;
    writeln!(out, "TOTAL\t{ft}\t{ot}\t{}", status(ft == ot))?;
    Ok(all_ok)
}
