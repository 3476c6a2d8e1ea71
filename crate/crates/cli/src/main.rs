//! `partdim`: generate graphs, compute k-partition and k-metric dimensions,
//! verify certificates, and run bound-checking sweeps.
//!
//! Exit codes: 0 success, 1 computational failure (including a failed
//! verification), 2 invalid input, 3 sweep failure with a counterexample dump.

mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use partdim::io::{read_graph, read_partition, write_graph, write_partition};
use partdim::sweep::{run_suite, Suite, SweepConfig};
use partdim::{
    clique_number, construct_partition, dim_k_bruteforce_with, exterior_major_records, generate,
    is_k_partition_generator, min_block_support, pd_k_bruteforce_with, tree_dim_k, twin_classes,
    varsigma, DistinguishProfile, Error, Graph, SearchLimits,
};

use report::Report;

#[derive(Parser)]
#[command(
    name = "partdim",
    version,
    about = "k-partition and k-metric dimension of graphs"
)]
struct Cli {
    /// Append wall-clock time per step to every report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family as an edge list.
    Gen {
        /// path, cycle, complete, complete_bipartite, star, wheel, fan,
        /// complete_minus_edge or random_tree.
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dimensional values, twin classes, clique number and varsigma.
    Dims { graph: PathBuf },
    /// The k-partition dimension, with a certificate.
    Pd {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Build a partition for a path or tree instead of searching.
        #[arg(long, conflicts_with = "brute")]
        construct: bool,
        /// Exhaustive search (the default).
        #[arg(long)]
        brute: bool,
        /// Write the partition found to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// The k-metric dimension.
    Dim {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
        /// Closed form for trees that are not paths.
        #[arg(long, conflicts_with = "brute")]
        tree: bool,
        /// Exhaustive search (the default).
        #[arg(long)]
        brute: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Check that a partition file is a k-partition generator.
    Verify {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Run a named suite of bound checks.
    Sweep {
        /// paths, cycles, complete, trees or exhaustive.
        suite: String,
        /// Orders to cover: `N` (upper end) or `A..B` (inclusive).
        #[arg(long)]
        n: Option<String>,
        /// Number of random trees in the trees suite.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Counterexample file written when a check fails.
        #[arg(long, default_value = "counterexamples.txt")]
        dump: PathBuf,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Args)]
struct LimitArgs {
    /// Largest order accepted by exhaustive search. Overrides PARTDIM_MAX_N.
    #[arg(long)]
    max_n: Option<usize>,
}

impl LimitArgs {
    fn resolve(&self) -> SearchLimits {
        self.max_n
            .map_or_else(SearchLimits::from_env, SearchLimits::uniform)
    }
}

enum Failure {
    Invalid(String),
    Computation(String),
    Sweep(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Computation(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Sweep(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::Computation(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let code = failure.code();
            match failure {
                Failure::Invalid(msg) => eprintln!("error: {msg}"),
                Failure::Computation(msg) | Failure::Sweep(msg) => print!("{msg}"),
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let timings = cli.timings;
    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
            output,
        } => gen(&family, &params, seed, output.as_deref(), timings),
        Command::Dims { graph } => dims(&graph, timings),
        Command::Pd {
            graph,
            k,
            construct,
            output,
            limits,
            ..
        } => pd(
            &graph,
            k,
            construct,
            output.as_deref(),
            &limits.resolve(),
            timings,
        ),
        Command::Dim {
            graph,
            k,
            tree,
            limits,
            ..
        } => dim(&graph, k, tree, &limits.resolve(), timings),
        Command::Verify {
            graph,
            partition,
            k,
        } => verify(&graph, &partition, k, timings),
        Command::Sweep {
            suite,
            n,
            count,
            seed,
            dump,
            limits,
        } => sweep(
            &suite,
            n.as_deref(),
            count,
            seed,
            &dump,
            &limits.resolve(),
            timings,
        ),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::Computation(format!("cannot write {}: {e}\n", path.display())))
}

fn load_graph(path: &Path, report: &mut Report) -> Result<Graph, Failure> {
    let g = read_graph(&read_text(path)?)?;
    report
        .field("graph", path.display())
        .field("n", g.order())
        .field("m", g.size());
    Ok(g)
}

fn gen(family: &str, params: &[usize], seed: u64, output: Option<&Path>, timings: bool) -> Outcome {
    let g = generate(family, params, seed)?;
    let text = write_graph(&g);
    let Some(path) = output else {
        return Ok(text);
    };
    write_text(path, &text)?;
    let mut report = Report::new("gen", timings);
    report
        .field("family", family)
        .field(
            "params",
            params
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        )
        .field("seed", seed)
        .field("n", g.order())
        .field("m", g.size())
        .field("output", path.display());
    Ok(report.to_string())
}

fn dims(path: &Path, timings: bool) -> Outcome {
    let mut report = Report::new("dims", timings);
    let g = load_graph(path, &mut report)?;
    let profile = report.timed("profile", || DistinguishProfile::new(&g))?;
    let twins: Vec<Vec<usize>> = twin_classes(&g)
        .into_iter()
        .filter(|c| c.len() > 1)
        .collect();
    let omega = report.timed("clique", || clique_number(&g));
    report
        .field("d", profile.d_min)
        .field("d_star", profile.d_max)
        .field("twin_classes", report::blocks(&twins))
        .field("clique_number", omega);
    match varsigma(&g) {
        Ok(s) => {
            let majors = exterior_major_records(&g)?
                .into_iter()
                .filter(|r| r.ter() >= 2)
                .map(|r| r.vertex);
            report
                .field("exterior_major_vertices", report::set(majors))
                .field("varsigma", s);
        }
        Err(Error::NoExteriorMajorVertex) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(report.to_string())
}

fn pd(
    path: &Path,
    k: usize,
    construct: bool,
    output: Option<&Path>,
    limits: &SearchLimits,
    timings: bool,
) -> Outcome {
    let mut report = Report::new("pd", timings);
    let g = load_graph(path, &mut report)?;
    report.field("k", k);
    let result = if construct {
        report.timed("construct", || construct_partition(&g, k))?
    } else {
        report.timed("search", || pd_k_bruteforce_with(&g, k, limits))?
    };
    let verified = report.timed("verify", || is_k_partition_generator(&g, &result.basis, k))?;
    report
        .field("pd_k", result.value)
        .field("method", result.method)
        .field("partition", report::blocks(result.basis.blocks()))
        .field("verified", verified);
    if let Some(out) = output {
        write_text(out, &write_partition(&result.basis))?;
        report.field("certificate", out.display());
    }
    if verified {
        Ok(report.to_string())
    } else {
        Err(Failure::Computation(report.to_string()))
    }
}

fn dim(path: &Path, k: usize, tree: bool, limits: &SearchLimits, timings: bool) -> Outcome {
    let mut report = Report::new("dim", timings);
    let g = load_graph(path, &mut report)?;
    report.field("k", k);
    let result = if tree {
        report.timed("formula", || tree_dim_k(&g, k))?
    } else {
        report.timed("search", || dim_k_bruteforce_with(&g, k, limits))?
    };
    report
        .field("dim_k", result.value)
        .field("method", result.method);
    if let Some(basis) = &result.basis {
        report.field("basis", report::set(basis.iter().copied()));
    }
    Ok(report.to_string())
}

fn verify(graph: &Path, partition: &Path, k: usize, timings: bool) -> Outcome {
    let mut report = Report::new("verify", timings);
    let g = load_graph(graph, &mut report)?;
    if k == 0 {
        return Err(Failure::Invalid("k must be at least 1".to_string()));
    }
    let p = read_partition(&read_text(partition)?, &g)?;
    let (support, (x, y)) = report.timed("verify", || min_block_support(&g, &p))?;
    let pass = support >= k;
    report
        .field("partition", partition.display())
        .field("blocks", p.len())
        .field("k", k)
        .field("result", if pass { "pass" } else { "fail" })
        .field("min_support", support)
        .field("worst_pair", format!("{x} {y}"));
    if pass {
        Ok(report.to_string())
    } else {
        Err(Failure::Computation(report.to_string()))
    }
}

fn parse_orders(range: &str, default_min: usize) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Invalid(format!("invalid order range `{range}`"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match range.split_once("..") {
        Some((lo, hi)) => Ok((number(lo)?, number(hi.trim_start_matches('='))?)),
        None => Ok((default_min, number(range)?)),
    }
}

fn sweep(
    name: &str,
    orders: Option<&str>,
    count: Option<usize>,
    seed: Option<u64>,
    dump: &Path,
    limits: &SearchLimits,
    timings: bool,
) -> Outcome {
    let suite: Suite = name.parse()?;
    let mut config = SweepConfig::for_suite(suite);
    if let Some(range) = orders {
        (config.min_n, config.max_n) = parse_orders(range, config.min_n)?;
    }
    if let Some(count) = count {
        config.count = count;
    }
    if let Some(seed) = seed {
        config.seed = seed;
    }
    config.limits = *limits;

    let mut report = Report::new("sweep", timings);
    let outcome = report.timed("sweep", || run_suite(suite, &config))?;
    report
        .field("suite", suite)
        .field("orders", format!("{}..={}", config.min_n, config.max_n));
    if suite == Suite::Trees {
        report
            .field("count", config.count)
            .field("seed", config.seed);
    }
    report
        .field("instances", outcome.instance_count())
        .field("checks", outcome.rows.len());

    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for row in &outcome.rows {
        let entry = tally.entry(&row.check).or_default();
        entry.0 += usize::from(row.holds);
        entry.1 += 1;
    }
    for (check, (held, total)) in tally {
        let status = if held == total { "pass" } else { "FAIL" };
        report.field(format!("check.{check}"), format!("{status} {held}/{total}"));
    }
    for note in &outcome.notes {
        report.field("note", note);
    }
    for row in outcome.failures() {
        report.field(
            "failure",
            format!("{} {}: {}", row.instance, row.check, row.detail),
        );
    }
    report.field("result", if outcome.passed() { "pass" } else { "fail" });
    if outcome.passed() {
        return Ok(report.to_string());
    }
    write_text(dump, &outcome.counterexample_dump())?;
    report.field("dump", dump.display());
    Err(Failure::Sweep(report.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!(parse_orders("3..9", 2).ok(), Some((3, 9)));
        assert_eq!(parse_orders("3..=9", 2).ok(), Some((3, 9)));
        assert_eq!(parse_orders("6", 2).ok(), Some((2, 6)));
        assert!(parse_orders("x", 2).is_err());
    }
}
