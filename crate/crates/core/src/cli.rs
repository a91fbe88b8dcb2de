//! The `bct` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification fails or the two derangement constructions disagree.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;

use crate::chain::BooleanComplex;
use crate::derangement::{
    alternating_excedance_set, cycle_count_histogram, derangements_by_criterion,
    derangements_recursive, valid_parsings, CyclePermutation, DerangementSet,
};
use crate::error::Error;
use crate::graph::{beta, make_family, parse_graph, Family, OrderedGraph};
use crate::homology::{phi_complete, phi_graph, verify_basis, Verdict, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

pub const SWEEP_CAP: u32 = 6;

#[derive(Parser, Debug)]
#[command(name = "bct", version, about = "Boolean complexes, derangements and F2 homology bases")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Criterion,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Derangement,
    Genocchi,
    Fibonacci,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Graph file.
    #[arg(conflicts_with = "family")]
    pub file: Option<PathBuf>,

    /// Family tag and parameter, e.g. `--family K 4`.
    #[arg(long, num_args = 2, value_names = ["TAG", "N"])]
    pub family: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the boolean number.
    Beta(GraphInput),
    /// List the derangement set in standard cycle form.
    Derangements {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        /// Keep only derangements with exactly this many cycles.
        #[arg(long)]
        cycles: Option<usize>,
        /// Print cycle-count totals instead of the listing.
        #[arg(long)]
        histogram: bool,
    },
    /// Verify the derangement basis of one graph or of every labeled graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Verify all labeled graphs on this many vertices.
        #[arg(long, conflicts_with_all = ["file", "family"])]
        sweep: Option<u32>,
        /// Lift the size caps.
        #[arg(long = "unsafe")]
        unsafe_: bool,
    },
    /// Tabulate a family identity against its brute-force oracle.
    Tables {
        #[arg(long, value_enum)]
        identity: Identity,
        #[arg(long)]
        max: u32,
        #[arg(long = "unsafe")]
        unsafe_: bool,
    },
    /// Expand φ(w) for a derangement written in cycle notation.
    Phi {
        permutation: String,
        /// Collapse to this graph instead of the complete graph.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Cycle-count histograms of D(G) under every relabeling of the graph.
    OrderProbe(GraphInput),
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

/// Output text plus the exit code it should be reported with.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn load_graph(input: &GraphInput) -> Result<OrderedGraph, Failure> {
    match (&input.file, &input.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            parse_graph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        (None, Some(family_arg)) => {
            let family: Family = family_arg[0].parse()?;
            let n: u32 = family_arg[1]
                .parse()
                .map_err(|_| usage(format!("bad family parameter {:?}", family_arg[1])))?;
            Ok(make_family(family, n)?)
        }
        (None, None) => Err(usage("give a graph file or --family TAG N")),
        (Some(_), Some(_)) => Err(usage("a graph file and --family are mutually exclusive")),
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn cmd_beta(input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = load_graph(input)?;
    let b = beta(&g)?;
    Ok(Outcome::ok(match format {
        Format::Text => format!("{b}\n"),
        Format::Json => to_json(&json!({ "beta": b })),
    }))
}

fn cmd_derangements(
    input: &GraphInput,
    method: Method,
    cycles: Option<usize>,
    histogram: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let g = load_graph(input)?;
    let (set, agree): (DerangementSet, Option<bool>) = match method {
        Method::Recursive => (derangements_recursive(&g)?, None),
        Method::Criterion => (derangements_by_criterion(&g)?, None),
        Method::Both => {
            let rec = derangements_recursive(&g)?;
            let crit = derangements_by_criterion(&g)?;
            let same = rec == crit;
            (rec, Some(same))
        }
    };
    let set: Vec<&CyclePermutation> = set
        .iter()
        .filter(|w| cycles.is_none_or(|k| w.cycle_count() == k))
        .collect();
    let code = if agree == Some(false) { EXIT_FAILED } else { EXIT_OK };

    let text = if histogram {
        let hist = cycle_count_histogram(set.iter().copied());
        match format {
            Format::Text => lines(hist.iter().map(|(k, c)| format!("{k} {c}"))),
            Format::Json => to_json(&hist),
        }
    } else {
        match format {
            Format::Text => {
                let mut out = lines(&set);
                if let Some(same) = agree {
                    out.push_str(if same { "EQUAL\n" } else { "DIFFER\n" });
                }
                out
            }
            Format::Json => to_json(&json!({ "derangements": set, "agree": agree })),
        }
    };
    Ok(Outcome { text, code })
}

fn report_text(r: &VerificationReport) -> String {
    format!(
        "graph: {}\nbeta: {}\nd_count_recursive: {}\nd_count_criterion: {}\nkernel_dim: {}\nbasis_rank: {}\ncycles_closed: {}\nverdict: {}\n",
        r.graph
            .edges
            .iter()
            .map(|[a, b]| format!("{a}-{b}"))
            .join(" ")
            + &format!(" on {:?}", r.graph.vertices),
        r.beta,
        r.d_count_recursive,
        r.d_count_criterion,
        r.kernel_dim,
        r.basis_rank,
        r.cycles_closed,
        r.verdict
    )
}

fn cmd_verify(
    input: &GraphInput,
    sweep: Option<u32>,
    unsafe_: bool,
    format: Format,
) -> Result<Outcome, Failure> {
    let cap_check = |n: usize| {
        if n > SWEEP_CAP as usize && !unsafe_ {
            Err(usage(format!(
                "{n} vertices exceeds the cap of {SWEEP_CAP}; pass --unsafe to proceed"
            )))
        } else {
            Ok(())
        }
    };
    if let Some(n) = sweep {
        cap_check(n as usize)?;
        if n == 0 {
            return Err(usage("sweep needs at least one vertex"));
        }
        let graphs: Vec<OrderedGraph> = OrderedGraph::all_labeled(n).collect();
        let reports: Vec<VerificationReport> = graphs
            .par_iter()
            .map(verify_basis)
            .collect::<Result<_, Error>>()?;
        let passed = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
        let failures: Vec<&VerificationReport> =
            reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
        let code = if failures.is_empty() { EXIT_OK } else { EXIT_FAILED };
        let text = match format {
            Format::Text => {
                let mut out = format!("{} graphs, {} PASS\n", reports.len(), passed);
                for f in &failures {
                    out.push_str(&format!("FAIL {:?}\n", f.graph.edges));
                }
                out
            }
            Format::Json => to_json(&json!({
                "graphs": reports.len(),
                "pass": passed,
                "fail": failures.len(),
                "failures": failures,
            })),
        };
        return Ok(Outcome { text, code });
    }

    let g = load_graph(input)?;
    cap_check(g.len())?;
    let report = verify_basis(&g)?;
    let code = if report.verdict == Verdict::Pass { EXIT_OK } else { EXIT_FAILED };
    let text = match format {
        Format::Text => report_text(&report),
        Format::Json => to_json(&report),
    };
    Ok(Outcome { text, code })
}

fn cmd_tables(identity: Identity, max: u32, unsafe_: bool, format: Format) -> Result<Outcome, Failure> {
    let bound = match identity {
        Identity::Derangement => 7,
        Identity::Genocchi => 4,
        Identity::Fibonacci => 10,
    };
    if max > bound && !unsafe_ {
        return Err(usage(format!("--max {max} exceeds {bound}; pass --unsafe to proceed")));
    }
    let mut rows = Vec::new();
    for n in 1..=max {
        let (value, oracle) = match identity {
            Identity::Derangement => {
                let ids: Vec<u32> = (1..=n).collect();
                let value = beta(&make_family(Family::Complete, n)?)?;
                (value, crate::derangement::all_derangements(&ids).len() as u64)
            }
            Identity::Genocchi => {
                let value = beta(&make_family(Family::Ferrers, n)?)?;
                (value, alternating_excedance_set(n).len() as u64)
            }
            Identity::Fibonacci => {
                let value = derangements_recursive(&make_family(Family::A, n)?)?.len() as u64;
                let ids: Vec<u32> = (1..=n).collect();
                (value, valid_parsings(&ids)?.len() as u64)
            }
        };
        rows.push((n, value, oracle));
    }
    let text = match format {
        Format::Text => {
            let header = match identity {
                Identity::Derangement => "n beta(K_n) d_n match",
                Identity::Genocchi => "r beta(F_r) |AE_2r| match",
                Identity::Fibonacci => "n |D(A_n)| |VP(1..n)| match",
            };
            let mut out = format!("{header}\n");
            for (n, v, o) in &rows {
                out.push_str(&format!("{n} {v} {o} {}\n", v == o));
            }
            out
        }
        Format::Json => to_json(
            &rows
                .iter()
                .map(|(n, v, o)| json!({ "n": n, "value": v, "oracle": o, "match": v == o }))
                .collect::<Vec<_>>(),
        ),
    };
    let code = if rows.iter().all(|(_, v, o)| v == o) { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { text, code })
}

fn cmd_phi(permutation: &str, graph: Option<&PathBuf>, format: Format) -> Result<Outcome, Failure> {
    let w: CyclePermutation = permutation.parse()?;
    if !w.is_derangement() {
        return Err(usage(format!("{w} is not a derangement")));
    }
    let chain = match graph {
        None => phi_complete(&w)?,
        Some(path) => {
            let g = load_graph(&GraphInput {
                file: Some(path.clone()),
                family: None,
            })?;
            phi_graph(&w, &BooleanComplex::new(g)?)?
        }
    };
    let text = match format {
        Format::Text => {
            let mut out = lines(chain.terms());
            out.push_str(&format!("{} terms\n", chain.len()));
            out
        }
        Format::Json => to_json(&json!({ "terms": chain.to_json(), "count": chain.len() })),
    };
    Ok(Outcome::ok(text))
}

fn cmd_order_probe(input: &GraphInput, format: Format) -> Result<Outcome, Failure> {
    let g = load_graph(input)?;
    if g.len() > 7 {
        return Err(usage("order probe is limited to 7 vertices"));
    }
    let (n, edges): (usize, Vec<(u8, u8)>) = g.canonical_key();
    let mut seen: BTreeMap<Vec<(usize, usize)>, usize> = BTreeMap::new();
    for relabel in (1..=n as u32).permutations(n) {
        let h = OrderedGraph::from_edges(
            n as u32,
            edges
                .iter()
                .map(|&(a, b)| (relabel[a as usize], relabel[b as usize])),
        )?;
        let hist: Vec<(usize, usize)> = cycle_count_histogram(&derangements_recursive(&h)?)
            .into_iter()
            .collect();
        *seen.entry(hist).or_insert(0) += 1;
    }
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for (hist, count) in &seen {
                let h = hist.iter().map(|(k, c)| format!("{k}:{c}")).join(" ");
                out.push_str(&format!("{count} orderings: {h}\n"));
            }
            out.push_str(if seen.len() == 1 { "INVARIANT\n" } else { "VARIES\n" });
            out
        }
        Format::Json => to_json(
            &seen
                .iter()
                .map(|(hist, count)| json!({ "orderings": count, "histogram": hist }))
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Outcome::ok(text))
}

/// Parses `args` (including the program name) and runs the command,
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
            } else {
                let _ = write!(stdout, "{e}");
            }
            return code;
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Beta(input) => cmd_beta(input, format),
        Command::Derangements {
            input,
            method,
            cycles,
            histogram,
        } => cmd_derangements(input, *method, *cycles, *histogram, format),
        Command::Verify {
            input,
            sweep,
            unsafe_,
        } => cmd_verify(input, *sweep, *unsafe_, format),
        Command::Tables {
            identity,
            max,
            unsafe_,
        } => cmd_tables(*identity, *max, *unsafe_, format),
        Command::Phi { permutation, graph } => cmd_phi(permutation, graph.as_ref(), format),
        Command::OrderProbe(input) => cmd_order_probe(input, format),
    };
    match result {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &outcome.text),
                None => stdout.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "bct: {e}");
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "bct: {}", f.message);
            f.code
        }
    }
}
