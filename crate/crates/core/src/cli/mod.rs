//! The `cubeturan` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success (or the graph is free), 1 `verify` found a copy,
//! 2 usage or parameter error, 3 search budget exceeded, 4 internal limit.

mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use output::{envelope, to_csv, Format};
use output::{emit, error_json, render};

use crate::bounds::{
    bound_sandwich_report, eval_bound, eval_sides, subject_patterns, BoundParams, Measured, Side,
    TheoremId,
};
use crate::constructions::{ConstructionKind, ConstructionSpec};
use crate::counting::{
    ceil_log2, closed_form_report, count_report, count_z_words, enumerate_z_words, z_ll_via_words,
    ZTable,
};
use crate::cube::{FullCube, Subgraph};
use crate::error::{Error, Result};
use crate::json::ratio;
use crate::search::{self, Budget, SearchOptions, TieOrder};
use crate::verification::{has_k_partite_representation, verify_free};
use crate::Pattern;

#[derive(Parser, Debug)]
#[command(name = "cubeturan", version, about = "Generalized Turán numbers in the hypercube")]
struct Cli {
    /// Worker threads (default: available parallelism). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t)]
    format: Format,

    /// z-table cache file, read at start and rewritten when it grows.
    #[arg(long, global = true, env = "CUBETURAN_ZCACHE")]
    z_cache: Option<PathBuf>,

    /// No summary on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count copies of a pattern in Q_n (closed form) or in a subgraph file.
    Count {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        pattern: Pattern,
        /// Count by enumeration in Q_n instead of the closed form.
        #[arg(long)]
        enumerate: bool,
        graph: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// z_{k,l}: 2l-cycles of Q_k using every direction.
    Zl {
        #[arg(long)]
        l: usize,
        /// One entry; default is every k from ceil(log2 2l) to l.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count (or list) the words of Z(l) and derive z_{l,l} from them.
    Zwords {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named construction and write it with its JSON sidecar.
    Construct {
        #[arg(value_parser = parse_kind)]
        name: ConstructionKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// mod3-select: every segment sum divisible by 3.
        #[arg(long)]
        all_zero: bool,
        /// layer-mod: take the complement of the layer union.
        #[arg(long)]
        complement: bool,
        /// Subgraph file; the sidecar goes to the same path plus `.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that a subgraph file contains no copy of a pattern.
    Verify {
        #[arg(long)]
        forbid: Pattern,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact ex(Q_n, target, forbid) with a witness subgraph.
    Search {
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness subgraph here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact d(Q_n, target, forbid) as a reduced fraction.
    Density {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a theorem's bounds, optionally against a measured density.
    Bounds {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        /// A density such as 3/16 to compare against.
        #[arg(long, conflicts_with = "exact")]
        measured: Option<BigRational>,
        /// Compare against the exact density at n, found by search.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the edges in a Q_l subgraph file are k-partite.
    Kpartite {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    target: Pattern,
    #[arg(long)]
    forbid: Pattern,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
    #[arg(long, value_enum, default_value_t = MethodArg::BranchAndBound)]
    method: MethodArg,
    /// Tie-break order for the branching heuristic; the optimum is the same.
    #[arg(long, value_enum, default_value_t = TiesArg::Canonical)]
    ties: TiesArg,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: Budget {
                nodes: self.budget_nodes,
                seconds: self.budget_seconds,
            },
            method: match self.method {
                MethodArg::Exhaustive => search::SearchMethod::Exhaustive,
                MethodArg::BranchAndBound => search::SearchMethod::BranchAndBound,
            },
            ties: match self.ties {
                TiesArg::Canonical => TieOrder::Canonical,
                TiesArg::Reversed => TieOrder::Reversed,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Exhaustive,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TiesArg {
    Canonical,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Lower,
    Upper,
    Both,
}

fn parse_kind(s: &str) -> std::result::Result<ConstructionKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = ConstructionKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown construction {s:?}; expected one of {}", names.join(", "))
    })
}

/// What a verb produced: the JSON result, a one-line summary and the exit code.
struct Outcome {
    result: Value,
    summary: String,
    code: i32,
}

impl Outcome {
    fn ok(result: Value, summary: String) -> Self {
        Outcome {
            result,
            summary,
            code: 0,
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::DimensionTooLarge { .. } | Error::EnumerationTooLarge(_) => 4,
        _ => 2,
    }
}

fn load_graph(path: &Path, n: Option<usize>) -> Result<Subgraph> {
    let g = Subgraph::load(path)?;
    match n {
        Some(n) if n != g.n() => Err(Error::DimensionMismatch {
            expected: n,
            found: g.n(),
        }),
        _ => Ok(g),
    }
}

fn count(
    n: Option<usize>,
    pattern: Pattern,
    enumerate: bool,
    graph: Option<&Path>,
    z: &mut ZTable,
) -> Result<Outcome> {
    let report = match graph {
        Some(path) => count_report(&load_graph(path, n)?, pattern, z)?,
        None => {
            let n = n.ok_or(Error::MissingParam("n"))?;
            if enumerate {
                count_report(&FullCube(n), pattern, z)?
            } else {
                closed_form_report(n, pattern, z)?
            }
        }
    };
    let summary = format!(
        "{} copies of {} (of {} in Q_{})",
        report.count, report.pattern, report.ambient_total, report.n
    );
    Ok(Outcome::ok(to_json(&report), summary))
}

fn zl(l: usize, k: Option<usize>, z: &mut ZTable) -> Result<Outcome> {
    if l < 2 {
        return Err(Error::BadRange(format!("z(k,l) needs l >= 2, got {l}")));
    }
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None if l <= 6 => (ceil_log2(2 * l as u64) as usize..=l).collect(),
        None => {
            return Err(Error::EnumerationTooLarge(format!(
                "the full row of z(k,{l}) enumerates cycles beyond Q_6; pass --k"
            )))
        }
    };
    let mut rows = Vec::new();
    for k in ks {
        let (value, method) = if k == l {
            let method = if l <= 6 { "enumeration" } else { "z-words" };
            (z.get_or_compute_diagonal(l)?, method)
        } else {
            (z.get_or_compute(k, l)?, "enumeration")
        };
        rows.push(json!({"k": k, "l": l, "z": value.to_string(), "method": method}));
    }
    let summary = rows
        .iter()
        .map(|r| format!("z({},{}) = {}", r["k"], r["l"], r["z"].as_str().unwrap_or("")))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(Outcome::ok(Value::Array(rows), summary))
}

fn zwords(l: usize, list: bool) -> Result<Outcome> {
    let words = count_z_words(l)?;
    let z_ll = z_ll_via_words(l, true)?;
    // the trivial bound (2l)!/(4l)
    let factorial: BigInt = (1..=2 * l as u64).map(BigInt::from).product();
    let trivial = factorial / BigInt::from(4 * l as u64);
    let mut result = json!({
        "l": l,
        "word_count": words.to_string(),
        "z_ll": z_ll.to_string(),
        "trivial_bound": trivial.to_string(),
    });
    if list {
        let listed: Vec<String> = enumerate_z_words(l)?.iter().map(|w| w.to_string()).collect();
        result["words"] = to_json(&listed);
    }
    let summary = format!("|Z({l})| = {words}, z({l},{l}) = {z_ll}");
    Ok(Outcome::ok(result, summary))
}

fn construct(
    kind: ConstructionKind,
    ints: [(&str, Option<usize>); 6],
    flags: [(&str, bool); 2],
    out: &Path,
) -> Result<Outcome> {
    let mut spec = ConstructionSpec::new(kind);
    for (name, value) in ints {
        if let Some(v) = value {
            spec = spec.with(name, v);
        }
    }
    for (name, set) in flags {
        if set {
            spec = spec.with(name, 1);
        }
    }
    let c = spec.build()?;
    c.save(out)?;
    let summary = format!("wrote {} edges of {} to {}", c.graph.len(), kind, out.display());
    Ok(Outcome::ok(to_json(&c.sidecar()), summary))
}

fn verify(forbid: Pattern, graph: &Path) -> Result<Outcome> {
    let g = Subgraph::load(graph)?;
    let verdict = verify_free(&g, forbid)?;
    let (summary, code) = match &verdict.witness {
        None => (format!("{} is {forbid}-free", graph.display()), 0),
        Some(w) => (format!("{} contains {forbid}: {}", graph.display(), to_json(w)), 1),
    };
    Ok(Outcome {
        result: to_json(&verdict),
        summary,
        code,
    })
}

fn search_verb(args: &SearchArgs, witness: Option<&Path>) -> Result<Outcome> {
    let r = search::exact_extremal(args.n, args.target, args.forbid, &args.options())?;
    if let Some(path) = witness {
        r.witness.save(path)?;
    }
    let summary = format!(
        "ex(Q_{}, {}, {}) = {} (density {}, {} nodes)",
        r.n,
        r.target,
        r.forbid,
        r.value,
        r.density(),
        r.nodes_explored
    );
    Ok(Outcome::ok(to_json(&r), summary))
}

fn density_verb(args: &SearchArgs) -> Result<Outcome> {
    let r = search::exact_extremal(args.n, args.target, args.forbid, &args.options())?;
    let d = r.density();
    let result = json!({
        "n": r.n,
        "target": r.target,
        "forbid": r.forbid,
        "density": ratio(&d),
        "value": r.value.to_string(),
        "ambient_total": r.ambient_total.to_string(),
    });
    let summary = format!("d(Q_{}, {}, {}) = {d}", r.n, r.target, r.forbid);
    Ok(Outcome::ok(result, summary))
}

fn bounds_verb(
    theorem: TheoremId,
    side: SideArg,
    params: BoundParams,
    measured: Option<BigRational>,
    exact: bool,
    z: &mut ZTable,
) -> Result<Outcome> {
    let measured = match (measured, exact) {
        (Some(d), _) => Some(Measured::new("supplied", d)),
        (None, true) => {
            let n = params.n.ok_or(Error::MissingParam("n"))?;
            let (target, forbid) = subject_patterns(theorem, &params)?;
            let r = search::exact_extremal(n as usize, target, forbid, &SearchOptions::default())?;
            Some(Measured::from_search(&r))
        }
        (None, false) => None,
    };
    if let Some(m) = measured {
        let report = bound_sandwich_report(theorem, &params, z, Some(m));
        let summary = report.render().trim_end().to_string();
        return Ok(Outcome::ok(to_json(&report), summary));
    }
    let values = match side {
        SideArg::Both => eval_sides(theorem, &params, z)?,
        SideArg::Lower => vec![eval_bound(theorem, Side::Lower, &params, z)?],
        SideArg::Upper => vec![eval_bound(theorem, Side::Upper, &params, z)?],
    };
    let summary = values
        .iter()
        .map(|b| {
            let v = b
                .value
                .as_ref()
                .map_or_else(|| b.expression.clone(), |v| v.to_string());
            format!("{theorem} {:?}: {v}", b.side)
        })
        .collect::<Vec<_>>()
        .join(", ");
    let result = match values.as_slice() {
        [single] => to_json(single),
        _ => to_json(&values),
    };
    Ok(Outcome::ok(result, summary))
}

fn kpartite(k: usize, graph: &Path) -> Result<Outcome> {
    let g = Subgraph::load(graph)?;
    let edges: Vec<_> = g.edges().iter().map(|e| e.to_star_vector()).collect();
    let rep = has_k_partite_representation(&edges, k)?;
    let summary = match &rep.sigma {
        Some(sigma) => format!("{k}-partite with sigma = {sigma:?}"),
        None => format!("not {k}-partite"),
    };
    Ok(Outcome::ok(to_json(&rep), summary))
}

fn dispatch(command: &Command, z: &mut ZTable) -> Result<(Outcome, Option<PathBuf>)> {
    Ok(match command {
        Command::Count {
            n,
            pattern,
            enumerate,
            graph,
            out,
        } => (count(*n, *pattern, *enumerate, graph.as_deref(), z)?, out.clone()),
        Command::Zl { l, k, out } => (zl(*l, *k, z)?, out.clone()),
        Command::Zwords { l, list, out } => (zwords(*l, *list)?, out.clone()),
        Command::Construct {
            name,
            n,
            k,
            i,
            j,
            l,
            m,
            all_zero,
            complement,
            out,
        } => {
            let ints = [("n", *n), ("k", *k), ("i", *i), ("j", *j), ("l", *l), ("m", *m)];
            let flags = [("all_zero", *all_zero), ("complement", *complement)];
            (construct(*name, ints, flags, out)?, None)
        }
        Command::Verify { forbid, graph, out } => (verify(*forbid, graph)?, out.clone()),
        Command::Search {
            search,
            witness,
            out,
        } => (search_verb(search, witness.as_deref())?, out.clone()),
        Command::Density { search, out } => (density_verb(search)?, out.clone()),
        Command::Bounds {
            theorem,
            side,
            n,
            k,
            l,
            measured,
            exact,
            out,
        } => {
            let params = BoundParams {
                n: *n,
                k: *k,
                l: *l,
            };
            (
                bounds_verb(*theorem, *side, params, measured.clone(), *exact, z)?,
                out.clone(),
            )
        }
        Command::Kpartite { k, graph, out } => (kpartite(*k, graph)?, out.clone()),
    })
}

fn verb_name(command: &Command) -> &'static str {
    match command {
        Command::Count { .. } => "count",
        Command::Zl { .. } => "zl",
        Command::Zwords { .. } => "zwords",
        Command::Construct { .. } => "construct",
        Command::Verify { .. } => "verify",
        Command::Search { .. } => "search",
        Command::Density { .. } => "density",
        Command::Bounds { .. } => "bounds",
        Command::Kpartite { .. } => "kpartite",
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let mut z = match &cli.z_cache {
        Some(path) => ZTable::load_cache(path)?,
        None => ZTable::default(),
    };
    let cached = z.clone();
    let (outcome, out) = dispatch(&cli.command, &mut z)?;
    if let Some(path) = &cli.z_cache {
        if z != cached {
            z.save_cache(path)?;
        }
    }
    let text = render(verb_name(&cli.command), outcome.result, cli.format)?;
    emit(&text, out.as_deref())?;
    if !cli.quiet {
        eprintln!("{}", outcome.summary);
    }
    Ok(outcome.code)
}

fn report_error(kind: &str, message: String) {
    let body = json!({"error": {"kind": kind, "message": message}});
    eprintln!("{}", serde_json::to_string(&body).expect("serializable"));
}

/// Parses `args` (program name first), runs the verb and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            report_error("Usage", e.render().to_string().trim_end().to_string());
            return 2;
        }
    };
    let outcome = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::BadRange(format!("thread pool: {e}"))),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&error_json(&e)).expect("serializable"));
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["cubeturan", "count", "--n", "3", "--pattern", "c6", "-q"]), 0);
        assert_eq!(run(["cubeturan", "count", "--n", "3", "--pattern", "c5", "-q"]), 2);
        assert_eq!(run(["cubeturan", "frobnicate"]), 2);
        assert_eq!(run(["cubeturan", "search", "--n", "5", "--target", "e", "--forbid", "c4", "-q"]), 4);
        let budget = ["cubeturan", "search", "--n", "4", "--target", "e", "--forbid", "c6", "--budget-nodes", "10", "-q"];
        assert_eq!(run(budget), 3);
    }
}
