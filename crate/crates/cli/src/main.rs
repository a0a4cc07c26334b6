//! `rid-lab`: solve, sweep, generate, reduce and enumerate from the shell.
//!
//! Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 when a check finds counterexamples and 2 on bad input or arguments.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rid_lab::families::{
    build_j, build_t4k, gadget_certificate, gadget_instance, omega_member, psi_member,
    realizability_tree, reduction_gadget, terminal_instances, theta_member, FamilyInstance, JTag,
};
use rid_lab::graph::{enumerate_connected, enumerate_trees, from_graph6, to_graph6, Graph};
use rid_lab::harness::{check, default_jobs, CheckReport, Theorem, GADGET_DIRECT_MAX};
use rid_lab::solvers::{
    domination_number, restrained_domination_number, rid_number_exact, rid_number_tree_dp,
    rrd_number,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "rid-lab",
    version,
    about = "Exact restrained Italian domination on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve every graph6 line of the input.
    Solve(SolveArgs),
    /// Sweep all small graphs or trees against one claim.
    Check(CheckArgs),
    /// Emit a family member as graph6 plus a JSON sidecar.
    Gen(GenArgs),
    /// Build the reduction gadget of every input graph.
    Reduce(ReduceArgs),
    /// Stream all trees or connected graphs of one order.
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    /// Input file of graph6 lines, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use the tree dynamic program (inputs must be trees).
    #[arg(long)]
    tree_dp: bool,
    /// Also report the domination number.
    #[arg(long)]
    gamma: bool,
    /// Also report the restrained domination number.
    #[arg(long)]
    gamma_r: bool,
    /// Also report the restrained Roman domination number.
    #[arg(long)]
    gamma_rr: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_parser = parse_theorem)]
    theorem: Theorem,
    #[arg(long)]
    max_n: usize,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "RID_LAB_JOBS")]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GenArgs {
    /// T1..T5, T4k, TERMINAL_N, REALIZE, OMEGA, PSI, THETA or GADGET
    /// (a `J.` prefix and any letter case are accepted).
    #[arg(long)]
    family: String,
    /// Integer parameters, e.g. `k=2` or `a=3,b=5`.
    #[arg(long, value_delimiter = ',', value_parser = parse_param)]
    params: Vec<(String, i64)>,
    /// Base graph (graph6) for GADGET.
    #[arg(long)]
    base: Option<String>,
    /// Write sidecars to this file instead of stdout.
    #[arg(long)]
    sidecar: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Check `γ_rI(G') = 5n + γ(G)` and print the result as JSON.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Trees,
    Connected,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long)]
    n: usize,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: rid_lab::Error| e.to_string())
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=VALUE, got {s:?}"))?;
    let v = v
        .trim()
        .parse()
        .map_err(|_| format!("parameter {k:?} needs an integer, got {v:?}"))?;
    Ok((k.trim().to_string(), v))
}

/// Error with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<rid_lab::Error> for Failure {
    fn from(e: rid_lab::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(format!("i/o error: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::input(format!("json error: {e}"))
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Solve(a) => solve(a, &mut out),
        Command::Check(a) => run_check(a, &mut out),
        Command::Gen(a) => generate(a, &mut out),
        Command::Reduce(a) => reduce(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Err(f), _) => {
            eprintln!("rid-lab: {}", f.message);
            ExitCode::from(f.code)
        }
        (Ok(_), Err(e)) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("rid-lab: i/o error: {e}");
            ExitCode::from(2)
        }
        (Ok(code), _) => code,
    }
}

fn read_graphs(input: &str) -> Result<Vec<(String, Graph)>, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| Failure::input(format!("{input}: {e}")))?
    };
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let code = l.trim();
            let g =
                from_graph6(code).map_err(|e| Failure::input(format!("line {}: {e}", i + 1)))?;
            Ok((code.to_string(), g))
        })
        .collect()
}

#[derive(Serialize)]
struct SolveRecord {
    graph6: String,
    n: usize,
    m: usize,
    #[serde(rename = "gamma_rI")]
    gamma_ri: u32,
    witness: String,
    solver: &'static str,
    nodes_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_r: Option<u32>,
    #[serde(rename = "gamma_rR", skip_serializing_if = "Option::is_none")]
    gamma_rr: Option<u32>,
}

fn solve(a: SolveArgs, out: &mut impl Write) -> Outcome {
    let graphs = read_graphs(&a.input)?;
    let mut records = Vec::with_capacity(graphs.len());
    for (code, g) in graphs {
        let (r, solver) = if a.tree_dp {
            (rid_number_tree_dp(&g)?, "tree-dp")
        } else {
            (rid_number_exact(&g), "branch-and-bound")
        };
        records.push(SolveRecord {
            graph6: code,
            n: g.n(),
            m: g.m(),
            gamma_ri: r.value,
            witness: r.witness.to_string(),
            solver,
            nodes_explored: r.nodes_explored,
            gamma: a.gamma.then(|| domination_number(&g).value),
            gamma_r: a.gamma_r.then(|| restrained_domination_number(&g).value),
            gamma_rr: a.gamma_rr.then(|| rrd_number(&g).value),
        });
    }
    for r in records {
        match a.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&r)?)?,
            Format::Text => {
                write!(
                    out,
                    "{} n={} m={} gamma_rI={} witness={}",
                    r.graph6, r.n, r.m, r.gamma_ri, r.witness
                )?;
                for (name, v) in [
                    ("gamma", r.gamma),
                    ("gamma_r", r.gamma_r),
                    ("gamma_rR", r.gamma_rr),
                ] {
                    if let Some(v) = v {
                        write!(out, " {name}={v}")?;
                    }
                }
                writeln!(out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(a: CheckArgs, out: &mut impl Write) -> Outcome {
    let jobs = a.jobs.unwrap_or_else(default_jobs);
    let report = check(a.theorem, a.max_n, jobs)?;
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        Format::Text => write_report(&report, out)?,
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn write_report(r: &CheckReport, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "{} n={}..{}: {} instances, {} counterexamples, {} ({:.2}s)",
        r.theorem,
        r.orders_checked.min,
        r.orders_checked.max,
        r.instances_checked,
        r.counterexample_count,
        if r.pass { "pass" } else { "FAIL" },
        r.elapsed.as_secs_f64()
    )?;
    for c in &r.counterexamples {
        writeln!(
            out,
            "  {} expected {} got {}",
            c.graph6, c.expected, c.actual
        )?;
    }
    Ok(())
}

fn generate(a: GenArgs, out: &mut impl Write) -> Outcome {
    let params: BTreeMap<String, i64> = a.params.into_iter().collect();
    let name = a.family.to_ascii_uppercase();
    let name = name.strip_prefix("J.").unwrap_or(&name);
    let expect = |allowed: &[&str]| -> Result<(), Failure> {
        match params.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(Failure::input(format!(
                "family {} takes no parameter {k:?}",
                a.family
            ))),
            None => Ok(()),
        }
    };
    let get = |k: &str| -> Result<usize, Failure> {
        let v = *params
            .get(k)
            .ok_or_else(|| Failure::input(format!("family {} needs {k}=…", a.family)))?;
        usize::try_from(v).map_err(|_| Failure::input(format!("{k} must be nonnegative, got {v}")))
    };
    let instances: Vec<FamilyInstance> = match name {
        "T1" | "T2" | "T3" | "T4" | "T5" => {
            expect(&[])?;
            vec![build_j(name.parse::<JTag>()?)]
        }
        "T4K" => {
            expect(&["k"])?;
            vec![build_t4k(get("k")?)?]
        }
        "TERMINAL_N" | "TERMINAL" => {
            expect(&["n"])?;
            let n = get("n")?;
            if n > 62 {
                return Err(Failure::input("terminal family supports n <= 62"));
            }
            terminal_instances(n)
        }
        "REALIZE" => {
            expect(&["a", "b"])?;
            vec![realizability_tree(get("a")?, get("b")?)?]
        }
        "OMEGA" => {
            expect(&["x", "y"])?;
            vec![omega_member(get("x")?, get("y")?)?]
        }
        "PSI" => {
            expect(&["k"])?;
            vec![psi_member(get("k")?)?]
        }
        "THETA" => {
            expect(&["k"])?;
            vec![theta_member(get("k")?)?]
        }
        "GADGET" => {
            expect(&[])?;
            let base = a
                .base
                .as_deref()
                .ok_or_else(|| Failure::input("GADGET needs --base GRAPH6"))?;
            vec![gadget_instance(&from_graph6(base)?)?]
        }
        _ => return Err(Failure::input(format!("unknown family {:?}", a.family))),
    };
    let mut sidecars = String::new();
    for inst in &instances {
        let sc = inst.sidecar()?;
        writeln!(out, "{}", sc.graph6)?;
        let line = serde_json::to_string(&sc)?;
        if a.sidecar.is_some() {
            sidecars.push_str(&line);
            sidecars.push('\n');
        } else {
            writeln!(out, "{line}")?;
        }
    }
    if let Some(path) = a.sidecar {
        fs::write(&path, sidecars)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ReduceCheck {
    base: String,
    n: usize,
    gamma: u32,
    claimed: u32,
    method: &'static str,
    value: u32,
    holds: bool,
}

fn reduce(a: ReduceArgs, out: &mut impl Write) -> Outcome {
    let mut all_hold = true;
    for (code, g) in read_graphs(&a.input)? {
        let h = reduction_gadget(&g)?;
        writeln!(out, "{}", to_graph6(&h)?)?;
        if !a.verify {
            continue;
        }
        let gamma = domination_number(&g).value;
        let claimed = 5 * g.n() as u32 + gamma;
        let (method, value, holds) = if g.n() <= GADGET_DIRECT_MAX {
            let v = rid_number_exact(&h).value;
            ("direct", v, v == claimed)
        } else {
            let c = gadget_certificate(&g)?;
            ("certificate", c.by_blocks, c.holds())
        };
        all_hold &= holds;
        let rec = ReduceCheck {
            base: code,
            n: g.n(),
            gamma,
            claimed,
            method,
            value,
            holds,
        };
        writeln!(out, "{}", serde_json::to_string(&rec)?)?;
    }
    Ok(if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn enumerate(a: EnumerateArgs, out: &mut impl Write) -> Outcome {
    let graphs: Box<dyn Iterator<Item = Graph>> = match a.class {
        Class::Trees => Box::new(enumerate_trees(a.n)?),
        Class::Connected => Box::new(enumerate_connected(a.n)?),
    };
    for g in graphs {
        if let Err(e) = writeln!(out, "{}", to_graph6(&g)?) {
            if e.kind() == io::ErrorKind::BrokenPipe {
                break;
            }
            return Err(e.into());
        }
    }
    Ok(ExitCode::SUCCESS)
}
