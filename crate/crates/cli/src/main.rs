mod suites;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use molecules::beissinger::{cbs_insert, psi_cycle_stats, psi_orbit, rbs_insert, CbsVariant};
use molecules::gelfand::{DescentChoice, GelfandModule};
use molecules::hecke::kl_basis;
use molecules::wgraph::{build_gamma, classify, GraphKind};
use molecules::{Involution, Permutation, Tableau};

const GRAPH_CAP: usize = 8;
const KL_CAP: usize = 6;

#[derive(Parser)]
#[command(name = "molecules", version, about = "Beissinger insertion, Gelfand W-graphs, molecules and cells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Insert into a tableau with RS, row Beissinger or column Beissinger insertion.
    Insert(InsertArgs),
    /// Cycle statistics of the map Psi on involutions.
    Psi(PsiArgs),
    /// Build a Gelfand W-graph and its molecules and cells.
    Graph {
        #[arg(value_enum)]
        action: GraphAction,
        #[command(flatten)]
        args: GraphArgs,
    },
    /// Run invariant suites up to n and print a JSON report.
    Verify(VerifyArgs),
    /// Export KL polynomials or a Gelfand canonical basis as JSON.
    Export {
        #[arg(value_enum)]
        what: ExportWhat,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Row)]
        variant: VariantArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Algo {
    Rs,
    Rbs,
    Cbs,
}

#[derive(Args)]
struct InsertArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    /// Tableau as inline JSON, a file path, or - for stdin.
    #[arg(long)]
    tableau: String,
    #[arg(long, conflicts_with = "pair")]
    value: Option<u32>,
    /// Pair a,b with a <= b.
    #[arg(long)]
    pair: Option<String>,
    /// Column-insert a and append b to the next row (cbs only).
    #[arg(long)]
    transposed: bool,
}

#[derive(Args)]
struct PsiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, group = "mode")]
    cycles: bool,
    #[arg(long, group = "mode")]
    fixed_points: bool,
    /// One-line ("4231") or cycle ("(1,4)") notation.
    #[arg(long, group = "mode")]
    orbit: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum GraphAction {
    Build,
    Molecules,
    Cells,
    Classify,
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    Row,
    Col,
}

impl VariantArg {
    fn kind(self) -> GraphKind {
        match self {
            VariantArg::Row => GraphKind::Row,
            VariantArg::Col => GraphKind::Col,
        }
    }
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Keep edges with tau(v) contained in tau(w).
    #[arg(long)]
    no_reduced: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Lift the size cap.
    #[arg(long)]
    force: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Insertion,
    Partners,
    Gelfand,
    Wgraph,
    Kl,
    Conjecture,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    force: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum ExportWhat {
    Kl,
    Basis,
}

#[derive(Debug)]
enum Failure {
    Precondition(String),
    Parse(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Precondition(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<molecules::Error> for Failure {
    fn from(e: molecules::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Insert(a) => cmd_insert(a),
        Command::Psi(a) => cmd_psi(a),
        Command::Graph { action, args } => cmd_graph(action, args),
        Command::Verify(a) => cmd_verify(a),
        Command::Export { what, n, variant, out, force } => cmd_export(what, n, variant, out, force),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let msg = match &f {
                Failure::Precondition(m) | Failure::Parse(m) | Failure::Cap(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn check_n(n: usize, cap: usize, force: bool) -> CliResult<()> {
    if n == 0 {
        return Err(Failure::Precondition("n must be at least 1".into()));
    }
    if n > cap && !force {
        return Err(Failure::Cap(format!("n = {n} exceeds the default cap of {cap}; pass --force to run anyway")));
    }
    Ok(())
}

fn involution_json(w: &Permutation) -> Value {
    json!({ "one_line": w.to_string(), "cycles": w.cycle_string() })
}

fn emit(text: &str, out: Option<&PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{text}")?;
        }
    }
    Ok(())
}

fn read_tableau(src: &str) -> CliResult<Tableau> {
    let text = if src == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if src.trim_start().starts_with('[') {
        src.to_string()
    } else {
        fs::read_to_string(src)?
    };
    let rows: Vec<Vec<u32>> =
        serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("tableau JSON: {e}")))?;
    Tableau::new(rows).map_err(|e| Failure::Parse(e.to_string()))
}

fn parse_pair(s: &str) -> CliResult<(u32, u32)> {
    let bad = || Failure::Parse(format!("expected a pair a,b, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn cmd_insert(args: InsertArgs) -> CliResult<u8> {
    let t = read_tableau(&args.tableau)?;
    let result = match args.algo {
        Algo::Rs => {
            let v = args.value.ok_or_else(|| Failure::Parse("rs insertion needs --value".into()))?;
            t.rs_insert(v)?.0
        }
        Algo::Rbs | Algo::Cbs => {
            let pair = args.pair.as_deref().ok_or_else(|| Failure::Parse("Beissinger insertion needs --pair a,b".into()))?;
            let (a, b) = parse_pair(pair)?;
            match args.algo {
                Algo::Rbs => rbs_insert(&t, a, b)?,
                _ => {
                    let variant = if args.transposed { CbsVariant::Transposed } else { CbsVariant::Standard };
                    cbs_insert(&t, a, b, variant)?
                }
            }
        }
    };
    emit(&result.to_string(), None)?;
    Ok(0)
}

fn cmd_psi(args: PsiArgs) -> CliResult<u8> {
    check_n(args.n, usize::MAX, false)?;
    if let Some(src) = &args.orbit {
        let y = Involution::parse(src, Some(args.n)).map_err(|e| Failure::Parse(e.to_string()))?;
        let orbit: Vec<Value> = psi_orbit(&y).iter().map(|z| involution_json(z.perm())).collect();
        let row = json!({ "n": args.n, "length": orbit.len(), "orbit": orbit });
        emit(&row.to_string(), None)?;
        return Ok(0);
    }
    let stats = psi_cycle_stats(args.n);
    let row = if args.fixed_points {
        let fixed: Vec<Value> = stats.fixed_points.iter().map(|z| involution_json(z.perm())).collect();
        json!({ "n": args.n, "fixed_points": fixed })
    } else {
        let mut sizes: Vec<usize> = stats.orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        json!({
            "n": args.n,
            "involutions": stats.orbits.iter().map(Vec::len).sum::<usize>(),
            "orbits": stats.orbits.len(),
            "longest_cycle": stats.longest_cycle,
            "cycle_lengths": sizes,
        })
    };
    emit(&row.to_string(), None)?;
    Ok(0)
}

fn partition_json(vertices: &[Permutation], parts: &[Vec<usize>]) -> Value {
    Value::Array(
        parts
            .iter()
            .map(|p| Value::Array(p.iter().map(|&v| involution_json(&vertices[v])).collect()))
            .collect(),
    )
}

fn cmd_graph(action: GraphAction, args: GraphArgs) -> CliResult<u8> {
    check_n(args.n, GRAPH_CAP, args.force)?;
    let kind = args.variant.kind();
    if let GraphAction::Classify = action {
        let r = classify(args.n, kind)?;
        let verdict = |ok: bool| if ok { "OK" } else { "FAIL" };
        let mut lines = vec![
            format!("graph={kind} n={} vertices={} molecules={} cells={}", r.n, r.vertices, r.molecules, r.cells),
            format!("molecules=fibers: {} (fibers={})", verdict(r.molecules_are_fibers), r.fibers),
            format!("bidirected edges=combinatorial edges: {}", verdict(r.edges_match)),
            format!("molecules=cells: {} (fibers={})", verdict(r.cells_are_molecules), r.fibers),
            format!(
                "non-reduced cells agree: {} (informational)",
                if r.nonreduced_cells_agree { "yes" } else { "no" }
            ),
        ];
        lines.extend(r.counterexamples.iter().map(|c| format!("  counterexample: {c}")));
        emit(&lines.join("\n"), None)?;
        if let Some(path) = &args.out {
            let doc = serde_json::to_string_pretty(&r).expect("report serializes");
            fs::write(path, format!("{doc}\n"))?;
        }
        return Ok(if r.passed() { 0 } else { 1 });
    }

    let g = build_gamma(args.n, kind, !args.no_reduced)?;
    if let Some(path) = &args.dot {
        fs::write(path, g.to_dot())?;
    }
    match action {
        GraphAction::Build => match &args.out {
            Some(path) => {
                fs::write(path, format!("{}\n", g.to_json()))?;
                let edges = g.omega().values().filter(|&&c| c != 0).count();
                emit(&format!("{} vertices, {} edges", g.len(), edges), None)?;
            }
            None => emit(&g.to_json(), None)?,
        },
        GraphAction::Molecules => {
            let doc = json!({
                "n": args.n,
                "variant": kind.to_string(),
                "reduced": g.reduced(),
                "molecules": partition_json(g.vertices(), &g.molecules()),
            });
            emit(&serde_json::to_string_pretty(&doc).expect("json"), args.out.as_ref())?;
        }
        GraphAction::Cells => {
            let cells = g.cells();
            let doc = json!({
                "n": args.n,
                "variant": kind.to_string(),
                "reduced": g.reduced(),
                "cells": partition_json(g.vertices(), &cells.components),
                "order": cells.dag.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            });
            emit(&serde_json::to_string_pretty(&doc).expect("json"), args.out.as_ref())?;
        }
        GraphAction::Classify => unreachable!(),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<u8> {
    let cap = if args.suite == Suite::Kl { KL_CAP } else { GRAPH_CAP };
    check_n(args.n, cap, args.force)?;
    let selected: Vec<Suite> = if args.suite == Suite::All {
        vec![Suite::Insertion, Suite::Partners, Suite::Gelfand, Suite::Wgraph, Suite::Kl, Suite::Conjecture]
    } else {
        vec![args.suite]
    };
    let mut reports = Vec::new();
    let mut all_ok = true;
    for s in selected {
        let (name, checks) = match s {
            Suite::Insertion => ("insertion", suites::insertion(args.n)),
            Suite::Partners => ("partners", suites::partners(args.n)),
            Suite::Gelfand => ("gelfand", suites::gelfand(args.n)),
            Suite::Wgraph => ("wgraph", suites::wgraph(args.n)),
            // KL work grows with n!, so `all` keeps it within its own cap
            Suite::Kl => ("kl", suites::kl(if args.suite == Suite::All && !args.force { args.n.min(KL_CAP) } else { args.n })),
            Suite::Conjecture => ("conjecture", suites::conjecture(args.n)),
            Suite::All => unreachable!(),
        };
        let ok = checks.iter().all(|c| c.passed());
        all_ok &= ok;
        reports.push(json!({ "suite": name, "passed": ok, "checks": checks.iter().map(suites::Check::to_json).collect::<Vec<_>>() }));
    }
    let doc = json!({ "n": args.n, "passed": all_ok, "suites": reports });
    emit(&serde_json::to_string_pretty(&doc).expect("json"), None)?;
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_export(what: ExportWhat, n: usize, variant: VariantArg, out: Option<PathBuf>, force: bool) -> CliResult<u8> {
    let text = match what {
        ExportWhat::Kl => {
            check_n(n, KL_CAP, force)?;
            kl_basis(n).to_json()
        }
        ExportWhat::Basis => {
            check_n(n, GRAPH_CAP, force)?;
            let v = match variant {
                VariantArg::Row => molecules::gelfand::Variant::Asc,
                VariantArg::Col => molecules::gelfand::Variant::Des,
            };
            let module = GelfandModule::new(n, v);
            module.canonical_basis(DescentChoice::Smallest)?.to_json(&module)
        }
    };
    emit(&text, out.as_ref())?;
    Ok(0)
}
