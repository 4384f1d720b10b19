mod corpus;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use binedge::compat::builtin_maps;
use binedge::compat::checks::{builtin_checks, builtin_gaps, search_gap, sweep};
use binedge::generators::{build_all, GraphSpec};
use binedge::invariants::SolverLimits;
use binedge::io::{encode_edge_list, encode_graph6};
use binedge::regularity::{regularity_bei, OracleConfig, DEFAULT_MAX_VERTICES};
use binedge::{Error, Graph, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use corpus::CorpusArgs;
use report::{GapOut, GenOut, InvariantsOut, RegOut, RegResultOut, Report, ViolationOut};

#[derive(Parser, Debug)]
#[command(name = "binedge", version, about = "Graph invariants and regularity checks for binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// n, m, iv, L, eta and c with witnesses
    Invariants {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Regularity of S/J_G from the squarefree initial ideal
    Reg {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep a corpus with one check; exit 1 on any violation
    Verify {
        #[arg(value_enum)]
        kind: CheckKind,
        /// Invariant map for `compatible`
        #[arg(long, default_value = "eta")]
        map: String,
        /// For `compatible`: require both inequalities at every non-free vertex
        #[arg(long)]
        every_vertex: bool,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Build graphs from a spec, e.g. `gen sierpinski 2`
    Gen {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Rank a corpus by a bound gap
    Search {
        #[arg(long)]
        gap: String,
        #[arg(long, default_value_t = 5)]
        top: usize,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Chain,
    Compatible,
    IvLemma,
    Recursion,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Chain => "chain",
            CheckKind::Compatible => "compatible",
            CheckKind::IvLemma => "iv-lemma",
            CheckKind::Recursion => "recursion",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
    Edges,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also compute reg (invariants, verify chain)
    #[arg(long)]
    with_reg: bool,
    /// Largest connected component the regularity oracle accepts
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_VERTICES)]
    max_n: usize,
    /// Worker threads
    #[arg(long, value_name = "J")]
    jobs: Option<usize>,
    /// Node budget of the exact solvers
    #[arg(long, value_name = "NODES")]
    node_budget: Option<u64>,
}

impl Common {
    fn limits(&self) -> SolverLimits {
        match self.node_budget {
            Some(max_nodes) => SolverLimits { max_nodes },
            None => SolverLimits::default(),
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig { max_vertices: self.max_n, ..OracleConfig::default() }
    }

    fn setup(&self) -> Result<()> {
        if self.max_n > DEFAULT_MAX_VERTICES {
            eprintln!(
                "WARNING: regularity oracle cap raised to {} vertices (default {DEFAULT_MAX_VERTICES}); \
                 a component of that size scans up to 2^{} subsets and may not finish",
                self.max_n,
                2 * self.max_n
            );
        }
        if let Some(j) = self.jobs {
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build_global()
                .map_err(|e| Error::Input(format!("cannot start {j} workers: {e}")))?;
        }
        if matches!(self.format, Format::Graph6 | Format::Edges) {
            return Err(Error::Input("--format graph6|edges applies to `gen`; use text or json".into()));
        }
        Ok(())
    }
}

/// Text lines or the JSON report on stdout.
fn emit<T: Serialize>(format: Format, report: &Report<T>, lines: &[String]) -> Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(report).map_err(|e| Error::Internal(e.to_string()))?;
            println!("{text}");
        }
        _ => {
            for l in lines {
                println!("{l}");
            }
        }
    }
    Ok(())
}

fn par_map<T: Send>(graphs: &[Graph], f: impl Fn(usize, &Graph) -> Result<T> + Sync) -> Result<Vec<T>> {
    graphs.par_iter().enumerate().map(|(i, g)| f(i, g)).collect::<Vec<_>>().into_iter().collect()
}

fn cmd_invariants(corpus: &CorpusArgs, common: &Common) -> Result<ExitCode> {
    let t = Instant::now();
    let graphs = corpus.load()?;
    let (limits, oracle) = (common.limits(), common.oracle());
    let results = par_map(&graphs, |i, g| {
        let reg = if common.with_reg { Some(regularity_bei(g, &oracle)?) } else { None };
        InvariantsOut::compute(i, g, limits, reg.as_ref())
    })?;
    let lines: Vec<String> = results.iter().map(|r| r.render()).collect();
    let mut report = Report::new(results, graphs.len());
    report.timing_ms = t.elapsed().as_secs_f64() * 1e3;
    emit(common.format, &report, &lines)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reg(corpus: &CorpusArgs, common: &Common) -> Result<ExitCode> {
    let t = Instant::now();
    let graphs = corpus.load()?;
    let oracle = common.oracle();
    let results = par_map(&graphs, |i, g| {
        let r = regularity_bei(g, &oracle)?;
        Ok(RegResultOut { index: i, graph6: encode_graph6(g), n: g.n(), reg: RegOut::new(g.n(), &r) })
    })?;
    let lines: Vec<String> = results
        .iter()
        .map(|r| {
            format!(
                "graph {} {}  reg={}  witness x{:?} y{:?}  fields {:?}",
                r.index, r.graph6, r.reg.value, r.reg.witness_x, r.reg.witness_y, r.reg.fields
            )
        })
        .collect();
    let mut report = Report::new(results, graphs.len());
    report.timing_ms = t.elapsed().as_secs_f64() * 1e3;
    emit(common.format, &report, &lines)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    kind: CheckKind,
    map: &str,
    every_vertex: bool,
    corpus: &CorpusArgs,
    common: &Common,
) -> Result<ExitCode> {
    let t = Instant::now();
    let (limits, oracle) = (common.limits(), common.oracle());
    let phi = builtin_maps(limits, oracle).take(map)?;
    let checks = builtin_checks(phi, every_vertex, common.with_reg, limits, oracle);
    let check = checks.get(kind.name())?;
    let graphs = corpus.load()?;
    let violations = sweep(check, &graphs)?;

    let mut lines = Vec::new();
    let mut notes = Vec::new();
    if kind == CheckKind::Chain && common.with_reg {
        let skipped = graphs.iter().filter(|g| g.components().iter().any(|c| c.len() > oracle.max_vertices)).count();
        if skipped > 0 {
            notes.push(format!("reg unavailable on {skipped} graph(s) above the oracle cap; chain checked without it"));
        }
    }
    let label = match kind {
        CheckKind::Compatible => format!("compatible (map {map}{})", if every_vertex { ", every vertex" } else { "" }),
        other => other.name().to_string(),
    };
    for v in &violations {
        lines.push(format!(
            "VIOLATION {} {}{}: {}",
            v.check,
            encode_graph6(&v.graph),
            v.vertex.map(|x| format!(" vertex {x}")).unwrap_or_default(),
            v.detail
        ));
    }
    lines.extend(notes.iter().cloned());
    let status = if violations.is_empty() { "pass" } else { "violation" };
    lines.push(format!(
        "verify {label}: {} graphs, {} violation(s): {}",
        graphs.len(),
        violations.len(),
        status.to_uppercase()
    ));

    let mut report: Report<()> = Report::new(Vec::new(), graphs.len());
    report.status = status;
    report.violations = violations.iter().map(ViolationOut::from).collect();
    report.notes = notes;
    report.timing_ms = t.elapsed().as_secs_f64() * 1e3;
    emit(common.format, &report, &lines)?;
    Ok(if violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_gen(spec: &[String], format: Format) -> Result<ExitCode> {
    let spec = GraphSpec::parse(&spec.join(" "))?;
    let graphs: Vec<Graph> = build_all(&spec)?.collect();
    match format {
        Format::Graph6 | Format::Text => {
            for g in &graphs {
                println!("{}", encode_graph6(g));
            }
        }
        Format::Edges => {
            for g in &graphs {
                print!("{}", encode_edge_list(g));
            }
        }
        Format::Json => {
            let results: Vec<GenOut> = graphs
                .iter()
                .map(|g| GenOut {
                    graph6: encode_graph6(g),
                    n: g.n(),
                    edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
                })
                .collect();
            let mut report = Report::new(results, graphs.len());
            report.notes.push(format!("spec {spec}"));
            emit(Format::Json, &report, &[])?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(gap: &str, top: usize, corpus: &CorpusArgs, common: &Common) -> Result<ExitCode> {
    let t = Instant::now();
    let gaps = builtin_gaps();
    let gap = gaps.get(gap)?;
    let graphs = corpus.load()?;
    let hits = search_gap(gap, &graphs, top, common.limits(), &common.oracle())?;
    let results: Vec<GapOut> = hits.iter().enumerate().map(|(k, h)| GapOut::new(k + 1, h)).collect();
    let mut lines: Vec<String> = results
        .iter()
        .map(|r| {
            let reg = r.reg.map(|x| format!(" reg={x}")).unwrap_or_default();
            format!(
                "#{} graph {} {}  {}={}  n={} L={}{reg} eta={} c={}",
                r.rank,
                r.index,
                r.graph6,
                gap.name(),
                r.gap,
                r.n,
                r.l,
                r.eta,
                r.c
            )
        })
        .collect();
    lines.push(format!("search {}: top {} of {} graphs", gap.name(), results.len(), graphs.len()));
    let mut report = Report::new(results, graphs.len());
    report.timing_ms = t.elapsed().as_secs_f64() * 1e3;
    emit(common.format, &report, &lines)?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Invariants { corpus, common } => {
            common.setup()?;
            cmd_invariants(&corpus, &common)
        }
        Command::Reg { corpus, common } => {
            common.setup()?;
            cmd_reg(&corpus, &common)
        }
        Command::Verify { kind, map, every_vertex, corpus, common } => {
            common.setup()?;
            cmd_verify(kind, &map, every_vertex, &corpus, &common)
        }
        Command::Gen { spec, format } => cmd_gen(&spec, format),
        Command::Search { gap, top, corpus, common } => {
            common.setup()?;
            cmd_search(&gap, top, &corpus, &common)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
