//! Batch command-line front end: every subcommand reads graphs, runs one
//! library operation, and prints a text or JSON report.
//!
//! Exit status: 0 when the operation reached a verdict (including "not
//! found"), 1 when it surfaced violations, mismatches, or a counterexample,
//! 2 on usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use evencycles::{
    block_decomposition, canonical_member, classify_member, compute_ex, cycle_spectrum_with_witnesses,
    enumerate_members, extremal_verdict, find_consecutive_even_cycles, format_edge_list, from_graph6,
    has_parity_paths, is_bipartite, is_connected, is_two_connected, max_edges_no_two_mod_four,
    parse_edge_list, path_witnesses, to_graph6, verify_bondy_vince, verify_cut_combination,
    verify_dean_even_cycle, verify_extremal_threshold, verify_family_closure, verify_formula_table,
    verify_parity_paths, verify_paths_differ_two, verify_three_connected, BipartiteVerdict,
    CycleWitness, ExtremalVerdict, FamilyBlockKind, FamilyDescriptor, ForbiddenFamily, FormulaTable,
    Graph, GraphSource, Membership, ParityPaths, SearchLimits, TuranRecord, VerificationReport,
};

#[derive(Parser, Debug)]
#[command(name = "evencycles", version, about = "Cycle-length spectra, consecutive even cycles, \
and extremal graph searches over small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// DFS step budget shared by all cycle and path searches
    #[arg(long, global = true, env = "EVENCYCLES_BUDGET")]
    budget: Option<u64>,
    /// Worker thread count; affects runtime only, never output
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    output: OutputMode,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputMode {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Graph6,
    #[value(name = "edgelist")]
    EdgeList,
}

/// One graph, supplied inline or read from a file or stdin.
#[derive(Args, Debug)]
struct GraphInput {
    /// Inline graph6 string
    #[arg(long, value_name = "STR")]
    graph6: Option<String>,
    /// File holding the graph (stdin when neither this nor --graph6 is given)
    #[arg(long, value_name = "PATH", conflicts_with = "graph6")]
    input: Option<PathBuf>,
    /// Format of --input or stdin
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

impl GraphInput {
    fn read(&self) -> anyhow::Result<Graph> {
        if let Some(s) = &self.graph6 {
            return Ok(from_graph6(s.trim())?);
        }
        let text = match &self.input {
            Some(path) => fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?,
            None => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
                buf
            }
        };
        match self.format {
            Format::Graph6 => {
                let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
                let first = lines.next().context("empty graph6 input")?;
                if lines.next().is_some() {
                    bail!("expected exactly one graph6 line");
                }
                Ok(from_graph6(first)?)
            }
            Format::EdgeList => Ok(parse_edge_list(&text)?),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every cycle length present, with one witness cycle per length
    Spectrum(GraphInput),
    /// Search for k cycles of consecutive even lengths
    Consec {
        #[command(flatten)]
        input: GraphInput,
        /// How many consecutive even lengths to require
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Show the block decomposition and connectivity facts
    Blocks(GraphInput),
    /// List (x, y)-path lengths and parity witnesses
    Paths {
        #[command(flatten)]
        input: GraphInput,
        /// First endpoint
        #[arg(long)]
        x: usize,
        /// Second endpoint
        #[arg(long)]
        y: usize,
    },
    /// Generate, check, or enumerate extremal family members
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Maximum edge count of an n-vertex graph avoiding a cycle family
    Turan(TuranArgs),
    /// Exhaustively check one statement over all small graphs
    Verify {
        /// Statement suite to run
        suite: Suite,
        /// Largest graph order to enumerate (per-suite default otherwise)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Re-encode a graph between graph6 and edge-list text
    Codec(GraphInput),
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Print the chain-shaped member on n vertices
    Gen {
        /// Number of vertices
        #[arg(long)]
        n: usize,
    },
    /// Classify one graph: membership and its extremal verdict
    Check(GraphInput),
    /// List every member on n vertices
    Enum {
        /// Number of vertices
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct TuranArgs {
    /// Graph order
    #[arg(long)]
    n: usize,
    /// Forbid all cycle lengths equal to RES mod MOD
    #[arg(long = "mod", value_name = "MOD", requires = "residue", conflicts_with = "consec_k")]
    modulus: Option<usize>,
    /// Residue class to forbid
    #[arg(long = "res", value_name = "RES", requires = "modulus", conflicts_with = "consec_k")]
    residue: Option<usize>,
    /// Forbid any COUNT cycles of consecutive even lengths instead
    #[arg(long = "consec-k", value_name = "COUNT")]
    consec_k: Option<usize>,
    /// Universe file, one graph6 per line (exhaustive enumeration otherwise)
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    BondyVince,
    ExtremalThreshold,
    DeanEvenCycle,
    ThreeConnected,
    ParityPaths,
    PathsDifferTwo,
    FamilyClosure,
    CutCombination,
    Formulas,
    All,
}

impl Suite {
    fn default_nmax(self) -> usize {
        match self {
            Suite::BondyVince => 7,
            Suite::ExtremalThreshold => 8,
            Suite::DeanEvenCycle => 8,
            Suite::ThreeConnected => 7,
            Suite::ParityPaths => 7,
            Suite::PathsDifferTwo => 7,
            Suite::FamilyClosure => 8,
            Suite::CutCombination => 7,
            Suite::Formulas => 7,
            Suite::All => unreachable!("expanded before dispatch"),
        }
    }

    fn cap(self) -> usize {
        match self {
            Suite::BondyVince => 8,
            Suite::ExtremalThreshold => 9,
            Suite::DeanEvenCycle => 9,
            Suite::ThreeConnected => 7,
            Suite::ParityPaths => 8,
            Suite::PathsDifferTwo => 8,
            Suite::FamilyClosure => 8,
            Suite::CutCombination => 8,
            Suite::Formulas => 9,
            Suite::All => unreachable!("expanded before dispatch"),
        }
    }

    fn run(self, nmax: usize, limits: &SearchLimits) -> evencycles::Result<VerificationReport> {
        match self {
            Suite::BondyVince => verify_bondy_vince(nmax, limits),
            Suite::ExtremalThreshold => verify_extremal_threshold(nmax, limits),
            Suite::DeanEvenCycle => verify_dean_even_cycle(nmax, limits),
            Suite::ThreeConnected => verify_three_connected(nmax, limits),
            Suite::ParityPaths => verify_parity_paths(nmax, limits),
            Suite::PathsDifferTwo => verify_paths_differ_two(nmax, limits),
            Suite::FamilyClosure => verify_family_closure(nmax, limits),
            Suite::CutCombination => verify_cut_combination(nmax, limits),
            Suite::Formulas | Suite::All => unreachable!("handled by the caller"),
        }
    }
}

const STATEMENT_SUITES: [Suite; 8] = [
    Suite::BondyVince,
    Suite::ExtremalThreshold,
    Suite::DeanEvenCycle,
    Suite::ThreeConnected,
    Suite::ParityPaths,
    Suite::PathsDifferTwo,
    Suite::FamilyClosure,
    Suite::CutCombination,
];

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let budget = cli.budget.unwrap_or(SearchLimits::default().max_steps);
    if budget == 0 {
        bail!("--budget must be positive");
    }
    if let Some(w) = cli.workers {
        if w == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .context("initializing the worker pool")?;
    }
    let limits = SearchLimits::with_steps(budget);
    let mode = cli.output;

    match cli.command {
        Command::Spectrum(input) => {
            let g = input.read()?;
            let witnesses = cycle_spectrum_with_witnesses(&g, &limits)?;
            let report = SpectrumReport {
                n: g.n(),
                edges: g.edge_count(),
                lengths: witnesses.keys().copied().collect(),
                witnesses: witnesses
                    .into_iter()
                    .map(|(length, cycle)| LengthWitness { length, cycle })
                    .collect(),
            };
            emit(mode, &report, || {
                let mut t = format!("n={} edges={}\n", report.n, report.edges);
                if report.lengths.is_empty() {
                    t.push_str("cycle lengths: (none)\n");
                } else {
                    let _ = writeln!(t, "cycle lengths: {}", join(&report.lengths));
                    for w in &report.witnesses {
                        let _ = writeln!(t, "  {}: {}", w.length, join(&w.cycle));
                    }
                }
                t
            })?;
            Ok(true)
        }
        Command::Consec { input, k } => {
            let g = input.read()?;
            let witness = find_consecutive_even_cycles(&g, k, &limits)?;
            let report = ConsecReport {
                n: g.n(),
                edges: g.edge_count(),
                k,
                found: witness.is_some(),
                witness,
            };
            emit(mode, &report, || {
                let mut t = format!("n={} edges={}\n", report.n, report.edges);
                match &report.witness {
                    Some(w) => {
                        let _ = writeln!(
                            t,
                            "found {k} cycles of consecutive even lengths: {}",
                            join(&w.lengths)
                        );
                        for (l, c) in w.lengths.iter().zip(&w.cycles) {
                            let _ = writeln!(t, "  {}: {}", l, join(c));
                        }
                    }
                    None => {
                        let _ = writeln!(t, "no {k} cycles of consecutive even lengths");
                    }
                }
                t
            })?;
            Ok(true)
        }
        Command::Blocks(input) => {
            let g = input.read()?;
            let d = block_decomposition(&g);
            let report = BlocksReport {
                n: g.n(),
                edges: g.edge_count(),
                connected: is_connected(&g),
                two_connected: is_two_connected(&g),
                bipartite: matches!(is_bipartite(&g), BipartiteVerdict::Bipartite { .. }),
                cut_vertices: d.cut_vertices,
                blocks: d.blocks,
                block_tree: d.block_tree,
            };
            emit(mode, &report, || {
                let mut t = format!("n={} edges={}\n", report.n, report.edges);
                let _ = writeln!(
                    t,
                    "connected: {}  2-connected: {}  bipartite: {}",
                    yesno(report.connected),
                    yesno(report.two_connected),
                    yesno(report.bipartite)
                );
                let _ = writeln!(
                    t,
                    "cut vertices: {}",
                    if report.cut_vertices.is_empty() {
                        "(none)".into()
                    } else {
                        join(&report.cut_vertices)
                    }
                );
                t.push_str("blocks:\n");
                for (i, b) in report.blocks.iter().enumerate() {
                    let _ = writeln!(t, "  B{i}: {}", join(b));
                }
                for &(b, v) in &report.block_tree {
                    let _ = writeln!(t, "block tree: B{b} - cut {v}");
                }
                t
            })?;
            Ok(true)
        }
        Command::Paths { input, x, y } => {
            let g = input.read()?;
            let witnesses = path_witnesses(&g, x, y, &limits)?;
            let parity = has_parity_paths(&g, x, y, &limits)?;
            let report = PathsReport {
                x,
                y,
                lengths: witnesses.keys().copied().collect(),
                witnesses: witnesses
                    .into_iter()
                    .map(|(length, path)| PathWitness { length, path })
                    .collect(),
                parity,
            };
            emit(mode, &report, || {
                let mut t = format!(
                    "({x}, {y})-path lengths: {}\n",
                    if report.lengths.is_empty() { "(none)".into() } else { join(&report.lengths) }
                );
                for w in &report.witnesses {
                    let _ = writeln!(t, "  {}: {}", w.length, join(&w.path));
                }
                let verdict = match &report.parity {
                    ParityPaths::Both { .. } => "both odd and even",
                    ParityPaths::OnlyOdd { .. } => "odd only",
                    ParityPaths::OnlyEven { .. } => "even only",
                    ParityPaths::Neither => "none",
                };
                let _ = writeln!(t, "parities attained: {verdict}");
                t
            })?;
            Ok(true)
        }
        Command::Family(cmd) => run_family(cmd, mode, &limits),
        Command::Turan(args) => {
            let family = match (args.modulus, args.residue, args.consec_k) {
                (Some(modulus), Some(residue), None) => {
                    ForbiddenFamily::CycleResidue { modulus, residue }
                }
                (None, None, Some(count)) => ForbiddenFamily::ConsecutiveEvenRun { count },
                _ => bail!("specify either --mod with --res, or --consec-k"),
            };
            let provided = match &args.input {
                Some(path) => Some(read_graph6_lines(path)?),
                None => None,
            };
            let source = match &provided {
                Some(graphs) => GraphSource::Provided(graphs),
                None => GraphSource::Internal,
            };
            let record = compute_ex(args.n, family, source, &limits)?;
            let ok = record.agrees != Some(false);
            emit(mode, &TuranJson::new(&record), || render_turan(&record))?;
            Ok(ok)
        }
        Command::Verify { suite, nmax } => run_verify(suite, nmax, mode, &limits),
        Command::Codec(input) => {
            let g = input.read()?;
            let report = CodecReport {
                n: g.n(),
                edges: g.edge_count(),
                graph6: to_graph6(&g),
                edge_list: format_edge_list(&g),
            };
            emit(mode, &report, || {
                format!("graph6: {}\nedge list:\n{}", report.graph6, report.edge_list)
            })?;
            Ok(true)
        }
    }
}

fn run_family(cmd: FamilyCmd, mode: OutputMode, limits: &SearchLimits) -> anyhow::Result<bool> {
    match cmd {
        FamilyCmd::Gen { n } => {
            let g = canonical_member(n)?;
            let descriptor = match classify_member(&g) {
                Membership::Member(d) => d,
                Membership::NotMember { reason } => {
                    bail!("generated graph failed its own membership check: {reason}")
                }
            };
            let report = FamilyGenReport { n, graph6: to_graph6(&g), descriptor };
            emit(mode, &report, || render_family_gen(&report))?;
            Ok(true)
        }
        FamilyCmd::Check(input) => {
            let g = input.read()?;
            let report = FamilyCheckReport {
                n: g.n(),
                edges: g.edge_count(),
                threshold: max_edges_no_two_mod_four(g.n())?,
                membership: classify_member(&g),
                verdict: extremal_verdict(&g, limits)?,
            };
            let ok = !matches!(report.verdict, ExtremalVerdict::Counterexample);
            emit(mode, &report, || render_family_check(&report))?;
            Ok(ok)
        }
        FamilyCmd::Enum { n } => {
            let mut members: Vec<String> =
                enumerate_members(n)?.iter().map(to_graph6).collect();
            members.sort();
            let report = FamilyEnumReport { n, count: members.len(), members };
            emit(mode, &report, || {
                let mut t = format!("family members on {n} vertices: {}\n", report.count);
                for m in &report.members {
                    let _ = writeln!(t, "  {m}");
                }
                t
            })?;
            Ok(true)
        }
    }
}

fn run_verify(
    suite: Suite,
    nmax: Option<usize>,
    mode: OutputMode,
    limits: &SearchLimits,
) -> anyhow::Result<bool> {
    match suite {
        Suite::All => {
            let mut suites = Vec::new();
            for s in STATEMENT_SUITES {
                let n = nmax.map_or(s.default_nmax(), |n| n.min(s.cap()));
                suites.push(SuiteJson::new(s.run(n, limits)?));
            }
            let formulas_n = nmax.map_or(Suite::Formulas.default_nmax(), |n| {
                n.min(Suite::Formulas.cap())
            });
            let formula_table = verify_formula_table(formulas_n, limits)?;
            let passed =
                suites.iter().all(|s| s.passed) && formula_table.mismatches.is_empty();
            let report = AllSuitesJson { passed, suites, formula_table };
            emit(mode, &report, || {
                let mut t = String::new();
                for s in &report.suites {
                    t.push_str(&render_suite(s));
                }
                t.push_str(&render_formula_table(&report.formula_table, formulas_n));
                let _ = writeln!(t, "overall: {}", if report.passed { "PASS" } else { "FAIL" });
                t
            })?;
            Ok(passed)
        }
        Suite::Formulas => {
            let n = nmax.unwrap_or_else(|| Suite::Formulas.default_nmax());
            let table = verify_formula_table(n, limits)?;
            let passed = table.mismatches.is_empty();
            emit(mode, &table, || render_formula_table(&table, n))?;
            Ok(passed)
        }
        s => {
            let n = nmax.unwrap_or_else(|| s.default_nmax());
            let report = SuiteJson::new(s.run(n, limits)?);
            let passed = report.passed;
            emit(mode, &report, || render_suite(&report))?;
            Ok(passed)
        }
    }
}

fn read_graph6_lines(path: &PathBuf) -> anyhow::Result<Vec<Graph>> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(
            from_graph6(line).with_context(|| format!("{}:{}", path.display(), i + 1))?,
        );
    }
    Ok(graphs)
}

fn emit<T: Serialize>(
    mode: OutputMode,
    report: &T,
    text: impl FnOnce() -> String,
) -> anyhow::Result<()> {
    use std::io::Write as _;
    let out = match mode {
        OutputMode::Json => serde_json::to_string_pretty(report)? + "\n",
        OutputMode::Text => text(),
    };
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Ok(()) => Ok(()),
        // the reader closed the pipe; there is nothing left to report
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.into()),
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct LengthWitness {
    length: usize,
    cycle: Vec<usize>,
}

#[derive(Serialize)]
struct SpectrumReport {
    n: usize,
    edges: usize,
    lengths: Vec<usize>,
    witnesses: Vec<LengthWitness>,
}

#[derive(Serialize)]
struct ConsecReport {
    n: usize,
    edges: usize,
    k: usize,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<CycleWitness>,
}

#[derive(Serialize)]
struct BlocksReport {
    n: usize,
    edges: usize,
    connected: bool,
    two_connected: bool,
    bipartite: bool,
    cut_vertices: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    block_tree: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PathWitness {
    length: usize,
    path: Vec<usize>,
}

#[derive(Serialize)]
struct PathsReport {
    x: usize,
    y: usize,
    lengths: Vec<usize>,
    witnesses: Vec<PathWitness>,
    parity: ParityPaths,
}

#[derive(Serialize)]
struct FamilyGenReport {
    n: usize,
    graph6: String,
    descriptor: FamilyDescriptor,
}

#[derive(Serialize)]
struct FamilyCheckReport {
    n: usize,
    edges: usize,
    threshold: usize,
    membership: Membership,
    verdict: ExtremalVerdict,
}

#[derive(Serialize)]
struct FamilyEnumReport {
    n: usize,
    count: usize,
    members: Vec<String>,
}

#[derive(Serialize)]
struct CodecReport {
    n: usize,
    edges: usize,
    graph6: String,
    edge_list: String,
}

/// Flat record shape for the turan subcommand's JSON contract.
#[derive(Serialize)]
struct TuranJson<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residue: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    consecutive_run: Option<usize>,
    max_edges: usize,
    formula: Option<usize>,
    agrees: Option<bool>,
    extremal_graph6: &'a [String],
}

impl<'a> TuranJson<'a> {
    fn new(record: &'a TuranRecord) -> Self {
        let (modulus, residue, consecutive_run) = match record.family {
            ForbiddenFamily::CycleResidue { modulus, residue } => {
                (Some(modulus), Some(residue), None)
            }
            ForbiddenFamily::ConsecutiveEvenRun { count } => (None, None, Some(count)),
        };
        TuranJson {
            n: record.n,
            modulus,
            residue,
            consecutive_run,
            max_edges: record.max_edges,
            formula: record.formula_value,
            agrees: record.agrees,
            extremal_graph6: &record.extremal_graph6,
        }
    }
}

#[derive(Serialize)]
struct SuiteJson {
    passed: bool,
    #[serde(flatten)]
    report: VerificationReport,
}

impl SuiteJson {
    fn new(report: VerificationReport) -> Self {
        SuiteJson { passed: report.passed(), report }
    }
}

#[derive(Serialize)]
struct AllSuitesJson {
    passed: bool,
    suites: Vec<SuiteJson>,
    formula_table: FormulaTable,
}

fn render_turan(record: &TuranRecord) -> String {
    let mut t = format!("n={} forbidding {}\n", record.n, record.family);
    let _ = writeln!(t, "max edges: {}", record.max_edges);
    match (record.formula_value, record.agrees) {
        (Some(f), Some(a)) => {
            let _ = writeln!(t, "formula: {f} ({})", if a { "agrees" } else { "MISMATCH" });
        }
        _ => t.push_str("formula: (none)\n"),
    }
    let _ = writeln!(t, "extremal graphs ({}):", record.extremal_graph6.len());
    for g6 in &record.extremal_graph6 {
        let _ = writeln!(t, "  {g6}");
    }
    t
}

fn render_family_gen(report: &FamilyGenReport) -> String {
    let d = &report.descriptor;
    let mut t = format!("graph6: {}\n", report.graph6);
    let _ = writeln!(t, "n={} q={} r={}", d.n, d.q, d.r);
    t.push_str("blocks:\n");
    for b in &d.blocks {
        let kind = match b.kind {
            FamilyBlockKind::K5 => "K5",
            FamilyBlockKind::Remainder => "remainder clique",
        };
        let _ = writeln!(t, "  {kind}: {}", join(&b.vertices));
    }
    t
}

fn render_family_check(report: &FamilyCheckReport) -> String {
    let mut t = format!(
        "n={} edges={} threshold={}\n",
        report.n, report.edges, report.threshold
    );
    match &report.membership {
        Membership::Member(d) => {
            let _ = writeln!(t, "membership: member (q={} r={})", d.q, d.r);
        }
        Membership::NotMember { reason } => {
            let _ = writeln!(t, "membership: not a member ({reason})");
        }
    }
    match &report.verdict {
        ExtremalVerdict::BelowThreshold => t.push_str("verdict: below the edge threshold\n"),
        ExtremalVerdict::HasWitness(w) => {
            let _ = writeln!(
                t,
                "verdict: consecutive even cycles of lengths {}",
                join(&w.lengths)
            );
            for (l, c) in w.lengths.iter().zip(&w.cycles) {
                let _ = writeln!(t, "  {}: {}", l, join(c));
            }
        }
        ExtremalVerdict::ExtremalMember(d) => {
            let _ = writeln!(t, "verdict: extremal family member (q={} r={})", d.q, d.r);
        }
        ExtremalVerdict::Counterexample => {
            t.push_str("verdict: COUNTEREXAMPLE - at the threshold without the cycles or membership\n")
        }
    }
    t
}

fn render_suite(s: &SuiteJson) -> String {
    let r = &s.report;
    let mut t = format!(
        "suite {}: {} (checked {} instances in {:.2?})\n",
        r.statement_id,
        if s.passed { "PASS" } else { "FAIL" },
        r.checked,
        r.elapsed
    );
    let _ = writeln!(t, "  universe: {}", r.universe);
    for v in &r.violations {
        let _ = writeln!(t, "  violation: {} ({})", v.graph6, v.detail);
    }
    t
}

fn render_formula_table(table: &FormulaTable, nmax: usize) -> String {
    let mut t = format!(
        "formula table up to n={nmax}: {} records, {} mismatches\n",
        table.records.len(),
        table.mismatches.len()
    );
    for r in &table.records {
        if let ForbiddenFamily::CycleResidue { residue, .. } = r.family {
            let _ = writeln!(
                t,
                "  n={} res={}: max={} formula={} extremal={}",
                r.n,
                residue,
                r.max_edges,
                r.formula_value.map_or("-".into(), |f| f.to_string()),
                r.extremal_graph6.len()
            );
        }
    }
    for m in &table.mismatches {
        let _ = writeln!(
            t,
            "  MISMATCH n={} res={}: computed {} vs formula {}",
            m.n, m.residue, m.computed, m.formula
        );
    }
    t
}
