//! `compactor`: count, condense and extract from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use compactor_core::algebra::{ds_algebra, is_algebra, vc_algebra, Problem, ProblemAlgebra};
use compactor_core::compactor::{condense_with_report, deserialize, extract, peek_problem, serialize, CondenseReport};
use compactor_core::config::Config;
use compactor_core::generate::corpus;
use compactor_core::graph::parse_edge_list_named;
use compactor_core::modulator::{approx_modulator, vc_modulator_2approx, ModulatorOutcome};
use compactor_core::oracle::{brute_count, brute_min_modulator, brute_treewidth};
use compactor_core::protrusion::{full_pipeline_decomposition, ModulatorSource, PipelineOutcome};
use compactor_core::{BigCount, CompactorFile, Error, Graph, VertexSet};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_SOFTWARE: u8 = 70;

#[derive(Parser)]
#[command(name = "compactor", version, about = "Exact solution counting through protrusion decompositions")]
struct Cli {
    /// Print a run report on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count size-k solutions through the full pipeline.
    Count(PipelineArgs),
    /// Write the compact file for (graph, k) to stdout or --output.
    Condense {
        #[command(flatten)]
        args: PipelineArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover the count from a compact file.
    Extract { file: PathBuf },
    /// Brute-force reference values.
    Oracle {
        #[arg(long, default_value = "vc")]
        problem: Problem,
        #[arg(short, default_value_t = 0)]
        k: usize,
        /// Print the minimum treewidth-t modulator size instead.
        #[arg(long)]
        min_modulator: bool,
        /// Print the treewidth instead.
        #[arg(long)]
        treewidth: bool,
        #[arg(long, default_value_t = 0)]
        t: usize,
        graph: PathBuf,
    },
    /// Print the protrusion decomposition the pipeline builds.
    Decompose(PipelineArgs),
    /// Approximate a treewidth-t modulator of size at most c*k.
    Modulator {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        knobs: Knobs,
        graph: PathBuf,
    },
    /// Check the pipeline against the oracle on generated graphs.
    Selftest {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 60)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Clone)]
struct Knobs {
    #[arg(long, default_value_t = 0)]
    t: usize,
    #[arg(long, default_value_t = 4)]
    r: usize,
    #[arg(long, default_value_t = 8)]
    b: usize,
    #[arg(long, default_value_t = 5)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    c: usize,
    #[arg(long, default_value_t = 4000)]
    region_budget: usize,
}

impl Knobs {
    fn config(&self) -> Config {
        Config { t: self.t, r: self.r, b: self.b, d: self.d, c: self.c, region_budget: self.region_budget, seed: 0 }
    }
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long, default_value = "vc")]
    problem: Problem,
    #[arg(short)]
    k: usize,
    #[command(flatten)]
    knobs: Knobs,
    /// Whitespace-separated vertex names to use as the modulator.
    #[arg(long)]
    modulator_file: Option<PathBuf>,
    graph: PathBuf,
}

enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
    Selftest(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Stalled(_) | Error::Internal(_) | Error::Decomposition(_)) => EX_SOFTWARE,
            Failure::Core(_) => EX_DATAERR,
            Failure::Io(..) => EX_NOINPUT,
            Failure::Selftest(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(p, e) => format!("{}: {e}", p.display()),
            Failure::Selftest(m) => m.clone(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

struct Input {
    graph: Graph,
    names: Vec<String>,
}

impl Input {
    fn load(path: &Path) -> Result<Self, Failure> {
        let bytes = fs::read(path).map_err(|e| Failure::Io(path.to_owned(), e))?;
        let (graph, names) = parse_edge_list_named(&bytes)?;
        Ok(Input { graph, names })
    }

    fn name(&self, v: usize) -> String {
        self.names.get(v).cloned().unwrap_or_else(|| v.to_string())
    }

    fn modulator(&self, path: &Path) -> Result<VertexSet, Failure> {
        let text = read(path)?;
        text.split_whitespace()
            .map(|tok| {
                self.names
                    .iter()
                    .position(|n| n == tok)
                    .ok_or_else(|| Failure::Core(Error::Domain(format!("modulator names unknown vertex {tok:?}"))))
            })
            .collect()
    }
}

fn with_algebra<R>(p: Problem, run: impl AlgebraRun<Output = R>) -> R {
    match p {
        Problem::VertexCover => run.run(&vc_algebra()),
        Problem::IndependentSet => run.run(&is_algebra()),
        Problem::DominatingSet => run.run(&ds_algebra()),
    }
}

trait AlgebraRun {
    type Output;
    fn run<A: ProblemAlgebra>(self, alg: &A) -> Self::Output;
}

fn report_lines(
    input: &Input,
    k: usize,
    file_stats: Option<(usize, usize, usize, usize)>,
    report: &CondenseReport,
) -> Vec<String> {
    let g = &input.graph;
    let mut out = vec![format!("graph n={} m={} k={k}", g.n(), g.m())];
    if let Some(null) = &report.null {
        out.push(format!(
            "null: modulator lower bound {} exceeds budget {} (search complete: {})",
            null.lower_bound, null.budget, null.search_complete
        ));
    }
    if let Some(p) = &report.pipeline {
        let source = match &p.source {
            ModulatorSource::Approximated { budget, report } => format!(
                "approximated (budget {budget}, {} replacements, fallback {})",
                report.replacements, report.fallback_used
            ),
            ModulatorSource::Structural => "structural".to_string(),
            ModulatorSource::External => "external".to_string(),
        };
        out.push(format!("modulator size={} source={source}", p.modulator.len()));
        let pd = &p.decomposition;
        out.push(format!(
            "decomposition alpha={} beta={} gamma={} s={} center={} cuts={}",
            pd.params.alpha,
            pd.params.beta,
            pd.params.gamma,
            pd.s(),
            pd.center.len(),
            pd.cuts
        ));
    }
    if let Some((stored, max_states, s, bound)) = file_stats {
        out.push(format!("tables stored_values={stored} max_states={max_states} s={s} bound={bound}"));
    }
    out
}

struct Condense<'a> {
    input: &'a Input,
    args: &'a PipelineArgs,
    external: Option<VertexSet>,
    verbose: bool,
    output: Option<&'a Path>,
    count_only: bool,
}

impl AlgebraRun for Condense<'_> {
    type Output = Outcome;

    fn run<A: ProblemAlgebra>(self, alg: &A) -> Outcome {
        let start = Instant::now();
        let cfg = self.args.knobs.config();
        let (file, report) = condense_with_report(&self.input.graph, self.args.k, alg, &cfg, self.external.as_ref())?;
        let st = file.stats();
        let text = if self.count_only {
            let count: BigCount = extract(&file, alg)?;
            format!("{count}\n")
        } else {
            serialize(&file, alg)?
        };
        match self.output {
            Some(path) => fs::write(path, &text).map_err(|e| Failure::Io(path.to_owned(), e))?,
            None => print!("{text}"),
        }
        if self.verbose {
            let stats = (!file.is_null()).then_some((st.stored_values, st.max_states, st.s, st.bound(self.args.k)));
            for line in report_lines(self.input, self.args.k, stats, &report) {
                eprintln!("{line}");
            }
            eprintln!("wall {:.3}s", start.elapsed().as_secs_f64());
        }
        Ok(())
    }
}

fn pipeline(args: &PipelineArgs, verbose: bool, output: Option<&Path>, count_only: bool) -> Outcome {
    let input = Input::load(&args.graph)?;
    let external = args.modulator_file.as_deref().map(|p| input.modulator(p)).transpose()?;
    with_algebra(args.problem, Condense { input: &input, args, external, verbose, output, count_only })
}

struct Extract<'a>(&'a str, bool);

impl AlgebraRun for Extract<'_> {
    type Output = Outcome;

    fn run<A: ProblemAlgebra>(self, alg: &A) -> Outcome {
        let start = Instant::now();
        let file: CompactorFile<A::State> = deserialize(self.0, alg)?;
        let count = extract(&file, alg)?;
        println!("{count}");
        if self.1 {
            let st = file.stats();
            eprintln!(
                "problem={} k={} null={} s={} center={} stored_values={}",
                file.problem,
                file.k,
                file.is_null(),
                st.s,
                st.center_size,
                st.stored_values
            );
            eprintln!("wall {:.3}s", start.elapsed().as_secs_f64());
        }
        Ok(())
    }
}

struct Decompose<'a> {
    input: &'a Input,
    args: &'a PipelineArgs,
    external: Option<VertexSet>,
}

impl AlgebraRun for Decompose<'_> {
    type Output = Outcome;

    fn run<A: ProblemAlgebra>(self, alg: &A) -> Outcome {
        let cfg = self.args.knobs.config();
        match full_pipeline_decomposition(&self.input.graph, self.args.k, alg, &cfg, self.external.as_ref())? {
            PipelineOutcome::Null(null) => {
                println!("null lower_bound={} budget={}", null.lower_bound, null.budget);
            }
            PipelineOutcome::Decomposition(p) => {
                print!("{}", p.decomposition.render(&self.input.graph, |v| self.input.name(v)));
            }
        }
        Ok(())
    }
}

fn oracle(problem: Problem, k: usize, min_modulator: bool, treewidth: bool, t: usize, path: &Path) -> Outcome {
    let input = Input::load(path)?;
    let g = &input.graph;
    let value = if treewidth {
        brute_treewidth(g)?.to_string()
    } else if min_modulator {
        brute_min_modulator(g, t)?.to_string()
    } else {
        let holds = match problem {
            Problem::VertexCover => compactor_core::oracle::vc_holds,
            Problem::IndependentSet => compactor_core::oracle::is_holds,
            Problem::DominatingSet => compactor_core::oracle::ds_holds,
        };
        brute_count(g, k, holds)?.to_string()
    };
    println!("{value}");
    Ok(())
}

fn modulator(k: usize, knobs: &Knobs, path: &Path, verbose: bool) -> Outcome {
    let input = Input::load(path)?;
    let cfg = knobs.config();
    match approx_modulator(&input.graph, k, cfg.t, &cfg)? {
        ModulatorOutcome::Found(rep) => {
            let names: Vec<String> =
                input.graph.order_by_label(&rep.modulator).into_iter().map(|v| input.name(v)).collect();
            println!("{}", names.join(" "));
            if verbose {
                eprintln!(
                    "size={} replacements={} final_graph={} catalog={} fallback={}",
                    rep.modulator.len(),
                    rep.replacements,
                    rep.final_graph_size,
                    rep.catalog_size,
                    rep.fallback_used
                );
            }
        }
        ModulatorOutcome::NoSmallModulator { lower_bound, search_complete } => {
            println!("none: lower bound {lower_bound} > {k} (search complete: {search_complete})");
        }
    }
    Ok(())
}

struct Check<'a> {
    g: &'a Graph,
    k: usize,
    external: Option<&'a VertexSet>,
    holds: fn(&Graph, &VertexSet) -> bool,
}

impl AlgebraRun for Check<'_> {
    type Output = Result<bool, Failure>;

    fn run<A: ProblemAlgebra>(self, alg: &A) -> Result<bool, Failure> {
        let got = compactor_core::compactor::count_end_to_end(self.g, self.k, alg, &Config::default(), self.external)?;
        Ok(got == brute_count(self.g, self.k, self.holds)?)
    }
}

fn selftest(max_n: usize, count: usize, max_k: usize, seed: u64, verbose: bool) -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    let mut wrong = Vec::new();
    for sample in corpus(seed, count, max_n) {
        let g = &sample.graph;
        let x = vc_modulator_2approx(g);
        for k in 0..=max_k {
            let cases = [
                (Problem::VertexCover, None, compactor_core::oracle::vc_holds as fn(&Graph, &VertexSet) -> bool),
                (Problem::IndependentSet, None, compactor_core::oracle::is_holds),
                (Problem::DominatingSet, Some(&x), compactor_core::oracle::ds_holds),
            ];
            for (p, external, holds) in cases {
                checks += 1;
                if !with_algebra(p, Check { g, k, external, holds })? {
                    wrong.push(format!("{p} {} k={k}", sample.name));
                }
            }
        }
    }
    println!("selftest: {checks} checks, {} mismatches, {:.2}s", wrong.len(), start.elapsed().as_secs_f64());
    if verbose {
        for w in &wrong {
            eprintln!("mismatch {w}");
        }
    }
    if wrong.is_empty() {
        Ok(())
    } else {
        Err(Failure::Selftest(format!("{} pipeline counts disagree with the oracle", wrong.len())))
    }
}

fn run(cli: Cli) -> Outcome {
    let verbose = cli.verbose;
    match cli.command {
        Command::Count(args) => pipeline(&args, verbose, None, true),
        Command::Condense { args, output } => pipeline(&args, verbose, output.as_deref(), false),
        Command::Extract { file } => {
            let text = read(&file)?;
            with_algebra(peek_problem(&text)?, Extract(&text, verbose))
        }
        Command::Oracle { problem, k, min_modulator, treewidth, t, graph } => {
            oracle(problem, k, min_modulator, treewidth, t, &graph)
        }
        Command::Decompose(args) => {
            let input = Input::load(&args.graph)?;
            let external = args.modulator_file.as_deref().map(|p| input.modulator(p)).transpose()?;
            with_algebra(args.problem, Decompose { input: &input, args: &args, external })
        }
        Command::Modulator { k, knobs, graph } => modulator(k, &knobs, &graph, verbose),
        Command::Selftest { max_n, count, max_k, seed } => selftest(max_n, count, max_k, seed, verbose),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("compactor: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
