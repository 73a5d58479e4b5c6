use clap::{Args, Parser, Subcommand, ValueEnum};
use edgereg::field::PrimeField;
use edgereg::formats::parse_facet_list;
use edgereg::graph::Graph;
use edgereg::harness::{
    build_context, run_sweep, verify_complex, HarnessError, InputSource, OutputFormat, RunConfig,
};
use edgereg::structure::PcMode;
use edgereg::theorems::verify_graph;
use edgereg::{graph6, selftest};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "edgereg",
    about = "Regularity, matching, and ring-theoretic invariants of edge ideals, \
             with exhaustive small-graph verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum PcModeArg {
    /// Some disjoint selection of basic 5-cycles partitions C(G).
    #[default]
    Existential,
    /// All basic 5-cycles must be pairwise disjoint.
    Strict,
}

impl From<PcModeArg> for PcMode {
    fn from(m: PcModeArg) -> PcMode {
        match m {
            PcModeArg::Existential => PcMode::Existential,
            PcModeArg::Strict => PcMode::Strict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Jsonl,
    Csv,
}

#[derive(Args)]
struct VerifyOpts {
    /// Coefficient field: a prime p.
    #[arg(long, default_value_t = 2)]
    field: u64,
    /// Cycle lengths admitted to the H-family alongside K2.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    cycles: Vec<usize>,
    /// Reading of the basic-5-cycle partition condition.
    #[arg(long, value_enum, default_value_t)]
    pc_mode: PcModeArg,
}

impl VerifyOpts {
    fn config(&self, input: InputSource, format: OutputFormat, jobs: Option<usize>) -> RunConfig {
        RunConfig {
            input,
            field_p: self.field,
            cycles: self.cycles.clone(),
            format,
            jobs,
            pc_mode: self.pc_mode.into(),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Full invariant and check report for one graph.
    #[command(group = clap::ArgGroup::new("src").required(true).args(["graph6", "input"]))]
    Invariants {
        /// The graph, graph6-encoded.
        graph6: Option<String>,
        /// Edge-list file: first line `n m`, then `u v` lines.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Verify every graph in a range or file; emit reports and a summary.
    Sweep {
        /// Enumerate all isomorphism classes up to this many vertices.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Read graphs from a file instead: graph6 lines, or a single
        /// edge list (detected by its `n m` header).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Check a facet-list complex directly: first line `n f`, then one
    /// space-separated vertex list per facet (`-` for the empty face).
    Complex {
        path: PathBuf,
        /// Coefficient field: a prime p.
        #[arg(long, default_value_t = 2)]
        field: u64,
    },
    /// Recompute the battery of known example values.
    Selftest,
}

/// A graph6 line never contains a space; an edge-list header always does.
fn sniff_input(path: PathBuf) -> Result<InputSource, HarnessError> {
    let text = std::fs::read_to_string(&path)?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    Ok(match first {
        Some(l) if l.contains(' ') => InputSource::EdgeListFile(path),
        _ => InputSource::Graph6File(path),
    })
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.cmd {
        Cmd::Invariants { graph6: g6, input, opts } => {
            let g: Graph = match (g6, input) {
                (Some(s), None) => {
                    graph6::decode(s.trim()).map_err(|source| HarnessError::Graph6 {
                        line: 1,
                        source,
                    })?
                }
                (None, Some(path)) => {
                    edgereg::formats::parse_edge_list(&std::fs::read_to_string(path)?)?
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            let cfg = opts.config(
                InputSource::Enumerate { max_n: 0 },
                OutputFormat::Jsonl,
                None,
            );
            let ctx = build_context(&cfg)?;
            let report = verify_graph(&g, &ctx);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports always serialize")
            );
            Ok(if report.failed_ids().is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Sweep { max_n, input, format, jobs, opts } => {
            let source = match input {
                Some(path) => sniff_input(path)?,
                None => InputSource::Enumerate { max_n },
            };
            let format = match format {
                FormatArg::Jsonl => OutputFormat::Jsonl,
                FormatArg::Csv => OutputFormat::Csv,
            };
            let cfg = opts.config(source, format, jobs);
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            let summary = run_sweep(&cfg, &mut out)?;
            drop(out);
            print!("{summary}");
            Ok(if summary.any_failed() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Cmd::Complex { path, field } => {
            let c = parse_facet_list(&std::fs::read_to_string(path)?)?;
            let field = PrimeField::new(field)?;
            let report = verify_complex(&c, field)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports always serialize")
            );
            let clean = report
                .checks
                .iter()
                .all(|c| !c.applicable || c.passed == Some(true));
            Ok(if clean { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Cmd::Selftest => {
            let results = selftest::run();
            for r in &results {
                println!("{} {}", if r.ok { "pass" } else { "FAIL" }, r.name);
            }
            let passed = results.iter().filter(|r| r.ok).count();
            println!("{passed}/{} passed", results.len());
            Ok(if selftest::all_pass(&results) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
