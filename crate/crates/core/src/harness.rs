//! Sweep orchestration: input loading, parallel verification with
//! deterministic output order, JSONL/CSV emission, and the summary table.

use crate::enumerate::{enumerate_graphs, EnumerationCapExceeded};
use crate::field::{NotPrime, PrimeField};
use crate::formats::{self, EdgeListError, FacetListError};
use crate::graph::Graph;
use crate::graph6::{self, Graph6Error};
use crate::hochster;
use crate::matching::{BadCycleLength, HFamily};
use crate::simplicial::SimplicialComplex;
use crate::structure::PcMode;
use crate::theorems::{complex_checks, verify_graph, CheckContext, TheoremCheck, TheoremReport};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use thiserror::Error;

/// Full sweeps above this wall take hours; refuse rather than stall.
pub const MAX_SWEEP_VERTICES: usize = 10;

pub const THEOREM_IDS: [&str; 15] = [
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14",
    "T15",
];

#[derive(Clone, Debug)]
pub enum InputSource {
    /// All isomorphism classes with up to `max_n` vertices.
    Enumerate { max_n: usize },
    /// One graph6 line per graph.
    Graph6File(PathBuf),
    /// A single graph as an edge list.
    EdgeListFile(PathBuf),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: InputSource,
    pub field_p: u64,
    pub cycles: Vec<usize>,
    pub format: OutputFormat,
    pub jobs: Option<usize>,
    pub pc_mode: PcMode,
}

impl RunConfig {
    pub fn enumerate_defaults(max_n: usize) -> Self {
        RunConfig {
            input: InputSource::Enumerate { max_n },
            field_p: 2,
            cycles: vec![5],
            format: OutputFormat::Jsonl,
            jobs: None,
            pc_mode: PcMode::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    FacetList(#[from] FacetListError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationCapExceeded),
    #[error("graph on line {line} has {n} vertices, above the sweep cap {cap}")]
    AboveCap { line: usize, n: usize, cap: usize },
    #[error("sweeps are capped at n <= {max}, got --max-n {got}")]
    CapTooLarge { got: usize, max: usize },
    #[error(transparent)]
    NotPrime(#[from] NotPrime),
    #[error(transparent)]
    Family(#[from] BadCycleLength),
    #[error("family cycle length {0} is beyond the admission check cap of 16")]
    FamilyCycleTooLong(usize),
    #[error("the facet list describes the void complex; nothing to measure")]
    VoidComplex,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TheoremTally {
    pub id: &'static str,
    pub applicable: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Largest observed value of one side of the sandwich slack.
#[derive(Clone, Debug, Serialize, Default)]
pub struct GapStat {
    pub max: usize,
    pub attained_by: usize,
    pub first_witness: Option<String>,
}

impl GapStat {
    fn feed(&mut self, value: usize, id: &str) {
        if value > self.max {
            self.max = value;
            self.attained_by = 1;
            self.first_witness = Some(id.to_owned());
        } else if value == self.max {
            self.attained_by += 1;
            if self.first_witness.is_none() {
                self.first_witness = Some(id.to_owned());
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub tallies: Vec<TheoremTally>,
    /// reg - ind_match_k2c5.
    pub lower_gap: GapStat,
    /// min_match_k2c5 - reg.
    pub upper_gap: GapStat,
}

impl SweepSummary {
    pub fn any_failed(&self) -> bool {
        self.tallies.iter().any(|t| t.failed > 0)
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs checked: {}", self.graphs)?;
        writeln!(f, "{:<6}{:>12}{:>9}{:>9}", "check", "applicable", "passed", "failed")?;
        for t in &self.tallies {
            writeln!(f, "{:<6}{:>12}{:>9}{:>9}", t.id, t.applicable, t.passed, t.failed)?;
        }
        let gap_line = |name: &str, g: &GapStat| match &g.first_witness {
            Some(w) => format!("largest {name}: {} on {} graph(s), first {w}", g.max, g.attained_by),
            None => format!("largest {name}: none observed"),
        };
        writeln!(f, "{}", gap_line("reg - ind_match_k2c5 gap", &self.lower_gap))?;
        writeln!(f, "{}", gap_line("min_match_k2c5 - reg gap", &self.upper_gap))?;
        if self.any_failed() {
            writeln!(f, "FAILED: some applicable check did not hold")?;
        } else {
            writeln!(f, "all applicable checks passed")?;
        }
        Ok(())
    }
}

pub fn load_graphs(input: &InputSource) -> Result<Vec<Graph>, HarnessError> {
    match input {
        InputSource::Enumerate { max_n } => {
            if *max_n > MAX_SWEEP_VERTICES {
                return Err(HarnessError::CapTooLarge { got: *max_n, max: MAX_SWEEP_VERTICES });
            }
            let mut out = Vec::new();
            for n in 0..=*max_n {
                out.extend(enumerate_graphs(n)?);
            }
            Ok(out)
        }
        InputSource::Graph6File(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = graph6::decode(line)
                    .map_err(|source| HarnessError::Graph6 { line: i + 1, source })?;
                if g.n() > MAX_SWEEP_VERTICES {
                    return Err(HarnessError::AboveCap {
                        line: i + 1,
                        n: g.n(),
                        cap: MAX_SWEEP_VERTICES,
                    });
                }
                out.push(g);
            }
            Ok(out)
        }
        InputSource::EdgeListFile(path) => {
            let text = std::fs::read_to_string(path)?;
            let g = formats::parse_edge_list(&text)?;
            if g.n() > MAX_SWEEP_VERTICES {
                return Err(HarnessError::AboveCap { line: 1, n: g.n(), cap: MAX_SWEEP_VERTICES });
            }
            Ok(vec![g])
        }
    }
}

pub fn build_context(cfg: &RunConfig) -> Result<CheckContext, HarnessError> {
    let field = PrimeField::new(cfg.field_p)?;
    if let Some(&k) = cfg.cycles.iter().find(|&&k| k > 16) {
        return Err(HarnessError::FamilyCycleTooLong(k));
    }
    let family = HFamily::new(cfg.cycles.iter().copied())?;
    Ok(CheckContext::new(field, family, cfg.pc_mode))
}

fn in_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => work(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool construction only fails on exotic systems")
            .install(work),
    }
}

pub fn csv_header() -> String {
    let mut cols = vec![
        "graph6",
        "n",
        "edges",
        "components",
        "alpha",
        "girth",
        "match",
        "min_match",
        "ind_match",
        "ind_match_k2c5",
        "min_match_k2c5",
        "ind_match_family",
        "min_match_family",
        "reg",
        "dim_delta_plus_one",
        "h_vector",
        "cohen_macaulay",
        "doubly_cohen_macaulay",
        "gorenstein",
        "in_class_pc",
        "paw_free",
        "field",
    ];
    cols.extend(THEOREM_IDS);
    cols.join(",")
}

pub fn csv_row(r: &TheoremReport) -> String {
    let i = &r.invariants;
    let h: Vec<String> = i.h_vector.iter().map(|x| x.to_string()).collect();
    let mut cols = vec![
        i.graph6.clone(),
        i.n.to_string(),
        i.edges.to_string(),
        i.components.to_string(),
        i.alpha.to_string(),
        i.girth.map_or(String::new(), |g| g.to_string()),
        i.matching.to_string(),
        i.min_match.to_string(),
        i.ind_match.to_string(),
        i.ind_match_k2c5.to_string(),
        i.min_match_k2c5.to_string(),
        i.ind_match_family.to_string(),
        i.min_match_family.to_string(),
        i.reg.to_string(),
        i.dim_delta_plus_one.to_string(),
        h.join(";"),
        i.cohen_macaulay.to_string(),
        i.doubly_cohen_macaulay.to_string(),
        i.gorenstein.to_string(),
        i.in_class_pc.to_string(),
        i.paw_free.to_string(),
        i.field.to_string(),
    ];
    for c in &r.checks {
        cols.push(match c.passed {
            None => String::new(),
            Some(true) => "pass".into(),
            Some(false) => "fail".into(),
        });
    }
    cols.join(",")
}

/// Verify every input graph, stream reports to `out`, and return the
/// summary. Graphs are processed in chunks so long sweeps emit as they go;
/// report order always matches input order.
pub fn run_sweep(cfg: &RunConfig, out: &mut dyn Write) -> Result<SweepSummary, HarnessError> {
    let graphs = load_graphs(&cfg.input)?;
    let ctx = build_context(cfg)?;

    let mut tallies: Vec<TheoremTally> = THEOREM_IDS
        .iter()
        .map(|&id| TheoremTally { id, applicable: 0, passed: 0, failed: 0 })
        .collect();
    let mut lower_gap = GapStat::default();
    let mut upper_gap = GapStat::default();
    let mut total = 0usize;

    if cfg.format == OutputFormat::Csv {
        writeln!(out, "{}", csv_header())?;
    }

    for chunk in graphs.chunks(512) {
        let reports: Vec<TheoremReport> =
            in_pool(cfg.jobs, || chunk.par_iter().map(|g| verify_graph(g, &ctx)).collect());
        for r in &reports {
            let line = match cfg.format {
                OutputFormat::Jsonl => {
                    serde_json::to_string(r).expect("reports contain no non-serializable values")
                }
                OutputFormat::Csv => csv_row(r),
            };
            if let Err(e) = writeln!(out, "{line}") {
                let _ = out.flush(); // keep whatever already made it out
                return Err(e.into());
            }

            total += 1;
            for (tally, check) in tallies.iter_mut().zip(&r.checks) {
                debug_assert_eq!(tally.id, check.id);
                if check.applicable {
                    tally.applicable += 1;
                    match check.passed {
                        Some(true) => tally.passed += 1,
                        _ => tally.failed += 1,
                    }
                }
            }
            let i = &r.invariants;
            lower_gap.feed(i.reg - i.ind_match_k2c5, &i.graph6);
            upper_gap.feed(i.min_match_k2c5 - i.reg, &i.graph6);
        }
        out.flush()?;
    }

    Ok(SweepSummary { graphs: total, tallies, lower_gap, upper_gap })
}

/// Report for a facet-list complex: the doubly Cohen-Macaulay checks plus
/// the measurements they rest on.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexReport {
    pub n: usize,
    pub dim: i32,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub reg: usize,
    pub cohen_macaulay: bool,
    pub doubly_cohen_macaulay: bool,
    pub gorenstein: bool,
    pub field: u64,
    pub checks: Vec<TheoremCheck>,
}

pub fn verify_complex(
    c: &SimplicialComplex,
    field: PrimeField,
) -> Result<ComplexReport, HarnessError> {
    if c.is_void() {
        return Err(HarnessError::VoidComplex);
    }
    Ok(ComplexReport {
        n: c.n(),
        dim: c.dim(),
        f_vector: c.f_vector().0.clone(),
        h_vector: c.h_vector().0.clone(),
        reg: hochster::regularity(c, field),
        cohen_macaulay: crate::cm::is_cohen_macaulay(c, field),
        doubly_cohen_macaulay: crate::cm::is_doubly_cohen_macaulay(c, field),
        gorenstein: crate::cm::is_gorenstein(c, field),
        field: field.p(),
        checks: complex_checks(c, field),
    })
}
