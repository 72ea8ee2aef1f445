//! The command-line surface: JSON analysis reports, graph6 stream
//! processing and family generation. The `forcing-lab` binary only parses
//! arguments and calls into here.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::classify::{conjecture_check_rules, fast_join_verdict, is_threshold};
use crate::error::{GraphError, SearchError};
use crate::forcing::Rule;
use crate::generators::{self, FamilySpec};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::limits::Cap;
use crate::search::Analysis;

/// Schema version of [`AnalysisReport`].
pub const REPORT_VERSION: u32 = 1;
/// Default `--max-order`.
pub const DEFAULT_MAX_ORDER: usize = 16;
/// Largest accepted `--max-order`.
pub const HARD_MAX_ORDER: usize = 20;
/// Overrides [`DEFAULT_MAX_ORDER`] when set.
pub const MAX_ORDER_ENV: &str = "FORCING_LAB_MAX_ORDER";

const CHUNK: usize = 256;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 2 for parse and usage errors, 3 for cap violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Search(SearchError::CapExceeded { .. }) => 3,
            CliError::Graph(GraphError::OrderTooLarge(_)) => 3,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

/// Which rules a command computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleChoice {
    Standard,
    Psd,
    Both,
}

impl RuleChoice {
    pub fn rules(self) -> Vec<Rule> {
        match self {
            RuleChoice::Standard => vec![Rule::Standard],
            RuleChoice::Psd => vec![Rule::Psd],
            RuleChoice::Both => vec![Rule::Standard, Rule::Psd],
        }
    }
}

impl std::str::FromStr for RuleChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" => Ok(RuleChoice::Standard),
            "psd" => Ok(RuleChoice::Psd),
            "both" => Ok(RuleChoice::Both),
            _ => Err(format!(
                "unknown rule {s:?} (expected standard, psd or both)"
            )),
        }
    }
}

/// Resolves the order cap from the flag, then the environment, then the
/// default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<Cap, CliError> {
    let requested = match (flag, env) {
        (Some(n), _) => n,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_ORDER_ENV}={v:?} is not an integer")))?,
        (None, None) => DEFAULT_MAX_ORDER,
    };
    if requested > HARD_MAX_ORDER {
        return Err(CliError::Usage(format!(
            "max order {requested} exceeds the hard limit {HARD_MAX_ORDER}"
        )));
    }
    Ok(Cap::new(requested))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FastJoinFlags {
    pub psd: bool,
    pub standard: bool,
}

/// One-graph analysis. Per-rule fields are keyed by rule name
/// (`"standard"`, `"psd"`) and hold only the rules that were computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub version: u32,
    pub graph6: String,
    pub order: usize,
    pub rules: Vec<Rule>,
    pub z: Option<usize>,
    pub z_upper: Option<usize>,
    pub zplus: Option<usize>,
    pub zplus_upper: Option<usize>,
    /// Times of minimum forcing sets.
    pub pt_set: BTreeMap<String, Vec<u32>>,
    /// Times of minimal forcing sets.
    pub ept_set: BTreeMap<String, Vec<u32>>,
    /// Gaps of `ept_set`.
    pub gaps: BTreeMap<String, Vec<u32>>,
    pub fixed_pt: BTreeMap<String, Option<u32>>,
    /// Standard throttling number; `null` unless the standard rule ran.
    pub throttling: Option<usize>,
    pub fast_join: FastJoinFlags,
    pub threshold: bool,
    /// Realized time -> first minimal forcing set with that time.
    pub witnesses: BTreeMap<String, BTreeMap<String, Vec<usize>>>,
    /// True when only `V(G)` forces, so the time sets are `[0]`.
    pub only_full_set_forces: BTreeMap<String, bool>,
}

pub fn cmd_analyze(g: &Graph, rules: &[Rule], cap: Cap) -> Result<AnalysisReport, CliError> {
    cap.check(g.order())?;
    let fast_join = if g.order() >= 2 {
        let v = fast_join_verdict(g)?;
        FastJoinFlags {
            psd: v.psd_fast,
            standard: v.standard_fast,
        }
    } else {
        FastJoinFlags {
            psd: false,
            standard: false,
        }
    };
    let mut report = AnalysisReport {
        version: REPORT_VERSION,
        graph6: to_graph6(g),
        order: g.order(),
        rules: rules.to_vec(),
        z: None,
        z_upper: None,
        zplus: None,
        zplus_upper: None,
        pt_set: BTreeMap::new(),
        ept_set: BTreeMap::new(),
        gaps: BTreeMap::new(),
        fixed_pt: BTreeMap::new(),
        throttling: None,
        fast_join,
        threshold: is_threshold(g),
        witnesses: BTreeMap::new(),
        only_full_set_forces: BTreeMap::new(),
    };
    for &rule in rules {
        let a = Analysis::new(g, rule, cap)?;
        let key = rule.name().to_string();
        let ept = a.ept_set();
        match rule {
            Rule::Standard => {
                report.z = Some(a.forcing_number());
                report.z_upper = Some(a.upper_forcing_number());
                report.throttling = Some(a.throttling());
            }
            Rule::Psd => {
                report.zplus = Some(a.forcing_number());
                report.zplus_upper = Some(a.upper_forcing_number());
            }
        }
        report.pt_set.insert(key.clone(), a.pt_set().to_vec());
        report.gaps.insert(key.clone(), ept.gaps.clone());
        report.ept_set.insert(key.clone(), ept.to_vec());
        report.fixed_pt.insert(key.clone(), a.fixed_pt());
        report
            .only_full_set_forces
            .insert(key.clone(), a.only_full_set_forces());
        report.witnesses.insert(
            key,
            a.witnesses()
                .into_iter()
                .map(|(t, s)| (t.to_string(), s.to_vec()))
                .collect(),
        );
    }
    Ok(report)
}

/// Deterministic and random family parameters shared by `analyze` and
/// `generate`.
#[derive(Clone, Debug, Default)]
pub struct FamilyArgs {
    pub family: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub order: Option<usize>,
}

impl FamilyArgs {
    fn size(&self) -> Result<usize, CliError> {
        self.n
            .or(self.order)
            .ok_or_else(|| CliError::Usage(format!("family {} needs --n or --order", self.family)))
    }

    /// A deterministic family, or `None` for the random ones.
    pub fn spec(&self) -> Result<Option<FamilySpec>, CliError> {
        let spec = match self.family.as_str() {
            "path" => FamilySpec::Path(self.size()?),
            "cycle" => FamilySpec::Cycle(self.size()?),
            "complete" => FamilySpec::Complete(self.size()?),
            "complete_bipartite" | "complete-bipartite" => {
                let m = self.m.ok_or_else(|| {
                    CliError::Usage("complete_bipartite needs --n and --m".into())
                })?;
                FamilySpec::CompleteBipartite(self.size()?, m)
            }
            "star" => FamilySpec::Star(self.size()?),
            "wheel" => FamilySpec::Wheel(self.size()?),
            "empty" => FamilySpec::Empty(self.size()?),
            "sgap" => FamilySpec::Sgap(
                self.k
                    .ok_or_else(|| CliError::Usage("sgap needs --k".into()))?,
            ),
            "threshold" | "cograph" | "fastjoin-psd" | "fastjoin-standard" => return Ok(None),
            other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
        };
        Ok(Some(spec))
    }

    /// `count` graphs of the family; deterministic families yield one graph.
    pub fn graphs(&self, count: usize, seed: u64) -> Result<Vec<Graph>, CliError> {
        if let Some(spec) = self.spec()? {
            return Ok(vec![generators::generate(spec)?]);
        }
        let size = self.size()?;
        if size == 0 {
            return Err(CliError::Usage(
                "random families need a positive order".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| -> Result<Graph, CliError> {
                Ok(match self.family.as_str() {
                    "threshold" => generators::random_threshold_tree(size, &mut rng).to_graph()?,
                    "cograph" => generators::random_cograph_tree(size, &mut rng).to_graph()?,
                    "fastjoin-psd" => generators::random_psd_fast_join(size, &mut rng)?,
                    _ => generators::random_standard_fast_join(size, &mut rng)?,
                })
            })
            .collect()
    }
}

pub fn cmd_analyze_json(g: &Graph, rules: &[Rule], cap: Cap) -> Result<String, CliError> {
    let report = cmd_analyze(g, rules, cap)?;
    Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
}

pub fn cmd_generate(args: &FamilyArgs, count: usize, seed: u64) -> Result<Vec<String>, CliError> {
    Ok(args.graphs(count, seed)?.iter().map(to_graph6).collect())
}

/// A graph6 stream line worth processing: blank lines and `>>` headers are
/// skipped.
fn data_lines(input: impl BufRead) -> impl Iterator<Item = io::Result<(usize, String)>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(l) => {
                let t = l.trim();
                (!t.is_empty() && !t.starts_with(">>")).then(|| Ok((i + 1, t.to_string())))
            }
        })
}

fn error_record(line: usize, input: &str, err: &CliError) -> String {
    json!({ "line": line, "input": input, "error": err.to_string() }).to_string()
}

/// Runs `work` over the stream in chunks on a pool of `jobs` threads, writing
/// each chunk's output lines in input order.
fn process_stream<F>(
    input: impl BufRead,
    out: &mut impl Write,
    jobs: usize,
    work: F,
) -> Result<(), CliError>
where
    F: Fn(usize, &str) -> Vec<String> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
    let mut lines = data_lines(input);
    loop {
        let chunk: Vec<(usize, String)> = lines.by_ref().take(CHUNK).collect::<io::Result<_>>()?;
        if chunk.is_empty() {
            return Ok(());
        }
        let results: Vec<Vec<String>> =
            pool.install(|| chunk.par_iter().map(|(i, l)| work(*i, l)).collect());
        for line in results.into_iter().flatten() {
            writeln!(out, "{line}")?;
        }
        out.flush()?;
    }
}

/// JSON-lines analysis of a graph6 stream. Returns the number of failed
/// lines.
pub fn cmd_batch(
    input: impl BufRead,
    out: &mut impl Write,
    rules: &[Rule],
    cap: Cap,
    jobs: usize,
) -> Result<usize, CliError> {
    let failures = std::sync::atomic::AtomicUsize::new(0);
    process_stream(input, out, jobs, |i, line| {
        let result = from_graph6(line)
            .map_err(CliError::from)
            .and_then(|g| cmd_analyze(&g, rules, cap));
        vec![match result {
            Ok(report) => serde_json::to_string(&report).expect("report serializes"),
            Err(e) => {
                failures.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                error_record(i, line, &e)
            }
        }]
    })?;
    Ok(failures.into_inner())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureSummary {
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: usize,
    pub errors: usize,
}

/// Cross-checks every connected graph of the stream against the fast-join
/// forms. Counterexample and note lines stream out in input order; the
/// summary is returned for the caller to print.
pub fn cmd_conjecture(
    input: impl BufRead,
    out: &mut impl Write,
    which: RuleChoice,
    cap: Cap,
    jobs: usize,
) -> Result<ConjectureSummary, CliError> {
    use std::sync::atomic::{AtomicUsize, Ordering::Relaxed};
    let (checked, skipped, counter, errors) = (
        AtomicUsize::new(0),
        AtomicUsize::new(0),
        AtomicUsize::new(0),
        AtomicUsize::new(0),
    );
    let rules = which.rules();
    process_stream(input, out, jobs, |i, line| {
        let g = match from_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                errors.fetch_add(1, Relaxed);
                return vec![error_record(i, line, &e.into())];
            }
        };
        if !g.is_connected() {
            skipped.fetch_add(1, Relaxed);
            return vec![
                json!({ "line": i, "graph6": line, "note": "disconnected, skipped" }).to_string(),
            ];
        }
        let v = match conjecture_check_rules(&g, cap, &rules) {
            Ok(v) => v,
            Err(e) => {
                errors.fetch_add(1, Relaxed);
                return vec![error_record(i, line, &e.into())];
            }
        };
        checked.fetch_add(1, Relaxed);
        let mut found = Vec::new();
        if v.psd_counterexample {
            found.push(
                json!({ "counterexample": line, "conjecture": "psd", "upper_pt": v.upper_pt_psd }),
            );
        }
        if v.standard_counterexample {
            found.push(
                json!({ "counterexample": line, "conjecture": "standard", "upper_pt": v.upper_pt }),
            );
        }
        counter.fetch_add(found.len(), Relaxed);
        found.into_iter().map(|j| j.to_string()).collect()
    })?;
    Ok(ConjectureSummary {
        checked: checked.into_inner(),
        skipped: skipped.into_inner(),
        counterexamples: counter.into_inner(),
        errors: errors.into_inner(),
    })
}
