//! Exhaustive conjecture scans over free trees.
//!
//! Trees are streamed in generation order and evaluated in parallel batches.
//! Results are folded back in generation order, so everything except the
//! timing is the same for any worker count.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cache::{tree_expansion, ExpansionCache};
use crate::error::{Error, Result};
use crate::positivity::{bipartite_degree_criterion, e_positivity, full_report, PositivityReport};
use crate::symfunc::Basis;
use crate::treegen::{free_trees_bounded, TreeCode, TreeFilter};

/// Environment variable setting the worker count.
pub const WORKERS_ENV: &str = "CHROMSYM_WORKERS";

const BATCH: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// Every tree with a vertex of degree at least 4 is not e-positive.
    Degree4E,
    /// For each `n` some tree with a vertex of degree `⌊n/2⌋` is
    /// Schur-positive.
    HalfDegreeSchur,
}

impl Conjecture {
    pub fn id(self) -> &'static str {
        match self {
            Conjecture::Degree4E => "degree4-e",
            Conjecture::HalfDegreeSchur => "halfdegree-schur",
        }
    }

    /// Largest `n` scanned without an explicit budget.
    pub fn default_budget(self) -> usize {
        match self {
            Conjecture::Degree4E => 13,
            Conjecture::HalfDegreeSchur => 12,
        }
    }

    fn filter(self, n: usize) -> TreeFilter {
        match self {
            Conjecture::Degree4E => TreeFilter::MaxDegreeAtLeast(4),
            Conjecture::HalfDegreeSchur => TreeFilter::HasDegree(n / 2),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree4-e" => Ok(Conjecture::Degree4E),
            "halfdegree-schur" => Ok(Conjecture::HalfDegreeSchur),
            _ => Err(Error::Parse(format!("unknown conjecture `{s}` (expected degree4-e or halfdegree-schur)"))),
        }
    }
}

/// Position `index` (0-based) in the filtered tree stream for `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResumeToken {
    pub n: usize,
    pub index: usize,
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.n, self.index)
    }
}

impl FromStr for ResumeToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("resume token `{s}` is not of the form n:index"));
        let (n, i) = s.split_once(':').ok_or_else(bad)?;
        Ok(ResumeToken { n: n.trim().parse().map_err(|_| bad())?, index: i.trim().parse().map_err(|_| bad())? })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScanStatus {
    Verified,
    Counterexample,
    Partial(ResumeToken),
}

impl ScanStatus {
    pub fn name(&self) -> &'static str {
        match self {
            ScanStatus::Verified => "VERIFIED",
            ScanStatus::Counterexample => "COUNTEREXAMPLE",
            ScanStatus::Partial(_) => "PARTIAL",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub conjecture: Conjecture,
    pub n_min: usize,
    pub n_max: usize,
    /// Largest `n` this run may scan; defaults to the conjecture's budget.
    pub budget_n: Option<usize>,
    /// Stop after this many trees (across all `n`) with a resume token.
    pub max_trees: Option<u64>,
    pub resume: Option<ResumeToken>,
    /// Keep scanning an `n` after its first Schur-positive witness.
    pub exhaustive: bool,
    /// `None` reads `CHROMSYM_WORKERS`, falling back to the available cores.
    pub workers: Option<usize>,
    pub cache: Option<Arc<ExpansionCache>>,
}

impl ScanConfig {
    pub fn new(conjecture: Conjecture, n_min: usize, n_max: usize) -> Self {
        ScanConfig {
            conjecture,
            n_min,
            n_max,
            budget_n: None,
            max_trees: None,
            resume: None,
            exhaustive: false,
            workers: None,
            cache: None,
        }
    }
}

/// Outcome for one vertex count.
#[derive(Clone, Debug, PartialEq)]
pub struct NSummary {
    pub n: usize,
    /// Trees passing the filter, examined in this run.
    pub examined: u64,
    /// Schur-positive witnesses (halfdegree-schur only), in generation order.
    pub witnesses: Vec<TreeCode>,
    /// Whether every filtered tree for this `n` was examined.
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub tree: TreeCode,
    pub report: PositivityReport,
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub conjecture: Conjecture,
    pub n_min: usize,
    pub n_max: usize,
    pub trees_examined: u64,
    pub counterexamples: Vec<Counterexample>,
    /// For halfdegree-schur: the values of `n` with no Schur-positive tree.
    pub unwitnessed: Vec<usize>,
    pub per_n: Vec<NSummary>,
    pub status: ScanStatus,
    pub wall_time: Duration,
    pub workers: usize,
}

impl ScanResult {
    /// Everything except timing and worker count, for determinism checks.
    pub fn content(&self) -> Value {
        let mut v = self.to_json();
        let obj = v.as_object_mut().expect("object");
        obj.remove("wall_time_s");
        obj.remove("workers");
        v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conjecture": self.conjecture.id(),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "trees_examined": self.trees_examined,
            "status": self.status.name(),
            "resume": match &self.status { ScanStatus::Partial(t) => Some(t.to_string()), _ => None },
            "counterexamples": self.counterexamples.iter().map(|c| json!({
                "tree": c.tree.to_string(),
                "report": c.report.to_json(),
            })).collect::<Vec<_>>(),
            "unwitnessed": self.unwitnessed,
            "per_n": self.per_n.iter().map(NSummary::to_json).collect::<Vec<_>>(),
            "wall_time_s": self.wall_time.as_secs_f64(),
            "workers": self.workers,
        })
    }
}

impl NSummary {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "examined": self.examined,
            "complete": self.complete,
            "witnesses": self.witnesses.iter().map(TreeCode::to_string).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ScanResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} for {} <= n <= {}", self.conjecture, self.n_min, self.n_max)?;
        for s in &self.per_n {
            write!(f, "  n = {:>2}: {} trees examined", s.n, s.examined)?;
            if let Some(w) = s.witnesses.first() {
                write!(f, ", Schur-positive witness {w}")?;
            }
            if !s.complete {
                write!(f, " (incomplete)")?;
            }
            writeln!(f)?;
        }
        for c in &self.counterexamples {
            writeln!(f, "  counterexample: {}", c.tree)?;
        }
        write!(f, "status {}", self.status.name())?;
        if let ScanStatus::Partial(t) = &self.status {
            write!(f, " (resume with {t})")?;
        }
        write!(f, "; {} trees in {:.2?} on {} workers", self.trees_examined, self.wall_time, self.workers)
    }
}

/// The worker count from `CHROMSYM_WORKERS`, else the available cores.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()))
}

enum Outcome {
    /// Consistent with the conjecture; for the Schur scan, not a witness.
    Pass,
    /// A degree4-e counterexample or a halfdegree-schur witness.
    Hit,
}

fn evaluate(conjecture: Conjecture, tree: &TreeCode, cache: Option<&ExpansionCache>) -> Result<Outcome> {
    let g = tree.to_graph();
    let hit = match conjecture {
        Conjecture::Degree4E => match &cache {
            Some(c) => tree_expansion(tree, Basis::E, Some(c))?.is_nonnegative(),
            None => e_positivity(&g, g.edge_count())?.is_positive(),
        },
        Conjecture::HalfDegreeSchur => {
            bipartite_degree_criterion(&g).is_none() && tree_expansion(tree, Basis::S, cache)?.is_nonnegative()
        }
    };
    Ok(if hit { Outcome::Hit } else { Outcome::Pass })
}

pub fn scan(config: &ScanConfig) -> Result<ScanResult> {
    let start = Instant::now();
    let conj = config.conjecture;
    let budget = config.budget_n.unwrap_or(conj.default_budget());
    if config.n_min == 0 || config.n_min > config.n_max {
        return Err(Error::SizeBound(format!("bad n range {}..={}", config.n_min, config.n_max)));
    }
    let workers = config.workers.unwrap_or_else(default_workers).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Budget(format!("cannot start workers: {e}")))?;
    let cache = config.cache.as_deref();

    let mut per_n = Vec::new();
    let mut counterexamples = Vec::new();
    let mut examined = 0u64;
    let mut stopped: Option<ResumeToken> = None;
    let first_n = config.resume.map_or(config.n_min, |t| t.n.max(config.n_min));

    'outer: for n in first_n..=config.n_max {
        if n > budget {
            stopped = Some(ResumeToken { n, index: 0 });
            break;
        }
        let skip = match config.resume {
            Some(t) if t.n == n => t.index,
            _ => 0,
        };
        let mut stream = free_trees_bounded(n, conj.filter(n), budget.max(n))?.skip(skip);
        let mut summary = NSummary { n, examined: 0, witnesses: Vec::new(), complete: true };
        let mut position = skip;
        loop {
            let room = config.max_trees.map_or(usize::MAX, |m| m.saturating_sub(examined) as usize);
            let batch: Vec<TreeCode> = stream.by_ref().take(BATCH.min(room)).collect();
            if batch.is_empty() {
                if room == 0 && stream.next().is_some() {
                    summary.complete = false;
                    per_n.push(summary);
                    stopped = Some(ResumeToken { n, index: position });
                    break 'outer;
                }
                break;
            }
            let outcomes: Vec<Result<Outcome>> =
                pool.install(|| batch.par_iter().map(|t| evaluate(conj, t, cache)).collect());
            let mut done_with_n = false;
            for (tree, outcome) in batch.into_iter().zip(outcomes) {
                examined += 1;
                summary.examined += 1;
                position += 1;
                if let Outcome::Hit = outcome? {
                    match conj {
                        Conjecture::Degree4E => {
                            let report = full_report(&tree.to_graph())?.with_id(tree.to_string());
                            counterexamples.push(Counterexample { tree, report });
                        }
                        Conjecture::HalfDegreeSchur => {
                            summary.witnesses.push(tree);
                            if !config.exhaustive {
                                done_with_n = true;
                                break;
                            }
                        }
                    }
                }
            }
            if done_with_n {
                break;
            }
        }
        per_n.push(summary);
    }

    let unwitnessed: Vec<usize> = if conj == Conjecture::HalfDegreeSchur {
        per_n.iter().filter(|s| s.complete && s.witnesses.is_empty()).map(|s| s.n).collect()
    } else {
        Vec::new()
    };
    let status = if !counterexamples.is_empty() || !unwitnessed.is_empty() {
        ScanStatus::Counterexample
    } else if let Some(t) = stopped {
        ScanStatus::Partial(t)
    } else {
        ScanStatus::Verified
    };
    Ok(ScanResult {
        conjecture: conj,
        n_min: config.n_min,
        n_max: config.n_max,
        trees_examined: examined,
        counterexamples,
        unwitnessed,
        per_n,
        status,
        wall_time: start.elapsed(),
        workers,
    })
}
