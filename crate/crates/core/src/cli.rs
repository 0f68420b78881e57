//! The `chromsym` command line.
//!
//! `positivity` exits 0 when the graph is e-positive, 1 when it is not, and 3
//! when the graph is too large to expand and no criterion fired. Every
//! subcommand exits 2 on an error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cache::ExpansionCache;
use crate::csf::{chromatic_symmetric_function_bounded, DEFAULT_MAX_EDGES};
use crate::error::{Error, Result};
use crate::graph::{
    make_complete, make_path, make_spider, make_star, make_windmill, parse_edge_list, parse_graph6, to_edge_list,
    to_graph6, Graph, SpiderSpec,
};
use crate::positivity::{fired_criteria, full_report_bounded, has_connected_partition};
use crate::regression::published_examples;
use crate::scan::{scan, Conjecture, ResumeToken, ScanConfig, ScanStatus};
use crate::spider::{all_witnesses, spider_e_negativity_decision, spider_matching_class, SpiderWitness};
use crate::symfunc::Basis;
use crate::treegen::{free_trees_bounded, TreeFilter, DEFAULT_MAX_TREE_VERTICES};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NOT_POSITIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// Spiders up to this size get their witnesses checked by search.
const VERIFY_MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "chromsym", version, about = "Exact chromatic symmetric functions and positivity certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand X_G in a chosen basis.
    Csf {
        #[command(flatten)]
        graph: GraphInput,
        /// Target basis: p, m, e or s
        #[arg(long, default_value = "e")]
        basis: Basis,
        /// Refuse graphs with more edges than this
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Decide e- and Schur-positivity with witnesses.
    Positivity {
        #[command(flatten)]
        graph: GraphInput,
        /// Expand exactly only up to this many edges; larger graphs rely on the criteria
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Run the spider rules on a leg partition.
    Spider {
        /// Leg lengths, e.g. 8,2,2,1.
        legs: SpiderSpec,
        #[command(flatten)]
        out: Output,
    },
    /// Scan all trees for one of the conjectures.
    Scan {
        /// degree4-e or halfdegree-schur.
        conjecture: Conjecture,
        /// Largest vertex count to scan
        #[arg(long)]
        n_max: usize,
        /// Smallest vertex count to scan
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        /// Worker threads; defaults to CHROMSYM_WORKERS or the core count.
        #[arg(long)]
        workers: Option<usize>,
        /// Allow n up to this value (defaults: 13 for degree4-e, 12 for halfdegree-schur).
        #[arg(long)]
        budget: Option<usize>,
        /// Stop after this many trees and print a resume token.
        #[arg(long)]
        max_trees: Option<u64>,
        /// Continue from a token `n:index`.
        #[arg(long)]
        resume: Option<ResumeToken>,
        /// Keep looking after the first Schur-positive tree for each n.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Rerun every published worked example.
    VerifyPaper {
        #[command(flatten)]
        out: Output,
    },
    /// List the free trees on n vertices.
    Trees {
        /// Vertex count
        n: usize,
        /// Only trees with a vertex of degree at least this.
        #[arg(long, conflicts_with = "has_degree")]
        min_degree: Option<usize>,
        /// Only trees with a vertex of exactly this degree.
        #[arg(long)]
        has_degree: Option<usize>,
        #[arg(long, value_parser = ["code", "graph6", "edges"], default_value = "code")]
        format: String,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_TREE_VERTICES)]
        max_n: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Spider with these leg lengths.
    #[arg(long)]
    spider: Option<SpiderSpec>,
    /// Star on n vertices.
    #[arg(long)]
    star: Option<usize>,
    /// Path on n vertices.
    #[arg(long)]
    path: Option<usize>,
    /// Windmill: d copies of K_n sharing a vertex.
    #[arg(long, num_args = 2, value_names = ["D", "N"])]
    windmill: Option<Vec<usize>>,
    /// Complete graph on n vertices.
    #[arg(long)]
    complete: Option<usize>,
    /// Edge-list file: vertex count, then one `u v` per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Graph in graph6 format
    #[arg(long)]
    graph6: Option<String>,
}

impl GraphInput {
    pub fn build(&self) -> Result<(String, Graph)> {
        if let Some(s) = &self.spider {
            return Ok((s.to_string(), make_spider(s)?));
        }
        if let Some(n) = self.star {
            return Ok((format!("S_{n}"), make_star(n)?));
        }
        if let Some(n) = self.path {
            return Ok((format!("P_{n}"), make_path(n)?));
        }
        if let Some(w) = &self.windmill {
            return Ok((format!("W^{}_{}", w[0], w[1]), make_windmill(w[0], w[1])?));
        }
        if let Some(n) = self.complete {
            return Ok((format!("K_{n}"), make_complete(n)?));
        }
        if let Some(path) = &self.edges {
            let g = parse_edge_list(&fs::read_to_string(path)?)?;
            return Ok((to_graph6(&g), g));
        }
        if let Some(s) = &self.graph6 {
            let g = parse_graph6(s)?;
            return Ok((to_graph6(&g), g));
        }
        Err(Error::Parse("no graph given".into()))
    }
}

#[derive(Args, Debug)]
pub struct Output {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, text: &str, value: &Value) -> Result<()> {
        let body = if self.json { format!("{value}\n") } else { ensure_newline(text) };
        match &self.out {
            Some(path) => fs::write(path, body)?,
            None => std::io::stdout().write_all(body.as_bytes())?,
        }
        Ok(())
    }

    fn emit_lines(&self, text: &str, values: &[Value]) -> Result<()> {
        let lines: Vec<String> = values.iter().map(Value::to_string).collect();
        let body = if self.json { ensure_newline(&lines.join("\n")) } else { ensure_newline(text) };
        match &self.out {
            Some(path) => fs::write(path, body)?,
            None => std::io::stdout().write_all(body.as_bytes())?,
        }
        Ok(())
    }
}

fn ensure_newline(s: &str) -> String {
    if s.is_empty() || s.ends_with('\n') {
        s.to_string()
    } else {
        format!("{s}\n")
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { 0 };
        }
    };
    match dispatch(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: &Command) -> Result<i32> {
    match cmd {
        Command::Csf { graph, basis, max_edges, out } => cmd_csf(graph, *basis, *max_edges, out),
        Command::Positivity { graph, max_edges, out } => cmd_positivity(graph, *max_edges, out),
        Command::Spider { legs, out } => cmd_spider(legs, out),
        Command::Scan { conjecture, n_max, n_min, workers, budget, max_trees, resume, exhaustive, out } => {
            let mut cfg = ScanConfig::new(*conjecture, *n_min, *n_max);
            cfg.workers = *workers;
            cfg.budget_n = *budget;
            cfg.max_trees = *max_trees;
            cfg.resume = *resume;
            cfg.exhaustive = *exhaustive;
            cfg.cache = ExpansionCache::from_env()?.map(Arc::new);
            cmd_scan(&cfg, out)
        }
        Command::VerifyPaper { out } => cmd_verify_paper(out),
        Command::Trees { n, min_degree, has_degree, format, count, max_n, out } => {
            let filter = match (min_degree, has_degree) {
                (Some(k), _) => TreeFilter::MaxDegreeAtLeast(*k),
                (_, Some(k)) => TreeFilter::HasDegree(*k),
                _ => TreeFilter::All,
            };
            cmd_trees(*n, filter, format, *count, *max_n, out)
        }
    }
}

fn cmd_csf(input: &GraphInput, basis: Basis, max_edges: usize, out: &Output) -> Result<i32> {
    let (name, g) = input.build()?;
    let f = chromatic_symmetric_function_bounded(&g, max_edges)?.to_basis(basis)?;
    let text = format!("X_{name} = {f}\n{}", f.to_lines());
    out.emit(&text, &json!({ "graph": name, "expansion": f.to_json() }))?;
    Ok(0)
}

fn cmd_positivity(input: &GraphInput, max_edges: usize, out: &Output) -> Result<i32> {
    let (name, g) = input.build()?;
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > max_edges {
        // too big to expand: only the certificates can speak
        let fired = fired_criteria(&g);
        let mut text = format!("graph {name}: {} edges exceeds the bound of {max_edges}\n", g.edge_count());
        for c in &fired {
            text.push_str(&format!("criterion {c}\n"));
        }
        let verdict = if fired.is_empty() { "undecided" } else { "not e-positive" };
        text.push_str(&format!("verdict: {verdict}\n"));
        let value = json!({
            "graph": name,
            "verdict": verdict,
            "criteria_fired": fired.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        });
        out.emit(&text, &value)?;
        return Ok(if fired.is_empty() { EXIT_UNDECIDED } else { EXIT_NOT_POSITIVE });
    }
    let report = full_report_bounded(&g, max_edges)?.with_id(name);
    out.emit(&report.to_string(), &report.to_json())?;
    Ok(if report.e_positive { EXIT_POSITIVE } else { EXIT_NOT_POSITIVE })
}

fn witness_json(w: &SpiderWitness, verified: Option<bool>) -> Value {
    json!({
        "rule": w.rule.name(),
        "missing_type": w.missing_type.to_plain_string(),
        "parameters": w.parameters,
        "verified_missing": verified,
    })
}

fn cmd_spider(spec: &SpiderSpec, out: &Output) -> Result<i32> {
    let n = spec.n();
    let g = make_spider(spec)?;
    let verify = |w: &SpiderWitness| -> Result<Option<bool>> {
        if n <= VERIFY_MAX_N {
            Ok(Some(!has_connected_partition(&g, &w.missing_type)?))
        } else {
            Ok(None)
        }
    };
    let decision = spider_e_negativity_decision(spec);
    let mut text = format!("{spec}: n = {n}, d = {}, matching class {:?}\n", spec.degree(), spider_matching_class(spec));
    let status = |v: Option<bool>| match v {
        Some(true) => "verified missing",
        Some(false) => "NOT missing (bug)",
        None => "not checked (n > 12)",
    };
    let decision_json = match &decision {
        Some(w) => {
            let v = verify(w)?;
            text.push_str(&format!("decision: {w}; {}\n", status(v)));
            witness_json(w, v)
        }
        None => {
            text.push_str("decision: no rule fires\n");
            Value::Null
        }
    };
    let mut all = Vec::new();
    for w in all_witnesses(spec) {
        let v = verify(&w)?;
        text.push_str(&format!("  {} -> {} ({})\n", w.rule, w.missing_type, status(v)));
        all.push(witness_json(&w, v));
    }
    out.emit(&text, &json!({ "spider": spec.to_string(), "n": n, "decision": decision_json, "witnesses": all }))?;
    Ok(if decision.is_some() { EXIT_NOT_POSITIVE } else { 0 })
}

fn cmd_scan(cfg: &ScanConfig, out: &Output) -> Result<i32> {
    let result = scan(cfg)?;
    let mut lines: Vec<Value> = result.per_n.iter().map(|s| s.to_json()).collect();
    lines.push(result.to_json());
    out.emit_lines(&result.to_string(), &lines)?;
    Ok(match result.status {
        ScanStatus::Verified => 0,
        ScanStatus::Counterexample => 1,
        ScanStatus::Partial(_) => EXIT_UNDECIDED,
    })
}

fn cmd_verify_paper(out: &Output) -> Result<i32> {
    let checks = published_examples();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
    text.push_str(&format!("{} of {} checks passed\n", checks.len() - failed, checks.len()));
    let values: Vec<Value> =
        checks.iter().map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail })).collect();
    out.emit_lines(&text, &values)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_trees(n: usize, filter: TreeFilter, format: &str, count: bool, max_n: usize, out: &Output) -> Result<i32> {
    let trees = free_trees_bounded(n, filter, max_n)?;
    if count {
        let c = trees.count();
        out.emit(&c.to_string(), &json!({ "n": n, "count": c }))?;
        return Ok(0);
    }
    let mut text = String::new();
    let mut values = Vec::new();
    for t in trees {
        let g = t.to_graph();
        let rendered = match format {
            "graph6" => to_graph6(&g),
            "edges" => format!("{}\n", to_edge_list(&g).trim_end()),
            _ => t.to_string(),
        };
        text.push_str(&rendered);
        text.push('\n');
        values.push(json!({ "code": t.to_string(), "graph6": to_graph6(&g), "edges": g.edges() }));
    }
    out.emit_lines(&text, &values)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> i32 {
        run(std::iter::once("chromsym").chain(args.iter().copied()))
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("o.json");
        let o = out.to_str().unwrap();
        assert_eq!(code(&["positivity", "--spider", "2,1,1", "--out", o]), EXIT_POSITIVE);
        assert_eq!(code(&["positivity", "--star", "5", "--json", "--out", o]), EXIT_NOT_POSITIVE);
        let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["e_positive"], false);
        assert_eq!(code(&["positivity", "--path", "30", "--out", o]), EXIT_UNDECIDED);
        assert_eq!(code(&["positivity", "--windmill", "3", "9", "--out", o]), EXIT_NOT_POSITIVE);
        assert_eq!(code(&["positivity", "--graph6", "!!", "--out", o]), EXIT_ERROR);
        assert_eq!(code(&["positivity", "--path", "3", "--star", "4"]), EXIT_ERROR);
    }

    #[test]
    fn csf_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("o.txt");
        let o = out.to_str().unwrap();
        assert_eq!(code(&["csf", "--spider", "4,1,1", "--basis", "e", "--out", o]), 0);
        let text = fs::read_to_string(&out).unwrap();
        assert!(text.contains("e_{(3,2^2)}: -3"));
        assert_eq!(code(&["csf", "--path", "2", "--basis", "e", "--json", "--out", o]), 0);
        let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(v["expansion"]["coeffs"]["2"], "2");
        assert_eq!(code(&["csf", "--spider", "2,2,1,1", "--out", o]), 0);
        assert!(fs::read_to_string(&out).unwrap().contains("e_{(4,3)}: -7"));
    }

    #[test]
    fn other_subcommands() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("o.txt");
        let o = out.to_str().unwrap();
        assert_eq!(code(&["spider", "8,2,2,1", "--out", o]), EXIT_NOT_POSITIVE);
        assert!(fs::read_to_string(&out).unwrap().contains("QUOTIENT_1"));
        assert_eq!(code(&["trees", "7", "--count", "--out", o]), 0);
        assert_eq!(fs::read_to_string(&out).unwrap().trim(), "11");
        assert_eq!(code(&["trees", "5", "--format", "graph6", "--out", o]), 0);
        assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 3);
        assert_eq!(code(&["scan", "degree4-e", "--n-max", "4", "--workers", "1", "--out", o]), 0);
        assert_eq!(code(&["scan", "degree4-e", "--n-max", "15", "--workers", "1", "--max-trees", "3", "--out", o]), EXIT_UNDECIDED);
    }
}
