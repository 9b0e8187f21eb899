//! Command-line front end and the genus-8 batch driver.
//!
//! Every command writes to caller-supplied streams and returns its exit code,
//! so the binary is a thin wrapper and tests can drive commands directly.
//!
//! | code | meaning                                                |
//! |------|--------------------------------------------------------|
//! | 0    | success (Found/Trivial, all checks pass)               |
//! | 1    | negative answer (Unsat, failed check, not PD)          |
//! | 2    | bad input (parse error, unknown name, bad arguments)   |
//! | 3    | IO failure while writing batch output                  |

use std::collections::{BTreeMap, HashMap};
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::catalog::{self, CatalogEntry, EntryReport};
use crate::edgelist;
use crate::homology::{spanning_forest, SpanningForest};
use crate::lattice::classify;
use crate::multigraph::{EdgeId, Multigraph};
use crate::search::{
    constraint_system, edge_name, solve_zemm, solve_zemm_parallel, GramMatrix, Status, ZemmResult,
};
use crate::surgery::{dedup_by_invariant, genus8_corpus, CorpusMember};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(
    name = "zemm",
    version,
    about = "Exact search for integral edge-normalised quadratic forms on graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one graph given as an edge-list file or a catalog name.
    Analyze {
        /// Edge-list file.
        path: Option<PathBuf>,
        #[arg(long, conflicts_with = "path")]
        catalog: Option<String>,
        /// Spanning tree as comma-separated edge ids.
        #[arg(long, value_delimiter = ',')]
        tree: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Search the first branch point's values concurrently.
        #[arg(long)]
        experimental_parallel: bool,
    },
    /// Check the stored cycle matrices and Gram matrices of the catalog.
    VerifyPaper {
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Solve every genus-8 extension of the genus-7 catalog graphs.
    Genus8 {
        #[arg(long, default_value = "genus8-out")]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        resume: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        base: Option<String>,
        /// Keep only the first graph of each invariant class.
        #[arg(long)]
        dedup: bool,
    },
    /// List or export the built-in graphs
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Classify the lattice of a Gram matrix stored as JSON rows.
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// One line per graph: genus, size and whether it has stored fixtures.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Edge list (text) or the full entry with fixtures (json).
    Export {
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses arguments and runs; clap's own errors map to exit code 2.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Analyze {
            path,
            catalog,
            tree,
            format,
            experimental_parallel,
        } => {
            let source = match (path, catalog) {
                (Some(p), None) => Input::Path(p),
                (None, Some(c)) => Input::Catalog(c),
                _ => {
                    let _ = writeln!(err, "analyze needs a file path or --catalog <name>");
                    return 2;
                }
            };
            let tree = tree.map(|t| t.into_iter().map(EdgeId).collect());
            cmd_analyze(&source, tree, format, experimental_parallel, out, err)
        }
        Command::VerifyPaper { only, format } => {
            let selected: Vec<CatalogEntry> = match &only {
                Some(name) => match catalog::get(name) {
                    Some(e) => vec![e],
                    None => {
                        let _ = writeln!(err, "unknown catalog graph `{name}`");
                        return 2;
                    }
                },
                None => catalog::entries()
                    .into_iter()
                    .filter(|e| e.gram_fixture.is_some())
                    .collect(),
            };
            cmd_verify_paper(&selected, format, out)
        }
        Command::Genus8 {
            out: dir,
            jobs,
            resume,
            limit,
            base,
            dedup,
        } => {
            let opts = Genus8Options {
                out: dir,
                jobs,
                resume,
                limit,
                base,
                dedup,
            };
            cmd_genus8(&opts, out, err)
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List { format } => cmd_catalog_list(format, out),
            CatalogCommand::Export { name, format } => cmd_catalog_export(&name, format, out, err),
        },
        Command::Classify { path, format } => cmd_classify(&path, format, out, err),
    }
}

pub enum Input {
    Path(PathBuf),
    Catalog(String),
}

fn load(source: &Input) -> Result<(Multigraph, Option<Vec<EdgeId>>), String> {
    match source {
        Input::Catalog(name) => catalog::get(name)
            .map(|e| (e.graph, e.tree))
            .ok_or_else(|| format!("unknown catalog graph `{name}`")),
        Input::Path(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let g = edgelist::parse(&text).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok((g, None))
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Exit 0 on Found/Trivial, 1 on Unsat, 2 on input error. A `--tree`
/// overrides the catalog tree.
pub fn cmd_analyze(
    source: &Input,
    tree: Option<Vec<EdgeId>>,
    format: Format,
    parallel: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (g, stored_tree) = match load(source) {
        Ok(x) => x,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let tree = tree.or(stored_tree);
    let forest = match spanning_forest(&g, tree.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: invalid tree: {e}");
            return 2;
        }
    };
    log::info!("analyze {}: genus {}", g.name(), g.genus());
    let r = if parallel {
        solve_zemm_parallel(&g, Some(&forest))
    } else {
        solve_zemm(&g, Some(&forest))
    };
    let written = match format {
        Format::Json => print_json(out, &r),
        Format::Text => write_result_text(out, &g, &forest, &r),
    };
    if written.is_err() {
        return 3;
    }
    match r.status {
        Status::Found | Status::Trivial => 0,
        Status::Unsat => 1,
    }
}

fn write_result_text(
    out: &mut dyn Write,
    g: &Multigraph,
    forest: &SpanningForest,
    r: &ZemmResult,
) -> io::Result<()> {
    writeln!(
        out,
        "{}: genus {}, {} vertices, {} edges",
        g.name(),
        g.genus(),
        g.vertex_count(),
        g.edge_count()
    )?;
    let (_, system) = constraint_system(g, forest);
    for (k, eq) in system.equations.iter().enumerate() {
        writeln!(out, "({}) {eq}    [{}]", k + 1, edge_name(g, eq.source_edge))?;
    }
    match (&r.status, &r.lattice) {
        (Status::Unsat, _) => writeln!(out, "status: Unsat ({})", r.reason.as_deref().unwrap_or(""))?,
        (s, Some(l)) => writeln!(out, "status: {s:?}, lattice {l}")?,
        (s, None) => writeln!(out, "status: {s:?}")?,
    }
    if let Some(m) = &r.gram {
        write!(out, "{m}")?;
    }
    writeln!(
        out,
        "fixed by propagation: {}, search nodes: {}",
        r.fixed_by_propagation, r.nodes_explored
    )
}

/// Exit 0 iff every selected entry passes.
pub fn cmd_verify_paper(entries: &[CatalogEntry], format: Format, out: &mut dyn Write) -> i32 {
    let reports: Vec<EntryReport> = entries.iter().map(catalog::verify_entry).collect();
    let passed = reports.iter().filter(|r| r.ok()).count();
    let result = match format {
        Format::Json => print_json(
            out,
            &serde_json::json!({
                "reports": reports,
                "passed": passed,
                "total": reports.len(),
            }),
        ),
        Format::Text => (|| {
            for r in &reports {
                let failures = r.failures();
                if failures.is_empty() {
                    let class = r
                        .fixture_lattice
                        .or(r.lattice)
                        .map_or(String::new(), |l| l.to_string());
                    writeln!(out, "ok    {:<6} genus {} {}", r.name, r.genus, class)?;
                } else {
                    writeln!(out, "FAIL  {:<6} {}", r.name, failures.join("; "))?;
                }
            }
            writeln!(out, "{passed}/{} pass", reports.len())
        })(),
    };
    if result.is_err() {
        return 3;
    }
    if passed == reports.len() {
        0
    } else {
        1
    }
}

pub fn cmd_catalog_list(format: Format, out: &mut dyn Write) -> i32 {
    let entries = catalog::entries();
    let res = match format {
        Format::Json => {
            let rows: Vec<_> = entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name,
                        "genus": e.expected_genus,
                        "vertices": e.graph.vertex_count(),
                        "edges": e.graph.edge_count(),
                        "fixtures": e.gram_fixture.is_some(),
                        "corpus_base": e.corpus_base,
                        "notes": e.notes,
                    })
                })
                .collect();
            print_json(out, &rows)
        }
        Format::Text => entries.iter().try_for_each(|e| {
            writeln!(
                out,
                "{:<6} genus {}  {:>2} vertices  {:>2} edges{}",
                e.name,
                e.expected_genus,
                e.graph.vertex_count(),
                e.graph.edge_count(),
                if e.gram_fixture.is_some() {
                    "  fixtures"
                } else {
                    ""
                }
            )
        }),
    };
    if res.is_err() {
        3
    } else {
        0
    }
}

pub fn cmd_catalog_export(name: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some(e) = catalog::get(name) else {
        let _ = writeln!(err, "unknown catalog graph `{name}`");
        return 2;
    };
    let res = match format {
        Format::Json => print_json(out, &e),
        Format::Text => {
            let tree = e.tree.as_ref().map(|t| {
                let ids: Vec<String> = t.iter().map(|id| id.to_string()).collect();
                format!("# tree {}\n", ids.join(","))
            });
            write!(out, "{}{}", tree.unwrap_or_default(), edgelist::write(&e.graph))
        }
    };
    if res.is_err() {
        3
    } else {
        0
    }
}

/// Accepts a bare list of rows or any object with a `gram` field holding
/// one (such as `analyze` output).
pub fn read_gram(text: &str) -> Result<GramMatrix, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let rows = match value {
        serde_json::Value::Object(mut o) => o.remove("gram").ok_or("object has no `gram` field")?,
        v => v,
    };
    serde_json::from_value(rows).map_err(|e| e.to_string())
}

/// Exit 0 when classified, 1 when not positive definite, 2 on bad input.
pub fn cmd_classify(path: &Path, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let m = match fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|t| read_gram(&t))
    {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return 2;
        }
    };
    match classify(&m) {
        Ok(c) => {
            let res = match format {
                Format::Json => print_json(out, &c),
                Format::Text => writeln!(
                    out,
                    "{c} (rank {}, det {}, {} roots)",
                    c.rank, c.determinant, c.root_count
                ),
            };
            if res.is_err() {
                3
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

/// One line of `results.jsonl`. Wall time lives in `timings.jsonl` so that
/// result files are byte-identical between runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub graph: String,
    pub checksum: String,
    pub version: String,
    pub result: ZemmResult,
    #[serde(skip)]
    pub wall_time_ms: u64,
}

/// SHA-256 of the canonical edge-list text.
pub fn checksum(g: &Multigraph) -> String {
    hex::encode(Sha256::digest(edgelist::write(g).as_bytes()))
}

pub fn run_record(m: &CorpusMember) -> RunRecord {
    let start = Instant::now();
    let result = solve_zemm(&m.graph, None);
    RunRecord {
        graph: m.name.clone(),
        checksum: checksum(&m.graph),
        version: VERSION.to_string(),
        result,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Clone, Debug)]
pub struct Genus8Options {
    pub out: PathBuf,
    pub jobs: usize,
    pub resume: bool,
    pub limit: Option<usize>,
    pub base: Option<String>,
    pub dedup: bool,
}

impl Genus8Options {
    pub fn new(out: impl Into<PathBuf>) -> Self {
        Genus8Options {
            out: out.into(),
            jobs: 1,
            resume: false,
            limit: None,
            base: None,
            dedup: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "Found")]
    pub found: usize,
    #[serde(rename = "Unsat")]
    pub unsat: usize,
    #[serde(rename = "Trivial")]
    pub trivial: usize,
    pub lattices: BTreeMap<String, usize>,
    pub reused: usize,
}

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("unknown base graph `{0}`")]
    UnknownBase(String),
    #[error("--jobs must be at least 1")]
    NoJobs,
}

fn io_at(path: &Path) -> impl FnOnce(io::Error) -> BatchError + '_ {
    move |source| BatchError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// The corpus members selected by `--base`, `--dedup` and `--limit`.
pub fn select_corpus(opts: &Genus8Options) -> Result<Vec<CorpusMember>, BatchError> {
    if let Some(b) = &opts.base {
        if !catalog::corpus_bases().iter().any(|e| &e.name == b) {
            return Err(BatchError::UnknownBase(b.clone()));
        }
    }
    let filtered = genus8_corpus().filter(|m| opts.base.as_ref().is_none_or(|b| &m.base == b));
    let mut members: Vec<CorpusMember> = if opts.dedup {
        dedup_by_invariant(filtered)
    } else {
        filtered.collect()
    };
    if let Some(k) = opts.limit {
        members.truncate(k);
    }
    Ok(members)
}

/// Valid records from earlier runs, keyed by graph name. Unparsable lines
/// (such as a line cut off by an interruption) are skipped.
fn previous_records(paths: &[PathBuf]) -> HashMap<String, RunRecord> {
    let mut out = HashMap::new();
    for p in paths {
        let Ok(f) = File::open(p) else { continue };
        for line in BufReader::new(f).lines() {
            let Ok(line) = line else { break };
            match serde_json::from_str::<RunRecord>(&line) {
                Ok(r) if r.version == VERSION => {
                    out.insert(r.graph.clone(), r);
                }
                _ => log::warn!("{}: skipping unusable line", p.display()),
            }
        }
    }
    out
}

/// Writes the corpus files and manifest, then solves every member and
/// writes `results.jsonl` in corpus order. Progress goes to
/// `results.jsonl.partial`, renamed on completion, so an interrupted run can
/// be resumed.
pub fn run_genus8(opts: &Genus8Options) -> Result<Summary, BatchError> {
    if opts.jobs == 0 {
        return Err(BatchError::NoJobs);
    }
    let members = select_corpus(opts)?;
    let dir = &opts.out;
    let corpus_dir = dir.join("corpus");
    fs::create_dir_all(&corpus_dir).map_err(io_at(&corpus_dir))?;

    let checksums: Vec<String> = members.iter().map(|m| checksum(&m.graph)).collect();
    let manifest_path = dir.join("manifest.txt");
    let mut manifest = String::new();
    for (m, sum) in members.iter().zip(&checksums) {
        let file = corpus_dir.join(format!("{}.g", m.name));
        fs::write(&file, edgelist::write(&m.graph)).map_err(io_at(&file))?;
        manifest.push_str(&format!("{} {sum}\n", m.name));
    }
    fs::write(&manifest_path, manifest).map_err(io_at(&manifest_path))?;

    let results_path = dir.join("results.jsonl");
    let partial_path = dir.join("results.jsonl.partial");
    let timings_path = dir.join("timings.jsonl");
    let previous = if opts.resume {
        previous_records(&[results_path.clone(), partial_path.clone()])
    } else {
        HashMap::new()
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let mut partial = File::create(&partial_path).map_err(io_at(&partial_path))?;
    let mut timings = if opts.resume {
        fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&timings_path)
    } else {
        File::create(&timings_path)
    }
    .map_err(io_at(&timings_path))?;

    let mut summary = Summary::default();
    let chunk = 8 * opts.jobs;
    for (block, sums) in members.chunks(chunk).zip(checksums.chunks(chunk)) {
        let reuse: Vec<Option<RunRecord>> = block
            .iter()
            .zip(sums)
            .map(|(m, sum)| previous.get(&m.name).filter(|r| &r.checksum == sum).cloned())
            .collect();
        let fresh: Vec<Option<RunRecord>> = pool.install(|| {
            block
                .par_iter()
                .zip(&reuse)
                .map(|(m, old)| if old.is_some() { None } else { Some(run_record(m)) })
                .collect()
        });
        for (old, new) in reuse.into_iter().zip(fresh) {
            let rec = match (old, new) {
                (Some(r), _) => {
                    summary.reused += 1;
                    r
                }
                (None, Some(r)) => {
                    let t = serde_json::json!({"graph": r.graph, "wall_time_ms": r.wall_time_ms});
                    writeln!(timings, "{t}").map_err(io_at(&timings_path))?;
                    r
                }
                (None, None) => unreachable!(),
            };
            let line = serde_json::to_string(&rec).expect("record serializes");
            writeln!(partial, "{line}").map_err(io_at(&partial_path))?;
            summary.total += 1;
            match rec.result.status {
                Status::Found => summary.found += 1,
                Status::Unsat => summary.unsat += 1,
                Status::Trivial => summary.trivial += 1,
            }
            if let Some(l) = rec.result.lattice {
                *summary.lattices.entry(l.to_string()).or_default() += 1;
            }
        }
        partial.flush().map_err(io_at(&partial_path))?;
        log::info!("genus8: {}/{} done", summary.total, members.len());
    }
    partial.sync_all().map_err(io_at(&partial_path))?;
    drop(partial);
    fs::rename(&partial_path, &results_path).map_err(io_at(&results_path))?;
    let summary_path = dir.join("summary.json");
    fs::write(
        &summary_path,
        serde_json::to_string(&summary).expect("summary serializes") + "\n",
    )
    .map_err(io_at(&summary_path))?;
    Ok(summary)
}

/// Exit 0 iff nothing is Unsat and every selected graph is Found (2394 on a
/// full run); 1 otherwise; 2 on bad arguments; 3 on IO failure.
pub fn cmd_genus8(opts: &Genus8Options, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_genus8(opts) {
        Ok(s) => {
            #[derive(Serialize)]
            struct Line<'a> {
                summary: &'a Summary,
            }
            let line = serde_json::to_string(&Line { summary: &s }).expect("summary serializes");
            if writeln!(out, "{line}").is_err() {
                return 3;
            }
            if s.unsat == 0 && s.found == s.total {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                BatchError::Io { .. } => 3,
                BatchError::UnknownBase(_) | BatchError::NoJobs => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn analyze_catalog_g() {
        let (code, out, _) = run_args(&["zemm", "analyze", "--catalog", "G"]);
        assert_eq!(code, 0);
        let r: ZemmResult = serde_json::from_str(&out).unwrap();
        assert_eq!(r.status, Status::Found);
        assert_eq!(r.lattice.unwrap().to_string(), "E6");
    }

    #[test]
    fn analyze_loop_gives_1x1() {
        let (code, out, _) = run_args(&["zemm", "analyze", "--catalog", "loop"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["gram"], serde_json::json!([[2]]));
        assert_eq!(v["status"], "Found");
    }

    #[test]
    fn bad_input_exits_2() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.g");
        fs::write(&p, "graph g\nedge 0 0 x\n").unwrap();
        let (code, _, err) = run_args(&["zemm", "analyze", p.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(err.contains("line 2"), "{err}");
        assert_eq!(run_args(&["zemm", "analyze", "--catalog", "nope"]).0, 2);
        assert_eq!(run_args(&["zemm", "frobnicate"]).0, 2);
        assert_eq!(
            run_args(&["zemm", "analyze", "--catalog", "G", "--tree", "0,1"]).0,
            2
        );
    }

    #[test]
    fn classify_reads_rows_and_results() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("m.json");
        fs::write(&p, "[[2,-1],[-1,2]]").unwrap();
        let (code, out, _) = run_args(&["zemm", "classify", p.to_str().unwrap(), "--format", "text"]);
        assert_eq!((code, out.trim()), (0, "A2 (rank 2, det 3, 6 roots)"));
        fs::write(&p, r#"{"gram": [[2,2],[2,2]]}"#).unwrap();
        assert_eq!(run_args(&["zemm", "classify", p.to_str().unwrap()]).0, 1);
        fs::write(&p, "[[2,1],[0,2]]").unwrap();
        assert_eq!(run_args(&["zemm", "classify", p.to_str().unwrap()]).0, 2);
    }

    #[test]
    fn catalog_export_round_trips() {
        let (code, out, _) = run_args(&["zemm", "catalog", "export", "F12"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# tree 7,8,"));
        let g = edgelist::parse(&out).unwrap();
        assert_eq!(g, catalog::get("F12").unwrap().graph);
        let (code, out, _) = run_args(&["zemm", "catalog", "list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 21);
    }

    #[test]
    fn unknown_base_is_bad_input() {
        let dir = tempfile::tempdir().unwrap();
        let mut opts = Genus8Options::new(dir.path());
        opts.base = Some("K4".into());
        assert!(matches!(run_genus8(&opts), Err(BatchError::UnknownBase(_))));
    }
}
