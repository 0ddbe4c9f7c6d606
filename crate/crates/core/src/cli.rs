//! Command-line front end: `rank`, `eval`, `bench` and `gen`.
//!
//! Results go to the `out` writer, diagnostics to `err`. Exit codes: 0 on
//! success, 1 for usage errors, 2 for data errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::agreement::{with_workers, AgreementParams, DEFAULT_THETA};
use crate::corpus::{
    filter_retweets, load_corpus, load_judgments, sample_candidates, write_corpus, write_judgments,
    Corpus, JudgmentSet, SamplerConfig,
};
use crate::error::Error;
use crate::eval::{bench_timing, gen_synthetic, timing_csv, Metric, MetricCurve};
use crate::ranking::{
    build_candidate_graph, rank_by_agreement, rank_by_tfidf, retrieve_candidates, RankedList,
    RankingConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tweetrank",
    version,
    about = "Agreement-based reranking of short posts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the candidates retrieved for one query.
    Rank(RankArgs),
    /// Compare agreement ranking and the TF-IDF baseline against judgments.
    Eval(EvalArgs),
    /// Time agreement ranking for several candidate-set sizes.
    Bench(BenchArgs),
    /// Write a synthetic labeled corpus.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
struct PipelineArgs {
    /// Corpus in JSONL format.
    #[arg(long)]
    corpus: PathBuf,
    /// Candidates retrieved per query before reranking.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    top_n: u64,
    /// Jaro-Winkler threshold for soft token matches.
    #[arg(long, default_value_t = DEFAULT_THETA, value_parser = parse_theta)]
    theta: f64,
    /// Drop tweets flagged as retweets before retrieval.
    #[arg(long)]
    filter_retweets: bool,
    /// Sample the corpus with this seed before retrieval.
    #[arg(long)]
    sample_seed: Option<u64>,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    sample_size: u64,
    #[arg(long, default_value_t = 1500, value_parser = clap::value_parser!(u64).range(1..))]
    pool_cap: u64,
    /// Worker threads for the pairwise computation (default: one per core).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long)]
    query: String,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    top_k: u64,
    /// Rank by TF-IDF cosine to the query instead of agreement.
    #[arg(long)]
    baseline: bool,
    /// Also write the agreement graph as CSV.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Judgments TSV: id, relevance thirds, trust.
    #[arg(long)]
    judgments: PathBuf,
    /// File with one query per line.
    #[arg(long)]
    queries: PathBuf,
    /// Cutoffs, comma separated and increasing.
    #[arg(long, default_value = "1,5,10,15,20", value_parser = parse_positive_list)]
    k_list: PositiveList,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long)]
    query: String,
    /// Candidate-set sizes, comma separated.
    #[arg(long, value_parser = parse_positive_list)]
    sizes: PositiveList,
    #[arg(long, default_value_t = DEFAULT_THETA, value_parser = parse_theta)]
    theta: f64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    seed: u64,
    /// Paraphrase cluster sizes, comma separated.
    #[arg(long, value_parser = parse_positive_list)]
    clusters: PositiveList,
    /// Number of spam tweets.
    #[arg(long, default_value_t = 0)]
    spam: u64,
    /// Output directory for corpus.jsonl and judgments.tsv.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct PositiveList(Vec<usize>);

fn parse_positive_list(raw: &str) -> Result<PositiveList, String> {
    let values = raw
        .split(',')
        .map(|part| match part.trim().parse::<usize>() {
            Ok(0) => Err("values must be positive".to_owned()),
            Ok(v) => Ok(v),
            Err(_) => Err(format!("`{part}` is not a positive integer")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PositiveList(values))
}

fn parse_theta(raw: &str) -> Result<f64, String> {
    let theta: f64 = raw
        .parse()
        .map_err(|_| format!("`{raw}` is not a number"))?;
    AgreementParams::new(theta)
        .map(|p| p.theta())
        .map_err(|e| e.to_string())
}

/// Effective parameters of one invocation, serialized as a single JSON line.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: String,
    pub params: BTreeMap<String, Value>,
}

impl RunManifest {
    pub fn to_json_line(&self) -> String {
        let mut obj = serde_json::Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        for (k, v) in &self.params {
            obj.insert(k.clone(), v.clone());
        }
        Value::Object(obj).to_string()
    }
}

enum Failure {
    Usage(String),
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyQuery(_) | Error::InvalidConfig(_) => Failure::Usage(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

fn output_error(e: std::io::Error) -> Failure {
    Failure::Data(format!("writing output: {e}"))
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };

    let result = match cli.command {
        Command::Rank(a) => cmd_rank(a, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Gen(a) => cmd_gen(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DATA
        }
    }
}

fn workers(w: Option<u64>) -> Option<usize> {
    w.map(|n| n as usize)
}

impl PipelineArgs {
    fn params(&self) -> Result<AgreementParams, Failure> {
        Ok(AgreementParams::new(self.theta)?)
    }

    /// Applies the optional retweet filter and sampling.
    fn prepare(&self, mut corpus: Corpus) -> Result<Corpus, Failure> {
        if self.filter_retweets {
            corpus = filter_retweets(&corpus);
        }
        if let Some(seed) = self.sample_seed {
            let cfg = SamplerConfig {
                seed,
                sample_size: self.sample_size as usize,
                pool_cap: self.pool_cap as usize,
            };
            cfg.validate()?;
            corpus = Corpus::new(sample_candidates(&corpus, &cfg))?;
        }
        Ok(corpus)
    }

    fn load(&self) -> Result<Corpus, Failure> {
        let corpus = load_corpus(&self.corpus)?;
        self.prepare(corpus)
    }
}

fn cmd_rank(a: RankArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = RankingConfig {
        top_n: a.pipeline.top_n as usize,
        top_k: a.top_k as usize,
        params: a.pipeline.params()?,
    };
    cfg.validate()?;
    let corpus = a.pipeline.load()?;
    let candidates = retrieve_candidates(&corpus, &a.query, cfg.top_n)?;

    let (ranked, graph) = with_workers(workers(a.pipeline.workers), || {
        let ranked = if a.baseline {
            rank_by_tfidf(&candidates, &a.query, cfg.top_k)
        } else {
            rank_by_agreement(&candidates, &cfg)
        }?;
        let graph = match &a.graph_out {
            Some(_) => Some(build_candidate_graph(&candidates, &cfg.params)?),
            None => None,
        };
        Ok::<_, Error>((ranked, graph))
    })??;

    if let (Some(path), Some(graph)) = (&a.graph_out, graph) {
        fs::write(path, graph.to_csv()).map_err(|e| Error::Io {
            path: path.clone(),
            source: e,
        })?;
    }
    out.write_all(ranked.to_json().as_bytes())
        .map_err(output_error)
}

fn read_queries(path: &Path) -> Result<Vec<String>, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_owned(),
        source: e,
    })?;
    let queries: Vec<String> = raw
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_owned)
        .collect();
    if queries.is_empty() {
        return Err(Failure::Data(format!(
            "query file {} contains no queries",
            path.display()
        )));
    }
    Ok(queries)
}

fn evaluate_query(
    corpus: &Corpus,
    judgments: &JudgmentSet,
    query: &str,
    cfg: &RankingConfig,
    ks: &[usize],
) -> Result<Vec<MetricCurve>, Error> {
    let candidates = retrieve_candidates(corpus, query, cfg.top_n)?;
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let lists: [RankedList; 2] = [
        rank_by_agreement(&candidates, cfg)?,
        rank_by_tfidf(&candidates, query, cfg.top_k)?,
    ];
    let mut curves = Vec::new();
    for list in &lists {
        for metric in Metric::ALL {
            curves.push(MetricCurve::compute(metric, list, judgments, ks)?);
        }
    }
    Ok(curves)
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let ks = a.k_list.0;
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Usage(
            "--k-list must be strictly increasing".into(),
        ));
    }
    let top_k = *ks.last().expect("parser yields at least one value");
    let cfg = RankingConfig {
        top_n: a.pipeline.top_n as usize,
        top_k: top_k.min(a.pipeline.top_n as usize),
        params: a.pipeline.params()?,
    };
    let queries = read_queries(&a.queries)?;
    let full = load_corpus(&a.pipeline.corpus)?;
    let judgments = load_judgments(&a.judgments)?;
    if let Some(id) = judgments.unknown_ids(&full).first() {
        return Err(Failure::Data(format!(
            "judged id `{id}` does not exist in the corpus"
        )));
    }
    let corpus = a.pipeline.prepare(full)?;

    let per_query = with_workers(workers(a.pipeline.workers), || {
        queries
            .iter()
            .map(|q| evaluate_query(&corpus, &judgments, q, &cfg, &ks))
            .collect::<Result<Vec<_>, Error>>()
    })??;

    let mut csv = String::from("method,metric,k,value\n");
    for (query, curves) in queries.iter().zip(&per_query) {
        csv.push_str(&format!("# query: {query}\n"));
        for c in curves {
            csv.push_str(&c.csv_rows());
        }
    }
    csv.push_str(&format!("# mean over {} queries\n", queries.len()));
    for (idx, template) in per_query[0].iter().enumerate() {
        let points = template
            .points
            .iter()
            .enumerate()
            .map(|(p, &(k, _))| {
                let sum: f64 = per_query.iter().map(|curves| curves[idx].points[p].1).sum();
                (k, sum / per_query.len() as f64)
            })
            .collect();
        let mean = MetricCurve {
            metric: template.metric,
            method: template.method,
            points,
        };
        csv.push_str(&mean.csv_rows());
    }
    out.write_all(csv.as_bytes()).map_err(output_error)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let cfg = RankingConfig {
        params: AgreementParams::new(a.theta)?,
        ..RankingConfig::default()
    };
    let corpus = load_corpus(&a.corpus)?;
    let records = with_workers(workers(a.workers), || {
        bench_timing(&corpus, &a.query, &a.sizes.0, &cfg)
    })??;
    out.write_all(timing_csv(&records).as_bytes())
        .map_err(output_error)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let synthetic = gen_synthetic(a.seed, &a.clusters.0, a.spam as usize)?;
    fs::create_dir_all(&a.out).map_err(|e| Error::Io {
        path: a.out.clone(),
        source: e,
    })?;
    let corpus_path = a.out.join("corpus.jsonl");
    let judgments_path = a.out.join("judgments.tsv");
    write_corpus(&synthetic.corpus, &corpus_path)?;
    write_judgments(&synthetic.judgments, &judgments_path)?;

    let manifest = RunManifest {
        command: "gen".into(),
        params: BTreeMap::from([
            ("seed".into(), json!(a.seed)),
            ("clusters".into(), json!(a.clusters.0)),
            ("spam".into(), json!(a.spam)),
            ("out".into(), json!(a.out.display().to_string())),
            ("corpus".into(), json!(corpus_path.display().to_string())),
            (
                "judgments".into(),
                json!(judgments_path.display().to_string()),
            ),
            ("tweets".into(), json!(synthetic.corpus.len())),
            ("queries".into(), json!(synthetic.queries)),
        ]),
    };
    writeln!(out, "{}", manifest.to_json_line()).map_err(output_error)
}
