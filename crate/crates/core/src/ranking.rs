//! Candidate retrieval, agreement reranking, and the TF-IDF query baseline.
//!
//! Every list is totally ordered: score descending, then timestamp
//! descending (newer first), then id ascending.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use crate::agreement::{build_graph, AgreementGraph, AgreementParams};
use crate::corpus::{Corpus, Tweet};
use crate::error::{Error, Result};
use crate::text::{build_stats, cosine, tokenize, vectorize, CorpusStats, TokenVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankingConfig {
    pub top_n: usize,
    pub top_k: usize,
    pub params: AgreementParams,
}

impl Default for RankingConfig {
    fn default() -> Self {
        Self {
            top_n: 200,
            top_k: 20,
            params: AgreementParams::default(),
        }
    }
}

impl RankingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.top_n == 0 || self.top_k == 0 {
            return Err(Error::InvalidConfig(
                "top-n and top-k must be positive".into(),
            ));
        }
        if self.top_k > self.top_n {
            return Err(Error::InvalidConfig(format!(
                "top-k {} exceeds top-n {}",
                self.top_k, self.top_n
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Agreement,
    Tfidf,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Agreement => "agreement",
            Method::Tfidf => "tfidf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub id: String,
    pub score: f64,
    /// 1-based.
    pub rank: usize,
    /// Kept for the tie-break that placed this entry.
    pub timestamp: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedList {
    method: Method,
    entries: Vec<RankedEntry>,
}

impl RankedList {
    /// Sorts `(id, score, timestamp)` triples into the canonical order,
    /// truncates to `top_k` and assigns ranks.
    pub fn from_scored(method: Method, mut scored: Vec<(String, f64, i64)>, top_k: usize) -> Self {
        scored.sort_by(|a, b| {
            b.1.total_cmp(&a.1)
                .then_with(|| b.2.cmp(&a.2))
                .then_with(|| a.0.cmp(&b.0))
        });
        scored.truncate(top_k);
        let entries = scored
            .into_iter()
            .enumerate()
            .map(|(i, (id, score, timestamp))| RankedEntry {
                id,
                score,
                rank: i + 1,
                timestamp,
            })
            .collect();
        Self { method, entries }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn entries(&self) -> &[RankedEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.id.as_str())
    }

    /// JSON array of `{id, rank, score, method}`, one object per line,
    /// scores with six decimals.
    pub fn to_json(&self) -> String {
        if self.entries.is_empty() {
            return "[]\n".to_owned();
        }
        let mut out = String::from("[\n");
        for (i, e) in self.entries.iter().enumerate() {
            let id = serde_json::to_string(&e.id).expect("string serializes");
            let _ = write!(
                out,
                "  {{\"id\":{id},\"rank\":{},\"score\":{:.6},\"method\":\"{}\"}}",
                e.rank, e.score, self.method
            );
            out.push_str(if i + 1 < self.entries.len() {
                ",\n"
            } else {
                "\n"
            });
        }
        out.push_str("]\n");
        out
    }
}

fn tokenize_all(tweets: &[Tweet]) -> Vec<Vec<String>> {
    tweets.iter().map(|t| tokenize(&t.text)).collect()
}

fn query_vector(query: &str, stats: &CorpusStats) -> Result<TokenVector> {
    let tokens = tokenize(query);
    if tokens.is_empty() {
        return Err(Error::EmptyQuery(query.to_owned()));
    }
    Ok(vectorize("<query>", &tokens, stats))
}

fn cosine_scores(tweets: &[Tweet], query: &str) -> Result<Vec<(String, f64, i64)>> {
    let docs = tokenize_all(tweets);
    let stats = build_stats(&docs)?;
    let q = query_vector(query, &stats)?;
    Ok(tweets
        .iter()
        .zip(&docs)
        .map(|(t, d)| {
            let v = vectorize(t.id.as_str(), d, &stats);
            (t.id.clone(), cosine(&v, &q), t.timestamp)
        })
        .collect())
}

/// Top-`top_n` tweets by TF-IDF cosine to `query` over full-corpus
/// statistics, newest first among equal scores.
pub fn retrieve_candidates(corpus: &Corpus, query: &str, top_n: usize) -> Result<Vec<Tweet>> {
    if tokenize(query).is_empty() {
        return Err(Error::EmptyQuery(query.to_owned()));
    }
    if corpus.is_empty() {
        return Ok(Vec::new());
    }
    let scored = cosine_scores(corpus.tweets(), query)?;
    let ranked = RankedList::from_scored(Method::Tfidf, scored, top_n);
    let by_id: HashMap<&str, &Tweet> = corpus.tweets().iter().map(|t| (t.id.as_str(), t)).collect();
    Ok(ranked.ids().map(|id| by_id[id].clone()).collect())
}

/// Agreement graph over `candidates` with statistics rebuilt over the
/// candidate set. Vertices are ordered by tweet id.
pub fn build_candidate_graph(
    candidates: &[Tweet],
    params: &AgreementParams,
) -> Result<AgreementGraph> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    // Fixing vertex order by id keeps the score sums independent of input order.
    let mut ordered: Vec<&Tweet> = candidates.iter().collect();
    ordered.sort_by(|a, b| a.id.cmp(&b.id));

    let docs: Vec<Vec<String>> = ordered.iter().map(|t| tokenize(&t.text)).collect();
    let stats = build_stats(&docs)?;
    let vectors: Vec<TokenVector> = ordered
        .iter()
        .zip(&docs)
        .map(|(t, d)| vectorize(t.id.as_str(), d, &stats))
        .collect();
    Ok(build_graph(&vectors, params))
}

/// Scores each candidate by its summed agreement with all others.
pub fn rank_by_agreement(candidates: &[Tweet], cfg: &RankingConfig) -> Result<RankedList> {
    let graph = build_candidate_graph(candidates, &cfg.params)?;
    let timestamps: HashMap<&str, i64> = candidates
        .iter()
        .map(|t| (t.id.as_str(), t.timestamp))
        .collect();
    let scored = graph
        .ids()
        .iter()
        .zip(graph.scores())
        .map(|(id, &s)| (id.clone(), s, timestamps[id.as_str()]))
        .collect();
    Ok(RankedList::from_scored(
        Method::Agreement,
        scored,
        cfg.top_k,
    ))
}

/// Baseline: TF-IDF cosine to the query over candidate-set statistics.
pub fn rank_by_tfidf(candidates: &[Tweet], query: &str, top_k: usize) -> Result<RankedList> {
    if candidates.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let scored = cosine_scores(candidates, query)?;
    Ok(RankedList::from_scored(Method::Tfidf, scored, top_k))
}
