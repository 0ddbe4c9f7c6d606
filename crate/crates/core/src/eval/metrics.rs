use std::fmt;
use std::fmt::Write as _;

use crate::corpus::JudgmentSet;
use crate::error::{Error, Result};
use crate::ranking::{Method, RankedEntry, RankedList};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Metric {
    MeanRelevance,
    Ndcg,
    MeanTrust,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::MeanRelevance, Metric::Ndcg, Metric::MeanTrust];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::MeanRelevance => "mean_relevance",
            Metric::Ndcg => "ndcg",
            Metric::MeanTrust => "mean_trust",
        }
    }

    pub fn at_k(self, ranked: &RankedList, judgments: &JudgmentSet, k: usize) -> Result<f64> {
        match self {
            Metric::MeanRelevance => mean_relevance_at_k(ranked, judgments, k),
            Metric::Ndcg => ndcg_at_k(ranked, judgments, k),
            Metric::MeanTrust => mean_trust_at_k(ranked, judgments, k),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn head(ranked: &RankedList, k: usize) -> Result<&[RankedEntry]> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let entries = ranked.entries();
    Ok(&entries[..k.min(entries.len())])
}

fn relevance_of(judgments: &JudgmentSet, id: &str) -> Result<f64> {
    judgments
        .relevance(id)
        .ok_or_else(|| Error::Unjudged(id.to_owned()))
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len();
    if n == 0 {
        0.0
    } else {
        values.sum::<f64>() / n as f64
    }
}

/// Mean graded relevance (0, 1/3, 2/3, 1) of the top `k` entries.
pub fn mean_relevance_at_k(ranked: &RankedList, judgments: &JudgmentSet, k: usize) -> Result<f64> {
    let grades = head(ranked, k)?
        .iter()
        .map(|e| relevance_of(judgments, &e.id))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(grades.into_iter()))
}

/// Mean trust label (-1, 0, 1) of the top `k` entries.
pub fn mean_trust_at_k(ranked: &RankedList, judgments: &JudgmentSet, k: usize) -> Result<f64> {
    let trust = head(ranked, k)?
        .iter()
        .map(|e| {
            judgments
                .trust(&e.id)
                .map(f64::from)
                .ok_or_else(|| Error::Unjudged(e.id.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(trust.into_iter()))
}

fn dcg(grades: &[f64]) -> f64 {
    grades
        .iter()
        .enumerate()
        .map(|(i, g)| g / ((i + 2) as f64).log2())
        .sum()
}

/// NDCG with linear gain and `log2(rank + 1)` discount.
///
/// The ideal ordering is taken over the judged entries of `ranked` itself;
/// the result is 0 when that ideal gain is 0.
pub fn ndcg_at_k(ranked: &RankedList, judgments: &JudgmentSet, k: usize) -> Result<f64> {
    let top = head(ranked, k)?;
    let gains = top
        .iter()
        .map(|e| relevance_of(judgments, &e.id))
        .collect::<Result<Vec<_>>>()?;

    let mut ideal: Vec<f64> = ranked
        .entries()
        .iter()
        .filter_map(|e| judgments.relevance(&e.id))
        .collect();
    ideal.sort_by(|a, b| b.total_cmp(a));
    ideal.truncate(top.len());

    let idcg = dcg(&ideal);
    if idcg == 0.0 {
        return Ok(0.0);
    }
    Ok(dcg(&gains) / idcg)
}

/// One metric evaluated at several cutoffs.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricCurve {
    pub metric: Metric,
    pub method: Method,
    pub points: Vec<(usize, f64)>,
}

impl MetricCurve {
    /// `ks` must be strictly increasing.
    pub fn compute(
        metric: Metric,
        ranked: &RankedList,
        judgments: &JudgmentSet,
        ks: &[usize],
    ) -> Result<Self> {
        if ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidConfig(
                "k values must be strictly increasing".into(),
            ));
        }
        let points = ks
            .iter()
            .map(|&k| metric.at_k(ranked, judgments, k).map(|v| (k, v)))
            .collect::<Result<_>>()?;
        Ok(Self {
            metric,
            method: ranked.method(),
            points,
        })
    }

    /// `method,metric,k,value` rows without a header.
    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.points {
            let _ = writeln!(out, "{},{},{k},{v:.6}", self.method, self.metric);
        }
        out
    }
}
