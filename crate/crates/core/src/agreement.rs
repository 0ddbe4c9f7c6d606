//! Soft-TFIDF agreement between candidates and the agreement graph built from it.
//!
//! For vectors `vi`, `vj` and threshold θ, each token `w` of `vi` is paired
//! with its best Jaro-Winkler match `u*` in `vj` (ties go to the
//! lexicographically smallest `u`). Pairs whose similarity `D` exceeds θ
//! contribute `V(w, vi) · V(u*, vj) · D`. The directional score is averaged
//! over both directions to give an undirected edge weight.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::strsim::jaro_winkler_chars;
use crate::text::TokenVector;

pub const DEFAULT_THETA: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgreementParams {
    theta: f64,
}

impl AgreementParams {
    /// `theta` must lie strictly between 0 and 1.
    pub fn new(theta: f64) -> Result<Self> {
        if theta > 0.0 && theta < 1.0 {
            Ok(Self { theta })
        } else {
            Err(Error::InvalidConfig(format!(
                "theta must be in (0, 1), got {theta}"
            )))
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

impl Default for AgreementParams {
    fn default() -> Self {
        Self {
            theta: DEFAULT_THETA,
        }
    }
}

/// A token vector with characters pre-split for repeated string comparison.
struct Prepared {
    chars: Vec<Vec<char>>,
    weights: Vec<f64>,
}

impl Prepared {
    fn new(v: &TokenVector) -> Self {
        let (chars, weights) = v
            .terms()
            .iter()
            .map(|(t, w)| (t.chars().collect::<Vec<_>>(), *w))
            .unzip();
        Self { chars, weights }
    }
}

#[derive(Clone, Copy)]
struct Best {
    sim: f64,
    at: usize,
}

/// Both directional scores `(a → b, b → a)` from one similarity matrix.
fn directional_pair(a: &Prepared, b: &Prepared, theta: f64, cols: &mut Vec<Best>) -> (f64, f64) {
    if a.weights.is_empty() || b.weights.is_empty() {
        return (0.0, 0.0);
    }
    cols.clear();
    cols.resize(b.chars.len(), Best { sim: -1.0, at: 0 });

    let mut forward = 0.0;
    for (i, wa) in a.chars.iter().enumerate() {
        let mut row = Best { sim: -1.0, at: 0 };
        for (j, wb) in b.chars.iter().enumerate() {
            let sim = jaro_winkler_chars(wa, wb);
            // Strict comparisons keep the first (smallest-token) argmax.
            if sim > row.sim {
                row = Best { sim, at: j };
            }
            if sim > cols[j].sim {
                cols[j] = Best { sim, at: i };
            }
        }
        if row.sim > theta {
            forward += a.weights[i] * b.weights[row.at] * row.sim;
        }
    }

    let mut backward = 0.0;
    for (j, best) in cols.iter().enumerate() {
        if best.sim > theta {
            backward += b.weights[j] * a.weights[best.at] * best.sim;
        }
    }
    (forward, backward)
}

/// Directional Soft-TFIDF of `vi` against `vj`. Zero when either vector is zero.
pub fn soft_tfidf(vi: &TokenVector, vj: &TokenVector, theta: f64) -> f64 {
    let (a, b) = (Prepared::new(vi), Prepared::new(vj));
    directional_pair(&a, &b, theta, &mut Vec::new()).0
}

/// Mean of the two directional Soft-TFIDF scores.
pub fn agreement_weight(vi: &TokenVector, vj: &TokenVector, theta: f64) -> f64 {
    let (a, b) = (Prepared::new(vi), Prepared::new(vj));
    let (f, r) = directional_pair(&a, &b, theta, &mut Vec::new());
    (f + r) / 2.0
}

/// Undirected weighted graph over candidates, one vertex per input vector.
///
/// Only positive-weight edges are stored, as `(i, j, w)` with `i < j`,
/// sorted by `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AgreementGraph {
    ids: Vec<String>,
    edges: Vec<(usize, usize, f64)>,
    scores: Vec<f64>,
}

impl AgreementGraph {
    fn from_edges(ids: Vec<String>, edges: Vec<(usize, usize, f64)>) -> Self {
        let mut scores = vec![0.0; ids.len()];
        // Sorted edge order adds each vertex's neighbours in ascending index order.
        for &(i, j, w) in &edges {
            scores[i] += w;
            scores[j] += w;
        }
        Self { ids, edges, scores }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Weight between two vertices, 0 for absent edges and for `i == j`.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let key = (i.min(j), i.max(j));
        self.edges
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .map_or(0.0, |k| self.edges[k].2)
    }

    /// Sum of the weights incident to vertex `i`.
    pub fn vertex_score(&self, i: usize) -> Result<f64> {
        self.scores.get(i).copied().ok_or(Error::VertexOutOfRange {
            index: i,
            len: self.len(),
        })
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    /// `id_i,id_j,weight` rows for stored edges, header first.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id_i,id_j,weight\n");
        for &(i, j, w) in &self.edges {
            let _ = writeln!(out, "{},{},{w:.6}", self.ids[i], self.ids[j]);
        }
        out
    }
}

/// All-pairs agreement graph. Rows are computed on the current rayon pool;
/// the result does not depend on the worker count.
pub fn build_graph(vectors: &[TokenVector], params: &AgreementParams) -> AgreementGraph {
    let theta = params.theta();
    let prepared: Vec<Prepared> = vectors.par_iter().map(Prepared::new).collect();
    let n = prepared.len();

    let edges: Vec<(usize, usize, f64)> = (0..n)
        .into_par_iter()
        .map_init(Vec::new, |cols, i| {
            let mut row = Vec::new();
            for j in i + 1..n {
                let (f, r) = directional_pair(&prepared[i], &prepared[j], theta, cols);
                let w = (f + r) / 2.0;
                if w > 0.0 {
                    row.push((i, j, w));
                }
            }
            row
        })
        .flatten()
        .collect();

    let ids = vectors.iter().map(|v| v.source_id().to_owned()).collect();
    AgreementGraph::from_edges(ids, edges)
}

/// Runs `f` on a dedicated pool of `workers` threads, or on the global
/// pool (one thread per core) when `workers` is `None`.
pub fn with_workers<R, F>(workers: Option<usize>, f: F) -> Result<R>
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match workers {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidConfig("worker count must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::InvalidConfig(format!("cannot start {n} workers: {e}"))),
    }
}
