//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls into the crate's similarity, vectorization or graph
//! code; it works from raw token lists so it can check those paths.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Textbook Jaro with boolean match arrays.
pub fn jaro(s: &str, t: &str) -> f64 {
    let s: Vec<char> = s.chars().collect();
    let t: Vec<char> = t.chars().collect();
    if s.is_empty() && t.is_empty() {
        return 1.0;
    }
    if s.is_empty() || t.is_empty() {
        return 0.0;
    }
    let w = (s.len().max(t.len()) / 2).saturating_sub(1);
    let mut ms = vec![false; s.len()];
    let mut mt = vec![false; t.len()];
    let mut m = 0usize;
    for i in 0..s.len() {
        let lo = i.saturating_sub(w);
        let hi = (i + w + 1).min(t.len());
        for j in lo..hi {
            if !mt[j] && s[i] == t[j] {
                ms[i] = true;
                mt[j] = true;
                m += 1;
                break;
            }
        }
    }
    if m == 0 {
        return 0.0;
    }
    let mut k = 0;
    let mut half = 0usize;
    for i in 0..s.len() {
        if ms[i] {
            while !mt[k] {
                k += 1;
            }
            if s[i] != t[k] {
                half += 1;
            }
            k += 1;
        }
    }
    let m = m as f64;
    (m / s.len() as f64 + m / t.len() as f64 + (m - half as f64 / 2.0) / m) / 3.0
}

pub fn jaro_winkler(s: &str, t: &str) -> f64 {
    let j = jaro(s, t);
    let mut l = 0;
    for (a, b) in s.chars().zip(t.chars()) {
        if a == b && l < 4 {
            l += 1;
        } else {
            break;
        }
    }
    j + l as f64 * 0.1 * (1.0 - j)
}

pub type OracleVector = BTreeMap<String, f64>;

/// TF·ln(N/df) vectors, positive weights only, L2-normalized.
pub fn oracle_vectors(docs: &[Vec<String>]) -> Vec<OracleVector> {
    let n = docs.len() as f64;
    let mut df: BTreeMap<&str, usize> = BTreeMap::new();
    for d in docs {
        let unique: BTreeSet<&str> = d.iter().map(String::as_str).collect();
        for t in unique {
            *df.entry(t).or_default() += 1;
        }
    }
    docs.iter()
        .map(|d| {
            let mut raw: OracleVector = BTreeMap::new();
            for t in d {
                *raw.entry(t.clone()).or_default() += 1.0;
            }
            let mut v: OracleVector = raw
                .into_iter()
                .map(|(t, tf)| {
                    let idf = (n / df[t.as_str()] as f64).ln();
                    (t, tf * idf)
                })
                .filter(|(_, w)| *w > 0.0)
                .collect();
            let norm = v.values().map(|w| w * w).sum::<f64>().sqrt();
            if norm > 0.0 {
                v.values_mut().for_each(|w| *w /= norm);
            }
            v
        })
        .collect()
}

/// Directional Soft-TFIDF by double loop: Σ over w with max sim > θ of
/// V(w,vi)·V(u*,vj)·D(w,vj), u* the lexicographically first argmax.
pub fn oracle_soft(vi: &OracleVector, vj: &OracleVector, theta: f64) -> f64 {
    let mut total = 0.0;
    for (w, wv) in vi {
        let mut best = f64::NEG_INFINITY;
        let mut best_u: Option<&String> = None;
        for u in vj.keys() {
            let s = jaro_winkler(w, u);
            if s > best {
                best = s;
                best_u = Some(u);
            }
        }
        if let Some(u) = best_u {
            if best > theta {
                total += wv * vj[u] * best;
            }
        }
    }
    total
}

pub fn oracle_weight(vi: &OracleVector, vj: &OracleVector, theta: f64) -> f64 {
    (oracle_soft(vi, vj, theta) + oracle_soft(vj, vi, theta)) / 2.0
}

/// Full weight matrix (zero diagonal) and row sums.
pub fn oracle_graph(docs: &[Vec<String>], theta: f64) -> (Vec<Vec<f64>>, Vec<f64>) {
    let v = oracle_vectors(docs);
    let n = v.len();
    let mut w = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                w[i][j] = oracle_weight(&v[i], &v[j], theta);
            }
        }
    }
    let sums = w.iter().map(|row| row.iter().sum()).collect();
    (w, sums)
}

/// Stand-alone SplitMix64 + partial Fisher-Yates, returning selected indices.
pub fn oracle_sample(seed: u64, n: usize, k: usize) -> Vec<usize> {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    };
    let mut idx: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for i in 0..k.min(n) {
        let j = i + (next() % (n - i) as u64) as usize;
        idx.swap(i, j);
        out.push(idx[i]);
    }
    out
}

/// Small deterministic generator for random test inputs (xorshift64*).
pub struct InputRng(u64);

impl InputRng {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    /// Token over a small alphabet so near-matches are common.
    pub fn token(&mut self) -> String {
        let len = 1 + self.below(7);
        (0..len)
            .map(|_| (b'a' + self.below(6) as u8) as char)
            .collect()
    }

    pub fn doc(&mut self, max_tokens: usize) -> Vec<String> {
        let len = 1 + self.below(max_tokens);
        (0..len).map(|_| self.token()).collect()
    }
}
