//! Tokenization and TF·ln(IDF) vectors.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Lowercases, splits on whitespace, drops URLs, and trims punctuation from
/// both ends of each token. A single `@` or `#` directly before the first
/// letter or digit survives the trim.
pub fn tokenize(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split_whitespace()
        .filter(|raw| !raw.starts_with("http://") && !raw.starts_with("https://"))
        .filter_map(trim_token)
        .collect()
}

fn trim_token(raw: &str) -> Option<String> {
    let start = raw.find(|c: char| c.is_alphanumeric())?;
    let end = raw
        .char_indices()
        .rev()
        .find(|(_, c)| c.is_alphanumeric())
        .map(|(i, c)| i + c.len_utf8())?;
    let start = match raw[..start].chars().next_back() {
        Some(c @ ('@' | '#')) => start - c.len_utf8(),
        _ => start,
    };
    Some(raw[start..end].to_owned())
}

/// Document frequencies over one document collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusStats {
    doc_count: usize,
    doc_freq: HashMap<String, usize>,
}

impl CorpusStats {
    pub fn doc_count(&self) -> usize {
        self.doc_count
    }

    pub fn doc_freq(&self, token: &str) -> Option<usize> {
        self.doc_freq.get(token).copied()
    }

    pub fn vocabulary_len(&self) -> usize {
        self.doc_freq.len()
    }

    /// `ln(doc_count / doc_freq)`, or `None` for a token never seen.
    pub fn idf(&self, token: &str) -> Option<f64> {
        self.doc_freq(token)
            .map(|df| (self.doc_count as f64 / df as f64).ln())
    }
}

pub fn build_stats<S: AsRef<str>>(docs: &[Vec<S>]) -> Result<CorpusStats> {
    if docs.is_empty() {
        return Err(Error::EmptyDocuments);
    }
    let mut doc_freq: HashMap<String, usize> = HashMap::new();
    for doc in docs {
        let unique: HashSet<&str> = doc.iter().map(AsRef::as_ref).collect();
        for token in unique {
            *doc_freq.entry(token.to_owned()).or_default() += 1;
        }
    }
    Ok(CorpusStats {
        doc_count: docs.len(),
        doc_freq,
    })
}

/// An L2-normalized TF·IDF vector.
///
/// Only tokens with a positive weight are stored, sorted by token; an empty
/// term list is the zero vector.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TokenVector {
    source_id: String,
    terms: Vec<(String, f64)>,
}

impl TokenVector {
    pub fn zero(source_id: impl Into<String>) -> Self {
        Self {
            source_id: source_id.into(),
            terms: Vec::new(),
        }
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    /// `(token, weight)` pairs in lexicographic token order.
    pub fn terms(&self) -> &[(String, f64)] {
        &self.terms
    }

    pub fn weight(&self, token: &str) -> f64 {
        self.terms
            .binary_search_by(|(t, _)| t.as_str().cmp(token))
            .map_or(0.0, |i| self.terms[i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.terms.iter().map(|(_, w)| w * w).sum::<f64>().sqrt()
    }

    /// Builds a unit vector from raw nonnegative weights, dropping zeros.
    /// Falls back to the zero vector when nothing positive remains.
    pub fn from_raw_weights(
        source_id: impl Into<String>,
        raw: impl IntoIterator<Item = (String, f64)>,
    ) -> Self {
        let mut terms: Vec<(String, f64)> = raw.into_iter().filter(|(_, w)| *w > 0.0).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        terms.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        let norm = terms.iter().map(|(_, w)| w * w).sum::<f64>().sqrt();
        if norm > 0.0 {
            for (_, w) in &mut terms {
                *w /= norm;
            }
        } else {
            terms.clear();
        }
        Self {
            source_id: source_id.into(),
            terms,
        }
    }
}

/// Raw weight `tf · ln(N / df)`; tokens unknown to `stats` weigh 0. The
/// result is L2-normalized.
pub fn vectorize<S: AsRef<str>>(
    source_id: impl Into<String>,
    tokens: &[S],
    stats: &CorpusStats,
) -> TokenVector {
    let mut tf: HashMap<&str, usize> = HashMap::new();
    for token in tokens {
        *tf.entry(token.as_ref()).or_default() += 1;
    }
    let raw = tf.into_iter().filter_map(|(token, count)| {
        stats
            .idf(token)
            .map(|idf| (token.to_owned(), count as f64 * idf))
    });
    TokenVector::from_raw_weights(source_id, raw)
}

/// Dot product of two unit vectors; 0 when either is zero.
pub fn cosine(a: &TokenVector, b: &TokenVector) -> f64 {
    let (mut i, mut j) = (0, 0);
    let (ta, tb) = (a.terms(), b.terms());
    let mut dot = 0.0;
    while i < ta.len() && j < tb.len() {
        match ta[i].0.cmp(&tb[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                dot += ta[i].1 * tb[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    dot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &[&str]) -> Vec<String> {
        s.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn tokenize_examples() {
        assert_eq!(
            tokenize("Britney Spears Is Engaged"),
            ["britney", "spears", "is", "engaged"]
        );
        assert_eq!(
            tokenize("@BritneySpears engaged!! https://t.co/x"),
            ["@britneyspears", "engaged"]
        );
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_edges() {
        assert_eq!(tokenize("#Britney!!! ...#"), ["#britney"]);
        assert_eq!(tokenize("\"(@jason)\""), ["@jason"]);
        assert_eq!(tokenize("HTTP://example.com ok"), ["ok"]);
        assert_eq!(tokenize("don't stop-here"), ["don't", "stop-here"]);
        assert_eq!(tokenize("Ünïcode\u{3000}ÉTÉ"), ["ünïcode", "été"]);
        assert!(tokenize("!!! --- @").is_empty());
    }

    #[test]
    fn stats_counts_presence() {
        let s = build_stats(&[toks(&["a", "b"]), toks(&["b", "c"])]).unwrap();
        assert_eq!(s.doc_count(), 2);
        assert_eq!(s.doc_freq("a"), Some(1));
        assert_eq!(s.doc_freq("b"), Some(2));
        assert_eq!(s.doc_freq("c"), Some(1));

        let s = build_stats(&[toks(&["a", "a", "a"])]).unwrap();
        assert_eq!(s.doc_freq("a"), Some(1));

        let empty: Vec<Vec<String>> = vec![];
        assert!(matches!(build_stats(&empty), Err(Error::EmptyDocuments)));
    }

    #[test]
    fn ubiquitous_token_gives_zero_vector() {
        let s = build_stats(&[toks(&["a"]), toks(&["a", "b"])]).unwrap();
        assert!(vectorize("d", &toks(&["a"]), &s).is_zero());
    }

    #[test]
    fn single_informative_token_normalizes_to_one() {
        let s = build_stats(&[toks(&["a", "b"]), toks(&["b"])]).unwrap();
        let v = vectorize("d", &toks(&["a", "b"]), &s);
        assert_eq!(v.weight("a"), 1.0);
        assert_eq!(v.weight("b"), 0.0);
    }

    #[test]
    fn tf_idf_weights_match_arithmetic() {
        // 2·ln 3 and ln 1.5, normalized by hypot ≈ 2.2343.
        let docs = [toks(&["a", "a", "b"]), toks(&["b", "c"]), toks(&["c"])];
        let s = build_stats(&docs).unwrap();
        let v = vectorize("d", &docs[0], &s);
        assert!((v.weight("a") - 0.983_396_268_620_918_1).abs() < 1e-12);
        assert!((v.weight("b") - 0.181_471_151_598_415_73).abs() < 1e-12);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unseen_tokens_ignored() {
        let s = build_stats(&[toks(&["a"]), toks(&["b"])]).unwrap();
        let v = vectorize("q", &toks(&["a", "zzz"]), &s);
        assert_eq!(v.terms().len(), 1);
        assert_eq!(v.weight("zzz"), 0.0);
    }

    #[test]
    fn cosine_of_unit_vectors() {
        let s = build_stats(&[toks(&["a", "b"]), toks(&["c"]), toks(&["a"])]).unwrap();
        let v = vectorize("x", &toks(&["a", "b"]), &s);
        assert!((cosine(&v, &v) - 1.0).abs() < 1e-12);
        let w = vectorize("y", &toks(&["c"]), &s);
        assert_eq!(cosine(&v, &w), 0.0);
        assert_eq!(cosine(&v, &TokenVector::zero("z")), 0.0);
    }
}
