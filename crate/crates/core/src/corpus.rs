//! Tweet records, corpus files, judgment files, and seeded candidate sampling.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::rng::{partial_shuffle_indices, SplitMix64};

/// One post.
///
/// On disk the retweet flag is spelled `retweet`; `retweet` and `urls` are
/// optional when reading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tweet {
    pub id: String,
    pub text: String,
    pub author: String,
    pub timestamp: i64,
    #[serde(rename = "retweet", default)]
    pub is_retweet: bool,
    #[serde(default)]
    pub urls: Vec<String>,
}

impl Tweet {
    pub fn new(id: impl Into<String>, text: impl Into<String>, timestamp: i64) -> Self {
        Self {
            id: id.into(),
            text: text.into(),
            author: String::new(),
            timestamp,
            is_retweet: false,
            urls: Vec::new(),
        }
    }

    pub fn with_author(mut self, author: impl Into<String>) -> Self {
        self.author = author.into();
        self
    }

    pub fn retweet(mut self, is_retweet: bool) -> Self {
        self.is_retweet = is_retweet;
        self
    }
}

/// An ordered list of tweets with unique, nonempty ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    tweets: Vec<Tweet>,
}

impl Corpus {
    /// Validates ids (nonempty, unique) and timestamps (nonnegative).
    /// Error line numbers are 1-based positions in `tweets`.
    pub fn new(tweets: Vec<Tweet>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(tweets.len());
        for (pos, tweet) in tweets.iter().enumerate() {
            let line = pos + 1;
            if tweet.id.is_empty() {
                return Err(Error::InvalidField {
                    line,
                    field: "id",
                    message: "must be nonempty".into(),
                });
            }
            if tweet.timestamp < 0 {
                return Err(Error::InvalidField {
                    line,
                    field: "timestamp",
                    message: format!("{} is negative", tweet.timestamp),
                });
            }
            if !seen.insert(tweet.id.as_str()) {
                return Err(Error::DuplicateId {
                    line,
                    id: tweet.id.clone(),
                });
            }
        }
        Ok(Self { tweets })
    }

    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    pub fn len(&self) -> usize {
        self.tweets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tweets.is_empty()
    }

    pub fn into_tweets(self) -> Vec<Tweet> {
        self.tweets
    }
}

/// Reads a JSONL corpus. Blank lines are skipped; error line numbers are 1-based.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_corpus(&raw)
}

pub fn parse_corpus(raw: &str) -> Result<Corpus> {
    let mut tweets = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in raw.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let tweet = parse_tweet_line(line, line_no)?;
        if !seen.insert(tweet.id.clone()) {
            return Err(Error::DuplicateId {
                line: line_no,
                id: tweet.id,
            });
        }
        tweets.push(tweet);
    }
    Ok(Corpus { tweets })
}

fn parse_tweet_line(line: &str, line_no: usize) -> Result<Tweet> {
    let value: Value = serde_json::from_str(line).map_err(|e| Error::MalformedJson {
        line: line_no,
        message: e.to_string(),
    })?;
    let Value::Object(obj) = value else {
        return Err(Error::MalformedJson {
            line: line_no,
            message: "expected a JSON object".into(),
        });
    };

    let id = required_str(&obj, "id", line_no)?;
    if id.is_empty() {
        return Err(Error::InvalidField {
            line: line_no,
            field: "id",
            message: "must be nonempty".into(),
        });
    }
    let text = required_str(&obj, "text", line_no)?;
    let author = required_str(&obj, "author", line_no)?;
    let timestamp = match obj.get("timestamp") {
        None => {
            return Err(Error::MissingField {
                line: line_no,
                field: "timestamp",
            })
        }
        Some(v) => v
            .as_i64()
            .filter(|t| *t >= 0)
            .ok_or_else(|| Error::InvalidField {
                line: line_no,
                field: "timestamp",
                message: format!("expected a nonnegative integer, got {v}"),
            })?,
    };
    let is_retweet = match obj.get("retweet") {
        None | Some(Value::Null) => false,
        Some(Value::Bool(b)) => *b,
        Some(v) => {
            return Err(Error::InvalidField {
                line: line_no,
                field: "retweet",
                message: format!("expected a boolean, got {v}"),
            })
        }
    };
    let urls = match obj.get("urls") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(items)) => items
            .iter()
            .map(|u| u.as_str().map(str::to_owned))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidField {
                line: line_no,
                field: "urls",
                message: "expected an array of strings".into(),
            })?,
        Some(v) => {
            return Err(Error::InvalidField {
                line: line_no,
                field: "urls",
                message: format!("expected an array, got {v}"),
            })
        }
    };

    Ok(Tweet {
        id,
        text,
        author,
        timestamp,
        is_retweet,
        urls,
    })
}

fn required_str(obj: &Map<String, Value>, field: &'static str, line: usize) -> Result<String> {
    match obj.get(field) {
        None => Err(Error::MissingField { line, field }),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(v) => Err(Error::InvalidField {
            line,
            field,
            message: format!("expected a string, got {v}"),
        }),
    }
}

/// Serializes a corpus as JSONL, one compact object per line with every field present.
pub fn corpus_to_jsonl(corpus: &Corpus) -> String {
    let mut out = String::new();
    for tweet in &corpus.tweets {
        out.push_str(&serde_json::to_string(tweet).expect("tweet serializes"));
        out.push('\n');
    }
    out
}

pub fn write_corpus(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, corpus_to_jsonl(corpus)).map_err(|e| Error::io(path, e))
}

/// Keeps only original posts, in their original order.
pub fn filter_retweets(corpus: &Corpus) -> Corpus {
    Corpus {
        tweets: corpus
            .tweets
            .iter()
            .filter(|t| !t.is_retweet)
            .cloned()
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub sample_size: usize,
    pub pool_cap: usize,
}

impl SamplerConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            sample_size: 200,
            pool_cap: 1500,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sample_size == 0 || self.pool_cap == 0 {
            return Err(Error::InvalidConfig(
                "sample size and pool cap must be positive".into(),
            ));
        }
        if self.sample_size > self.pool_cap {
            return Err(Error::InvalidConfig(format!(
                "sample size {} exceeds pool cap {}",
                self.sample_size, self.pool_cap
            )));
        }
        Ok(())
    }
}

/// Uniform sample without replacement from the first `pool_cap` tweets.
///
/// An undersized pool is returned whole and in order; otherwise tweets come
/// back in selection order.
pub fn sample_candidates(corpus: &Corpus, cfg: &SamplerConfig) -> Vec<Tweet> {
    let pool = &corpus.tweets[..cfg.pool_cap.min(corpus.len())];
    if cfg.sample_size >= pool.len() {
        return pool.to_vec();
    }
    let mut rng = SplitMix64::new(cfg.seed);
    partial_shuffle_indices(&mut rng, pool.len(), cfg.sample_size)
        .into_iter()
        .map(|i| pool[i].clone())
        .collect()
}

/// Graded relevance (in thirds) and trust labels per tweet id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JudgmentSet {
    relevance: BTreeMap<String, u8>,
    trust: BTreeMap<String, i8>,
}

impl JudgmentSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records (or overwrites) both labels for `id`.
    pub fn insert(&mut self, id: impl Into<String>, thirds: u8, trust: i8) -> Result<()> {
        if thirds > 3 {
            return Err(Error::RelevanceOutOfRange {
                line: 0,
                value: thirds.into(),
            });
        }
        if !(-1..=1).contains(&trust) {
            return Err(Error::TrustOutOfRange {
                line: 0,
                value: trust.into(),
            });
        }
        let id = id.into();
        self.relevance.insert(id.clone(), thirds);
        self.trust.insert(id, trust);
        Ok(())
    }

    pub fn relevance_thirds(&self, id: &str) -> Option<u8> {
        self.relevance.get(id).copied()
    }

    /// Relevance on the 0..=1 scale.
    pub fn relevance(&self, id: &str) -> Option<f64> {
        self.relevance_thirds(id).map(|t| f64::from(t) / 3.0)
    }

    pub fn trust(&self, id: &str) -> Option<i8> {
        self.trust.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.relevance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relevance.is_empty()
    }

    /// Ids in lexicographic order.
    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.relevance.keys().map(String::as_str)
    }

    /// Ids judged here but absent from `corpus`.
    pub fn unknown_ids<'a>(&'a self, corpus: &Corpus) -> Vec<&'a str> {
        let known: HashSet<&str> = corpus.tweets.iter().map(|t| t.id.as_str()).collect();
        self.ids().filter(|id| !known.contains(id)).collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (id, thirds) in &self.relevance {
            out.push_str(&format!("{id}\t{thirds}\t{}\n", self.trust[id]));
        }
        out
    }
}

pub fn load_judgments(path: impl AsRef<Path>) -> Result<JudgmentSet> {
    let path = path.as_ref();
    let raw = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_judgments(&raw)
}

/// Parses `id<TAB>thirds<TAB>trust` rows; blank and `#` lines are skipped,
/// later rows overwrite earlier ones.
pub fn parse_judgments(raw: &str) -> Result<JudgmentSet> {
    let mut set = JudgmentSet::new();
    for (idx, line) in raw.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, thirds, trust] = fields[..] else {
            return Err(Error::MalformedJudgment {
                line: line_no,
                message: format!("expected 3 tab-separated fields, found {}", fields.len()),
            });
        };
        if id.is_empty() {
            return Err(Error::MalformedJudgment {
                line: line_no,
                message: "empty id".into(),
            });
        }
        let parse = |s: &str, what: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::MalformedJudgment {
                    line: line_no,
                    message: format!("{what} `{s}` is not an integer"),
                })
        };
        let thirds = parse(thirds, "relevance")?;
        let trust = parse(trust, "trust")?;
        if !(0..=3).contains(&thirds) {
            return Err(Error::RelevanceOutOfRange {
                line: line_no,
                value: thirds,
            });
        }
        if !(-1..=1).contains(&trust) {
            return Err(Error::TrustOutOfRange {
                line: line_no,
                value: trust,
            });
        }
        set.relevance.insert(id.to_owned(), thirds as u8);
        set.trust.insert(id.to_owned(), trust as i8);
    }
    Ok(set)
}

pub fn write_judgments(judgments: &JudgmentSet, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(judgments.to_tsv().as_bytes())
        .map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus_of(n: usize) -> Corpus {
        Corpus::new(
            (0..n)
                .map(|i| Tweet::new(format!("t{i}"), format!("text {i}"), i as i64))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn empty_file_is_empty_corpus() {
        assert!(parse_corpus("").unwrap().is_empty());
    }

    #[test]
    fn optional_fields_default() {
        let c = parse_corpus(r#"{"id":"t1","text":"hello","author":"a","timestamp":5}"#).unwrap();
        let t = &c.tweets()[0];
        assert_eq!(t.id, "t1");
        assert_eq!(t.timestamp, 5);
        assert!(!t.is_retweet);
        assert!(t.urls.is_empty());
    }

    #[test]
    fn duplicate_id_names_second_line() {
        let raw = "{\"id\":\"t1\",\"text\":\"a\",\"author\":\"a\",\"timestamp\":1}\n\
                   {\"id\":\"t1\",\"text\":\"b\",\"author\":\"b\",\"timestamp\":2}\n";
        match parse_corpus(raw) {
            Err(Error::DuplicateId { line, id }) => {
                assert_eq!(line, 2);
                assert_eq!(id, "t1");
            }
            other => panic!("expected duplicate id error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_and_missing() {
        let raw = "{\"id\":\"t1\",\"text\":\"a\",\"author\":\"a\",\"timestamp\":1}\n{not json\n";
        assert!(matches!(
            parse_corpus(raw),
            Err(Error::MalformedJson { line: 2, .. })
        ));
        assert!(matches!(
            parse_corpus(r#"{"id":"t1","author":"a","timestamp":1}"#),
            Err(Error::MissingField {
                line: 1,
                field: "text"
            })
        ));
        assert!(matches!(
            parse_corpus(r#"{"id":"t1","text":"x","author":"a","timestamp":-3}"#),
            Err(Error::InvalidField {
                field: "timestamp",
                ..
            })
        ));
        assert!(matches!(
            parse_corpus(r#"{"id":"","text":"x","author":"a","timestamp":3}"#),
            Err(Error::InvalidField { field: "id", .. })
        ));
    }

    #[test]
    fn filter_keeps_order() {
        let tweets = vec![
            Tweet::new("a", "x", 1),
            Tweet::new("b", "y", 2).retweet(true),
            Tweet::new("c", "z", 3),
        ];
        let c = Corpus::new(tweets).unwrap();
        let f = filter_retweets(&c);
        let ids: Vec<_> = f.tweets().iter().map(|t| t.id.as_str()).collect();
        assert_eq!(ids, ["a", "c"]);

        let no_rt = corpus_of(4);
        assert_eq!(filter_retweets(&no_rt), no_rt);

        let all_rt = Corpus::new(vec![Tweet::new("a", "x", 1).retweet(true)]).unwrap();
        assert!(filter_retweets(&all_rt).is_empty());
    }

    #[test]
    fn undersized_pool_returned_whole() {
        let c = corpus_of(50);
        let s = sample_candidates(&c, &SamplerConfig::new(9));
        assert_eq!(s, c.tweets());
    }

    #[test]
    fn pool_cap_limits_population() {
        let c = corpus_of(100);
        let cfg = SamplerConfig {
            seed: 3,
            sample_size: 5,
            pool_cap: 10,
        };
        let s = sample_candidates(&c, &cfg);
        assert_eq!(s.len(), 5);
        assert!(s.iter().all(|t| t.timestamp < 10));
    }

    #[test]
    fn sampler_config_validation() {
        assert!(SamplerConfig::new(1).validate().is_ok());
        let bad = SamplerConfig {
            seed: 1,
            sample_size: 20,
            pool_cap: 10,
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn judgment_rows() {
        let j = parse_judgments("t1\t3\t1\n").unwrap();
        assert_eq!(j.relevance("t1"), Some(1.0));
        assert_eq!(j.trust("t1"), Some(1));
        assert!(matches!(
            parse_judgments("t2\t4\t0\n"),
            Err(Error::RelevanceOutOfRange { line: 1, value: 4 })
        ));
        assert!(matches!(
            parse_judgments("t2\t1\t2\n"),
            Err(Error::TrustOutOfRange { line: 1, value: 2 })
        ));
        assert!(parse_judgments("").unwrap().is_empty());
        assert!(matches!(
            parse_judgments("t1 3 1\n"),
            Err(Error::MalformedJudgment { line: 1, .. })
        ));
    }

    #[test]
    fn judgments_last_row_wins_and_comments_skip() {
        let j = parse_judgments("# header\nt1\t0\t-1\n\nt1\t2\t0\n").unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(j.relevance_thirds("t1"), Some(2));
        assert_eq!(j.trust("t1"), Some(0));
    }

    #[test]
    fn unknown_judged_ids() {
        let c = corpus_of(2);
        let j = parse_judgments("t0\t1\t1\nzz\t1\t1\n").unwrap();
        assert_eq!(j.unknown_ids(&c), ["zz"]);
    }
}
