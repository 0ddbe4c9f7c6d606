//! Seeded synthetic corpora with known relevance and trust labels.
//!
//! Each cluster is one newsworthy fact retold by many independent authors:
//! tweets keep most of a shared core token set, add optional details and
//! filler, and pick up character-level typos. Spam tweets hijack one of the
//! cluster queries (keyword stuffing plus a link) and pad it with random
//! pseudo-words unrelated to any cluster. Everything is driven by one
//! SplitMix64 stream, so a seed fully determines the output bytes.

use crate::corpus::{Corpus, JudgmentSet, Tweet};
use crate::error::{Error, Result};
use crate::rng::{partial_shuffle_indices, SplitMix64};

const MAX_CHARS: usize = 140;
const BASE_TIMESTAMP: i64 = 1_318_000_000;

struct Topic {
    query: &'static [&'static str],
    core: &'static [&'static str],
    details: &'static [&'static str],
}

const TOPICS: &[Topic] = &[
    Topic {
        query: &["britney", "spears"],
        core: &["engaged", "to", "marry", "jason", "trawick"],
        details: &[
            "longtime",
            "boyfriend",
            "former",
            "agent",
            "announced",
            "ap",
        ],
    },
    Topic {
        query: &["steve", "jobs"],
        core: &["resigns", "as", "apple", "ceo", "cook", "named"],
        details: &["successor", "chairman", "board", "health", "statement"],
    },
    Topic {
        query: &["hurricane", "irene"],
        core: &["makes", "landfall", "in", "north", "carolina"],
        details: &["outer", "banks", "winds", "evacuation", "category", "storm"],
    },
    Topic {
        query: &["world", "series"],
        core: &["cardinals", "beat", "rangers", "in", "game", "seven"],
        details: &["freese", "mvp", "title", "st", "louis", "championship"],
    },
    Topic {
        query: &["nba", "lockout"],
        core: &["owners", "cancel", "first", "two", "weeks", "season"],
        details: &["stern", "union", "talks", "collapse", "players", "games"],
    },
    Topic {
        query: &["occupy", "wallstreet"],
        core: &[
            "protesters",
            "march",
            "across",
            "brooklyn",
            "bridge",
            "arrests",
        ],
        details: &["police", "hundreds", "zuccotti", "park", "rally"],
    },
];

const FILLER: &[&str] = &[
    "omg", "wow", "breaking", "news", "finally", "today", "just", "heard", "so", "lol", "really",
    "big",
];

const SYLLABLES: &[&str] = &[
    "ka", "zu", "mor", "vel", "tri", "qua", "pex", "lon", "dri", "sna", "bok", "yem", "fu", "gri",
    "xo", "tal", "nim", "ros", "hek", "wub",
];

/// A generated corpus, its labels, and one query per cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct Synthetic {
    pub corpus: Corpus,
    pub judgments: JudgmentSet,
    pub queries: Vec<String>,
}

/// Generator inputs, kept together so runs can be recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntheticSpec {
    pub seed: u64,
    pub cluster_sizes: Vec<usize>,
    pub spam_count: usize,
}

impl SyntheticSpec {
    pub fn generate(&self) -> Result<Synthetic> {
        gen_synthetic(self.seed, &self.cluster_sizes, self.spam_count)
    }
}

struct Draft {
    text: String,
    author: String,
    urls: Vec<String>,
    thirds: u8,
    trust: i8,
}

fn pseudo_word(rng: &mut SplitMix64) -> String {
    let syllables = 2 + rng.index(2);
    (0..syllables).map(|_| *rng.pick(SYLLABLES)).collect()
}

fn topic_tokens(rng: &mut SplitMix64, cluster: usize) -> (Vec<String>, Vec<String>, Vec<String>) {
    if let Some(t) = TOPICS.get(cluster) {
        let own = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        return (own(t.query), own(t.core), own(t.details));
    }
    // Beyond the built-in topics, invent one from pseudo-words.
    let mut words = |n: usize| (0..n).map(|_| pseudo_word(rng)).collect::<Vec<_>>();
    (words(2), words(5), words(5))
}

/// One character-level edit: adjacent swap, deletion, doubling, or substitution.
fn typo(rng: &mut SplitMix64, word: &str) -> String {
    let mut chars: Vec<char> = word.chars().collect();
    if chars.len() < 4 {
        return word.to_owned();
    }
    // Keep the first character so typos stay recognisable.
    let at = 1 + rng.index(chars.len() - 2);
    match rng.below(4) {
        0 => chars.swap(at, at + 1),
        1 => {
            chars.remove(at);
        }
        2 => chars.insert(at, chars[at]),
        _ => chars[at] = (b'a' + rng.below(26) as u8) as char,
    }
    chars.into_iter().collect()
}

fn fit_length(words: &mut Vec<String>, suffix: &str) -> String {
    loop {
        let mut text = words.join(" ");
        text.push_str(suffix);
        if text.chars().count() <= MAX_CHARS || words.len() <= 1 {
            return text;
        }
        words.pop();
    }
}

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn cluster_tweet(
    rng: &mut SplitMix64,
    query: &[String],
    core: &[String],
    details: &[String],
) -> Draft {
    let mut words: Vec<String> = Vec::new();
    for q in query {
        if rng.chance(17, 20) {
            words.push(q.clone());
        }
    }
    if rng.chance(1, 5) {
        words.push(format!("#{}", query.concat()));
    }
    let mut kept_core = 0;
    for c in core {
        if rng.chance(4, 5) {
            words.push(c.clone());
            kept_core += 1;
        }
    }
    let mut detail_count = 0;
    for _ in 0..rng.below(4) {
        let d = rng.pick(details).clone();
        let at = rng.index(words.len() + 1);
        words.insert(at, d);
        detail_count += 1;
    }
    for _ in 0..rng.below(3) {
        let f = rng.pick(FILLER).to_string();
        let at = if rng.chance(1, 2) { 0 } else { words.len() };
        words.insert(at, f);
    }
    for w in words.iter_mut() {
        if !w.starts_with('#') && rng.chance(1, 10) {
            *w = typo(rng, w);
        }
    }
    if words.is_empty() {
        words.push(core[0].clone());
        kept_core = 1;
    }
    if rng.chance(1, 2) {
        words[0] = capitalize(&words[0]);
    }
    let suffix = *rng.pick(&["", "", ".", "!", "!!"]);
    let text = fit_length(&mut words, suffix);

    let thirds = if kept_core * 5 >= core.len() * 4 && detail_count > 0 {
        3
    } else {
        2
    };
    Draft {
        text,
        author: format!("user{}", rng.below(5000)),
        urls: Vec::new(),
        thirds,
        trust: 1,
    }
}

fn spam_tweet(rng: &mut SplitMix64, query: &[String]) -> Draft {
    let mut words: Vec<String> = Vec::new();
    for _ in 0..1 + rng.below(3) {
        words.extend(query.iter().cloned());
    }
    if rng.chance(1, 2) {
        words.push(format!("#{}", query.concat()));
    }
    for _ in 0..rng.below(3) {
        let at = rng.index(words.len() + 1);
        words.insert(at, pseudo_word(rng));
    }
    let url = format!("http://spam.example/{}", pseudo_word(rng));
    let text = fit_length(&mut words, &format!(" {url}"));
    Draft {
        text,
        author: format!("bot{}", rng.below(5000)),
        urls: vec![url],
        thirds: 0,
        trust: -1,
    }
}

/// Generates one paraphrase cluster per entry of `cluster_sizes` plus
/// `spam_count` spam tweets, shuffled into one timeline.
pub fn gen_synthetic(seed: u64, cluster_sizes: &[usize], spam_count: usize) -> Result<Synthetic> {
    if cluster_sizes.is_empty() {
        return Err(Error::InvalidConfig(
            "at least one cluster is required".into(),
        ));
    }
    let mut rng = SplitMix64::new(seed);
    let mut drafts = Vec::new();
    let mut queries = Vec::new();
    let mut query_tokens = Vec::new();

    for (cluster, &size) in cluster_sizes.iter().enumerate() {
        let (query, core, details) = topic_tokens(&mut rng, cluster);
        for _ in 0..size {
            drafts.push(cluster_tweet(&mut rng, &query, &core, &details));
        }
        queries.push(query.join(" "));
        query_tokens.push(query);
    }
    for _ in 0..spam_count {
        let target = rng.pick(&query_tokens).clone();
        drafts.push(spam_tweet(&mut rng, &target));
    }

    let order = partial_shuffle_indices(&mut rng, drafts.len(), drafts.len());
    let width = drafts.len().to_string().len().max(4);
    let mut tweets = Vec::with_capacity(drafts.len());
    let mut judgments = JudgmentSet::new();
    for (pos, &i) in order.iter().enumerate() {
        let d = &drafts[i];
        let id = format!("t{pos:0width$}");
        let timestamp = BASE_TIMESTAMP + 60 * pos as i64 + rng.below(60) as i64;
        judgments.insert(id.clone(), d.thirds, d.trust)?;
        tweets.push(Tweet {
            id,
            text: d.text.clone(),
            author: d.author.clone(),
            timestamp,
            is_retweet: false,
            urls: d.urls.clone(),
        });
    }

    Ok(Synthetic {
        corpus: Corpus::new(tweets)?,
        judgments,
        queries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_to_jsonl;

    #[test]
    fn single_tweet_cluster() {
        let s = gen_synthetic(1, &[1], 0).unwrap();
        assert_eq!(s.corpus.len(), 1);
        let id = &s.corpus.tweets()[0].id;
        assert_eq!(s.judgments.trust(id), Some(1));
        assert_eq!(s.queries, ["britney spears"]);
    }

    #[test]
    fn deterministic_bytes() {
        let a = gen_synthetic(42, &[20, 10], 7).unwrap();
        let b = gen_synthetic(42, &[20, 10], 7).unwrap();
        assert_eq!(corpus_to_jsonl(&a.corpus), corpus_to_jsonl(&b.corpus));
        assert_eq!(a.judgments.to_tsv(), b.judgments.to_tsv());
        let c = gen_synthetic(43, &[20, 10], 7).unwrap();
        assert_ne!(corpus_to_jsonl(&a.corpus), corpus_to_jsonl(&c.corpus));
    }

    #[test]
    fn labels_and_lengths() {
        let s = gen_synthetic(5, &[40, 40, 40, 40, 40, 40, 40], 30).unwrap();
        assert_eq!(s.corpus.len(), 310);
        assert_eq!(s.queries.len(), 7);
        let mut spam = 0;
        let mut last_ts = -1;
        for t in s.corpus.tweets() {
            assert!(t.text.chars().count() <= MAX_CHARS, "{}", t.text);
            assert!(t.timestamp > last_ts);
            last_ts = t.timestamp;
            let thirds = s.judgments.relevance_thirds(&t.id).unwrap();
            let trust = s.judgments.trust(&t.id).unwrap();
            match trust {
                -1 => {
                    spam += 1;
                    assert_eq!(thirds, 0);
                    assert_eq!(t.urls.len(), 1);
                }
                1 => assert!(thirds == 2 || thirds == 3),
                other => panic!("unexpected trust {other}"),
            }
        }
        assert_eq!(spam, 30);
    }

    #[test]
    fn typo_keeps_first_char() {
        let mut rng = SplitMix64::new(9);
        for _ in 0..100 {
            let t = typo(&mut rng, "engaged");
            assert!(t.starts_with('e'));
            assert_ne!(t.len(), 0);
        }
        assert_eq!(typo(&mut rng, "abc"), "abc");
    }

    #[test]
    fn empty_cluster_list_rejected() {
        assert!(gen_synthetic(1, &[], 3).is_err());
    }
}
