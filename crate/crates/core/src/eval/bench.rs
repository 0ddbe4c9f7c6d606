use std::fmt::Write as _;
use std::time::Instant;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::ranking::{rank_by_agreement, retrieve_candidates, RankingConfig};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingRecord {
    pub n_tweets: usize,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

/// Times `rank_by_agreement` over the first `n` retrieved candidates for
/// each requested size. Retrieval itself is not timed.
pub fn bench_timing(
    corpus: &Corpus,
    query: &str,
    sizes: &[usize],
    cfg: &RankingConfig,
) -> Result<Vec<TimingRecord>> {
    if let Some(&size) = sizes.iter().find(|&&s| s > corpus.len()) {
        return Err(Error::SizeExceedsCorpus {
            size,
            len: corpus.len(),
        });
    }
    let Some(&largest) = sizes.iter().max() else {
        return Ok(Vec::new());
    };
    let retrieved = retrieve_candidates(corpus, query, largest)?;

    let mut records = Vec::with_capacity(sizes.len());
    for &n in sizes {
        if n == 0 {
            return Err(Error::InvalidConfig(
                "benchmark sizes must be positive".into(),
            ));
        }
        let candidates = &retrieved[..n];
        let start = Instant::now();
        let ranked = rank_by_agreement(candidates, cfg)?;
        let elapsed = start.elapsed().as_secs_f64();
        std::hint::black_box(ranked);
        records.push(TimingRecord {
            n_tweets: n,
            elapsed,
        });
    }
    Ok(records)
}

/// `n,seconds` with a header row.
pub fn timing_csv(records: &[TimingRecord]) -> String {
    let mut out = String::from("n,seconds\n");
    for r in records {
        let _ = writeln!(out, "{},{:.6}", r.n_tweets, r.elapsed);
    }
    out
}
