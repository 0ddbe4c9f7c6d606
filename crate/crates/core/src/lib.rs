//! Agreement-based reranking of short social posts.
//!
//! Candidates retrieved for a query are compared pairwise with Soft-TFIDF
//! (TF·IDF weights, Jaro-Winkler token matching above a threshold θ), the
//! pairwise scores form an undirected agreement graph, and each candidate is
//! ranked by the sum of its edge weights. Posts that many others
//! independently corroborate rise to the top; isolated spam sinks.
//!
//! ```
//! use tweetrank::{rank_by_agreement, RankingConfig, Tweet};
//!
//! let candidates = vec![
//!     Tweet::new("a", "britney spears engaged to jason trawick", 3),
//!     Tweet::new("b", "britney spears is engaged to marry jason trawick", 2),
//!     Tweet::new("c", "jason trawick and britney spears engaged", 1),
//!     Tweet::new("d", "cheap watches buy now", 4),
//! ];
//! let ranked = rank_by_agreement(&candidates, &RankingConfig::default()).unwrap();
//! assert_eq!(ranked.entries().last().unwrap().id, "d");
//! ```
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability, and the `tweetrank` binary for the command-line interface.

pub mod agreement;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod ranking;
pub mod rng;
pub mod strsim;
pub mod text;

pub use agreement::{
    agreement_weight, build_graph, soft_tfidf, with_workers, AgreementGraph, AgreementParams,
    DEFAULT_THETA,
};
pub use corpus::{
    filter_retweets, load_corpus, load_judgments, sample_candidates, write_corpus, write_judgments,
    Corpus, JudgmentSet, SamplerConfig, Tweet,
};
pub use error::{Error, Result};
pub use eval::{
    bench_timing, gen_synthetic, mean_relevance_at_k, mean_trust_at_k, ndcg_at_k, Metric,
    MetricCurve, Synthetic, SyntheticSpec, TimingRecord,
};
pub use ranking::{
    rank_by_agreement, rank_by_tfidf, retrieve_candidates, Method, RankedEntry, RankedList,
    RankingConfig,
};
pub use rng::SplitMix64;
pub use strsim::{jaro, jaro_winkler};
pub use text::{build_stats, tokenize, vectorize, CorpusStats, TokenVector};
