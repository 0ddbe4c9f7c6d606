//! Ranking quality metrics, the timing benchmark, and synthetic labeled corpora.

mod bench;
mod metrics;
mod synth;

pub use bench::{bench_timing, timing_csv, TimingRecord};
pub use metrics::{mean_relevance_at_k, mean_trust_at_k, ndcg_at_k, Metric, MetricCurve};
pub use synth::{gen_synthetic, Synthetic, SyntheticSpec};
