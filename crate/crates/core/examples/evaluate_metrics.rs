//! Mean relevance, NDCG and mean trust at several cutoffs for both ranking
//! methods on a synthetic corpus with known judgments.
//!
//! ```bash
//! cargo run --example evaluate_metrics
//! ```

use tweetrank::{
    gen_synthetic, rank_by_agreement, rank_by_tfidf, retrieve_candidates, Metric, MetricCurve,
    RankingConfig,
};

fn main() {
    let synthetic = gen_synthetic(42, &[150], 50).unwrap();
    let query = &synthetic.queries[0];
    let cfg = RankingConfig::default();
    let candidates = retrieve_candidates(&synthetic.corpus, query, cfg.top_n).unwrap();
    let lists = [
        rank_by_agreement(&candidates, &cfg).unwrap(),
        rank_by_tfidf(&candidates, query, cfg.top_k).unwrap(),
    ];

    let ks = [1, 5, 10, 15, 20];
    println!("method,metric,k,value");
    for list in &lists {
        for metric in Metric::ALL {
            let curve = MetricCurve::compute(metric, list, &synthetic.judgments, &ks).unwrap();
            print!("{}", curve.csv_rows());
        }
    }
}
