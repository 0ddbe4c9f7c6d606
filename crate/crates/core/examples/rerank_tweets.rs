//! End-to-end reranking: retrieve the top-N candidates for a query from a
//! JSONL corpus, then rank them by agreement and by TF-IDF similarity.
//!
//! ```bash
//! cargo run --example rerank_tweets
//! cargo run --example rerank_tweets -- path/to/corpus.jsonl "some query"
//! ```

use tweetrank::{
    filter_retweets, gen_synthetic, load_corpus, rank_by_agreement, rank_by_tfidf,
    retrieve_candidates, RankingConfig,
};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (corpus, query) = match args.as_slice() {
        [path, query] => (load_corpus(path).unwrap(), query.clone()),
        _ => (
            gen_synthetic(42, &[150], 50).unwrap().corpus,
            "britney spears".to_owned(),
        ),
    };
    let corpus = filter_retweets(&corpus);
    let cfg = RankingConfig {
        top_k: 5,
        ..Default::default()
    };

    let candidates = retrieve_candidates(&corpus, &query, cfg.top_n).unwrap();
    println!("{} candidates for {query:?}\n", candidates.len());

    let by_agreement = rank_by_agreement(&candidates, &cfg).unwrap();
    let by_tfidf = rank_by_tfidf(&candidates, &query, cfg.top_k).unwrap();
    let text = |id: &str| candidates.iter().find(|t| t.id == id).unwrap().text.clone();

    for list in [&by_agreement, &by_tfidf] {
        println!("{}:", list.method());
        for e in list.entries() {
            println!("  {:>2}. {:.4}  {}", e.rank, e.score, text(&e.id));
        }
        println!();
    }
    print!("{}", by_agreement.to_json());
}
