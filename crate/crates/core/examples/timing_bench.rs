//! Ranking time as the candidate set grows, single worker and default pool.
//!
//! ```bash
//! cargo run --release --example timing_bench
//! ```

use tweetrank::eval::timing_csv;
use tweetrank::{bench_timing, gen_synthetic, with_workers, RankingConfig};

fn main() {
    let corpus = gen_synthetic(7, &[80; 6], 120).unwrap().corpus;
    let sizes = [50, 100, 200, 300, 400];
    let cfg = RankingConfig::default();

    for (label, workers) in [("single worker", Some(1)), ("default pool", None)] {
        let records = with_workers(workers, || {
            bench_timing(&corpus, "britney spears", &sizes, &cfg)
        })
        .unwrap()
        .unwrap();
        println!("# {label}");
        print!("{}", timing_csv(&records));
    }
}
