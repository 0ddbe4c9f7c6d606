//! Seeded candidate sampling: the same seed always yields the same subset.
//!
//! ```bash
//! cargo run --example sampling -- 42
//! ```

use tweetrank::{sample_candidates, Corpus, SamplerConfig, Tweet};

fn main() {
    let seed = std::env::args().nth(1).map_or(42, |s| s.parse().unwrap());
    let corpus = Corpus::new(
        (0..1500)
            .map(|i| Tweet::new(format!("t{i}"), "x", i))
            .collect(),
    )
    .unwrap();

    let cfg = SamplerConfig::new(seed);
    let a = sample_candidates(&corpus, &cfg);
    let b = sample_candidates(&corpus, &cfg);
    assert_eq!(a, b);

    let ids: Vec<&str> = a.iter().map(|t| t.id.as_str()).collect();
    println!(
        "seed {seed}: {} of the first {} tweets, starting {:?}",
        ids.len(),
        cfg.pool_cap,
        &ids[..5]
    );
}
