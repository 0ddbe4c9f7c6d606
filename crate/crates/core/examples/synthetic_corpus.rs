//! Generates a seeded synthetic corpus with paraphrase clusters and spam,
//! writes it with its judgments, and reads both back.
//!
//! ```bash
//! cargo run --example synthetic_corpus -- /tmp/synth
//! ```

use std::path::PathBuf;

use tweetrank::{load_corpus, load_judgments, write_corpus, write_judgments, SyntheticSpec};

fn main() {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("tweetrank-synthetic"));
    std::fs::create_dir_all(&out).unwrap();

    let spec = SyntheticSpec {
        seed: 11,
        cluster_sizes: vec![20, 10],
        spam_count: 8,
    };
    let synthetic = spec.generate().unwrap();
    write_corpus(&synthetic.corpus, out.join("corpus.jsonl")).unwrap();
    write_judgments(&synthetic.judgments, out.join("judgments.tsv")).unwrap();

    let corpus = load_corpus(out.join("corpus.jsonl")).unwrap();
    let judgments = load_judgments(out.join("judgments.tsv")).unwrap();
    assert_eq!(corpus, synthetic.corpus);
    println!(
        "wrote {} tweets, {} judgments to {}",
        corpus.len(),
        judgments.len(),
        out.display()
    );
    println!("queries: {:?}", synthetic.queries);
    for t in corpus.tweets().iter().take(6) {
        println!(
            "  {} rel={:.3} trust={:>2}  {}",
            t.id,
            judgments.relevance(&t.id).unwrap(),
            judgments.trust(&t.id).unwrap(),
            t.text
        );
    }
}
