//! Soft-TFIDF between short texts: exact token overlap plus near matches
//! such as misspellings, compared with plain cosine.
//!
//! ```bash
//! cargo run --example soft_tfidf
//! ```

use tweetrank::text::cosine;
use tweetrank::{agreement_weight, build_stats, soft_tfidf, tokenize, vectorize, DEFAULT_THETA};

fn main() {
    let texts = [
        "britney spears engaged to jason trawick",
        "britny spers engagd to jason trawick!!",
        "jason trawick proposes to britney",
        "free ringtones http://spam.example/x",
    ];
    let docs: Vec<Vec<String>> = texts.iter().map(|t| tokenize(t)).collect();
    let stats = build_stats(&docs).unwrap();
    let vectors: Vec<_> = docs
        .iter()
        .enumerate()
        .map(|(i, d)| vectorize(format!("t{i}"), d, &stats))
        .collect();

    for (i, v) in vectors.iter().enumerate() {
        println!(
            "t{i} {:?}",
            v.terms()
                .iter()
                .map(|(t, w)| format!("{t}:{w:.3}"))
                .collect::<Vec<_>>()
        );
    }
    println!();
    println!("pair   cosine  soft(i,j)  soft(j,i)  weight   (theta = {DEFAULT_THETA})");
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let (a, b) = (&vectors[i], &vectors[j]);
            println!(
                "t{i}-t{j}  {:.4}  {:.4}     {:.4}     {:.4}",
                cosine(a, b),
                soft_tfidf(a, b, DEFAULT_THETA),
                soft_tfidf(b, a, DEFAULT_THETA),
                agreement_weight(a, b, DEFAULT_THETA)
            );
        }
    }
}
