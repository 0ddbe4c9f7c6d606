//! Jaro and Jaro-Winkler scores for a few classic name pairs.
//!
//! ```bash
//! cargo run --example string_similarity
//! cargo run --example string_similarity -- britney brittney
//! ```

use tweetrank::{jaro, jaro_winkler};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [a, b] => vec![(a.clone(), b.clone())],
        _ => [
            ("martha", "marhta"),
            ("dwayne", "duane"),
            ("dixon", "dicksonx"),
            ("britney", "online"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect(),
    };

    println!("{:<12} {:<12} {:>8} {:>8}", "a", "b", "jaro", "jw");
    for (a, b) in pairs {
        println!(
            "{a:<12} {b:<12} {:>8.6} {:>8.6}",
            jaro(&a, &b),
            jaro_winkler(&a, &b)
        );
    }
}
