//! Builds the agreement graph over a handful of candidates and prints its
//! edges and vertex scores, then repeats the build on two worker threads.
//!
//! ```bash
//! cargo run --example agreement_graph
//! ```

use tweetrank::ranking::build_candidate_graph;
use tweetrank::{with_workers, AgreementParams, Tweet};

fn main() {
    let candidates = vec![
        Tweet::new("a", "quake hits northern chile, magnitude 6.1", 10),
        Tweet::new("b", "magnitude 6.1 earthquake strikes northern chile", 11),
        Tweet::new("c", "strong quake shakes chile's north", 12),
        Tweet::new("d", "win a free cruise, click now", 13),
    ];
    let params = AgreementParams::default();

    let graph = build_candidate_graph(&candidates, &params).unwrap();
    print!("{}", graph.to_csv());
    println!();
    for (id, score) in graph.ids().iter().zip(graph.scores()) {
        println!("{id}  {score:.6}");
    }

    let parallel = with_workers(Some(2), || build_candidate_graph(&candidates, &params))
        .unwrap()
        .unwrap();
    assert_eq!(parallel.scores(), graph.scores());
    println!("\ntwo workers: identical scores");
}
