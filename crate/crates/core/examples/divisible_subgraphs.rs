//! Find k-divisible subgraphs, via GF(2) elimination for k = 2 and by
//! exhaustive search otherwise, then check the (k-1)n+1 edge threshold.
//!
//!     cargo run --release --example divisible_subgraphs

use modk::graph::{complete, complete_bipartite, path};
use modk::oracle::{check_afk_threshold, find_even_subgraph, find_k_divisible, AfkOptions};

fn main() {
    println!(
        "even subgraph of K5: {:?}",
        find_even_subgraph(&complete(5))
    );
    println!(
        "even subgraph of a path: {:?}",
        find_even_subgraph(&path(6))
    );
    let k33 = complete_bipartite(3, 3);
    println!(
        "3-divisible subgraph of K3,3: {:?}",
        find_k_divisible(&k33, 3, 1_000_000)
    );

    for k in [2, 3, 4] {
        let report = check_afk_threshold(k, &AfkOptions::new(8)).unwrap();
        print!("{report}");
    }
}
