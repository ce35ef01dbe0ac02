//! Exact values on the extremal families: stars need `k` colors and
//! `K_{k,k}` plus a universal vertex needs `k + 2`.
//!
//!     cargo run --release --example exact_extremal

use modk::graph::{kkk_plus_universal, star};
use modk::oracle::{exact_chi, SearchLimits};

fn main() {
    let lim = SearchLimits::default();
    for k in 2..=6 {
        let r = exact_chi(&star(k), k, &lim).unwrap();
        println!("K_1,{k}: chi'_{k} = {} ({} nodes)", r.value, r.nodes);
    }
    for k in 2..=4 {
        match exact_chi(&kkk_plus_universal(k), k, &lim) {
            Ok(r) => println!("K_{k},{k} + u: chi'_{k} = {} ({} nodes)", r.value, r.nodes),
            Err(e) => println!("K_{k},{k} + u: {e}"),
        }
    }
}
