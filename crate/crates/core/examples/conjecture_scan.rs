//! How far above k does the minimum color count get on small graphs?
//!
//!     cargo run --release --example conjecture_scan

use modk::oracle::{scan_conjecture, ScanOptions};

fn main() {
    for (k, max_n) in [(2, 7), (3, 7), (4, 6)] {
        let report = scan_conjecture(k, max_n, &ScanOptions::default());
        println!("{report}");
    }
}
