//! Peel a maximal subgraph with all degrees 1 (mod k), color the remainder
//! and compare against the exact optimum.
//!
//!     cargo run --example residue_pipeline

use modk::graph::{complete, random_gnm};
use modk::oracle::{exact_chi, verify_coloring, SearchLimits};
use modk::residue::{chi_k_color_with, peel_residue, theorem_bound, PeelMode, PipelineOptions};

fn main() {
    let g = complete(4);
    let dec = peel_residue(&g, 2, PeelMode::Exact, 10_000);
    println!(
        "K4, k = 2: H has {} edges after {} augmentation(s), maximality {}",
        dec.h_edges.len(),
        dec.augmentations,
        dec.maximality
    );

    for k in 2..=4 {
        let g = random_gnm(9, 18, k as u64).unwrap();
        for mode in [PeelMode::None, PeelMode::Matching, PeelMode::Exact] {
            let run = chi_k_color_with(
                &g,
                k,
                PipelineOptions {
                    mode,
                    budget: 1_000_000,
                },
                None,
            )
            .unwrap();
            assert!(verify_coloring(&g, k, &run.coloring).unwrap().valid);
            println!(
                "k = {k}, peel {mode:<8}: |H| = {:>2}, d(G') = {}, colors = {:>2} (bound {}, universal {})",
                run.decomposition.h_edges.len(),
                run.remainder_degeneracy,
                run.coloring.num_colors(),
                run.budget_bound(),
                theorem_bound(k)
            );
        }
        let best = exact_chi(&g, k, &SearchLimits::default()).unwrap();
        println!("k = {k}, exact optimum {}", best.value);
    }
}
