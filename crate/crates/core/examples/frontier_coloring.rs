//! Step through the frontier colorer on a star and then run it on a random
//! graph, checking the `4d + 2k - 2` budget.
//!
//!     cargo run --example frontier_coloring

use modk::degeneracy::DegeneracyOrdering;
use modk::frontier::{color_degenerate_traced, FrontierState};
use modk::graph::{random_gnm, star};
use modk::oracle::verify_coloring;

fn main() {
    let k = 3;
    let g = star(10);
    let ord = DegeneracyOrdering::from_order(&g, (0..=10).collect()).unwrap();
    let colored = vec![None; g.edge_count()];

    let mut st = FrontierState::open(&g, k, &ord, 0, &colored);
    println!("K_1,10, k = {k}, d = {}", ord.degeneracy());
    println!("A = {:?}, B = {:?}", st.palette_a(), st.palette_b());
    while st.needs_augment() {
        let step = st.augment_s_star();
        println!(
            "color {} ({}) on {} edges, |S̄| {} -> {}",
            step.color,
            if step.fresh { "fresh" } else { "reused" },
            step.edges.len(),
            step.s_bar_before,
            step.s_bar_after
        );
    }
    for (e, c) in st.finish_b_phase() {
        println!("  {:?} -> {c}", g.endpoints(e));
    }

    let g = random_gnm(150, 900, 7).unwrap();
    let (coloring, trace) = color_degenerate_traced(&g, 4, None).unwrap();
    let report = verify_coloring(&g, 4, &coloring).unwrap();
    let augments: usize = trace.frontiers.iter().map(|f| f.steps.len()).sum();
    println!(
        "random graph: n = 150, m = 900, d = {}, colors = {} <= {}, augment steps = {augments}, valid = {}",
        trace.degeneracy,
        coloring.num_colors(),
        trace.palette_size,
        report.valid
    );
}
