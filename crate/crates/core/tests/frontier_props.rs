mod common;

use std::collections::{BTreeMap, BTreeSet};

use modk::degeneracy::{degeneracy_ordering, left_right_split, DegeneracyOrdering};
use modk::frontier::{color_degenerate, color_degenerate_traced, palette_size, ColoringTrace};
use modk::graph::{complete, random_gnm, star, Graph};
use modk::oracle::enumerate::nonisomorphic_graphs_up_to;
use modk::oracle::verify_coloring;
use proptest::prelude::*;

fn check_trace(g: &Graph, k: usize, ord: &DegeneracyOrdering, trace: &ColoringTrace) {
    let mut colored: Vec<Option<usize>> = vec![None; g.edge_count()];
    for f in &trace.frontiers {
        assert_eq!(f.palette_a.len(), ord.degeneracy() + k);
        assert!(f.palette_b.len() + 2 >= 2 * ord.degeneracy() + k);
        assert!(f.palette_a.iter().all(|c| !f.palette_b.contains(c)));

        for step in &f.steps {
            assert!(
                step.s_bar_before >= f.palette_a.len(),
                "loop guard violated"
            );
            assert!(step.s_bar_after < step.s_bar_before);
            assert_eq!(step.edges.len(), if step.fresh { k + 1 } else { k });
        }

        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &(_, c) in &f.assigned {
            *mult.entry(c).or_default() += 1;
        }
        for (&c, &count) in &mult {
            if f.palette_a.contains(&c) {
                assert_eq!(count % k, 1 % k, "A color {c} has multiplicity {count}");
            } else {
                assert!(f.palette_b.contains(&c));
                assert_eq!(count, 1, "B color {c} repeated");
            }
        }
        assert!(f.b_phase_len < f.palette_a.len());

        let (left, _) = left_right_split(g, ord, f.vertex);
        let left_colors: BTreeSet<usize> = left.iter().map(|e| colored[e.0].unwrap()).collect();
        assert!(mult.keys().all(|c| !left_colors.contains(c)));

        for &(e, c) in &f.assigned {
            assert!(colored[e.0].is_none());
            colored[e.0] = Some(c);
        }
        // colored left edges stay pairwise distinct everywhere
        for v in 0..g.vertex_count() {
            let (left, _) = left_right_split(g, ord, v);
            let cs: Vec<usize> = left.iter().filter_map(|e| colored[e.0]).collect();
            let set: BTreeSet<usize> = cs.iter().copied().collect();
            assert_eq!(set.len(), cs.len(), "left colors repeat at {v}");
        }
    }
    assert!(colored.iter().all(Option::is_some));
}

fn check(g: &Graph, k: usize) {
    let ord = degeneracy_ordering(g);
    let (c, trace) = color_degenerate_traced(g, k, Some(&ord)).unwrap();
    assert!(verify_coloring(g, k, &c).unwrap().valid, "{g:?} k={k}");
    assert!(c.num_colors() <= palette_size(ord.degeneracy(), k));
    assert!(trace.raw_colors.iter().all(|&x| x < trace.palette_size));
    check_trace(g, k, &ord, &trace);
}

#[test]
fn exhaustive_up_to_six_vertices() {
    for g in nonisomorphic_graphs_up_to(6).iter().flatten() {
        for k in 1..=5 {
            check(g, k);
        }
    }
}

#[test]
fn random_graphs_up_to_200_vertices() {
    for (g, k) in common::random_corpus(60, 200, 7) {
        check(&g, k);
    }
}

#[test]
fn large_stars_exercise_augmentation() {
    for leaves in [1, 5, 17, 40] {
        for k in 2..=7 {
            let g = star(leaves);
            let ord = DegeneracyOrdering::from_order(&g, (0..=leaves).collect()).unwrap();
            let (c, trace) = color_degenerate_traced(&g, k, Some(&ord)).unwrap();
            assert!(verify_coloring(&g, k, &c).unwrap().valid);
            check_trace(&g, k, &ord, &trace);
        }
    }
}

#[test]
fn supplied_orderings_are_honoured() {
    let g = complete(6);
    let ord = DegeneracyOrdering::from_order(&g, vec![5, 3, 1, 0, 2, 4]).unwrap();
    let (c, trace) = color_degenerate_traced(&g, 3, Some(&ord)).unwrap();
    assert_eq!(trace.frontiers[0].vertex, 5);
    assert!(verify_coloring(&g, 3, &c).unwrap().valid);
}

#[test]
fn deterministic_output() {
    for seed in 0..10 {
        let g = random_gnm(80, 400, seed).unwrap();
        let a = color_degenerate(&g, 4, None).unwrap();
        let b = color_degenerate(&g, 4, None).unwrap();
        assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn always_valid_within_budget(n in 2usize..60, density in 0.0f64..0.5, seed in any::<u64>(), k in 1usize..8) {
        let m = (density * (n * (n - 1) / 2) as f64) as usize;
        let g = random_gnm(n, m, seed).unwrap();
        let ord = degeneracy_ordering(&g);
        let c = color_degenerate(&g, k, Some(&ord)).unwrap();
        prop_assert!(verify_coloring(&g, k, &c).unwrap().valid);
        prop_assert!(c.num_colors() <= palette_size(ord.degeneracy(), k));
    }
}
