use modk::graph::{complete_bipartite, parse_graph, random_gnm, Graph};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.vertex_count()];
    for s in 0..g.vertex_count() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        stack.push(w);
                    }
                    Some(x) if x == side[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn text_round_trip(g in arb_graph()) {
        prop_assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn edge_ids_are_stable(g in arb_graph()) {
        let again = parse_graph(&g.to_text()).unwrap();
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            prop_assert_eq!(again.edge_id(v, u), Some(e));
        }
    }

    #[test]
    fn gnm_invariants(n in 2usize..40, frac in 0.0f64..=1.0, seed in any::<u64>()) {
        let max = n * (n - 1) / 2;
        let m = (frac * max as f64) as usize;
        let g = random_gnm(n, m, seed).unwrap();
        prop_assert_eq!(g.edge_count(), m);
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
        prop_assert!(g.edges().iter().all(|&(u, v)| u < v && v < n));
        prop_assert_eq!(Graph::from_edges(n, g.edges().iter().copied()).unwrap(), g);
    }

    #[test]
    fn complete_bipartite_shape(a in 0usize..7, b in 0usize..7) {
        let g = complete_bipartite(a, b);
        prop_assert_eq!(g.edge_count(), a * b);
        prop_assert!(is_bipartite(&g));
    }
}

#[test]
fn shuffled_input_normalizes() {
    let a = parse_graph("3 1\n0 2\n# x\n2 1\n").unwrap();
    let b = parse_graph("0 2\n1 2\n1 3\n").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_text(), "n 4\n0 2\n1 2\n1 3\n");
}

#[test]
fn gnm_golden() {
    // frozen output of the documented generator
    let g = random_gnm(6, 7, 42).unwrap();
    assert_eq!(g.to_text(), include_str!("data/gnm_6_7_42.g"));
}
