use crate::graph::{EdgeId, Graph};
use crate::search::{search_subset, SearchOutcome, Target};

/// True if `edges` is non-empty and every vertex it touches has degree
/// divisible by `k` in it.
pub fn is_k_divisible(g: &Graph, k: usize, edges: &[EdgeId]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let mut deg = vec![0usize; g.vertex_count()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|d| d % k == 0)
}

/// Non-empty `k`-divisible subgraph, if one exists.
///
/// `k = 2` goes through [`find_even_subgraph`] and works at any size; other
/// moduli use [`find_k_divisible_exhaustive`] under `budget`.
pub fn find_k_divisible(g: &Graph, k: usize, budget: u64) -> SearchOutcome<Vec<EdgeId>> {
    assert!(k >= 1, "modulus must be at least 1");
    match k {
        1 => match g.edge_ids().next() {
            Some(e) => SearchOutcome::Found(vec![e]),
            None => SearchOutcome::Absent,
        },
        2 => match find_even_subgraph(g) {
            Some(f) => SearchOutcome::Found(f),
            None => SearchOutcome::Absent,
        },
        _ => find_k_divisible_exhaustive(g, k, budget),
    }
}

/// Lexicographically least `k`-divisible edge set under edge-id order.
pub fn find_k_divisible_exhaustive(g: &Graph, k: usize, budget: u64) -> SearchOutcome<Vec<EdgeId>> {
    let all: Vec<EdgeId> = g.edge_ids().collect();
    let targets = vec![Target::Divisible; g.vertex_count()];
    search_subset(g, &all, &targets, k, budget).0
}

type Bits = Vec<u64>;

fn bits(len: usize) -> Bits {
    vec![0; len.div_ceil(64)]
}

fn flip(b: &mut Bits, i: usize) {
    b[i / 64] ^= 1 << (i % 64);
}

fn xor_into(dst: &mut Bits, src: &Bits) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn lowest_set(b: &Bits) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// An even subgraph found as a linear dependency among edge incidence
/// vectors over GF(2).
///
/// Edges are inserted in id order into an echelon basis keyed by lowest set
/// vertex bit, each row remembering which edges it combines. The first edge
/// that reduces to zero closes a dependency, and the edges combined in it
/// have even degree everywhere. No dependency means the graph is a forest.
pub fn find_even_subgraph(g: &Graph) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    // pivot vertex -> (incidence row, edge combination)
    let mut basis: Vec<Option<(Bits, Bits)>> = vec![None; n];
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let mut row = bits(n);
        flip(&mut row, u);
        flip(&mut row, v);
        let mut combo = bits(m);
        flip(&mut combo, e.0);
        loop {
            let Some(p) = lowest_set(&row) else {
                let edges = (0..m)
                    .filter(|&i| combo[i / 64] >> (i % 64) & 1 == 1)
                    .map(EdgeId)
                    .collect();
                return Some(edges);
            };
            match &basis[p] {
                Some((r, c)) => {
                    xor_into(&mut row, r);
                    xor_into(&mut combo, c);
                }
                None => {
                    basis[p] = Some((row, combo));
                    break;
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, path, star};

    #[test]
    fn four_cycle_mod_two() {
        let g = cycle(4);
        let all: Vec<EdgeId> = g.edge_ids().collect();
        assert_eq!(
            find_k_divisible(&g, 2, 100),
            SearchOutcome::Found(all.clone())
        );
        assert_eq!(
            find_k_divisible_exhaustive(&g, 2, 100),
            SearchOutcome::Found(all)
        );
    }

    #[test]
    fn trees_have_none() {
        for g in [path(7), star(5)] {
            assert_eq!(find_k_divisible(&g, 2, 100), SearchOutcome::Absent);
            assert_eq!(
                find_k_divisible_exhaustive(&g, 2, 10_000),
                SearchOutcome::Absent
            );
        }
    }

    #[test]
    fn k33_mod_three() {
        let g = complete_bipartite(3, 3);
        let f = find_k_divisible(&g, 3, 100_000).found().unwrap();
        assert_eq!(f.len(), 9);
    }

    #[test]
    fn even_subgraph_is_even() {
        let g = complete_bipartite(3, 4);
        let f = find_even_subgraph(&g).unwrap();
        assert!(is_k_divisible(&g, 2, &f));
    }

    #[test]
    fn divisibility_check() {
        let g = cycle(5);
        assert!(!is_k_divisible(&g, 2, &[]));
        assert!(!is_k_divisible(&g, 2, &[EdgeId(0)]));
        assert!(is_k_divisible(&g, 2, &g.edge_ids().collect::<Vec<_>>()));
    }
}
