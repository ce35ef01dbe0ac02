//! Small graph enumeration: all labeled graphs on a few vertices, and one
//! representative per isomorphism class up to [`MAX_CANONICAL_N`] vertices.
//!
//! Isomorphism classes are generated by vertex extension (every graph on
//! `n - 1` vertices plus a new vertex with every neighbor set) and
//! deduplicated through an exact canonical code: vertices are split into an
//! ordered partition by iterated degree refinement, and the code is the
//! largest adjacency bit string over all orderings that respect the
//! partition.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;

pub const MAX_CANONICAL_N: usize = 10;

fn adjacency_masks(g: &Graph) -> Vec<u16> {
    let mut adj = vec![0u16; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Stable partition from iterated degree refinement, as ordered cells.
fn refined_cells(adj: &[u16]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut classes = color.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        color = sigs.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            break;
        }
        classes = ranks.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct Canon<'a> {
    adj: &'a [u16],
    cell_of_pos: Vec<usize>,
    cells: Vec<Vec<usize>>,
    perm: Vec<usize>,
    used: u16,
    best: Option<u64>,
    total_bits: u32,
}

impl Canon<'_> {
    fn search(&mut self, p: usize, code: u64) {
        let n = self.adj.len();
        if p == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let cell = self.cell_of_pos[p];
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = code;
            for q in 0..p {
                next = next << 1 | u64::from(self.adj[v] >> self.perm[q] & 1);
            }
            let len = (p * (p + 1) / 2) as u32;
            if let Some(b) = self.best {
                let prefix = if len == 0 {
                    0
                } else {
                    b >> (self.total_bits - len)
                };
                if next < prefix {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.search(p + 1, next);
            self.perm.pop();
            self.used &= !(1 << v);
        }
    }
}

fn canonical_from_masks(adj: &[u16]) -> u64 {
    let n = adj.len();
    assert!(
        n <= MAX_CANONICAL_N,
        "canonical codes support at most {MAX_CANONICAL_N} vertices"
    );
    let cells = refined_cells(adj);
    let mut cell_of_pos = Vec::with_capacity(n);
    for (i, c) in cells.iter().enumerate() {
        cell_of_pos.extend(std::iter::repeat_n(i, c.len()));
    }
    let mut canon = Canon {
        adj,
        cell_of_pos,
        cells,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
    };
    canon.search(0, 0);
    canon.best.unwrap_or(0)
}

/// Isomorphism-invariant code; equal codes on equal vertex counts mean
/// isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_from_masks(&adjacency_masks(g))
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for p in 1..n {
        for q in 0..p {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((q, p));
            }
        }
    }
    Graph::from_edges(n, edges).expect("decoded code is simple")
}

/// One graph per isomorphism class on each vertex count `0..=max_n`.
/// Within a level graphs are sorted by canonical code, which orders them
/// deterministically.
pub fn nonisomorphic_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= MAX_CANONICAL_N);
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
    let mut prev_masks: Vec<Vec<u16>> = vec![vec![]];
    for n in 1..=max_n {
        let mut codes = BTreeSet::new();
        for masks in &prev_masks {
            for nb in 0u16..(1 << (n - 1)) {
                let mut adj = masks.clone();
                adj.push(nb);
                for (v, a) in adj.iter_mut().enumerate().take(n - 1) {
                    if nb >> v & 1 == 1 {
                        *a |= 1 << (n - 1);
                    }
                }
                codes.insert(canonical_from_masks(&adj));
            }
        }
        let graphs: Vec<Graph> = codes.iter().map(|&c| graph_from_code(n, c)).collect();
        prev_masks = graphs.iter().map(adjacency_masks).collect();
        levels.push(graphs);
    }
    levels
}

pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs_up_to(n).pop().expect("level n exists")
}

/// Every labeled graph on `n` vertices, in order of its edge bit mask.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labeled graphs on {n} vertices");
    (0u32..(1 << pairs.len())).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("subset of a simple graph")
    })
}
