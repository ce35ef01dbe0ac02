#![allow(dead_code)]

use modk::graph::{random_gnm, Graph};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Seeded random instances: `n` in `2..=max_n`, `m` up to `min(n(n-1)/2, 8n)`,
/// `k` cycling through `2..=7`.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Vec<(Graph, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 2 + (rng.next_u64() % (max_n as u64 - 1)) as usize;
            let cap = (n * (n - 1) / 2).min(8 * n);
            let m = (rng.next_u64() % (cap as u64 + 1)) as usize;
            let g = random_gnm(n, m, rng.next_u64()).unwrap();
            (g, 2 + i % 6)
        })
        .collect()
}

/// Independent validity check: every color class has degree `1 (mod k)` at
/// each vertex it touches.
pub fn naive_valid(g: &Graph, k: usize, colors: &[usize]) -> bool {
    let t = colors.iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..t {
        for v in 0..g.vertex_count() {
            let deg = g
                .edges()
                .iter()
                .zip(colors)
                .filter(|(&(a, b), &col)| col == c && (a == v || b == v))
                .count();
            if deg > 0 && deg % k != 1 % k {
                return false;
            }
        }
    }
    true
}

/// Minimum color count by walking every set partition of the edges
/// (restricted growth strings).
pub fn brute_chi(g: &Graph, k: usize) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let mut best = m;
    let mut rgs = vec![0usize; m];
    loop {
        let t = rgs.iter().max().unwrap() + 1;
        if t < best && naive_valid(g, k, &rgs) {
            best = t;
        }
        // next restricted growth string
        let mut i = m - 1;
        loop {
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if i > 0 && rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in rgs.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
            if i == 0 {
                return best;
            }
            i -= 1;
        }
    }
}

/// Whether `g` has a non-empty edge subset with every degree `0 (mod k)`,
/// by checking all subsets.
pub fn brute_has_divisible(g: &Graph, k: usize) -> bool {
    let m = g.edge_count();
    assert!(m <= 20);
    (1u32..(1 << m)).any(|mask| {
        let mut deg = vec![0usize; g.vertex_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg.iter().all(|d| d % k == 0)
    })
}
