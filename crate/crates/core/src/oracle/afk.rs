use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::divisible::{find_k_divisible, is_k_divisible};
use super::enumerate::nonisomorphic_graphs_up_to;
use crate::graph::{random_gnm, uniform_below, Graph};
use crate::search::SearchOutcome;

pub fn is_prime_power(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let p = (2..=k)
        .find(|&p| k.is_multiple_of(p))
        .expect("k >= 2 has a prime factor");
    let mut r = k;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfkOptions {
    pub n_max: usize,
    /// Random graphs per vertex count above `exhaustive_max_n`.
    pub trials: usize,
    pub seed: u64,
    /// Search nodes per instance for moduli other than 2.
    pub budget: u64,
    pub exhaustive_max_n: usize,
}

impl AfkOptions {
    pub fn new(n_max: usize) -> Self {
        AfkOptions {
            n_max,
            trials: 100,
            seed: 0,
            budget: 5_000_000,
            exhaustive_max_n: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfkRow {
    pub n: usize,
    /// Smallest edge count covered, `(k - 1) n + 1`.
    pub threshold: usize,
    pub sampled: bool,
    pub checked: usize,
    pub witnessed: usize,
    pub budget_exhausted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AfkReport {
    pub k: usize,
    pub rows: Vec<AfkRow>,
    /// Graphs at or above the threshold where the search proved absence.
    pub counterexamples: Vec<Graph>,
}

impl AfkReport {
    pub fn checked(&self) -> usize {
        self.rows.iter().map(|r| r.checked).sum()
    }

    pub fn witnessed(&self) -> usize {
        self.rows.iter().map(|r| r.witnessed).sum()
    }

    pub fn budget_exhausted(&self) -> usize {
        self.rows.iter().map(|r| r.budget_exhausted).sum()
    }
}

impl fmt::Display for AfkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        for r in &self.rows {
            let how = if r.sampled { "sampled" } else { "exhaustive" };
            writeln!(
                f,
                "n {} threshold {} {how} checked {} witnessed {} budget_exhausted {}",
                r.n, r.threshold, r.checked, r.witnessed, r.budget_exhausted
            )?;
        }
        writeln!(f, "counterexamples {}", self.counterexamples.len())?;
        for g in &self.counterexamples {
            write!(f, "{}", g.to_text())?;
        }
        Ok(())
    }
}

/// Every graph with at least `(k - 1) n + 1` edges should contain a non-empty
/// `k`-divisible subgraph when `k` is a prime power. Checks that over all
/// isomorphism classes for small `n` and over random graphs beyond.
///
/// Returns `None` if `k` is not a prime power.
pub fn check_afk_threshold(k: usize, opts: &AfkOptions) -> Option<AfkReport> {
    if !is_prime_power(k) {
        return None;
    }
    let mut report = AfkReport {
        k,
        rows: Vec::new(),
        counterexamples: Vec::new(),
    };
    let exhaustive = opts.exhaustive_max_n.min(opts.n_max);
    let levels = nonisomorphic_graphs_up_to(exhaustive);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    for n in 1..=opts.n_max {
        let threshold = (k - 1) * n + 1;
        let max_m = n * (n - 1) / 2;
        let mut row = AfkRow {
            n,
            threshold,
            sampled: n > exhaustive,
            checked: 0,
            witnessed: 0,
            budget_exhausted: 0,
        };
        let mut check = |g: &Graph, row: &mut AfkRow| {
            row.checked += 1;
            match find_k_divisible(g, k, opts.budget) {
                SearchOutcome::Found(f) => {
                    assert!(
                        is_k_divisible(g, k, &f),
                        "finder returned a non-divisible set"
                    );
                    row.witnessed += 1;
                }
                SearchOutcome::Absent => report.counterexamples.push(g.clone()),
                SearchOutcome::BudgetExhausted => row.budget_exhausted += 1,
            }
        };
        if threshold <= max_m {
            if let Some(level) = levels.get(n).filter(|_| n <= exhaustive) {
                for g in level.iter().filter(|g| g.edge_count() >= threshold) {
                    check(g, &mut row);
                }
            } else {
                let span = (max_m - threshold + 1) as u64;
                for _ in 0..opts.trials {
                    let m = threshold + uniform_below(&mut rng, span) as usize;
                    let g = random_gnm(n, m, rng.next_u64()).expect("m within range");
                    check(&g, &mut row);
                }
            }
        }
        report.rows.push(row);
    }
    Some(report)
}
