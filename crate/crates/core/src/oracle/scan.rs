use std::collections::BTreeMap;
use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::enumerate::nonisomorphic_graphs_up_to;
use super::exact::{exact_chi, SearchLimits};
use crate::graph::{random_gnm, uniform_below, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub limits: SearchLimits,
    /// Vertex counts up to this are scanned over all isomorphism classes.
    pub exhaustive_max_n: usize,
    /// Random graphs drawn for each larger vertex count.
    pub samples_per_n: usize,
    pub seed: u64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            limits: SearchLimits::default(),
            exhaustive_max_n: 7,
            samples_per_n: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub k: usize,
    pub max_n: usize,
    /// Graphs whose exact value was computed.
    pub scanned: usize,
    pub bound_exceeded: usize,
    /// Largest `chi'_k(G) - k` seen.
    pub max_excess: Option<i64>,
    /// Graphs attaining `max_excess`, in scan order.
    pub argmax: Vec<Graph>,
    /// `chi'_k(G) - k` -> number of graphs.
    pub histogram: BTreeMap<i64, usize>,
    /// `(n, graphs, sampled)` per vertex count.
    pub per_n: Vec<(usize, usize, bool)>,
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        writeln!(f, "max_n {}", self.max_n)?;
        for &(n, count, sampled) in &self.per_n {
            let how = if sampled { "sampled" } else { "exhaustive" };
            writeln!(f, "n {n} graphs {count} {how}")?;
        }
        writeln!(f, "scanned {}", self.scanned)?;
        writeln!(f, "bound_exceeded {}", self.bound_exceeded)?;
        match self.max_excess {
            Some(x) => writeln!(f, "max_excess {x}")?,
            None => writeln!(f, "max_excess none")?,
        }
        for (excess, count) in &self.histogram {
            writeln!(f, "excess {excess} count {count}")?;
        }
        writeln!(f, "argmax {}", self.argmax.len())?;
        for g in self.argmax.iter().take(5) {
            let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(f, "  n={} {}", g.vertex_count(), edges.join(" "))?;
        }
        Ok(())
    }
}

/// Exact `chi'_k` over small graphs with at least one edge, tracking how far
/// above `k` it gets.
pub fn scan_conjecture(k: usize, max_n: usize, opts: &ScanOptions) -> ScanReport {
    let mut report = ScanReport {
        k,
        max_n,
        scanned: 0,
        bound_exceeded: 0,
        max_excess: None,
        argmax: Vec::new(),
        histogram: BTreeMap::new(),
        per_n: Vec::new(),
    };
    let exhaustive = opts.exhaustive_max_n.min(max_n);
    let levels = nonisomorphic_graphs_up_to(exhaustive);
    for (n, graphs) in levels.iter().enumerate().skip(2) {
        let graphs: Vec<&Graph> = graphs.iter().filter(|g| g.edge_count() > 0).collect();
        report.per_n.push((n, graphs.len(), false));
        for g in graphs {
            record(&mut report, g, k, &opts.limits);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in (exhaustive + 1).max(2)..=max_n {
        let max_m = (n * (n - 1) / 2) as u64;
        for _ in 0..opts.samples_per_n {
            let m = 1 + uniform_below(&mut rng, max_m) as usize;
            let g = random_gnm(n, m, rng.next_u64()).expect("m within range");
            record(&mut report, &g, k, &opts.limits);
        }
        report.per_n.push((n, opts.samples_per_n, true));
    }
    report
}

fn record(report: &mut ScanReport, g: &Graph, k: usize, limits: &SearchLimits) {
    match exact_chi(g, k, limits) {
        Ok(r) => {
            report.scanned += 1;
            let excess = r.value as i64 - k as i64;
            *report.histogram.entry(excess).or_default() += 1;
            match report.max_excess {
                Some(m) if excess < m => {}
                Some(m) if excess == m => report.argmax.push(g.clone()),
                _ => {
                    report.max_excess = Some(excess);
                    report.argmax = vec![g.clone()];
                }
            }
        }
        Err(_) => report.bound_exceeded += 1,
    }
}
