//! Peel a maximal subgraph `H` whose degrees are all `1 (mod k)`, color the
//! remainder `G' = G - E(H)` with the frontier colorer, and give `E(H)` one
//! extra color.
//!
//! When `H` is maximal (no augmentation exists) three things follow, and the
//! test suite checks all of them: vertices outside `V(H)` are pairwise
//! non-adjacent in `G'`, each vertex of `V(H)` has at most `k - 1`
//! `G'`-neighbors outside `V(H)`, and `G'[V(H)]` has no non-empty
//! `k`-divisible subgraph. That caps the degeneracy of `G'` and with it the
//! total color count at `198k - 101`.

use std::fmt;
use std::str::FromStr;

use crate::coloring::EdgeColoring;
use crate::degeneracy::{degeneracy_ordering, DegeneracyOrdering};
use crate::frontier::{color_degenerate, palette_size, ColorError};
use crate::graph::{EdgeId, Graph};
use crate::search::{search_subset, SearchOutcome, Target};

pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum PeelMode {
    Exact,
    #[default]
    Matching,
    None,
}

impl FromStr for PeelMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(PeelMode::Exact),
            "matching" => Ok(PeelMode::Matching),
            "none" => Ok(PeelMode::None),
            other => Err(format!("unknown peel mode `{other}` (exact|matching|none)")),
        }
    }
}

impl fmt::Display for PeelMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PeelMode::Exact => "exact",
            PeelMode::Matching => "matching",
            PeelMode::None => "none",
        })
    }
}

/// How much maximality was established for `H`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Maximality {
    /// Exhaustive search proved no augmentation exists.
    Exact,
    /// The search budget ran out before maximality was settled.
    BudgetExhausted,
    /// `H` is a greedy maximal matching, nothing more was tried.
    MatchingOnly,
    /// `H` was left empty.
    None,
}

impl fmt::Display for Maximality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Maximality::Exact => "exact",
            Maximality::BudgetExhausted => "budget_exhausted",
            Maximality::MatchingOnly => "matching_only",
            Maximality::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueDecomposition {
    /// Edges of `H`, sorted by id.
    pub h_edges: Vec<EdgeId>,
    /// Vertices touched by `H`, sorted.
    pub h_vertices: Vec<usize>,
    /// `G - E(H)` on the same vertex set.
    pub g_prime: Graph,
    /// For each edge of `g_prime`, its id in the input graph.
    pub g_prime_edges: Vec<EdgeId>,
    pub maximality: Maximality,
    /// Augmentations applied after the matching seed.
    pub augmentations: usize,
    /// Search nodes spent.
    pub nodes: u64,
}

impl ResidueDecomposition {
    fn from_h(g: &Graph, mut h_edges: Vec<EdgeId>, maximality: Maximality) -> Self {
        h_edges.sort_unstable();
        let mut touched = vec![false; g.vertex_count()];
        for &e in &h_edges {
            let (u, v) = g.endpoints(e);
            touched[u] = true;
            touched[v] = true;
        }
        let h_vertices = (0..g.vertex_count()).filter(|&v| touched[v]).collect();
        let (g_prime, g_prime_edges) = g.without_edges(&h_edges);
        ResidueDecomposition {
            h_edges,
            h_vertices,
            g_prime,
            g_prime_edges,
            maximality,
            augmentations: 0,
            nodes: 0,
        }
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.h_vertices.binary_search(&v).is_ok()
    }

    /// Degree of `v` inside `H`.
    pub fn h_degree(&self, g: &Graph, v: usize) -> usize {
        g.incident(v)
            .iter()
            .filter(|(_, e)| self.h_edges.binary_search(e).is_ok())
            .count()
    }
}

/// Greedy maximal matching in edge-id order.
pub fn greedy_matching(g: &Graph) -> Vec<EdgeId> {
    let mut used = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            out.push(e);
        }
    }
    out
}

/// Looks for a non-empty `F ⊆ E(G')` such that `H ∪ F` still has all degrees
/// `1 (mod k)`: `deg_F ≡ 0` on `V(H)`, and `deg_F` zero or `≡ 1` elsewhere.
/// Returned ids refer to `g`. The second value is the number of nodes spent.
pub fn find_augmentation(
    g: &Graph,
    dec: &ResidueDecomposition,
    k: usize,
    budget: u64,
) -> (SearchOutcome<Vec<EdgeId>>, u64) {
    let targets: Vec<Target> = (0..g.vertex_count())
        .map(|v| {
            if dec.contains_vertex(v) {
                Target::Divisible
            } else {
                Target::UntouchedOrOne
            }
        })
        .collect();
    search_subset(g, &dec.g_prime_edges, &targets, k, budget)
}

/// Builds `H` according to `mode`. `budget` bounds the total number of
/// search nodes across all augmentation searches.
pub fn peel_residue(g: &Graph, k: usize, mode: PeelMode, budget: u64) -> ResidueDecomposition {
    assert!(k >= 1, "modulus must be at least 1");
    if k == 1 {
        // every degree is 1 (mod 1)
        let all: Vec<EdgeId> = g.edge_ids().collect();
        return ResidueDecomposition::from_h(g, all, Maximality::Exact);
    }
    match mode {
        PeelMode::None => ResidueDecomposition::from_h(g, Vec::new(), Maximality::None),
        PeelMode::Matching => {
            ResidueDecomposition::from_h(g, greedy_matching(g), Maximality::MatchingOnly)
        }
        PeelMode::Exact => {
            let mut h = greedy_matching(g);
            let mut spent = 0u64;
            let mut augmentations = 0;
            loop {
                let dec = ResidueDecomposition::from_h(g, h.clone(), Maximality::Exact);
                let (outcome, nodes) = find_augmentation(g, &dec, k, budget - spent);
                spent += nodes.min(budget - spent);
                let maximality = match outcome {
                    SearchOutcome::Found(f) => {
                        h.extend(f);
                        augmentations += 1;
                        continue;
                    }
                    SearchOutcome::Absent => Maximality::Exact,
                    SearchOutcome::BudgetExhausted => Maximality::BudgetExhausted,
                };
                return ResidueDecomposition {
                    maximality,
                    augmentations,
                    nodes: spent,
                    ..dec
                };
            }
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub mode: PeelMode,
    pub budget: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            mode: PeelMode::Matching,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Everything the pipeline produced, kept for inspection.
#[derive(Clone, Debug)]
pub struct PipelineRun {
    pub coloring: EdgeColoring,
    pub decomposition: ResidueDecomposition,
    /// Witness degeneracy of `G'` used by the frontier colorer.
    pub remainder_degeneracy: usize,
    /// Colors spent on `G'`.
    pub remainder_colors: usize,
}

impl PipelineRun {
    /// `4 d(G') + 2k - 2`, plus one if `H` is non-empty.
    pub fn budget_bound(&self) -> usize {
        let extra = usize::from(!self.decomposition.h_edges.is_empty());
        palette_size(self.remainder_degeneracy, self.coloring.k()) + extra
    }
}

/// The universal bound `198k - 101`, valid when `H` is exactly maximal.
pub fn theorem_bound(k: usize) -> usize {
    (198 * k).saturating_sub(101)
}

pub fn chi_k_color(
    g: &Graph,
    k: usize,
    options: PipelineOptions,
) -> Result<EdgeColoring, ColorError> {
    chi_k_color_with(g, k, options, None).map(|run| run.coloring)
}

/// Pipeline with an optional ordering for `G'` (same vertex set as `g`).
pub fn chi_k_color_with(
    g: &Graph,
    k: usize,
    options: PipelineOptions,
    order: Option<&[usize]>,
) -> Result<PipelineRun, ColorError> {
    if k == 0 {
        return Err(ColorError::ZeroModulus);
    }
    let dec = peel_residue(g, k, options.mode, options.budget);
    let ord = match order {
        Some(o) => DegeneracyOrdering::from_order(&dec.g_prime, o.to_vec())?,
        None => degeneracy_ordering(&dec.g_prime),
    };
    let rest = color_degenerate(&dec.g_prime, k, Some(&ord))?;

    let fresh = rest.num_colors();
    let mut raw = vec![fresh; g.edge_count()];
    for (i, &orig) in dec.g_prime_edges.iter().enumerate() {
        raw[orig.0] = rest.colors()[i];
    }
    Ok(PipelineRun {
        coloring: EdgeColoring::new(k, raw),
        remainder_degeneracy: ord.degeneracy(),
        remainder_colors: fresh,
        decomposition: dec,
    })
}
