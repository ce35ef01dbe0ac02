//! Budgeted depth-first search for an edge subset with prescribed vertex
//! degrees modulo `k`.
//!
//! Candidate edges are decided in the given order, "include" before
//! "exclude", and the current set is tested every time an edge is included.
//! Subsets are therefore visited in lexicographic order of their sorted
//! candidate positions and the first hit is the lexicographically least
//! solution. A branch is cut as soon as some endpoint can no longer reach its
//! target residue with the candidates still undecided.

use crate::graph::{EdgeId, Graph};

/// Degree requirement on one vertex of the chosen subset `F`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Target {
    /// `deg_F(v) ≡ 0 (mod k)`, zero allowed.
    Divisible,
    /// `deg_F(v) = 0` or `deg_F(v) ≡ 1 (mod k)`.
    UntouchedOrOne,
}

/// Result of a budgeted exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The whole space was explored without a hit.
    Absent,
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
        }
    }
}

/// Additional edges needed before `deg` satisfies `target`.
fn shortfall(target: Target, deg: usize, k: usize) -> usize {
    match target {
        Target::Divisible => (k - deg % k) % k,
        Target::UntouchedOrOne if deg == 0 => 0,
        Target::UntouchedOrOne => (k + 1 - deg % k) % k,
    }
}

struct Dfs<'a> {
    k: usize,
    ends: Vec<(usize, usize)>,
    targets: &'a [Target],
    deg: Vec<usize>,
    undecided: Vec<usize>,
    // vertices whose current degree misses the target
    unmet: usize,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dfs<'_> {
    fn feasible(&self, v: usize) -> bool {
        shortfall(self.targets[v], self.deg[v], self.k) <= self.undecided[v]
    }

    fn bump(&mut self, v: usize, delta: isize) {
        let was = shortfall(self.targets[v], self.deg[v], self.k) == 0;
        self.deg[v] = self.deg[v].wrapping_add_signed(delta);
        let now = shortfall(self.targets[v], self.deg[v], self.k) == 0;
        match (was, now) {
            (true, false) => self.unmet += 1,
            (false, true) => self.unmet -= 1,
            _ => {}
        }
    }

    /// `Some(true)` found, `Some(false)` subtree empty, `None` out of budget.
    fn run(&mut self, j: usize) -> Option<bool> {
        if j == self.ends.len() {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let (u, v) = self.ends[j];
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;

        self.bump(u, 1);
        self.bump(v, 1);
        self.chosen.push(j);
        if self.feasible(u) && self.feasible(v) {
            if self.unmet == 0 {
                return Some(true);
            }
            match self.run(j + 1) {
                Some(false) => {}
                other => return other,
            }
        }
        self.chosen.pop();
        self.bump(u, -1);
        self.bump(v, -1);

        let mut result = Some(false);
        if self.feasible(u) && self.feasible(v) {
            result = self.run(j + 1);
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        result
    }
}

/// Searches for a non-empty `F ⊆ candidates` meeting `targets` (one per vertex
/// of `g`). Returns the chosen edge ids in candidate order plus the number of
/// search nodes spent.
pub fn search_subset(
    g: &Graph,
    candidates: &[EdgeId],
    targets: &[Target],
    k: usize,
    budget: u64,
) -> (SearchOutcome<Vec<EdgeId>>, u64) {
    assert!(k >= 1);
    assert_eq!(targets.len(), g.vertex_count());
    let ends: Vec<(usize, usize)> = candidates.iter().map(|&e| g.endpoints(e)).collect();
    let mut undecided = vec![0; g.vertex_count()];
    for &(u, v) in &ends {
        undecided[u] += 1;
        undecided[v] += 1;
    }
    let mut dfs = Dfs {
        k,
        ends,
        targets,
        deg: vec![0; g.vertex_count()],
        undecided,
        unmet: 0,
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    let outcome = match dfs.run(0) {
        Some(true) => SearchOutcome::Found(dfs.chosen.iter().map(|&j| candidates[j]).collect()),
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::BudgetExhausted,
    };
    (outcome, dfs.nodes)
}
