use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::frontier::color_degenerate;
use crate::graph::Graph;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest color count the iterative deepening will try.
    pub max_colors: usize,
    /// Backtracking nodes allowed across all rounds.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_colors: 64,
            node_budget: 50_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactChi {
    pub value: usize,
    /// Lexicographically least optimal coloring under the search order.
    pub witness: EdgeColoring,
    pub nodes: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExceededReason {
    NodeBudget,
    MaxColors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundExceeded {
    pub reason: ExceededReason,
    /// Every color count below this was refuted.
    pub lower_bound: usize,
    /// Best coloring size known without the exact search.
    pub upper_bound: Option<usize>,
}

impl fmt::Display for BoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let why = match self.reason {
            ExceededReason::NodeBudget => "node budget exhausted",
            ExceededReason::MaxColors => "color cap reached",
        };
        write!(f, "{why}; value >= {}", self.lower_bound)?;
        if let Some(ub) = self.upper_bound {
            write!(f, ", value <= {ub}")?;
        }
        Ok(())
    }
}

impl std::error::Error for BoundExceeded {}

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    t: usize,
    color: Vec<Color>,
    // class degree, indexed by v * t + c
    cnt: Vec<usize>,
    undecided: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Solver<'_> {
    /// Can `v` still end with every class it touches at degree `1 (mod k)`?
    ///
    /// Classes already present need their deficit plus multiples of `k`;
    /// any further edges either join a present class in multiples of `k` or
    /// open classes absent at `v`, which take `1 (mod k)` edges each.
    fn feasible(&self, v: usize) -> bool {
        let k = self.k;
        let row = &self.cnt[v * self.t..(v + 1) * self.t];
        let mut deficit = 0;
        let mut absent = 0;
        for &c in row {
            if c == 0 {
                absent += 1;
            } else {
                deficit += (k + 1 - c % k) % k;
            }
        }
        let rem = self.undecided[v];
        if deficit > rem {
            return false;
        }
        let spare = rem - deficit;
        if spare == 0 {
            return true;
        }
        let present = absent < self.t;
        let r = spare % k;
        let new_classes = if r == 0 && present {
            0
        } else if r == 0 {
            k
        } else {
            r
        };
        new_classes <= absent.min(spare)
    }

    fn run(&mut self, j: usize, max_used: Option<Color>) -> Option<bool> {
        if j == self.color.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let (u, v) = self.g.edges()[j];
        let top = max_used.map_or(0, |m| m + 1).min(self.t - 1);
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        for c in 0..=top {
            self.cnt[u * self.t + c] += 1;
            self.cnt[v * self.t + c] += 1;
            if self.feasible(u) && self.feasible(v) {
                self.color[j] = c;
                let next = Some(max_used.map_or(c, |m| m.max(c)));
                match self.run(j + 1, next) {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.cnt[u * self.t + c] -= 1;
            self.cnt[v * self.t + c] -= 1;
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        Some(false)
    }
}

/// Minimum number of colors in a valid coloring, by iterative deepening
/// over `t = 1, 2, ...` with edges colored in id order, each edge allowed at
/// most one color beyond the largest used so far.
pub fn exact_chi(g: &Graph, k: usize, lim: &SearchLimits) -> Result<ExactChi, BoundExceeded> {
    assert!(k >= 1, "modulus must be at least 1");
    let m = g.edge_count();
    if m == 0 {
        return Ok(ExactChi {
            value: 0,
            witness: EdgeColoring::new(k, Vec::new()),
            nodes: 0,
        });
    }
    let heuristic = color_degenerate(g, k, None)
        .map(|c| c.num_colors().min(m))
        .unwrap_or(m);

    let mut undecided = vec![0; g.vertex_count()];
    for &(u, v) in g.edges() {
        undecided[u] += 1;
        undecided[v] += 1;
    }
    let mut spent = 0u64;
    for t in 1..=m {
        if t > lim.max_colors {
            return Err(BoundExceeded {
                reason: ExceededReason::MaxColors,
                lower_bound: t,
                upper_bound: Some(heuristic),
            });
        }
        let mut solver = Solver {
            g,
            k,
            t,
            color: vec![0; m],
            cnt: vec![0; g.vertex_count() * t],
            undecided: undecided.clone(),
            nodes: 0,
            budget: lim.node_budget - spent,
        };
        let outcome = solver.run(0, None);
        spent += solver.nodes.min(lim.node_budget - spent);
        match outcome {
            Some(true) => {
                return Ok(ExactChi {
                    value: t,
                    witness: EdgeColoring::new(k, solver.color),
                    nodes: spent,
                })
            }
            Some(false) => {}
            None => {
                return Err(BoundExceeded {
                    reason: ExceededReason::NodeBudget,
                    lower_bound: t,
                    upper_bound: Some(heuristic),
                })
            }
        }
    }
    unreachable!("a rainbow coloring always exists")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, kkk_plus_universal, path, star};

    fn chi(g: &Graph, k: usize) -> usize {
        exact_chi(g, k, &SearchLimits::default()).unwrap().value
    }

    #[test]
    fn star_needs_k_colors() {
        assert_eq!(chi(&star(3), 3), 3);
    }

    #[test]
    fn triangle_mod_two() {
        assert_eq!(chi(&complete(3), 2), 3);
    }

    #[test]
    fn k4_mod_two() {
        let r = exact_chi(&complete(4), 2, &SearchLimits::default()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.colors(), &[0; 6]);
    }

    #[test]
    fn kkk_universal_mod_two() {
        assert_eq!(chi(&kkk_plus_universal(2), 2), 4);
    }

    #[test]
    fn path_witness_is_lex_least() {
        let r = exact_chi(&path(4), 2, &SearchLimits::default()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.colors(), &[0, 1, 0]);
    }

    #[test]
    fn empty_graph() {
        assert_eq!(chi(&Graph::empty(3), 2), 0);
    }

    #[test]
    fn limits_are_reported() {
        let lim = SearchLimits {
            max_colors: 2,
            node_budget: 1_000,
        };
        let err = exact_chi(&complete(3), 2, &lim).unwrap_err();
        assert_eq!(err.reason, ExceededReason::MaxColors);
        assert_eq!(err.lower_bound, 3);
        let lim = SearchLimits {
            max_colors: 10,
            node_budget: 2,
        };
        let err = exact_chi(&kkk_plus_universal(2), 2, &lim).unwrap_err();
        assert_eq!(err.reason, ExceededReason::NodeBudget);
    }
}
