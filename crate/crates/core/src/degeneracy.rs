//! Degeneracy orderings and the left/right edge split built on them.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("ordering has {got} entries, graph has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {0} is out of range or repeated")]
    NotPermutation(usize),
    #[error(
        "stated degeneracy {stated} does not match the ordering's maximum left degree {actual}"
    )]
    WrongWitness { stated: usize, actual: usize },
}

/// A vertex ordering `v_1, ..., v_n` together with its witness degeneracy:
/// the largest number of earlier neighbors any vertex has.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
    degeneracy: usize,
}

impl DegeneracyOrdering {
    /// Wraps an arbitrary permutation, computing its witness degeneracy.
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Result<Self, OrderingError> {
        let n = g.vertex_count();
        if order.len() != n {
            return Err(OrderingError::WrongLength {
                expected: n,
                got: order.len(),
            });
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(OrderingError::NotPermutation(v));
            }
            position[v] = i;
        }
        let degeneracy = max_left_degree(g, &position);
        Ok(DegeneracyOrdering {
            order,
            position,
            degeneracy,
        })
    }

    /// Checks all invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), OrderingError> {
        let fresh = DegeneracyOrdering::from_order(g, self.order.clone())?;
        if fresh.degeneracy != self.degeneracy || fresh.position != self.position {
            return Err(OrderingError::WrongWitness {
                stated: self.degeneracy,
                actual: fresh.degeneracy,
            });
        }
        Ok(())
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn degeneracy(&self) -> usize {
        self.degeneracy
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn max_left_degree(g: &Graph, position: &[usize]) -> usize {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .filter(|&w| position[w] < position[v])
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Minimum-degree elimination: repeatedly remove the vertex of least current
/// degree (smallest id on ties). The ordering is the reverse of the removal
/// sequence and `d` is the largest degree seen at removal time.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.max_degree() + 1];
    for v in 0..n {
        buckets[degree[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut d = 0;
    let mut low = 0;

    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        removed[v] = true;
        d = d.max(low);
        removal.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
            }
        }
        low = low.saturating_sub(1);
    }

    removal.reverse();
    let mut position = vec![0; n];
    for (i, &v) in removal.iter().enumerate() {
        position[v] = i;
    }
    DegeneracyOrdering {
        order: removal,
        position,
        degeneracy: d,
    }
}

/// Splits the edges at `v` into left edges (other endpoint earlier in the
/// ordering) and right edges (other endpoint later). Both lists are sorted by
/// edge id.
pub fn left_right_split(
    g: &Graph,
    ord: &DegeneracyOrdering,
    v: usize,
) -> (Vec<EdgeId>, Vec<EdgeId>) {
    let here = ord.position(v);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &(w, e) in g.incident(v) {
        if ord.position(w) < here {
            left.push(e);
        } else {
            right.push(e);
        }
    }
    left.sort_unstable();
    right.sort_unstable();
    (left, right)
}
