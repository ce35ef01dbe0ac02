use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("modulus k must be at least 1")]
    ZeroModulus,
    #[error("coloring covers {got} edges, graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("edge {0} has no color")]
    Uncovered(EdgeId),
}

/// A vertex whose degree in some color class is not `1 (mod k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub color: Color,
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Number of distinct colors in use.
    pub num_colors: usize,
}

pub fn verify_coloring(
    g: &Graph,
    k: usize,
    c: &EdgeColoring,
) -> Result<VerificationReport, VerifyError> {
    let raw: Vec<Option<Color>> = c.colors().iter().copied().map(Some).collect();
    verify_assignment(g, k, &raw)
}

/// Checks a possibly partial assignment. Only vertices incident to a class
/// are constrained by it.
pub fn verify_assignment(
    g: &Graph,
    k: usize,
    colors: &[Option<Color>],
) -> Result<VerificationReport, VerifyError> {
    if k == 0 {
        return Err(VerifyError::ZeroModulus);
    }
    if colors.len() != g.edge_count() {
        return Err(VerifyError::WrongLength {
            expected: g.edge_count(),
            got: colors.len(),
        });
    }
    let mut class_degree: BTreeMap<(Color, usize), usize> = BTreeMap::new();
    let mut used = BTreeSet::new();
    for (i, c) in colors.iter().enumerate() {
        let c = c.ok_or(VerifyError::Uncovered(EdgeId(i)))?;
        let (u, v) = g.edges()[i];
        *class_degree.entry((c, u)).or_default() += 1;
        *class_degree.entry((c, v)).or_default() += 1;
        used.insert(c);
    }
    let violations: Vec<Violation> = class_degree
        .into_iter()
        .filter(|&(_, deg)| deg % k != 1 % k)
        .map(|((color, vertex), degree)| Violation {
            color,
            vertex,
            degree,
        })
        .collect();
    Ok(VerificationReport {
        valid: violations.is_empty(),
        violations,
        num_colors: used.len(),
    })
}
