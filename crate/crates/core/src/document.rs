//! JSON form of a coloring: `k`, `num_colors`, then `(u, v, color)` triples
//! sorted by `(u, v)`, one per line.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub k: usize,
    pub num_colors: usize,
    pub edges: Vec<(usize, usize, Color)>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid coloring JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("edge ({0}, {1}) is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("edge ({0}, {1}) is listed twice")]
    Repeated(usize, usize),
}

impl ColoringDocument {
    pub fn from_coloring(g: &Graph, c: &EdgeColoring) -> Self {
        ColoringDocument {
            k: c.k(),
            num_colors: c.num_colors(),
            edges: c.triples(g).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Per-edge colors in the graph's edge order; edges the document does
    /// not mention are `None`.
    pub fn assignment(&self, g: &Graph) -> Result<Vec<Option<Color>>, DocumentError> {
        let mut out = vec![None; g.edge_count()];
        for &(u, v, c) in &self.edges {
            let e = g.edge_id(u, v).ok_or(DocumentError::UnknownEdge(u, v))?;
            if out[e.0].replace(c).is_some() {
                return Err(DocumentError::Repeated(u, v));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{{").unwrap();
        writeln!(out, "  \"k\": {},", self.k).unwrap();
        writeln!(out, "  \"num_colors\": {},", self.num_colors).unwrap();
        if self.edges.is_empty() {
            writeln!(out, "  \"edges\": []").unwrap();
        } else {
            writeln!(out, "  \"edges\": [").unwrap();
            for (i, (u, v, c)) in self.edges.iter().enumerate() {
                let comma = if i + 1 < self.edges.len() { "," } else { "" };
                writeln!(out, "    [{u}, {v}, {c}]{comma}").unwrap();
            }
            writeln!(out, "  ]").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}
