use std::collections::BTreeMap;

use crate::graph::{EdgeId, Graph};

pub type Color = usize;

/// A total edge coloring with contiguous color ids `0..num_colors`.
///
/// Construction relabels whatever ids it is given onto `0..t` preserving their
/// numeric order, so the contiguity invariant always holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<Color>,
    num_colors: usize,
}

impl EdgeColoring {
    pub fn new(k: usize, raw: Vec<Color>) -> EdgeColoring {
        let mut used: Vec<Color> = raw.clone();
        used.sort_unstable();
        used.dedup();
        let relabel: BTreeMap<Color, Color> =
            used.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let colors = raw.iter().map(|c| relabel[c]).collect();
        EdgeColoring {
            k,
            colors,
            num_colors: used.len(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.0]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Edges of each color class, in edge-id order.
    pub fn classes(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for (i, &c) in self.colors.iter().enumerate() {
            out[c].push(EdgeId(i));
        }
        out
    }

    /// `(u, v, color)` triples in edge order.
    pub fn triples<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (usize, usize, Color)> + 'a {
        g.edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }
}
