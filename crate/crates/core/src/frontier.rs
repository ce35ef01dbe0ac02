//! Frontier coloring of a `d`-degenerate graph with at most `4d + 2k - 2`
//! colors.
//!
//! Vertices are visited in degeneracy order. At vertex `v_i` all of its left
//! edges are already colored and none of its right edges are; the frontier
//! colors every right edge of `v_i` at once while keeping two properties for
//! every vertex `w`:
//!
//! * the colored left edges of `w` carry pairwise distinct colors;
//! * no color used on a right edge of `w` appears on a left edge of `w`.
//!
//! Together with "each color used on the right edges of `v_i` has
//! multiplicity `1 (mod k)` there", this makes every color class have degree
//! `1 (mod k)` at every vertex it touches.
//!
//! The colors not used on left edges of `v_i` are split into `A` (the `d + k`
//! smallest) and `B` (the rest, at least `2d + k - 2` of them). Right edges
//! are first moved into `S*` in batches of `k + 1` (fresh color) or `k`
//! (color already in `S*`) as long as the uncolored remainder `S̄` is at
//! least `|A|`. Every far endpoint forbids at most `d - 1` colors, so each
//! edge of `S̄` sees at least `k + 1` available `A` colors and some color is
//! available on at least `k + 1` edges of `S̄`. Once `|S̄| < |A|` the
//! remainder gets distinct colors from `B`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::degeneracy::{degeneracy_ordering, left_right_split, DegeneracyOrdering, OrderingError};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("modulus k must be at least 1")]
    ZeroModulus,
    #[error("invalid ordering: {0}")]
    Ordering(#[from] OrderingError),
}

/// Total palette size `4d + 2k - 2` for witness degeneracy `d`.
pub fn palette_size(d: usize, k: usize) -> usize {
    (4 * d + 2 * k).saturating_sub(2)
}

/// Working state while coloring the right edges of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontierState {
    position: usize,
    vertex: usize,
    k: usize,
    degeneracy: usize,
    right_edges: Vec<EdgeId>,
    palette_a: Vec<Color>,
    palette_b: Vec<Color>,
    s_star: Vec<(EdgeId, Color)>,
    s_bar: Vec<EdgeId>,
    // colors on the colored left edges of the far endpoint of each right edge
    forbidden: BTreeMap<EdgeId, BTreeSet<Color>>,
}

/// One batch moved from `S̄` into `S*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentStep {
    pub color: Color,
    /// Whether `color` was absent from `S*` before this step.
    pub fresh: bool,
    pub edges: Vec<EdgeId>,
    pub s_bar_before: usize,
    pub s_bar_after: usize,
}

impl FrontierState {
    /// Opens the frontier at position `i` of `ord`.
    ///
    /// `colored` is the partial assignment built so far, indexed by edge id.
    /// Panics if the induction invariant does not hold: every left edge of
    /// `v_i` colored with distinct colors, no right edge colored.
    pub fn open(
        g: &Graph,
        k: usize,
        ord: &DegeneracyOrdering,
        i: usize,
        colored: &[Option<Color>],
    ) -> FrontierState {
        let v = ord.order()[i];
        let d = ord.degeneracy();
        let (left, right) = left_right_split(g, ord, v);

        let mut left_colors = BTreeSet::new();
        for e in &left {
            let c =
                colored[e.0].unwrap_or_else(|| panic!("left edge {e} of vertex {v} is uncolored"));
            assert!(
                left_colors.insert(c),
                "left edges of vertex {v} repeat color {c}"
            );
        }
        assert!(
            right.iter().all(|e| colored[e.0].is_none()),
            "vertex {v} has a colored right edge before its frontier opened"
        );

        let mut usable = (0..palette_size(d, k)).filter(|c| !left_colors.contains(c));
        let palette_a: Vec<Color> = usable.by_ref().take(d + k).collect();
        let palette_b: Vec<Color> = usable.collect();

        let mut forbidden = BTreeMap::new();
        for &e in &right {
            let w = g.other_endpoint(e, v);
            let (w_left, _) = left_right_split(g, ord, w);
            let set: BTreeSet<Color> = w_left.iter().filter_map(|f| colored[f.0]).collect();
            forbidden.insert(e, set);
        }

        FrontierState {
            position: i,
            vertex: v,
            k,
            degeneracy: d,
            s_bar: right.clone(),
            right_edges: right,
            palette_a,
            palette_b,
            s_star: Vec::new(),
            forbidden,
        }
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn right_edges(&self) -> &[EdgeId] {
        &self.right_edges
    }

    pub fn palette_a(&self) -> &[Color] {
        &self.palette_a
    }

    pub fn palette_b(&self) -> &[Color] {
        &self.palette_b
    }

    pub fn s_star(&self) -> &[(EdgeId, Color)] {
        &self.s_star
    }

    pub fn s_bar(&self) -> &[EdgeId] {
        &self.s_bar
    }

    /// Colors forbidden at the far endpoint of right edge `e`.
    pub fn forbidden_at(&self, e: EdgeId) -> &BTreeSet<Color> {
        &self.forbidden[&e]
    }

    /// `A_e`: colors of `A` available at the far endpoint of `e`.
    pub fn available(&self, e: EdgeId) -> Vec<Color> {
        let forbidden = &self.forbidden[&e];
        self.palette_a
            .iter()
            .copied()
            .filter(|c| !forbidden.contains(c))
            .collect()
    }

    /// `S̄_x`: edges of `S̄` (in id order) on which color `x` is available.
    pub fn s_bar_for(&self, x: Color) -> Vec<EdgeId> {
        self.s_bar
            .iter()
            .copied()
            .filter(|e| !self.forbidden[e].contains(&x))
            .collect()
    }

    /// The augmentation loop guard.
    pub fn needs_augment(&self) -> bool {
        !self.s_bar.is_empty() && self.s_bar.len() >= self.palette_a.len()
    }

    fn multiplicity(&self, c: Color) -> usize {
        self.s_star.iter().filter(|&&(_, x)| x == c).count()
    }

    /// Moves one batch from `S̄` into `S*`.
    ///
    /// Picks `z` maximizing `|S̄_z|` (smallest color on ties) and colors the
    /// first `k` edges of `S̄_z` if `z` is already used in `S*`, otherwise the
    /// first `k + 1`.
    ///
    /// Panics if called with `|S̄| < |A|`, or if `S̄_z` turns out too small,
    /// which the counting argument rules out under the guard.
    pub fn augment_s_star(&mut self) -> AugmentStep {
        assert!(
            self.s_bar.len() >= self.palette_a.len(),
            "augment called with |S̄| = {} < |A| = {}",
            self.s_bar.len(),
            self.palette_a.len()
        );
        let mut best: Option<(Color, Vec<EdgeId>)> = None;
        for &x in &self.palette_a {
            let candidates = self.s_bar_for(x);
            if best
                .as_ref()
                .is_none_or(|(_, b)| candidates.len() > b.len())
            {
                best = Some((x, candidates));
            }
        }
        let (z, candidates) = best.expect("palette A is non-empty");
        let fresh = self.multiplicity(z) == 0;
        let take = if fresh { self.k + 1 } else { self.k };
        assert!(
            candidates.len() >= take,
            "counting argument failed at vertex {}: |S̄_{z}| = {} < {take}",
            self.vertex,
            candidates.len()
        );

        let chosen: Vec<EdgeId> = candidates[..take].to_vec();
        let before = self.s_bar.len();
        self.s_bar.retain(|e| !chosen.contains(e));
        self.s_star.extend(chosen.iter().map(|&e| (e, z)));
        AugmentStep {
            color: z,
            fresh,
            edges: chosen,
            s_bar_before: before,
            s_bar_after: self.s_bar.len(),
        }
    }

    /// Colors what is left of `S̄` with distinct colors from `B` and returns
    /// every assignment made by this frontier (`S*` first, then `S̄`).
    ///
    /// Each edge `v_i w`, in id order, takes the smallest `B` color neither
    /// forbidden at `w` nor used on an earlier edge of `S̄`.
    pub fn finish_b_phase(self) -> Vec<(EdgeId, Color)> {
        assert!(
            self.s_bar.len() < self.palette_a.len() || self.s_bar.is_empty(),
            "B-phase needs |S̄| < |A|"
        );
        let mut out = self.s_star.clone();
        let mut spent = BTreeSet::new();
        for &e in &self.s_bar {
            let forbidden = &self.forbidden[&e];
            let c = self
                .palette_b
                .iter()
                .copied()
                .find(|c| !forbidden.contains(c) && !spent.contains(c))
                .unwrap_or_else(|| panic!("palette B exhausted at vertex {}", self.vertex));
            spent.insert(c);
            out.push((e, c));
        }
        out
    }
}

/// What happened at one frontier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontierTrace {
    pub vertex: usize,
    pub palette_a: Vec<Color>,
    pub palette_b: Vec<Color>,
    pub right_edges: Vec<EdgeId>,
    pub steps: Vec<AugmentStep>,
    /// All assignments of this frontier in raw palette colors.
    pub assigned: Vec<(EdgeId, Color)>,
    /// How many of `assigned` came from the B-phase.
    pub b_phase_len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringTrace {
    pub degeneracy: usize,
    pub palette_size: usize,
    /// Colors before contiguous relabeling.
    pub raw_colors: Vec<Color>,
    pub frontiers: Vec<FrontierTrace>,
}

/// Colors `g` with at most `4d + 2k - 2` colors, where `d` is the witness
/// degeneracy of `ord` (computed by [`degeneracy_ordering`] when absent).
pub fn color_degenerate(
    g: &Graph,
    k: usize,
    ord: Option<&DegeneracyOrdering>,
) -> Result<EdgeColoring, ColorError> {
    color_degenerate_traced(g, k, ord).map(|(c, _)| c)
}

pub fn color_degenerate_traced(
    g: &Graph,
    k: usize,
    ord: Option<&DegeneracyOrdering>,
) -> Result<(EdgeColoring, ColoringTrace), ColorError> {
    if k == 0 {
        return Err(ColorError::ZeroModulus);
    }
    let computed;
    let ord = match ord {
        Some(o) => {
            o.validate(g)?;
            o
        }
        None => {
            computed = degeneracy_ordering(g);
            &computed
        }
    };

    let mut colored: Vec<Option<Color>> = vec![None; g.edge_count()];
    let mut frontiers = Vec::new();
    for i in 0..ord.len() {
        let mut st = FrontierState::open(g, k, ord, i, &colored);
        if st.right_edges().is_empty() {
            continue;
        }
        let mut steps = Vec::new();
        while st.needs_augment() {
            steps.push(st.augment_s_star());
        }
        let vertex = st.vertex();
        let palette_a = st.palette_a().to_vec();
        let palette_b = st.palette_b().to_vec();
        let right_edges = st.right_edges().to_vec();
        let b_phase_len = st.s_bar().len();
        let assigned = st.finish_b_phase();
        for &(e, c) in &assigned {
            colored[e.0] = Some(c);
        }
        frontiers.push(FrontierTrace {
            vertex,
            palette_a,
            palette_b,
            right_edges,
            steps,
            assigned,
            b_phase_len,
        });
    }

    let raw: Vec<Color> = colored
        .into_iter()
        .map(|c| c.expect("every edge is a right edge of its earlier endpoint"))
        .collect();
    let trace = ColoringTrace {
        degeneracy: ord.degeneracy(),
        palette_size: palette_size(ord.degeneracy(), k),
        raw_colors: raw.clone(),
        frontiers,
    };
    Ok((EdgeColoring::new(k, raw), trace))
}
