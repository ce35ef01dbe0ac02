//! Edge colorings in which every color class has all degrees `1 (mod k)`.
//!
//! * [`frontier`] colors a `d`-degenerate graph with at most `4d + 2k - 2`
//!   colors, one vertex frontier at a time.
//! * [`residue`] peels a maximal subgraph with all degrees `1 (mod k)`, colors
//!   the rest with the frontier colorer and spends one color on the peeled
//!   part.
//! * [`oracle`] holds the exact tools used to check all of the above on small
//!   graphs: the verifier, an exact solver for the minimum color count, a
//!   `k`-divisible subgraph finder and the scanners built on them.
//!
//! ```
//! use modk::graph::star;
//! use modk::frontier::color_degenerate;
//! use modk::oracle::verify_coloring;
//!
//! let g = star(10);
//! let coloring = color_degenerate(&g, 3, None).unwrap();
//! assert!(verify_coloring(&g, 3, &coloring).unwrap().valid);
//! ```

pub mod cli;
pub mod coloring;
pub mod degeneracy;
pub mod document;
pub mod frontier;
pub mod graph;
pub mod oracle;
pub mod residue;
pub mod search;

pub use coloring::{Color, EdgeColoring};
pub use degeneracy::{degeneracy_ordering, left_right_split, DegeneracyOrdering};
pub use frontier::{color_degenerate, FrontierState};
pub use graph::{generate, parse_graph, EdgeId, GeneratorSpec, Graph};
pub use residue::{chi_k_color, peel_residue, PeelMode, PipelineOptions};
