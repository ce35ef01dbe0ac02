//! Simple undirected graphs with a canonical edge list.
//!
//! Edges are stored normalized (`u < v`) and sorted lexicographically, so an
//! [`EdgeId`] is simply a position in that list and two equal graphs always
//! serialize to the same bytes.

use std::fmt;
use std::fmt::Write as _;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

/// Position of an edge in the canonical sorted edge sequence.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint >= vertex count {2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    ParseSelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    ParseDuplicate { line: usize, u: usize, v: usize },
    #[error("line {line}: endpoint {vertex} >= declared vertex count {n}")]
    ParseOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("invalid generator parameters: {0}")]
    Generator(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge) pairs sorted by neighbor
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from unordered pairs, normalizing and sorting them.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange(a, b, n));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph::from_sorted_unchecked(n, list))
    }

    fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, EdgeId(i)));
            adj[v].push((u, EdgeId(i)));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` together with the connecting edge, sorted by neighbor id.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Spanning subgraph keeping exactly the listed edges. The returned map
    /// sends each new edge id to the original one.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut ids = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let edges = ids.iter().map(|e| self.edges[e.0]).collect();
        (Graph::from_sorted_unchecked(self.n, edges), ids)
    }

    /// Spanning subgraph with the listed edges removed, plus the id map.
    pub fn without_edges(&self, remove: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut drop = vec![false; self.edges.len()];
        for e in remove {
            drop[e.0] = true;
        }
        let keep: Vec<EdgeId> = self.edge_ids().filter(|e| !drop[e.0]).collect();
        self.edge_subgraph(&keep)
    }

    /// Subgraph induced by `vertices`, relabeled densely in increasing id
    /// order. Returns the graph and, for each new edge, the original edge id.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            relabel[v] = i;
        }
        let mut edges = Vec::new();
        let mut map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if relabel[u] != usize::MAX && relabel[v] != usize::MAX {
                edges.push((relabel[u], relabel[v]));
                map.push(EdgeId(i));
            }
        }
        // relabeling is monotone, so the order is preserved
        (Graph::from_sorted_unchecked(vs.len(), edges), map)
    }

    /// Canonical text form: `n <N>` then one sorted edge per line.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(8 + self.edges.len() * 8);
        writeln!(out, "n {}", self.n).unwrap();
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Parses the edge-list text format.
///
/// Lines starting with `#` are comments, blank lines are ignored, an optional
/// `n <N>` line (before any edge) declares the vertex count, and every other
/// line is `<u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<usize> = None;
    let mut seen_edge = false;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let malformed = |msg: &str| GraphError::Malformed {
            line,
            msg: msg.to_string(),
        };
        if tokens[0] == "n" {
            if tokens.len() != 2 {
                return Err(malformed("expected `n <count>`"));
            }
            if declared.is_some() {
                return Err(malformed("repeated vertex count line"));
            }
            if seen_edge {
                return Err(malformed("vertex count line must precede edges"));
            }
            let n = tokens[1]
                .parse::<usize>()
                .map_err(|_| malformed("vertex count is not a non-negative integer"))?;
            declared = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(malformed("expected `<u> <v>`"));
        }
        let u = tokens[0]
            .parse::<usize>()
            .map_err(|_| malformed("vertex id is not a non-negative integer"))?;
        let v = tokens[1]
            .parse::<usize>()
            .map_err(|_| malformed("vertex id is not a non-negative integer"))?;
        if u == v {
            return Err(GraphError::ParseSelfLoop { line, vertex: u });
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(GraphError::ParseOutOfRange {
                    line,
                    vertex: u.max(v),
                    n,
                });
            }
        }
        seen_edge = true;
        pairs.push((u.min(v), u.max(v), line));
    }

    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0));
    pairs.sort_unstable();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
    for (i, &(u, v, _)) in pairs.iter().enumerate() {
        if i > 0 && pairs[i - 1].0 == u && pairs[i - 1].1 == v {
            // report the later of the two occurrences
            let line = pairs[i - 1].2.max(pairs[i].2);
            return Err(GraphError::ParseDuplicate { line, u, v });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// The named instance families plus seeded random graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `K_{1,k}` with center 0.
    Star { k: usize },
    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    CompleteBipartite { a: usize, b: usize },
    /// `K_{k,k}` on `0..2k` plus vertex `2k` joined to everything.
    KkkPlusUniversal { k: usize },
    /// `m` distinct edges on `n` vertices, see [`random_gnm`].
    RandomGnm { n: usize, m: usize, seed: u64 },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    match *spec {
        GeneratorSpec::Star { k } => Ok(star(k)),
        GeneratorSpec::CompleteBipartite { a, b } => Ok(complete_bipartite(a, b)),
        GeneratorSpec::KkkPlusUniversal { k } => Ok(kkk_plus_universal(k)),
        GeneratorSpec::RandomGnm { n, m, seed } => random_gnm(n, m, seed),
    }
}

pub fn star(k: usize) -> Graph {
    Graph::from_sorted_unchecked(k + 1, (1..=k).map(|v| (0, v)).collect())
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_sorted_unchecked(a + b, edges)
}

pub fn kkk_plus_universal(k: usize) -> Graph {
    let hub = 2 * k;
    let mut edges = Vec::with_capacity(k * k + 2 * k);
    for u in 0..k {
        for v in k..2 * k {
            edges.push((u, v));
        }
        edges.push((u, hub));
    }
    for v in k..2 * k {
        edges.push((v, hub));
    }
    edges.sort_unstable();
    Graph::from_sorted_unchecked(2 * k + 1, edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_sorted_unchecked(n, edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_sorted_unchecked(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Uniform draw from `0..bound` using rejection on raw 64-bit outputs.
///
/// Outputs `x >= bound * floor(2^64 / bound)` are discarded and the draw is
/// `x % bound`.
pub(crate) fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    assert!(bound > 0);
    let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % bound;
        }
    }
}

/// Random graph with exactly `m` edges on `n` vertices.
///
/// The stream is `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha 0.3, seed
/// expansion as defined by rand_core 0.6). Each attempt draws `u` then `v`
/// with [`uniform_below`]`(n)`; the pair is rejected if `u == v` or the edge
/// is already present, and accepted otherwise, until `m` edges exist.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GraphError::Generator(format!(
            "m = {m} exceeds n(n-1)/2 = {max}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = std::collections::HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = uniform_below(&mut rng, n as u64) as usize;
        let v = uniform_below(&mut rng, n as u64) as usize;
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push(key);
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_path() {
        let g = parse_graph("0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_empty() {
        let g = parse_graph("").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_self_loop_rejected() {
        assert!(matches!(
            parse_graph("0 0"),
            Err(GraphError::ParseSelfLoop { line: 1, vertex: 0 })
        ));
    }

    #[test]
    fn parse_duplicate_rejected() {
        assert!(matches!(
            parse_graph("0 1\n# again\n1 0\n"),
            Err(GraphError::ParseDuplicate {
                line: 3,
                u: 0,
                v: 1
            })
        ));
    }

    #[test]
    fn parse_header_rules() {
        let g = parse_graph("# comment\nn 5\n\n3 1\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), &[(1, 3)]);
        assert!(matches!(
            parse_graph("n 3\n0 3"),
            Err(GraphError::ParseOutOfRange {
                line: 2,
                vertex: 3,
                n: 3
            })
        ));
        assert!(matches!(
            parse_graph("0 1\nn 3"),
            Err(GraphError::Malformed { line: 2, .. })
        ));
        assert!(parse_graph("0 1 2").is_err());
        assert!(parse_graph("0 x").is_err());
        assert!(parse_graph("n -1").is_err());
    }

    #[test]
    fn isolated_vertices_survive_emit() {
        let g = parse_graph("n 4\n0 1\n").unwrap();
        assert_eq!(g.to_text(), "n 4\n0 1\n");
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn star_three() {
        let g = generate(&GeneratorSpec::Star { k: 3 }).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn kkk_universal_two() {
        let g = generate(&GeneratorSpec::KkkPlusUniversal { k: 2 }).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree(4), 4);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn gnm_is_deterministic() {
        let a = random_gnm(6, 7, 42).unwrap();
        let b = random_gnm(6, 7, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 7);
        assert_ne!(a, random_gnm(6, 7, 43).unwrap());
    }

    #[test]
    fn gnm_rejects_too_many_edges() {
        assert!(random_gnm(4, 7, 0).is_err());
        assert_eq!(random_gnm(4, 6, 0).unwrap(), complete(4));
    }

    #[test]
    fn induced_relabels() {
        let g = complete(4);
        let (h, map) = g.induced(&[1, 3, 2]);
        assert_eq!(h.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            map.iter().map(|&e| g.endpoints(e)).collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
    }
}
