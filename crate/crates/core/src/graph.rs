//! Simple undirected graphs, vertex sets and the `.gr` text format.
//!
//! Vertices are dense `usize` indices in `0..n`. Text formats use 1-based
//! identifiers; the conversion happens only at the I/O boundary.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vertex index in `0..n`.
pub type Vertex = usize;

/// Errors raised while constructing or querying a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0}-{1} has both endpoints forbidden, no cover exists")]
    Uncoverable(Vertex, Vertex),
}

/// An immutable simple undirected graph in compressed adjacency form.
///
/// Neighbour lists are sorted, which makes `has_edge` a binary search and
/// every traversal deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, rejecting self-loops,
    /// duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut offsets = vec![0; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Graph { offsets, targets })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { offsets: vec![0; n + 1], targets: Vec::new() }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("clique edges are valid")
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// True when the graph is connected and acyclic. The empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.m() + 1 == self.n() && self.components().len() == 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A set of vertices, stored as a sorted list without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn insert(&mut self, v: Vertex) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    /// Membership vector of length `n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    /// Renders the set with 1-based identifiers separated by spaces.
    pub fn to_external(&self) -> String {
        self.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
    }

    /// Parses a comma or whitespace separated list of 1-based identifiers.
    pub fn parse_external(text: &str, n: usize) -> Result<Self, GraphError> {
        let mut set = VertexSet::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let id: usize = tok
                .parse()
                .map_err(|_| GraphError::VertexOutOfRange { vertex: 0, n })?;
            if id == 0 || id > n {
                return Err(GraphError::VertexOutOfRange { vertex: id, n });
            }
            set.insert(id - 1);
        }
        Ok(set)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

/// True when every edge has an endpoint in `cover`.
pub fn is_vertex_cover(g: &Graph, cover: &VertexSet) -> bool {
    let mask = cover.to_mask(g.n());
    g.edges().all(|(u, v)| mask[u] || mask[v])
}

/// The graph obtained by deleting `removed`, with vertices renumbered
/// in increasing order of their original index.
#[derive(Clone, Debug)]
pub struct InducedGraph {
    pub graph: Graph,
    /// `original[i]` is the index in the source graph of new vertex `i`.
    pub original: Vec<Vertex>,
}

impl InducedGraph {
    /// Translates a set over the induced graph back to source indices.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.original[v]).collect()
    }
}

/// Deletes `removed` from `g`. Out-of-range entries are ignored.
pub fn induced_delete(g: &Graph, removed: &VertexSet) -> InducedGraph {
    let n = g.n();
    let mask = removed.to_mask(n.max(removed.iter().last().map_or(0, |v| v + 1)));
    let mut new_index = vec![usize::MAX; n];
    let mut original = Vec::new();
    for v in 0..n {
        if !mask[v] {
            new_index[v] = original.len();
            original.push(v);
        }
    }
    let edges = g
        .edges()
        .filter(|&(u, v)| !mask[u] && !mask[v])
        .map(|(u, v)| (new_index[u], new_index[v]));
    let graph = Graph::new(original.len(), edges).expect("subgraph of a simple graph is simple");
    InducedGraph { graph, original }
}

/// Why a `.gr` document was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrErrorKind {
    #[error("missing \"p <n> <m>\" header")]
    MissingHeader,
    #[error("malformed header, expected \"p <n> <m>\"")]
    MalformedHeader,
    #[error("malformed edge line, expected \"e <u> <v>\"")]
    MalformedEdge,
    #[error("endpoint {0} out of range 1..={1}")]
    EndpointOutOfRange(usize, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// A `.gr` parse failure at a 1-based line number (0 when the whole document is at fault).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct GrParseError {
    pub line: usize,
    pub kind: GrErrorKind,
}

/// Parses a `.gr` document: a `p <n> <m>` header followed by `m` lines
/// `e <u> <v>` with 1-based endpoints. Lines starting with `#` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph, GrParseError> {
    let err = |line, kind| GrParseError { line, kind };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match header {
            None => {
                if toks[0] != "p" {
                    return Err(err(line, GrErrorKind::MissingHeader));
                }
                let nums: Option<Vec<usize>> = toks[1..].iter().map(|t| t.parse().ok()).collect();
                match nums.as_deref() {
                    Some(&[n, m]) => header = Some((n, m)),
                    _ => return Err(err(line, GrErrorKind::MalformedHeader)),
                }
            }
            Some((n, _)) => {
                if toks[0] == "p" {
                    return Err(err(line, GrErrorKind::MalformedHeader));
                }
                if toks.len() != 3 || toks[0] != "e" {
                    return Err(err(line, GrErrorKind::MalformedEdge));
                }
                let parse = |t: &str| -> Result<usize, GrParseError> {
                    let id: usize = t.parse().map_err(|_| err(line, GrErrorKind::MalformedEdge))?;
                    if id == 0 || id > n {
                        return Err(err(line, GrErrorKind::EndpointOutOfRange(id, n)));
                    }
                    Ok(id)
                };
                let (u, v) = (parse(toks[1])?, parse(toks[2])?);
                if u == v {
                    return Err(err(line, GrErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(line, GrErrorKind::DuplicateEdge(u.min(v), u.max(v))));
                }
                edges.push((u - 1, v - 1));
            }
        }
    }
    let (n, m) = header.ok_or(err(last_line.max(1), GrErrorKind::MissingHeader))?;
    if edges.len() != m {
        return Err(err(last_line, GrErrorKind::EdgeCountMismatch { expected: m, found: edges.len() }));
    }
    Ok(Graph::new(n, edges).expect("validated while parsing"))
}

impl FromStr for Graph {
    type Err = GrParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

/// Serializes a graph in `.gr` format.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_rejects_bad_input() {
        let g = parse_graph("# tiny\np 3 2\ne 1 2\n# mid\ne 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let kind = |s: &str| parse_graph(s).unwrap_err();
        assert_eq!(kind("p 3\ne 1 2\n").kind, GrErrorKind::MalformedHeader);
        assert_eq!(kind("e 1 2\n").kind, GrErrorKind::MissingHeader);
        assert_eq!(kind("p 2 1\ne 1 3\n"), GrParseError { line: 2, kind: GrErrorKind::EndpointOutOfRange(3, 2) });
        assert_eq!(kind("p 2 2\ne 1 2\ne 2 1\n"), GrParseError { line: 3, kind: GrErrorKind::DuplicateEdge(1, 2) });
        assert_eq!(kind("p 2 1\ne 2 2\n").kind, GrErrorKind::SelfLoop(2));
        assert!(matches!(kind("p 3 2\ne 1 2\n").kind, GrErrorKind::EdgeCountMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn empty_graph_is_accepted() {
        let g = parse_graph("p 0 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
    }

    #[test]
    fn round_trips_through_text() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn induced_delete_renumbers() {
        let g = Graph::path(4);
        let h = induced_delete(&g, &VertexSet::from([1]));
        assert_eq!(h.original, vec![0, 2, 3]);
        assert_eq!(h.graph.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(h.lift(&VertexSet::from([1])), VertexSet::from([2]));
    }

    #[test]
    fn external_ids_are_one_based() {
        let s = VertexSet::parse_external("8,9", 9).unwrap();
        assert_eq!(s, VertexSet::from([7, 8]));
        assert_eq!(s.to_external(), "8 9");
        assert!(VertexSet::parse_external("0", 9).is_err());
    }
}
