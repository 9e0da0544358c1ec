//! Simple undirected graphs with canonical edge indexing, the distance-two
//! "sees" relation between edges, and text formats.

mod edge_list;
mod graph6;

pub use edge_list::parse_edge_list;
pub use graph6::{parse_graph6, to_graph6};

use std::path::Path;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// A finite simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; an edge's
/// index into that list is its id. Adjacency lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adjacency: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::InvalidVertex(a));
            }
            if b >= n {
                return Err(Error::InvalidVertex(b));
            }
            if a == b {
                return Err(Error::Precondition(format!("self-loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, norm))
    }

    /// `edges` must already be normalized, sorted and deduplicated.
    fn from_sorted_unique(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, adjacency, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(Vertex, Vertex)> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdge(e))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Id of the edge joining `u` and `v`, if any.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Ids of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> =
            self.adjacency[v].iter().filter_map(|&w| self.edge_id(v, w)).collect();
        ids.sort_unstable();
        ids
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// `true` iff `e != f` and the two edges share an endpoint or are joined by a third edge.
    pub fn edge_sees(&self, e: EdgeId, f: EdgeId) -> Result<bool> {
        let (a, b) = self.edge(e)?;
        let (c, d) = self.edge(f)?;
        if e == f {
            return Ok(false);
        }
        if a == c || a == d || b == c || b == d {
            return Ok(true);
        }
        Ok(self.has_edge(a, c) || self.has_edge(a, d) || self.has_edge(b, c) || self.has_edge(b, d))
    }

    /// Removes `v` and its edges. Returns the new graph and the old-to-new vertex map
    /// (`None` for `v` itself); remaining ids keep their relative order.
    pub fn delete_vertex(&self, v: Vertex) -> Result<(Graph, Vec<Option<Vertex>>)> {
        if v >= self.n {
            return Err(Error::InvalidVertex(v));
        }
        let map: Vec<Option<Vertex>> = (0..self.n)
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)))
            .collect();
        // Order-preserving relabeling keeps the list sorted.
        Ok((Graph::from_sorted_unique(self.n - 1, edges), map))
    }

    /// Relabels vertices: new id of `v` is `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(Vertex, Vertex)> =
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges(self.n, &edges).expect("permutation preserves simplicity")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph::from_sorted_unique(self.n + other.n, edges)
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }

    // A few named families used throughout the tests and examples.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Graph::from_sorted_unique(n, edges)
    }

    /// Parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_sorted_unique(a + b, edges)
    }

    /// Center `0`, leaves `1..=k`.
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }
}

/// Per-edge sorted lists of the edges each edge sees (the square of the line graph).
#[derive(Clone, Debug)]
pub struct ConflictGraph<'g> {
    base: &'g Graph,
    sees: Vec<Vec<EdgeId>>,
}

impl<'g> ConflictGraph<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let m = g.m();
        let mut sees = Vec::with_capacity(m);
        let mut mark = vec![usize::MAX; m];
        let incident: Vec<Vec<EdgeId>> = (0..g.n()).map(|v| g.incident_edges(v)).collect();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let mut list = Vec::new();
            for &x in &[u, v] {
                // Edges at x and at every neighbor of x.
                let near = std::iter::once(x).chain(g.neighbors(x).iter().copied());
                for w in near {
                    for &f in &incident[w] {
                        if f != e && mark[f] != e {
                            mark[f] = e;
                            list.push(f);
                        }
                    }
                }
            }
            list.sort_unstable();
            sees.push(list);
        }
        ConflictGraph { base: g, sees }
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn len(&self) -> usize {
        self.sees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sees.is_empty()
    }

    pub fn sees(&self, e: EdgeId) -> &[EdgeId] {
        &self.sees[e]
    }

    pub fn sees_pair(&self, e: EdgeId, f: EdgeId) -> bool {
        self.sees[e].binary_search(&f).is_ok()
    }
}

pub fn build_conflict_graph(g: &Graph) -> ConflictGraph<'_> {
    ConflictGraph::new(g)
}

/// Input encodings accepted by the file readers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edges,
}

impl Format {
    /// `.g6` is graph6, `.edges` is an edge list; anything else is unknown.
    pub fn infer(path: &Path) -> Option<Format> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Some(Format::Graph6),
            Some("edges") => Some(Format::Edges),
            _ => None,
        }
    }
}

/// Parses a whole document: one graph per non-blank line for graph6 (an optional
/// `>>graph6<<` header is skipped), a single graph for edge lists.
pub fn parse_document(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| parse_graph6(l.strip_prefix(">>graph6<<").unwrap_or(l)))
            .collect(),
        Format::Edges => Ok(vec![parse_edge_list(text)?]),
    }
}

pub fn read_graphs(path: &Path, format: Option<Format>) -> Result<Vec<Graph>> {
    let format = format.or_else(|| Format::infer(path)).ok_or_else(|| {
        Error::Config(format!(
            "cannot infer format of {}; pass --format graph6|edges",
            path.display()
        ))
    })?;
    let text = std::fs::read_to_string(path)?;
    parse_document(&text, format)
}
