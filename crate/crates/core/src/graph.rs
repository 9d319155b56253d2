//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Every composite builder documents where the vertices of its operands end up,
//! so construction traces can be replayed against the numbering.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// An undirected simple graph with bitset adjacency and a sorted edge list.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<Edge>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range endpoints.
    /// Duplicate edges (in either orientation) collapse to one.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g.rebuild_edges();
        Ok(g)
    }

    /// Builds from adjacency sets assumed symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut g = Graph {
            n: adj.len(),
            adj,
            edges: Vec::new(),
        };
        g.rebuild_edges();
        g
    }

    fn rebuild_edges(&mut self) {
        self.edges.clear();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    self.edges.push((u, v));
                }
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn neighbours(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `G[S]`, relabelled so that the i-th smallest member of `s` becomes vertex i.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Graph {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let k = sorted.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    pub fn induced_by_set(&self, s: &VertexSet) -> Graph {
        self.induced_subgraph(&s.to_vec())
    }

    /// Spanning subgraph keeping only the edges for which `keep` returns true.
    pub fn spanning_subgraph<F: FnMut(usize, Edge) -> bool>(&self, mut keep: F) -> Graph {
        let mut adj = vec![VertexSet::new(self.n); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if keep(i, (u, v)) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Whether every edge of `self` is an edge of `other` on the same vertex count.
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Adds an edge, returning a new graph.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }
}

/// `K_r`.
pub fn complete_graph(r: usize) -> Graph {
    complete_multipartite(r, 1)
}

/// `K_r(m)`: classes are the consecutive blocks `[i*m, (i+1)*m)`.
pub fn complete_multipartite(r: usize, m: usize) -> Graph {
    let n = r * m;
    let mut adj = vec![VertexSet::new(n); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if u / m.max(1) != v / m.max(1) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// `K_{a,b}` with the a-side first.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_join(a, &Graph::empty(b))
}

/// The cycle `0-1-..-(n-1)-0`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

/// The path `0-1-..-(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("valid petersen")
}

/// `G + H`: `g` keeps its labels, `h` is shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    Graph::from_edges(
        g.n() + h.n(),
        g.edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + shift, v + shift))),
    )
    .expect("disjoint union of valid graphs")
}

/// Joins `a_size` independent vertices (labels `0..a_size`) completely to a copy
/// of `g` (labels shifted by `a_size`).
pub fn complete_join(a_size: usize, g: &Graph) -> Graph {
    let n = a_size + g.n();
    let mut adj = vec![VertexSet::new(n); n];
    for a in 0..a_size {
        for b in a_size..n {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    for &(u, v) in g.edges() {
        adj[u + a_size].insert(v + a_size);
        adj[v + a_size].insert(u + a_size);
    }
    Graph::from_adjacency(adj)
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(0).n(), 0);
        assert_eq!(complete_graph(0).edge_count(), 0);
        assert_eq!(complete_graph(3).edge_count(), 3);
        assert_eq!(complete_graph(6).edge_count(), 15);
    }

    #[test]
    fn multipartite_sizes() {
        let g = complete_multipartite(1, 5);
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        let oct = complete_multipartite(3, 2);
        assert_eq!((oct.n(), oct.edge_count()), (6, 12));
        assert!(!oct.has_edge(0, 1));
        assert!(oct.has_edge(1, 2));
        assert_eq!(complete_multipartite(2, 3).edge_count(), 9);
    }

    #[test]
    fn union_examples() {
        let g = disjoint_union(&complete_graph(3), &complete_graph(2));
        assert_eq!((g.n(), g.edge_count()), (5, 4));
        assert!(g.has_edge(3, 4));
        let c5 = cycle(5);
        assert_eq!(disjoint_union(&c5, &Graph::empty(0)), c5);
        let e = disjoint_union(&Graph::empty(2), &Graph::empty(3));
        assert_eq!((e.n(), e.edge_count()), (5, 0));
    }

    #[test]
    fn join_examples() {
        let k = complete_join(4, &Graph::empty(32));
        assert_eq!(k, complete_bipartite(4, 32));
        assert_eq!(k.edge_count(), 128);
        let c5 = cycle(5);
        assert_eq!(complete_join(0, &c5), c5);
        let j = complete_join(2, &complete_graph(2));
        assert_eq!(j.edge_count(), 5);
        assert!(!j.has_edge(0, 1));
        assert!(j.has_edge(2, 3));
    }

    #[test]
    fn induced_examples() {
        assert_eq!(complete_graph(5).induced_subgraph(&[4, 0, 2]), complete_graph(3));
        assert_eq!(cycle(5).induced_subgraph(&[1, 2]), complete_graph(2));
        assert_eq!(cycle(5).induced_subgraph(&[]).n(), 0);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn json_shape() {
        let g = cycle(3);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }
}
