use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A k-uniform hypergraph. Hyperedges are kept sorted ascending and the list
/// is sorted lexicographically, so equal hypergraphs compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    hyperedges: Vec<Vec<Vertex>>,
    members: Vec<VertexSet>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, k: usize, hyperedges: Vec<Vec<Vertex>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidHypergraph(format!("uniformity {k} < 2")));
        }
        let mut edges = Vec::with_capacity(hyperedges.len());
        for mut e in hyperedges {
            e.sort_unstable();
            if e.len() != k {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e:?} has size {} but k = {k}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!("hyperedge {e:?} repeats a vertex")));
            }
            if e.last().is_some_and(|&v| v >= n) {
                return Err(Error::InvalidHypergraph(format!(
                    "hyperedge {e:?} out of range for {n} vertices"
                )));
            }
            edges.push(e);
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!("duplicate hyperedge {:?}", w[0])));
        }
        let members = edges
            .iter()
            .map(|e| VertexSet::from_iter_with_capacity(n, e.iter().copied()))
            .collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Ok(Hypergraph {
            n,
            k,
            hyperedges: edges,
            members,
            incidence,
        })
    }

    /// A graph viewed as a 2-uniform hypergraph.
    pub fn from_graph(g: &crate::graph::Graph) -> Self {
        Hypergraph::new(g.n(), 2, g.edges().iter().map(|&(u, v)| vec![u, v]).collect())
            .expect("graph edges form a valid 2-uniform hypergraph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn hyperedges(&self) -> &[Vec<Vertex>] {
        &self.hyperedges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// Members of hyperedge `i` as a bitset.
    #[inline]
    pub fn members(&self, i: usize) -> &VertexSet {
        &self.members[i]
    }

    /// Indices of the hyperedges containing `v`.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v]
    }

    /// Index of the first hyperedge (in list order) lying entirely inside `s`.
    pub fn hyperedge_within(&self, s: &VertexSet) -> Option<usize> {
        self.members.iter().position(|e| e.is_subset(s))
    }

    /// Drops hyperedge `i`, keeping the vertex set.
    pub fn without_edge(&self, i: usize) -> Hypergraph {
        let edges = self
            .hyperedges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph::new(self.n, self.k, edges).expect("subset of valid hyperedges")
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Hypergraph(n={}, k={}, hyperedges={:?})",
            self.n, self.k, self.hyperedges
        )
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    k: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphRepr {
            n: self.n,
            k: self.k,
            hyperedges: self.hyperedges.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let r = HypergraphRepr::deserialize(deserializer)?;
        Hypergraph::new(r.n, r.k, r.hyperedges).map_err(serde::de::Error::custom)
    }
}
