//! Non-induced subgraph embedding by bitset backtracking.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

/// An injective map from a pattern's vertices into a host: `image[i]` is the
/// host vertex receiving pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding {
    image: Vec<Vertex>,
}

impl Embedding {
    pub fn new(image: Vec<Vertex>) -> Self {
        Embedding { image }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    #[inline]
    pub fn map(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.image.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Whether this is an injective map sending every pattern edge onto a host edge.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        self.domain_size() == pattern.n()
            && self.image.iter().all(|&v| v < host.n())
            && self.is_injective()
            && pattern
                .edges()
                .iter()
                .all(|&(a, b)| host.has_edge(self.map(a), self.map(b)))
    }
}

/// A search order for one pattern graph, reusable across many hosts.
#[derive(Clone, Debug)]
pub struct PatternPlan {
    n: usize,
    order: Vec<Vertex>,
    /// For each position, the earlier positions adjacent to it in the pattern.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl PatternPlan {
    pub fn new(pattern: &Graph) -> Self {
        Self::with_prefix(pattern, &[])
    }

    /// A plan whose order starts with the pattern edge `(a, b)`, for searches
    /// that pin that edge onto a given host edge.
    pub fn anchored(pattern: &Graph, a: Vertex, b: Vertex) -> Self {
        debug_assert!(pattern.has_edge(a, b));
        Self::with_prefix(pattern, &[a, b])
    }

    fn with_prefix(pattern: &Graph, prefix: &[Vertex]) -> Self {
        let n = pattern.n();
        let degree: Vec<usize> = (0..n).map(|v| pattern.degree(v)).collect();
        let mut placed = vec![false; n];
        let mut order: Vec<Vertex> = Vec::with_capacity(n);
        for &v in prefix {
            placed[v] = true;
            order.push(v);
        }
        while order.len() < n {
            // most already-placed neighbours, then highest degree, then lowest label
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                    (links, degree[v], std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| pattern.has_edge(order[j], v)).collect())
            .collect();
        PatternPlan { n, order, back, degree }
    }

    pub fn pattern_size(&self) -> usize {
        self.n
    }

    /// Searches `host_adj` for a copy, with the first `fixed.len()` vertices of the
    /// plan's order pinned to `fixed`. Returns the image indexed by pattern vertex.
    pub fn find(&self, host_adj: &[VertexSet], fixed: &[Vertex]) -> Option<Vec<Vertex>> {
        let host_n = host_adj.len();
        if host_n < self.n {
            return None;
        }
        let host_degree: Vec<usize> = host_adj.iter().map(VertexSet::len).collect();
        let mut image = vec![usize::MAX; self.n];
        let mut used = VertexSet::new(host_n);
        for (pos, &hv) in fixed.iter().enumerate() {
            let pv = self.order[pos];
            if used.contains(hv) || host_degree[hv] < self.degree[pv] {
                return None;
            }
            for &q in &self.back[pos] {
                if !host_adj[image[self.order[q]]].contains(hv) {
                    return None;
                }
            }
            image[pv] = hv;
            used.insert(hv);
        }
        let all = VertexSet::full(host_n);
        if self.extend(fixed.len(), host_adj, &host_degree, &all, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    fn extend(
        &self,
        pos: usize,
        host_adj: &[VertexSet],
        host_degree: &[usize],
        all: &VertexSet,
        image: &mut [Vertex],
        used: &mut VertexSet,
    ) -> bool {
        if pos == self.n {
            return true;
        }
        let pv = self.order[pos];
        let mut cand = match self.back[pos].split_first() {
            Some((&first, rest)) => {
                let mut c = host_adj[image[self.order[first]]].clone();
                for &q in rest {
                    c.intersect_with(&host_adj[image[self.order[q]]]);
                }
                c
            }
            None => all.clone(),
        };
        cand.difference_with(used);
        let need = self.degree[pv];
        for hv in cand.iter() {
            if host_degree[hv] < need {
                continue;
            }
            image[pv] = hv;
            used.insert(hv);
            if self.extend(pos + 1, host_adj, host_degree, all, image, used) {
                return true;
            }
            used.remove(hv);
        }
        image[pv] = usize::MAX;
        false
    }
}

/// Finds some copy of `pattern` in `host` (not necessarily induced).
/// Deterministic: the same inputs always give the same embedding.
pub fn find_subgraph_copy(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    find_copy_in_adjacency(host.adjacency(), pattern)
}

pub fn find_copy_in_adjacency(host_adj: &[VertexSet], pattern: &Graph) -> Option<Embedding> {
    if pattern.edge_count() > 0 {
        let edges: usize = host_adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        if edges < pattern.edge_count() {
            return None;
        }
    }
    PatternPlan::new(pattern).find(host_adj, &[]).map(Embedding::new)
}

/// Same vertex count, same edge count and a subgraph embedding: an isomorphism.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && find_subgraph_copy(a, b).is_some()
}
