//! Circuits, girth and independence number of uniform hypergraphs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Vertex;
use crate::hypergraph::Hypergraph;

use super::girth::Girth;

/// Distinct vertices `v_1..v_s` and distinct hyperedges `e_1..e_s` (as indices
/// into the hypergraph's list) with `v_i, v_{i+1} in e_i` and `v_s, v_1 in e_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub vertices: Vec<Vertex>,
    pub hyperedges: Vec<usize>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }

    pub fn is_valid(&self, h: &Hypergraph) -> bool {
        let s = self.vertices.len();
        if s < 2 || self.hyperedges.len() != s {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.hyperedges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != s || es.len() != s || es.last().is_some_and(|&e| e >= h.edge_count()) {
            return false;
        }
        (0..s).all(|i| {
            let e = h.members(self.hyperedges[i]);
            e.contains(self.vertices[i]) && e.contains(self.vertices[(i + 1) % s])
        })
    }
}

/// A shortest circuit, if any circuit exists.
pub fn shortest_circuit(h: &Hypergraph) -> Option<Circuit> {
    shortest_circuit_within(h, usize::MAX)
}

/// A shortest circuit of length at most `max_len`, if one exists.
///
/// Circuits are exactly the cycles of the vertex/hyperedge incidence graph
/// (length halved), so this is a breadth-first girth search there.
pub fn shortest_circuit_within(h: &Hypergraph, max_len: usize) -> Option<Circuit> {
    let n = h.n();
    let total = n + h.edge_count();
    let adj: Vec<Vec<usize>> = (0..total)
        .map(|x| {
            if x < n {
                h.incident(x).iter().map(|&e| n + e).collect()
            } else {
                h.hyperedges()[x - n].clone()
            }
        })
        .collect();
    // incidence cycles are twice as long as circuits
    let mut best_len = max_len.saturating_mul(2).saturating_add(1);
    let mut best: Option<(usize, usize, usize)> = None;
    let mut tree = BfsTree::new(total);
    for root in 0..total {
        if adj[root].len() < 2 {
            continue;
        }
        if let Some((len, x, y)) = tree.shortest_cross(&adj, root, best_len) {
            best_len = len;
            best = Some((root, x, y));
        }
    }
    let (root, x, y) = best?;
    tree.shortest_cross(&adj, root, usize::MAX);
    let mut px = tree.path_to_root(x, root);
    let mut py = tree.path_to_root(y, root);
    while px.len() >= 2 && py.len() >= 2 && px[px.len() - 2] == py[py.len() - 2] {
        px.pop();
        py.pop();
    }
    // x .. lca, then back down to y; the cross edge y-x closes it
    py.pop();
    let mut walk = px;
    walk.extend(py.into_iter().rev());
    let start = walk.iter().position(|&v| v < n).expect("cycle alternates");
    walk.rotate_left(start);
    let vertices = walk.iter().step_by(2).copied().collect();
    let hyperedges = walk.iter().skip(1).step_by(2).map(|&e| e - n).collect();
    let c = Circuit { vertices, hyperedges };
    debug_assert!(c.is_valid(h), "reconstructed circuit {c:?} is invalid");
    Some(c)
}

struct BfsTree {
    dist: Vec<usize>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
}

impl BfsTree {
    fn new(size: usize) -> Self {
        BfsTree {
            dist: vec![usize::MAX; size],
            parent: vec![usize::MAX; size],
            queue: VecDeque::new(),
        }
    }

    /// BFS from `root`; returns the shortest closed walk `(length, x, y)` through
    /// a non-tree edge `x-y` with length below `below`.
    fn shortest_cross(&mut self, adj: &[Vec<usize>], root: usize, below: usize) -> Option<(usize, usize, usize)> {
        self.dist.iter_mut().for_each(|d| *d = usize::MAX);
        self.parent.iter_mut().for_each(|p| *p = usize::MAX);
        self.dist[root] = 0;
        self.queue.clear();
        self.queue.push_back(root);
        let mut found: Option<(usize, usize, usize)> = None;
        let mut bound = below;
        while let Some(x) = self.queue.pop_front() {
            // any cross edge from depth d closes a walk of length >= 2d
            if 2 * self.dist[x] >= bound {
                break;
            }
            for &y in &adj[x] {
                if self.dist[y] == usize::MAX {
                    self.dist[y] = self.dist[x] + 1;
                    self.parent[y] = x;
                    self.queue.push_back(y);
                } else if self.parent[x] != y && self.parent[y] != x {
                    let len = self.dist[x] + self.dist[y] + 1;
                    if len < bound {
                        bound = len;
                        found = Some((len, x, y));
                    }
                }
            }
        }
        found
    }

    fn path_to_root(&self, mut v: usize, root: usize) -> Vec<usize> {
        let mut p = vec![v];
        while v != root {
            v = self.parent[v];
            p.push(v);
        }
        p
    }
}

pub fn hypergraph_girth(h: &Hypergraph) -> Girth {
    match shortest_circuit(h) {
        Some(c) => Girth::Finite(c.len()),
        None => Girth::Infinite,
    }
}

/// Whether the girth is strictly greater than `n_cap`.
pub fn girth_exceeds(h: &Hypergraph, n_cap: usize) -> bool {
    shortest_circuit_within(h, n_cap).is_none()
}

pub fn hypergraph_independence_number(h: &Hypergraph) -> usize {
    maximum_independent_set(h).len()
}

/// A largest vertex set containing no hyperedge, sorted ascending.
pub fn maximum_independent_set(h: &Hypergraph) -> Vec<Vertex> {
    let n = h.n();
    let mut chosen = VertexSet::new(n);
    let mut cand = VertexSet::full(n);
    // vertices in no hyperedge are always free
    for v in 0..n {
        if h.incident(v).is_empty() {
            chosen.insert(v);
            cand.remove(v);
        }
    }
    let mut best = chosen.clone();
    let mut s = IndependentSearch { h, best: &mut best };
    s.branch(&mut chosen, cand);
    best.to_vec()
}

struct IndependentSearch<'a> {
    h: &'a Hypergraph,
    best: &'a mut VertexSet,
}

impl IndependentSearch<'_> {
    /// Upper bound on how many of `cand` can still be added: every hyperedge
    /// whose members outside `cand` are all chosen loses at least one of its
    /// candidate members, and disjoint such traces lose one each.
    fn bound(&self, chosen: &VertexSet, cand: &VertexSet) -> usize {
        let mut used = VertexSet::new(self.h.n());
        let mut lost = 0;
        for i in 0..self.h.edge_count() {
            let e = self.h.members(i);
            let mut trace = e.intersection(cand);
            if trace.is_empty() || !trace.is_disjoint(&used) {
                continue;
            }
            let mut outside = e.clone();
            outside.difference_with(cand);
            if outside.is_subset(chosen) {
                lost += 1;
                trace.union_with(&used);
                used = trace;
            }
        }
        cand.len() - lost
    }

    fn branch(&mut self, chosen: &mut VertexSet, mut cand: VertexSet) {
        let Some(v) = cand.first() else {
            if chosen.len() > self.best.len() {
                *self.best = chosen.clone();
            }
            return;
        };
        if chosen.len() + self.bound(chosen, &cand) <= self.best.len() {
            return;
        }
        cand.remove(v);
        // include v, forbidding any vertex that would now complete a hyperedge
        chosen.insert(v);
        let mut inc = cand.clone();
        for &e in self.h.incident(v) {
            let mut rest = self.h.members(e).clone();
            rest.difference_with(chosen);
            if rest.len() == 1 {
                inc.remove(rest.first().expect("one vertex left"));
            }
        }
        self.branch(chosen, inc);
        chosen.remove(v);
        self.branch(chosen, cand);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    pub(crate) fn fano() -> Hypergraph {
        Hypergraph::new(
            7,
            3,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn girth_examples() {
        let two = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(hypergraph_girth(&two), Girth::Finite(2));
        assert_eq!(hypergraph_girth(&fano()), Girth::Finite(3));
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(hypergraph_girth(&single), Girth::Infinite);
        assert_eq!(hypergraph_girth(&Hypergraph::from_graph(&cycle(7))), Girth::Finite(7));
    }

    #[test]
    fn circuits_are_valid() {
        for h in [fano(), Hypergraph::from_graph(&cycle(6))] {
            let c = shortest_circuit(&h).unwrap();
            assert!(c.is_valid(&h), "{c:?}");
        }
        assert!(shortest_circuit_within(&Hypergraph::from_graph(&cycle(6)), 5).is_none());
        assert!(girth_exceeds(&Hypergraph::from_graph(&cycle(6)), 5));
        assert!(!girth_exceeds(&Hypergraph::from_graph(&cycle(6)), 6));
    }

    #[test]
    fn independence_examples() {
        assert_eq!(hypergraph_independence_number(&Hypergraph::from_graph(&cycle(5))), 2);
        let single = Hypergraph::new(5, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(hypergraph_independence_number(&single), 4);
        assert_eq!(hypergraph_independence_number(&fano()), 4);
    }
}
