use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

/// Size of the largest complete subgraph.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// A maximum clique, sorted ascending. Branch and bound over candidate sets.
pub fn maximum_clique(g: &Graph) -> Vec<Vertex> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, g.vertex_set(), &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, current: &mut Vec<Vertex>, mut cand: VertexSet, best: &mut Vec<Vertex>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.len() <= best.len() {
            return;
        }
        cand.remove(v);
        current.push(v);
        expand(g, current, cand.intersection(g.neighbours(v)), best);
        current.pop();
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
}
