//! Exact decision of `F -> (H)_q` by depth-first search over partial edge colourings.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::subgraph::PatternPlan;

use super::colouring::{find_monochromatic_copy, EdgeColouring};

/// Limit on search nodes (colour assignments tried).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 200_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(Self::DEFAULT_NODES)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowOutcome {
    /// Every q-colouring contains a monochromatic copy.
    Arrows,
    /// A q-colouring with no monochromatic copy, checked before return.
    Avoids(EdgeColouring),
}

impl ArrowOutcome {
    pub fn arrows(&self) -> bool {
        matches!(self, ArrowOutcome::Arrows)
    }

    pub fn certificate(&self) -> Option<&EdgeColouring> {
        match self {
            ArrowOutcome::Arrows => None,
            ArrowOutcome::Avoids(c) => Some(c),
        }
    }
}

/// Decides whether every q-edge-colouring of `f` has a monochromatic copy of `h`.
pub fn arrows(f: &Graph, h: &Graph, q: usize, budget: Budget) -> Result<ArrowOutcome> {
    arrows_counting(f, h, q, budget).map(|(o, _)| o)
}

/// As [`arrows`], also returning the number of search nodes used.
pub fn arrows_counting(f: &Graph, h: &Graph, q: usize, budget: Budget) -> Result<(ArrowOutcome, u64)> {
    if q < 2 {
        return Err(Error::Precondition(format!("need q >= 2 colours, got {q}")));
    }
    let fallback = || EdgeColouring::monochromatic(f.clone(), q, 1);
    if f.n() < h.n() {
        return Ok((ArrowOutcome::Avoids(fallback()?), 0));
    }
    if h.is_edgeless() {
        // enough vertices is all an edgeless copy needs
        return Ok((ArrowOutcome::Arrows, 0));
    }
    let mut search = ArrowSearch::new(f, h, q, budget);
    let found = search.run(0, 0)?;
    let nodes = search.nodes;
    if !found {
        return Ok((ArrowOutcome::Arrows, nodes));
    }
    let mut colours = vec![0; f.edge_count()];
    for (i, &(u, v)) in search.order.iter().enumerate() {
        colours[f.edge_index(u, v).expect("edge of f")] = search.assigned[i] + 1;
    }
    let cert = EdgeColouring::new(f.clone(), q, colours)?;
    assert!(
        find_monochromatic_copy(&cert, h).is_none(),
        "arrowing certificate failed its final check"
    );
    Ok((ArrowOutcome::Avoids(cert), nodes))
}

struct ArrowSearch<'a> {
    q: usize,
    budget: Budget,
    nodes: u64,
    order: Vec<Edge>,
    assigned: Vec<usize>,
    /// per colour, the adjacency of that colour class so far
    classes: Vec<Vec<VertexSet>>,
    plans: Vec<PatternPlan>,
    pattern: &'a Graph,
}

impl<'a> ArrowSearch<'a> {
    fn new(f: &Graph, h: &'a Graph, q: usize, budget: Budget) -> Self {
        // column order (as in graph6) closes small cliques early
        let mut order = f.edges().to_vec();
        order.sort_by_key(|&(u, v)| (v, u));
        let plans = h.edges().iter().map(|&(a, b)| PatternPlan::anchored(h, a, b)).collect();
        ArrowSearch {
            q,
            budget,
            nodes: 0,
            assigned: vec![0; order.len()],
            order,
            classes: vec![vec![VertexSet::new(f.n()); f.n()]; q],
            plans,
            pattern: h,
        }
    }

    /// Whether colour class `c` has a copy of the pattern through edge `(u, v)`.
    fn completes_copy(&self, c: usize, u: usize, v: usize) -> bool {
        let adj = &self.classes[c];
        let class_edges: usize = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        if class_edges < self.pattern.edge_count() {
            return false;
        }
        self.plans
            .iter()
            .any(|p| p.find(adj, &[u, v]).is_some() || p.find(adj, &[v, u]).is_some())
    }

    /// Returns true when a complete colouring avoiding the pattern is found.
    fn run(&mut self, depth: usize, used: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let (u, v) = self.order[depth];
        // colours are interchangeable, so a fresh colour is only tried once
        let limit = (used + 1).min(self.q);
        for c in 0..limit {
            self.nodes += 1;
            if self.nodes > self.budget.max_nodes {
                return Err(Error::BudgetExhausted {
                    budget: self.budget.max_nodes,
                    nodes: self.nodes,
                });
            }
            self.classes[c][u].insert(v);
            self.classes[c][v].insert(u);
            if !self.completes_copy(c, u, v) {
                self.assigned[depth] = c;
                if self.run(depth + 1, used.max(c + 1))? {
                    return Ok(true);
                }
            }
            self.classes[c][u].remove(v);
            self.classes[c][v].remove(u);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, disjoint_union, path};

    fn k3_plus_k2() -> Graph {
        disjoint_union(&complete_graph(3), &complete_graph(2))
    }

    #[test]
    fn k6_arrows_k3() {
        assert!(arrows(&complete_graph(6), &complete_graph(3), 2, Budget::default())
            .unwrap()
            .arrows());
    }

    #[test]
    fn k6_avoids_k3_plus_k2() {
        let out = arrows(&complete_graph(6), &k3_plus_k2(), 2, Budget::default()).unwrap();
        let cert = out.certificate().expect("certificate");
        assert!(find_monochromatic_copy(cert, &k3_plus_k2()).is_none());
    }

    #[test]
    fn k5_avoids_k3() {
        let out = arrows(&complete_graph(5), &complete_graph(3), 2, Budget::default()).unwrap();
        assert!(find_monochromatic_copy(out.certificate().unwrap(), &complete_graph(3)).is_none());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let err = arrows(&complete_graph(10), &complete_graph(4), 2, Budget::nodes(50)).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted { budget: 50, .. }));
    }

    #[test]
    fn edgeless_pattern() {
        assert!(arrows(&Graph::empty(3), &Graph::empty(3), 2, Budget::default())
            .unwrap()
            .arrows());
        assert!(!arrows(&Graph::empty(2), &Graph::empty(3), 2, Budget::default())
            .unwrap()
            .arrows());
    }

    #[test]
    fn small_cases() {
        // any edge is monochromatic
        assert!(arrows(&path(2), &path(2), 3, Budget::default()).unwrap().arrows());
        // P3 splits into two colours
        assert!(!arrows(&path(3), &path(3), 2, Budget::default()).unwrap().arrows());
        // C5 in two colours always has a monochromatic P3 (odd cycle)
        assert!(arrows(&cycle(5), &path(3), 2, Budget::default()).unwrap().arrows());
        assert!(!arrows(&cycle(4), &path(3), 2, Budget::default()).unwrap().arrows());
    }
}
