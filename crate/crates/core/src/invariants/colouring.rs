use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

use super::clique::clique_number;

/// A vertex colouring with colours `1..=t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColouring {
    pub t: usize,
    pub colours: Vec<usize>,
}

impl VertexColouring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n()
            && self.colours.iter().all(|&c| (1..=self.t).contains(&c))
            && g.edges().iter().all(|&(u, v)| self.colours[u] != self.colours[v])
    }

    pub fn class(&self, colour: usize) -> Vec<Vertex> {
        (0..self.colours.len()).filter(|&v| self.colours[v] == colour).collect()
    }

    pub fn class_size(&self, colour: usize) -> usize {
        self.colours.iter().filter(|&&c| c == colour).count()
    }
}

/// Exact chromatic number with an optimal proper colouring as witness.
pub fn chromatic_number(g: &Graph) -> (usize, VertexColouring) {
    let n = g.n();
    if n == 0 {
        return (0, VertexColouring { t: 0, colours: vec![] });
    }
    if g.is_edgeless() {
        return (
            1,
            VertexColouring {
                t: 1,
                colours: vec![1; n],
            },
        );
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.t;
    let lower = clique_number(g);
    for k in lower..upper {
        if let Some(c) = k_colouring(g, k) {
            return (k, c);
        }
    }
    (upper, greedy)
}

/// A proper colouring with at most `k` colours, if one exists. The returned
/// colouring has `t = k`.
pub fn k_colouring(g: &Graph, k: usize) -> Option<VertexColouring> {
    let n = g.n();
    if n == 0 {
        return Some(VertexColouring { t: k, colours: vec![] });
    }
    if k == 0 {
        return None;
    }
    if g.is_edgeless() || k >= n {
        let colours = (0..n).map(|v| if g.is_edgeless() { 1 } else { v + 1 }).collect();
        return Some(VertexColouring { t: k, colours });
    }
    let mut search = ColourSearch {
        g,
        k,
        colour: vec![0; n],
        classes: vec![VertexSet::new(n); k],
        uncoloured: VertexSet::full(n),
    };
    if search.solve(0) {
        Some(VertexColouring {
            t: k,
            colours: search.colour,
        })
    } else {
        None
    }
}

pub fn is_k_colourable(g: &Graph, k: usize) -> bool {
    k_colouring(g, k).is_some()
}

struct ColourSearch<'a> {
    g: &'a Graph,
    k: usize,
    /// 1-based colour, 0 = uncoloured
    colour: Vec<usize>,
    classes: Vec<VertexSet>,
    uncoloured: VertexSet,
}

impl ColourSearch<'_> {
    fn saturation(&self, v: Vertex, used: usize) -> usize {
        let nb = self.g.neighbours(v);
        self.classes[..used].iter().filter(|c| !c.is_disjoint(nb)).count()
    }

    fn solve(&mut self, used: usize) -> bool {
        // DSATUR branching: most saturated, then most uncoloured neighbours, then lowest label
        let Some(v) = self.uncoloured.iter().max_by_key(|&v| {
            (
                self.saturation(v, used),
                self.g.neighbours(v).intersection_len(&self.uncoloured),
                std::cmp::Reverse(v),
            )
        }) else {
            return true;
        };
        let nb = self.g.neighbours(v).clone();
        let limit = (used + 1).min(self.k);
        self.uncoloured.remove(v);
        for c in 0..limit {
            if !self.classes[c].is_disjoint(&nb) {
                continue;
            }
            self.classes[c].insert(v);
            self.colour[v] = c + 1;
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.classes[c].remove(v);
            self.colour[v] = 0;
        }
        self.uncoloured.insert(v);
        false
    }
}

fn dsatur_greedy(g: &Graph) -> VertexColouring {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut uncoloured = VertexSet::full(n);
    let mut t = 0;
    while let Some(v) = uncoloured.iter().max_by_key(|&v| {
        let mut seen: Vec<usize> = g.neighbours(v).iter().map(|w| colour[w]).filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        (seen.len(), g.degree(v), std::cmp::Reverse(v))
    }) {
        let c = (1..)
            .find(|&c| g.neighbours(v).iter().all(|w| colour[w] != c))
            .expect("some colour is free");
        colour[v] = c;
        t = t.max(c);
        uncoloured.remove(v);
    }
    VertexColouring { t, colours: colour }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multipartite, cycle, petersen};

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&cycle(5)).0, 3);
        assert_eq!(chromatic_number(&complete_multipartite(4, 3)).0, 4);
        let (chi, w) = chromatic_number(&petersen());
        assert_eq!(chi, 3);
        assert!(w.is_proper(&petersen()));
    }

    #[test]
    fn conventions() {
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        assert_eq!(chromatic_number(&Graph::empty(4)).0, 1);
        assert_eq!(chromatic_number(&complete_graph(7)).0, 7);
    }

    #[test]
    fn k_colouring_bounds() {
        assert!(k_colouring(&cycle(5), 2).is_none());
        let c = k_colouring(&cycle(5), 3).unwrap();
        assert!(c.is_proper(&cycle(5)));
        assert!(k_colouring(&complete_graph(3), 0).is_none());
        assert!(k_colouring(&Graph::empty(0), 0).is_some());
    }
}
