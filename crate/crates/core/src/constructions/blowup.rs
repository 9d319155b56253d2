//! `L(G, eps, N)`: a copy of `G` placed in every hyperedge of a uniform
//! hypergraph with girth above `N` and independence below `eps * n`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::invariants::{girth_exceeds, hypergraph_independence_number};
use crate::subgraph::Embedding;

use super::rational::Rational;
use super::search::{hypergraph_search, SearchConfig};

/// A recorded blow-up. `embeddings[i]` places `base` on `backing.hyperedges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupTrace {
    pub base: Graph,
    pub eps: Rational,
    pub n_cap: usize,
    pub backing: Hypergraph,
    pub embeddings: Vec<Embedding>,
    pub result: Graph,
}

impl BlowupTrace {
    /// Re-checks the structural invariants, e.g. after loading from JSON.
    /// The backing's girth and independence are not recomputed here.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTrace(m));
        if self.backing.k() != self.base.n() {
            return bad(format!(
                "backing is {}-uniform but base has {} vertices",
                self.backing.k(),
                self.base.n()
            ));
        }
        if self.result.n() != self.backing.n() {
            return bad("result and backing vertex counts differ".into());
        }
        if self.embeddings.len() != self.backing.edge_count() {
            return bad("one embedding per hyperedge required".into());
        }
        for (e, emb) in self.backing.hyperedges().iter().zip(&self.embeddings) {
            let mut image = emb.image().to_vec();
            image.sort_unstable();
            if image != *e {
                return bad(format!("embedding {:?} does not cover hyperedge {e:?}", emb.image()));
            }
        }
        if place_copies(&self.base, &self.backing, &self.embeddings)? != self.result {
            return bad("result is not the union of the embedded copies".into());
        }
        Ok(())
    }
}

/// Builds `L(g, eps, n_cap)`. A supplied backing is checked for uniformity,
/// girth and independence; otherwise one is searched for.
pub fn build_l(
    g: &Graph,
    eps: &Rational,
    n_cap: usize,
    backing: Option<Hypergraph>,
    search: SearchConfig,
) -> Result<BlowupTrace> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!("base graph has {} < 2 vertices", g.n())));
    }
    if n_cap < 2 {
        return Err(Error::Precondition(format!("girth cap N = {n_cap} < 2")));
    }
    if !eps.is_unit_fraction_range() {
        return Err(Error::Precondition(format!("epsilon {eps} not in (0, 1]")));
    }
    let backing = match backing {
        Some(h) => {
            validate_backing(&h, g.n(), eps, n_cap)?;
            h
        }
        None => hypergraph_search(g.n(), n_cap, eps, search)?,
    };
    let embeddings: Vec<Embedding> = backing.hyperedges().iter().map(|e| Embedding::new(e.clone())).collect();
    let result = place_copies(g, &backing, &embeddings)?;
    Ok(BlowupTrace {
        base: g.clone(),
        eps: eps.clone(),
        n_cap,
        backing,
        embeddings,
        result,
    })
}

fn validate_backing(h: &Hypergraph, k: usize, eps: &Rational, n_cap: usize) -> Result<()> {
    if h.k() != k {
        return Err(Error::InvalidBacking(format!(
            "backing is {}-uniform, base has {k} vertices",
            h.k()
        )));
    }
    if !girth_exceeds(h, n_cap) {
        return Err(Error::InvalidBacking(format!("girth does not exceed N = {n_cap}")));
    }
    let alpha = hypergraph_independence_number(h);
    if !eps.exceeds_fraction(alpha, h.n()) {
        return Err(Error::InvalidBacking(format!(
            "independence number {alpha} is not below {eps} * {}",
            h.n()
        )));
    }
    Ok(())
}

fn place_copies(g: &Graph, backing: &Hypergraph, embeddings: &[Embedding]) -> Result<Graph> {
    let mut claimed = HashSet::new();
    for emb in embeddings {
        if emb.domain_size() != g.n() {
            return Err(Error::InvalidTrace("embedding domain differs from base".into()));
        }
        for &(u, v) in g.edges() {
            let (a, b) = (emb.map(u), emb.map(v));
            // girth >= 3 means hyperedges meet in at most one vertex
            if !claimed.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidBacking(format!(
                    "edge ({a}, {b}) claimed by two hyperedges"
                )));
            }
        }
    }
    Graph::from_edges(backing.n(), claimed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, path};

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn edgeless_base_adds_no_edges() {
        let c5 = Hypergraph::from_graph(&cycle(5));
        let half = Rational::new(1, 2).unwrap();
        let t = build_l(&Graph::empty(2), &half, 3, Some(c5), SearchConfig::seeded(0)).unwrap();
        assert_eq!(t.result, Graph::empty(5));
        t.check().unwrap();
    }

    #[test]
    fn single_copy() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let t = build_l(&complete_graph(2), &one(), 2, Some(h), SearchConfig::seeded(0)).unwrap();
        assert_eq!(t.result, complete_graph(2));
    }

    #[test]
    fn two_paths_sharing_a_vertex() {
        let h = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let t = build_l(&path(3), &one(), 3, Some(h), SearchConfig::seeded(0)).unwrap();
        assert_eq!(t.result.edge_count(), 4);
        assert_eq!(t.embeddings[1].image(), &[2, 3, 4]);
        t.check().unwrap();
    }

    #[test]
    fn invalid_backings() {
        let h = Hypergraph::new(4, 3, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let e = build_l(&path(3), &one(), 2, Some(h), SearchConfig::seeded(0)).unwrap_err();
        assert!(matches!(e, Error::InvalidBacking(_)));
        let wrong_k = Hypergraph::from_graph(&cycle(5));
        assert!(build_l(&path(3), &one(), 2, Some(wrong_k), SearchConfig::seeded(0)).is_err());
        // independence 4 of 5 is not below 1/2 * 5
        let h = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let half = Rational::new(1, 2).unwrap();
        assert!(matches!(
            build_l(&path(3), &half, 2, Some(h), SearchConfig::seeded(0)),
            Err(Error::InvalidBacking(_))
        ));
        assert!(build_l(&Graph::empty(1), &one(), 2, None, SearchConfig::seeded(0)).is_err());
    }

    #[test]
    fn searched_backing_round_trips() {
        let half = Rational::new(1, 2).unwrap();
        let t = build_l(&complete_graph(2), &half, 3, None, SearchConfig::seeded(5)).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: BlowupTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        back.check().unwrap();
    }

    #[test]
    fn tampered_trace_is_rejected() {
        let h = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let mut t = build_l(&path(3), &one(), 3, Some(h), SearchConfig::seeded(0)).unwrap();
        t.result = t.result.with_edge(0, 4).unwrap();
        assert!(t.check().is_err());
    }
}
