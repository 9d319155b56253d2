//! Recursive `(N, k_1, .., k_q)`-good colourings of tower levels.

use std::collections::HashMap;

use crate::arrowing::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Edge;

use super::blowup::BlowupTrace;
use super::tower::ConstructionTrace;

/// A colouring of `t.graph` in which every colour-i subgraph on at most `N`
/// vertices is `bounds[i-1]`-colourable.
///
/// Join edges take the least colour `j` with `k_j >= 2`; the previous level is
/// coloured with `k_j - 1` and copied into every hyperedge of the blow-up.
pub fn good_colouring(t: &ConstructionTrace, bounds: &[usize]) -> Result<EdgeColouring> {
    if bounds.len() != t.q {
        return Err(Error::Precondition(format!(
            "{} bounds given for q = {}",
            bounds.len(),
            t.q
        )));
    }
    if bounds.contains(&0) {
        return Err(Error::Precondition(format!("bounds {bounds:?} must all be at least 1")));
    }
    let sum: usize = bounds.iter().sum();
    if sum != t.level + t.q {
        return Err(Error::Precondition(format!(
            "bounds {bounds:?} sum to {sum}, level {} needs {}",
            t.level,
            t.level + t.q
        )));
    }
    let Some((blowup, prev)) = t.parts() else {
        return EdgeColouring::new(t.graph.clone(), t.q, Vec::new());
    };
    let j = bounds.iter().position(|&k| k >= 2).expect("sum exceeds q");
    let mut inner_bounds = bounds.to_vec();
    inner_bounds[j] -= 1;
    let inner = good_colouring(prev, &inner_bounds)?;
    let lifted = lift_through(blowup, &inner);
    let shift = t.a_set.len();
    EdgeColouring::from_fn(t.graph.clone(), t.q, |u, v| {
        if u < shift {
            j + 1
        } else {
            lifted[&(u - shift, v - shift)]
        }
    })
}

/// Copies a colouring of the blow-up's base into every embedded copy, keyed by
/// edges of the blow-up result.
pub(crate) fn lift_through(blowup: &BlowupTrace, base: &EdgeColouring) -> HashMap<Edge, usize> {
    let mut out = HashMap::with_capacity(blowup.result.edge_count());
    for emb in &blowup.embeddings {
        for ((u, v), c) in base.edges_with_colours() {
            let (a, b) = (emb.map(u), emb.map(v));
            out.insert((a.min(b), a.max(b)), c);
        }
    }
    out
}
