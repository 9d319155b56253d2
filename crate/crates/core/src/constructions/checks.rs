//! Empirical checks of the blow-up's structural lemmas.

use crate::cycles::cycles_up_to;
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::invariants::girth_exceeds;
use crate::subgraph::find_subgraph_copy;

use super::blowup::BlowupTrace;

/// `Ok(None)` when every cycle of length at most `n_cap` in the blow-up lies
/// wholly inside each hyperedge that holds one of its edges; otherwise the
/// first offending cycle.
pub fn verify_lemma3(bt: &BlowupTrace, n_cap: usize) -> Result<Option<Vec<Vertex>>> {
    if !girth_exceeds(&bt.backing, n_cap) {
        return Err(Error::Precondition(format!("backing girth does not exceed {n_cap}")));
    }
    for cyc in cycles_up_to(&bt.result, n_cap) {
        let len = cyc.len();
        for i in 0..len {
            let (u, v) = (cyc[i], cyc[(i + 1) % len]);
            let holders = bt
                .backing
                .incident(u)
                .iter()
                .filter(|&&e| bt.backing.members(e).contains(v));
            for &e in holders {
                let members = bt.backing.members(e);
                if !cyc.iter().all(|&w| members.contains(w)) {
                    return Ok(Some(cyc));
                }
            }
        }
    }
    Ok(None)
}

/// Largest blow-up the exhaustive containment check accepts.
pub const LEMMA5_MAX_VERTICES: usize = 20;

/// `Ok(None)` when every vertex set of size `ceil(eps * n)` spans a copy of the
/// base graph; otherwise the lexicographically first set that does not.
/// Supersets need no check since containment is monotone.
pub fn verify_lemma5(bt: &BlowupTrace) -> Result<Option<Vec<Vertex>>> {
    let n = bt.result.n();
    if n > LEMMA5_MAX_VERTICES {
        return Err(Error::Precondition(format!(
            "exhaustive check limited to {LEMMA5_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let size = bt.eps.ceil_times(n);
    if size > n {
        return Ok(None);
    }
    for s in super::search::combinations(n, size) {
        if find_subgraph_copy(&bt.result.induced_subgraph(&s), &bt.base).is_none() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
