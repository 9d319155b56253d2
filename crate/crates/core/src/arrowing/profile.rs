//! Checking that a q-colouring is `(N, k_1, .., k_q)`-good.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::is_k_colourable;

use super::colouring::{colour_class, EdgeColouring};

/// Every colour-i subgraph on at most `n_cap` vertices must be `bounds[i-1]`-colourable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PProfile {
    n_cap: usize,
    bounds: Vec<usize>,
}

impl PProfile {
    pub fn new(n_cap: usize, bounds: Vec<usize>) -> Result<Self> {
        if n_cap < 2 {
            return Err(Error::Precondition(format!("profile cap N = {n_cap} < 2")));
        }
        if bounds.len() < 2 {
            return Err(Error::Precondition(format!(
                "profile needs q >= 2 bounds, got {}",
                bounds.len()
            )));
        }
        if bounds.contains(&0) {
            return Err(Error::Precondition(format!(
                "profile bounds {bounds:?} must be positive"
            )));
        }
        Ok(PProfile { n_cap, bounds })
    }

    pub fn n_cap(&self) -> usize {
        self.n_cap
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn q(&self) -> usize {
        self.bounds.len()
    }
}

/// A colour `i` and a vertex set of size at most `N` on which the colour-i
/// subgraph is not `k_i`-colourable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileViolation {
    pub colour: usize,
    pub vertices: Vec<Vertex>,
}

/// `Ok(None)` when `c` is good for `p`, otherwise the least violation: smallest
/// colour, then the lexicographically least sorted vertex list among violating
/// connected induced subgraphs of that colour class.
///
/// Only connected sets need checking: a set's chromatic number is the maximum
/// over its components, and induced subgraphs dominate arbitrary ones.
pub fn verify_p_profile(c: &EdgeColouring, p: &PProfile) -> Result<Option<ProfileViolation>> {
    if c.q() != p.q() {
        return Err(Error::Precondition(format!(
            "colouring has q = {} but profile has {} bounds",
            c.q(),
            p.q()
        )));
    }
    for colour in 1..=c.q() {
        let class = colour_class(c, colour);
        let k = p.bounds[colour - 1];
        if is_k_colourable(&class, k) {
            continue;
        }
        if let Some(vertices) = least_violation(&class, k, p.n_cap) {
            return Ok(Some(ProfileViolation { colour, vertices }));
        }
    }
    Ok(None)
}

fn least_violation(g: &Graph, k: usize, n_cap: usize) -> Option<Vec<Vertex>> {
    // the lex-least violating set starts at the least vertex that is the
    // minimum of any violating set
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            continue;
        }
        let mut best: Option<Vec<Vertex>> = None;
        for_each_connected_set(g, v, n_cap, &mut |set: &VertexSet| {
            if set.len() <= k {
                return;
            }
            let vs = set.to_vec();
            if best.as_ref().is_some_and(|b| *b <= vs) {
                return;
            }
            if !is_k_colourable(&g.induced_subgraph(&vs), k) {
                best = Some(vs);
            }
        });
        if best.is_some() {
            return best;
        }
    }
    None
}

/// Calls `f` once for every connected vertex set of size at most `max_size`
/// whose minimum vertex is `root` (ESU enumeration).
pub fn for_each_connected_set<F: FnMut(&VertexSet)>(g: &Graph, root: Vertex, max_size: usize, f: &mut F) {
    if max_size == 0 {
        return;
    }
    let n = g.n();
    let mut sub = VertexSet::new(n);
    sub.insert(root);
    let mut ext = VertexSet::new(n);
    for w in g.neighbours(root).iter().filter(|&w| w > root) {
        ext.insert(w);
    }
    let mut closed = g.neighbours(root).clone();
    closed.insert(root);
    extend(g, root, max_size, &mut sub, ext, &closed, f);
}

fn extend<F: FnMut(&VertexSet)>(
    g: &Graph,
    root: Vertex,
    max_size: usize,
    sub: &mut VertexSet,
    mut ext: VertexSet,
    closed: &VertexSet,
    f: &mut F,
) {
    f(sub);
    if sub.len() == max_size {
        return;
    }
    while let Some(w) = ext.first() {
        ext.remove(w);
        let mut next_ext = ext.clone();
        for u in g.neighbours(w).iter() {
            if u > root && !closed.contains(u) {
                next_ext.insert(u);
            }
        }
        let mut next_closed = closed.clone();
        next_closed.union_with(g.neighbours(w));
        sub.insert(w);
        extend(g, root, max_size, sub, next_ext, &next_closed, f);
        sub.remove(w);
    }
}
