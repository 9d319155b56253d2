use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

use super::colouring::{chromatic_number, k_colouring, VertexColouring};

/// The least possible size of colour class 1 over proper colourings with
/// exactly `chi(g)` colours, together with such a colouring.
///
/// Candidate colour-1 classes are tried by increasing size (lexicographically
/// within a size); a class works when the rest of the graph is
/// `(chi - 1)`-colourable. The first hit is optimal.
pub fn a_parameter(g: &Graph) -> Result<(usize, VertexColouring)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("a(G) needs at least one vertex".into()));
    }
    let (chi, _) = chromatic_number(g);
    assert!(
        completes(g, chi, &[]).is_none(),
        "an empty colour-1 class would give a proper (chi-1)-colouring"
    );
    for size in 1..=n {
        let mut chosen = Vec::with_capacity(size);
        if let Some(w) = search(g, chi, size, 0, &VertexSet::full(n), &mut chosen) {
            return Ok((size, w));
        }
    }
    unreachable!("some proper chi-colouring exists")
}

fn search(
    g: &Graph,
    chi: usize,
    size: usize,
    from: Vertex,
    allowed: &VertexSet,
    chosen: &mut Vec<Vertex>,
) -> Option<VertexColouring> {
    if chosen.len() == size {
        return completes(g, chi, chosen);
    }
    let needed = size - chosen.len();
    for v in allowed.iter().filter(|&v| v >= from) {
        if allowed.iter().filter(|&w| w >= v).count() < needed {
            break;
        }
        chosen.push(v);
        let mut next = allowed.clone();
        next.difference_with(g.neighbours(v));
        next.remove(v);
        if let Some(w) = search(g, chi, size, v + 1, &next, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

fn completes(g: &Graph, chi: usize, class_one: &[Vertex]) -> Option<VertexColouring> {
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| !class_one.contains(v)).collect();
    let sub = g.induced_subgraph(&rest);
    let inner = k_colouring(&sub, chi - 1)?;
    let mut colours = vec![1; g.n()];
    for (i, &v) in rest.iter().enumerate() {
        colours[v] = inner.colours[i] + 1;
    }
    Some(VertexColouring { t: chi, colours })
}
