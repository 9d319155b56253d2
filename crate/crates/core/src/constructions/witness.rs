//! Extracting monochromatic complete multipartite subgraphs from a coloured tower level.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arrowing::EdgeColouring;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Vertex;

use super::focus::focus;
use super::tower::ConstructionTrace;

/// For each colour `j`, `classes[j-1]` lists `m_values[j-1]` disjoint `M`-sets
/// forming a colour-j `K_{m_j}(M)`. Different colours may share vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyWitness {
    pub m_values: Vec<usize>,
    pub classes: Vec<Vec<Vec<Vertex>>>,
}

impl RamseyWitness {
    pub fn total(&self) -> usize {
        self.m_values.iter().sum()
    }

    /// Structural check against `c`: part sizes, disjointness within a colour,
    /// and every cross pair an edge of the right colour.
    pub fn verify(&self, c: &EdgeColouring, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTrace(msg));
        if self.m_values.len() != c.q() || self.classes.len() != c.q() {
            return bad(format!("witness does not cover q = {} colours", c.q()));
        }
        for (j, (parts, &mj)) in self.classes.iter().zip(&self.m_values).enumerate() {
            let colour = j + 1;
            if parts.len() != mj || mj == 0 {
                return bad(format!("colour {colour}: {} parts, m = {mj}", parts.len()));
            }
            let mut seen = VertexSet::new(c.graph().n());
            for part in parts {
                if part.len() != m {
                    return bad(format!("colour {colour}: part {part:?} is not of size {m}"));
                }
                for &v in part {
                    if v >= c.graph().n() || seen.contains(v) {
                        return bad(format!("colour {colour}: vertex {v} repeated or out of range"));
                    }
                    seen.insert(v);
                }
            }
            for (x, px) in parts.iter().enumerate() {
                for py in &parts[x + 1..] {
                    for &u in px {
                        for &v in py {
                            if c.colour(u, v) != Some(colour) {
                                return bad(format!("colour {colour}: pair ({u}, {v}) not in colour"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Follows the inductive argument down the tower: focus on `(A, B)`, keep the
/// `M` least vertices of `A'`, find a hyperedge inside `B'`, and recurse into
/// the copy of the previous level embedded there.
///
/// Fails with [`Error::ExtractionFailed`] when no hyperedge lies inside `B'`,
/// which an honest epsilon rules out.
pub fn extract_witness(t: &ConstructionTrace, c: &EdgeColouring) -> Result<RamseyWitness> {
    if c.graph() != &t.graph || c.q() != t.q {
        return Err(Error::Precondition("colouring is not of this level's graph".into()));
    }
    let identity: Vec<Vertex> = (0..t.graph.n()).collect();
    let classes = extract(t, c, &identity)?;
    let w = RamseyWitness {
        m_values: classes.iter().map(Vec::len).collect(),
        classes,
    };
    w.verify(c, t.m).expect("extracted witness failed its structural check");
    assert_eq!(w.total(), t.level + t.q);
    Ok(w)
}

fn extract(t: &ConstructionTrace, c: &EdgeColouring, to_global: &[Vertex]) -> Result<Vec<Vec<Vec<Vertex>>>> {
    let Some((blowup, prev)) = t.parts() else {
        let base: Vec<Vertex> = to_global[..t.m].to_vec();
        return Ok(vec![vec![base]; t.q]);
    };
    let a: Vec<Vertex> = t.a_set.iter().map(|&v| to_global[v]).collect();
    let b: Vec<Vertex> = t.b_set.iter().map(|&v| to_global[v]).collect();
    let f = focus(&a, &b, c)?;
    let mut a_prime = f.a_prime;
    a_prime.truncate(t.m);
    debug_assert_eq!(a_prime.len(), t.m);

    let shift = t.a_set.len();
    let to_local: HashMap<Vertex, Vertex> = t.b_set.iter().map(|&v| (to_global[v], v - shift)).collect();
    let inside = VertexSet::from_iter_with_capacity(blowup.result.n(), f.b_prime.iter().map(|g| to_local[g]));
    let Some(e) = blowup.backing.hyperedge_within(&inside) else {
        return Err(Error::ExtractionFailed {
            level: t.level,
            detail: format!(
                "no hyperedge inside the {} focussed vertices of {}",
                inside.len(),
                blowup.result.n()
            ),
        });
    };
    let emb = &blowup.embeddings[e];
    let prev_global: Vec<Vertex> = (0..prev.graph.n()).map(|v| to_global[emb.map(v) + shift]).collect();
    let mut classes = extract(prev, c, &prev_global)?;
    classes[f.colour - 1].push(a_prime);
    Ok(classes)
}
