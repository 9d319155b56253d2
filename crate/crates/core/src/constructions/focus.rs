//! Pigeonhole extraction of a monochromatic complete bipartite subgraph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arrowing::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Vertex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FocusResult {
    pub a_prime: Vec<Vertex>,
    pub b_prime: Vec<Vertex>,
    pub colour: usize,
}

impl FocusResult {
    /// Every `a_prime`-`b_prime` pair is an edge of colour `self.colour`.
    pub fn is_monochromatic(&self, c: &EdgeColouring) -> bool {
        self.a_prime
            .iter()
            .all(|&a| self.b_prime.iter().all(|&b| c.colour(a, b) == Some(self.colour)))
    }
}

/// Groups `b_set` by colour pattern toward `a_set` and keeps the most frequent
/// pattern (ties: lexicographically least), then the largest colour class of
/// that pattern (ties: least colour). Gives `|A'| >= |A|/q` and
/// `|B'| >= |B|/q^|A|`.
pub fn focus(a_set: &[Vertex], b_set: &[Vertex], c: &EdgeColouring) -> Result<FocusResult> {
    let mut a: Vec<Vertex> = a_set.to_vec();
    a.sort_unstable();
    a.dedup();
    let mut b: Vec<Vertex> = b_set.to_vec();
    b.sort_unstable();
    b.dedup();
    let mut groups: BTreeMap<Vec<usize>, Vec<Vertex>> = BTreeMap::new();
    for &y in &b {
        let pattern = a
            .iter()
            .map(|&x| {
                c.colour(x, y)
                    .ok_or_else(|| Error::Precondition(format!("({x}, {y}) is not an edge")))
            })
            .collect::<Result<Vec<_>>>()?;
        groups.entry(pattern).or_default().push(y);
    }
    let Some((pattern, b_prime)) =
        groups
            .into_iter()
            .fold(None::<(Vec<usize>, Vec<Vertex>)>, |best, (p, g)| match best {
                Some((bp, bg)) if bg.len() >= g.len() => Some((bp, bg)),
                _ => Some((p, g)),
            })
    else {
        // no B vertices: any A is vacuously monochromatic
        return Ok(FocusResult {
            a_prime: a,
            b_prime: Vec::new(),
            colour: 1,
        });
    };
    let mut sizes = vec![0usize; c.q() + 1];
    for &col in &pattern {
        sizes[col] += 1;
    }
    let colour = (1..=c.q())
        .max_by_key(|&i| (sizes[i], std::cmp::Reverse(i)))
        .expect("q >= 2");
    let a_prime = a
        .iter()
        .zip(&pattern)
        .filter(|&(_, &col)| col == colour)
        .map(|(&x, _)| x)
        .collect();
    Ok(FocusResult {
        a_prime,
        b_prime,
        colour,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_bipartite;

    #[test]
    fn monochromatic_input() {
        let c = EdgeColouring::monochromatic(complete_bipartite(2, 4), 2, 1).unwrap();
        let r = focus(&[0, 1], &[2, 3, 4, 5], &c).unwrap();
        assert_eq!(
            r,
            FocusResult {
                a_prime: vec![0, 1],
                b_prime: vec![2, 3, 4, 5],
                colour: 1
            }
        );
    }

    #[test]
    fn star_split_evenly() {
        let c = EdgeColouring::new(complete_bipartite(1, 4), 2, vec![1, 2, 1, 2]).unwrap();
        let r = focus(&[0], &[1, 2, 3, 4], &c).unwrap();
        // patterns [1] and [2] tie; [1] is lexicographically least
        assert_eq!(
            r,
            FocusResult {
                a_prime: vec![0],
                b_prime: vec![1, 3],
                colour: 1
            }
        );
        assert!(r.is_monochromatic(&c));
    }

    #[test]
    fn missing_edge_is_rejected() {
        let c = EdgeColouring::monochromatic(complete_bipartite(2, 2), 2, 1).unwrap();
        assert!(focus(&[0, 1], &[1, 2], &c).is_err());
    }

    #[test]
    fn empty_sides() {
        let c = EdgeColouring::monochromatic(complete_bipartite(2, 2), 2, 1).unwrap();
        let r = focus(&[], &[2, 3], &c).unwrap();
        assert_eq!(r.b_prime, vec![2, 3]);
        assert!(r.a_prime.is_empty());
        let r = focus(&[0, 1], &[], &c).unwrap();
        assert_eq!(r.a_prime, vec![0, 1]);
    }
}
