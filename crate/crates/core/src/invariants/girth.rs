use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::Graph;

/// A cycle length, or `Infinite` when no cycle of the relevant kind exists.
/// `Infinite` compares greater than every finite length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    /// Strictly greater than `n`.
    pub fn exceeds(self, n: usize) -> bool {
        match self {
            Girth::Finite(g) => g > n,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(usize),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(g) => Ok(Girth::Finite(g)),
            Repr::Str(s) if s == "infinite" => Ok(Girth::Infinite),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("bad girth {s:?}"))),
        }
    }
}

/// Length of the shortest odd cycle.
///
/// For each root, an edge whose endpoints sit at equal BFS depth `d` closes an
/// odd walk of length `2d + 1`; the minimum over all roots is attained on a
/// shortest odd cycle.
pub fn odd_girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in g.neighbours(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                } else if dist[y] == dist[x] {
                    best = best.min(2 * dist[x] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle, petersen};

    #[test]
    fn examples() {
        assert_eq!(odd_girth(&cycle(7)), Girth::Finite(7));
        assert_eq!(odd_girth(&complete_bipartite(3, 3)), Girth::Infinite);
        assert_eq!(odd_girth(&petersen()), Girth::Finite(5));
        assert_eq!(odd_girth(&complete_graph(4)), Girth::Finite(3));
        assert_eq!(odd_girth(&cycle(6)), Girth::Infinite);
    }

    #[test]
    fn ordering_and_json() {
        assert!(Girth::Infinite > Girth::Finite(1_000_000));
        assert!(Girth::Infinite.exceeds(5));
        assert!(!Girth::Finite(5).exceeds(5));
        assert_eq!(serde_json::to_string(&Girth::Infinite).unwrap(), "\"infinite\"");
        assert_eq!(serde_json::from_str::<Girth>("7").unwrap(), Girth::Finite(7));
    }
}
