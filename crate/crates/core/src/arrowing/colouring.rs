use std::collections::HashMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::subgraph::{find_subgraph_copy, Embedding};

/// A total colouring of a graph's edges with colours `1..=q`.
///
/// `colours[i]` is the colour of `graph.edges()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Graph,
    q: usize,
    colours: Vec<usize>,
}

impl EdgeColouring {
    pub fn new(graph: Graph, q: usize, colours: Vec<usize>) -> Result<Self> {
        if q < 2 {
            return Err(Error::Precondition(format!("need q >= 2 colours, got {q}")));
        }
        if colours.len() != graph.edge_count() {
            return Err(Error::Precondition(format!(
                "{} colours for {} edges",
                colours.len(),
                graph.edge_count()
            )));
        }
        if let Some(&c) = colours.iter().find(|&&c| c == 0 || c > q) {
            return Err(Error::Precondition(format!("colour {c} outside 1..={q}")));
        }
        Ok(EdgeColouring { graph, q, colours })
    }

    /// Every edge gets `colour`.
    pub fn monochromatic(graph: Graph, q: usize, colour: usize) -> Result<Self> {
        let m = graph.edge_count();
        EdgeColouring::new(graph, q, vec![colour; m])
    }

    /// Colours each edge by `f(u, v)`.
    pub fn from_fn<F: FnMut(Vertex, Vertex) -> usize>(graph: Graph, q: usize, mut f: F) -> Result<Self> {
        let colours = graph.edges().iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColouring::new(graph, q, colours)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.graph.edge_index(u, v).map(|i| self.colours[i])
    }

    pub fn set_colour(&mut self, u: Vertex, v: Vertex, colour: usize) -> Result<()> {
        if colour == 0 || colour > self.q {
            return Err(Error::Precondition(format!("colour {colour} outside 1..={}", self.q)));
        }
        let i = self
            .graph
            .edge_index(u, v)
            .ok_or_else(|| Error::Precondition(format!("({u},{v}) is not an edge")))?;
        self.colours[i] = colour;
        Ok(())
    }

    pub fn edges_with_colours(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.graph.edges().iter().copied().zip(self.colours.iter().copied())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColouringJson(self)).expect("colouring serializes")
    }

    /// Parses `{"q": .., "colours": {"u-v": c, ..}}` against `graph`; the keys must
    /// cover the edge set exactly.
    pub fn from_json(graph: Graph, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            q: usize,
            colours: HashMap<String, usize>,
        }
        let repr: Repr = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let bad = |m: String| Error::Parse {
            position: "colours".into(),
            message: m,
        };
        let mut colours = vec![0; graph.edge_count()];
        for (key, c) in &repr.colours {
            let (u, v) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
                .ok_or_else(|| bad(format!("malformed edge key {key:?}")))?;
            if u >= v {
                return Err(bad(format!("edge key {key:?} must have u < v")));
            }
            let i = graph
                .edge_index(u, v)
                .ok_or_else(|| bad(format!("{key} is not an edge of the graph")))?;
            colours[i] = *c;
        }
        if repr.colours.len() != graph.edge_count() {
            return Err(bad(format!(
                "{} coloured edges but the graph has {}",
                repr.colours.len(),
                graph.edge_count()
            )));
        }
        EdgeColouring::new(graph, repr.q, colours)
    }
}

struct ColouringJson<'a>(&'a EdgeColouring);

impl Serialize for ColouringJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Colours<'a>(&'a EdgeColouring);
        impl Serialize for Colours<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.colours.len()))?;
                for ((u, v), c) in self.0.edges_with_colours() {
                    map.serialize_entry(&format!("{u}-{v}"), &c)?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("q", &self.0.q)?;
        map.serialize_entry("colours", &Colours(self.0))?;
        map.end()
    }
}

/// The spanning subgraph formed by the edges of colour `i`.
pub fn colour_class(c: &EdgeColouring, i: usize) -> Graph {
    c.graph.spanning_subgraph(|idx, _| c.colours[idx] == i)
}

/// Some colour whose class contains a copy of `h`, with the copy.
pub fn find_monochromatic_copy(c: &EdgeColouring, h: &Graph) -> Option<(usize, Embedding)> {
    (1..=c.q).find_map(|i| find_subgraph_copy(&colour_class(c, i), h).map(|e| (i, e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle};

    #[test]
    fn colour_classes() {
        let red = EdgeColouring::monochromatic(complete_graph(4), 2, 1).unwrap();
        assert_eq!(colour_class(&red, 1), complete_graph(4));
        assert_eq!(colour_class(&red, 2), Graph::empty(4));

        // edges 01, 03, 12, 23: alternating around the cycle
        let alt = EdgeColouring::new(cycle(4), 2, vec![1, 2, 2, 1]).unwrap();
        for i in 1..=2 {
            let class = colour_class(&alt, i);
            assert_eq!(class.edge_count(), 2);
            assert!((0..4).all(|v| class.degree(v) == 1));
        }
    }

    #[test]
    fn mono_copy_examples() {
        let red = EdgeColouring::monochromatic(complete_graph(6), 2, 1).unwrap();
        let (col, e) = find_monochromatic_copy(&red, &complete_graph(3)).unwrap();
        assert_eq!(col, 1);
        assert!(e.is_valid(&complete_graph(3), &complete_graph(6)));
        let (col, e) = find_monochromatic_copy(&red, &Graph::empty(1)).unwrap();
        assert_eq!((col, e.domain_size()), (1, 1));
    }

    #[test]
    fn json_round_trip_in_edge_order() {
        let c = EdgeColouring::new(cycle(4), 2, vec![1, 2, 2, 1]).unwrap();
        let s = c.to_json();
        assert_eq!(s, r#"{"q":2,"colours":{"0-1":1,"0-3":2,"1-2":2,"2-3":1}}"#);
        let back = EdgeColouring::from_json(cycle(4), &s).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn json_must_cover_edges() {
        assert!(EdgeColouring::from_json(cycle(4), r#"{"q":2,"colours":{"0-1":1}}"#).is_err());
        assert!(EdgeColouring::from_json(
            cycle(4),
            r#"{"q":2,"colours":{"0-1":1,"0-3":2,"1-2":2,"2-3":1,"0-2":1}}"#
        )
        .is_err());
        assert!(EdgeColouring::from_json(cycle(4), r#"{"q":2,"colours":{"0-1":1,"0-3":3,"1-2":2,"2-3":1}}"#).is_err());
    }
}
