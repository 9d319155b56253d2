//! Deliberately naive reference implementations. Everything here enumerates
//! the whole search space (set partitions, all subsets, all maps, all
//! colourings) and shares no code with `ramsey-core` beyond the `Graph` type.

use std::collections::BTreeSet;

use ramsey_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Restricted growth strings of length `n`: every set partition once.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, blocks: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=blocks {
            cur[i] = b;
            rec(i + 1, blocks.max(b + 1), cur, out);
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(0, 0, &mut cur, &mut out);
    }
    out
}

fn blocks_independent(g: &Graph, labels: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| labels[u] != labels[v])
}

/// Minimum number of blocks in a partition into independent sets.
pub fn chromatic_number(g: &Graph) -> usize {
    set_partitions(g.n())
        .into_iter()
        .filter(|p| blocks_independent(g, p))
        .map(|p| p.iter().max().map_or(0, |m| m + 1))
        .min()
        .unwrap_or(0)
}

/// Minimum block size over partitions into exactly chi independent sets.
pub fn a_parameter(g: &Graph) -> usize {
    let chi = chromatic_number(g);
    set_partitions(g.n())
        .into_iter()
        .filter(|p| blocks_independent(g, p) && p.iter().max().map_or(0, |m| m + 1) == chi)
        .map(|p| {
            (0..chi)
                .map(|b| p.iter().filter(|&&x| x == b).count())
                .min()
                .unwrap_or(0)
        })
        .min()
        .expect("a chi-partition exists")
}

/// Largest vertex subset that is pairwise adjacent.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v))))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether a cycle on exactly `len` distinct vertices exists.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    fn rec(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        if path.len() == len {
            return g.has_edge(path[0], *path.last().unwrap());
        }
        for v in 0..g.n() {
            if !path.contains(&v) && g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                if rec(g, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    len >= 3 && (0..g.n()).any(|s| rec(g, &mut vec![s], len))
}

/// Shortest odd cycle length, `None` when there is none.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    (3..=g.n()).step_by(2).find(|&l| has_cycle_of_length(g, l))
}

/// All cycles of length 3..=max_len as vertex sequences, canonicalized to
/// start at their least vertex and go toward the smaller neighbour.
pub fn cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    fn rec(g: &Graph, path: &mut Vec<usize>, max_len: usize, out: &mut BTreeSet<Vec<usize>>) {
        if path.len() >= 3 && g.has_edge(path[0], *path.last().unwrap()) {
            out.insert(canonical_cycle(path));
        }
        if path.len() >= max_len {
            return;
        }
        for v in 0..g.n() {
            if !path.contains(&v) && g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                rec(g, path, max_len, out);
                path.pop();
            }
        }
    }
    for s in 0..g.n() {
        rec(g, &mut vec![s], max_len, &mut out);
    }
    out
}

pub fn canonical_cycle(c: &[usize]) -> Vec<usize> {
    let l = c.len();
    let i = (0..l).min_by_key(|&i| c[i]).unwrap();
    let fwd: Vec<usize> = (0..l).map(|j| c[(i + j) % l]).collect();
    let bwd: Vec<usize> = (0..l).map(|j| c[(i + l - j) % l]).collect();
    fwd.min(bwd)
}

/// Whether some injective map sends every pattern edge to a host edge.
pub fn has_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}

/// The first injective map (in lexicographic order of images) that embeds `pattern`.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for v in 0..host.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(v, map[j])) {
                map.push(v);
                if rec(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    if pattern.n() > host.n() {
        return None;
    }
    let mut map = Vec::new();
    rec(host, pattern, &mut map).then_some(map)
}

/// The subgraph of `g` formed by edges whose colour (aligned with `g.edges()`) is `c`.
pub fn colour_class(g: &Graph, colours: &[usize], c: usize) -> Graph {
    Graph::from_edges(
        g.n(),
        g.edges().iter().zip(colours).filter(|&(_, &x)| x == c).map(|(&e, _)| e),
    )
    .unwrap()
}

/// Every q-colouring of `f`'s edges, by brute force over all `q^|E|`.
pub fn arrows(f: &Graph, h: &Graph, q: usize) -> bool {
    let m = f.edge_count();
    let total = (q as u64).pow(m as u32);
    (0..total).all(|code| {
        let colours = decode(code, q, m);
        (1..=q).any(|c| has_subgraph(&colour_class(f, &colours, c), h))
    })
}

/// Base-q digits of `code`, as colours `1..=q`.
pub fn decode(mut code: u64, q: usize, m: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push((code % q as u64) as usize + 1);
        code /= q as u64;
    }
    out
}

/// Whether some map of the vertices into `k` colours is proper.
pub fn is_k_colourable(g: &Graph, k: usize) -> bool {
    if g.n() == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let total = (k as u64).pow(g.n() as u32);
    (0..total).any(|code| {
        let col = decode(code, k, g.n());
        g.edges().iter().all(|&(u, v)| col[u] != col[v])
    })
}

/// Every colour-i induced subgraph on at most `n_cap` vertices is `bounds[i-1]`-colourable.
pub fn profile_good(g: &Graph, colours: &[usize], n_cap: usize, bounds: &[usize]) -> bool {
    let n = g.n();
    (1..=bounds.len()).all(|c| {
        let class = colour_class(g, colours, c);
        (0u64..1 << n).filter(|s| s.count_ones() as usize <= n_cap).all(|s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            is_k_colourable(&class.induced_subgraph(&vs), bounds[c - 1])
        })
    })
}

/// Largest vertex set containing no hyperedge.
pub fn hypergraph_independence(n: usize, edges: &[Vec<usize>]) -> usize {
    (0u64..1 << n)
        .filter(|s| edges.iter().all(|e| e.iter().any(|&v| s >> v & 1 == 0)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Shortest circuit length: distinct vertices `v_1..v_L` and distinct
/// hyperedges `e_1..e_L` with `v_i, v_{i+1}` in `e_i` (cyclically), `L >= 2`.
pub fn hypergraph_girth(n: usize, edges: &[Vec<usize>]) -> Option<usize> {
    fn rec(edges: &[Vec<usize>], len: usize, verts: &mut Vec<usize>, used: &mut Vec<usize>) -> bool {
        let last = *verts.last().unwrap();
        if used.len() == len {
            return false;
        }
        for (i, e) in edges.iter().enumerate() {
            if used.contains(&i) || !e.contains(&last) {
                continue;
            }
            used.push(i);
            if used.len() == len && e.contains(&verts[0]) {
                return true;
            }
            for &w in e {
                if !verts.contains(&w) && used.len() < len {
                    verts.push(w);
                    if rec(edges, len, verts, used) {
                        return true;
                    }
                    verts.pop();
                }
            }
            used.pop();
        }
        false
    }
    (2..=edges.len()).find(|&len| (0..n).any(|s| rec(edges, len, &mut vec![s], &mut Vec::new())))
}

/// Whether every `size`-subset of the host's vertices spans a copy of `pattern`.
pub fn every_subset_contains(host: &Graph, pattern: &Graph, size: usize) -> bool {
    let n = host.n();
    (0u64..1 << n).filter(|s| s.count_ones() as usize == size).all(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        has_subgraph(&host.induced_subgraph(&vs), pattern)
    })
}

/// G(n, p) with a seeded generator.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A fixed list of small graphs: every labelled graph on at most 4 vertices,
/// the standard named families up to 8 vertices, and 160 seeded random
/// graphs on 5 to 8 vertices.
pub fn catalog() -> Vec<(String, Graph)> {
    use ramsey_core::graph::*;
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 0..=4usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let e = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            out.push((format!("labelled n={n} mask={mask}"), Graph::from_edges(n, e).unwrap()));
        }
    }
    for r in 1..=8 {
        out.push((format!("K{r}"), complete_graph(r)));
        out.push((format!("P{r}"), path(r)));
    }
    for r in 3..=8 {
        out.push((format!("C{r}"), cycle(r)));
    }
    for (a, b) in [(1, 3), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (2, 6), (1, 7)] {
        out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
    }
    for (r, m) in [(3, 2), (2, 4), (4, 2)] {
        out.push((format!("K{r}({m})"), complete_multipartite(r, m)));
    }
    out.push(("K3+K2".into(), disjoint_union(&complete_graph(3), &complete_graph(2))));
    out.push(("C5+C3".into(), disjoint_union(&cycle(5), &cycle(3))));
    out.push(("W5".into(), complete_join(1, &cycle(5))));
    out.push(("W7".into(), complete_join(1, &cycle(7))));
    out.push(("join(2,C5)".into(), complete_join(2, &cycle(5))));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..160 {
        let n = 5 + i % 4;
        let p = [0.2, 0.35, 0.5, 0.65, 0.8][i % 5];
        out.push((format!("random #{i} n={n} p={p}"), random_graph(n, p, &mut rng)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_core::graph::{complete_graph, cycle, petersen};

    #[test]
    fn bell_numbers() {
        let bell: Vec<usize> = (0..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(a_parameter(&cycle(5)), 1);
        assert_eq!(clique_number(&complete_graph(4)), 4);
        assert_eq!(odd_girth(&cycle(7)), Some(7));
        assert_eq!(odd_girth(&cycle(6)), None);
        assert!(arrows(&complete_graph(6), &complete_graph(3), 2));
        assert!(!arrows(&complete_graph(5), &complete_graph(3), 2));
        assert_eq!(cycles(&complete_graph(4), 4).len(), 7);
        assert_eq!(odd_girth(&petersen()), Some(5));
    }

    #[test]
    fn hypergraph_values() {
        // two triples sharing two vertices form a circuit of length 2
        assert_eq!(hypergraph_girth(4, &[vec![0, 1, 2], vec![1, 2, 3]]), Some(2));
        assert_eq!(hypergraph_girth(5, &[vec![0, 1, 2], vec![2, 3, 4]]), None);
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![i.min((i + 1) % 5), i.max((i + 1) % 5)]).collect();
        assert_eq!(hypergraph_girth(5, &c5), Some(5));
        assert_eq!(hypergraph_independence(5, &c5), 2);
    }

    #[test]
    fn catalog_size() {
        let c = catalog();
        assert!(c.len() >= 200);
        assert!(c.iter().all(|(_, g)| g.n() <= 8));
    }
}
