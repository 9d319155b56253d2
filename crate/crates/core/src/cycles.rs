use crate::graph::{Graph, Vertex};

/// All cycles of length `3..=n_max`, each listed once.
///
/// A cycle is reported starting at its lowest vertex, oriented so that the
/// second vertex is smaller than the last. Output is sorted by length, then
/// lexicographically.
pub fn cycles_up_to(g: &Graph, n_max: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if n_max < 3 {
        return out;
    }
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(n_max);
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        walk(g, start, n_max, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn walk(
    g: &Graph,
    start: Vertex,
    n_max: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    let last = *path.last().expect("non-empty path");
    for w in g.neighbours(last).iter() {
        if w == start {
            if path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            continue;
        }
        if w < start || on_path[w] || path.len() == n_max {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        walk(g, start, n_max, path, on_path, out);
        path.pop();
        on_path[w] = false;
    }
}
