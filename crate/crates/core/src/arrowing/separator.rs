//! One-sided desk-scale search for graphs that arrow one pattern but not another.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{find_subgraph_copy, is_isomorphic};

use super::arrows::{arrows_counting, Budget};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeparatorReport {
    pub found: Vec<Graph>,
    /// labelled graphs generated
    pub labelled_examined: u64,
    /// isomorphism classes examined
    pub classes_examined: u64,
    /// search nodes spent (enumeration plus arrowing)
    pub nodes_used: u64,
}

/// Graphs `F` with at most `n_max` vertices, one per isomorphism class, such that
/// `F -> (g)_q` and `F -/-> (h)_q`.
///
/// Candidates are all labelled graphs by vertex count, then graph6 order; each
/// class is represented by its first labelled member. Finding nothing says
/// nothing about Ramsey equivalence.
pub fn find_separator(g: &Graph, h: &Graph, q: usize, n_max: usize, budget: Budget) -> Result<SeparatorReport> {
    find_separator_with(g, h, q, n_max, budget, |_| {})
}

/// As [`find_separator`], calling `on_found` as each separator is confirmed.
pub fn find_separator_with<F: FnMut(&Graph)>(
    g: &Graph,
    h: &Graph,
    q: usize,
    n_max: usize,
    budget: Budget,
    mut on_found: F,
) -> Result<SeparatorReport> {
    let mut report = SeparatorReport::default();
    let spend = |report: &mut SeparatorReport, n: u64| -> Result<()> {
        report.nodes_used += n;
        if report.nodes_used > budget.max_nodes {
            return Err(Error::BudgetExhausted {
                budget: budget.max_nodes,
                nodes: report.nodes_used,
            });
        }
        Ok(())
    };
    for n in g.n().max(1)..=n_max {
        let pairs = n * (n - 1) / 2;
        if pairs >= 63 {
            return Err(Error::BudgetExhausted {
                budget: budget.max_nodes,
                nodes: u64::MAX,
            });
        }
        let mut classes: HashMap<(usize, Vec<usize>), Vec<Graph>> = HashMap::new();
        for mask in 0u64..(1u64 << pairs) {
            spend(&mut report, 1)?;
            report.labelled_examined += 1;
            let f = graph_from_graph6_mask(n, mask);
            let key = (f.edge_count(), f.degree_sequence());
            let reps = classes.entry(key).or_default();
            if reps.iter().any(|r| is_isomorphic(r, &f)) {
                continue;
            }
            reps.push(f.clone());
            report.classes_examined += 1;
            if f.edge_count() < g.edge_count() || find_subgraph_copy(&f, g).is_none() {
                continue;
            }
            let remaining = Budget::nodes(budget.max_nodes - report.nodes_used);
            let (to_g, used) = arrows_counting(&f, g, q, remaining)?;
            spend(&mut report, used)?;
            if !to_g.arrows() {
                continue;
            }
            let remaining = Budget::nodes(budget.max_nodes - report.nodes_used);
            let (to_h, used) = arrows_counting(&f, h, q, remaining)?;
            spend(&mut report, used)?;
            if !to_h.arrows() {
                on_found(&f);
                report.found.push(f);
            }
        }
    }
    Ok(report)
}

/// The labelled graph whose graph6 bit string (upper triangle, column order,
/// most significant first) is `mask`.
fn graph_from_graph6_mask(n: usize, mask: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> (pairs - 1 - idx) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("valid pairs")
}
