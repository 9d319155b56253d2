//! Randomized search for uniform hypergraphs of large girth and small
//! independence number, by sampling and deleting short circuits.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::invariants::{girth_exceeds, hypergraph_independence_number, shortest_circuit_within};

use super::rational::Rational;

/// Bounds on the randomized search. Exact independence checks are exponential,
/// so `max_vertices` should stay at desk scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub attempts_per_size: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 40,
            attempts_per_size: 32,
        }
    }
}

/// Budget plus seed: the search is deterministic given both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: SearchBudget,
    pub seed: u64,
}

impl SearchConfig {
    pub fn seeded(seed: u64) -> Self {
        SearchConfig {
            budget: SearchBudget::default(),
            seed,
        }
    }

    /// The config for a sub-search, with a seed derived from `salt`.
    pub fn derive(&self, salt: u64) -> Self {
        SearchConfig {
            budget: self.budget,
            seed: self.seed.wrapping_add(salt.wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        }
    }
}

/// Hyperedges per vertex tried in successive attempts; the complete
/// hypergraph is also tried when it is small.
const DENSITIES: [f64; 8] = [0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0];
const LISTABLE_POOL: u128 = 1 << 16;
const COMPLETE_POOL: u128 = 512;

/// Finds a k-uniform hypergraph with girth greater than `n_cap` and independence
/// number strictly less than `eps * n`. Both properties are re-verified on the
/// result; budget exhaustion is an error, never an unverified answer.
pub fn hypergraph_search(k: usize, n_cap: usize, eps: &Rational, config: SearchConfig) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::Precondition(format!("uniformity {k} < 2")));
    }
    if n_cap < 2 {
        return Err(Error::Precondition(format!("girth cap N = {n_cap} < 2")));
    }
    if !eps.is_unit_fraction_range() {
        return Err(Error::Precondition(format!("epsilon {eps} not in (0, 1]")));
    }
    let budget = config.budget;
    // any k-1 vertices are independent, so eps*n must exceed k-1
    let start = eps.least_n_exceeding(k - 1).unwrap_or(usize::MAX).max(k);
    if start > budget.max_vertices {
        return Err(Error::SearchExhausted {
            detail: format!(
                "independence < {eps}*n needs at least {start} vertices, search budget is {}",
                budget.max_vertices
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in start..=budget.max_vertices {
        let pool = binomial(n, k);
        let mut sizes: Vec<usize> = DENSITIES
            .iter()
            .map(|d| ((d * n as f64).ceil() as u128).clamp(1, pool) as usize)
            .collect();
        if pool <= COMPLETE_POOL {
            sizes.push(pool as usize);
        }
        for attempt in 0..budget.attempts_per_size {
            let m = sizes[attempt % sizes.len()];
            let h = delete_short_circuits(random_hypergraph(n, k, m, pool, &mut rng), n_cap, &mut rng);
            if h.edge_count() == 0 {
                continue;
            }
            let alpha = hypergraph_independence_number(&h);
            if eps.exceeds_fraction(alpha, n) && girth_exceeds(&h, n_cap) {
                return Ok(h);
            }
        }
    }
    Err(Error::SearchExhausted {
        detail: format!(
            "no {k}-uniform hypergraph with girth > {n_cap} and independence < {eps}*n on {start}..={} vertices ({} attempts each)",
            budget.max_vertices, budget.attempts_per_size
        ),
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn random_hypergraph(n: usize, k: usize, m: usize, pool: u128, rng: &mut ChaCha8Rng) -> Hypergraph {
    let edges: Vec<Vec<usize>> = if pool <= LISTABLE_POOL {
        let all = combinations(n, k);
        let picked = sample(rng, all.len(), m);
        let mut idx: Vec<usize> = picked.into_iter().collect();
        idx.sort_unstable();
        idx.into_iter().map(|i| all[i].clone()).collect()
    } else {
        let mut set = BTreeSet::new();
        while set.len() < m {
            let mut e: Vec<usize> = sample(rng, n, k).into_iter().collect();
            e.sort_unstable();
            set.insert(e);
        }
        set.into_iter().collect()
    };
    Hypergraph::new(n, k, edges).expect("sampled distinct k-sets")
}

fn delete_short_circuits(mut h: Hypergraph, n_cap: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    while let Some(c) = shortest_circuit_within(&h, n_cap) {
        let victim = c.hyperedges[rng.random_range(0..c.hyperedges.len())];
        h = h.without_edge(victim);
    }
    h
}

/// All k-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
            return out;
        };
        c[i] += 1;
        for j in (i + 1)..k {
            c[j] = c[j - 1] + 1;
        }
    }
}
