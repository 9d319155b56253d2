//! The tower `F_0, F_1, ...`: `F_0` is `M` independent vertices and `F_{i+1}`
//! joins `qM` independent vertices completely to `L(F_i, eps, N)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{complete_join, Graph, Vertex};
use crate::hypergraph::Hypergraph;

use super::blowup::{build_l, BlowupTrace};
use super::rational::Rational;
use super::search::SearchConfig;

/// Cap on the vertex count of any graph built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeBudget {
    pub max_vertices: usize,
}

impl Default for SizeBudget {
    fn default() -> Self {
        SizeBudget { max_vertices: 256 }
    }
}

/// One level of the tower. For `level >= 1`, `a_set` is `0..qM`, `b_set` holds
/// the blow-up shifted by `qM`, `inner.base` is `previous.graph`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub level: usize,
    pub m: usize,
    pub q: usize,
    pub n_cap: usize,
    pub eps: Rational,
    pub graph: Graph,
    pub a_set: Vec<Vertex>,
    pub b_set: Vec<Vertex>,
    pub inner: Option<BlowupTrace>,
    pub previous: Option<Box<ConstructionTrace>>,
}

impl ConstructionTrace {
    /// `F_0`: `m` independent vertices.
    pub fn base(m: usize, q: usize, n_cap: usize, eps: Rational) -> Result<Self> {
        if m < 2 {
            return Err(Error::Precondition(format!("M = {m} < 2")));
        }
        if q < 2 {
            return Err(Error::Precondition(format!("q = {q} < 2")));
        }
        if n_cap < 2 {
            return Err(Error::Precondition(format!("N = {n_cap} < 2")));
        }
        if !eps.is_unit_fraction_range() {
            return Err(Error::Precondition(format!("epsilon {eps} not in (0, 1]")));
        }
        Ok(ConstructionTrace {
            level: 0,
            m,
            q,
            n_cap,
            eps,
            graph: Graph::empty(m),
            a_set: Vec::new(),
            b_set: Vec::new(),
            inner: None,
            previous: None,
        })
    }

    /// `F_{i+1}` from `F_i`, with the backing searched for unless supplied.
    pub fn next(&self, backing: Option<Hypergraph>, search: SearchConfig) -> Result<Self> {
        let blowup = build_l(&self.graph, &self.eps, self.n_cap, backing, search)?;
        Ok(self.wrap(blowup))
    }

    fn wrap(&self, blowup: BlowupTrace) -> Self {
        let a = self.q * self.m;
        let graph = complete_join(a, &blowup.result);
        ConstructionTrace {
            level: self.level + 1,
            m: self.m,
            q: self.q,
            n_cap: self.n_cap,
            eps: self.eps.clone(),
            a_set: (0..a).collect(),
            b_set: (a..graph.n()).collect(),
            graph,
            inner: Some(blowup),
            previous: Some(Box::new(self.clone())),
        }
    }

    /// The blow-up and previous level, present exactly when `level >= 1`.
    pub fn parts(&self) -> Option<(&BlowupTrace, &ConstructionTrace)> {
        match (&self.inner, &self.previous) {
            (Some(b), Some(p)) => Some((b, p)),
            _ => None,
        }
    }

    /// Re-checks every level's invariants, e.g. after loading from JSON.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTrace(m));
        if self.level == 0 {
            if self.inner.is_some() || self.previous.is_some() {
                return bad("level 0 has no inner blow-up".into());
            }
            if self.graph != Graph::empty(self.m) || !self.a_set.is_empty() || !self.b_set.is_empty() {
                return bad(format!("level 0 must be {} isolated vertices", self.m));
            }
            return Ok(());
        }
        let Some((blowup, prev)) = self.parts() else {
            return bad(format!("level {} lacks its blow-up", self.level));
        };
        if prev.level + 1 != self.level || (prev.m, prev.q, prev.n_cap) != (self.m, self.q, self.n_cap) {
            return bad(format!("level {} does not extend its predecessor", self.level));
        }
        if blowup.base != prev.graph {
            return bad(format!("level {} blows up a different graph", self.level));
        }
        blowup.check()?;
        let expected = prev.wrap(blowup.clone());
        if expected.graph != self.graph || expected.a_set != self.a_set || expected.b_set != self.b_set {
            return bad(format!("level {} is not the join of qM vertices onto L", self.level));
        }
        prev.check()
    }
}

/// `F_0, ..., F_levels`. Without an override, `eps = q^(-qM)`; an override keeps
/// the construction invariants but weakens what the top level guarantees.
pub fn build_f_tower(
    m: usize,
    n_cap: usize,
    q: usize,
    levels: usize,
    eps_override: Option<Rational>,
    size: SizeBudget,
    search: SearchConfig,
) -> Result<Vec<ConstructionTrace>> {
    let eps = eps_override.unwrap_or_else(|| Rational::tower_default(q, m));
    let mut tower = vec![ConstructionTrace::base(m, q, n_cap, eps)?];
    if m > size.max_vertices {
        return Err(Error::SizeBudgetExceeded {
            level: 0,
            detail: format!("F_0 has {m} vertices, budget {}", size.max_vertices),
        });
    }
    for level in 1..=levels {
        let prev = tower.last().expect("non-empty");
        check_room(level, prev.graph.n(), q * m, &prev.eps, size)?;
        let next = prev
            .next(None, search.derive(level as u64))
            .map_err(|e| at_level(level, e))?;
        if next.graph.n() > size.max_vertices {
            return Err(Error::SizeBudgetExceeded {
                level,
                detail: format!(
                    "F_{level} has {} vertices, budget {}",
                    next.graph.n(),
                    size.max_vertices
                ),
            });
        }
        tower.push(next);
    }
    Ok(tower)
}

/// Fails early when even the smallest admissible backing for a base of
/// `base_n` vertices would overflow the size budget.
pub(crate) fn check_room(level: usize, base_n: usize, extra: usize, eps: &Rational, size: SizeBudget) -> Result<()> {
    let least = eps.least_n_exceeding(base_n - 1).unwrap_or(usize::MAX).max(base_n);
    if least.saturating_add(extra) > size.max_vertices {
        return Err(Error::SizeBudgetExceeded {
            level,
            detail: format!(
                "a {base_n}-uniform backing needs at least {least} vertices at eps = {eps}, budget {}",
                size.max_vertices
            ),
        });
    }
    Ok(())
}

pub(crate) fn at_level(level: usize, e: Error) -> Error {
    match e {
        Error::SearchExhausted { detail } => Error::SearchExhausted {
            detail: format!("level {level}: {detail}"),
        },
        other => other,
    }
}

/// Lower bounds on `|V(F_0)|, ..., |V(F_levels)|`: a k-uniform backing with
/// independence below `eps * n` needs `k - 1 < eps * n`.
pub fn tower_size_lower_bounds(m: usize, q: usize, eps: &Rational, levels: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(m)];
    for _ in 0..levels {
        let prev: BigInt = out.last().expect("non-empty").clone();
        // least n with (prev - 1) * d < p * n
        let least: BigInt = (&prev - 1u32) * eps.denom() / eps.numer() + 1u32;
        out.push(least.max(prev) + BigInt::from(q * m));
    }
    out
}

/// `tower_size_lower_bounds` as machine integers where they fit.
pub fn tower_size_lower_bounds_u64(m: usize, q: usize, eps: &Rational, levels: usize) -> Vec<Option<u64>> {
    tower_size_lower_bounds(m, q, eps, levels)
        .iter()
        .map(ToPrimitive::to_u64)
        .collect()
}
