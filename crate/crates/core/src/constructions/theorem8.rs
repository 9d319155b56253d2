//! The graph separating `G` from any `H` with `a(G) < a(H)` and equal
//! chromatic number, and its colouring that avoids `H`.

use serde::{Deserialize, Serialize};

use crate::arrowing::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::{complete_join, Graph, Vertex};
use crate::invariants::{a_parameter, chromatic_number};

use super::blowup::{build_l, BlowupTrace};
use super::good::{good_colouring, lift_through};
use super::rational::Rational;
use super::search::SearchConfig;
use super::tower::{at_level, build_f_tower, check_room, ConstructionTrace, SizeBudget};

/// `F`: `q * a(G)` independent vertices joined to `L(F_{q(chi-2)}, q^(-q a(G)), N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem8Construction {
    pub pattern: Graph,
    pub q: usize,
    pub n_cap: usize,
    pub chi: usize,
    pub a_of_g: usize,
    /// `F_{q(chi-2)}` with its full history.
    pub tower: ConstructionTrace,
    pub blowup: BlowupTrace,
    pub a_set: Vec<Vertex>,
    pub b_set: Vec<Vertex>,
    pub graph: Graph,
}

impl Theorem8Construction {
    pub fn check(&self) -> Result<()> {
        self.tower.check()?;
        self.blowup.check()?;
        let a = self.q * self.a_of_g;
        if self.blowup.base != self.tower.graph
            || self.graph != complete_join(a, &self.blowup.result)
            || self.a_set != (0..a).collect::<Vec<_>>()
            || self.b_set != (a..self.graph.n()).collect::<Vec<_>>()
        {
            return Err(Error::InvalidTrace("final join does not match its parts".into()));
        }
        Ok(())
    }
}

/// Builds `F` for pattern `g` and `N = n_cap`. The override, when given,
/// replaces both epsilons (tower and top level).
pub fn build_theorem8(
    g: &Graph,
    n_cap: usize,
    q: usize,
    eps_override: Option<Rational>,
    size: SizeBudget,
    search: SearchConfig,
) -> Result<Theorem8Construction> {
    let (chi, _) = chromatic_number(g);
    if chi < 2 {
        return Err(Error::Precondition(format!("chromatic number {chi} < 2")));
    }
    let (a_of_g, _) = a_parameter(g)?;
    let m = g.n();
    let levels = q * (chi - 2);
    let tower = build_f_tower(m, n_cap, q, levels, eps_override.clone(), size, search)?
        .pop()
        .expect("non-empty tower");
    let eps = eps_override.unwrap_or_else(|| Rational::inverse_power(q as u64, (q * a_of_g) as u32));
    let top = levels + 1;
    check_room(top, tower.graph.n(), q * a_of_g, &eps, size)?;
    let blowup = build_l(&tower.graph, &eps, n_cap, None, search.derive(top as u64)).map_err(|e| at_level(top, e))?;
    let a = q * a_of_g;
    let graph = complete_join(a, &blowup.result);
    if graph.n() > size.max_vertices {
        return Err(Error::SizeBudgetExceeded {
            level: top,
            detail: format!("F has {} vertices, budget {}", graph.n(), size.max_vertices),
        });
    }
    Ok(Theorem8Construction {
        pattern: g.clone(),
        q,
        n_cap,
        chi,
        a_of_g,
        tower,
        blowup,
        a_set: (0..a).collect(),
        b_set: (a..graph.n()).collect(),
        graph,
    })
}

/// Splits `A` into consecutive chunks `S_1..S_q` of `a_of_g` vertices; edges at
/// `S_i` get colour `i`, and the copy of `L` gets the lifted
/// `(N, chi-1, .., chi-1)`-good colouring.
pub fn theorem8_colouring(f: &Theorem8Construction, a_of_g: usize, q: usize) -> Result<EdgeColouring> {
    if q != f.q || f.a_set.len() != q * a_of_g || a_of_g == 0 {
        return Err(Error::Precondition(format!(
            "|A| = {} is not q * a = {q} * {a_of_g}",
            f.a_set.len()
        )));
    }
    let inner = good_colouring(&f.tower, &vec![f.chi - 1; q])?;
    let lifted = lift_through(&f.blowup, &inner);
    let shift = f.a_set.len();
    EdgeColouring::from_fn(f.graph.clone(), q, |u, v| {
        if u < shift {
            u / a_of_g + 1
        } else {
            lifted[&(u - shift, v - shift)]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowing::{find_monochromatic_copy, verify_p_profile, PProfile};
    use crate::graph::{complete_bipartite, complete_graph, complete_multipartite};

    fn desk_k3() -> Theorem8Construction {
        build_theorem8(
            &complete_graph(3),
            6,
            2,
            Some(Rational::one()),
            SizeBudget::default(),
            SearchConfig::seeded(3),
        )
        .unwrap()
    }

    #[test]
    fn triangle_sizes() {
        let f = desk_k3();
        assert_eq!((f.chi, f.a_of_g), (3, 1));
        assert_eq!(f.tower.level, 2);
        assert_eq!(f.a_set.len(), 2);
        assert_eq!(f.graph.n(), 17);
        f.check().unwrap();
    }

    #[test]
    fn triangle_colouring_avoids_octahedron() {
        let f = desk_k3();
        let c = theorem8_colouring(&f, 1, 2).unwrap();
        assert!(find_monochromatic_copy(&c, &complete_multipartite(3, 2)).is_none());
        for b in &f.b_set {
            assert_eq!(c.colour(0, *b), Some(1));
            assert_eq!(c.colour(1, *b), Some(2));
        }
        assert!(theorem8_colouring(&f, 2, 2).is_err());
    }

    #[test]
    fn interior_is_good() {
        let f = desk_k3();
        let inner = good_colouring(&f.tower, &[2, 2]).unwrap();
        assert_eq!(
            verify_p_profile(&inner, &PProfile::new(6, vec![2, 2]).unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn bipartite_pattern_uses_level_zero() {
        let g = complete_bipartite(1, 2);
        let f = build_theorem8(
            &g,
            3,
            2,
            Some(Rational::one()),
            SizeBudget::default(),
            SearchConfig::seeded(0),
        )
        .unwrap();
        assert_eq!(f.tower.level, 0);
        assert_eq!(f.a_set.len(), 2 * f.a_of_g);
    }

    #[test]
    fn three_colours() {
        let f = build_theorem8(
            &complete_graph(3),
            3,
            3,
            Some(Rational::one()),
            SizeBudget::default(),
            SearchConfig::seeded(0),
        )
        .unwrap();
        assert_eq!(f.a_set.len(), 3);
        // 3, then +9 per tower level, then +3
        assert_eq!(f.graph.n(), 33);
    }

    #[test]
    fn edgeless_pattern_rejected() {
        assert!(build_theorem8(
            &Graph::empty(3),
            3,
            2,
            None,
            SizeBudget::default(),
            SearchConfig::seeded(0)
        )
        .is_err());
    }
}
