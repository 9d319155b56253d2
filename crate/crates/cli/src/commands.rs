use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use ramsey_core::arrowing::{
    arrows_counting, find_monochromatic_copy, find_separator_with, verify_p_profile, ArrowOutcome, Budget,
    EdgeColouring, PProfile,
};
use ramsey_core::constructions::{
    build_f_tower, build_l, build_theorem8, extract_witness, focus, good_colouring, hypergraph_search,
    theorem8_colouring, tower_size_lower_bounds, verify_lemma3, verify_lemma5, BlowupTrace, ConstructionTrace,
    Rational, SearchBudget, SearchConfig, SizeBudget, Theorem8Construction,
};
use ramsey_core::format::to_graph6;
use ramsey_core::graph::{complete_bipartite, complete_multipartite};
use ramsey_core::invariants::{
    a_parameter, chromatic_number, hypergraph_girth, hypergraph_independence_number, maximum_clique, odd_girth,
};
use ramsey_core::{Error, Graph, Hypergraph};

use crate::args::{Construct, Global, SearchArgs, Verify};
use crate::io::{read_graph, read_input, read_json, Artifacts, InputDigest};
use crate::report::Status;

/// State accumulated by one invocation, turned into the run report.
pub struct Run {
    pub name: String,
    pub global: Global,
    pub inputs: Vec<InputDigest>,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub artifacts: Artifacts,
}

pub type Outcome = (Status, Value);

impl Run {
    fn eps(&self) -> Result<Option<Rational>> {
        self.global
            .eps
            .as_deref()
            .map(|s| Rational::from_str(s).with_context(|| format!("--eps {s:?}")))
            .transpose()
    }

    fn required_eps(&self) -> Result<Rational> {
        self.eps()?.ok_or_else(|| anyhow!("this command needs --eps"))
    }

    fn budget(&self) -> Budget {
        Budget::nodes(self.global.budget_nodes)
    }

    fn search(&mut self, s: SearchArgs) -> SearchConfig {
        self.seed = Some(self.global.seed);
        SearchConfig {
            budget: SearchBudget {
                max_vertices: s.search_vertices,
                attempts_per_size: s.search_attempts,
            },
            seed: self.global.seed,
        }
    }

    fn rng(&mut self) -> ChaCha8Rng {
        self.seed = Some(self.global.seed);
        ChaCha8Rng::seed_from_u64(self.global.seed)
    }
}

pub fn params(run: &mut Run, path: &Path) -> Result<Outcome> {
    let g = read_graph(path, &mut run.inputs)?;
    let (chi, chi_colouring) = chromatic_number(&g);
    let clique = maximum_clique(&g);
    let og = odd_girth(&g);
    let (a, a_colouring) = if g.n() == 0 {
        (0, chi_colouring.clone())
    } else {
        a_parameter(&g)?
    };
    println!("n = {}, |E| = {}", g.n(), g.edge_count());
    println!("chi = {chi}");
    println!("omega = {}", clique.len());
    println!("odd girth = {og}");
    println!("a = {a}");
    Ok((
        Status::Yes,
        json!({
            "n": g.n(),
            "edges": g.edge_count(),
            "chi": chi,
            "chi_colouring": chi_colouring.colours,
            "omega": clique.len(),
            "clique": clique,
            "odd_girth": og,
            "a": a,
            "a_colouring": a_colouring.colours,
        }),
    ))
}

pub fn arrows(run: &mut Run, host: &Path, pattern: &Path) -> Result<Outcome> {
    let f = read_graph(host, &mut run.inputs)?;
    let h = read_graph(pattern, &mut run.inputs)?;
    let q = run.global.q;
    run.parameters = json!({ "q": q, "budget_nodes": run.global.budget_nodes });
    match arrows_counting(&f, &h, q, run.budget()) {
        Ok((ArrowOutcome::Arrows, nodes)) => {
            println!("true: every {q}-colouring has a monochromatic copy ({nodes} nodes)");
            Ok((Status::Yes, json!({ "arrows": true, "nodes": nodes })))
        }
        Ok((ArrowOutcome::Avoids(c), nodes)) => {
            let name = "arrows-certificate.json";
            run.artifacts.write(name, &format!("{}\n", c.to_json()))?;
            println!("false: avoiding colouring written to {name} ({nodes} nodes)");
            Ok((
                Status::No,
                json!({ "arrows": false, "nodes": nodes, "certificate": name }),
            ))
        }
        Err(e @ Error::BudgetExhausted { .. }) => {
            println!("unknown: {e}");
            Ok((Status::Unknown, json!({ "arrows": null, "error": e.to_string() })))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn construct(run: &mut Run, c: &Construct) -> Result<Outcome> {
    match c {
        Construct::Hypergraph { k, n_cap, search } => {
            let eps = run.required_eps()?;
            let cfg = run.search(*search);
            run.parameters = json!({ "k": k, "n_cap": n_cap, "eps": eps, "search": search_json(search) });
            let h = hypergraph_search(*k, *n_cap, &eps, cfg)?;
            let alpha = hypergraph_independence_number(&h);
            let girth = hypergraph_girth(&h);
            run.artifacts.write_json("hypergraph.json", &h)?;
            println!(
                "{k}-uniform hypergraph: {} vertices, {} hyperedges, independence {alpha}, girth {girth}",
                h.n(),
                h.edge_count()
            );
            Ok((
                Status::Yes,
                json!({ "n": h.n(), "hyperedges": h.edge_count(), "independence": alpha, "girth": girth, "file": "hypergraph.json" }),
            ))
        }
        Construct::Blowup {
            graph,
            n_cap,
            backing,
            search,
        } => {
            let g = read_graph(graph, &mut run.inputs)?;
            let eps = run.required_eps()?;
            let backing: Option<Hypergraph> = match backing {
                Some(p) => Some(read_json(p, &mut run.inputs)?),
                None => None,
            };
            let searched = backing.is_none();
            let cfg = run.search(*search);
            if !searched {
                run.seed = None;
            }
            run.parameters = json!({ "n_cap": n_cap, "eps": eps, "search": search_json(search) });
            let bt = build_l(&g, &eps, *n_cap, backing, cfg)?;
            run.artifacts.write_json("blowup-trace.json", &bt)?;
            let file = run.artifacts.write_graph("blowup-L", &bt.result)?;
            println!(
                "L: {} vertices, {} edges, backing of {} hyperedges{}",
                bt.result.n(),
                bt.result.edge_count(),
                bt.backing.edge_count(),
                if searched { " (searched)" } else { "" }
            );
            Ok((
                Status::Yes,
                json!({ "n": bt.result.n(), "edges": bt.result.edge_count(), "trace": "blowup-trace.json", "graph": file }),
            ))
        }
        Construct::Tower {
            m,
            n_cap,
            levels,
            max_vertices,
            search,
        } => {
            let q = run.global.q;
            let eps = run.eps()?;
            let cfg = run.search(*search);
            let eps_used = eps.clone().unwrap_or_else(|| Rational::tower_default(q, *m));
            run.parameters = json!({
                "m": m, "n_cap": n_cap, "q": q, "levels": levels, "eps": eps_used,
                "max_vertices": max_vertices, "search": search_json(search),
            });
            let bounds: Vec<String> = tower_size_lower_bounds(*m, q, &eps_used, *levels)
                .iter()
                .map(|b| b.to_string())
                .collect();
            println!("size lower bounds per level: {}", bounds.join(", "));
            let size = SizeBudget {
                max_vertices: *max_vertices,
            };
            let tower = match build_f_tower(*m, *n_cap, q, *levels, eps, size, cfg) {
                Ok(t) => t,
                Err(e) => return unknown_on_budget(e, json!({ "size_lower_bounds": bounds })),
            };
            let top = tower.last().expect("non-empty tower");
            run.artifacts.write_json("tower-trace.json", top)?;
            let mut files = Vec::new();
            for t in &tower {
                files.push(run.artifacts.write_graph(&format!("tower-F{}", t.level), &t.graph)?);
            }
            let sizes: Vec<usize> = tower.iter().map(|t| t.graph.n()).collect();
            println!("F_0..F_{levels} sizes: {sizes:?}");
            Ok((
                Status::Yes,
                json!({ "sizes": sizes, "size_lower_bounds": bounds, "trace": "tower-trace.json", "graphs": files }),
            ))
        }
        Construct::Theorem8 {
            graph,
            n_cap,
            max_vertices,
            search,
        } => {
            let g = read_graph(graph, &mut run.inputs)?;
            let q = run.global.q;
            let eps = run.eps()?;
            let cfg = run.search(*search);
            run.parameters = json!({
                "n_cap": n_cap, "q": q, "eps": eps, "max_vertices": max_vertices, "search": search_json(search),
            });
            let size = SizeBudget {
                max_vertices: *max_vertices,
            };
            let f = match build_theorem8(&g, *n_cap, q, eps, size, cfg) {
                Ok(f) => f,
                Err(e) => return unknown_on_budget(e, json!({})),
            };
            let c = theorem8_colouring(&f, f.a_of_g, q)?;
            run.artifacts.write_json("theorem8-trace.json", &f)?;
            let file = run.artifacts.write_graph("theorem8-F", &f.graph)?;
            run.artifacts
                .write("theorem8-colouring.json", &format!("{}\n", c.to_json()))?;
            println!(
                "F: {} vertices, {} edges (chi = {}, a = {}, tower level {})",
                f.graph.n(),
                f.graph.edge_count(),
                f.chi,
                f.a_of_g,
                f.tower.level
            );
            Ok((
                Status::Yes,
                json!({
                    "n": f.graph.n(), "edges": f.graph.edge_count(), "chi": f.chi, "a": f.a_of_g,
                    "tower_level": f.tower.level, "trace": "theorem8-trace.json", "graph": file,
                    "colouring": "theorem8-colouring.json",
                }),
            ))
        }
    }
}

fn search_json(s: &SearchArgs) -> Value {
    json!({ "max_vertices": s.search_vertices, "attempts_per_size": s.search_attempts })
}

/// Budget-type failures become an "unknown" outcome; anything else propagates.
fn unknown_on_budget(e: Error, extra: Value) -> Result<Outcome> {
    match e {
        Error::SizeBudgetExceeded { .. } | Error::SearchExhausted { .. } | Error::BudgetExhausted { .. } => {
            println!("unknown: {e}");
            let mut v = extra;
            v["error"] = json!(e.to_string());
            Ok((Status::Unknown, v))
        }
        e => Err(e.into()),
    }
}

/// Accepts a blow-up trace, or a tower / separating-graph trace holding one.
fn load_blowup(run: &mut Run, path: &Path) -> Result<BlowupTrace> {
    let text = read_input(path, &mut run.inputs)?;
    if let Ok(bt) = serde_json::from_str::<BlowupTrace>(&text) {
        return Ok(bt);
    }
    if let Ok(t) = serde_json::from_str::<ConstructionTrace>(&text) {
        return t
            .inner
            .ok_or_else(|| anyhow!("{} is a level-0 trace with no blow-up", path.display()));
    }
    if let Ok(f) = serde_json::from_str::<Theorem8Construction>(&text) {
        return Ok(f.blowup);
    }
    bail!("{} is not a blow-up, tower or separating-graph trace", path.display())
}

pub fn verify(run: &mut Run, v: &Verify) -> Result<Outcome> {
    match v {
        Verify::Lemma3 { trace, n_cap } => {
            let bt = load_blowup(run, trace)?;
            bt.check()?;
            let n_cap = n_cap.unwrap_or(bt.n_cap);
            run.parameters = json!({ "n_cap": n_cap });
            match verify_lemma3(&bt, n_cap)? {
                None => {
                    println!("pass: every cycle of length <= {n_cap} lies inside one hyperedge's copy");
                    Ok((Status::Yes, json!({ "pass": true })))
                }
                Some(cycle) => {
                    run.artifacts
                        .write_json("lemma3-counterexample.json", &json!({ "cycle": cycle }))?;
                    println!("FAIL: cycle {cycle:?} leaves the hyperedges it touches");
                    Ok((
                        Status::No,
                        json!({ "pass": false, "counterexample": "lemma3-counterexample.json" }),
                    ))
                }
            }
        }
        Verify::Lemma5 { trace } => {
            let bt = load_blowup(run, trace)?;
            bt.check()?;
            let size = bt.eps.ceil_times(bt.result.n());
            run.parameters = json!({ "eps": bt.eps, "subset_size": size });
            match verify_lemma5(&bt)? {
                None => {
                    println!(
                        "pass: every {size}-subset of the {} vertices contains the base graph",
                        bt.result.n()
                    );
                    Ok((Status::Yes, json!({ "pass": true, "subset_size": size })))
                }
                Some(set) => {
                    run.artifacts
                        .write_json("lemma5-counterexample.json", &json!({ "subset": set }))?;
                    println!("FAIL: subset {set:?} contains no copy of the base graph");
                    Ok((
                        Status::No,
                        json!({ "pass": false, "counterexample": "lemma5-counterexample.json" }),
                    ))
                }
            }
        }
        Verify::Focus { trials, max_a, max_b } => {
            let q = run.global.q;
            run.parameters = json!({ "q": q, "trials": trials, "max_a": max_a, "max_b": max_b });
            if *max_a == 0 || *max_b == 0 {
                bail!("--max-a and --max-b must be positive");
            }
            let mut rng = run.rng();
            let mut violations = 0usize;
            for trial in 0..*trials {
                let a = rng.random_range(1..=*max_a);
                let b = rng.random_range(1..=*max_b);
                let c = EdgeColouring::from_fn(complete_bipartite(a, b), q, |_, _| rng.random_range(1..=q))?;
                let a_set: Vec<usize> = (0..a).collect();
                let b_set: Vec<usize> = (a..a + b).collect();
                let f = focus(&a_set, &b_set, &c)?;
                if let Some(reason) = focus_violation(&f, &a_set, &b_set, q, &c) {
                    violations += 1;
                    if violations == 1 {
                        run.artifacts.write_json(
                            "focus-counterexample.json",
                            &json!({ "trial": trial, "a": a, "b": b, "reason": reason,
                                     "colouring": serde_json::from_str::<Value>(&c.to_json())? }),
                        )?;
                    }
                }
            }
            println!("{trials} trials, {violations} violations");
            let status = if violations == 0 { Status::Yes } else { Status::No };
            Ok((status, json!({ "trials": trials, "violations": violations })))
        }
        Verify::Claim { trace, trials } => {
            let t: ConstructionTrace = read_json(trace, &mut run.inputs)?;
            t.check()?;
            run.parameters = json!({ "trials": trials, "level": t.level, "m": t.m, "q": t.q });
            let mut rng = run.rng();
            let target = t.level + t.q;
            let mut failures = Vec::new();
            for trial in 0..*trials {
                let c = EdgeColouring::from_fn(t.graph.clone(), t.q, |_, _| rng.random_range(1..=t.q))?;
                let ok = match extract_witness(&t, &c) {
                    Ok(w) => w.total() == target && w.verify(&c, t.m).is_ok(),
                    Err(_) => false,
                };
                if !ok {
                    failures.push(trial);
                }
            }
            let mut profile_failures = Vec::new();
            let compositions = compositions(target, t.q);
            for bounds in &compositions {
                let c = good_colouring(&t, bounds)?;
                let p = PProfile::new(t.n_cap, bounds.clone())?;
                if verify_p_profile(&c, &p)?.is_some() {
                    profile_failures.push(bounds.clone());
                }
            }
            println!(
                "{trials} colourings: {} extraction failures (sum of m_j = {target}); {} bound vectors: {} good-colouring failures",
                failures.len(),
                compositions.len(),
                profile_failures.len()
            );
            let pass = failures.is_empty() && profile_failures.is_empty();
            Ok((
                if pass { Status::Yes } else { Status::No },
                json!({
                    "trials": trials, "witness_total": target, "extraction_failures": failures,
                    "bound_vectors": compositions.len(), "profile_failures": profile_failures,
                }),
            ))
        }
        Verify::Pprofile {
            graph,
            colouring,
            n_cap,
            bounds,
        } => {
            let g = read_graph(graph, &mut run.inputs)?;
            let text = read_input(colouring, &mut run.inputs)?;
            let c = EdgeColouring::from_json(g, &text)?;
            run.parameters = json!({ "n_cap": n_cap, "bounds": bounds });
            let p = PProfile::new(*n_cap, bounds.clone())?;
            match verify_p_profile(&c, &p)? {
                None => {
                    println!("pass: colouring is ({n_cap}, {bounds:?})-good");
                    Ok((Status::Yes, json!({ "pass": true })))
                }
                Some(v) => {
                    run.artifacts.write_json("pprofile-violation.json", &v)?;
                    println!(
                        "FAIL: colour {} on vertices {:?} is not {}-colourable",
                        v.colour,
                        v.vertices,
                        bounds[v.colour - 1]
                    );
                    Ok((
                        Status::No,
                        json!({ "pass": false, "violation": "pprofile-violation.json" }),
                    ))
                }
            }
        }
        Verify::Theorem8 { trace, target } => {
            let f: Theorem8Construction = read_json(trace, &mut run.inputs)?;
            f.check()?;
            let h = match target {
                Some(p) => read_graph(p, &mut run.inputs)?,
                None => complete_multipartite(f.chi, f.a_of_g + 1),
            };
            let (chi_h, _) = chromatic_number(&h);
            let (a_h, _) = a_parameter(&h)?;
            if chi_h != f.chi || a_h <= f.a_of_g {
                bail!(
                    "target has chi = {chi_h}, a = {a_h}; needs chi = {} and a > {}",
                    f.chi,
                    f.a_of_g
                );
            }
            run.parameters = json!({ "target": to_graph6(&h) });
            let c = theorem8_colouring(&f, f.a_of_g, f.q)?;
            match find_monochromatic_copy(&c, &h) {
                None => {
                    println!(
                        "pass: the {}-colouring of F ({} vertices) has no monochromatic copy of the target",
                        f.q,
                        f.graph.n()
                    );
                    Ok((Status::Yes, json!({ "pass": true, "n": f.graph.n() })))
                }
                Some((colour, emb)) => {
                    run.artifacts.write_json(
                        "theorem8-counterexample.json",
                        &json!({ "colour": colour, "embedding": emb }),
                    )?;
                    println!("FAIL: monochromatic copy in colour {colour}");
                    Ok((
                        Status::No,
                        json!({ "pass": false, "counterexample": "theorem8-counterexample.json" }),
                    ))
                }
            }
        }
    }
}

fn focus_violation(
    f: &ramsey_core::constructions::FocusResult,
    a: &[usize],
    b: &[usize],
    q: usize,
    c: &EdgeColouring,
) -> Option<String> {
    let need_a = a.len().div_ceil(q);
    let need_b = (b.len() as u128).div_ceil((q as u128).pow(a.len() as u32));
    if f.a_prime.len() < need_a {
        return Some(format!("|A'| = {} < {need_a}", f.a_prime.len()));
    }
    if (f.b_prime.len() as u128) < need_b {
        return Some(format!("|B'| = {} < {need_b}", f.b_prime.len()));
    }
    if !f.a_prime.iter().all(|v| a.contains(v)) || !f.b_prime.iter().all(|v| b.contains(v)) {
        return Some("A' or B' leaves its side".into());
    }
    if !f.is_monochromatic(c) {
        return Some("not monochromatic".into());
    }
    None
}

/// All vectors of `parts` positive integers summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 1..=left.saturating_sub(parts - 1) {
            cur.push(k);
            go(left - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

pub fn separate(run: &mut Run, g_path: &Path, h_path: &Path, n_max: usize) -> Result<Outcome> {
    let g = read_graph(g_path, &mut run.inputs)?;
    let h = read_graph(h_path, &mut run.inputs)?;
    let q = run.global.q;
    run.parameters = json!({ "q": q, "n_max": n_max, "budget_nodes": run.global.budget_nodes });
    let mut found: Vec<Graph> = Vec::new();
    let result = find_separator_with(&g, &h, q, n_max, run.budget(), |f| {
        println!("{}", to_graph6(f));
        found.push(f.clone());
    });
    let lines: String = found.iter().map(|f| format!("{}\n", to_graph6(f))).collect();
    run.artifacts.write("separate-found.g6", &lines)?;
    let disclaimer =
        format!("exhausting graphs up to {n_max} vertices proves nothing about Ramsey equivalence of the two patterns");
    let report = match result {
        Ok(r) => r,
        Err(e @ Error::BudgetExhausted { .. }) => {
            println!("unknown: {e}; {} separators found before stopping", found.len());
            println!("note: {disclaimer}");
            return Ok((
                Status::Unknown,
                json!({ "found": found.len(), "file": "separate-found.g6", "error": e.to_string(), "disclaimer": disclaimer }),
            ));
        }
        Err(e) => return Err(e.into()),
    };
    println!(
        "{} separators among {} isomorphism classes ({} labelled graphs) up to {n_max} vertices",
        report.found.len(),
        report.classes_examined,
        report.labelled_examined
    );
    if report.found.is_empty() {
        println!("none found; {disclaimer}");
    }
    let status = if report.found.is_empty() {
        Status::No
    } else {
        Status::Yes
    };
    Ok((
        status,
        json!({
            "found": report.found.len(), "classes_examined": report.classes_examined,
            "labelled_examined": report.labelled_examined, "nodes": report.nodes_used,
            "file": "separate-found.g6", "disclaimer": disclaimer,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_three() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(4, 3).len(), 3);
        assert!(compositions(1, 2).is_empty());
    }
}
