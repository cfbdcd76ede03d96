//! Acceptance run: one PASS/FAIL line per criterion, each against its time
//! budget. Exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::brute_contains;
use pebblework::game::{distinguishing_depth, distinguishing_width, extract_sentence, solve_bounded};
use pebblework::graph::{generate, FamilySpec, Graph};
use pebblework::harness::sample::{
    all_connected, random_connected, random_degree_capped, random_distinct_pair, random_swept, scenario_rng,
};
use pebblework::harness::{run_scenario, Scenario, Verdict, DEFAULT_SEED};
use pebblework::logic::{canonical_subgraph_sentence, evaluate, star_sentence};
use pebblework::pattern::{combined_lower_bound, find_subgraph, twin_decomposition};
use pebblework::Rational;
use rand::Rng;

type Outcome = Result<String, String>;

fn one(spec: FamilySpec) -> Graph {
    generate(&spec).expect("valid family").into_single().expect("single graph")
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn scenario(id: &str, params: &[(&str, i64)]) -> Result<Verdict, String> {
    let overrides: BTreeMap<String, i64> = params.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    let s = Scenario::new(id, &overrides, DEFAULT_SEED).map_err(err)?;
    run_scenario(&s).map_err(err)
}

fn observed_u64(v: &Verdict, key: &str) -> Result<u64, String> {
    v.observed
        .get(key)
        .and_then(|x| x.as_u64())
        .ok_or_else(|| format!("{}: no observable {key}", v.scenario))
}

fn clique_separation() -> Outcome {
    let mut seen = Vec::new();
    for l in 2..=4 {
        let g = one(FamilySpec::Complete { n: l });
        let h = one(FamilySpec::Complete { n: l - 1 });
        let d = distinguishing_depth(&g, &h).map_err(err)?;
        let w = distinguishing_width(&g, &h).map_err(err)?;
        ensure(d == l && w == l, || format!("K_{l} vs K_{}: depth {d}, width {w}", l - 1))?;
        seen.push(format!("l={l}: D={d} W={w}"));
    }
    Ok(seen.join(", "))
}

fn star_theorem() -> Outcome {
    let g = one(FamilySpec::SubdividedStar { s: 3, t: 4 });
    let h = one(FamilySpec::SubdividedStar { s: 2, t: 4 });
    let spoiler = solve_bounded(&g, &h, 3, 3).map_err(err)?.spoiler_wins;
    ensure(!spoiler, || "Spoiler wins the 3-round 3-pebble game".into())?;
    let d = distinguishing_depth(&g, &h).map_err(err)?;
    let w = distinguishing_width(&g, &h).map_err(err)?;
    ensure(d == 4, || format!("depth {d}, expected 4"))?;
    ensure(w == 3, || format!("width {w}, expected 3"))?;
    Ok(format!("Duplicator survives (3,3); D={d} W={w}"))
}

fn path_theorem() -> Outcome {
    let g = one(FamilySpec::CliquePendantStar { k: 4, n: 5 });
    let h = one(FamilySpec::CliquePendantStar { k: 3, n: 5 });
    let p5 = one(FamilySpec::Path { l: 5 });
    let in_g = find_subgraph(&g, &p5).is_some();
    let in_h = find_subgraph(&h, &p5).is_some();
    ensure(in_g == brute_contains(&g, &p5) && in_h == brute_contains(&h, &p5), || {
        "subgraph search disagrees with exhaustive search".into()
    })?;
    ensure(in_g && !in_h, || format!("P_5 in G: {in_g}, in H: {in_h}"))?;
    let d = distinguishing_depth(&g, &h).map_err(err)?;
    let w = distinguishing_width(&g, &h).map_err(err)?;
    ensure(d >= 4 && w >= 3, || format!("depth {d}, width {w}"))?;
    Ok(format!("P_5 in G only; D={d} >= 4, W={w} >= 3"))
}

fn sparkler_witnesses() -> Outcome {
    let mut seen = Vec::new();
    for (q, p, n) in [(3, 4, 3), (3, 4, 4), (4, 5, 3), (3, 5, 3)] {
        let (g, h) = generate(&FamilySpec::SparklerLowerPair { q, p, n })
            .map_err(err)?
            .into_pair()
            .expect("pair family");
        let sparkler = one(FamilySpec::Sparkler { q, p });
        let embedding = find_subgraph(&g, &sparkler);
        ensure(embedding.as_ref().is_some_and(|e| e.is_valid(&g, &sparkler)), || {
            format!("({q},{p},{n}): no valid embedding in G")
        })?;
        ensure(find_subgraph(&h, &sparkler).is_none() && !brute_contains(&h, &sparkler), || {
            format!("({q},{p},{n}): H contains the sparkler")
        })?;
        seen.push(format!("({q},{p},{n}) ok"));
    }
    let (g, h) = generate(&FamilySpec::SparklerLowerPair { q: 3, p: 4, n: 3 })
        .map_err(err)?
        .into_pair()
        .expect("pair family");
    // s = q-1 = 2, b = 2 + p mod 2 = 2, a = (p-b)/2 = 1.
    let a_plus_s = 3;
    let w = distinguishing_width(&g, &h).map_err(err)?;
    ensure(w >= a_plus_s, || format!("(3,4,3): width {w} < {a_plus_s}"))?;
    seen.push(format!("W(3,4,3)={w} >= {a_plus_s}"));
    Ok(seen.join(", "))
}

fn twin_lemma() -> Outcome {
    let (mut graphs, mut checked, mut violations) = (0, 0, Vec::new());
    for n in 1..=5 {
        for g in all_connected(n) {
            graphs += 1;
            let twins = twin_decomposition(&g);
            if twins.sigma < 2 {
                continue;
            }
            checked += 1;
            let v = twins.largest_class()[0];
            let h = g.remove_vertex(v).map_err(err)?;
            let w = distinguishing_width(&g, &h).map_err(err)?;
            if w < twins.sigma {
                violations.push(format!("{g:?}: width {w} < sigma {}", twins.sigma));
            }
        }
    }
    ensure(graphs == 1 + 1 + 4 + 38 + 728, || format!("enumerated {graphs} connected graphs"))?;
    ensure(violations.is_empty(), || violations.join("; "))?;
    Ok(format!("{checked} graphs with sigma >= 2 of {graphs}, 0 violations"))
}

/// Every case of the twin-class depth bound that applies, in doubled units.
fn depth_bound_violation(d: usize, v: usize, sigma: usize, maximal: bool) -> Option<String> {
    let (d2, s2) = (2 * d, 2 * sigma);
    if s2 <= v + 1 && d2 > v + 5 {
        return Some(format!("depth {d} > v/2 + 5/2 with v = {v}"));
    }
    if s2 > v && d > sigma + 2 {
        return Some(format!("depth {d} > sigma + 2 = {}", sigma + 2));
    }
    if maximal && s2 >= v + 2 && d > sigma + 1 {
        return Some(format!("depth {d} > sigma + 1 = {}", sigma + 1));
    }
    None
}

fn twin_depth_bound() -> Outcome {
    let mut rng = scenario_rng(DEFAULT_SEED, "acceptance-twin-depth");
    let mut violations = Vec::new();
    for _ in 0..100 {
        let (a, b) = random_distinct_pair(&mut rng, 2, 6);
        let d = distinguishing_depth(&a, &b).map_err(err)?;
        let t = twin_decomposition(&a);
        if let Some(m) = depth_bound_violation(d, a.vertex_count(), t.sigma, t.largest_class_is_maximal_homogeneous) {
            violations.push(m);
        }
    }
    ensure(violations.is_empty(), || violations.join("; "))?;
    let verdict = scenario("twin-depth-bound", &[("pairs", 100), ("max_vertices", 6)])?;
    ensure(verdict.pass && observed_u64(&verdict, "violations")? == 0, || {
        format!("harness verdict failed: {:?}", verdict.witness)
    })?;
    Ok("100 pairs direct + 100 pairs harness, 0 violations".into())
}

fn structure_properties() -> Outcome {
    let mut seen = Vec::new();
    for (q, p) in [(3, 2), (3, 3)] {
        let v = scenario("structure-properties", &[("q", q), ("p", p), ("samples", 200)])?;
        let cx: u64 = ["counterexamples_i", "counterexamples_ii", "counterexamples_iii"]
            .iter()
            .map(|k| observed_u64(&v, k))
            .sum::<Result<u64, String>>()?;
        ensure(observed_u64(&v, "samples")? == 200, || "sample count".into())?;
        ensure(v.pass && cx == 0, || format!("({q},{p}): {cx} counterexamples, {:?}", v.witness))?;
        seen.push(format!(
            "({q},{p}): 200 samples, {} sparkler-free, 0 counterexamples",
            observed_u64(&v, "sparkler_free")?
        ));
    }
    Ok(seen.join("; "))
}

fn width_threshold_catalog() -> Outcome {
    let threshold = |v: usize| Rational::new(2 * v as i64 - 6, 3);
    let mut violations = Vec::new();
    let mut check = |f: &Graph| -> Result<(), String> {
        let bound: Rational = combined_lower_bound(f).map_err(err)?;
        if bound <= threshold(f.vertex_count()) {
            violations.push(format!("{f:?}: {bound}"));
        }
        Ok(())
    };
    let mut exhaustive = 0;
    for n in 2..=6 {
        for f in all_connected(n) {
            exhaustive += 1;
            check(&f)?;
        }
    }
    let mut rng = scenario_rng(DEFAULT_SEED, "acceptance-catalog");
    for _ in 0..500 {
        let n = rng.gen_range(7..=9);
        check(&random_connected(&mut rng, n))?;
    }
    ensure(exhaustive == 1 + 4 + 38 + 728 + 26704, || format!("enumerated {exhaustive}"))?;
    ensure(violations.is_empty(), || violations.join("; "))?;
    Ok(format!("{exhaustive} exhaustive + 500 sampled, 0 violations"))
}

fn cross_oracle() -> Outcome {
    let mut rng = scenario_rng(DEFAULT_SEED, "acceptance-cross-oracle");
    let (mut mismatches, mut present) = (Vec::new(), 0);
    for _ in 0..300 {
        let nf = rng.gen_range(1..=4);
        let f = random_swept(&mut rng, nf);
        let ng = rng.gen_range(1..=7);
        let g = random_swept(&mut rng, ng);
        let by_logic = evaluate(&canonical_subgraph_sentence(&f), &g).map_err(err)?;
        let by_search = find_subgraph(&g, &f).is_some();
        present += by_search as usize;
        if by_logic != by_search || by_search != brute_contains(&g, &f) {
            mismatches.push(format!("{f:?} in {g:?}"));
        }
    }
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("300 pairs ({present} containing), 0 mismatches"))
}

fn extraction_soundness() -> Outcome {
    let mut rng = scenario_rng(DEFAULT_SEED, "acceptance-extraction");
    let mut failures = Vec::new();
    for _ in 0..50 {
        let (g, h) = random_distinct_pair(&mut rng, 2, 6);
        let d = distinguishing_depth(&g, &h).map_err(err)?;
        let phi = extract_sentence(&g, &h, d, d).map_err(err)?;
        let sound = phi.is_sentence()
            && evaluate(&phi, &g).map_err(err)?
            && !evaluate(&phi, &h).map_err(err)?
            && phi.quantifier_depth() <= d
            && phi.variable_width() <= d;
        if !sound {
            failures.push(format!("{g:?} vs {h:?}: {phi}"));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok("50 pairs, 0 failures".into())
}

fn star_sentence_dichotomy() -> Outcome {
    let phi = star_sentence(3).map_err(err)?;
    let claw = one(FamilySpec::Star { l: 4 });
    let mut rng = scenario_rng(DEFAULT_SEED, "acceptance-star-sentence");
    let (mut mismatches, mut containing) = (Vec::new(), 0);
    for i in 0..100 {
        let n = rng.gen_range(7..=10);
        let g = if i % 2 == 0 {
            random_connected(&mut rng, n)
        } else {
            random_degree_capped(&mut rng, n, 2)
        };
        // K_(1,3) is a subgraph exactly when some vertex has three neighbours.
        let has_claw = (0..n).any(|v| g.neighbors(v).count() >= 3);
        containing += has_claw as usize;
        let value = evaluate(&phi, &g).map_err(err)?;
        if value != has_claw || has_claw != find_subgraph(&g, &claw).is_some() {
            mismatches.push(format!("{g:?}"));
        }
    }
    ensure(containing > 0 && containing < 100, || "one side of the dichotomy was never sampled".into())?;
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("100 graphs ({containing} with K_1,3), 0 mismatches"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: 1, name: "clique separation", limit: Duration::from_secs(30), run: clique_separation },
    Criterion { id: 2, name: "subdivided star depth and width", limit: minutes(10), run: star_theorem },
    Criterion { id: 3, name: "pendant-star path pair", limit: minutes(5), run: path_theorem },
    Criterion { id: 4, name: "sparkler witness pairs", limit: minutes(10), run: sparkler_witnesses },
    Criterion { id: 5, name: "twin class width", limit: minutes(10), run: twin_lemma },
    Criterion { id: 6, name: "twin class depth bounds", limit: minutes(10), run: twin_depth_bound },
    Criterion { id: 7, name: "sparkler-free structure", limit: minutes(2), run: structure_properties },
    Criterion { id: 8, name: "width threshold catalog", limit: minutes(5), run: width_threshold_catalog },
    Criterion { id: 9, name: "sentence vs search cross-check", limit: minutes(2), run: cross_oracle },
    Criterion { id: 10, name: "extraction soundness", limit: minutes(10), run: extraction_soundness },
    Criterion { id: 11, name: "star sentence dichotomy", limit: minutes(1), run: star_sentence_dichotomy },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time budget")),
            Err(e) => (false, e),
        };
        failed += !pass as usize;
        println!(
            "{} [{:>2}] {:<34} {:>8.2}s / {:>4}s  {}",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
