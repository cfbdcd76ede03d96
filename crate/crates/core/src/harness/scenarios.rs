use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bounds::{general_width_threshold, homogeneous_depth_bound};
use crate::game::{distinguishing_depth, distinguishing_width, extract_sentence, solve_bounded};
use crate::graph::{generate, generate_uncapped, lower_pair_layout, to_graph6, FamilySpec, Graph};
use crate::logic::{canonical_subgraph_sentence, evaluate, star_sentence};
use crate::pattern::{combined_lower_bound, find_subgraph, has_path_or_star, twin_decomposition};
use crate::Rational;

use super::sample::{
    all_connected, random_connected, random_degree_capped, random_distinct_pair, random_swept, scenario_rng,
};
use super::{HarnessError, Scenario, ScenarioKind, Verdict, Witness};

/// Observations collected while a scenario runs.
struct Tally {
    observed: BTreeMap<String, Value>,
    pass: bool,
    witness: Option<Witness>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            observed: BTreeMap::new(),
            pass: true,
            witness: None,
        }
    }

    fn set(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.observed.insert(key.into(), value.into());
    }

    /// Records a failed check; the first failure becomes the witness.
    fn fail(&mut self, graphs: &[&Graph], detail: impl Into<String>) {
        self.pass = false;
        if self.witness.is_none() {
            self.witness = Some(Witness {
                graphs: graphs.iter().map(|g| to_graph6(g)).collect(),
                detail: detail.into(),
            });
        }
    }

    fn check(&mut self, ok: bool, graphs: &[&Graph], detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(graphs, detail());
        }
    }

    fn finish(self, kind: ScenarioKind, parameters: BTreeMap<String, i64>, expected: impl Into<String>) -> Verdict {
        Verdict {
            scenario: kind.id().to_string(),
            claim: kind.claim().to_string(),
            parameters,
            seed: None,
            observed: self.observed,
            expected: expected.into(),
            pass: self.pass,
            witness: self.witness,
            runtime_ms: None,
        }
    }
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect()
}

fn one(spec: FamilySpec) -> Result<Graph, HarnessError> {
    Ok(generate(&spec)?.into_single().expect("single-graph family"))
}

fn one_uncapped(spec: FamilySpec) -> Graph {
    generate_uncapped(&spec)
        .expect("parameters validated by the caller")
        .into_single()
        .expect("single-graph family")
}

fn contains(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}

fn rational(r: Rational) -> Value {
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn invalid(kind: ScenarioKind, message: impl Into<String>) -> HarnessError {
    HarnessError::InvalidParameter {
        scenario: kind.id().to_string(),
        message: message.into(),
    }
}

/// Depth and width of `K_l` against `K_(l-1)` for `l = 2..=max_l`.
pub fn run_clique_separation(max_l: usize) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::CliqueSeparation;
    if max_l < 2 {
        return Err(invalid(kind, "max_l must be at least 2"));
    }
    let mut tally = Tally::new();
    for l in 2..=max_l {
        let g = one(FamilySpec::Complete { n: l })?;
        let h = one(FamilySpec::Complete { n: l - 1 })?;
        let d = distinguishing_depth(&g, &h)?;
        let w = distinguishing_width(&g, &h)?;
        tally.set(format!("depth_{l}"), d);
        tally.set(format!("width_{l}"), w);
        tally.check(d == l && w == l, &[&g, &h], || format!("l = {l}: depth {d}, width {w}"));
    }
    Ok(tally.finish(kind, params(&[("max_l", max_l)]), "depth_l = width_l = l"))
}

/// `W(G, G-v) >= sigma(G)` for every graph of the corpus with a twin class
/// of size at least 2, `v` taken from a largest class.
pub fn run_twin_lemma(corpus: &[Graph]) -> Result<Verdict, HarnessError> {
    let mut tally = Tally::new();
    let (mut checked, mut violations, mut slack_total) = (0usize, 0usize, 0usize);
    for g in corpus {
        let twins = twin_decomposition(g);
        if twins.sigma < 2 {
            continue;
        }
        let v = twins.largest_class()[0];
        let h = g.remove_vertex(v)?;
        let w = distinguishing_width(g, &h)?;
        checked += 1;
        if w < twins.sigma {
            violations += 1;
            tally.fail(&[g, &h], format!("removed vertex {v}: width {w} < sigma {}", twins.sigma));
        } else {
            slack_total += w - twins.sigma;
        }
    }
    tally.set("graphs", corpus.len());
    tally.set("checked", checked);
    tally.set("violations", violations);
    tally.set("width_above_sigma_total", slack_total);
    Ok(tally.finish(
        ScenarioKind::TwinLemma,
        params(&[("corpus", corpus.len())]),
        "violations = 0",
    ))
}

/// The separating pair for `S_(q,p)`: containment in `G` only, more than `n`
/// vertices on both sides and, when `solve_width`, the width lower bound.
pub fn run_sparkler_pair(q: usize, p: usize, n: usize, solve_width: bool) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::SparklerPair;
    let layout = lower_pair_layout(q, p, n).map_err(|e| invalid(kind, e.to_string()))?;
    let (g, h) = generate_uncapped(&FamilySpec::SparklerLowerPair { q, p, n })?
        .into_pair()
        .expect("pair family");
    let sparkler = one_uncapped(FamilySpec::Sparkler { q, p });
    let mut tally = Tally::new();
    tally.set("a", layout.a);
    tally.set("b", layout.b);
    tally.set("s", layout.s);
    tally.set("g_vertices", g.vertex_count());
    tally.set("h_vertices", h.vertex_count());

    let embedding = find_subgraph(&g, &sparkler);
    tally.set("g_contains", embedding.is_some());
    tally.check(embedding.is_some(), &[&g, &sparkler], || "S_(q,p) not found in G".into());
    let in_h = find_subgraph(&h, &sparkler);
    tally.set("h_contains", in_h.is_some());
    if let Some(e) = &in_h {
        tally.fail(&[&h, &sparkler], format!("S_(q,p) embeds in H via {:?}", e.map));
    }
    let larger = g.vertex_count() > n && h.vertex_count() > n;
    tally.set("both_exceed_n", larger);
    tally.check(larger, &[&g, &h], || "a graph has at most n vertices".into());

    let half = Rational::new(1, 2);
    let bound = Rational::from_integer(q as i64) + Rational::from_integer(p as i64) * half
        - Rational::from_integer(2)
        - Rational::from_integer((p % 2) as i64) * half;
    tally.set("width_bound", rational(bound));
    let mut expected = "g_contains and not h_contains and both_exceed_n".to_string();
    if solve_width {
        let w = distinguishing_width(&g, &h)?;
        tally.set("width", w);
        tally.check(Rational::from_integer(w as i64) >= bound, &[&g, &h], || {
            format!("width {w} below {bound}")
        });
        expected.push_str(" and width >= width_bound");
    }
    Ok(tally.finish(
        kind,
        params(&[("q", q), ("p", p), ("n", n), ("width", solve_width as usize)]),
        expected,
    ))
}

fn star_dichotomy(tally: &mut Tally, s: usize, graphs: &[Graph]) -> Result<usize, HarnessError> {
    let sentence = star_sentence(s)?;
    let mut mismatches = 0;
    for g in graphs {
        let holds = evaluate(&sentence, g)?;
        let has_star = g.max_degree() >= s;
        if holds != has_star {
            mismatches += 1;
            tally.fail(&[g], format!("star sentence {holds}, K_(1,{s}) present {has_star}"));
        }
    }
    Ok(mismatches)
}

/// `M_(s,t)` against `M_(s-1,t)`: Duplicator survives `s` rounds with `s`
/// pebbles, depth is `s+1`, width is `s`; plus the star-sentence dichotomy
/// on `samples` connected graphs with `2s+1 ..= 2s+4` vertices.
pub fn run_star_theorem(s: usize, t: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::StarTheorem;
    if s < 3 || t < 4 {
        return Err(invalid(kind, format!("need s >= 3 and t >= 4, got s = {s}, t = {t}")));
    }
    let g = one(FamilySpec::SubdividedStar { s, t })?;
    let h = one(FamilySpec::SubdividedStar { s: s - 1, t })?;
    let mut tally = Tally::new();
    let survives = !solve_bounded(&g, &h, s, s)?.spoiler_wins;
    let d = distinguishing_depth(&g, &h)?;
    let w = distinguishing_width(&g, &h)?;
    tally.set("duplicator_survives", survives);
    tally.set("depth", d);
    tally.set("width", w);
    tally.check(survives, &[&g, &h], || format!("Spoiler wins the {s}-round {s}-pebble game"));
    tally.check(d == s + 1, &[&g, &h], || format!("depth {d}"));
    tally.check(w == s, &[&g, &h], || format!("width {w}"));
    let graphs: Vec<Graph> = (0..samples)
        .map(|i| {
            let n = rng.gen_range(2 * s + 1..=2 * s + 4);
            if i % 2 == 1 {
                random_degree_capped(rng, n, s - 1)
            } else {
                random_connected(rng, n)
            }
        })
        .collect();
    let mismatches = star_dichotomy(&mut tally, s, &graphs)?;
    tally.set("samples", samples);
    tally.set("dichotomy_mismatches", mismatches);
    Ok(tally.finish(
        kind,
        params(&[("s", s), ("t", t), ("samples", samples)]),
        "duplicator_survives and depth = s+1 and width = s and dichotomy_mismatches = 0",
    ))
}

/// `K_(l-1)` and `K_(l-2)`, each with a pendant `K_(1,n)`.
pub fn run_path_theorem(l: usize, n: usize) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::PathTheorem;
    if l < 5 {
        return Err(invalid(kind, format!("l = {l} must be at least 5")));
    }
    let g = one(FamilySpec::CliquePendantStar { k: l - 1, n })?;
    let h = one(FamilySpec::CliquePendantStar { k: l - 2, n })?;
    let path = one_uncapped(FamilySpec::Path { l });
    let mut tally = Tally::new();
    let in_g = contains(&g, &path);
    let in_h = contains(&h, &path);
    let d = distinguishing_depth(&g, &h)?;
    let w = distinguishing_width(&g, &h)?;
    tally.set("g_contains", in_g);
    tally.set("h_contains", in_h);
    tally.set("depth", d);
    tally.set("width", w);
    tally.check(in_g && !in_h, &[&g, &h], || format!("P_{l} containment: G {in_g}, H {in_h}"));
    tally.check(d + 1 >= l, &[&g, &h], || format!("depth {d} < {}", l - 1));
    tally.check(w + 2 >= l, &[&g, &h], || format!("width {w} < {}", l - 2));
    Ok(tally.finish(
        kind,
        params(&[("l", l), ("n", n)]),
        "g_contains and not h_contains and depth >= l-1 and width >= l-2",
    ))
}

/// `3 * d^e`, saturating.
fn spanning_tree_capacity(d: usize, e: usize) -> u128 {
    (d as u128).checked_pow(e as u32).and_then(|x| x.checked_mul(3)).unwrap_or(u128::MAX)
}

/// Three structural facts about `S_(q,p)`-free graphs on `samples` connected
/// graphs with `q+p ..= 2qp+4` vertices.
pub fn run_structure_properties(
    q: usize,
    p: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::StructureProperties;
    if q < 3 || p < 2 {
        return Err(invalid(kind, format!("need q >= 3 and p >= 2, got q = {q}, p = {p}")));
    }
    let sparkler = one_uncapped(FamilySpec::Sparkler { q, p });
    let long_path = one_uncapped(FamilySpec::Path { l: 2 * q * p });
    let cycle = one_uncapped(FamilySpec::Cycle { n: p + 1 });
    let fan = one_uncapped(FamilySpec::BrokenFan { n: p + 2 });
    let mut tally = Tally::new();
    let (mut free, mut hyp_i, mut hyp_ii) = (0, 0, 0);
    let (mut cx_i, mut cx_ii, mut cx_iii) = (0, 0, 0);
    for _ in 0..samples {
        let n = rng.gen_range(q + p..=2 * q * p + 4);
        let g = random_connected(rng, n);
        let delta = g.max_degree();
        let has_sparkler = contains(&g, &sparkler);
        if !has_sparkler {
            free += 1;
        }
        if delta >= q && contains(&g, &long_path) {
            hyp_i += 1;
            if !has_sparkler {
                cx_i += 1;
                tally.fail(&[&g], "(i): K_(1,q) and P_(2qp) present, S_(q,p) absent");
            }
        }
        if delta >= q + p && (contains(&g, &cycle) || contains(&g, &fan)) {
            hyp_ii += 1;
            if !has_sparkler {
                cx_ii += 1;
                tally.fail(&[&g], "(ii): C_(p+1) or B_(p+2) with large degree, S_(q,p) absent");
            }
        }
        if !has_sparkler && delta >= q && n as u128 > spanning_tree_capacity(delta, 2 * q * p) {
            cx_iii += 1;
            tally.fail(&[&g], "(iii): S_(q,p)-free, max degree >= q, too many vertices");
        }
    }
    tally.set("samples", samples);
    tally.set("sparkler_free", free);
    tally.set("hypothesis_i", hyp_i);
    tally.set("hypothesis_ii", hyp_ii);
    tally.set("counterexamples_i", cx_i);
    tally.set("counterexamples_ii", cx_ii);
    tally.set("counterexamples_iii", cx_iii);
    Ok(tally.finish(
        kind,
        params(&[("q", q), ("p", p), ("samples", samples)]),
        "counterexamples_i = counterexamples_ii = counterexamples_iii = 0",
    ))
}

/// The combined lower bound against `2v/3 - 2`, exhaustively over connected
/// graphs on `2..=max_l` vertices and on `samples` connected graphs with
/// `min_vertices..=max_vertices` vertices.
pub fn run_width_threshold_catalog(
    max_l: usize,
    samples: usize,
    min_vertices: usize,
    max_vertices: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::WidthThresholdCatalog;
    if max_l > 7 {
        return Err(invalid(kind, "exhaustive tier is limited to 7 vertices"));
    }
    if min_vertices < 2 || min_vertices > max_vertices {
        return Err(invalid(kind, "need 2 <= min_vertices <= max_vertices"));
    }
    let mut tally = Tally::new();
    let mut violations = 0;
    let mut min_margin: Option<Rational> = None;
    let mut consider = |tally: &mut Tally, f: &Graph| -> Result<(), HarnessError> {
        let bound: Rational = combined_lower_bound(f)?;
        let threshold: Rational = general_width_threshold(f.vertex_count());
        let margin = bound - threshold;
        min_margin = Some(min_margin.map_or(margin, |m| m.min(margin)));
        if bound <= threshold {
            violations += 1;
            tally.fail(&[f], format!("bound {bound} <= {threshold}"));
        }
        Ok(())
    };
    let mut exhaustive = 0;
    for l in 2..=max_l {
        for f in all_connected(l) {
            exhaustive += 1;
            consider(&mut tally, &f)?;
        }
    }
    for _ in 0..samples {
        let n = rng.gen_range(min_vertices..=max_vertices);
        let f = random_connected(rng, n);
        consider(&mut tally, &f)?;
    }
    tally.set("exhaustive_graphs", exhaustive);
    tally.set("samples", samples);
    tally.set("violations", violations);
    if let Some(m) = min_margin {
        tally.set("min_margin", rational(m));
    }
    Ok(tally.finish(
        kind,
        params(&[
            ("max_l", max_l),
            ("samples", samples),
            ("min_vertices", min_vertices),
            ("max_vertices", max_vertices),
        ]),
        "violations = 0",
    ))
}

/// The twin-class depth bounds on `pairs` random non-isomorphic pairs with
/// `2..=max_vertices` vertices each.
pub fn run_twin_depth_bound(pairs: usize, max_vertices: usize, rng: &mut ChaCha8Rng) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::TwinDepthBound;
    if max_vertices < 2 {
        return Err(invalid(kind, "max_vertices must be at least 2"));
    }
    let mut tally = Tally::new();
    let (mut violations, mut max_depth, mut tight) = (0, 0, 0);
    for _ in 0..pairs {
        let (a, b) = random_distinct_pair(rng, 2, max_vertices);
        let d = distinguishing_depth(&a, &b)?;
        let twins = twin_decomposition(&a);
        let bound: Rational = homogeneous_depth_bound(
            a.vertex_count(),
            twins.sigma,
            twins.largest_class_is_maximal_homogeneous,
        );
        let depth = Rational::from_integer(d as i64);
        max_depth = max_depth.max(d);
        if depth == bound.floor() {
            tight += 1;
        }
        if depth > bound {
            violations += 1;
            tally.fail(&[&a, &b], format!("depth {d} > bound {bound} (sigma {})", twins.sigma));
        }
    }
    tally.set("pairs", pairs);
    tally.set("violations", violations);
    tally.set("max_depth", max_depth);
    tally.set("tight", tight);
    Ok(tally.finish(
        kind,
        params(&[("pairs", pairs), ("max_vertices", max_vertices)]),
        "violations = 0",
    ))
}

/// `3(l-2)^(l-2)`: no connected graph with more vertices avoids both `P_l`
/// and `K_(1,l-1)`.
pub fn path_or_star_threshold(l: usize) -> u128 {
    spanning_tree_capacity(l - 2, l - 2)
}

/// Path-or-star containment on `samples` connected graphs just above the
/// threshold, plus a below-threshold star showing the threshold matters.
pub fn run_path_or_star(l: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::PathOrStar;
    if !(3..=6).contains(&l) {
        return Err(invalid(kind, format!("l = {l} must be between 3 and 6")));
    }
    let threshold = path_or_star_threshold(l) as usize;
    let mut tally = Tally::new();
    let mut failures = 0;
    for _ in 0..samples {
        let n = rng.gen_range(threshold + 1..=threshold + 4);
        let g = random_connected(rng, n);
        if !has_path_or_star(&g, l)? {
            failures += 1;
            tally.fail(&[&g], "neither P_l nor K_(1,l-1)");
        }
    }
    let small = one_uncapped(FamilySpec::Star { l: l - 1 });
    let small_fails = !has_path_or_star(&small, l)?;
    tally.check(small_fails, &[&small], || "below-threshold star satisfies the property".into());
    tally.set("threshold", threshold);
    tally.set("samples", samples);
    tally.set("failures", failures);
    tally.set("below_threshold_star_fails", small_fails);
    Ok(tally.finish(
        kind,
        params(&[("l", l), ("samples", samples)]),
        "failures = 0 and below_threshold_star_fails",
    ))
}

/// Canonical sentence evaluation against backtracking search on `pairs`
/// random (pattern, host) pairs.
pub fn run_cross_oracle(
    pairs: usize,
    pattern_max: usize,
    host_max: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::CrossOracle;
    if pattern_max < 1 || host_max < 1 {
        return Err(invalid(kind, "pattern_max and host_max must be positive"));
    }
    let mut tally = Tally::new();
    let (mut present, mut mismatches) = (0, 0);
    for _ in 0..pairs {
        let n = rng.gen_range(1..=pattern_max);
        let f = random_swept(rng, n);
        let n = rng.gen_range(1..=host_max);
        let g = random_swept(rng, n);
        let by_sentence = evaluate(&canonical_subgraph_sentence(&f), &g)?;
        let by_search = contains(&g, &f);
        if by_search {
            present += 1;
        }
        if by_sentence != by_search {
            mismatches += 1;
            tally.fail(&[&f, &g], format!("sentence {by_sentence}, search {by_search}"));
        }
    }
    tally.set("pairs", pairs);
    tally.set("present", present);
    tally.set("mismatches", mismatches);
    Ok(tally.finish(
        kind,
        params(&[("pairs", pairs), ("pattern_max", pattern_max), ("host_max", host_max)]),
        "mismatches = 0",
    ))
}

/// Sentences extracted at `(k, r) = (D, D)` on `pairs` random non-isomorphic pairs.
pub fn run_extraction_soundness(pairs: usize, max_vertices: usize, rng: &mut ChaCha8Rng) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::ExtractionSoundness;
    if max_vertices < 2 {
        return Err(invalid(kind, "max_vertices must be at least 2"));
    }
    let mut tally = Tally::new();
    let (mut failures, mut max_depth, mut max_size) = (0, 0, 0);
    for _ in 0..pairs {
        let (a, b) = random_distinct_pair(rng, 2, max_vertices);
        let d = distinguishing_depth(&a, &b)?;
        let f = extract_sentence(&a, &b, d, d)?;
        let on_a = evaluate(&f, &a)?;
        let on_b = evaluate(&f, &b)?;
        let (depth, width) = (f.quantifier_depth(), f.variable_width());
        max_depth = max_depth.max(d);
        max_size = max_size.max(f.size());
        if !(on_a && !on_b && depth <= d && width <= d) {
            failures += 1;
            tally.fail(
                &[&a, &b],
                format!("D = {d}: true on A {on_a}, true on B {on_b}, depth {depth}, width {width}: {f}"),
            );
        }
    }
    tally.set("pairs", pairs);
    tally.set("failures", failures);
    tally.set("max_depth", max_depth);
    tally.set("max_sentence_size", max_size);
    Ok(tally.finish(
        kind,
        params(&[("pairs", pairs), ("max_vertices", max_vertices)]),
        "failures = 0",
    ))
}

/// The width-`s` star sentence against `K_(1,s)` containment on `samples`
/// connected graphs with `min_vertices..=max_vertices` vertices.
pub fn run_star_sentence_dichotomy(
    s: usize,
    samples: usize,
    min_vertices: usize,
    max_vertices: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::StarSentenceDichotomy;
    if s < 3 {
        return Err(invalid(kind, "s must be at least 3"));
    }
    if min_vertices <= 2 * s || min_vertices > max_vertices {
        return Err(invalid(kind, "need 2s < min_vertices <= max_vertices"));
    }
    // Odd draws keep the maximum degree below s so both answers occur.
    let graphs: Vec<Graph> = (0..samples)
        .map(|i| {
            let n = rng.gen_range(min_vertices..=max_vertices);
            if i % 2 == 1 {
                random_degree_capped(rng, n, s - 1)
            } else {
                random_connected(rng, n)
            }
        })
        .collect();
    let mut tally = Tally::new();
    let mismatches = star_dichotomy(&mut tally, s, &graphs)?;
    let containing = graphs.iter().filter(|g| g.max_degree() >= s).count();
    tally.set("samples", samples);
    tally.set("containing", containing);
    tally.set("mismatches", mismatches);
    Ok(tally.finish(
        kind,
        params(&[
            ("s", s),
            ("samples", samples),
            ("min_vertices", min_vertices),
            ("max_vertices", max_vertices),
        ]),
        "mismatches = 0",
    ))
}

/// Exhaustive search over connected graphs on at most `max_vertices`
/// vertices for `S_(q,p)`-free graphs with max degree at least `q` that
/// contain `C_(p+1)` or `B_(p+2)`. Reports what it finds; always passes.
pub fn run_structure_without_size(q: usize, p: usize, max_vertices: usize) -> Result<Verdict, HarnessError> {
    let kind = ScenarioKind::StructureWithoutSize;
    if q < 3 || p < 2 {
        return Err(invalid(kind, format!("need q >= 3 and p >= 2, got q = {q}, p = {p}")));
    }
    if max_vertices > 7 {
        return Err(invalid(kind, "exhaustive search is limited to 7 vertices"));
    }
    let sparkler = one_uncapped(FamilySpec::Sparkler { q, p });
    let cycle = one_uncapped(FamilySpec::Cycle { n: p + 1 });
    let fan = one_uncapped(FamilySpec::BrokenFan { n: p + 2 });
    let mut tally = Tally::new();
    let mut found = 0;
    let mut smallest: Option<Graph> = None;
    for n in 1..=max_vertices {
        for g in all_connected(n) {
            if g.max_degree() >= q
                && (contains(&g, &cycle) || contains(&g, &fan))
                && !contains(&g, &sparkler)
            {
                found += 1;
                smallest.get_or_insert(g);
            }
        }
    }
    tally.set("graphs_found", found);
    if let Some(g) = &smallest {
        tally.set("smallest", to_graph6(g));
        tally.set("smallest_vertices", g.vertex_count());
    }
    Ok(tally.finish(
        kind,
        params(&[("q", q), ("p", p), ("max_vertices", max_vertices)]),
        "exploratory; always passes",
    ))
}

pub(crate) fn dispatch(scenario: &Scenario) -> Result<Verdict, HarnessError> {
    let kind = scenario.kind();
    let p = |name: &str| scenario.param(name);
    let mut rng = scenario_rng(scenario.seed, &scenario.id);
    let rng = &mut rng;
    let mut verdict = match kind {
        ScenarioKind::CliqueSeparation => run_clique_separation(p("max_l")?),
        ScenarioKind::TwinLemma => {
            let max = p("max_vertices")?;
            if max > 6 {
                return Err(scenario.invalid("max_vertices is limited to 6"));
            }
            let corpus: Vec<Graph> = (1..=max).flat_map(all_connected).collect();
            run_twin_lemma(&corpus)
        }
        ScenarioKind::SparklerPair => run_sparkler_pair(p("q")?, p("p")?, p("n")?, p("width")? != 0),
        ScenarioKind::StarTheorem => run_star_theorem(p("s")?, p("t")?, p("samples")?, rng),
        ScenarioKind::PathTheorem => run_path_theorem(p("l")?, p("n")?),
        ScenarioKind::StructureProperties => run_structure_properties(p("q")?, p("p")?, p("samples")?, rng),
        ScenarioKind::WidthThresholdCatalog => run_width_threshold_catalog(
            p("max_l")?,
            p("samples")?,
            p("min_vertices")?,
            p("max_vertices")?,
            rng,
        ),
        ScenarioKind::TwinDepthBound => run_twin_depth_bound(p("pairs")?, p("max_vertices")?, rng),
        ScenarioKind::PathOrStar => run_path_or_star(p("l")?, p("samples")?, rng),
        ScenarioKind::CrossOracle => run_cross_oracle(p("pairs")?, p("pattern_max")?, p("host_max")?, rng),
        ScenarioKind::ExtractionSoundness => run_extraction_soundness(p("pairs")?, p("max_vertices")?, rng),
        ScenarioKind::StarSentenceDichotomy => run_star_sentence_dichotomy(
            p("s")?,
            p("samples")?,
            p("min_vertices")?,
            p("max_vertices")?,
            rng,
        ),
        ScenarioKind::StructureWithoutSize => run_structure_without_size(p("q")?, p("p")?, p("max_vertices")?),
    }?;
    verdict.parameters = scenario.parameters.clone();
    verdict.claim = scenario.claim.clone();
    if kind.is_sampled() {
        verdict.seed = Some(scenario.seed);
    }
    Ok(verdict)
}
