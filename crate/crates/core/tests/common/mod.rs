//! Brute-force reference implementations, deliberately naive and written
//! without reference to the library's solvers.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use pebblework::graph::Graph;
use proptest::prelude::*;

/// Pebble `i` sits on `(vertex in G, vertex in H)` or is off the board.
pub type Labelled = Vec<Option<(usize, usize)>>;

pub fn is_partial_iso(g: &Graph, h: &Graph, pos: &[Option<(usize, usize)>]) -> bool {
    let placed: Vec<(usize, usize)> = pos.iter().flatten().copied().collect();
    for &(a, b) in &placed {
        for &(c, d) in &placed {
            if (a == c) != (b == d) {
                return false;
            }
            if a != c && g.has_edge(a, c) != h.has_edge(b, d) {
                return false;
            }
        }
    }
    true
}

/// Spoiler's options: pebble, side (false = G), vertex.
fn spoiler_moves(g: &Graph, h: &Graph, k: usize) -> Vec<(usize, bool, usize)> {
    let mut out = Vec::new();
    for i in 0..k {
        for v in 0..g.vertex_count() {
            out.push((i, false, v));
        }
        for v in 0..h.vertex_count() {
            out.push((i, true, v));
        }
    }
    out
}

fn play(pos: &Labelled, (i, in_h, v): (usize, bool, usize), w: usize) -> Labelled {
    let mut next = pos.clone();
    next[i] = Some(if in_h { (w, v) } else { (v, w) });
    next
}

/// Labelled-pebble game, `rounds` rounds left, memoized on the full state.
pub struct NaiveGame<'a> {
    g: &'a Graph,
    h: &'a Graph,
    k: usize,
    memo: HashMap<(Labelled, usize), bool>,
}

impl<'a> NaiveGame<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, k: usize) -> Self {
        NaiveGame {
            g,
            h,
            k,
            memo: HashMap::new(),
        }
    }

    pub fn spoiler_wins(&mut self, pos: &Labelled, rounds: usize) -> bool {
        if !is_partial_iso(self.g, self.h, pos) {
            return true;
        }
        if rounds == 0 {
            return false;
        }
        if let Some(&v) = self.memo.get(&(pos.clone(), rounds)) {
            return v;
        }
        let mut result = false;
        for mv in spoiler_moves(self.g, self.h, self.k) {
            let other = if mv.1 { self.g.vertex_count() } else { self.h.vertex_count() };
            if (0..other).all(|w| self.spoiler_wins(&play(pos, mv, w), rounds - 1)) {
                result = true;
                break;
            }
        }
        self.memo.insert((pos.clone(), rounds), result);
        result
    }
}

pub fn naive_bounded(g: &Graph, h: &Graph, k: usize, rounds: usize) -> bool {
    NaiveGame::new(g, h, k).spoiler_wins(&vec![None; k], rounds)
}

/// Duplicator's winning region as a greatest fixpoint over all labelled positions.
pub fn naive_unbounded(g: &Graph, h: &Graph, k: usize) -> bool {
    let cells: Vec<Option<(usize, usize)>> = std::iter::once(None)
        .chain((0..g.vertex_count()).flat_map(|a| (0..h.vertex_count()).map(move |b| Some((a, b)))))
        .collect();
    let mut all: Vec<Labelled> = vec![Vec::new()];
    for _ in 0..k {
        all = all
            .into_iter()
            .flat_map(|p| {
                cells.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let mut safe: HashSet<Labelled> = all.into_iter().filter(|p| is_partial_iso(g, h, p)).collect();
    loop {
        let doomed: Vec<Labelled> = safe
            .iter()
            .filter(|p| {
                spoiler_moves(g, h, k).into_iter().any(|mv| {
                    let other = if mv.1 { g.vertex_count() } else { h.vertex_count() };
                    (0..other).all(|w| !safe.contains(&play(p, mv, w)))
                })
            })
            .cloned()
            .collect();
        if doomed.is_empty() {
            break;
        }
        for p in doomed {
            safe.remove(&p);
        }
    }
    !safe.contains(&vec![None; k])
}

pub fn naive_depth(g: &Graph, h: &Graph) -> Option<usize> {
    let limit = g.vertex_count().max(h.vertex_count());
    (1..=limit).find(|&k| naive_bounded(g, h, k, k))
}

pub fn naive_width(g: &Graph, h: &Graph) -> Option<usize> {
    let limit = g.vertex_count().max(h.vertex_count());
    (1..=limit).find(|&k| naive_unbounded(g, h, k))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| a.edges().all(|(u, v)| b.has_edge(p[u], p[v])))
}

/// Injective edge-preserving maps from `pattern` into `host`, by exhaustion.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.vertex_count() {
            return true;
        }
        for v in 0..host.vertex_count() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(v, map[j])) {
                map.push(v);
                if extend(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(host, pattern, &mut Vec::new())
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// One representative per isomorphism class on exactly `n` vertices.
pub fn unlabelled(n: usize) -> Vec<Graph> {
    let slots = n * n.saturating_sub(1) / 2;
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0..1u64 << slots {
        let g = graph_from_mask(n, mask);
        if !reps.iter().any(|r| brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), keep) in pairs.zip(bits) {
                if keep {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

pub fn arb_connected(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min, max).prop_filter("connected", Graph::is_connected)
}

pub fn arb_permuted(min: usize, max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(min, max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}
